#include "gitwin/smith.hpp"

#include <cstdlib>

namespace gitwin {

IMat mat_mul(const IMat& x, const IMat& y) {
    size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
    IMat out(n, std::vector<long long>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t t = 0; t < k; ++t) out[i][j] += x[i][t] * y[t][j];
    return out;
}

namespace {

void swap_rows(IMat& a, IMat& u, size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}
void swap_cols(IMat& a, IMat& v, size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
}
void negate_row(IMat& a, IMat& u, size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
}
// row_i -= c * row_k
void add_row(IMat& a, IMat& u, size_t i, size_t k, long long c) {
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= c * a[k][j];
    for (size_t j = 0; j < u[i].size(); ++j) u[i][j] -= c * u[k][j];
}
// col_j -= c * col_k
void add_col(IMat& a, IMat& v, size_t j, size_t k, long long c) {
    for (auto& row : a) row[j] -= c * row[k];
    for (auto& row : v) row[j] -= c * row[k];
}

} // namespace

SmithForm smith_normal_form(const IMat& a_in) {
    SmithForm f;
    f.d = a_in;
    size_t n = f.d.size();
    size_t m = n ? f.d[0].size() : 0;
    f.u = identity_mat(n);
    f.v = identity_mat(m);
    IMat& a = f.d;

    size_t rank = std::min(n, m);
    for (size_t k = 0; k < rank; ++k) {
        for (;;) {
            // Deterministic pivot: smallest |entry| in the trailing block.
            size_t pi = n, pj = m;
            long long best = 0;
            for (size_t i = k; i < n; ++i)
                for (size_t j = k; j < m; ++j) {
                    long long v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                rank = k;
                break;
            }
            if (pi != k) swap_rows(a, f.u, k, pi);
            if (pj != k) swap_cols(a, f.v, k, pj);
            if (a[k][k] < 0) negate_row(a, f.u, k);

            bool clean = true;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    add_row(a, f.u, i, k, a[i][k] / a[k][k]);
                    if (a[i][k] != 0) clean = false;
                }
            for (size_t j = k + 1; j < m; ++j)
                if (a[k][j] != 0) {
                    add_col(a, f.v, j, k, a[k][j] / a[k][k]);
                    if (a[k][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (size_t i = k + 1; i < n && divides; ++i)
                for (size_t j = k + 1; j < m && divides; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        add_row(a, f.u, k, i, -1); // row_k += row_i
                        divides = false;
                    }
            if (divides) break;
        }
        if (rank == k) break;
    }
    return f;
}

} // namespace gitwin
