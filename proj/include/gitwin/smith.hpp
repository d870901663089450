#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gitwin {

using IMat = std::vector<std::vector<long long>>;

inline IMat identity_mat(size_t n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct SmithForm {
    IMat d; // diagonal, d_k >= 0, d_k | d_{k+1}
    IMat u; // left unimodular
    IMat v; // right unimodular, u*a*v = d
};

/// Smith normal form with deterministic pivoting: smallest nonzero |entry|,
/// ties broken by (row, col) position.
SmithForm smith_normal_form(const IMat& a);

IMat mat_mul(const IMat& x, const IMat& y);

} // namespace gitwin
