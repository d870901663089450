#include "gitwin/homs.hpp"

namespace gitwin {

WeightMultiset convolve(const WeightMultiset& x, const WeightMultiset& y) {
    WeightMultiset out;
    for (const auto& [wx, mx] : x)
        for (const auto& [wy, my] : y) out[wx + wy] += mx * my;
    return out;
}

std::vector<WeightMultiset> sym_dual_powers(const RepSpec& rep, long long max_degree) {
    // Group the dual-variable weights -beta by value; Sym over m copies of a
    // single weight w contributes C(k+m-1, m-1) at weight k*w in degree k.
    WeightMultiset vars;
    for (const auto& b : rep.weights) ++vars[-b];

    std::vector<WeightMultiset> acc(max_degree + 1);
    acc[0][Weight{0, 0}] = 1;
    for (const auto& [w, m] : vars) {
        // Degree-k multiplicities of Sym(k^m (x) w): binomials along k*w.
        std::vector<long long> binom(max_degree + 1);
        binom[0] = 1;
        for (long long k = 1; k <= max_degree; ++k)
            binom[k] = binom[k - 1] * (k + m - 1) / k;
        std::vector<WeightMultiset> next(max_degree + 1);
        for (long long d = 0; d <= max_degree; ++d)
            for (long long k = 0; k <= d; ++k) {
                if (binom[k] == 0) continue;
                for (const auto& [wprev, mult] : acc[d - k]) next[d][wprev + k * w] += mult * binom[k];
            }
        acc = std::move(next);
    }
    return acc;
}

long long invariant_multiplicity(const GroupSpec& g, const WeightMultiset& m) {
    long long zero = mult_of(m, Weight{0, 0});
    if (g.kind == GroupKind::Torus2) return zero;
    return zero - mult_of(m, Weight{1, -1});
}

std::vector<long long> graded_hom_dims(const RepSpec& rep, const IrrepLabel& U,
                                       const IrrepLabel& W, long long max_degree,
                                       long long degree_cap) {
    if (max_degree > degree_cap)
        throw budget_error("graded Hom degree " + std::to_string(max_degree) +
                           " exceeds budget cap " + std::to_string(degree_cap));
    WeightMultiset hom = convolve(to_multiset(irrep_weights(rep.group, W)),
                                  to_multiset(irrep_weights(rep.group, dual_irrep(rep.group, U))));
    auto sym = sym_dual_powers(rep, max_degree);
    std::vector<long long> dims(max_degree + 1);
    for (long long d = 0; d <= max_degree; ++d)
        dims[d] = invariant_multiplicity(rep.group, convolve(sym[d], hom));
    return dims;
}

std::vector<IrrepLabel> gl2_tensor_irreps(const IrrepLabel& x, const IrrepLabel& y) {
    const Weight u = x.highest_weight, v = y.highest_weight;
    long long kmax = std::min(u.a - u.b, v.a - v.b);
    std::vector<IrrepLabel> out;
    for (long long k = 0; k <= kmax; ++k) out.push_back({Weight{u.a + v.a - k, u.b + v.b + k}});
    return out;
}

} // namespace gitwin
