#pragma once

#include "gitwin/group.hpp"

#include <map>
#include <vector>

namespace gitwin {

/// T-weight multiplicity function, iteration order fixed by the Weight order.
using WeightMultiset = std::map<Weight, long long>;

inline WeightMultiset to_multiset(const std::vector<Weight>& ws) {
    WeightMultiset m;
    for (const auto& w : ws) ++m[w];
    return m;
}

WeightMultiset convolve(const WeightMultiset& x, const WeightMultiset& y);

/// Weight multiplicities of Sym^d(X*) for d = 0..max_degree.
/// The variables of Sym(X*) carry the weights -beta_i.
std::vector<WeightMultiset> sym_dual_powers(const RepSpec& rep, long long max_degree);

inline long long mult_of(const WeightMultiset& m, const Weight& w) {
    auto it = m.find(w);
    return it == m.end() ? 0 : it->second;
}

/// Multiplicity of the trivial representation inside a virtual rep given by
/// its T-weight function. Torus: m(0,0). GL2: m(0,0) - m(1,-1), the rank-one
/// alternation over the positive root.
long long invariant_multiplicity(const GroupSpec& g, const WeightMultiset& m);

/// Degree-d dimensions of (Sym^d(X*) (x) W (x) U*)^G for d = 0..max_degree.
/// Throws budget_error when max_degree exceeds the cap.
std::vector<long long> graded_hom_dims(const RepSpec& rep, const IrrepLabel& U,
                                       const IrrepLabel& W, long long max_degree,
                                       long long degree_cap = 32);

/// GL2 Clebsch-Gordan: V(a1,b1) (x) V(a2,b2) = (+)_k V(a1+a2-k, b1+b2+k),
/// 0 <= k <= min(a1-b1, a2-b2).
std::vector<IrrepLabel> gl2_tensor_irreps(const IrrepLabel& x, const IrrepLabel& y);

/// Dual irreducible: GL2 V(a,b)* = V(-b,-a); torus character negated.
inline IrrepLabel dual_irrep(const GroupSpec& g, const IrrepLabel& u) {
    const Weight h = u.highest_weight;
    if (g.kind == GroupKind::Torus2) return IrrepLabel{Weight{-h.a, -h.b}};
    return IrrepLabel{Weight{-h.b, -h.a}};
}

} // namespace gitwin
