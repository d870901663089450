#include "gitwin/collection.hpp"

namespace gitwin {

std::vector<CollectionEntry> build_collection(const RepSpec& rep, const WindowRegion& r) {
    std::vector<CollectionEntry> out;
    long long idx = 0;
    for (const auto& label : enumerate_window_irreps(rep, r))
        out.push_back({label, wt_lambda0(r.lambda0, label), idx++});
    return out;
}

namespace {

struct Generator {
    Cochar lambda;
    Weight zeta;
};

std::vector<Generator> vanishing_generators(const WindowRegion& r) {
    return {{Cochar{Rat(0), Rat(0)}, -r.det_x},
            {r.dplus.lambda, r.dplus.zeta},
            {r.dminus.lambda, r.dminus.zeta}};
}

VanishingCheckResult check_against(const WindowRegion& r, const Weight& chi,
                                   const std::vector<Generator>& gens) {
    VanishingCheckResult res;
    res.chi = chi;
    for (const auto& g : gens) {
        QWeight shifted = QWeight(chi) - QWeight(g.zeta);
        int s = pairing(g.lambda, shifted).sign();
        if (s < 0) continue;
        if (s == 0 && pairing(r.lambda0, shifted).sign() < 0) continue;
        res.passes = false;
        res.failing_lambda = g.lambda;
        res.failing_case = s > 0 ? VanishingFailure::StrictPairing : VanishingFailure::TieBreak;
        return res;
    }
    res.passes = true;
    return res;
}

} // namespace

VanishingCheckResult vanishing_check(const WindowRegion& r, const Weight& chi) {
    return check_against(r, chi, vanishing_generators(r));
}

StrongExceptionalReport verify_strong_exceptional(const RepSpec& rep,
                                                  const std::vector<CollectionEntry>& collection,
                                                  const WindowRegion& r, long long degree_budget,
                                                  long long degree_cap) {
    StrongExceptionalReport report;
    report.ok = true;
    const bool gl2 = rep.group.kind == GroupKind::GL2;

    // Restricted generator set for the lowest-weight shortcut: lambda' = 0 and
    // the generator of ell^perp that is non-positive on Lie(B); for the torus
    // both orientations qualify.
    std::vector<Generator> restricted = {{Cochar{Rat(0), Rat(0)}, -r.det_x}};
    if (gl2) {
        restricted.push_back({r.dminus.lambda, r.dminus.zeta});
    } else {
        restricted.push_back({r.dplus.lambda, r.dplus.zeta});
        restricted.push_back({r.dminus.lambda, r.dminus.zeta});
    }

    for (const auto& from : collection) {
        for (const auto& to : collection) {
            ++report.pairs_checked;
            PairVerdict pv;
            pv.from = from.order_index;
            pv.to = to.order_index;
            if (gl2) {
                auto constituents =
                    gl2_tensor_irreps(to.label, dual_irrep(rep.group, from.label));
                for (const auto& c : constituents) {
                    Weight lowest = weyl_reflect(c.highest_weight);
                    auto vr = check_against(r, lowest, restricted);
                    if (!vr.passes) {
                        pv.vanishing_ok = false;
                        pv.first_failure = vr;
                        break;
                    }
                }
            } else {
                Weight w = to.label.highest_weight - from.label.highest_weight;
                auto vr = check_against(r, w, restricted);
                if (!vr.passes) {
                    pv.vanishing_ok = false;
                    pv.first_failure = vr;
                }
            }
            if (!pv.vanishing_ok) {
                report.ok = false;
                report.failures.push_back(pv);
            }
        }
    }

    // Hom-dimension obligations.
    try {
        for (const auto& from : collection) {
            for (const auto& to : collection) {
                bool diag = from.label == to.label;
                bool wt_increases = to.lambda0_weight > from.lambda0_weight;
                bool tie_offdiag = !diag && to.lambda0_weight == from.lambda0_weight;
                if (!diag && !wt_increases && !tie_offdiag) continue;
                auto dims =
                    graded_hom_dims(rep, from.label, to.label, degree_budget, degree_cap);
                if (diag) {
                    if (dims[0] != 1) {
                        ++report.diag_failures;
                        report.ok = false;
                    }
                    for (size_t d = 1; d < dims.size(); ++d)
                        if (dims[d] != 0) {
                            ++report.diag_failures;
                            report.ok = false;
                        }
                } else {
                    for (long long v : dims)
                        if (v != 0) {
                            ++report.backward_failures;
                            report.ok = false;
                            break;
                        }
                }
            }
        }
    } catch (const budget_error&) {
        report.partial = true;
    }
    return report;
}

} // namespace gitwin
