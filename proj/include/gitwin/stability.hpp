#pragma once

#include "gitwin/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitwin {

/// GIT parameter: either an exact rational character or the symbolic
/// perturbation base + eps*direction with lexicographic pairing semantics.
/// eps is never materialized; a pairing is the sign of the first nonzero
/// entry of (<lambda, base>, <lambda, direction>).
struct Polarization {
    QWeight base;
    std::optional<QWeight> direction;

    static Polarization exact(QWeight ell) { return {ell, std::nullopt}; }
    static Polarization perturbed(QWeight base, QWeight dir) { return {base, dir}; }

    bool is_perturbed() const { return direction.has_value(); }

    int pairing_sign(const Cochar& lam) const {
        int s = pairing(lam, base).sign();
        if (s != 0 || !direction) return s;
        return pairing(lam, *direction).sign();
    }

    /// Proportionality against the perturbed ray: beta must be dependent on
    /// the base and, when present, on the direction too.
    bool weight_proportional(const Weight& beta) const {
        if (!proportional(QWeight(beta), base)) return false;
        return !direction || proportional(QWeight(beta), *direction);
    }

    std::string str() const {
        if (!direction) return base.str();
        return base.str() + "+eps*" + direction->str();
    }
};

struct StabilityVerdict {
    bool finite_stabilizers = false;
    std::optional<Weight> offending_weight; // proportional weight or span witness
    bool spans = true;
};

/// Finite-stabilizer criterion at ell: the weights span M_R and none is
/// proportional to ell. Requires <lambda0, ell> < 0 (lexicographically for a
/// perturbed ell).
StabilityVerdict finite_stabilizer_test(const RepSpec& rep, const Polarization& ell,
                                        const Cochar& lambda0);

struct Gl2SummandVerdict {
    Gl2Summand summand;
    bool central_ok = false; // m + n/2 > 0
    bool odd_ok = false;     // n odd
};

struct Gl2FanoReport {
    bool ok = false;
    std::vector<Gl2SummandVerdict> per_summand;
};

/// Both conditions of the GL2 criterion: m_i + n_i/2 > 0 and n_i odd, for
/// every summand.
Gl2FanoReport gl2_fano_criterion(const RepSpec& rep);

/// Primitive cocharacters lambda with <lambda, ell> < 0 realizing every
/// distinct attracting subspace X^{lambda >= 0}: the rays of the weight
/// arrangement in N plus one interior representative per open sector,
/// filtered and deduplicated by the attracting index set.
std::vector<Cochar> destabilizing_cone_reps(const RepSpec& rep, const Polarization& ell);

} // namespace gitwin
