#pragma once

#include "gitwin/smith.hpp"
#include "gitwin/window.hpp"

#include <vector>

namespace gitwin {

/// Gale data of a spanning torus weight matrix: A = Z^n / im(phi*) presented
/// by Smith reduction, with the ray generators v_i = classes of the standard
/// basis vectors.
struct GaleDual {
    std::vector<Weight> phi;            // columns beta_i
    long long a_free_rank = 0;          // n - 2
    std::vector<long long> torsion;     // invariant factors > 1
    std::vector<std::vector<long long>> ray_generators; // per i: torsion coords then free coords
    std::vector<std::vector<long long>> kernel_basis;   // basis of ker(phi) in Z^n

    /// True iff the class with the given A-coordinates is zero.
    bool is_zero_class(const std::vector<long long>& coords) const;
};

/// Requires the weights to generate M as a lattice (invariant factors 1,1).
GaleDual gale_dual(const RepSpec& rep);

struct BorisovHuaData {
    std::vector<Rat> a;      // a_i = -<lambda', beta_i>
    std::vector<Rat> r;      // r_i = -<lambda0, beta_i> / eta0
    std::vector<long long> i_plus;
    Rat eta_prime;           // for the comparison sum_{I+} a_i = eta_{lambda'}
    Rat eta0;
};

/// The window data of the toric comparison; refuses when some a_i = 0
/// (a weight proportional to omega* for this lambda').
BorisovHuaData borisov_hua_data(const RepSpec& rep, const Cochar& lambda0,
                                const Cochar& lambda_prime);

/// Membership in the image of {|f| <= 1/2, |psi| <= (1/2) sum_{I+} a_i} under
/// phi, evaluated through an explicit rational preimage of chi.
bool borisov_hua_member(const RepSpec& rep, const BorisovHuaData& data, const QWeight& theta,
                        const QWeight& chi);

} // namespace gitwin
