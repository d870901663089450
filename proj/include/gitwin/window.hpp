#pragma once

#include "gitwin/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitwin {

/// Destabilizing weight zeta_lambda = -det(X^{lambda<=0}) + det(g^{lambda<0})
/// and its conormal pairing eta_lambda = <lambda, zeta_lambda>.
struct DestabData {
    Cochar lambda;
    Weight zeta;
    Rat eta;
};

DestabData destab_data(const RepSpec& rep, const Cochar& lambda);

enum class RegionKind { Strip, Cylinder, Barrel, EnlargedCylinder, PerturbedCylinder };

/// A theta-shifted window for the pair (lambda0, ell). Carries the primitive
/// generator lambda' of ell^perp (anti-dominant when the Weyl group is
/// nontrivial) and cached destabilization data for lambda0 and both
/// generators of ell^perp.
struct WindowRegion {
    RegionKind kind = RegionKind::Barrel;
    QWeight theta;
    QWeight ell;
    Cochar lambda0;
    Cochar lambda_prime;
    DestabData d0;     // for lambda0
    DestabData dplus;  // for +lambda'
    DestabData dminus; // for -lambda'
    Weight det_x;      // det X, i.e. zeta_0 = -det X
    Rat enlarge_R = Rat(1);  // EnlargedCylinder only
    Rat perturb_t = Rat(0);  // PerturbedCylinder only

    Rat eta0() const { return d0.eta; }
};

/// Builds a region; validates <lambda', ell> = 0, lambda' != 0 and
/// <lambda0, ell> < 0. The parameter is R for an enlarged cylinder and t for
/// a perturbed one (ignored otherwise).
WindowRegion make_region(const RepSpec& rep, const QWeight& theta, const QWeight& ell,
                         const Cochar& lambda0, RegionKind kind = RegionKind::Barrel,
                         const Rat& param = Rat(0));

/// Membership dispatched on the region kind.
bool in_region(const WindowRegion& r, const QWeight& chi);

bool in_strip(const WindowRegion& r, const QWeight& chi);
bool in_cylinder(const WindowRegion& r, const QWeight& chi);
bool in_barrel(const WindowRegion& r, const QWeight& chi);
bool in_enlarged_cylinder(const WindowRegion& r, const Rat& R, const QWeight& chi);
/// Narrowed cylinder at parameter t >= 0 (t = 0 gives the cylinder). Tested
/// with the primitive generators; the parameter is a monotone
/// reparametrization of the unit-norm one.
bool in_perturbed_cylinder(const WindowRegion& r, const Rat& t, const QWeight& chi);

struct GenericityReport {
    bool is_generic = false;
    std::optional<Weight> witness;        // lattice point on a violated hyperplane
    std::string witness_hyperplane;       // "zeta(+lambda')", "zeta(-lambda')", "zeta(0)"
};

/// Exact lambda0-genericity of theta: for each zeta in {zeta_{+lambda'},
/// zeta_{-lambda'}, -det X}, the hyperplane <lambda0, chi - theta - zeta/2> = 0
/// must miss the lattice. Tested through the image subgroup <lambda0, M>,
/// with an explicit witness when violated.
GenericityReport check_generic(const WindowRegion& r);

/// First generic theta = s*anticanonical along s = -1/(2k), k = 2..64.
/// Throws hypothesis_error("theta search") when the family is exhausted.
QWeight find_generic_theta(const RepSpec& rep, const QWeight& ell, const Cochar& lambda0);

/// Theta for the nef path: first theta_k = -anticanonical/(2k) + ell_dir/(2k+1)
/// such that theta + closed cylinder has no lattice point on its boundary.
QWeight find_nef_theta(const RepSpec& rep, const QWeight& ell_dir, const Cochar& lambda0);

/// No lattice point on the boundary of theta + closed cylinder.
bool cylinder_boundary_free(const WindowRegion& r);

struct LatticeClass {
    Weight chi;
    bool strip = false;
    bool cylinder = false;
    bool barrel = false;
    bool dominant = false;
};

/// Integer bounding box [alo,ahi] x [blo,bhi] of the (possibly enlarged)
/// cylinder; margin scales the region before boxing.
void scan_box(const WindowRegion& r, const Rat& margin, long long& alo, long long& ahi,
              long long& blo, long long& bhi);

/// Classification rows over the scan box, sorted by (a, b).
std::vector<LatticeClass> classify_lattice(const RepSpec& rep, const WindowRegion& r,
                                           const Rat& margin = Rat(1));

/// Irreducible labels whose weights lie in theta + barrel: all lattice points
/// for the torus, dominant ones for GL2. Ordered by descending
/// <lambda0, highest weight>, ties lexicographic.
std::vector<IrrepLabel> enumerate_window_irreps(const RepSpec& rep, const WindowRegion& r);

/// Lattice points of theta + closed cylinder for the nef path; requires the
/// boundary to be lattice-free (then the set equals the barrel lattice set).
std::vector<IrrepLabel> enumerate_nef_window(const RepSpec& rep, const WindowRegion& r);

std::string classification_csv(const std::vector<LatticeClass>& rows);

} // namespace gitwin
