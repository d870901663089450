#pragma once

#include "gitwin/homs.hpp"
#include "gitwin/window.hpp"

#include <optional>
#include <vector>

namespace gitwin {

struct CollectionEntry {
    IrrepLabel label;
    Rat lambda0_weight;
    long long order_index = 0;
};

/// Window collection: enumerate_window_irreps wrapped with order data.
/// Order is non-increasing in the lambda0-weight.
std::vector<CollectionEntry> build_collection(const RepSpec& rep, const WindowRegion& r);

enum class VanishingFailure { StrictPairing, TieBreak };

struct VanishingCheckResult {
    Weight chi;
    bool passes = false;
    std::optional<Cochar> failing_lambda;
    VanishingFailure failing_case = VanishingFailure::StrictPairing;
};

/// Local-cohomology vanishing criterion for the weight chi against the
/// unstable locus of the region's polarization: for each lambda' in
/// {0, +lambda', -lambda'}, either <lambda', chi - zeta_{lambda'}> < 0, or
/// it is zero and <lambda0, chi - zeta_{lambda'}> < 0.
VanishingCheckResult vanishing_check(const WindowRegion& r, const Weight& chi);

struct PairVerdict {
    long long from = 0; // order indices into the collection
    long long to = 0;
    bool vanishing_ok = true;
    std::optional<VanishingCheckResult> first_failure;
};

struct StrongExceptionalReport {
    bool ok = false;
    bool partial = false; // degree budget exhausted before all hom checks ran
    std::vector<PairVerdict> failures;
    long long pairs_checked = 0;
    long long diag_failures = 0;     // End degree-0 dimension != 1
    long long backward_failures = 0; // nonzero Hom into a strictly larger lambda0-weight
};

/// Checks, for every ordered pair (U_i, U_j):
///   (a) every weight of Hom(U_i, U_j) = U_j (x) U_i* passes vanishing_check
///       (GL2 uses the lowest weight of each Clebsch-Gordan constituent with
///       the restricted cocharacter set; the torus scans its single weight);
///   (b) Hom-dimension obligations via the graded oracle: diagonal degree-0
///       dimension one, and zero in all computed degrees whenever the
///       lambda0-weight strictly increases or the labels tie off-diagonally.
StrongExceptionalReport verify_strong_exceptional(const RepSpec& rep,
                                                  const std::vector<CollectionEntry>& collection,
                                                  const WindowRegion& r,
                                                  long long degree_budget = 16,
                                                  long long degree_cap = 32);

} // namespace gitwin
