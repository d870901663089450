#pragma once

#include "gitwin/window.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gitwin {

struct proof_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// rho-shifted dominant representative w * mu = w(mu + rho) - rho.
/// Absent when mu + rho has a nontrivial stabilizer (GL2: mu_b = mu_a + 1).
std::optional<Weight> mu_plus(const GroupSpec& g, const Weight& mu);

enum class ComplexKind { C, Dvee };
/// Strict uses the open sign set (<0 for C, >0 for Dvee); Closed admits the
/// zero-pairing weights (the eps-limit rule of the nef descent).
enum class SignMode { Strict, Closed };

struct ComplexPiece {
    Weight mu;
    std::optional<Weight> mu_plus;
    std::vector<long long> subset; // representative weight indices
};

struct ComplexPieces {
    ComplexKind kind = ComplexKind::C;
    Cochar lambda;
    Weight chi;
    std::vector<ComplexPiece> pieces;
};

/// Graded pieces V(mu^+) with mu = chi -/+ (subset sums of the eligible
/// weights), subsets nonempty with distinct indices, deduplicated by the sum.
/// Throws budget_error when the eligible multiset has more than 20 distinct
/// weight values.
ComplexPieces complex_pieces(const RepSpec& rep, ComplexKind kind, const Cochar& lambda,
                             const Weight& chi, SignMode mode = SignMode::Strict);

enum class Rule {
    Leaf,
    Step1Plus,
    Step1Minus,
    Step2a,
    Step2b,
    Step3a,
    Step3b,
    NefCase1,
    NefCase2,
    NefInterior1,
    NefInterior2,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& s);

struct CertNode {
    bool in_window = false;
    Rule rule = Rule::Leaf;
    Rat alpha;                  // 2|<lambda0, chi - theta>| / eta0
    Rat aux;                    // r (Fano steps) or R (nef descent)
    std::vector<Weight> children;

    friend bool operator==(const CertNode& x, const CertNode& y) {
        return x.in_window == y.in_window && x.rule == y.rule && x.alpha == y.alpha &&
               x.aux == y.aux && x.children == y.children;
    }
};

enum class EngineKind { Fano, NefFano };

struct ReductionCertificate {
    EngineKind engine = EngineKind::Fano;
    QWeight theta;
    std::vector<Weight> seeds;
    std::map<Weight, CertNode> nodes;

    long long leaf_count() const;
    std::string serialize() const;
    static ReductionCertificate parse(const std::string& text);

    friend bool operator==(const ReductionCertificate& x, const ReductionCertificate& y) {
        return x.engine == y.engine && x.theta == y.theta && x.seeds == y.seeds &&
               x.nodes == y.nodes;
    }
};

/// Fano weight reduction: worklist over dominant weights, dispatching the
/// strip / cylinder / barrel steps and asserting every claimed measure
/// decrease per edge. Throws proof_mismatch_error if any edge violates its
/// claim.
ReductionCertificate reduce_fano(const RepSpec& rep, const WindowRegion& region,
                                 const std::vector<Weight>& seeds);

/// Nef torus reduction at omega* + eps*ell_dir: Step 1 as in the Fano engine,
/// then the R-descent on the enlarged cylinders, with the eps-limit eligible
/// sets on the Psi facet pieces.
ReductionCertificate reduce_nef_fano(const RepSpec& rep, const WindowRegion& region,
                                     const QWeight& ell_dir, const std::vector<Weight>& seeds);

/// Default seed set: dominant lattice points with |<lambda0, chi-theta>| <=
/// K*eta0/2 and |<lambda', chi-theta>| <= K*eta'/2.
std::vector<Weight> default_seeds(const RepSpec& rep, const WindowRegion& region, const Rat& K);

} // namespace gitwin
