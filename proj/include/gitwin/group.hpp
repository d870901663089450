#pragma once

#include "gitwin/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gitwin {

struct hypothesis_error : std::runtime_error {
    /// Machine-readable tag of the violated hypothesis, e.g. "H:main_setup",
    /// "weights span", "proportional weight".
    std::string tag;
    hypothesis_error(std::string t, const std::string& what)
        : std::runtime_error(what), tag(std::move(t)) {}
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupKind { Torus2, GL2 };

/// Rank-2 group descriptor: the 2-torus or GL2, with its roots and rho.
struct GroupSpec {
    GroupKind kind = GroupKind::Torus2;

    static GroupSpec torus2() { return GroupSpec{GroupKind::Torus2}; }
    static GroupSpec gl2() { return GroupSpec{GroupKind::GL2}; }

    std::vector<Weight> positive_roots() const {
        if (kind == GroupKind::GL2) return {Weight{1, -1}};
        return {};
    }
    std::vector<Weight> roots() const {
        if (kind == GroupKind::GL2) return {Weight{1, -1}, Weight{-1, 1}};
        return {};
    }
    QWeight rho() const {
        if (kind == GroupKind::GL2) return {Rat(1, 2), Rat(-1, 2)};
        return {Rat(0), Rat(0)};
    }
    bool weyl_nontrivial() const { return kind == GroupKind::GL2; }

    /// Anti-dominant means pairing >= 0 with every negative root.
    bool is_antidominant(const Cochar& lam) const {
        if (kind == GroupKind::Torus2) return true;
        return (lam.b - lam.a) >= Rat(0);
    }

    std::string name() const { return kind == GroupKind::GL2 ? "gl2" : "torus2"; }
};

/// Highest weight of an irreducible representation. For GL2 the weight must
/// be dominant (a >= b); for the torus any character labels an irreducible.
struct IrrepLabel {
    Weight highest_weight;

    friend bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
        return x.highest_weight == y.highest_weight;
    }
    auto operator<=>(const IrrepLabel&) const = default;
    std::string str() const { return highest_weight.str(); }
};

inline bool dominant_for(const GroupSpec& g, const Weight& w) {
    return g.kind == GroupKind::Torus2 || w.a >= w.b;
}

struct Gl2Summand {
    long long n = 0; // Sym^n, n >= 0
    long long m = 0; // det^m twist
};

/// A linear action: the weight multiset beta_1..beta_n, plus the summand
/// decomposition when the group is GL2.
struct RepSpec {
    GroupSpec group;
    std::vector<Weight> weights;
    std::vector<Gl2Summand> gl2_summands; // nonempty iff kind == GL2 and given

    static RepSpec torus(std::vector<Weight> ws);
    static RepSpec gl2(std::vector<Gl2Summand> summands);
    /// Grassmannian-style rep (k^2)^N, i.e. N copies of the standard summand.
    static RepSpec gl2_standard_power(long long copies) {
        return gl2(std::vector<Gl2Summand>(copies, Gl2Summand{1, 0}));
    }

    long long dim() const { return (long long)weights.size(); }
    bool weights_span() const;

    std::string str() const;
};

/// Weights of Sym^n(k^2) (x) det^m: {(n-k+m, k+m) : 0 <= k <= n}.
std::vector<Weight> gl2_summand_weights(const Gl2Summand& s);

/// det(X) (x) det(g)^{-1} as a weight; for the torus and GL2 the root sum is
/// zero, so this is just the sum of the weights of X.
Weight anticanonical(const RepSpec& rep);

/// Canonical central cocharacter pairing strictly negatively with every
/// weight, or nullopt.
///
/// GL2 admits only the (-1,-1) orientation. For the torus the search order is
/// (-1,-1), then the other primitive vectors with entries in {-1,0,1}, then an
/// interior point of the dual cone of the weights scaled to a primitive
/// integer vector.
std::optional<Cochar> check_main_setup(const RepSpec& rep);

/// Weight multiset of the irreducible V(label), each with multiplicity one.
std::vector<Weight> irrep_weights(const GroupSpec& g, const IrrepLabel& label);

/// Constant pairing of a central lambda0 with the irreducible U.
inline Rat wt_lambda0(const Cochar& lambda0, const IrrepLabel& u) {
    return pairing(lambda0, u.highest_weight);
}

} // namespace gitwin
