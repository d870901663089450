#pragma once

#include "gitwin/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gitwin {

/// Lattice point of the rank-2 character lattice M.
struct Weight {
    long long a = 0;
    long long b = 0;

    friend Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
    friend Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
    Weight operator-() const { return {-a, -b}; }
    friend Weight operator*(long long c, Weight x) { return {c * x.a, c * x.b}; }
    auto operator<=>(const Weight&) const = default;

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Rational point of M (shift parameters, half-destabilizers, ...).
struct QWeight {
    Rat a;
    Rat b;

    QWeight() = default;
    QWeight(Rat x, Rat y) : a(x), b(y) {}
    QWeight(const Weight& w) : a(w.a), b(w.b) {}

    friend QWeight operator+(const QWeight& x, const QWeight& y) { return {x.a + y.a, x.b + y.b}; }
    friend QWeight operator-(const QWeight& x, const QWeight& y) { return {x.a - y.a, x.b - y.b}; }
    QWeight operator-() const { return {-a, -b}; }
    friend QWeight operator*(const Rat& c, const QWeight& x) { return {c * x.a, c * x.b}; }
    friend bool operator==(const QWeight& x, const QWeight& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QWeight& x, const QWeight& y) { return !(x == y); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

/// Rational point of the cocharacter lattice N = M*.
struct Cochar {
    Rat a;
    Rat b;

    Cochar() = default;
    Cochar(Rat x, Rat y) : a(x), b(y) {}

    Cochar operator-() const { return {-a, -b}; }
    friend Cochar operator+(const Cochar& x, const Cochar& y) { return {x.a + y.a, x.b + y.b}; }
    friend Cochar operator*(const Rat& c, const Cochar& x) { return {c * x.a, c * x.b}; }
    friend bool operator==(const Cochar& x, const Cochar& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Cochar& x, const Cochar& y) { return !(x == y); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

/// Canonical pairing <lambda, chi> between N_Q and M_Q.
inline Rat pairing(const Cochar& lambda, const QWeight& chi) {
    return lambda.a * chi.a + lambda.b * chi.b;
}
inline Rat pairing(const Cochar& lambda, const Weight& chi) {
    return lambda.a * chi.a + lambda.b * chi.b;
}

/// Coordinate swap: the nontrivial Weyl element of GL2 acting on M.
inline QWeight weyl_reflect(const QWeight& chi) { return {chi.b, chi.a}; }
inline Weight weyl_reflect(const Weight& chi) { return {chi.b, chi.a}; }
inline Cochar weyl_reflect(const Cochar& lam) { return {lam.b, lam.a}; }

inline Rat cross(const QWeight& u, const QWeight& v) { return u.a * v.b - u.b * v.a; }

/// True iff u and v are linearly dependent (the zero vector is proportional
/// to everything).
inline bool proportional(const QWeight& u, const QWeight& v) { return cross(u, v).is_zero(); }

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray.
inline Cochar primitive(const Cochar& v) {
    if (v.is_zero()) throw arithmetic_error("primitive of zero vector");
    long long d = std::lcm(v.a.den(), v.b.den());
    long long na = v.a.num() * (d / v.a.den());
    long long nb = v.b.num() * (d / v.b.den());
    long long g = std::gcd(na < 0 ? -na : na, nb < 0 ? -nb : nb);
    return {Rat(na / g), Rat(nb / g)};
}

inline Weight primitive(const QWeight& v) {
    if (v.is_zero()) throw arithmetic_error("primitive of zero vector");
    long long d = std::lcm(v.a.den(), v.b.den());
    long long na = v.a.num() * (d / v.a.den());
    long long nb = v.b.num() * (d / v.b.den());
    long long g = std::gcd(na < 0 ? -na : na, nb < 0 ? -nb : nb);
    return {na / g, nb / g};
}

/// Primitive integer generator of ell^perp, as written: (-ell_b, ell_a).
inline Cochar perp_generator(const QWeight& ell) {
    Cochar raw{-ell.b, ell.a};
    return primitive(raw);
}

inline bool weight_in(const std::vector<Weight>& ws, const Weight& w) {
    for (const auto& x : ws)
        if (x == w) return true;
    return false;
}

} // namespace gitwin
