#include "gitwin/window.hpp"

#include <algorithm>

namespace gitwin {

DestabData destab_data(const RepSpec& rep, const Cochar& lambda) {
    Weight zeta{0, 0};
    for (const auto& b : rep.weights)
        if (pairing(lambda, b).sign() <= 0) zeta = zeta - b;
    for (const auto& a : rep.group.roots())
        if (pairing(lambda, a).sign() < 0) zeta = zeta + a;
    return DestabData{lambda, zeta, pairing(lambda, zeta)};
}

WindowRegion make_region(const RepSpec& rep, const QWeight& theta, const QWeight& ell,
                         const Cochar& lambda0, RegionKind kind, const Rat& param) {
    if (ell.is_zero()) throw hypothesis_error("polarization", "ell must be nonzero");
    if (pairing(lambda0, ell).sign() >= 0)
        throw hypothesis_error("polarization", "<lambda0, ell> must be negative");
    Cochar lp = perp_generator(ell);
    if (rep.group.weyl_nontrivial() && !rep.group.is_antidominant(lp)) lp = -lp;
    WindowRegion r;
    r.kind = kind;
    r.theta = theta;
    r.ell = ell;
    r.lambda0 = lambda0;
    r.lambda_prime = lp;
    r.d0 = destab_data(rep, lambda0);
    r.dplus = destab_data(rep, lp);
    r.dminus = destab_data(rep, -lp);
    r.det_x = anticanonical(rep);
    if (kind == RegionKind::EnlargedCylinder) {
        if (param < Rat(1)) throw hypothesis_error("region", "enlargement factor must be >= 1");
        r.enlarge_R = param;
    }
    if (kind == RegionKind::PerturbedCylinder) {
        if (param.sign() < 0) throw hypothesis_error("region", "perturbation must be >= 0");
        r.perturb_t = param;
    }
    return r;
}

bool in_region(const WindowRegion& r, const QWeight& chi) {
    switch (r.kind) {
        case RegionKind::Strip: return in_strip(r, chi);
        case RegionKind::Cylinder: return in_cylinder(r, chi);
        case RegionKind::Barrel: return in_barrel(r, chi);
        case RegionKind::EnlargedCylinder: return in_enlarged_cylinder(r, r.enlarge_R, chi);
        case RegionKind::PerturbedCylinder: return in_perturbed_cylinder(r, r.perturb_t, chi);
    }
    return false;
}

bool in_strip(const WindowRegion& r, const QWeight& chi) {
    return pairing(r.lambda0, chi - r.theta).abs() * Rat(2) <= r.d0.eta;
}

namespace {

bool cylinder_side(const DestabData& d, const QWeight& x) {
    return pairing(d.lambda, x).abs() * Rat(2) <= d.eta;
}

// One generator's barrel disjunction at x = chi - theta.
bool barrel_side(const WindowRegion& r, const DestabData& d, const QWeight& x) {
    Rat p2 = pairing(d.lambda, x) * Rat(2);
    if (p2.abs() < d.eta) return true;
    if (p2 == d.eta) return pairing(r.lambda0, x) * Rat(2) <= pairing(r.lambda0, QWeight(d.zeta));
    if (p2 == -d.eta) return pairing(r.lambda0, x) * Rat(2) >= -pairing(r.lambda0, QWeight(d.zeta));
    return false;
}

bool perturbed_side(const WindowRegion& r, const DestabData& d, const Rat& t, const QWeight& x) {
    Cochar gt = d.lambda + t * r.lambda0;
    return pairing(gt, x).abs() * Rat(2) <= pairing(gt, QWeight(d.zeta));
}

} // namespace

bool in_cylinder(const WindowRegion& r, const QWeight& chi) {
    QWeight x = chi - r.theta;
    return in_strip(r, chi) && cylinder_side(r.dplus, x) && cylinder_side(r.dminus, x);
}

bool in_barrel(const WindowRegion& r, const QWeight& chi) {
    QWeight x = chi - r.theta;
    return in_strip(r, chi) && barrel_side(r, r.dplus, x) && barrel_side(r, r.dminus, x);
}

bool in_enlarged_cylinder(const WindowRegion& r, const Rat& R, const QWeight& chi) {
    QWeight x = chi - r.theta;
    if (!in_strip(r, chi)) return false;
    return pairing(r.dplus.lambda, x).abs() * Rat(2) <= R * r.dplus.eta &&
           pairing(r.dminus.lambda, x).abs() * Rat(2) <= R * r.dminus.eta;
}

bool in_perturbed_cylinder(const WindowRegion& r, const Rat& t, const QWeight& chi) {
    QWeight x = chi - r.theta;
    return in_cylinder(r, chi) && perturbed_side(r, r.dplus, t, x) &&
           perturbed_side(r, r.dminus, t, x);
}

namespace {

// Image subgroup <lambda0, M> = (g/q) Z for lambda0 = (P/q, R/q), g = gcd.
struct ImageGroup {
    long long p = 0, rr = 0, q = 1, g = 1;
};

ImageGroup image_group(const Cochar& lam) {
    long long q = std::lcm(lam.a.den(), lam.b.den());
    long long p = lam.a.num() * (q / lam.a.den());
    long long rr = lam.b.num() * (q / lam.b.den());
    long long g = std::gcd(p < 0 ? -p : p, rr < 0 ? -rr : rr);
    if (g == 0) throw hypothesis_error("polarization", "lambda0 must be nonzero");
    return {p, rr, q, g};
}

bool image_contains(const ImageGroup& im, const Rat& c) {
    Rat scaled = c * Rat(im.q) / Rat(im.g);
    return scaled.is_integer();
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Lattice solution of <lambda0, chi> = c nearest to theta along the
// hyperplane direction.
Weight hyperplane_witness(const ImageGroup& im, const Rat& c, const QWeight& theta) {
    long long rhs = (c * Rat(im.q) / Rat(im.g)).num(); // integral by the membership check
    long long x, y;
    ext_gcd(im.p, im.rr, x, y);
    Weight chi0{x * rhs, y * rhs};
    Weight v{-im.rr / im.g, im.p / im.g};
    QWeight diff = QWeight(chi0) - theta;
    Rat kstar = -(Rat(v.a) * diff.a + Rat(v.b) * diff.b) / Rat(v.a * v.a + v.b * v.b);
    return chi0 + kstar.round_half_down() * v;
}

} // namespace

GenericityReport check_generic(const WindowRegion& r) {
    ImageGroup im = image_group(r.lambda0);
    struct Cand {
        Weight zeta;
        const char* name;
    };
    const Cand cands[] = {{r.dplus.zeta, "zeta(+lambda')"},
                          {r.dminus.zeta, "zeta(-lambda')"},
                          {-r.det_x, "zeta(0)"}};
    for (const auto& c : cands) {
        Rat target = pairing(r.lambda0, r.theta) + pairing(r.lambda0, c.zeta) / Rat(2);
        if (image_contains(im, target)) {
            GenericityReport rep;
            rep.is_generic = false;
            rep.witness = hyperplane_witness(im, target, r.theta);
            rep.witness_hyperplane = c.name;
            return rep;
        }
    }
    GenericityReport rep;
    rep.is_generic = true;
    return rep;
}

QWeight find_generic_theta(const RepSpec& rep, const QWeight& ell, const Cochar& lambda0) {
    QWeight omega(anticanonical(rep));
    std::string obstructions;
    for (long long k = 2; k <= 64; ++k) {
        QWeight theta = Rat(-1, 2 * k) * omega;
        WindowRegion r = make_region(rep, theta, ell, lambda0);
        GenericityReport g = check_generic(r);
        if (g.is_generic) return theta;
        obstructions += " s=-1/" + std::to_string(2 * k) + " hits " + g.witness_hyperplane;
    }
    throw hypothesis_error("theta search",
                           "no generic theta in the family s*omega:" + obstructions);
}

bool cylinder_boundary_free(const WindowRegion& r) {
    long long alo, ahi, blo, bhi;
    scan_box(r, Rat(1), alo, ahi, blo, bhi);
    for (long long a = alo; a <= ahi; ++a)
        for (long long b = blo; b <= bhi; ++b) {
            QWeight chi{Rat(a), Rat(b)};
            if (!in_cylinder(r, chi)) continue;
            QWeight x = chi - r.theta;
            if (pairing(r.lambda0, x).abs() * Rat(2) == r.d0.eta) return false;
            if (pairing(r.dplus.lambda, x).abs() * Rat(2) == r.dplus.eta) return false;
            if (pairing(r.dminus.lambda, x).abs() * Rat(2) == r.dminus.eta) return false;
        }
    return true;
}

QWeight find_nef_theta(const RepSpec& rep, const QWeight& ell_dir, const Cochar& lambda0) {
    QWeight omega(anticanonical(rep));
    for (long long k = 2; k <= 64; ++k) {
        QWeight theta = Rat(-1, 2 * k) * omega + Rat(1, 2 * k + 1) * ell_dir;
        WindowRegion r = make_region(rep, theta, omega, lambda0, RegionKind::Cylinder);
        if (cylinder_boundary_free(r)) return theta;
    }
    throw hypothesis_error("theta search", "no boundary-free theta found for the nef window");
}

void scan_box(const WindowRegion& r, const Rat& margin, long long& alo, long long& ahi,
              long long& blo, long long& bhi) {
    // Corner coordinates of {|<lambda0,x>| <= m*eta0/2,
    // <lambda',x> in m*[-eta_-/2, eta_+/2]}, then the integer hull.
    const Cochar& l0 = r.lambda0;
    const Cochar& lp = r.lambda_prime;
    Rat det = l0.a * lp.b - l0.b * lp.a;
    if (det.is_zero()) throw hypothesis_error("weights span", "window region is unbounded");
    Rat emax = r.dplus.eta > r.dminus.eta ? r.dplus.eta : r.dminus.eta;
    if (emax.sign() < 0) emax = Rat(0);
    Rat c1 = margin * r.d0.eta / Rat(2);
    Rat c2 = margin * emax / Rat(2);
    bool first = true;
    Rat mina, maxa, minb, maxb;
    for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
            Rat y1 = Rat(s1) * c1, y2 = Rat(s2) * c2;
            Rat xa = (y1 * lp.b - y2 * l0.b) / det + r.theta.a;
            Rat xb = (y2 * l0.a - y1 * lp.a) / det + r.theta.b;
            if (first || xa < mina) mina = xa;
            if (first || xa > maxa) maxa = xa;
            if (first || xb < minb) minb = xb;
            if (first || xb > maxb) maxb = xb;
            first = false;
        }
    alo = mina.ceil();
    ahi = maxa.floor();
    blo = minb.ceil();
    bhi = maxb.floor();
}

std::vector<LatticeClass> classify_lattice(const RepSpec& rep, const WindowRegion& r,
                                           const Rat& margin) {
    long long alo, ahi, blo, bhi;
    scan_box(r, margin, alo, ahi, blo, bhi);
    std::vector<LatticeClass> rows;
    for (long long a = alo; a <= ahi; ++a)
        for (long long b = blo; b <= bhi; ++b) {
            LatticeClass row;
            row.chi = Weight{a, b};
            QWeight chi{Rat(a), Rat(b)};
            row.strip = in_strip(r, chi);
            row.cylinder = in_cylinder(r, chi);
            row.barrel = in_barrel(r, chi);
            row.dominant = dominant_for(rep.group, row.chi);
            rows.push_back(row);
        }
    return rows;
}

namespace {

void sort_by_lambda0(std::vector<IrrepLabel>& labels, const Cochar& lambda0) {
    std::sort(labels.begin(), labels.end(), [&](const IrrepLabel& x, const IrrepLabel& y) {
        Rat wx = pairing(lambda0, x.highest_weight);
        Rat wy = pairing(lambda0, y.highest_weight);
        if (wx != wy) return wy < wx; // descending lambda0-weight
        return x.highest_weight < y.highest_weight;
    });
}

} // namespace

std::vector<IrrepLabel> enumerate_window_irreps(const RepSpec& rep, const WindowRegion& r) {
    if (!rep.weights_span())
        throw hypothesis_error("weights span", "weights of X do not span M_R; window unbounded");
    if (rep.group.weyl_nontrivial() && r.theta.a != r.theta.b)
        throw hypothesis_error("theta invariance", "theta must be Weyl-invariant for GL2");
    long long alo, ahi, blo, bhi;
    scan_box(r, Rat(1), alo, ahi, blo, bhi);
    std::vector<IrrepLabel> labels;
    for (long long a = alo; a <= ahi; ++a)
        for (long long b = blo; b <= bhi; ++b) {
            Weight w{a, b};
            if (!dominant_for(rep.group, w)) continue;
            if (in_barrel(r, QWeight(w))) labels.push_back({w});
        }
    sort_by_lambda0(labels, r.lambda0);
    return labels;
}

std::vector<IrrepLabel> enumerate_nef_window(const RepSpec& rep, const WindowRegion& r) {
    if (!rep.weights_span())
        throw hypothesis_error("weights span", "weights of X do not span M_R; window unbounded");
    if (!cylinder_boundary_free(r))
        throw hypothesis_error("theta boundary",
                               "theta + closed cylinder has a lattice point on its boundary");
    long long alo, ahi, blo, bhi;
    scan_box(r, Rat(1), alo, ahi, blo, bhi);
    std::vector<IrrepLabel> labels;
    for (long long a = alo; a <= ahi; ++a)
        for (long long b = blo; b <= bhi; ++b)
            if (in_cylinder(r, QWeight(Weight{a, b}))) labels.push_back({Weight{a, b}});
    sort_by_lambda0(labels, r.lambda0);
    return labels;
}

std::string classification_csv(const std::vector<LatticeClass>& rows) {
    std::string out = "a,b,in_strip,in_cylinder,in_barrel,dominant\n";
    for (const auto& row : rows) {
        out += std::to_string(row.chi.a) + "," + std::to_string(row.chi.b) + "," +
               std::to_string(row.strip ? 1 : 0) + "," + std::to_string(row.cylinder ? 1 : 0) +
               "," + std::to_string(row.barrel ? 1 : 0) + "," +
               std::to_string(row.dominant ? 1 : 0) + "\n";
    }
    return out;
}

} // namespace gitwin
