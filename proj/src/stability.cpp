#include "gitwin/stability.hpp"

#include <algorithm>
#include <set>

namespace gitwin {

StabilityVerdict finite_stabilizer_test(const RepSpec& rep, const Polarization& ell,
                                        const Cochar& lambda0) {
    if (ell.pairing_sign(lambda0) >= 0)
        throw hypothesis_error("polarization", "<lambda0, ell> must be negative");
    StabilityVerdict v;
    if (!rep.weights_span()) {
        v.finite_stabilizers = false;
        v.spans = false;
        v.offending_weight = rep.weights.empty() ? std::nullopt
                                                 : std::optional<Weight>(rep.weights.front());
        return v;
    }
    for (const auto& b : rep.weights)
        if (ell.weight_proportional(b)) {
            v.finite_stabilizers = false;
            v.offending_weight = b;
            return v;
        }
    v.finite_stabilizers = true;
    return v;
}

Gl2FanoReport gl2_fano_criterion(const RepSpec& rep) {
    if (rep.group.kind != GroupKind::GL2 || rep.gl2_summands.empty())
        throw hypothesis_error("gl2 summands", "criterion needs a GL2 summand decomposition");
    Gl2FanoReport report;
    report.ok = true;
    for (const auto& s : rep.gl2_summands) {
        Gl2SummandVerdict sv;
        sv.summand = s;
        sv.central_ok = Rat(s.m) + Rat(s.n, 2) > Rat(0);
        sv.odd_ok = (s.n % 2) != 0;
        report.ok = report.ok && sv.central_ok && sv.odd_ok;
        report.per_summand.push_back(sv);
    }
    return report;
}

namespace {

Weight rot90(const Weight& w) { return {-w.b, w.a}; }

// The attracting subspace X^{lam >= 0} is the sum of the coordinate
// eigenspaces with nonnegative pairing, so the index set identifies it.
std::vector<long long> attracting_key(const RepSpec& rep, const Cochar& lam) {
    std::vector<long long> idx;
    for (size_t i = 0; i < rep.weights.size(); ++i)
        if (pairing(lam, rep.weights[i]).sign() >= 0) idx.push_back((long long)i);
    return idx;
}

// Counterclockwise angular order starting from the positive a-axis.
bool angle_less(const Weight& x, const Weight& y) {
    auto half = [](const Weight& w) { return (w.b > 0 || (w.b == 0 && w.a > 0)) ? 0 : 1; };
    if (half(x) != half(y)) return half(x) < half(y);
    long long cr = x.a * y.b - x.b * y.a;
    if (cr != 0) return cr > 0;
    return false;
}

} // namespace

std::vector<Cochar> destabilizing_cone_reps(const RepSpec& rep, const Polarization& ell) {
    // Rays of the arrangement {beta_i^perp} and one representative per open
    // sector between consecutive rays.
    std::vector<Weight> rays;
    for (const auto& b : rep.weights) {
        if (b.a == 0 && b.b == 0) continue;
        Weight p = primitive(QWeight(b));
        rays.push_back(rot90(p));
        rays.push_back(-rot90(p));
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    std::vector<Weight> candidates = rays;
    size_t n = rays.size();
    for (size_t i = 0; i < n; ++i) {
        const Weight& r1 = rays[i];
        const Weight& r2 = rays[(i + 1) % n];
        if (r1 == -r2 || r1 == r2) {
            // Two opposite rays of a single line: sector interiors are the
            // perpendicular directions.
            candidates.push_back(rot90(r1));
            candidates.push_back(-rot90(r1));
        } else {
            candidates.push_back(primitive(QWeight(r1 + r2)));
        }
    }
    if (rays.empty()) return {};

    std::vector<Cochar> out;
    std::set<std::vector<long long>> seen;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
        Cochar lam{Rat(c.a), Rat(c.b)};
        if (ell.pairing_sign(lam) >= 0) continue;
        auto key = attracting_key(rep, lam);
        if (seen.insert(key).second) out.push_back(lam);
    }
    return out;
}

} // namespace gitwin
