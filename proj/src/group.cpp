#include "gitwin/group.hpp"

#include <algorithm>

namespace gitwin {

RepSpec RepSpec::torus(std::vector<Weight> ws) {
    RepSpec r;
    r.group = GroupSpec::torus2();
    r.weights = std::move(ws);
    return r;
}

RepSpec RepSpec::gl2(std::vector<Gl2Summand> summands) {
    RepSpec r;
    r.group = GroupSpec::gl2();
    r.gl2_summands = std::move(summands);
    for (const auto& s : r.gl2_summands) {
        if (s.n < 0) throw hypothesis_error("gl2 summand", "Sym exponent must be nonnegative");
        auto ws = gl2_summand_weights(s);
        r.weights.insert(r.weights.end(), ws.begin(), ws.end());
    }
    return r;
}

bool RepSpec::weights_span() const {
    for (size_t i = 0; i < weights.size(); ++i)
        for (size_t j = i + 1; j < weights.size(); ++j)
            if (weights[i].a * weights[j].b - weights[i].b * weights[j].a != 0) return true;
    return false;
}

std::string RepSpec::str() const {
    std::string s = group.name() + " {";
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ", ";
        s += weights[i].str();
    }
    return s + "}";
}

std::vector<Weight> gl2_summand_weights(const Gl2Summand& s) {
    std::vector<Weight> ws;
    for (long long k = 0; k <= s.n; ++k) ws.push_back({s.n - k + s.m, k + s.m});
    return ws;
}

Weight anticanonical(const RepSpec& rep) {
    Weight sum{0, 0};
    for (const auto& b : rep.weights) sum = sum + b;
    return sum;
}

namespace {

bool pairs_all_negative(const Cochar& lam, const std::vector<Weight>& ws) {
    for (const auto& b : ws)
        if (pairing(lam, b).sign() >= 0) return false;
    return true;
}

long long icross(const Weight& u, const Weight& v) { return u.a * v.b - u.b * v.a; }

// Interior point of {lam : <lam, beta_i> < 0 for all i}, or nullopt.
// Feasible iff the weight rays fit in an open half-plane; in that case, with
// r the clockwise-most ray and q the counterclockwise-most, the vector
// u = rot90(r) + rot-90(q) has dot(u, s) = cross(r,s) + cross(s,q) > 0 for
// every weight ray s, and lam = -u works.
std::optional<Cochar> dual_cone_interior(const std::vector<Weight>& ws) {
    std::vector<Weight> rays;
    for (const auto& w : ws) {
        if (w.a == 0 && w.b == 0) return std::nullopt;
        rays.push_back(primitive(QWeight(w)));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.empty()) return std::nullopt;
    const Weight* r = nullptr;
    const Weight* q = nullptr;
    for (const auto& c : rays) {
        bool cw_most = true, ccw_most = true;
        for (const auto& s : rays) {
            if (s == c) continue;
            long long cr = icross(c, s);
            if (cr <= 0) cw_most = false;
            if (cr >= 0) ccw_most = false;
        }
        if (cw_most) r = &c;
        if (ccw_most) q = &c;
    }
    if (rays.size() == 1) r = q = &rays[0];
    if (!r || !q) return std::nullopt;
    Weight u = (*r == *q) ? *r : Weight{-r->b, r->a} + Weight{q->b, -q->a};
    Cochar lam = primitive(Cochar{Rat(-u.a), Rat(-u.b)});
    if (!pairs_all_negative(lam, ws)) return std::nullopt;
    return lam;
}

} // namespace

std::optional<Cochar> check_main_setup(const RepSpec& rep) {
    const Cochar canonical{Rat(-1), Rat(-1)};
    if (pairs_all_negative(canonical, rep.weights)) return canonical;
    if (rep.group.kind == GroupKind::GL2) return std::nullopt;
    static const Cochar probes[] = {
        {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(1), Rat(-1)},
        {Rat(1), Rat(0)},  {Rat(0), Rat(1)}, {Rat(1), Rat(1)},
    };
    for (const auto& p : probes)
        if (pairs_all_negative(p, rep.weights)) return p;
    return dual_cone_interior(rep.weights);
}

std::vector<Weight> irrep_weights(const GroupSpec& g, const IrrepLabel& label) {
    if (g.kind == GroupKind::Torus2) return {label.highest_weight};
    const Weight hw = label.highest_weight;
    if (hw.a < hw.b)
        throw hypothesis_error("dominant label",
                               "GL2 irreducible label " + hw.str() + " is not dominant");
    std::vector<Weight> ws;
    for (long long k = 0; k <= hw.a - hw.b; ++k) ws.push_back({hw.a - k, hw.b + k});
    return ws;
}

} // namespace gitwin
