#include "gitwin/reduction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gitwin {

std::optional<Weight> mu_plus(const GroupSpec& g, const Weight& mu) {
    if (g.kind == GroupKind::Torus2) return mu;
    if (mu.b == mu.a + 1) return std::nullopt; // mu + rho fixed by the swap
    if (mu.a >= mu.b) return mu;
    return Weight{mu.b - 1, mu.a + 1};
}

namespace {

struct SumEntry {
    Weight sum;
    std::vector<long long> subset;
};

// Nonempty subset sums of the weights at the given indices, deduplicated by
// value; each sum keeps one representative index subset.
std::vector<SumEntry> nonempty_subset_sums(const RepSpec& rep,
                                           const std::vector<long long>& eligible) {
    std::map<Weight, std::vector<long long>> by_value;
    for (long long i : eligible) by_value[rep.weights[i]].push_back(i);
    if (by_value.size() > 20)
        throw budget_error("subset enumeration over " + std::to_string(by_value.size()) +
                           " distinct weights exceeds the budget");
    std::map<Weight, std::vector<long long>> sums; // sum -> representative subset
    sums[Weight{0, 0}] = {};
    for (const auto& [w, idxs] : by_value) {
        std::map<Weight, std::vector<long long>> next;
        for (const auto& [s, rep_subset] : sums) {
            for (size_t c = 0; c <= idxs.size(); ++c) {
                Weight total = s + (long long)c * w;
                auto it = next.find(total);
                if (it != next.end()) continue;
                std::vector<long long> sub = rep_subset;
                sub.insert(sub.end(), idxs.begin(), idxs.begin() + c);
                next.emplace(total, std::move(sub));
            }
        }
        if (next.size() > 100000) throw budget_error("subset-sum lattice exceeds the budget");
        sums = std::move(next);
    }
    std::vector<SumEntry> out;
    for (auto& [s, sub] : sums) {
        if (sub.empty()) continue;
        std::sort(sub.begin(), sub.end());
        out.push_back({s, sub});
    }
    return out;
}

std::vector<long long> eligible_indices(const RepSpec& rep, const Cochar& lambda,
                                        ComplexKind kind, SignMode mode) {
    std::vector<long long> idx;
    for (size_t i = 0; i < rep.weights.size(); ++i) {
        int s = pairing(lambda, rep.weights[i]).sign();
        bool in = (kind == ComplexKind::C) ? (mode == SignMode::Strict ? s < 0 : s <= 0)
                                           : (mode == SignMode::Strict ? s > 0 : s >= 0);
        if (in) idx.push_back((long long)i);
    }
    return idx;
}

} // namespace

ComplexPieces complex_pieces(const RepSpec& rep, ComplexKind kind, const Cochar& lambda,
                             const Weight& chi, SignMode mode) {
    ComplexPieces out;
    out.kind = kind;
    out.lambda = lambda;
    out.chi = chi;
    auto idx = eligible_indices(rep, lambda, kind, mode);
    for (const auto& entry : nonempty_subset_sums(rep, idx)) {
        ComplexPiece p;
        p.mu = (kind == ComplexKind::C) ? chi - entry.sum : chi + entry.sum;
        p.mu_plus = mu_plus(rep.group, p.mu);
        p.subset = entry.subset;
        out.pieces.push_back(p);
    }
    return out;
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Leaf: return "Leaf";
        case Rule::Step1Plus: return "Step1Plus";
        case Rule::Step1Minus: return "Step1Minus";
        case Rule::Step2a: return "Step2a";
        case Rule::Step2b: return "Step2b";
        case Rule::Step3a: return "Step3a";
        case Rule::Step3b: return "Step3b";
        case Rule::NefCase1: return "NefCase1";
        case Rule::NefCase2: return "NefCase2";
        case Rule::NefInterior1: return "NefInterior1";
        case Rule::NefInterior2: return "NefInterior2";
    }
    return "Leaf";
}

std::optional<Rule> rule_from_name(const std::string& s) {
    static const Rule all[] = {Rule::Leaf,    Rule::Step1Plus, Rule::Step1Minus,
                               Rule::Step2a,  Rule::Step2b,    Rule::Step3a,
                               Rule::Step3b,  Rule::NefCase1,  Rule::NefCase2,
                               Rule::NefInterior1, Rule::NefInterior2};
    for (Rule r : all)
        if (s == rule_name(r)) return r;
    return std::nullopt;
}

namespace {

struct EngineCtx {
    const RepSpec& rep;
    const WindowRegion& region;
    Weight det_x;
    Rat eta0;

    Rat p0(const Weight& chi) const {
        return pairing(region.lambda0, QWeight(chi) - region.theta);
    }
    Rat pprime(const Cochar& g, const Weight& chi) const {
        return pairing(g, QWeight(chi) - region.theta);
    }
    Rat alpha(const Weight& chi) const { return Rat(2) * p0(chi).abs() / eta0; }

    // Anti-dominant orientation of lambda' with <g, chi-theta> <= 0.
    Cochar orient(const Weight& chi) const {
        Cochar g = region.lambda_prime;
        if (rep.group.weyl_nontrivial()) {
            if (pprime(g, chi).sign() > 0)
                throw proof_mismatch_error("dominant weight " + chi.str() +
                                           " pairs positively with the anti-dominant lambda'");
            return g;
        }
        return pprime(g, chi).sign() <= 0 ? g : -g;
    }

    Weight det_x_where(const Cochar& g, int want_sign, bool include_zero) const {
        Weight d{0, 0};
        for (const auto& b : rep.weights) {
            int s = pairing(g, b).sign();
            if (s == want_sign || (include_zero && s == 0)) d = d + b;
        }
        return d;
    }

    Rat r_of(const Weight& chi) const {
        Cochar g = orient(chi);
        Rat denom = pairing(g, QWeight(-det_x_where(g, -1, true)));
        if (denom.sign() <= 0)
            throw hypothesis_error("weights span", "no weight pairs negatively with lambda'");
        Rat rho_pair = pairing(g, rep.group.rho());
        return (pprime(g, chi).abs() - rho_pair) / denom;
    }

    Rat q_of(const Cochar& g) const {
        return eta0 / Rat(2) + pairing(region.lambda0, QWeight(det_x_where(g, -1, false)));
    }
};

std::vector<Weight> children_from_sums(const EngineCtx& ctx, const Weight& chi,
                                       const std::vector<long long>& eligible, bool subtract) {
    std::vector<Weight> kids;
    for (const auto& entry : nonempty_subset_sums(ctx.rep, eligible)) {
        Weight mu = subtract ? chi - entry.sum : chi + entry.sum;
        auto mp = mu_plus(ctx.rep.group, mu);
        if (!mp) continue;
        if (!weight_in(kids, *mp)) kids.push_back(*mp);
    }
    std::sort(kids.begin(), kids.end());
    return kids;
}

[[noreturn]] void mismatch(const char* what, const Weight& chi, const Weight& child) {
    throw proof_mismatch_error(std::string(what) + " violated at edge " + chi.str() + " -> " +
                               child.str());
}

} // namespace

long long ReductionCertificate::leaf_count() const {
    long long n = 0;
    for (const auto& [w, node] : nodes)
        if (node.rule == Rule::Leaf) ++n;
    return n;
}

ReductionCertificate reduce_fano(const RepSpec& rep, const WindowRegion& region,
                                 const std::vector<Weight>& seeds) {
    for (const auto& b : rep.weights)
        if (pairing(region.lambda0, b).sign() >= 0)
            throw hypothesis_error("H:main_setup",
                                   "lambda0 must pair strictly negatively with every weight");
    if (rep.group.weyl_nontrivial() && region.theta.a != region.theta.b)
        throw hypothesis_error("theta invariance", "theta must be Weyl-invariant for GL2");
    EngineCtx ctx{rep, region, anticanonical(rep), region.d0.eta};
    ReductionCertificate cert;
    cert.engine = EngineKind::Fano;
    cert.theta = region.theta;
    cert.seeds = seeds;

    std::deque<Weight> work;
    for (const auto& s : seeds) {
        if (!dominant_for(rep.group, s))
            throw hypothesis_error("dominant label", "seed " + s.str() + " is not dominant");
        work.push_back(s);
    }

    const std::vector<long long> all_indices = [&] {
        std::vector<long long> v(rep.weights.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = (long long)i;
        return v;
    }();

    while (!work.empty()) {
        Weight chi = work.front();
        work.pop_front();
        if (cert.nodes.count(chi)) continue;
        CertNode node;
        node.alpha = ctx.alpha(chi);

        if (in_barrel(region, QWeight(chi))) {
            node.in_window = true;
            node.rule = Rule::Leaf;
            node.aux = ctx.r_of(chi);
            cert.nodes.emplace(chi, std::move(node));
            continue;
        }

        Rat p0 = ctx.p0(chi);
        if (node.alpha > Rat(1)) {
            // Step 1: the lambda0 complexes narrow the strip.
            bool subtract = p0.sign() < 0;
            node.rule = subtract ? Rule::Step1Plus : Rule::Step1Minus;
            node.aux = Rat(0);
            node.children = children_from_sums(ctx, chi, all_indices, subtract);
            for (const auto& c : node.children)
                if (!(ctx.alpha(c) < node.alpha)) mismatch("Step-1 strip shrink", chi, c);
        } else {
            Cochar g = ctx.orient(chi);
            Rat r = ctx.r_of(chi);
            node.aux = r;
            if (r > Rat(1, 2)) {
                // Step 2: reduce to the cylinder.
                Rat Q = ctx.q_of(g);
                if (p0 <= Q) {
                    node.rule = Rule::Step2a;
                    node.children = children_from_sums(
                        ctx, chi, eligible_indices(rep, g, ComplexKind::C, SignMode::Strict),
                        true);
                } else {
                    node.rule = Rule::Step2b;
                    node.children = children_from_sums(
                        ctx, chi, eligible_indices(rep, g, ComplexKind::Dvee, SignMode::Strict),
                        false);
                }
                for (const auto& c : node.children) {
                    if (!in_strip(region, QWeight(c))) mismatch("Step-2 strip membership", chi, c);
                    if (!(ctx.r_of(c) < r)) mismatch("Step-2 r decrease", chi, c);
                }
            } else if (r == Rat(1, 2)) {
                // Step 3: the boundary weights of the cylinder.
                Rat lower3a = -ctx.eta0 / Rat(2);
                Rat upper3a = pairing(region.lambda0, QWeight(ctx.det_x_where(g, -1, true))) / Rat(2);
                Rat lower3b =
                    pairing(region.lambda0, QWeight(-ctx.det_x_where(g, 1, true))) / Rat(2);
                Rat upper3b = ctx.eta0 / Rat(2);
                if (lower3a <= p0 && p0 < upper3a) {
                    node.rule = Rule::Step3a;
                    auto elig = eligible_indices(rep, g, ComplexKind::C, SignMode::Strict);
                    node.children = children_from_sums(ctx, chi, elig, true);
                } else if (lower3b < p0 && p0 <= upper3b) {
                    node.rule = Rule::Step3b;
                    auto elig = eligible_indices(rep, g, ComplexKind::Dvee, SignMode::Strict);
                    node.children = children_from_sums(ctx, chi, elig, false);
                } else {
                    throw proof_mismatch_error("no Step-3 case applies to " + chi.str());
                }
                for (const auto& c : node.children) {
                    if (!in_strip(region, QWeight(c))) mismatch("Step-3 strip membership", chi, c);
                    if (!(ctx.r_of(c) <= Rat(1, 2))) mismatch("Step-3 r bound", chi, c);
                    if (!(ctx.alpha(c) < node.alpha)) mismatch("Step-3 alpha decrease", chi, c);
                }
            } else {
                throw proof_mismatch_error("weight " + chi.str() +
                                           " inside the open cylinder escaped the barrel");
            }
        }
        for (const auto& c : node.children)
            if (!cert.nodes.count(c)) work.push_back(c);
        cert.nodes.emplace(chi, std::move(node));
    }
    return cert;
}

ReductionCertificate reduce_nef_fano(const RepSpec& rep, const WindowRegion& region,
                                     const QWeight& ell_dir, const std::vector<Weight>& seeds) {
    if (rep.group.kind != GroupKind::Torus2)
        throw hypothesis_error("group", "nef reduction is the rank-2 torus case");
    for (const auto& b : rep.weights)
        if (pairing(region.lambda0, b).sign() >= 0)
            throw hypothesis_error("H:main_setup",
                                   "lambda0 must pair strictly negatively with every weight");
    if (!cylinder_boundary_free(region))
        throw hypothesis_error("theta boundary",
                               "theta + closed cylinder has a lattice point on its boundary");

    EngineCtx ctx{rep, region, anticanonical(rep), region.d0.eta};
    Cochar lp = region.lambda_prime;
    if (pairing(lp, ell_dir).sign() == 0)
        throw hypothesis_error("polarization", "ell direction must not be proportional to omega*");
    if (pairing(lp, ell_dir).sign() > 0) lp = -lp;
    const Rat eta_prime = destab_data(rep, lp).eta; // equals eta_{-lambda'} here
    const Rat Q = ctx.q_of(lp);

    auto eligible_closed = eligible_indices(rep, lp, ComplexKind::Dvee, SignMode::Closed);
    auto eligible_strict_neg = eligible_indices(rep, lp, ComplexKind::C, SignMode::Strict);
    const std::vector<long long> all_indices = [&] {
        std::vector<long long> v(rep.weights.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = (long long)i;
        return v;
    }();

    ReductionCertificate cert;
    cert.engine = EngineKind::NefFano;
    cert.theta = region.theta;
    cert.seeds = seeds;

    auto R_of = [&](const Weight& chi) { return Rat(2) * ctx.pprime(lp, chi).abs() / eta_prime; };

    std::deque<Weight> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        Weight chi = work.front();
        work.pop_front();
        if (cert.nodes.count(chi)) continue;
        CertNode node;
        node.alpha = ctx.alpha(chi);
        Rat p0 = ctx.p0(chi);

        if (node.alpha > Rat(1)) {
            bool subtract = p0.sign() < 0;
            node.rule = subtract ? Rule::Step1Plus : Rule::Step1Minus;
            node.aux = Rat(0);
            node.children = children_from_sums(ctx, chi, all_indices, subtract);
            for (const auto& c : node.children)
                if (!(ctx.alpha(c) < node.alpha)) mismatch("Step-1 strip shrink", chi, c);
        } else {
            Rat pp = ctx.pprime(lp, chi);
            Rat R = R_of(chi);
            node.aux = R;
            if (R <= Rat(1)) {
                if (!(p0.abs() * Rat(2) < ctx.eta0) || !(pp.abs() * Rat(2) < eta_prime))
                    throw proof_mismatch_error("leaf " + chi.str() +
                                               " lies on the cylinder boundary");
                node.in_window = true;
                node.rule = Rule::Leaf;
                cert.nodes.emplace(chi, std::move(node));
                continue;
            }
            if (pp.sign() < 0) {
                if (Q < p0) {
                    node.rule = Rule::NefCase1;
                    node.children = children_from_sums(ctx, chi, eligible_closed, false);
                    for (const auto& c : node.children) {
                        if (!in_strip(region, QWeight(c))) mismatch("nef strip", chi, c);
                        bool smaller_R = R_of(c) < R;
                        bool same_facet = ctx.pprime(lp, c) == pp && ctx.p0(c) < p0;
                        if (!smaller_R && !same_facet) mismatch("nef Psi descent", chi, c);
                    }
                } else {
                    node.rule = Rule::NefInterior1;
                    node.children = children_from_sums(ctx, chi, eligible_strict_neg, true);
                    for (const auto& c : node.children) {
                        if (!in_strip(region, QWeight(c))) mismatch("nef strip", chi, c);
                        if (!(R_of(c) < R)) mismatch("nef R decrease", chi, c);
                    }
                }
            } else {
                if (p0 < -Q) {
                    node.rule = Rule::NefCase2;
                    node.children = children_from_sums(ctx, chi, eligible_closed, true);
                    for (const auto& c : node.children) {
                        if (!in_strip(region, QWeight(c))) mismatch("nef strip", chi, c);
                        bool smaller_R = R_of(c) < R;
                        bool same_facet = ctx.pprime(lp, c) == pp && ctx.p0(c) > p0;
                        if (!smaller_R && !same_facet) mismatch("nef Psi descent", chi, c);
                    }
                } else {
                    node.rule = Rule::NefInterior2;
                    node.children = children_from_sums(ctx, chi, eligible_strict_neg, false);
                    for (const auto& c : node.children) {
                        if (!in_strip(region, QWeight(c))) mismatch("nef strip", chi, c);
                        if (!(R_of(c) < R)) mismatch("nef R decrease", chi, c);
                    }
                }
            }
        }
        for (const auto& c : node.children)
            if (!cert.nodes.count(c)) work.push_back(c);
        cert.nodes.emplace(chi, std::move(node));
    }
    return cert;
}

std::vector<Weight> default_seeds(const RepSpec& rep, const WindowRegion& region, const Rat& K) {
    long long alo, ahi, blo, bhi;
    scan_box(region, K, alo, ahi, blo, bhi);
    std::vector<Weight> seeds;
    Rat eta_bound = region.dplus.eta > region.dminus.eta ? region.dplus.eta : region.dminus.eta;
    for (long long a = alo; a <= ahi; ++a)
        for (long long b = blo; b <= bhi; ++b) {
            Weight w{a, b};
            if (!dominant_for(rep.group, w)) continue;
            QWeight x = QWeight(w) - region.theta;
            if (pairing(region.lambda0, x).abs() * Rat(2) > K * region.d0.eta) continue;
            if (pairing(region.lambda_prime, x).abs() * Rat(2) > K * eta_bound) continue;
            seeds.push_back(w);
        }
    return seeds;
}

namespace {

std::string weight_list_str(const std::vector<Weight>& ws) {
    std::string s = "[";
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) s += ",";
        s += ws[i].str();
    }
    return s + "]";
}

} // namespace

std::string ReductionCertificate::serialize() const {
    std::string out = "reduction-certificate v1\n";
    out += std::string("engine = ") + (engine == EngineKind::Fano ? "fano" : "nef-fano") + "\n";
    out += "theta = " + theta.str() + "\n";
    out += "seeds = " + weight_list_str(seeds) + "\n";
    for (const auto& [w, node] : nodes) {
        out += "node " + w.str() + " rule=" + rule_name(node.rule) +
               " in_window=" + (node.in_window ? "1" : "0") + " alpha=" + node.alpha.str() +
               " aux=" + node.aux.str() + " children=" + weight_list_str(node.children) + "\n";
    }
    out += "end\n";
    return out;
}

namespace {

Weight parse_weight_token(const std::string& s, size_t& pos) {
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c)
            throw arithmetic_error("certificate parse error near position " +
                                   std::to_string(pos));
        ++pos;
    };
    expect('(');
    size_t comma = s.find(',', pos);
    long long a = std::stoll(s.substr(pos, comma - pos));
    pos = comma + 1;
    size_t close = s.find(')', pos);
    long long b = std::stoll(s.substr(pos, close - pos));
    pos = close + 1;
    return {a, b};
}

std::vector<Weight> parse_weight_list(const std::string& s) {
    std::vector<Weight> out;
    size_t pos = 0;
    if (pos >= s.size() || s[pos] != '[') throw arithmetic_error("expected weight list");
    ++pos;
    while (pos < s.size() && s[pos] != ']') {
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        out.push_back(parse_weight_token(s, pos));
    }
    return out;
}

QWeight parse_qweight(const std::string& s) {
    size_t open = s.find('(');
    size_t comma = s.find(',', open);
    size_t close = s.find(')', comma);
    return {Rat::parse(s.substr(open + 1, comma - open - 1)),
            Rat::parse(s.substr(comma + 1, close - comma - 1))};
}

} // namespace

ReductionCertificate ReductionCertificate::parse(const std::string& text) {
    ReductionCertificate cert;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "reduction-certificate v1")
        throw arithmetic_error("not a reduction certificate");
    while (std::getline(in, line)) {
        if (line == "end") break;
        if (line.rfind("engine = ", 0) == 0) {
            cert.engine = line.substr(9) == "fano" ? EngineKind::Fano : EngineKind::NefFano;
        } else if (line.rfind("theta = ", 0) == 0) {
            cert.theta = parse_qweight(line.substr(8));
        } else if (line.rfind("seeds = ", 0) == 0) {
            cert.seeds = parse_weight_list(line.substr(8));
        } else if (line.rfind("node ", 0) == 0) {
            size_t pos = 5;
            Weight w = parse_weight_token(line, pos);
            auto field = [&](const std::string& key) {
                size_t at = line.find(" " + key + "=", pos);
                if (at == std::string::npos)
                    throw arithmetic_error("certificate node missing field " + key);
                size_t start = at + key.size() + 2;
                size_t end = line.find(' ', start);
                if (end == std::string::npos) end = line.size();
                return line.substr(start, end - start);
            };
            CertNode node;
            auto rule = rule_from_name(field("rule"));
            if (!rule) throw arithmetic_error("unknown rule in certificate");
            node.rule = *rule;
            node.in_window = field("in_window") == "1";
            node.alpha = Rat::parse(field("alpha"));
            node.aux = Rat::parse(field("aux"));
            node.children = parse_weight_list(field("children"));
            cert.nodes.emplace(w, std::move(node));
        }
    }
    return cert;
}

} // namespace gitwin
