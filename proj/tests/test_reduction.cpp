#include "gitwin/reduction.hpp"

#include <doctest.h>

#include <set>

using namespace gitwin;

namespace {

const Cochar l0{Rat(-1), Rat(-1)};
RepSpec gr6() { return RepSpec::gl2_standard_power(6); }
RepSpec sym3() { return RepSpec::gl2({{3, 0}}); }
RepSpec sym4_torus() { return RepSpec::torus({{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}); }

WindowRegion region_at(const RepSpec& rep, const QWeight& theta,
                       RegionKind kind = RegionKind::Barrel) {
    return make_region(rep, theta, QWeight(anticanonical(rep)), l0, kind);
}

// Independent audit of a Fano certificate: recomputes the measures from
// scratch and re-checks every edge's claim, plus acyclicity and leaf
// soundness.
void validate_fano(const RepSpec& rep, const WindowRegion& r, const ReductionCertificate& c) {
    Rat eta0 = r.d0.eta;
    auto alpha = [&](const Weight& w) {
        return Rat(2) * pairing(r.lambda0, QWeight(w) - r.theta).abs() / eta0;
    };
    auto r_meas = [&](const Weight& w) {
        Cochar g = r.lambda_prime;
        if (!rep.group.weyl_nontrivial() && pairing(g, QWeight(w) - r.theta).sign() > 0) g = -g;
        Weight dle{0, 0};
        for (const auto& b : rep.weights)
            if (pairing(g, b).sign() <= 0) dle = dle - b;
        return (pairing(g, QWeight(w) - r.theta).abs() - pairing(g, rep.group.rho())) /
               pairing(g, QWeight(dle));
    };
    for (const auto& [w, node] : c.nodes) {
        CHECK(node.alpha == alpha(w));
        if (node.rule == Rule::Leaf) {
            CHECK(node.in_window);
            CHECK(in_barrel(r, QWeight(w)));
            CHECK(node.children.empty());
            continue;
        }
        CHECK(!node.in_window);
        CHECK(!node.children.empty());
        for (const auto& ch : node.children) {
            REQUIRE(c.nodes.count(ch) == 1);
            switch (node.rule) {
                case Rule::Step1Plus:
                case Rule::Step1Minus:
                    CHECK(alpha(w) > Rat(1));
                    CHECK(alpha(ch) < alpha(w));
                    break;
                case Rule::Step2a:
                case Rule::Step2b:
                    CHECK(r_meas(w) > Rat(1, 2));
                    CHECK(r_meas(ch) < r_meas(w));
                    CHECK(in_strip(r, QWeight(ch)));
                    break;
                case Rule::Step3a:
                case Rule::Step3b:
                    CHECK(r_meas(w) == Rat(1, 2));
                    CHECK(r_meas(ch) <= Rat(1, 2));
                    CHECK(alpha(ch) < alpha(w));
                    CHECK(in_strip(r, QWeight(ch)));
                    break;
                default:
                    FAIL("unexpected rule in a Fano certificate");
            }
        }
    }
    // Acyclicity via iterative DFS with colors.
    std::map<Weight, int> color;
    for (const auto& [w, node] : c.nodes) {
        if (color.count(w)) continue;
        std::vector<std::pair<Weight, size_t>> stack{{w, 0}};
        color[w] = 1;
        while (!stack.empty()) {
            auto& [cur, idx] = stack.back();
            const auto& kids = c.nodes.at(cur).children;
            if (idx == kids.size()) {
                color[cur] = 2;
                stack.pop_back();
                continue;
            }
            Weight next = kids[idx++];
            auto it = color.find(next);
            if (it == color.end()) {
                color[next] = 1;
                stack.push_back({next, 0});
            } else {
                CHECK(it->second == 2); // a gray child would be a cycle
            }
        }
    }
    for (const auto& s : c.seeds) CHECK(c.nodes.count(s) == 1);
}

} // namespace

TEST_CASE("mu_plus") {
    GroupSpec gl2 = GroupSpec::gl2();
    CHECK(mu_plus(gl2, Weight{0, 2}) == Weight{1, 1});
    CHECK(!mu_plus(gl2, Weight{0, 1}).has_value());
    CHECK(mu_plus(gl2, Weight{3, 1}) == Weight{3, 1});
    CHECK(mu_plus(GroupSpec::torus2(), Weight{0, 1}) == Weight{0, 1});
}

TEST_CASE("complex pieces: Grassmannian lambda0 subset sums") {
    auto pieces = complex_pieces(gr6(), ComplexKind::C, l0, Weight{4, 4});
    // mu = (4,4) - (i,j), 0 <= i,j <= 6, not both zero.
    CHECK(pieces.pieces.size() == 48);
    std::set<Weight> mus;
    for (const auto& p : pieces.pieces) mus.insert(p.mu);
    CHECK(mus.count(Weight{4, 3}) == 1);
    CHECK(mus.count(Weight{-2, -2}) == 1);
    CHECK(mus.count(Weight{4, 4}) == 0);
}

TEST_CASE("complex pieces: Sym3 example with a reflected mu_plus") {
    auto pieces =
        complex_pieces(sym3(), ComplexKind::C, Cochar{Rat(-1), Rat(1)}, Weight{0, 0});
    std::set<Weight> mus;
    for (const auto& p : pieces.pieces) mus.insert(p.mu);
    CHECK(mus == std::set<Weight>{{-2, -1}, {-3, 0}, {-5, -1}});
    for (const auto& p : pieces.pieces)
        if (p.mu == Weight{-3, 0}) CHECK(p.mu_plus == Weight{-1, -2});
}

TEST_CASE("complex pieces: empty eligible set and Dvee side") {
    auto none = complex_pieces(sym3(), ComplexKind::Dvee, l0, Weight{0, 0});
    CHECK(none.pieces.empty()); // nothing pairs positively with the central cocharacter
    auto dv = complex_pieces(sym3(), ComplexKind::Dvee, Cochar{Rat(-1), Rat(1)}, Weight{0, 0});
    std::set<Weight> mus;
    for (const auto& p : dv.pieces) mus.insert(p.mu);
    CHECK(mus == std::set<Weight>{{1, 2}, {0, 3}, {1, 5}});
}

TEST_CASE("complex pieces: closed mode admits the zero-pairing weights") {
    RepSpec s4 = sym4_torus();
    Cochar lp{Rat(-1), Rat(1)};
    auto strict = complex_pieces(s4, ComplexKind::Dvee, lp, Weight{0, 0}, SignMode::Strict);
    auto closed = complex_pieces(s4, ComplexKind::Dvee, lp, Weight{0, 0}, SignMode::Closed);
    CHECK(strict.pieces.size() < closed.pieces.size());
    bool has22 = false;
    for (const auto& p : closed.pieces)
        if (p.mu == Weight{2, 2}) has22 = true;
    CHECK(has22);
}

TEST_CASE("complex pieces budget") {
    std::vector<Weight> many;
    for (long long k = 1; k <= 21; ++k) many.push_back({-k, -k * k});
    RepSpec rep = RepSpec::torus(many);
    CHECK_THROWS_AS(complex_pieces(rep, ComplexKind::C, Cochar{Rat(1), Rat(0)}, Weight{0, 0}),
                    budget_error);
}

TEST_CASE("Figure 3 seed: the strip shrinks strictly at alpha = 7/3") {
    RepSpec s3 = sym3();
    WindowRegion r = region_at(s3, QWeight{Rat(0), Rat(0)});
    auto cert = reduce_fano(s3, r, {Weight{9, 5}});
    const CertNode& node = cert.nodes.at(Weight{9, 5});
    CHECK(node.rule == Rule::Step1Plus);
    CHECK(node.alpha == Rat(7, 3));
    std::set<Weight> kids(node.children.begin(), node.children.end());
    std::set<Weight> expect = {{9, 2}, {8, 3}, {7, 4}, {6, 5}, {8, 0}, {7, 1}, {6, 2},
                               {5, 3}, {4, 4}, {6, -1}, {5, 0}, {4, 1}, {3, 2}, {3, -1}};
    CHECK(kids == expect);
    for (const auto& ch : node.children) {
        Rat a = Rat(2) * pairing(l0, QWeight(ch)).abs() / Rat(12);
        CHECK(a < Rat(7, 3));
    }
    // The opposite side goes through the det-twisted complex.
    auto cert2 = reduce_fano(s3, r, {Weight{-7, -7}});
    CHECK(cert2.nodes.at(Weight{-7, -7}).rule == Rule::Step1Minus);
}

TEST_CASE("Figure 5 seed: Step 3a children") {
    RepSpec s3 = sym3();
    WindowRegion r = region_at(s3, QWeight{Rat(0), Rat(0)});
    auto cert = reduce_fano(s3, r, {Weight{3, 2}});
    const CertNode& node = cert.nodes.at(Weight{3, 2});
    CHECK(node.rule == Rule::Step3a);
    std::set<Weight> kids(node.children.begin(), node.children.end());
    CHECK(kids == std::set<Weight>{{1, 1}, {0, -1}});
}

TEST_CASE("seed already in the window is a leaf") {
    RepSpec g6 = gr6();
    WindowRegion r = region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)});
    auto cert = reduce_fano(g6, r, {Weight{0, 0}});
    CHECK(cert.nodes.at(Weight{0, 0}).rule == Rule::Leaf);
    CHECK(cert.nodes.at(Weight{0, 0}).in_window);
    CHECK(cert.nodes.size() == 1);
}

TEST_CASE("Fano coverage: Gr(2,6) reduces every dominant seed in the scan box") {
    RepSpec g6 = gr6();
    WindowRegion r = region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)});
    auto seeds = default_seeds(g6, r, Rat(2));
    CHECK(!seeds.empty());
    auto cert = reduce_fano(g6, r, seeds);
    validate_fano(g6, r, cert);
    CHECK(cert.leaf_count() > 0);
    bool used2 = false, used3 = false;
    for (const auto& [w, n] : cert.nodes) {
        used2 |= (n.rule == Rule::Step2a || n.rule == Rule::Step2b);
        used3 |= (n.rule == Rule::Step3a || n.rule == Rule::Step3b);
    }
    CHECK(used2);
    CHECK(used3);
}

TEST_CASE("Fano coverage: Sym3 reduces every dominant seed in the scan box") {
    RepSpec s3 = sym3();
    QWeight theta = find_generic_theta(s3, QWeight(anticanonical(s3)), l0);
    WindowRegion r = region_at(s3, theta);
    auto cert = reduce_fano(s3, r, default_seeds(s3, r, Rat(2)));
    validate_fano(s3, r, cert);
}

TEST_CASE("Fano coverage on a torus example") {
    RepSpec p1p1 = RepSpec::torus({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    QWeight theta = find_generic_theta(p1p1, QWeight(anticanonical(p1p1)), l0);
    WindowRegion r = region_at(p1p1, theta);
    auto cert = reduce_fano(p1p1, r, default_seeds(p1p1, r, Rat(2)));
    validate_fano(p1p1, r, cert);
}

TEST_CASE("non-dominant seeds are refused") {
    RepSpec g6 = gr6();
    WindowRegion r = region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)});
    CHECK_THROWS_AS(reduce_fano(g6, r, {Weight{0, 1}}), hypothesis_error);
}

TEST_CASE("nef reduction: Figure 6 seeds") {
    RepSpec s4 = sym4_torus();
    QWeight theta{Rat(-1, 10), Rat(1, 5)};
    WindowRegion r = region_at(s4, theta, RegionKind::Cylinder);
    REQUIRE(cylinder_boundary_free(r));
    QWeight dir{Rat(1), Rat(-1)};

    auto cert = reduce_nef_fano(s4, r, dir, {Weight{1, -5}});
    const CertNode& psi = cert.nodes.at(Weight{1, -5});
    CHECK(psi.rule == Rule::NefCase1);
    std::set<Weight> kids(psi.children.begin(), psi.children.end());
    std::set<Weight> expect = {{1, -1}, {2, -2}, {3, -3}, {2, 2}, {3, 1}, {4, 0}, {4, 4}};
    CHECK(kids == expect);

    auto cert2 = reduce_nef_fano(s4, r, dir, {Weight{-6, 0}});
    const CertNode& interior = cert2.nodes.at(Weight{-6, 0});
    CHECK(interior.rule == Rule::NefInterior2);
    std::set<Weight> kids2(interior.children.begin(), interior.children.end());
    CHECK(kids2 == std::set<Weight>{{-3, 1}, {-2, 0}, {1, 1}});
    // Children of the off-Psi facet piece drop strictly inside the enlarged cylinder.
    for (const auto& ch : interior.children) {
        Rat rr = Rat(2) * pairing(Cochar{Rat(-1), Rat(1)}, QWeight(ch) - theta).abs() / Rat(6);
        CHECK(rr < interior.aux);
    }

    auto leaf = reduce_nef_fano(s4, r, dir, {Weight{0, 0}});
    CHECK(leaf.nodes.at(Weight{0, 0}).rule == Rule::Leaf);
}

TEST_CASE("nef reduction: full seed box terminates with interior leaves") {
    RepSpec s4 = sym4_torus();
    QWeight theta = find_nef_theta(s4, QWeight{Rat(1), Rat(-1)}, l0);
    WindowRegion r = region_at(s4, theta, RegionKind::Cylinder);
    auto seeds = default_seeds(s4, r, Rat(2));
    auto cert = reduce_nef_fano(s4, r, QWeight{Rat(1), Rat(-1)}, seeds);
    CHECK(cert.leaf_count() > 0);
    for (const auto& [w, n] : cert.nodes) {
        if (n.rule != Rule::Leaf) continue;
        CHECK(in_cylinder(r, QWeight(w)));
        // Strict interior: the boundary is lattice-free.
        CHECK(pairing(r.lambda0, QWeight(w) - theta).abs() * Rat(2) < r.d0.eta);
        CHECK(pairing(r.lambda_prime, QWeight(w) - theta).abs() * Rat(2) < r.dplus.eta);
    }
    // Lattice sets of the closed cylinder and of the barrel coincide.
    std::set<Weight> cyl, barrel;
    for (const auto& row : classify_lattice(s4, r)) {
        if (row.cylinder) cyl.insert(row.chi);
        if (row.barrel) barrel.insert(row.chi);
    }
    CHECK(cyl == barrel);
}

TEST_CASE("nef reduction refuses a boundary-ridden theta") {
    RepSpec s4 = sym4_torus();
    WindowRegion r = region_at(s4, QWeight{Rat(-1, 8) * Rat(10), Rat(-1, 8) * Rat(10)},
                               RegionKind::Cylinder);
    CHECK_THROWS_AS(reduce_nef_fano(s4, r, QWeight{Rat(1), Rat(-1)}, {Weight{0, 0}}),
                    hypothesis_error);
}

TEST_CASE("certificate serialization round-trips") {
    RepSpec g6 = gr6();
    WindowRegion r = region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)});
    auto cert = reduce_fano(g6, r, default_seeds(g6, r, Rat(3, 2)));
    std::string text = cert.serialize();
    ReductionCertificate back = ReductionCertificate::parse(text);
    CHECK(back == cert);
    CHECK(back.serialize() == text);

    RepSpec s4 = sym4_torus();
    QWeight theta = find_nef_theta(s4, QWeight{Rat(1), Rat(-1)}, l0);
    WindowRegion rn = region_at(s4, theta, RegionKind::Cylinder);
    auto nef = reduce_nef_fano(s4, rn, QWeight{Rat(1), Rat(-1)},
                               default_seeds(s4, rn, Rat(3, 2)));
    CHECK(ReductionCertificate::parse(nef.serialize()) == nef);
}

TEST_CASE("Figure 4 seeds: both Step-2 cases") {
    RepSpec s3 = sym3();
    WindowRegion r = region_at(s3, QWeight{Rat(0), Rat(0)});
    auto cert = reduce_fano(s3, r, {Weight{5, -1}});
    const CertNode& a = cert.nodes.at(Weight{5, -1});
    CHECK(a.rule == Rule::Step2a);
    CHECK(a.aux == Rat(7, 4));
    std::set<Weight> ka(a.children.begin(), a.children.end());
    CHECK(ka == std::set<Weight>{{3, -2}, {2, -1}, {0, -2}});

    auto cert2 = reduce_fano(s3, r, {Weight{0, -6}});
    const CertNode& b = cert2.nodes.at(Weight{0, -6});
    CHECK(b.rule == Rule::Step2b);
    std::set<Weight> kb(b.children.begin(), b.children.end());
    CHECK(kb == std::set<Weight>{{1, -4}, {0, -3}, {1, -1}});
}
