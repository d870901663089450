#include "gitwin/window.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gitwin;

namespace {

RepSpec gr(long long n) { return RepSpec::gl2_standard_power(n); }
RepSpec sym3_gl2() { return RepSpec::gl2({{3, 0}}); }
RepSpec sym4_torus() { return RepSpec::torus({{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}); }

const Cochar l0{Rat(-1), Rat(-1)};

WindowRegion region_at(const RepSpec& rep, const QWeight& theta) {
    return make_region(rep, theta, QWeight(anticanonical(rep)), l0);
}

std::set<Weight> barrel_lattice(const RepSpec& rep, const WindowRegion& r) {
    std::set<Weight> out;
    for (const auto& row : classify_lattice(rep, r))
        if (row.barrel) out.insert(row.chi);
    return out;
}

// The Figure-1 barrel set at theta = 0.
const std::vector<Weight> fig1_red = {
    {-1, 1},  {-2, -1}, {-1, 0},  {0, 1},   {1, 2},  {-1, -1}, {0, 0},  {1, 1},  {2, 2},
    {-1, -2}, {0, -1},  {1, 0},   {2, 1},   {1, -1}, {0, 2},   {2, 0},  {-2, 0}, {0, -2},
    {-2, -2}, {-3, -2}, {-2, -3}, {-3, -3}, {3, 3},  {2, 3},   {3, 2}};
// Cylinder points excluded from the barrel at theta = 0.
const std::vector<Weight> fig1_cross = {{-3, -1}, {-1, -3}, {-4, -2}, {-2, -4},
                                        {3, 1},   {1, 3},   {4, 2},   {2, 4}};

} // namespace

TEST_CASE("destabilization tables of the bundled examples") {
    RepSpec g6 = gr(6);
    auto d0 = destab_data(g6, l0);
    CHECK(d0.zeta == Weight{-6, -6});
    CHECK(d0.eta == Rat(12));
    auto dp = destab_data(g6, Cochar{Rat(-1), Rat(1)});
    CHECK(dp.zeta == Weight{-5, -1});
    CHECK(dp.eta == Rat(4));
    auto dm = destab_data(g6, Cochar{Rat(1), Rat(-1)});
    CHECK(dm.zeta == Weight{-1, -5});
    CHECK(dm.eta == Rat(4));

    RepSpec g10 = gr(10);
    CHECK(destab_data(g10, l0).eta == Rat(20));
    CHECK(destab_data(g10, Cochar{Rat(-1), Rat(1)}).zeta == Weight{-9, -1});
    CHECK(destab_data(g10, Cochar{Rat(-1), Rat(1)}).eta == Rat(8));

    RepSpec s3 = sym3_gl2();
    CHECK(destab_data(s3, Cochar{Rat(-1), Rat(1)}).zeta == Weight{-4, -2});
    CHECK(destab_data(s3, Cochar{Rat(1), Rat(-1)}).zeta == Weight{-2, -4});
    CHECK(destab_data(s3, Cochar{Rat(-1), Rat(1)}).eta == Rat(2));
    CHECK(destab_data(s3, l0).eta == Rat(12));

    RepSpec s4 = sym4_torus();
    CHECK(destab_data(s4, l0).eta == Rat(20));
    CHECK(destab_data(s4, Cochar{Rat(-1), Rat(1)}).eta == Rat(6));
}

TEST_CASE("eta agrees with the min-sum formula and scales under positive rescaling") {
    for (const RepSpec& rep : {gr(6), sym3_gl2(), sym4_torus()}) {
        for (const Cochar& lam :
             {l0, Cochar{Rat(-1), Rat(1)}, Cochar{Rat(2), Rat(-3)}, Cochar{Rat(0), Rat(-1)}}) {
            DestabData d = destab_data(rep, lam);
            Rat eta;
            for (const auto& b : rep.weights) {
                Rat p = pairing(lam, b);
                if (p.sign() < 0) eta -= p;
            }
            for (const auto& a : rep.group.roots()) {
                Rat p = pairing(lam, a);
                if (p.sign() < 0) eta += p;
            }
            CHECK(d.eta == eta);
            DestabData scaled = destab_data(rep, Rat(3) * lam);
            CHECK(scaled.zeta == d.zeta);
            CHECK(scaled.eta == Rat(3) * d.eta);
        }
        // eta0 = -<lambda0, det X> for the central cocharacter.
        CHECK(destab_data(rep, l0).eta == -pairing(l0, anticanonical(rep)));
    }
}

TEST_CASE("strip membership") {
    WindowRegion r = region_at(gr(6), QWeight{Rat(0), Rat(0)});
    CHECK(in_strip(r, QWeight{Rat(3), Rat(3)}));
    CHECK(!in_strip(r, QWeight{Rat(4), Rat(3)}));
    CHECK(in_strip(r, r.theta));
}

TEST_CASE("Figure 1 at theta = 0: barrel and cylinder classification") {
    WindowRegion r = region_at(gr(6), QWeight{Rat(0), Rat(0)});
    for (const auto& w : fig1_red) {
        CHECK(in_cylinder(r, QWeight(w)));
        CHECK(in_barrel(r, QWeight(w)));
    }
    for (const auto& w : fig1_cross) {
        CHECK(in_cylinder(r, QWeight(w)));
        CHECK(!in_barrel(r, QWeight(w)));
    }
    // The whole lattice barrel set is exactly the red list.
    std::set<Weight> expect(fig1_red.begin(), fig1_red.end());
    CHECK(barrel_lattice(gr(6), r) == expect);
    CHECK(in_barrel(r, r.theta));
}

TEST_CASE("Figure 1 right panel: theta = -omega*/24 removes exactly (3,3)") {
    WindowRegion r = region_at(gr(6), QWeight{Rat(-1, 4), Rat(-1, 4)});
    std::set<Weight> expect(fig1_red.begin(), fig1_red.end());
    expect.erase(Weight{3, 3});
    CHECK(barrel_lattice(gr(6), r) == expect);
    CHECK(!in_barrel(r, QWeight{Rat(3), Rat(3)}));
}

TEST_CASE("barrel inside cylinder inside strip on a lattice scan") {
    for (const QWeight& theta : {QWeight{Rat(0), Rat(0)}, QWeight{Rat(-1, 4), Rat(-1, 4)},
                                 QWeight{Rat(-3, 4), Rat(-3, 4)}}) {
        WindowRegion r = region_at(gr(6), theta);
        for (const auto& row : classify_lattice(gr(6), r)) {
            if (row.barrel) CHECK(row.cylinder);
            if (row.cylinder) CHECK(row.strip);
        }
    }
}

TEST_CASE("rank-2 symmetry eta_{+lambda'} = eta_{-lambda'} for the bundled reps") {
    for (const RepSpec& rep : {gr(6), gr(10), sym3_gl2(), sym4_torus()}) {
        WindowRegion r = region_at(rep, QWeight{Rat(0), Rat(0)});
        CHECK(r.dplus.eta == r.dminus.eta);
    }
}

TEST_CASE("GL2 window lattice set is Weyl stable for invariant theta") {
    WindowRegion r = region_at(gr(6), QWeight{Rat(-3, 4), Rat(-3, 4)});
    auto pts = barrel_lattice(gr(6), r);
    for (const auto& w : pts) CHECK(pts.count(weyl_reflect(w)) == 1);
}

TEST_CASE("genericity: exact test with witness, against a box-scan oracle") {
    RepSpec g6 = gr(6);
    WindowRegion r0 = region_at(g6, QWeight{Rat(0), Rat(0)});
    GenericityReport g = check_generic(r0);
    CHECK(!g.is_generic);
    REQUIRE(g.witness.has_value());
    // The witness sits on the named hyperplane.
    Weight zeta = g.witness_hyperplane == "zeta(+lambda')"   ? r0.dplus.zeta
                  : g.witness_hyperplane == "zeta(-lambda')" ? r0.dminus.zeta
                                                             : -r0.det_x;
    QWeight diff = QWeight(*g.witness) - r0.theta - Rat(1, 2) * QWeight(zeta);
    CHECK(pairing(r0.lambda0, diff) == Rat(0));

    WindowRegion r1 = region_at(g6, QWeight{Rat(-1, 4), Rat(-1, 4)});
    CHECK(check_generic(r1).is_generic);

    // Box-scan oracle: genericity equals the absence of violations in a box
    // wide enough to contain a witness whenever one exists.
    for (const QWeight& theta :
         {QWeight{Rat(0), Rat(0)}, QWeight{Rat(-1, 4), Rat(-1, 4)},
          QWeight{Rat(-1, 8), Rat(-1, 8)}, QWeight{Rat(-3, 4), Rat(-3, 4)}}) {
        WindowRegion r = region_at(g6, theta);
        bool scan_generic = true;
        for (long long a = -12; a <= 12 && scan_generic; ++a)
            for (long long b = -12; b <= 12 && scan_generic; ++b)
                for (const Weight& z : {r.dplus.zeta, r.dminus.zeta, -r.det_x}) {
                    QWeight d = QWeight(Weight{a, b}) - theta - Rat(1, 2) * QWeight(z);
                    if (pairing(r.lambda0, d).is_zero()) {
                        scan_generic = false;
                        break;
                    }
                }
        CHECK(check_generic(r).is_generic == scan_generic);
    }
}

TEST_CASE("automatic theta search") {
    RepSpec g6 = gr(6);
    QWeight theta = find_generic_theta(g6, QWeight(anticanonical(g6)), l0);
    CHECK(theta == QWeight{Rat(-3, 4), Rat(-3, 4)}); // s = -1/8 is the first generic value
    CHECK(check_generic(region_at(g6, theta)).is_generic);

    RepSpec g10 = gr(10);
    QWeight theta10 = find_generic_theta(g10, QWeight(anticanonical(g10)), l0);
    CHECK(theta10 == QWeight{Rat(-5, 3), Rat(-5, 3)}); // s = -1/6
    CHECK(check_generic(region_at(g10, theta10)).is_generic);
}

TEST_CASE("window collection sizes match the K-theory counts") {
    RepSpec g10 = gr(10);
    QWeight theta10 = find_generic_theta(g10, QWeight(anticanonical(g10)), l0);
    CHECK(enumerate_window_irreps(g10, region_at(g10, theta10)).size() == 45);

    RepSpec g6 = gr(6);
    QWeight theta6 = find_generic_theta(g6, QWeight(anticanonical(g6)), l0);
    CHECK(enumerate_window_irreps(g6, region_at(g6, theta6)).size() == 15);
    // Same count for the Figure-1 shift.
    CHECK(enumerate_window_irreps(g6, region_at(g6, QWeight{Rat(-1, 4), Rat(-1, 4)})).size() ==
          15);
}

TEST_CASE("window enumeration ordering: lambda0-weight descends, ties lexicographic") {
    RepSpec g6 = gr(6);
    auto labels = enumerate_window_irreps(g6, region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)}));
    for (size_t i = 1; i < labels.size(); ++i) {
        Rat prev = pairing(l0, labels[i - 1].highest_weight);
        Rat cur = pairing(l0, labels[i].highest_weight);
        CHECK(cur <= prev);
        if (cur == prev) CHECK(labels[i - 1].highest_weight < labels[i].highest_weight);
    }
}

TEST_CASE("non-spanning weights refuse enumeration") {
    RepSpec degenerate = RepSpec::torus({{-1, -1}, {-2, -2}});
    WindowRegion r = make_region(degenerate, QWeight{Rat(0), Rat(0)},
                                 QWeight(anticanonical(degenerate)), Cochar{Rat(1), Rat(1)});
    CHECK_THROWS_AS(enumerate_window_irreps(degenerate, r), hypothesis_error);
}

TEST_CASE("perturbed cylinder: t = 0 is the cylinder; membership is monotone in t") {
    RepSpec g6 = gr(6);
    WindowRegion r = region_at(g6, QWeight{Rat(-3, 4), Rat(-3, 4)});
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            QWeight chi{Rat(a), Rat(b)};
            CHECK(in_perturbed_cylinder(r, Rat(0), chi) == in_cylinder(r, chi));
            if (!in_cylinder(r, chi)) continue;
            // Membership at a larger t implies membership at every smaller t.
            bool prev = in_perturbed_cylinder(r, Rat(1, 2), chi);
            for (long long k = 2; k <= 8; ++k) {
                bool cur = in_perturbed_cylinder(r, Rat(1, 1LL << k), chi);
                if (prev) CHECK(cur);
                prev = cur;
            }
        }
}

TEST_CASE("perturbed cylinder lattice set stabilizes to the barrel set") {
    RepSpec g6 = gr(6);
    for (const QWeight& theta :
         {QWeight{Rat(-3, 4), Rat(-3, 4)}, QWeight{Rat(-1, 4), Rat(-1, 4)}}) {
        WindowRegion r = region_at(g6, theta);
        REQUIRE(check_generic(r).is_generic);
        std::set<Weight> barrel = barrel_lattice(g6, r);
        bool stabilized = false;
        for (long long k = 1; k <= 12; ++k) {
            std::set<Weight> cur;
            for (const auto& row : classify_lattice(g6, r))
                if (in_perturbed_cylinder(r, Rat(1, 1LL << k), QWeight(row.chi)))
                    cur.insert(row.chi);
            stabilized = (cur == barrel);
        }
        CHECK(stabilized); // the tail of the t-grid equals the barrel set
    }
}

TEST_CASE("nef theta search yields a boundary-free cylinder") {
    RepSpec s4 = sym4_torus();
    QWeight theta = find_nef_theta(s4, QWeight{Rat(1), Rat(-1)}, l0);
    WindowRegion r =
        make_region(s4, theta, QWeight(anticanonical(s4)), l0, RegionKind::Cylinder);
    CHECK(cylinder_boundary_free(r));
    CHECK(!enumerate_nef_window(s4, r).empty());
    // theta = s*omega* is always obstructed here: eta' = 6 leaves lattice
    // points on the lambda'-facets.
    WindowRegion bad = make_region(s4, Rat(-1, 8) * QWeight(anticanonical(s4)),
                                   QWeight(anticanonical(s4)), l0, RegionKind::Cylinder);
    CHECK(!cylinder_boundary_free(bad));
}

TEST_CASE("classification csv shape") {
    RepSpec g6 = gr(6);
    WindowRegion r = region_at(g6, QWeight{Rat(0), Rat(0)});
    std::string csv = classification_csv(classify_lattice(g6, r));
    CHECK(csv.rfind("a,b,in_strip,in_cylinder,in_barrel,dominant\n", 0) == 0);
    CHECK(csv.find("3,3,1,1,1,1\n") != std::string::npos);
    CHECK(csv.find("3,1,1,1,0,1\n") != std::string::npos);
}

TEST_CASE("region kinds dispatch membership") {
    RepSpec g6 = gr(6);
    QWeight theta{Rat(-3, 4), Rat(-3, 4)};
    QWeight omega(anticanonical(g6));
    WindowRegion strip = make_region(g6, theta, omega, l0, RegionKind::Strip);
    WindowRegion cyl = make_region(g6, theta, omega, l0, RegionKind::Cylinder);
    WindowRegion barrel = make_region(g6, theta, omega, l0, RegionKind::Barrel);
    WindowRegion big = make_region(g6, theta, omega, l0, RegionKind::EnlargedCylinder, Rat(2));
    WindowRegion pert =
        make_region(g6, theta, omega, l0, RegionKind::PerturbedCylinder, Rat(1, 4));
    for (long long a = -8; a <= 8; ++a)
        for (long long b = -8; b <= 8; ++b) {
            QWeight chi{Rat(a), Rat(b)};
            CHECK(in_region(strip, chi) == in_strip(strip, chi));
            CHECK(in_region(cyl, chi) == in_cylinder(cyl, chi));
            CHECK(in_region(barrel, chi) == in_barrel(barrel, chi));
            CHECK(in_region(big, chi) == in_enlarged_cylinder(big, Rat(2), chi));
            CHECK(in_region(pert, chi) == in_perturbed_cylinder(pert, Rat(1, 4), chi));
            if (in_region(cyl, chi)) CHECK(in_region(big, chi));
        }
    CHECK_THROWS_AS(make_region(g6, theta, omega, l0, RegionKind::EnlargedCylinder, Rat(1, 2)),
                    hypothesis_error);
}

TEST_CASE("Sym^3 window collection size") {
    RepSpec s3 = sym3_gl2();
    QWeight theta = find_generic_theta(s3, QWeight(anticanonical(s3)), l0);
    CHECK(enumerate_window_irreps(s3, region_at(s3, theta)).size() == 9);
}
