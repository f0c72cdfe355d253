#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nbrw/amenability.hpp"
#include "nbrw/error.hpp"
#include "oracles.hpp"

using namespace nbrw;

namespace {

// Every witness must recompute to its stated Area and Vol.
void check_witnesses(const Multigraph& g, const IsoperimetricReport& rep)
{
    for (const auto& w : rep.upper_bounds) {
        std::vector<Vertex> set;
        for (const auto& label : w.set) set.push_back(g.vertex(label));
        const auto av = area_vol(g, set);
        CHECK(av.area == w.area);
        CHECK(av.vol == w.vol);
        // the bound covers only sets within the search scope
        if (w.set.size() <= static_cast<std::size_t>(rep.k)) CHECK(*rep.lower_bound_exact <= w.ratio());
    }
}

} // namespace

TEST_CASE("area and volume")
{
    const auto z2 = grid_z2();
    const auto one = area_vol(*z2, {"0,0"});
    CHECK(one.area == 4);
    CHECK(one.vol == 4);
    CHECK(one.ratio() == 1);
    const auto sq = area_vol(*z2, {"0,0", "1,0", "0,1", "1,1"});
    CHECK(sq.area == 8);
    CHECK(sq.vol == 16);

    const auto g = load_multigraph_text("loop a\nedge a b 2\n");
    const std::vector<Vertex> a{g.vertex("a")};
    CHECK(area_vol(g, a).area == 2);
    CHECK(area_vol(g, a).vol == 4);
    CHECK_THROWS_AS(area_vol(g, std::vector<Vertex>{7}), UnknownVertex);
    // stubs of a ball count as boundary
    const auto b = ball(*z2, "0,0", 1);
    const std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(area_vol(b.graph, all).area == area_vol(*z2, {"0,0", "1,0", "-1,0", "0,1", "0,-1"}).area);
}

TEST_CASE("finite graphs have zero isoperimetric constant")
{
    for (const auto& [name, g] : oracle::corpus()) {
        if (g.num_vertices() > 8) continue;
        const auto rep = iota_bruteforce(g, static_cast<int>(g.num_vertices()));
        REQUIRE(rep.lower_bound_exact.has_value());
        CHECK(*rep.lower_bound_exact == 0);
        check_witnesses(g, rep);
    }
    const auto pet = petersen_graph();
    const auto rep = iota_bruteforce(pet, 3);
    CHECK(sgn(*rep.lower_bound_exact) > 0);
    CHECK(rep.upper_bounds.back().area == 0);
    check_witnesses(pet, rep);
}

TEST_CASE("brute force against subset enumeration")
{
    // all subsets, connected or not
    for (const auto& [name, g] : oracle::corpus()) {
        const int n = static_cast<int>(g.num_vertices());
        if (n > 10) continue;
        CAPTURE(name);
        for (int k = 1; k <= n; ++k) {
            Rational best = 2;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) > k) continue;
                std::vector<Vertex> set;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) set.push_back(v);
                best = std::min(best, area_vol(g, set).ratio());
            }
            CHECK(*iota_bruteforce(g, k).lower_bound_exact == best);
        }
    }
}

TEST_CASE("minimum is non-increasing in k")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto g = random_multigraph(12, seed);
        Rational prev = 2;
        for (int k = 1; k <= 7; ++k) {
            const auto rep = iota_bruteforce(g, k);
            CHECK(*rep.lower_bound_exact <= prev);
            prev = *rep.lower_bound_exact;
            check_witnesses(g, rep);
        }
    }
}

TEST_CASE("tree ball, k = 10: every set has ratio at least 1/2")
{
    const auto b = ball(*regular_tree(4), "1", 6);
    IotaOptions opt;
    opt.anchor = b.center;
    const auto rep = iota_bruteforce(b.graph, 10, opt);
    // a subtree on m vertices has Area 4m - 2(m-1), Vol 4m
    CHECK(*rep.lower_bound_exact == fraction<Rational>(4 * 10 - 2 * 9, 4 * 10));
    CHECK(rep.upper_bounds.front().set.size() == 10);
    check_witnesses(b.graph, rep);
}

TEST_CASE("grid ball, k <= 10: square-like minimisers")
{
    const auto b = ball(*grid_z2(), "0,0", 6);
    IotaOptions opt;
    opt.anchor = b.center;
    // rectangles: Area = 2(w + h), Vol = 4wh
    const std::vector<std::pair<int, Rational>> expected{
        {1, Rational(1)}, {2, Rational(3, 4)}, {4, Rational(1, 2)}, {6, Rational(5, 12)}, {9, Rational(1, 3)},
        {10, Rational(1, 3)}};
    Rational prev = 2;
    for (const auto& [k, value] : expected) {
        const auto rep = iota_bruteforce(b.graph, k, opt);
        CHECK(*rep.lower_bound_exact == value);
        CHECK(*rep.lower_bound_exact <= prev);
        prev = *rep.lower_bound_exact;
        check_witnesses(b.graph, rep);
    }
}

TEST_CASE("enumeration budget")
{
    const auto b = ball(*grid_z2(), "0,0", 6);
    IotaOptions opt;
    opt.budget = 100;
    CHECK_THROWS_AS(iota_bruteforce(b.graph, 10, opt), BudgetExceeded);
    CHECK_THROWS_AS(iota_bruteforce(b.graph, 0), BadParams);
}

TEST_CASE("Folner trend")
{
    const auto z2 = folner_trend(*grid_z2(), "0,0", 40);
    REQUIRE(z2.size() == 41);
    CHECK(z2[0].ratio == 1.0);
    CHECK(z2[40].ratio < 0.1);
    for (std::size_t r = 2; r < z2.size(); ++r) CHECK(z2[r].ratio < z2[r - 1].ratio);
    // B(0,r) has 2r^2+2r+1 points and 4(2r+1) boundary edges
    for (int r = 0; r <= 40; ++r) {
        CHECK(z2[r].vol == 4 * (2 * r * r + 2 * r + 1));
        CHECK(z2[r].area == 4 * (2 * r + 1));
    }

    const auto tree = folner_trend(*regular_tree(4), "1", 8);
    for (const auto& p : tree) CHECK(p.ratio >= 0.5);

    const auto loops = folner_trend(load_multigraph_text("loop a\nedge a b 2\n"), 0, 1);
    CHECK(loops[0].ratio == 0.5);
    CHECK(loops[1].ratio == 0.0);
}

TEST_CASE("diagnose: lattice")
{
    const auto d = diagnose(*grid_z2(), "0,0", 200, 40, 10);
    CHECK(d.prerequisite_verified);
    CHECK(d.verdict == Verdict::consistent_amenable);
    CHECK(d.rho_estimate.value >= 0.95);
    CHECK(d.iota_report.folner_trend.back().ratio < 0.1);
    CHECK(d.folner_to_zero);
}

TEST_CASE("diagnose: free group is a tree")
{
    const auto d = diagnose(*free_group(2), "1", 12, 8, 8);
    CHECK_FALSE(d.prerequisite_verified);
    CHECK(d.verdict == Verdict::inconclusive);
    bool noted = false;
    for (const auto& n : d.notes) noted |= n.find("PrerequisiteUnverified") != std::string::npos;
    CHECK(noted);
    CHECK(d.iota_positive);
    CHECK_FALSE(d.folner_to_zero);
    REQUIRE(d.rho_estimate.exact_value.has_value());
    CHECK(*d.rho_estimate.exact_value == Rational(1, 3));
}

TEST_CASE("diagnose rejects finite graphs")
{
    CHECK_THROWS_AS(diagnose(AnyGraph(complete_graph(4)), "0", 10, 2, 3), BadParams);
    CHECK_THROWS_AS(diagnose(*grid_z2(), "0,0", 0, 2, 3), BadParams);
}

TEST_CASE("diagnose: free product of two triangles")
{
    DiagnoseOptions opt;
    opt.max_ball_vertices = 100000;
    const auto d = diagnose(*z3_free_product(), "1", 200, 10, 8, opt);
    CHECK(d.prerequisite_verified);
    CHECK(d.small_cycle_radius == 1);
    CHECK(d.verdict == Verdict::consistent_nonamenable);
    CHECK(d.rho_estimate.value <= 0.9);
    CHECK(d.rho_estimate.n_used < 200);
    CHECK(d.iota_positive);
}
