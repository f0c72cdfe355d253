#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nbrw/error.hpp"
#include "nbrw/walks.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace nbrw;

namespace {

std::vector<Rational> q_exact(const Multigraph& g, Vertex x, int n) { return nbrw_nstep<Rational>(g, x, n).values; }

} // namespace

TEST_CASE("n-step examples")
{
    const auto bf = butterfly_graph();
    const Vertex x = bf.vertex("x");
    for (int n : {3, 6, 9, 30, 90}) CHECK(q_exact(bf, x, n)[x] == 1);

    const auto c5 = cycle_graph(5);
    const auto q = q_exact(c5, 0, 2);
    CHECK(q[2] == Rational(1, 2));
    CHECK(q[3] == Rational(1, 2));
    CHECK(q[0] + q[1] + q[4] == 0);

    const auto k4 = q_exact(complete_graph(4), 0, 2);
    CHECK(k4[0] == 0);
    for (Vertex y = 1; y < 4; ++y) CHECK(k4[y] == Rational(1, 3));

    const auto z = q_exact(petersen_graph(), 4, 0);
    CHECK(z[4] == 1);
    CHECK_THROWS_AS(nbrw_nstep_source<Rational>(*grid_z2(), "x", 2), UnknownVertex);
}

TEST_CASE("exhaustive path enumeration agrees exactly")
{
    for (const auto& [name, g] : oracle::corpus()) {
        if (g.num_vertices() > 8) continue;
        CAPTURE(name);
        for (Vertex x = 0; x < static_cast<Vertex>(g.num_vertices()); ++x)
            for (int n = 0; n <= 6; ++n) CHECK(q_exact(g, x, n) == oracle::nbrw_bruteforce(g, x, n));
    }
}

TEST_CASE("matrix powers agree with the pushed edge distribution")
{
    for (const auto& [name, g] : oracle::corpus()) {
        const NbrwKernel k(g);
        for (int n : {0, 1, 4, 7}) CHECK(nbrw_nstep<Rational>(k, 0, n).values == nbrw_nstep_from_powers<Rational>(k, 0, n).values);
    }
}

TEST_CASE("probability conservation and first step")
{
    for (const auto& [name, g] : oracle::corpus()) {
        const NbrwKernel k(g);
        const auto traj = nbrw_trajectory<Rational>(k, 0, 15);
        for (const auto& d : traj) {
            CHECK(d.total() == 1);
            for (const auto& v : d.values) CHECK(sgn(v) >= 0);
        }
        const auto srw = srw_nstep<Rational>(g, 0, 1).values;
        CHECK(traj[1].values == srw);
        for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y)
            CHECK(srw[y] == fraction<Rational>(g.multiplicity(0, y), g.degree(0)));
        for (const auto& d : srw_trajectory<Rational>(g, 0, 10)) CHECK(d.total() == 1);
        const auto fl = nbrw_trajectory<double>(k, 0, 200);
        for (const auto& d : fl) CHECK(std::abs(d.total() - 1.0) <= 1e-12);
    }
}

TEST_CASE("limit profile: regular non-bipartite")
{
    const auto k4 = complete_graph(4);
    const auto p = nbrw_limit_profile<double>(k4, 0, 200);
    CHECK(p.period == 1);
    for (Vertex y = 0; y < 4; ++y) CHECK(p.residue_limits[y][0] == Rational(1, 4));
    CHECK(p.max_final_residual <= 1e-8);
    CHECK(p.converged_at.has_value());

    const auto pet = nbrw_limit_profile<double>(petersen_graph(), 0, 200);
    for (Vertex y = 0; y < 10; ++y) CHECK(pet.residue_limits[y][0] == Rational(1, 10));
    CHECK(pet.max_final_residual <= 1e-8);
}

TEST_CASE("limit profile: bipartite")
{
    const auto g = complete_bipartite(3, 3);
    const auto p = nbrw_limit_profile<double>(g, 0, 200);
    REQUIRE(p.period == 2);
    const auto d = bfs_distances(g, 0);
    for (Vertex y = 0; y < 6; ++y) {
        CHECK(p.residue_limits[y][d[y] % 2] == Rational(1, 3));
        CHECK(p.residue_limits[y][(d[y] + 1) % 2] == 0);
    }
    CHECK(p.max_final_residual <= 1e-8);
}

TEST_CASE("limit profile: butterfly residue classes and Cesaro means")
{
    const auto g = butterfly_graph();
    const Vertex x = g.vertex("x");
    const Vertex y = g.vertex("y");
    const auto p = nbrw_limit_profile<Rational>(g, y, 120);
    REQUIRE(p.period == 3);
    CHECK(p.residue_limits[y] == std::vector<Rational>{Rational(1, 4), Rational(1, 8), Rational(1, 8)});
    CHECK(p.cesaro_targets[y] == Rational(1, 6));
    CHECK(p.max_final_residual <= 1e-6);

    // started at x the walk is back at x every third step
    const auto px = nbrw_limit_profile<Rational>(g, x, 30);
    CHECK(px.residue_limits[x] == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(px.residue_limits[y] == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 4)});
    CHECK(px.max_final_residual == 0.0);

    for (Vertex s : {x, y}) {
        const auto pd = nbrw_limit_profile<double>(g, s, 3000);
        CHECK(pd.max_final_cesaro_residual <= 1e-3);
    }
}

TEST_CASE("SRW limits")
{
    const auto k4 = srw_limit_profile<double>(complete_graph(4), 0, 100);
    CHECK(k4.max_final_residual <= 1e-12);
    for (Vertex y = 0; y < 4; ++y) CHECK(k4.residue_limits[y][0] == Rational(1, 4));

    const auto c4 = srw_limit_profile<double>(cycle_graph(4), 0, 200);
    REQUIRE(c4.period == 2);
    CHECK(c4.residue_limits[0][0] == Rational(1, 2));
    CHECK(c4.residue_limits[0][1] == 0);
    CHECK(c4.max_final_residual <= 1e-12);

    const auto p0 = srw_nstep<Rational>(petersen_graph(), 7, 0).values;
    CHECK(p0[7] == 1);
    CHECK(std::count(p0.begin(), p0.end(), Rational(0)) == 9);

    // non-regular: target in y is deg(y)/|E|
    const auto bf = butterfly_graph();
    const auto pb = srw_limit_profile<double>(bf, bf.vertex("y"), 300);
    CHECK(pb.residue_limits[bf.vertex("x")][0] == Rational(1, 3));
    CHECK(pb.max_final_residual <= 1e-10);
}

TEST_CASE("spectral radius on finite graphs is one")
{
    const auto pet = petersen_graph();
    const auto e = spectral_radius_nbrw(pet, 0, 3, 60);
    CHECK(e.value == 1.0);
    CHECK(e.method == SpectralMethod::exact_eigen);
    for (const auto& [name, g] : oracle::corpus()) {
        CHECK(spectral_radius_nbrw(g, 0, static_cast<Vertex>(g.num_vertices() - 1), 30).value == 1.0);
        CHECK(spectral_radius_srw(g).value == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(spectral_radius_srw(cycle_graph(6)).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("root test estimator")
{
    std::vector<Rational> a(40, Rational(0));
    for (int n = 2; n < 40; n += 2) {
        a[n] = Rational(1, 1) / (BigInt(1) << n);
    }
    const auto e = root_test_estimate(std::span<const Rational>(a));
    CHECK(e.method == SpectralMethod::geometric_ratio);
    CHECK(e.residue_class == 2);
    CHECK(e.value == doctest::Approx(0.5));

    std::vector<double> z(10, 0.0);
    CHECK_THROWS_AS(root_test_estimate(std::span<const double>(z)), AllZero);
}

TEST_CASE("tree: exact coefficients along a ray and rho = 1/3")
{
    const auto fg = free_group(2);
    const auto ray = [](int n) { return std::string(static_cast<std::size_t>(n), 'a'); };
    const auto seq = nbrw_source_sequence<Rational>(*fg, "1", [&](int n) { return n == 0 ? std::string("1") : ray(n); }, 9);
    for (int n = 1; n <= 9; ++n) {
        Rational expected(1, 4);
        for (int i = 1; i < n; ++i) expected /= 3;
        CHECK(seq[n] == expected);
    }
    SourceWalkOptions exact{NumericMode::rational, 200000};
    const auto e = spectral_radius_nbrw_ray(*fg, "1", [&](int n) { return n == 0 ? std::string("1") : ray(n); }, 9, exact);
    REQUIRE(e.exact_value.has_value());
    CHECK(*e.exact_value == Rational(1, 3));
    // another pair, another ray: same value
    const auto e2 = spectral_radius_nbrw_ray(*fg, "1", [](int n) {
        std::string w;
        for (int i = 0; i < n; ++i) w += i % 2 ? 'b' : 'A';
        return n == 0 ? std::string("1") : w;
    }, 8, exact);
    REQUIRE(e2.exact_value.has_value());
    CHECK(*e2.exact_value == Rational(1, 3));
    // no closed non-backtracking walks in a tree
    const auto back = nbrw_nstep_source<Rational>(*fg, "1", 6);
    CHECK(back.count("1") == 0);
}

TEST_CASE("grid: return probabilities decay, rho estimate near one")
{
    const auto z2 = grid_z2();
    const auto seq = nbrw_source_sequence<double>(*z2, "0,0", [](int) { return std::string("0,0"); }, 200);
    // Frozen from an independent direction-state iteration on the lattice;
    // the local limit theorem gives about 1/(200 pi).
    CHECK(seq[200] == doctest::Approx(0.0015835929805865945).epsilon(1e-9));
    CHECK(seq[200] == doctest::Approx(1.0 / (200.0 * M_PI)).epsilon(0.02));
    CHECK(seq[200] < seq[100]);
    CHECK(seq[100] < seq[50]);
    const auto e = spectral_radius_nbrw(*z2, "0,0", "0,0", 200);
    CHECK(e.value >= 0.95);
    CHECK(e.value <= 1.0);
    CHECK(e.n_used == 200);
}

TEST_CASE("SRW on the 4-regular tree stays below the Kesten value")
{
    const double kesten = 2.0 * std::sqrt(3.0) / 4.0;
    const auto e = spectral_radius_srw(*regular_tree(4), "1", 20);
    CHECK(e.value <= kesten + 1e-12);
    CHECK(e.value >= 0.7);
}

TEST_CASE("operator norm of the edge kernel is one")
{
    for (const auto& g : {complete_graph(4), cycle_graph(6), butterfly_graph(), petersen_graph()})
        CHECK(std::abs(qe_operator_norm(NbrwKernel(g)).value - 1.0) <= 1e-10);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(std::abs(qe_operator_norm(NbrwKernel(random_multigraph(9, seed))).value - 1.0) <= 1e-10);
}

TEST_CASE("Monte Carlo")
{
    const auto bf = butterfly_graph();
    const NbrwKernel kb(bf);
    const auto mb = monte_carlo_nbrw(kb, bf.vertex("x"), 3, 2000, 5);
    CHECK(mb.counts[bf.vertex("x")] == 2000);

    const auto k4 = complete_graph(4);
    const NbrwKernel k(k4);
    const auto exact = nbrw_nstep<double>(k, 0, 2).values;
    const auto mc = monte_carlo_nbrw(k, 0, 2, 100000, 2024);
    CHECK(total_variation(exact, mc.frequencies) <= 0.02);
    const auto again = monte_carlo_nbrw(k, 0, 2, 100000, 2024);
    CHECK(again.counts == mc.counts);

    const auto m0 = monte_carlo_nbrw(k, 2, 0, 10, 1);
    CHECK(m0.counts[2] == 10);
}

TEST_CASE("uniform irreducibility")
{
    const NbrwKernel k4(complete_graph(4));
    const auto r = uniform_irreducibility_check(k4, 9, std::pow(2.0, -9));
    CHECK(r.feasible);
    CHECK(r.turnaround_L == 4);
    CHECK(r.predicted_K == 9);
    CHECK(r.attained_epsilon >= std::pow(2.0, -9));
    REQUIRE(r.minimal_K.has_value());
    CHECK(*r.minimal_K <= 9);

    const auto c6 = uniform_irreducibility_check(NbrwKernel(cycle_graph(6)), 50, 1e-9);
    CHECK_FALSE(c6.feasible);
    CHECK_FALSE(c6.solg_connected);
    REQUIRE(c6.failing_pair.has_value());
    CHECK(c6.failing_pair->second == OrientedEdgeSpace::reverse(c6.failing_pair->first));

    const NbrwKernel pk(petersen_graph());
    const auto L = turnaround_bound(pk);
    REQUIRE(L.has_value());
    const auto pr = uniform_irreducibility_check(pk, 2 * *L + 1, std::pow(2.0, -(2 * *L + 1)));
    CHECK(pr.feasible);
    CHECK(pr.minimal_K.has_value());
}
