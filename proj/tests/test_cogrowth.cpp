#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nbrw/cogrowth.hpp"
#include "nbrw/error.hpp"
#include "oracles.hpp"

using namespace nbrw;

TEST_CASE("sphere counts")
{
    const auto bf = butterfly_graph();
    const Vertex x = bf.vertex("x");
    const auto s = sphere_counts(bf, x, 3);
    CHECK(s.totals == std::vector<BigInt>{1, 4, 4, 4});
    CHECK(s.by_vertex[3][x] == 4);
    CHECK(s.by_vertex[0][x] == 1);

    const auto fg = free_group(2);
    const auto series = cogrowth_series<Rational>(*fg, "1", "1", 6, CogrowthMode::ordinary);
    CHECK(series.sphere_sizes == std::vector<BigInt>{1, 4, 12, 36, 108, 324, 972});
}

TEST_CASE("sphere counts match path enumeration")
{
    for (const auto& [name, g] : oracle::corpus()) {
        if (g.num_vertices() > 8) continue;
        CAPTURE(name);
        const auto s = sphere_counts(g, 0, 6);
        for (int n = 0; n <= 6; ++n) {
            const auto counts = oracle::nb_path_counts(g, 0, n);
            BigInt total = 0;
            for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y) {
                CHECK(s.by_vertex[n][y] == BigInt(static_cast<long>(counts[y])));
                total += s.by_vertex[n][y];
            }
            CHECK(total == s.totals[n]);
        }
    }
}

TEST_CASE("regular graphs: sphere sizes and coinciding modes")
{
    for (const auto& g : {complete_graph(4), complete_graph(5), petersen_graph(), complete_bipartite(3, 3)}) {
        const int d = *g.regular_degree();
        const auto s = sphere_counts(g, 0, 10);
        BigInt expected = d;
        for (int n = 1; n <= 10; ++n) {
            CHECK(s.totals[n] == expected);
            expected *= d - 1;
        }
        const auto ord = cogrowth_table<Rational>(g, 0, 10, CogrowthMode::ordinary);
        const auto wt = cogrowth_table<Rational>(g, 0, 10, CogrowthMode::nbrw_weighted);
        CHECK(ord.table == wt.table);
    }
    // off regularity they differ
    const auto bf = butterfly_graph();
    const auto ord = cogrowth_table<Rational>(bf, bf.vertex("y"), 6, CogrowthMode::ordinary);
    const auto wt = cogrowth_table<Rational>(bf, bf.vertex("y"), 6, CogrowthMode::nbrw_weighted);
    CHECK(ord.table != wt.table);
}

TEST_CASE("series examples")
{
    const auto fg = free_group(2);
    const auto s = cogrowth_series<Rational>(*fg, "1", "1", 8, CogrowthMode::nbrw_weighted);
    CHECK(s.coefficients[0] == 1);
    for (int n = 1; n <= 8; ++n) CHECK(s.coefficients[n] == 0);
    CHECK_THROWS_AS(cogrowth_rate(s), AllZero);

    const auto bf = butterfly_graph();
    const Vertex x = bf.vertex("x");
    const auto b = cogrowth_series<Rational>(bf, x, x, 3, CogrowthMode::nbrw_weighted);
    CHECK(b.coefficients == std::vector<Rational>{1, 0, 0, 1});
}

TEST_CASE("normalisation in both modes")
{
    for (const auto& [name, g] : oracle::corpus())
        for (auto mode : {CogrowthMode::ordinary, CogrowthMode::nbrw_weighted}) {
            const auto t = cogrowth_table<Rational>(g, 0, 8, mode);
            for (const auto& row : t.table) {
                Rational sum = 0;
                for (const auto& c : row) {
                    CHECK(sgn(c) >= 0);
                    CHECK(c <= 1);
                    sum += c;
                }
                CHECK(sum == 1);
            }
        }
}

TEST_CASE("weighted cogrowth is the walk distribution")
{
    for (const auto& [name, g] : oracle::corpus()) {
        CAPTURE(name);
        for (Vertex x = 0; x < static_cast<Vertex>(g.num_vertices()); ++x) {
            const auto t = cogrowth_table<Rational>(g, x, 12, CogrowthMode::nbrw_weighted);
            const auto traj = nbrw_trajectory<Rational>(NbrwKernel(g), x, 12);
            for (int n = 0; n <= 12; ++n) CHECK(t.table[n] == traj[n].values);
        }
    }
}

TEST_CASE("cogrowth rate")
{
    const auto k4 = complete_graph(4);
    const auto s = cogrowth_series<double>(k4, 0, 0, 400, CogrowthMode::ordinary);
    const auto r = cogrowth_rate(s);
    CHECK(r.value <= 1.0);
    CHECK(r.value >= 0.99);

    const auto z2 = grid_z2();
    const auto g = cogrowth_series<double>(*z2, "0,0", "0,0", 200, CogrowthMode::ordinary);
    CHECK(cogrowth_rate(g).value >= 0.95);
}

TEST_CASE("Green function coefficients")
{
    const auto k4 = green_series(complete_graph(4), 0, 0, 5);
    CHECK(k4[0] == 1);
    CHECK(k4[1] == 0);
    CHECK(k4[2] == Rational(1, 3));
    CHECK(k4[3] == Rational(2, 9));
    const auto c4 = green_series(cycle_graph(4), 0, 0, 15);
    for (int n = 1; n <= 15; n += 2) CHECK(c4[n] == 0);
    CHECK(green_series(petersen_graph(), 2, 2, 3)[0] == 1);
}

TEST_CASE("functional equation for regular graphs")
{
    const auto k4 = functional_equation_check(complete_graph(4), 0, 0, 20);
    CHECK(k4.d == 3);
    CHECK(k4.exact_zero());
    const auto pet = petersen_graph();
    CHECK(functional_equation_check(pet, 0, 7, 20).exact_zero());
    CHECK(functional_equation_check(pet, 0, 1, 20).exact_zero());
    CHECK(functional_equation_check(complete_graph(5), 1, 3, 12).exact_zero());
    CHECK(functional_equation_check(complete_bipartite(3, 3), 0, 4, 15).exact_zero());
    CHECK(functional_equation_check(random_regular_bipartite(5, 4, 3), 0, 1, 12).exact_zero());
    CHECK_THROWS_AS(functional_equation_check(butterfly_graph(), 0, 0, 5), NotRegular);
    CHECK_THROWS_AS(functional_equation_check(cycle_graph(5), 0, 0, 5), BadParams);
}

TEST_CASE("power series arithmetic")
{
    const auto t = PowerSeries<Rational>::identity(6);
    auto one_minus_t = PowerSeries<Rational>::constant(1, 6) - t;
    const auto inv = one_minus_t.inverse();
    for (int k = 0; k <= 6; ++k) CHECK(inv[k] == 1);
    const auto prod = one_minus_t * inv;
    CHECK(prod[0] == 1);
    for (int k = 1; k <= 6; ++k) CHECK(prod[k] == 0);
    // 1/(1-u) at u = t^2 gives the even powers
    const auto comp = inv.compose(t * t);
    for (int k = 0; k <= 6; ++k) CHECK(comp[k] == (k % 2 == 0 ? 1 : 0));
    CHECK_THROWS_AS(t.inverse(), BadParams);
}
