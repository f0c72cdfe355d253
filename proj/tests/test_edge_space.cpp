#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nbrw/edge_space.hpp"
#include "nbrw/error.hpp"
#include "nbrw/generators.hpp"
#include "oracles.hpp"

using namespace nbrw;

TEST_CASE("oriented edge counts")
{
    CHECK(OrientedEdgeSpace(cycle_graph(3)).size() == 6);
    CHECK(OrientedEdgeSpace(butterfly_graph()).size() == 12);
    const auto two_loops = load_multigraph_text("loop a 2\n");
    const OrientedEdgeSpace s(two_loops);
    CHECK(s.size() == 4);
    CHECK(s.degree(0) == 4);
    for (EdgeId e = 0; e < 4; ++e) CHECK(s.is_loop(e));
}

TEST_CASE("reverse is a fixed-point-free involution swapping head and tail")
{
    for (const auto& [name, g] : oracle::corpus()) {
        const OrientedEdgeSpace s(g);
        long long degsum = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
            degsum += g.degree(v);
            CHECK(s.out_edges(v).size() == static_cast<std::size_t>(g.degree(v)));
            CHECK(s.in_edges(v).size() == static_cast<std::size_t>(g.degree(v)));
        }
        CHECK(static_cast<long long>(s.size()) == degsum);
        for (EdgeId e = 0; e < static_cast<EdgeId>(s.size()); ++e) {
            const EdgeId r = OrientedEdgeSpace::reverse(e);
            CHECK(r != e);
            CHECK(OrientedEdgeSpace::reverse(r) == e);
            CHECK(s.head(r) == s.tail(e));
            CHECK(s.tail(r) == s.head(e));
            for (EdgeId f : s.successors(e)) {
                CHECK(s.tail(f) == s.head(e));
                CHECK(f != r);
            }
            CHECK(s.successors(e).size() == static_cast<std::size_t>(g.degree(s.head(e)) - 1));
        }
    }
}

TEST_CASE("kernel rows")
{
    {
        const NbrwKernel k(cycle_graph(5));
        for (EdgeId e = 0; e < 10; ++e) {
            REQUIRE(k.space().successors(e).size() == 1);
            CHECK(k.entry<Rational>(e, k.space().successors(e)[0]) == 1);
        }
    }
    {
        const NbrwKernel k(complete_graph(4));
        const auto m = k.matrix<Rational>();
        for (std::size_t e = 0; e < 12; ++e) {
            CHECK(m.row_cols(e).size() == 2);
            for (const auto& v : m.row_values(e)) CHECK(v == Rational(1, 2));
        }
    }
    {
        const auto g = butterfly_graph();
        const NbrwKernel k(g);
        const Vertex x = g.vertex("x");
        for (EdgeId e : k.space().in_edges(x)) {
            CHECK(k.space().successors(e).size() == 3);
            for (EdgeId f : k.space().successors(e)) CHECK(k.entry<Rational>(e, f) == Rational(1, 3));
        }
    }
    Multigraph::Builder b;
    b.add_edge("a", "b");
    b.add_edge("b", "c");
    b.add_edge("c", "a");
    b.add_edge("a", "d");
    CHECK_THROWS_AS(NbrwKernel(b.build()), DegreeError);
}

TEST_CASE("row and column sums are exactly one")
{
    for (const auto& [name, g] : oracle::corpus()) {
        CAPTURE(name);
        const NbrwKernel k(g);
        const auto m = k.matrix<Rational>();
        for (const auto& s : m.row_sums()) CHECK(s == 1);
        for (const auto& s : m.col_sums()) CHECK(s == 1);
        const auto md = k.matrix<double>();
        for (double s : md.row_sums()) CHECK(std::abs(s - 1.0) <= 1e-14);
        for (double s : md.col_sums()) CHECK(std::abs(s - 1.0) <= 1e-14);
    }
}

TEST_CASE("structure of the oriented line graph")
{
    {
        const auto st = analyze_structure(NbrwKernel(cycle_graph(6)));
        CHECK_FALSE(st.irreducible);
        REQUIRE(st.components.size() == 2);
        CHECK(st.num_essential() == 2);
        for (const auto& c : st.components) {
            CHECK(c.essential);
            CHECK(c.members.size() == 6);
            CHECK(c.period == 6);
        }
        // deterministic: a second run is identical
        const auto again = analyze_structure(NbrwKernel(cycle_graph(6)));
        CHECK(again.component_of == st.component_of);
    }
    const auto k4 = analyze_structure(NbrwKernel(complete_graph(4)));
    CHECK(k4.irreducible);
    CHECK(k4.period == 1);
    const auto k33 = analyze_structure(NbrwKernel(complete_bipartite(3, 3)));
    CHECK(k33.irreducible);
    CHECK(k33.period == 2);
    const auto bf = analyze_structure(NbrwKernel(butterfly_graph()));
    CHECK(bf.irreducible);
    CHECK(bf.period == 3);
}

TEST_CASE("cyclic index advances by one along every arc")
{
    for (const auto& [name, g] : oracle::corpus()) {
        const NbrwKernel k(g);
        const auto st = analyze_structure(k);
        for (EdgeId e = 0; e < static_cast<EdgeId>(k.size()); ++e)
            for (EdgeId f : k.space().successors(e)) {
                const int c = st.component_of[e];
                if (st.component_of[f] != c) continue;
                const int p = st.components[c].period;
                CHECK((st.cyclic_index[e] + 1) % p == st.cyclic_index[f] % p);
            }
    }
}

TEST_CASE("irreducible unless a cycle")
{
    int tested = 0;
    for (std::uint64_t seed = 100; tested < 50; ++seed) {
        const auto g = random_multigraph(3 + static_cast<int>(seed % 9), seed);
        if (g.regular_degree() == 2) continue; // a cycle
        ++tested;
        CHECK(analyze_structure(NbrwKernel(g)).irreducible);
    }
    for (int n = 1; n <= 9; ++n) {
        const auto st = analyze_structure(NbrwKernel(cycle_graph(n)));
        CHECK_FALSE(st.irreducible);
        CHECK(st.num_essential() == 2);
    }
}

TEST_CASE("period two iff bipartite at minimum degree three")
{
    int bipartite_seen = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Multigraph g = seed % 3 == 0 ? random_regular_bipartite(3 + static_cast<int>(seed % 4), 3, seed)
                                           : random_multigraph(4 + static_cast<int>(seed % 8), seed, 3, 5);
        REQUIRE(g.min_degree() >= 3);
        const auto st = analyze_structure(NbrwKernel(g));
        REQUIRE(st.irreducible);
        const bool bip = is_bipartite(g).bipartite;
        bipartite_seen += bip;
        CHECK((st.period == 2) == bip);
        CHECK((st.period == 1 || st.period == 2));
    }
    CHECK(bipartite_seen >= 10);
}

TEST_CASE("turnaround bound")
{
    CHECK_FALSE(turnaround_bound(NbrwKernel(cycle_graph(6))).has_value());
    CHECK(turnaround_bound(NbrwKernel(complete_graph(4))) == 4);
    for (const auto& [name, g] : oracle::corpus()) {
        CAPTURE(name);
        const auto L = turnaround_bound(NbrwKernel(g));
        const int expected = oracle::turnaround(g);
        if (expected < 0)
            CHECK_FALSE(L.has_value());
        else
            CHECK(L == expected);
    }
}

TEST_CASE("symmetrised line graph distance")
{
    const auto k4 = complete_graph(4);
    const NbrwKernel k(k4);
    const auto& s = k.space();
    for (EdgeId e = 0; e < 12; ++e) {
        for (EdgeId f : s.successors(e)) CHECK(solg_distance(s, e, f) == 1);
        CHECK(solg_distance(s, e, e) == 0);
        CHECK(solg_distance(s, e, OrientedEdgeSpace::reverse(e)) <= 4);
    }
    const NbrwKernel c6(cycle_graph(6));
    CHECK_THROWS_AS(solg_distance(c6.space(), 0, 1), DisconnectedError);
}

TEST_CASE("rough isometry sandwich with A = 1, B = 2L")
{
    for (const auto& [name, g] : oracle::corpus()) {
        const NbrwKernel k(g);
        const auto L = turnaround_bound(k);
        if (!L) continue;
        CAPTURE(name);
        const auto& s = k.space();
        std::vector<std::vector<int>> dx;
        for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) dx.push_back(bfs_distances(g, v));
        for (EdgeId e = 0; e < static_cast<EdgeId>(s.size()); ++e) {
            const auto de = solg_distances(s, e);
            for (EdgeId f = 0; f < static_cast<EdgeId>(s.size()); ++f) {
                const int d = dx[s.tail(e)][s.tail(f)];
                CHECK(d <= de[f]);
                CHECK(de[f] <= d + 2 * *L);
            }
        }
    }
}

TEST_CASE("reversal symmetry")
{
    const NbrwKernel k4(complete_graph(4));
    CHECK(check_reversal_symmetry(k4, 0).ok());
    const auto r = check_reversal_symmetry(k4, 3);
    CHECK(r.ok());
    CHECK(r.pairs_checked == 144);
    const NbrwKernel bf(butterfly_graph());
    const auto rb = check_reversal_symmetry(bf, 5);
    CHECK(rb.ok());
    CHECK(rb.pairs_checked == 144);
    const auto rf = check_reversal_symmetry(bf, 7, NumericMode::floating);
    CHECK(rf.ok());
    CHECK(rf.max_abs_difference <= 1e-12);
}
