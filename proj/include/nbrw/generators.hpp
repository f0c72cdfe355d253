#ifndef NBRW_GENERATORS_HPP
#define NBRW_GENERATORS_HPP

#include "nbrw/multigraph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nbrw {

using SourcePtr = std::shared_ptr<const GraphSource>;

/// Either a finite multigraph or an infinite lazily explored source.
using AnyGraph = std::variant<Multigraph, SourcePtr>;

// Finite families. Labels are decimal indices unless noted.

/// n >= 1; cycle(1) is a single loop and cycle(2) a double edge.
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
/// Sides labelled l0.. and r0..
Multigraph complete_bipartite(int m, int n);
Multigraph petersen_graph();
/// Two triangles x-y-v and x-u-w sharing the vertex x.
Multigraph butterfly_graph();

/// Configuration model: degrees drawn uniformly from [min_degree,
/// max_degree] (one degree bumped to fix parity), stubs paired by a
/// uniform shuffle, loops and parallel edges kept. Attempts are redrawn
/// from successive random streams of `seed` until the result is
/// connected.
Multigraph random_multigraph(int n, std::uint64_t seed, int min_degree = 2, int max_degree = 4);

/// Union of d uniform perfect matchings between l0..l{n-1} and
/// r0..r{n-1}, redrawn until connected. d-regular and bipartite.
Multigraph random_regular_bipartite(int n, int d, std::uint64_t seed);

// Infinite sources. Group-like sources label the identity "1".

/// Square lattice, vertices "i,j", root "0,0".
SourcePtr grid_z2();
/// d-regular tree; words over a, b, ... without equal neighbouring letters.
SourcePtr regular_tree(int d);
/// Cayley graph of the free group on s generators (the 2s-regular tree);
/// reduced words over a..z with upper case for inverses.
SourcePtr free_group(int s);
/// Cayley graph of Z3 * Z3 with generators a, b and their inverses:
/// a 4-regular tree of triangles, nonamenable with dense small cycles.
SourcePtr z3_free_product();

struct GraphSpec {
    std::string name;
    std::vector<std::int64_t> params;
};

/// "name" or "name:p1,p2,..." (BadParams on malformed input).
GraphSpec parse_graph_spec(std::string_view text);

/// Builds one of: cycle:n, complete:n, complete_bipartite:m,n, petersen,
/// butterfly, random_min_deg2:n,seed[,min,max] (alias random),
/// random_bipartite:n,d,seed, grid_Z2, tree_regular:d, free_group:s,
/// z3_free_product.
AnyGraph builtin_graph(std::string_view spec);

std::vector<std::string> builtin_names();

} // namespace nbrw

#endif // NBRW_GENERATORS_HPP
