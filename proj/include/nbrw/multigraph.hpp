#ifndef NBRW_MULTIGRAPH_HPP
#define NBRW_MULTIGRAPH_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nbrw {

using Vertex = std::int32_t;

struct Adjacent {
    Vertex to;
    int multiplicity;
};

/// Finite multigraph with loops.
///
/// Vertex labels are opaque strings mapped to dense ids in order of first
/// appearance. Loops are stored as a count per vertex and contribute twice
/// to the degree, so e(x,x) = 2 * loops(x).
///
/// A multigraph may also carry external stubs: half-edges leading out of
/// the stored vertex set. Ordinary graphs have none; a ball cut out of an
/// infinite source uses them so that degrees, volumes and boundary counts
/// stay those of the ambient graph.
class Multigraph {
public:
    class Builder {
    public:
        Vertex add_vertex(const std::string& label);
        void add_edge(Vertex u, Vertex v, int multiplicity = 1);
        void add_loop(Vertex u, int count = 1);
        void add_stubs(Vertex u, int count);
        void add_edge(const std::string& u, const std::string& v, int multiplicity = 1)
        {
            add_edge(add_vertex(u), add_vertex(v), multiplicity);
        }
        void add_loop(const std::string& u, int count = 1) { add_loop(add_vertex(u), count); }
        std::size_t size() const noexcept { return labels_.size(); }

        Multigraph build() const;

    private:
        std::vector<std::string> labels_;
        std::unordered_map<std::string, Vertex> index_;
        std::vector<std::unordered_map<Vertex, int>> edges_;
        std::vector<int> loops_;
        std::vector<int> stubs_;
    };

    Multigraph() = default;

    std::size_t num_vertices() const noexcept { return labels_.size(); }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> find(std::string_view label) const;
    // Throws UnknownVertex.
    Vertex vertex(std::string_view label) const;

    /// Distinct neighbours other than v itself, sorted by id.
    std::span<const Adjacent> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int loops(Vertex v) const { return loops_[static_cast<std::size_t>(v)]; }
    int stubs(Vertex v) const { return stubs_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    /// e(u,v); for u == v this is twice the number of loops.
    int multiplicity(Vertex u, Vertex v) const;

    /// |E(X)|: oriented edges inside the stored vertex set.
    std::int64_t num_oriented_edges() const noexcept { return oriented_edges_; }
    std::int64_t num_edges() const noexcept { return oriented_edges_ / 2; }
    int min_degree() const;
    int max_degree() const;
    std::optional<int> regular_degree() const;
    bool truncated() const noexcept { return total_stubs_ > 0; }

    /// Rejects graphs with a vertex of degree < 2 (DegreeError) or more
    /// than one component (DisconnectedError).
    void validate() const;
    bool connected() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Adjacent>> adjacency_;
    std::vector<int> loops_;
    std::vector<int> stubs_;
    std::vector<int> degree_;
    std::int64_t oriented_edges_ = 0;
    std::int64_t total_stubs_ = 0;
};

/// Parses the line-oriented edge-list format:
///   edge <u> <v> [mult]
///   loop <u> [count]
///   # comment
/// The result is validated (connected, minimum degree 2).
Multigraph load_multigraph(std::istream& in);
Multigraph load_multigraph_text(std::string_view text);
Multigraph load_multigraph_file(const std::string& path);

/// Inverse of load_multigraph, in vertex order.
std::string write_edge_list(const Multigraph& g);

struct Neighbor {
    std::string label;
    int multiplicity;
};

struct LocalStructure {
    std::vector<Neighbor> neighbors; // excluding the vertex itself
    int loops = 0;
};

/// Lazily explored, locally finite, connected graph with a degree bound.
/// neighbours() must be deterministic and symmetric.
class GraphSource {
public:
    virtual ~GraphSource() = default;

    virtual std::string name() const = 0;
    virtual std::string root() const = 0;
    /// Throws UnknownVertex for labels outside the vertex set.
    virtual LocalStructure local(const std::string& label) const = 0;
    virtual int degree_bound() const = 0;

    int degree(const std::string& label) const;
};

/// Ball B(center, radius) as an induced finite subgraph. When cut from a
/// GraphSource, edges to vertices outside the ball become stubs, so
/// graph.degree() equals the degree in the source.
struct BallView {
    Multigraph graph;
    Vertex center = 0;
    int radius = 0;
    std::vector<int> distance; // from center, per vertex of graph
    std::vector<Vertex> boundary;
};

BallView ball(const Multigraph& g, Vertex x, int radius);
BallView ball(const GraphSource& source, const std::string& x, int radius);

/// Grows the ball layer by layer up to `radius` but stops before the
/// vertex count would exceed max_vertices; the radius actually reached
/// is stored in the result.
BallView ball_capped(const GraphSource& source, const std::string& x, int radius,
                     std::size_t max_vertices);

/// BFS distances from x; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Multigraph& g, Vertex x);
int distance(const Multigraph& g, Vertex x, Vertex y);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;       // 0/1 per vertex when bipartite
    std::vector<Vertex> odd_cycle;   // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const Multigraph& g);

/// True if the (connected) graph contains a cycle in the edge-sequence
/// sense: a loop, a parallel pair, or an ordinary cycle.
bool contains_cycle(const Multigraph& g);

/// Smallest R >= 0 such that every ball B(x,R) contains a cycle; nullopt
/// for forests. Balls are taken inside g as given.
std::optional<int> small_cycle_radius(const Multigraph& g);

/// Dense-cycle probe on an infinite source: smallest R <= max_radius such
/// that every B(v,R) with v in B(x, probe_radius) contains a cycle.
/// A positive answer only means "verified up to the probed region".
std::optional<int> probe_small_cycle_radius(const GraphSource& source, const std::string& x,
                                            int probe_radius, int max_radius);

} // namespace nbrw

#endif // NBRW_MULTIGRAPH_HPP
