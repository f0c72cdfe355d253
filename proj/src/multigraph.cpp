#include "nbrw/multigraph.hpp"

#include "nbrw/error.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace nbrw {

Vertex Multigraph::Builder::add_vertex(const std::string& label)
{
    auto [it, inserted] = index_.try_emplace(label, static_cast<Vertex>(labels_.size()));
    if (inserted) {
        labels_.push_back(label);
        edges_.emplace_back();
        loops_.push_back(0);
        stubs_.push_back(0);
    }
    return it->second;
}

void Multigraph::Builder::add_edge(Vertex u, Vertex v, int multiplicity)
{
    if (multiplicity < 0) throw BadParams("negative edge multiplicity");
    if (u == v) throw BadParams("edge from a vertex to itself; use a loop");
    if (multiplicity == 0) return;
    edges_[static_cast<std::size_t>(u)][v] += multiplicity;
    edges_[static_cast<std::size_t>(v)][u] += multiplicity;
}

void Multigraph::Builder::add_loop(Vertex u, int count)
{
    if (count < 0) throw BadParams("negative loop count");
    loops_[static_cast<std::size_t>(u)] += count;
}

void Multigraph::Builder::add_stubs(Vertex u, int count)
{
    if (count < 0) throw BadParams("negative stub count");
    stubs_[static_cast<std::size_t>(u)] += count;
}

Multigraph Multigraph::Builder::build() const
{
    Multigraph g;
    g.labels_ = labels_;
    g.index_ = index_;
    g.loops_ = loops_;
    g.stubs_ = stubs_;
    const std::size_t n = labels_.size();
    g.adjacency_.resize(n);
    g.degree_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        for (const auto& [w, m] : edges_[v]) adj.push_back({w, m});
        std::sort(adj.begin(), adj.end(), [](const Adjacent& a, const Adjacent& b) { return a.to < b.to; });
        int internal = 2 * loops_[v];
        for (const auto& a : adj) internal += a.multiplicity;
        g.oriented_edges_ += internal;
        g.total_stubs_ += stubs_[v];
        g.degree_[v] = internal + stubs_[v];
    }
    return g;
}

std::optional<Vertex> Multigraph::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Multigraph::vertex(std::string_view label) const
{
    auto v = find(label);
    if (!v) throw UnknownVertex(std::string(label));
    return *v;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const
{
    if (u == v) return 2 * loops(u);
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Adjacent& a, Vertex x) { return a.to < x; });
    return (it != adj.end() && it->to == v) ? it->multiplicity : 0;
}

int Multigraph::min_degree() const
{
    if (degree_.empty()) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int Multigraph::max_degree() const
{
    if (degree_.empty()) return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

std::optional<int> Multigraph::regular_degree() const
{
    if (degree_.empty()) return std::nullopt;
    if (min_degree() != max_degree()) return std::nullopt;
    return degree_.front();
}

bool Multigraph::connected() const
{
    if (num_vertices() == 0) return false;
    auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

void Multigraph::validate() const
{
    if (num_vertices() == 0) throw DegreeError("graph has no vertices");
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        if (degree_[v] < 2)
            throw DegreeError("vertex '" + labels_[v] + "' has degree " + std::to_string(degree_[v]) +
                              " (minimum is 2)");
    }
    if (!connected()) throw DisconnectedError("graph is not connected");
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

int parse_count(const std::string& tok, int line)
{
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a count, got '" + tok + "'");
    }
    if (used != tok.size() || value < 1 || value > std::numeric_limits<int>::max())
        throw ParseError(line, "count must be a positive integer, got '" + tok + "'");
    return static_cast<int>(value);
}

} // namespace

Multigraph load_multigraph(std::istream& in)
{
    Multigraph::Builder b;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "edge") {
            if (tok.size() < 3 || tok.size() > 4) throw ParseError(line, "usage: edge <u> <v> [mult]");
            if (tok[1] == tok[2]) throw ParseError(line, "edge endpoints coincide; use 'loop'");
            int mult = tok.size() == 4 ? parse_count(tok[3], line) : 1;
            b.add_edge(tok[1], tok[2], mult);
        } else if (tok[0] == "loop") {
            if (tok.size() < 2 || tok.size() > 3) throw ParseError(line, "usage: loop <u> [count]");
            int count = tok.size() == 3 ? parse_count(tok[2], line) : 1;
            b.add_loop(tok[1], count);
        } else {
            throw ParseError(line, "unknown directive '" + tok[0] + "'");
        }
    }
    Multigraph g = b.build();
    g.validate();
    return g;
}

Multigraph load_multigraph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return load_multigraph(in);
}

Multigraph load_multigraph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    return load_multigraph(in);
}

std::string write_edge_list(const Multigraph& g)
{
    std::ostringstream out;
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
        if (g.loops(v) > 0) out << "loop " << g.label(v) << ' ' << g.loops(v) << '\n';
        for (const auto& a : g.neighbors(v)) {
            if (a.to > v) out << "edge " << g.label(v) << ' ' << g.label(a.to) << ' ' << a.multiplicity << '\n';
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Sources and balls

int GraphSource::degree(const std::string& label) const
{
    auto loc = local(label);
    int d = 2 * loc.loops;
    for (const auto& n : loc.neighbors) d += n.multiplicity;
    return d;
}

std::vector<int> bfs_distances(const Multigraph& g, Vertex x)
{
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<Vertex> queue{x};
    dist[static_cast<std::size_t>(x)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (const auto& a : g.neighbors(u)) {
            auto& d = dist[static_cast<std::size_t>(a.to)];
            if (d < 0) {
                d = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return dist;
}

int distance(const Multigraph& g, Vertex x, Vertex y)
{
    const auto n = static_cast<Vertex>(g.num_vertices());
    if (x < 0 || x >= n) throw UnknownVertex(std::to_string(x));
    if (y < 0 || y >= n) throw UnknownVertex(std::to_string(y));
    int d = bfs_distances(g, x)[static_cast<std::size_t>(y)];
    if (d < 0) throw DisconnectedError("vertices '" + g.label(x) + "' and '" + g.label(y) + "' are not connected");
    return d;
}

BallView ball(const Multigraph& g, Vertex x, int radius)
{
    if (radius < 0) throw BadParams("ball radius must be nonnegative");
    if (x < 0 || static_cast<std::size_t>(x) >= g.num_vertices()) throw UnknownVertex(std::to_string(x));
    auto dist = bfs_distances(g, x);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0 && dist[static_cast<std::size_t>(v)] <= radius) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
    });

    Multigraph::Builder b;
    std::vector<Vertex> local(g.num_vertices(), -1);
    for (Vertex v : order) local[static_cast<std::size_t>(v)] = b.add_vertex(g.label(v));
    BallView view;
    for (Vertex v : order) {
        const Vertex lv = local[static_cast<std::size_t>(v)];
        b.add_loop(lv, g.loops(v));
        b.add_stubs(lv, g.stubs(v));
        for (const auto& a : g.neighbors(v)) {
            const Vertex lw = local[static_cast<std::size_t>(a.to)];
            if (lw < 0)
                b.add_stubs(lv, a.multiplicity);
            else if (lw > lv)
                b.add_edge(lv, lw, a.multiplicity);
        }
        view.distance.push_back(dist[static_cast<std::size_t>(v)]);
        if (dist[static_cast<std::size_t>(v)] == radius) view.boundary.push_back(lv);
    }
    view.graph = b.build();
    view.center = 0;
    view.radius = radius;
    return view;
}

namespace {

BallView grow_ball(const GraphSource& source, const std::string& x, int radius, std::size_t max_vertices)
{
    if (radius < 0) throw BadParams("ball radius must be nonnegative");
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> labels{x};
    std::vector<LocalStructure> locals{source.local(x)};
    std::vector<int> dist{0};
    index.emplace(x, 0);

    std::size_t layer_begin = 0;
    int reached = 0;
    while (reached < radius) {
        const std::size_t layer_end = labels.size();
        std::vector<std::string> fresh;
        std::unordered_map<std::string, bool> seen_fresh;
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (const auto& n : locals[i].neighbors) {
                if (index.count(n.label) || seen_fresh.count(n.label)) continue;
                seen_fresh.emplace(n.label, true);
                fresh.push_back(n.label);
            }
        }
        if (labels.size() + fresh.size() > max_vertices) break;
        for (auto& label : fresh) {
            index.emplace(label, static_cast<Vertex>(labels.size()));
            locals.push_back(source.local(label));
            labels.push_back(std::move(label));
            dist.push_back(reached + 1);
        }
        layer_begin = layer_end;
        ++reached;
        if (fresh.empty()) break;
    }

    Multigraph::Builder b;
    for (const auto& label : labels) b.add_vertex(label);
    BallView view;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto v = static_cast<Vertex>(i);
        b.add_loop(v, locals[i].loops);
        for (const auto& n : locals[i].neighbors) {
            auto it = index.find(n.label);
            if (it == index.end())
                b.add_stubs(v, n.multiplicity);
            else if (it->second > v)
                b.add_edge(v, it->second, n.multiplicity);
        }
        if (dist[i] == reached) view.boundary.push_back(v);
    }
    view.graph = b.build();
    view.center = 0;
    view.radius = reached;
    view.distance = std::move(dist);
    return view;
}

} // namespace

BallView ball(const GraphSource& source, const std::string& x, int radius)
{
    return grow_ball(source, x, radius, std::numeric_limits<std::size_t>::max());
}

BallView ball_capped(const GraphSource& source, const std::string& x, int radius, std::size_t max_vertices)
{
    return grow_ball(source, x, radius, max_vertices);
}

// ---------------------------------------------------------------------------
// Structural predicates

BipartiteResult is_bipartite(const Multigraph& g)
{
    BipartiteResult result;
    const std::size_t n = g.num_vertices();
    std::vector<int> color(n, -1);
    std::vector<Vertex> parent(n, -1);
    auto path_to_root = [&](Vertex v) {
        std::vector<Vertex> path;
        for (; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
        return path;
    };
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (g.loops(u) > 0) {
                result.odd_cycle = {u, u};
                return result;
            }
            for (const auto& a : g.neighbors(u)) {
                auto& c = color[static_cast<std::size_t>(a.to)];
                if (c < 0) {
                    c = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(a.to)] = u;
                    queue.push_back(a.to);
                } else if (c == color[static_cast<std::size_t>(u)]) {
                    // root..u, then the edge u-w, then w..root: odd length.
                    auto pu = path_to_root(u);
                    auto pw = path_to_root(a.to);
                    std::vector<Vertex> walk(pu.rbegin(), pu.rend());
                    walk.insert(walk.end(), pw.begin(), pw.end());
                    result.odd_cycle = std::move(walk);
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.coloring = std::move(color);
    return result;
}

bool contains_cycle(const Multigraph& g)
{
    std::int64_t edges = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
        if (g.loops(v) > 0) return true;
        for (const auto& a : g.neighbors(v)) {
            if (a.multiplicity > 1) return true;
            if (a.to > v) ++edges;
        }
    }
    // Count components: a forest has exactly V - C edges.
    std::vector<int> seen(g.num_vertices(), 0);
    std::int64_t components = 0;
    for (Vertex s = 0; s < static_cast<Vertex>(g.num_vertices()); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        auto d = bfs_distances(g, s);
        for (std::size_t v = 0; v < d.size(); ++v)
            if (d[v] >= 0) seen[v] = 1;
    }
    return edges > static_cast<std::int64_t>(g.num_vertices()) - components;
}

namespace {

// Smallest R <= max_radius such that the ball B(x,R), taken inside g,
// contains a cycle. The ball is connected, so it contains a cycle iff it
// has a loop, a parallel pair, or at least as many edges as vertices.
std::optional<int> cycle_radius_at(const Multigraph& g, Vertex x, int max_radius)
{
    auto dist = bfs_distances(g, x);
    int top = 0;
    for (int d : dist) top = std::max(top, d);
    top = std::min(top, max_radius);
    std::vector<std::int64_t> vertices_at(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::int64_t> edges_at(static_cast<std::size_t>(top) + 1, 0);
    int forced = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
        const int dv = dist[static_cast<std::size_t>(v)];
        if (dv < 0 || dv > top) continue;
        ++vertices_at[static_cast<std::size_t>(dv)];
        if (g.loops(v) > 0) forced = std::min(forced, dv);
        for (const auto& a : g.neighbors(v)) {
            if (a.to < v) continue;
            const int dw = dist[static_cast<std::size_t>(a.to)];
            const int level = std::max(dv, dw);
            if (dw < 0 || level > top) continue;
            edges_at[static_cast<std::size_t>(level)] += 1;
            if (a.multiplicity > 1) forced = std::min(forced, level);
        }
    }
    std::int64_t vs = 0;
    std::int64_t es = 0;
    for (int r = 0; r <= top; ++r) {
        vs += vertices_at[static_cast<std::size_t>(r)];
        es += edges_at[static_cast<std::size_t>(r)];
        if (forced <= r || es >= vs) return r;
    }
    return std::nullopt;
}

} // namespace

std::optional<int> small_cycle_radius(const Multigraph& g)
{
    int worst = 0;
    for (Vertex x = 0; x < static_cast<Vertex>(g.num_vertices()); ++x) {
        auto r = cycle_radius_at(g, x, std::numeric_limits<int>::max());
        if (!r) return std::nullopt;
        worst = std::max(worst, *r);
    }
    return worst;
}

std::optional<int> probe_small_cycle_radius(const GraphSource& source, const std::string& x,
                                            int probe_radius, int max_radius)
{
    if (probe_radius < 0 || max_radius < 0) throw BadParams("probe radii must be nonnegative");
    BallView view = ball(source, x, probe_radius + max_radius);
    int worst = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(view.graph.num_vertices()); ++v) {
        if (view.distance[static_cast<std::size_t>(v)] > probe_radius) continue;
        auto r = cycle_radius_at(view.graph, v, max_radius);
        if (!r) return std::nullopt;
        worst = std::max(worst, *r);
    }
    return worst;
}

} // namespace nbrw
