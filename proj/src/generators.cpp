#include "nbrw/generators.hpp"

#include "nbrw/error.hpp"
#include "nbrw/rng.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace nbrw {

Multigraph cycle_graph(int n)
{
    if (n < 1) throw BadParams("cycle needs n >= 1");
    Multigraph::Builder b;
    for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
    if (n == 1) {
        b.add_loop("0");
    } else if (n == 2) {
        b.add_edge("0", "1", 2);
    } else {
        for (int i = 0; i < n; ++i) b.add_edge(std::to_string(i), std::to_string((i + 1) % n));
    }
    auto g = b.build();
    g.validate();
    return g;
}

Multigraph complete_graph(int n)
{
    if (n < 3) throw BadParams("complete graph needs n >= 3 for minimum degree 2");
    Multigraph::Builder b;
    for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(std::to_string(i), std::to_string(j));
    auto g = b.build();
    g.validate();
    return g;
}

Multigraph complete_bipartite(int m, int n)
{
    if (m < 2 || n < 2) throw BadParams("complete_bipartite needs both sides >= 2");
    Multigraph::Builder b;
    for (int i = 0; i < m; ++i) b.add_vertex("l" + std::to_string(i));
    for (int j = 0; j < n; ++j) b.add_vertex("r" + std::to_string(j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b.add_edge("l" + std::to_string(i), "r" + std::to_string(j));
    auto g = b.build();
    g.validate();
    return g;
}

Multigraph petersen_graph()
{
    Multigraph::Builder b;
    for (int i = 0; i < 10; ++i) b.add_vertex(std::to_string(i));
    for (int i = 0; i < 5; ++i) {
        b.add_edge(std::to_string(i), std::to_string((i + 1) % 5));      // outer pentagon
        b.add_edge(std::to_string(i), std::to_string(i + 5));            // spokes
        b.add_edge(std::to_string(5 + i), std::to_string(5 + (i + 2) % 5)); // inner pentagram
    }
    auto g = b.build();
    g.validate();
    return g;
}

Multigraph butterfly_graph()
{
    Multigraph::Builder b;
    for (const char* v : {"x", "y", "v", "u", "w"}) b.add_vertex(v);
    b.add_edge("x", "y");
    b.add_edge("y", "v");
    b.add_edge("v", "x");
    b.add_edge("x", "u");
    b.add_edge("u", "w");
    b.add_edge("w", "x");
    auto g = b.build();
    g.validate();
    return g;
}

namespace {

constexpr int kMaxAttempts = 100000;

} // namespace

Multigraph random_multigraph(int n, std::uint64_t seed, int min_degree, int max_degree)
{
    if (n < 1) throw BadParams("random graph needs n >= 1");
    if (min_degree < 2 || max_degree < min_degree) throw BadParams("random graph needs 2 <= min_degree <= max_degree");
    if (min_degree == max_degree && min_degree % 2 == 1 && n % 2 == 1)
        throw BadParams("odd regular degree with an odd number of vertices");

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(seed, static_cast<std::uint64_t>(attempt));
        std::vector<int> degree(static_cast<std::size_t>(n));
        for (auto& d : degree) d = rng.between(min_degree, max_degree);
        if (std::accumulate(degree.begin(), degree.end(), 0) % 2 != 0) {
            bool fixed = false;
            for (auto& d : degree) {
                if (d < max_degree) {
                    ++d;
                    fixed = true;
                    break;
                }
            }
            if (!fixed) {
                for (auto& d : degree) {
                    if (d > min_degree) {
                        --d;
                        break;
                    }
                }
            }
        }
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < degree[static_cast<std::size_t>(v)]; ++k) stubs.push_back(v);
        rng.shuffle(stubs);

        Multigraph::Builder b;
        for (int v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1])
                b.add_loop(stubs[i]);
            else
                b.add_edge(stubs[i], stubs[i + 1]);
        }
        auto g = b.build();
        if (g.connected()) return g;
    }
    throw BadParams("could not draw a connected random multigraph");
}

Multigraph random_regular_bipartite(int n, int d, std::uint64_t seed)
{
    if (n < 1 || d < 2) throw BadParams("random_bipartite needs n >= 1 and d >= 2");
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(seed, static_cast<std::uint64_t>(attempt));
        Multigraph::Builder b;
        for (int i = 0; i < n; ++i) b.add_vertex("l" + std::to_string(i));
        for (int i = 0; i < n; ++i) b.add_vertex("r" + std::to_string(i));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int k = 0; k < d; ++k) {
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            for (int i = 0; i < n; ++i) b.add_edge(i, n + perm[static_cast<std::size_t>(i)]);
        }
        auto g = b.build();
        if (g.connected()) return g;
    }
    throw BadParams("could not draw a connected random bipartite multigraph");
}

// ---------------------------------------------------------------------------
// Sources

namespace {

class GridZ2 final : public GraphSource {
public:
    std::string name() const override { return "grid_Z2"; }
    std::string root() const override { return "0,0"; }
    int degree_bound() const override { return 4; }

    LocalStructure local(const std::string& label) const override
    {
        auto [i, j] = parse(label);
        LocalStructure out;
        out.neighbors = {{key(i + 1, j), 1}, {key(i - 1, j), 1}, {key(i, j + 1), 1}, {key(i, j - 1), 1}};
        return out;
    }

private:
    static std::string key(long i, long j) { return std::to_string(i) + "," + std::to_string(j); }

    static std::pair<long, long> parse(const std::string& label)
    {
        auto comma = label.find(',');
        long i = 0;
        long j = 0;
        if (comma == std::string::npos) throw UnknownVertex(label);
        const char* begin = label.data();
        const char* mid = begin + comma;
        const char* end = begin + label.size();
        auto r1 = std::from_chars(begin, mid, i);
        auto r2 = std::from_chars(mid + 1, end, j);
        if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != end)
            throw UnknownVertex(label);
        if (key(i, j) != label) throw UnknownVertex(label); // canonical form only
        return {i, j};
    }
};

// Words over letters a.. (one per involutive generator), no letter
// repeated twice in a row. "1" is the empty word.
class RegularTree final : public GraphSource {
public:
    explicit RegularTree(int d) : d_(d) {}

    std::string name() const override { return "tree_regular:" + std::to_string(d_); }
    std::string root() const override { return "1"; }
    int degree_bound() const override { return d_; }

    LocalStructure local(const std::string& label) const override
    {
        std::string w = label == "1" ? std::string() : label;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] < 'a' || w[k] >= 'a' + d_ || (k > 0 && w[k] == w[k - 1])) throw UnknownVertex(label);
        }
        LocalStructure out;
        for (int g = 0; g < d_; ++g) {
            const char c = static_cast<char>('a' + g);
            if (!w.empty() && w.back() == c) {
                std::string parent = w.substr(0, w.size() - 1);
                out.neighbors.push_back({parent.empty() ? "1" : parent, 1});
            } else {
                out.neighbors.push_back({w + c, 1});
            }
        }
        return out;
    }

private:
    int d_;
};

bool is_inverse(char a, char b) { return a != b && std::tolower(a) == std::tolower(b); }

class FreeGroup final : public GraphSource {
public:
    explicit FreeGroup(int s) : s_(s) {}

    std::string name() const override { return "free_group:" + std::to_string(s_); }
    std::string root() const override { return "1"; }
    int degree_bound() const override { return 2 * s_; }

    LocalStructure local(const std::string& label) const override
    {
        std::string w = label == "1" ? std::string() : label;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const char lower = static_cast<char>(std::tolower(w[k]));
            if (lower < 'a' || lower >= 'a' + s_ || (k > 0 && is_inverse(w[k], w[k - 1])))
                throw UnknownVertex(label);
        }
        LocalStructure out;
        for (int g = 0; g < s_; ++g) {
            for (char c : {static_cast<char>('a' + g), static_cast<char>('A' + g)}) {
                std::string next;
                if (!w.empty() && is_inverse(w.back(), c))
                    next = w.substr(0, w.size() - 1);
                else
                    next = w + c;
                out.neighbors.push_back({next.empty() ? "1" : next, 1});
            }
        }
        return out;
    }

private:
    int s_;
};

// Normal forms in Z3 * Z3: alternating syllables from {a, A = a^2} and
// {b, B = b^2}.
class Z3FreeProduct final : public GraphSource {
public:
    std::string name() const override { return "z3_free_product"; }
    std::string root() const override { return "1"; }
    int degree_bound() const override { return 4; }

    LocalStructure local(const std::string& label) const override
    {
        std::string w = label == "1" ? std::string() : label;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const char c = w[k];
            if (c != 'a' && c != 'A' && c != 'b' && c != 'B') throw UnknownVertex(label);
            if (k > 0 && std::tolower(c) == std::tolower(w[k - 1])) throw UnknownVertex(label);
        }
        LocalStructure out;
        for (char g : {'a', 'A', 'b', 'B'}) {
            std::string next = multiply(w, g);
            out.neighbors.push_back({next.empty() ? "1" : next, 1});
        }
        return out;
    }

private:
    // Right multiplication by a generator (a or b) or its inverse (A, B).
    static std::string multiply(std::string w, char g)
    {
        const int power = std::islower(g) ? 1 : 2;
        if (!w.empty() && std::tolower(w.back()) == std::tolower(g)) {
            const int have = std::islower(w.back()) ? 1 : 2;
            const int total = (have + power) % 3;
            w.pop_back();
            if (total == 1) w.push_back(static_cast<char>(std::tolower(g)));
            if (total == 2) w.push_back(static_cast<char>(std::toupper(g)));
            return w;
        }
        w.push_back(g);
        return w;
    }
};

} // namespace

SourcePtr grid_z2() { return std::make_shared<GridZ2>(); }

SourcePtr regular_tree(int d)
{
    if (d < 2 || d > 26) throw BadParams("tree_regular needs 2 <= d <= 26");
    return std::make_shared<RegularTree>(d);
}

SourcePtr free_group(int s)
{
    if (s < 1 || s > 26) throw BadParams("free_group needs 1 <= s <= 26");
    return std::make_shared<FreeGroup>(s);
}

SourcePtr z3_free_product() { return std::make_shared<Z3FreeProduct>(); }

GraphSpec parse_graph_spec(std::string_view text)
{
    GraphSpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty()) throw BadParams("empty graph name");
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        std::int64_t value = 0;
        auto r = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || r.ec != std::errc() || r.ptr != tok.data() + tok.size())
            throw BadParams("bad parameter '" + std::string(tok) + "' in '" + std::string(text) + "'");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

AnyGraph builtin_graph(std::string_view text)
{
    const GraphSpec spec = parse_graph_spec(text);
    const auto& p = spec.params;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi)
            throw BadParams("'" + spec.name + "' takes " + std::to_string(lo) +
                            (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
    };
    auto as_int = [&](std::size_t i) { return static_cast<int>(p.at(i)); };

    if (spec.name == "cycle") {
        need(1, 1);
        return cycle_graph(as_int(0));
    }
    if (spec.name == "complete") {
        need(1, 1);
        return complete_graph(as_int(0));
    }
    if (spec.name == "complete_bipartite") {
        need(2, 2);
        return complete_bipartite(as_int(0), as_int(1));
    }
    if (spec.name == "petersen") {
        need(0, 0);
        return petersen_graph();
    }
    if (spec.name == "butterfly") {
        need(0, 0);
        return butterfly_graph();
    }
    if (spec.name == "random_min_deg2" || spec.name == "random") {
        need(2, 4);
        const int lo = p.size() > 2 ? as_int(2) : 2;
        const int hi = p.size() > 3 ? as_int(3) : std::max(lo, 4);
        return random_multigraph(as_int(0), static_cast<std::uint64_t>(p[1]), lo, hi);
    }
    if (spec.name == "random_bipartite") {
        need(3, 3);
        return random_regular_bipartite(as_int(0), as_int(1), static_cast<std::uint64_t>(p[2]));
    }
    if (spec.name == "grid_Z2") {
        need(0, 0);
        return grid_z2();
    }
    if (spec.name == "tree_regular") {
        need(1, 1);
        return regular_tree(as_int(0));
    }
    if (spec.name == "free_group") {
        need(1, 1);
        return free_group(as_int(0));
    }
    if (spec.name == "z3_free_product") {
        need(0, 0);
        return z3_free_product();
    }
    throw BadParams("unknown builtin graph '" + spec.name + "'");
}

std::vector<std::string> builtin_names()
{
    return {"cycle",      "complete",     "complete_bipartite", "petersen",   "butterfly",      "random_min_deg2",
            "random_bipartite", "grid_Z2", "tree_regular", "free_group", "z3_free_product"};
}

} // namespace nbrw
