#include "nbrw/cogrowth.hpp"

#include "nbrw/error.hpp"

#include <map>

namespace nbrw {

std::string to_string(CogrowthMode mode)
{
    return mode == CogrowthMode::ordinary ? "ordinary" : "weighted";
}

CogrowthMode parse_cogrowth_mode(const std::string& text)
{
    if (text == "ordinary") return CogrowthMode::ordinary;
    if (text == "weighted" || text == "nbrw_weighted") return CogrowthMode::nbrw_weighted;
    throw BadParams("unknown cogrowth mode '" + text + "' (ordinary|weighted)");
}

namespace {

// Arcs of the multigraph grouped by tail. A parallel edge contributes one
// arc per copy in each direction; a loop contributes two arcs at its
// vertex, reverses of each other.
struct ArcGraph {
    std::vector<Vertex> head;
    std::vector<std::size_t> reverse;
    std::vector<std::vector<std::size_t>> out; // by tail

    explicit ArcGraph(const Multigraph& g) : out(g.num_vertices())
    {
        // key (tail, head, copy, direction-for-loops) -> arc id
        std::map<std::tuple<Vertex, Vertex, int, int>, std::size_t> id;
        auto add = [&](Vertex t, Vertex h, int copy, int dir) {
            const std::size_t a = head.size();
            head.push_back(h);
            reverse.push_back(0);
            out[static_cast<std::size_t>(t)].push_back(a);
            id.emplace(std::make_tuple(t, h, copy, dir), a);
        };
        for (Vertex u = 0; u < static_cast<Vertex>(g.num_vertices()); ++u) {
            for (const auto& nb : g.neighbors(u))
                for (int c = 0; c < nb.multiplicity; ++c) add(u, nb.to, c, 0);
            for (int c = 0; c < g.loops(u); ++c) {
                add(u, u, c, 0);
                add(u, u, c, 1);
            }
        }
        for (const auto& [key, a] : id) {
            const auto& [t, h, c, dir] = key;
            reverse[a] = t == h ? id.at({t, h, c, 1 - dir}) : id.at({h, t, c, 0});
        }
    }

    std::size_t size() const { return head.size(); }
};

} // namespace

SphereCounts sphere_counts(const Multigraph& g, Vertex x, int n_max)
{
    if (n_max < 0) throw BadParams("n_max must be nonnegative");
    const ArcGraph arcs(g);
    const std::size_t nv = g.num_vertices();
    SphereCounts out;
    std::vector<BigInt> at_vertex(nv, 0);
    at_vertex[static_cast<std::size_t>(x)] = 1;
    out.by_vertex.push_back(at_vertex);
    out.totals.push_back(1);

    std::vector<BigInt> count(arcs.size(), 0), next(arcs.size(), 0);
    for (std::size_t a : arcs.out[static_cast<std::size_t>(x)]) count[a] = 1;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            for (auto& c : next) c = 0;
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                if (count[a] == 0) continue;
                for (std::size_t b : arcs.out[static_cast<std::size_t>(arcs.head[a])])
                    if (b != arcs.reverse[a]) next[b] += count[a];
            }
            count.swap(next);
        }
        for (auto& c : at_vertex) c = 0;
        BigInt total = 0;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            at_vertex[static_cast<std::size_t>(arcs.head[a])] += count[a];
            total += count[a];
        }
        out.by_vertex.push_back(at_vertex);
        out.totals.push_back(total);
    }
    return out;
}

namespace {

template <class T>
T ratio(const BigInt& num, const BigInt& den)
{
    if (den == 0) return T(0);
    Rational q(num, den);
    q.canonicalize();
    if constexpr (std::is_same_v<T, Rational>)
        return q;
    else
        return q.get_d();
}

template <class T>
std::vector<std::vector<T>> weighted_table(const Multigraph& g, Vertex x, int n_max)
{
    const ArcGraph arcs(g);
    const std::size_t nv = g.num_vertices();
    std::vector<std::vector<T>> table;
    std::vector<T> at_vertex(nv, T(0));
    at_vertex[static_cast<std::size_t>(x)] = T(1);
    table.push_back(at_vertex);

    std::vector<T> mass(arcs.size(), T(0)), next(arcs.size(), T(0));
    const T first = fraction<T>(1, g.degree(x));
    for (std::size_t a : arcs.out[static_cast<std::size_t>(x)]) mass[a] = first;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            for (auto& m : next) m = T(0);
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                if (is_zero(mass[a])) continue;
                const Vertex h = arcs.head[a];
                const T share = mass[a] / T(g.degree(h) - 1);
                for (std::size_t b : arcs.out[static_cast<std::size_t>(h)])
                    if (b != arcs.reverse[a]) next[b] += share;
            }
            mass.swap(next);
        }
        for (auto& v : at_vertex) v = T(0);
        for (std::size_t a = 0; a < arcs.size(); ++a) at_vertex[static_cast<std::size_t>(arcs.head[a])] += mass[a];
        table.push_back(at_vertex);
    }
    return table;
}

} // namespace

template <class T>
CogrowthTable<T> cogrowth_table(const Multigraph& g, Vertex x, int n_max, CogrowthMode mode)
{
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v)
        if (g.degree(v) < 2) throw DegreeError("cogrowth needs minimum degree 2");
    CogrowthTable<T> out;
    out.x = x;
    out.mode = mode;
    const SphereCounts counts = sphere_counts(g, x, n_max);
    out.sphere_sizes = counts.totals;
    if (mode == CogrowthMode::ordinary) {
        for (int n = 0; n <= n_max; ++n) {
            std::vector<T> row;
            for (const auto& c : counts.by_vertex[static_cast<std::size_t>(n)])
                row.push_back(ratio<T>(c, counts.totals[static_cast<std::size_t>(n)]));
            out.table.push_back(std::move(row));
        }
    } else {
        out.table = weighted_table<T>(g, x, n_max);
    }
    return out;
}

template <class T>
CogrowthSeries<T> cogrowth_series(const Multigraph& g, Vertex x, Vertex y, int n_max, CogrowthMode mode)
{
    const auto table = cogrowth_table<T>(g, x, n_max, mode);
    CogrowthSeries<T> out;
    out.x = x;
    out.y = y;
    out.mode = mode;
    out.sphere_sizes = table.sphere_sizes;
    for (const auto& row : table.table) out.coefficients.push_back(row[static_cast<std::size_t>(y)]);
    return out;
}

template <class T>
CogrowthSeries<T> cogrowth_series(const GraphSource& source, const std::string& x, const std::string& y, int n_max,
                                  CogrowthMode mode)
{
    const BallView view = ball(source, x, n_max);
    auto target = view.graph.find(y);
    CogrowthSeries<T> out;
    out.x = view.center;
    out.mode = mode;
    if (!target) {
        // y is farther than n_max: every coefficient vanishes.
        out.y = -1;
        out.coefficients.assign(static_cast<std::size_t>(n_max) + 1, T(0));
        out.sphere_sizes = sphere_counts(view.graph, view.center, n_max).totals;
        return out;
    }
    return cogrowth_series<T>(view.graph, view.center, *target, n_max, mode);
}

template CogrowthTable<double> cogrowth_table<double>(const Multigraph&, Vertex, int, CogrowthMode);
template CogrowthTable<Rational> cogrowth_table<Rational>(const Multigraph&, Vertex, int, CogrowthMode);
template CogrowthSeries<double> cogrowth_series<double>(const Multigraph&, Vertex, Vertex, int, CogrowthMode);
template CogrowthSeries<Rational> cogrowth_series<Rational>(const Multigraph&, Vertex, Vertex, int, CogrowthMode);
template CogrowthSeries<double> cogrowth_series<double>(const GraphSource&, const std::string&, const std::string&,
                                                        int, CogrowthMode);
template CogrowthSeries<Rational> cogrowth_series<Rational>(const GraphSource&, const std::string&,
                                                            const std::string&, int, CogrowthMode);

PowerSeries<Rational> green_series(const Multigraph& g, Vertex x, Vertex y, int N)
{
    if (N < 0) throw BadParams("N must be nonnegative");
    const auto traj = srw_trajectory<Rational>(g, x, N);
    PowerSeries<Rational> out(N, "z");
    for (int n = 0; n <= N; ++n) out[static_cast<std::size_t>(n)] = traj[static_cast<std::size_t>(n)].values[static_cast<std::size_t>(y)];
    return out;
}

FunctionalEquationReport functional_equation_check(const Multigraph& g, Vertex x, Vertex y, int N)
{
    if (N < 1) throw BadParams("N must be >= 1");
    const auto regular = g.regular_degree();
    if (!regular || g.truncated()) throw NotRegular("functional equation needs a finite regular graph");
    const int d = *regular;
    if (d < 3) throw BadParams("functional equation check needs degree d >= 3");

    FunctionalEquationReport rep;
    rep.d = d;
    rep.N = N;
    rep.lhs = cogrowth_series<Rational>(g, x, y, N, CogrowthMode::ordinary).coefficients;

    using PS = PowerSeries<Rational>;
    const PS t = PS::identity(N);
    const PS t2 = t * t;
    const PS denom = PS::constant(Rational(d - 1), N) + t2;          // d - 1 + t^2
    const PS denom_inv = denom.inverse();
    const PS z = t * denom_inv * Rational(d);                       // d t / (d - 1 + t^2)
    const PS factor = (PS::constant(Rational((d - 1) * (d - 1)), N) - t2) * denom_inv * Rational(1, d);
    PS rhs = factor * green_series(g, x, y, N).compose(z);
    if (x == y) rhs[0] += Rational(1, d);
    rep.rhs = rhs.coefficients();

    rep.max_residual = 0;
    for (int k = 0; k <= N; ++k) {
        Rational diff = rep.lhs[static_cast<std::size_t>(k)] - rep.rhs[static_cast<std::size_t>(k)];
        if (abs(diff) > rep.max_residual) rep.max_residual = abs(diff);
    }
    return rep;
}

} // namespace nbrw
