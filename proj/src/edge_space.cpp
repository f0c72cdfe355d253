#include "nbrw/edge_space.hpp"

#include "nbrw/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace nbrw {

namespace {

void build_csr(std::size_t groups, const std::vector<std::pair<std::size_t, EdgeId>>& items,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& data)
{
    offsets.assign(groups + 1, 0);
    for (const auto& [g, e] : items) ++offsets[g + 1];
    for (std::size_t i = 0; i < groups; ++i) offsets[i + 1] += offsets[i];
    data.assign(items.size(), 0);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& [g, e] : items) data[fill[g]++] = e;
}

} // namespace

OrientedEdgeSpace::OrientedEdgeSpace(const Multigraph& g)
{
    const std::size_t n = g.num_vertices();
    degree_.resize(n);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        degree_[static_cast<std::size_t>(u)] = g.degree(u);
        auto push_pair = [&](Vertex a, Vertex b, int copy) {
            tail_.push_back(a);
            head_.push_back(b);
            copy_.push_back(copy);
            tail_.push_back(b);
            head_.push_back(a);
            copy_.push_back(copy);
        };
        for (int k = 0; k < g.loops(u); ++k) push_pair(u, u, k);
        for (const auto& a : g.neighbors(u)) {
            if (a.to <= u) continue;
            for (int k = 0; k < a.multiplicity; ++k) push_pair(u, a.to, k);
        }
    }

    std::vector<std::pair<std::size_t, EdgeId>> out, in;
    for (EdgeId e = 0; e < static_cast<EdgeId>(tail_.size()); ++e) {
        out.emplace_back(static_cast<std::size_t>(tail(e)), e);
        in.emplace_back(static_cast<std::size_t>(head(e)), e);
    }
    build_csr(n, out, out_offsets_, out_);
    build_csr(n, in, in_offsets_, in_);

    std::vector<std::pair<std::size_t, EdgeId>> succ;
    for (EdgeId e = 0; e < static_cast<EdgeId>(tail_.size()); ++e) {
        for (EdgeId f : out_edges(head(e)))
            if (f != reverse(e)) succ.emplace_back(static_cast<std::size_t>(e), f);
    }
    build_csr(tail_.size(), succ, succ_offsets_, succ_);
}

std::string OrientedEdgeSpace::describe(EdgeId e, const Multigraph& g) const
{
    return g.label(tail(e)) + ">" + g.label(head(e)) + "#" + std::to_string(copy_[static_cast<std::size_t>(e)]) +
           (e % 2 == 0 ? "" : "r");
}

NbrwKernel::NbrwKernel(const Multigraph& g) : space_(g)
{
    for (EdgeId e = 0; e < static_cast<EdgeId>(space_.size()); ++e) {
        if (space_.degree(space_.head(e)) < 2)
            throw DegreeError("vertex '" + g.label(space_.head(e)) + "' has degree " +
                              std::to_string(space_.degree(space_.head(e))) + "; edge-NBRW needs degree >= 2");
    }
}

std::size_t OlgStructure::num_essential() const
{
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const OlgComponent& c) { return c.essential; }));
}

OlgStructure analyze_structure(const NbrwKernel& kernel)
{
    const auto& space = kernel.space();
    const auto n = static_cast<EdgeId>(space.size());
    OlgStructure result;
    result.component_of.assign(space.size(), -1);
    result.cyclic_index.assign(space.size(), 0);

    // Iterative Tarjan.
    std::vector<int> index(space.size(), -1), low(space.size(), 0);
    std::vector<char> on_stack(space.size(), 0);
    std::vector<EdgeId> stack;
    std::vector<std::pair<EdgeId, std::size_t>> call;
    int counter = 0;
    for (EdgeId root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, next] = call.back();
            const auto vi = static_cast<std::size_t>(v);
            if (next == 0 && index[vi] < 0) {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = 1;
            }
            auto succ = space.successors(v);
            if (next < succ.size()) {
                EdgeId w = succ[next++];
                const auto wi = static_cast<std::size_t>(w);
                if (index[wi] < 0) {
                    call.emplace_back(w, 0);
                } else if (on_stack[wi]) {
                    low[vi] = std::min(low[vi], index[wi]);
                }
                continue;
            }
            if (low[vi] == index[vi]) {
                OlgComponent comp;
                EdgeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    result.component_of[static_cast<std::size_t>(w)] = static_cast<int>(result.components.size());
                    comp.members.push_back(w);
                } while (w != v);
                std::sort(comp.members.begin(), comp.members.end());
                result.components.push_back(std::move(comp));
            }
            const int low_v = low[vi];
            call.pop_back();
            if (!call.empty()) {
                auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low_v);
            }
        }
    }

    // Order components by smallest member for stable output.
    std::vector<std::size_t> order(result.components.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.components[a].members.front() < result.components[b].members.front();
    });
    std::vector<OlgComponent> sorted;
    std::vector<int> rename(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rename[order[i]] = static_cast<int>(i);
        sorted.push_back(std::move(result.components[order[i]]));
    }
    result.components = std::move(sorted);
    for (auto& c : result.component_of) c = rename[static_cast<std::size_t>(c)];

    // Essential flags and periods. The period of a strongly connected
    // digraph is the gcd of level(u) + 1 - level(v) over its arcs, for any
    // BFS levelling from a fixed root.
    std::vector<int> level(space.size(), -1);
    for (std::size_t ci = 0; ci < result.components.size(); ++ci) {
        auto& comp = result.components[ci];
        comp.essential = true;
        for (EdgeId e : comp.members)
            for (EdgeId f : space.successors(e))
                if (result.component_of[static_cast<std::size_t>(f)] != static_cast<int>(ci)) comp.essential = false;

        const EdgeId root = comp.members.front();
        level[static_cast<std::size_t>(root)] = 0;
        std::deque<EdgeId> queue{root};
        int g = 0;
        while (!queue.empty()) {
            EdgeId e = queue.front();
            queue.pop_front();
            for (EdgeId f : space.successors(e)) {
                if (result.component_of[static_cast<std::size_t>(f)] != static_cast<int>(ci)) continue;
                auto& lf = level[static_cast<std::size_t>(f)];
                if (lf < 0) {
                    lf = level[static_cast<std::size_t>(e)] + 1;
                    queue.push_back(f);
                } else {
                    g = std::gcd(g, std::abs(level[static_cast<std::size_t>(e)] + 1 - lf));
                }
            }
        }
        comp.period = g;
        for (EdgeId e : comp.members)
            result.cyclic_index[static_cast<std::size_t>(e)] = g > 0 ? level[static_cast<std::size_t>(e)] % g : 0;
    }

    result.irreducible = result.components.size() == 1;
    if (result.irreducible) result.period = result.components.front().period;
    return result;
}

std::vector<int> olg_distances(const OrientedEdgeSpace& space, EdgeId e)
{
    std::vector<int> dist(space.size(), -1);
    dist[static_cast<std::size_t>(e)] = 0;
    std::deque<EdgeId> queue{e};
    while (!queue.empty()) {
        EdgeId a = queue.front();
        queue.pop_front();
        for (EdgeId b : space.successors(a)) {
            auto& d = dist[static_cast<std::size_t>(b)];
            if (d < 0) {
                d = dist[static_cast<std::size_t>(a)] + 1;
                queue.push_back(b);
            }
        }
    }
    return dist;
}

std::optional<int> turnaround_bound(const NbrwKernel& kernel)
{
    const auto& space = kernel.space();
    int worst = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(space.size()); ++e) {
        const int d = olg_distances(space, e)[static_cast<std::size_t>(OrientedEdgeSpace::reverse(e))];
        if (d < 0) return std::nullopt;
        worst = std::max(worst, d);
    }
    return worst;
}

std::vector<int> solg_distances(const OrientedEdgeSpace& space, EdgeId e)
{
    // Predecessors of f are the reverses of successors of reverse(f):
    // e -> f iff reverse(f) -> reverse(e).
    std::vector<int> dist(space.size(), -1);
    dist[static_cast<std::size_t>(e)] = 0;
    std::deque<EdgeId> queue{e};
    auto visit = [&](EdgeId from, EdgeId to) {
        auto& d = dist[static_cast<std::size_t>(to)];
        if (d < 0) {
            d = dist[static_cast<std::size_t>(from)] + 1;
            queue.push_back(to);
        }
    };
    while (!queue.empty()) {
        EdgeId a = queue.front();
        queue.pop_front();
        for (EdgeId b : space.successors(a)) visit(a, b);
        for (EdgeId b : space.successors(OrientedEdgeSpace::reverse(a))) visit(a, OrientedEdgeSpace::reverse(b));
    }
    return dist;
}

int solg_distance(const OrientedEdgeSpace& space, EdgeId e, EdgeId f)
{
    const int d = solg_distances(space, e)[static_cast<std::size_t>(f)];
    if (d < 0) throw DisconnectedError("oriented edges are in different SOLG components");
    return d;
}

namespace {

template <class T>
void compare_swapped(const NbrwKernel& kernel, int n, SymmetryReport& report)
{
    const auto rows = kernel.power_rows<T>(n);
    const auto m = static_cast<EdgeId>(kernel.size());
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = 0; f < m; ++f) {
            const T& lhs = rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
            const T& rhs = rows[static_cast<std::size_t>(OrientedEdgeSpace::reverse(f))]
                               [static_cast<std::size_t>(OrientedEdgeSpace::reverse(e))];
            ++report.pairs_checked;
            const double diff = std::abs(to_double(T(lhs - rhs)));
            report.max_abs_difference = std::max(report.max_abs_difference, diff);
            bool bad;
            if constexpr (std::is_same_v<T, Rational>)
                bad = lhs != rhs;
            else
                bad = diff > 1e-12;
            if (bad) report.violations.push_back({e, f, format_scalar(lhs), format_scalar(rhs)});
        }
    }
}

} // namespace

SymmetryReport check_reversal_symmetry(const NbrwKernel& kernel, int n, NumericMode mode)
{
    if (n < 0) throw BadParams("n must be nonnegative");
    SymmetryReport report;
    report.n = n;
    report.mode = mode;
    if (mode == NumericMode::rational)
        compare_swapped<Rational>(kernel, n, report);
    else
        compare_swapped<double>(kernel, n, report);
    return report;
}

} // namespace nbrw
