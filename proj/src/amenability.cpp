#include "nbrw/amenability.hpp"

#include "nbrw/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace nbrw {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::consistent_amenable: return "consistent_amenable";
    case Verdict::consistent_nonamenable: return "consistent_nonamenable";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

AreaVol area_vol(const Multigraph& g, std::span<const Vertex> set)
{
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : set) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) throw UnknownVertex(std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    AreaVol out;
    for (std::size_t v = 0; v < in.size(); ++v) {
        if (!in[v]) continue;
        out.vol += g.degree(static_cast<Vertex>(v));
        out.area += g.stubs(static_cast<Vertex>(v));
        for (const auto& a : g.neighbors(static_cast<Vertex>(v)))
            if (!in[static_cast<std::size_t>(a.to)]) out.area += a.multiplicity;
    }
    return out;
}

AreaVol area_vol(const GraphSource& source, const std::vector<std::string>& set)
{
    std::unordered_set<std::string> in(set.begin(), set.end());
    AreaVol out;
    for (const auto& v : in) {
        const auto loc = source.local(v);
        out.vol += 2 * loc.loops;
        for (const auto& n : loc.neighbors) {
            out.vol += n.multiplicity;
            if (!in.count(n.label)) out.area += n.multiplicity;
        }
    }
    return out;
}

namespace {

class ConnectedSetSearch {
public:
    ConnectedSetSearch(const Multigraph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), in_(g.num_vertices(), 0), touch_(g.num_vertices(), 0)
    {
    }

    // Enumerates each connected set containing root exactly once, using
    // only vertices accepted by `allowed`.
    template <class Allowed>
    void run(Vertex root, Allowed allowed)
    {
        add(root);
        std::vector<Vertex> ext;
        for (const auto& a : g_.neighbors(root))
            if (allowed(a.to)) ext.push_back(a.to);
        extend(ext, allowed);
        remove(root);
    }

    std::uint64_t visited() const { return visited_; }
    bool found() const { return best_vol_ > 0; }
    std::int64_t best_area() const { return best_area_; }
    std::int64_t best_vol() const { return best_vol_; }
    const std::vector<Vertex>& best_set() const { return best_set_; }

private:
    template <class Allowed>
    void extend(std::vector<Vertex> ext, Allowed allowed)
    {
        if (++visited_ > budget_)
            throw BudgetExceeded("isoperimetric search visited more than " + std::to_string(budget_) + " sets");
        const std::int64_t area = vol_ - inner_;
        if (best_vol_ == 0 || area * best_vol_ < best_area_ * vol_) {
            best_area_ = area;
            best_vol_ = vol_;
            best_set_ = set_;
        }
        if (static_cast<int>(set_.size()) == k_) return;
        while (!ext.empty()) {
            const Vertex w = ext.back();
            ext.pop_back();
            std::vector<Vertex> next = ext;
            for (const auto& a : g_.neighbors(w)) {
                const auto u = static_cast<std::size_t>(a.to);
                if (!in_[u] && touch_[u] == 0 && allowed(a.to) &&
                    std::find(next.begin(), next.end(), a.to) == next.end())
                    next.push_back(a.to);
            }
            add(w);
            extend(std::move(next), allowed);
            remove(w);
        }
    }

    void add(Vertex w)
    {
        std::int64_t shared = 0;
        for (const auto& a : g_.neighbors(w)) {
            if (in_[static_cast<std::size_t>(a.to)]) shared += a.multiplicity;
            ++touch_[static_cast<std::size_t>(a.to)];
        }
        inner_ += 2 * shared + 2 * g_.loops(w);
        vol_ += g_.degree(w);
        in_[static_cast<std::size_t>(w)] = 1;
        set_.push_back(w);
    }

    void remove(Vertex w)
    {
        set_.pop_back();
        in_[static_cast<std::size_t>(w)] = 0;
        std::int64_t shared = 0;
        for (const auto& a : g_.neighbors(w)) {
            if (in_[static_cast<std::size_t>(a.to)]) shared += a.multiplicity;
            --touch_[static_cast<std::size_t>(a.to)];
        }
        inner_ -= 2 * shared + 2 * g_.loops(w);
        vol_ -= g_.degree(w);
    }

    const Multigraph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<char> in_;
    std::vector<int> touch_; // number of set members adjacent to a vertex
    std::vector<Vertex> set_;
    std::int64_t inner_ = 0; // sum over v in F of e(v, F)
    std::int64_t vol_ = 0;
    std::int64_t best_area_ = 0;
    std::int64_t best_vol_ = 0;
    std::vector<Vertex> best_set_;
};

std::vector<std::string> labels_of(const Multigraph& g, std::span<const Vertex> set)
{
    std::vector<std::string> out;
    for (Vertex v : set) out.push_back(g.label(v));
    return out;
}

} // namespace

IsoperimetricReport iota_bruteforce(const Multigraph& g, int k, const IotaOptions& options)
{
    if (k < 1) throw BadParams("subset size cap k must be >= 1");
    if (g.num_vertices() == 0) throw BadParams("empty graph");
    IsoperimetricReport rep;
    rep.k = k;
    ConnectedSetSearch search(g, k, options.budget);
    if (options.anchor) {
        const Vertex root = *options.anchor;
        if (root < 0 || static_cast<std::size_t>(root) >= g.num_vertices()) throw UnknownVertex(std::to_string(root));
        search.run(root, [root](Vertex u) { return u != root; });
        rep.scope = "connected F containing '" + g.label(root) + "' with |F| <= " + std::to_string(k);
    } else {
        for (Vertex root = 0; root < static_cast<Vertex>(g.num_vertices()); ++root)
            search.run(root, [root](Vertex u) { return u > root; });
        rep.scope = "all F with |F| <= " + std::to_string(k);
    }
    rep.subsets_visited = search.visited();
    rep.lower_bound_exact = fraction<Rational>(search.best_area(), search.best_vol());
    rep.upper_bounds.push_back(
        {"minimiser over scope", labels_of(g, search.best_set()), search.best_area(), search.best_vol()});
    if (!g.truncated() && g.num_vertices() > static_cast<std::size_t>(k)) {
        std::vector<Vertex> all(g.num_vertices());
        std::iota(all.begin(), all.end(), 0);
        const auto whole = area_vol(g, all);
        rep.upper_bounds.push_back({"whole vertex set", labels_of(g, all), whole.area, whole.vol});
    }
    return rep;
}

namespace {

std::vector<FolnerPoint> ball_ratios(const BallView& view, int r_max)
{
    const Multigraph& g = view.graph;
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return view.distance[static_cast<std::size_t>(a)] < view.distance[static_cast<std::size_t>(b)];
    });
    std::vector<char> in(g.num_vertices(), 0);
    std::vector<FolnerPoint> out;
    std::int64_t inner = 0;
    std::int64_t vol = 0;
    std::size_t i = 0;
    for (int r = 0; r <= std::min(r_max, view.radius); ++r) {
        for (; i < order.size() && view.distance[static_cast<std::size_t>(order[i])] <= r; ++i) {
            const Vertex w = order[i];
            std::int64_t shared = 0;
            for (const auto& a : g.neighbors(w))
                if (in[static_cast<std::size_t>(a.to)]) shared += a.multiplicity;
            inner += 2 * shared + 2 * g.loops(w);
            vol += g.degree(w);
            in[static_cast<std::size_t>(w)] = 1;
        }
        const std::int64_t area = vol - inner;
        out.push_back({r, area, vol, static_cast<double>(area) / static_cast<double>(vol)});
    }
    return out;
}

} // namespace

std::vector<FolnerPoint> folner_trend(const Multigraph& g, Vertex x, int r_max)
{
    return ball_ratios(ball(g, x, r_max), r_max);
}

std::vector<FolnerPoint> folner_trend(const GraphSource& source, const std::string& x, int r_max,
                                      std::size_t max_vertices)
{
    return ball_ratios(ball_capped(source, x, r_max, max_vertices), r_max);
}

AmenabilityDiagnostic diagnose(const GraphSource& source, const std::string& x, int n_max, int r_max, int k,
                               const DiagnoseOptions& options)
{
    if (n_max < 1 || r_max < 0 || k < 1) throw BadParams("need n_max >= 1, r_max >= 0, k >= 1");
    AmenabilityDiagnostic out;

    out.small_cycle_radius = probe_small_cycle_radius(source, x, options.probe_radius, options.max_cycle_radius);
    out.prerequisite_verified = out.small_cycle_radius.has_value();

    if (out.prerequisite_verified) {
        out.notes.push_back("small cycles dense: every ball of radius " + std::to_string(*out.small_cycle_radius) +
                            " centred within distance " + std::to_string(options.probe_radius) +
                            " of the root contains a cycle");
        SourceWalkOptions walk{NumericMode::floating, options.max_ball_vertices};
        out.rho_estimate = spectral_radius_nbrw(source, x, x, n_max, walk);
        out.rho_sequence = "q^(n)(x,x)";
    } else {
        out.notes.push_back("PrerequisiteUnverified: no cycle within radius " +
                            std::to_string(options.max_cycle_radius) +
                            " of some probed vertex; the rho(Q) criterion does not apply (e.g. trees)");
        SourceWalkOptions walk{NumericMode::rational, options.max_exact_ball_vertices};
        out.rho_estimate = spectral_radius_nbrw_sphere_max(source, x, n_max, walk);
        out.rho_sequence = "max_y q^(n)(x,y)";
        out.notes.push_back("rho estimate is informational only");
    }

    if (out.rho_estimate.n_used < n_max)
        out.notes.push_back("rho estimate stopped at n = " + std::to_string(out.rho_estimate.n_used) +
                            " by the ball size cap");

    // Sets of size <= k through x lie in B(x, k-1); stubs keep Area exact.
    const BallView near = ball(source, x, k - 1);
    IotaOptions iota;
    iota.anchor = near.center;
    iota.budget = options.budget;
    out.iota_report = iota_bruteforce(near.graph, k, iota);
    out.iota_report.folner_trend = folner_trend(source, x, r_max, options.max_ball_vertices);

    const auto& trend = out.iota_report.folner_trend;
    const double last = trend.back().ratio;
    const bool falling = trend.size() < 2 || last <= trend[trend.size() - 2].ratio;
    out.folner_to_zero = last < options.folner_max && falling;
    if (trend.back().radius < r_max)
        out.notes.push_back("Folner trend truncated at radius " + std::to_string(trend.back().radius) +
                            " by the ball size cap");
    out.rho_near_one = out.rho_estimate.value >= options.rho_amenable_min;
    out.rho_below_one = out.rho_estimate.value <= options.rho_nonamenable_max;
    out.iota_positive = out.iota_report.lower_bound_exact && sgn(*out.iota_report.lower_bound_exact) > 0;

    if (!out.prerequisite_verified) {
        out.verdict = Verdict::inconclusive;
        if (out.iota_positive && !out.folner_to_zero && out.rho_below_one)
            out.notes.push_back("nonamenable evidence: positive isoperimetric minimum, Folner ratios bounded away "
                                "from 0, rho estimate below 1");
    } else if (out.folner_to_zero && out.rho_near_one) {
        out.verdict = Verdict::consistent_amenable;
        out.notes.push_back("Folner evidence supports amenability; rho near 1 is consistent with it");
    } else if (out.iota_positive && !out.folner_to_zero && out.rho_below_one) {
        out.verdict = Verdict::consistent_nonamenable;
        out.notes.push_back("isoperimetric minimum positive on the searched scope and rho bounded away from 1");
    } else {
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

AmenabilityDiagnostic diagnose(const AnyGraph& graph, const std::string& x, int n_max, int r_max, int k,
                               const DiagnoseOptions& options)
{
    if (std::holds_alternative<Multigraph>(graph))
        throw BadParams("amenability diagnosis is for infinite sources; finite graphs have iota = 0 and rho(Q) = 1");
    return diagnose(*std::get<SourcePtr>(graph), x, n_max, r_max, k, options);
}

} // namespace nbrw
