#include "nbrw/walks.hpp"

#include "nbrw/error.hpp"
#include "nbrw/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nbrw {

std::string to_string(SpectralMethod m)
{
    switch (m) {
    case SpectralMethod::exact_eigen: return "exact_eigen";
    case SpectralMethod::power_iteration: return "power_iteration";
    case SpectralMethod::root_test: return "root_test";
    case SpectralMethod::subsequence_root: return "subsequence_root";
    case SpectralMethod::geometric_ratio: return "geometric_ratio";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Limits

ResidueLimits nbrw_residue_limits(const NbrwKernel& kernel, const OlgStructure& structure, Vertex x, Vertex y)
{
    const auto& space = kernel.space();
    ResidueLimits out;
    for (EdgeId e : space.in_edges(x)) {
        const auto& comp = structure.components[static_cast<std::size_t>(structure.component_of[static_cast<std::size_t>(e)])];
        if (!comp.essential || comp.period == 0)
            throw Error("residue limits need every edge into the start vertex to lie in an essential class");
        out.period = std::lcm(out.period, comp.period);
    }
    out.limits.assign(static_cast<std::size_t>(out.period), Rational(0));
    const int deg_x = space.degree(x);
    for (EdgeId e : space.in_edges(x)) {
        const int ce = structure.component_of[static_cast<std::size_t>(e)];
        const auto& comp = structure.components[static_cast<std::size_t>(ce)];
        const int d = comp.period;
        // Counting measure restricted to an essential class is invariant,
        // so the class limit is d/|C| on the matching cyclic subclass.
        const Rational weight = fraction<Rational>(d, static_cast<std::int64_t>(comp.members.size()) * deg_x);
        for (EdgeId f : space.in_edges(y)) {
            if (structure.component_of[static_cast<std::size_t>(f)] != ce) continue;
            const int offset = ((structure.cyclic_index[static_cast<std::size_t>(f)] -
                                 structure.cyclic_index[static_cast<std::size_t>(e)]) % d + d) % d;
            for (int r = offset; r < out.period; r += d) out.limits[static_cast<std::size_t>(r)] += weight;
        }
    }
    return out;
}

namespace {

template <class T>
T from_rational(const Rational& q)
{
    if constexpr (std::is_same_v<T, Rational>)
        return q;
    else
        return q.get_d();
}

template <class T>
double abs_double(const T& v)
{
    return std::abs(to_double(v));
}

// Shared driver: fills rows from a trajectory and residue targets.
template <class T>
void fill_profile(LimitProfile<T>& profile, const std::vector<VertexDistribution<T>>& traj)
{
    const std::size_t nv = profile.residue_limits.size();
    std::vector<T> cumulative(nv, T(0));
    const int n_max = static_cast<int>(traj.size()) - 1;
    for (int n = 0; n <= n_max; ++n) {
        const auto& d = traj[static_cast<std::size_t>(n)].values;
        for (std::size_t y = 0; y < nv; ++y) {
            LimitRow<T> row{n, static_cast<Vertex>(y), d[y], std::nullopt, T(0), T(0)};
            if (n > 0) {
                cumulative[y] += d[y];
                row.cesaro = cumulative[y] / T(n);
            }
            row.target = from_rational<T>(
                profile.residue_limits[y][static_cast<std::size_t>(n % profile.period)]);
            row.residual = row.value - row.target;
            profile.rows.push_back(std::move(row));
        }
        if (!profile.converged_at && n >= profile.period) {
            const auto& prev = traj[static_cast<std::size_t>(n - profile.period)].values;
            bool settled = true;
            for (std::size_t y = 0; y < nv && settled; ++y) {
                const T diff = d[y] - prev[y];
                if constexpr (std::is_same_v<T, Rational>)
                    settled = is_zero(diff);
                else
                    settled = std::abs(diff) < 1e-12;
            }
            if (settled) profile.converged_at = n;
        }
    }
    for (std::size_t y = 0; y < nv; ++y) {
        const auto& last = profile.rows[profile.rows.size() - nv + y];
        profile.max_final_residual = std::max(profile.max_final_residual, abs_double(last.residual));
        if (last.cesaro)
            profile.max_final_cesaro_residual =
                std::max(profile.max_final_cesaro_residual,
                         abs_double(T(*last.cesaro - from_rational<T>(profile.cesaro_targets[y]))));
    }
}

} // namespace

template <class T>
LimitProfile<T> nbrw_limit_profile(const Multigraph& g, Vertex x, int n_max)
{
    if (n_max < 0) throw BadParams("n_max must be nonnegative");
    g.validate();
    const NbrwKernel kernel(g);
    const OlgStructure structure = analyze_structure(kernel);
    LimitProfile<T> profile;
    profile.from = x;
    for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y) {
        auto lim = nbrw_residue_limits(kernel, structure, x, y);
        profile.period = lim.period;
        profile.residue_limits.push_back(std::move(lim.limits));
        profile.cesaro_targets.push_back(fraction<Rational>(g.degree(y), g.num_oriented_edges()));
    }
    fill_profile(profile, nbrw_trajectory<T>(kernel, x, n_max));
    return profile;
}

template <class T>
LimitProfile<T> srw_limit_profile(const Multigraph& g, Vertex x, int n_max)
{
    if (n_max < 0) throw BadParams("n_max must be nonnegative");
    g.validate();
    const auto bip = is_bipartite(g);
    const auto dist = bfs_distances(g, x);
    LimitProfile<T> profile;
    profile.from = x;
    profile.period = bip.bipartite ? 2 : 1;
    for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y) {
        const Rational stationary = fraction<Rational>(g.degree(y), g.num_oriented_edges());
        profile.cesaro_targets.push_back(stationary);
        if (!bip.bipartite) {
            profile.residue_limits.push_back({stationary});
        } else {
            std::vector<Rational> lim(2, Rational(0));
            lim[static_cast<std::size_t>(dist[static_cast<std::size_t>(y)] % 2)] = 2 * stationary;
            profile.residue_limits.push_back(std::move(lim));
        }
    }
    fill_profile(profile, srw_trajectory<T>(g, x, n_max));
    return profile;
}

template LimitProfile<double> nbrw_limit_profile<double>(const Multigraph&, Vertex, int);
template LimitProfile<Rational> nbrw_limit_profile<Rational>(const Multigraph&, Vertex, int);
template LimitProfile<double> srw_limit_profile<double>(const Multigraph&, Vertex, int);
template LimitProfile<Rational> srw_limit_profile<Rational>(const Multigraph&, Vertex, int);

// ---------------------------------------------------------------------------
// Root tests

namespace {

double log_value(double v) { return std::log(v); }

double log_value(const Rational& q)
{
    auto log_z = [](const BigInt& z) {
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    };
    return log_z(q.get_num()) - log_z(q.get_den());
}

bool positive(double v) { return v > 0.0; }
bool positive(const Rational& q) { return sgn(q) > 0; }

template <class T>
SpectralEstimate root_test_impl(std::span<const T> a)
{
    SpectralEstimate est;
    const int N = static_cast<int>(a.size()) - 1;
    est.n_used = std::max(N, 0);
    std::vector<int> admissible;
    for (int n = 1; n <= N; ++n) {
        if (!positive(a[static_cast<std::size_t>(n)])) continue;
        admissible.push_back(n);
        est.roots.emplace_back(n, std::exp(log_value(a[static_cast<std::size_t>(n)]) / n));
    }
    if (admissible.empty()) throw AllZero("no positive term a_n with 1 <= n <= " + std::to_string(N));

    int spacing = 0;
    for (int n : admissible) spacing = std::gcd(spacing, n);
    if (spacing > 1) est.residue_class = spacing;
    est.method = spacing > 1 ? SpectralMethod::subsequence_root : SpectralMethod::root_test;

    const auto window = static_cast<std::size_t>((N + 3) / 4);
    const std::size_t first = est.roots.size() > window ? est.roots.size() - window : 0;
    est.value = 0.0;
    for (std::size_t i = first; i < est.roots.size(); ++i) est.value = std::max(est.value, est.roots[i].second);

    // Monotonicity of the tail of the root sequence.
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = first + 1; i < est.roots.size(); ++i) {
        if (est.roots[i].second < est.roots[i - 1].second) increasing = false;
        if (est.roots[i].second > est.roots[i - 1].second) decreasing = false;
    }
    est.monotonicity_note = increasing && decreasing ? "constant tail"
                            : increasing            ? "tail increasing; estimate is a lower bound trend"
                            : decreasing            ? "tail decreasing"
                                                    : "tail not monotone";

    if constexpr (std::is_same_v<T, Rational>) {
        // Geometric tail: a_(n+p) = r a_n for the last three steps.
        const int p = std::max(spacing, 1);
        if (admissible.size() >= 4) {
            const std::size_t k = admissible.size();
            bool geometric = true;
            std::optional<Rational> ratio;
            for (std::size_t i = k - 3; i < k; ++i) {
                if (admissible[i] - admissible[i - 1] != p) {
                    geometric = false;
                    break;
                }
                Rational r = a[static_cast<std::size_t>(admissible[i])] / a[static_cast<std::size_t>(admissible[i - 1])];
                if (ratio && *ratio != r) {
                    geometric = false;
                    break;
                }
                ratio = r;
            }
            if (geometric && ratio) {
                est.method = SpectralMethod::geometric_ratio;
                est.value = std::pow(ratio->get_d(), 1.0 / p);
                if (p == 1) est.exact_value = *ratio;
                est.monotonicity_note = "geometric tail with ratio " + to_string(*ratio) +
                                        (p > 1 ? " per " + std::to_string(p) + " steps" : "");
            }
        }
    }
    return est;
}

} // namespace

SpectralEstimate root_test_estimate(std::span<const double> a) { return root_test_impl<double>(a); }
SpectralEstimate root_test_estimate(std::span<const Rational> a) { return root_test_impl<Rational>(a); }

SpectralEstimate spectral_radius_nbrw(const Multigraph& g, Vertex x, Vertex y, int n_max)
{
    g.validate();
    if (n_max < 1) throw BadParams("n_max must be >= 1");
    const NbrwKernel kernel(g);
    std::vector<double> a;
    nbrw_iterate<double>(kernel, x, n_max, [&](int, std::span<const double> d) {
        a.push_back(d[static_cast<std::size_t>(y)]);
    });
    SpectralEstimate est = root_test_estimate(a);
    est.value = 1.0;
    est.exact_value = Rational(1);
    est.method = SpectralMethod::exact_eigen;
    est.monotonicity_note = "finite graph: rho(Q) = 1; root sequence attached as evidence";
    return est;
}

namespace {

enum class TargetPolicy { fixed, ray, sphere_max };

template <class T>
std::vector<T> source_sequence(const GraphSource& source, const std::string& x, TargetPolicy policy,
                               const std::function<std::string(int)>& target_at, int n_max,
                               std::size_t max_ball_vertices)
{
    if (n_max < 0) throw BadParams("n_max must be nonnegative");
    const bool returning = policy == TargetPolicy::fixed && target_at(0) == x;
    // A walk of length n that ends at x never leaves B(x, n/2); any walk
    // of length n stays in B(x, n).
    const int radius = returning ? (n_max + 1) / 2 : n_max;
    const BallView view = ball_capped(source, x, radius, max_ball_vertices);
    const int n_used = std::min(n_max, returning ? 2 * view.radius + 1 : view.radius);

    const NbrwKernel kernel(view.graph);
    std::vector<T> a;
    std::optional<Vertex> fixed_target;
    if (policy == TargetPolicy::fixed) {
        if (auto v = view.graph.find(target_at(0))) fixed_target = *v;
    }
    nbrw_iterate<T>(kernel, view.center, n_used, [&](int n, std::span<const T> d) {
        switch (policy) {
        case TargetPolicy::fixed:
            a.push_back(fixed_target ? d[static_cast<std::size_t>(*fixed_target)] : T(0));
            break;
        case TargetPolicy::ray: {
            auto v = view.graph.find(target_at(n));
            a.push_back(v ? d[static_cast<std::size_t>(*v)] : T(0));
            break;
        }
        case TargetPolicy::sphere_max: {
            T best(0);
            for (const auto& value : d)
                if (value > best) best = value;
            a.push_back(best);
            break;
        }
        }
    });
    return a;
}

SpectralEstimate source_estimate(const GraphSource& source, const std::string& x, TargetPolicy policy,
                                 const std::function<std::string(int)>& target_at, int n_max,
                                 const SourceWalkOptions& options)
{
    if (options.mode == NumericMode::rational)
        return root_test_estimate(
            source_sequence<Rational>(source, x, policy, target_at, n_max, options.max_ball_vertices));
    return root_test_estimate(source_sequence<double>(source, x, policy, target_at, n_max, options.max_ball_vertices));
}

} // namespace

template <class T>
std::vector<T> nbrw_source_sequence(const GraphSource& source, const std::string& x,
                                    const std::function<std::string(int)>& target_at, int n_max,
                                    std::size_t max_ball_vertices)
{
    return source_sequence<T>(source, x, TargetPolicy::ray, target_at, n_max, max_ball_vertices);
}

template std::vector<double> nbrw_source_sequence<double>(const GraphSource&, const std::string&,
                                                          const std::function<std::string(int)>&, int, std::size_t);
template std::vector<Rational> nbrw_source_sequence<Rational>(const GraphSource&, const std::string&,
                                                              const std::function<std::string(int)>&, int,
                                                              std::size_t);

template <class T>
std::map<std::string, T> nbrw_nstep_source(const GraphSource& source, const std::string& x, int n)
{
    if (n < 0) throw BadParams("n must be nonnegative");
    const BallView view = ball(source, x, n);
    const NbrwKernel kernel(view.graph);
    const auto dist = nbrw_nstep<T>(kernel, view.center, n);
    std::map<std::string, T> out;
    for (Vertex v = 0; v < static_cast<Vertex>(view.graph.num_vertices()); ++v)
        if (!is_zero(dist.values[static_cast<std::size_t>(v)]))
            out.emplace(view.graph.label(v), dist.values[static_cast<std::size_t>(v)]);
    return out;
}

template std::map<std::string, double> nbrw_nstep_source<double>(const GraphSource&, const std::string&, int);
template std::map<std::string, Rational> nbrw_nstep_source<Rational>(const GraphSource&, const std::string&, int);

SpectralEstimate spectral_radius_nbrw(const GraphSource& source, const std::string& x, const std::string& y,
                                      int n_max, const SourceWalkOptions& options)
{
    return source_estimate(source, x, TargetPolicy::fixed, [y](int) { return y; }, n_max, options);
}

SpectralEstimate spectral_radius_nbrw_ray(const GraphSource& source, const std::string& x,
                                          const std::function<std::string(int)>& target_at, int n_max,
                                          const SourceWalkOptions& options)
{
    return source_estimate(source, x, TargetPolicy::ray, target_at, n_max, options);
}

SpectralEstimate spectral_radius_nbrw_sphere_max(const GraphSource& source, const std::string& x, int n_max,
                                                 const SourceWalkOptions& options)
{
    return source_estimate(source, x, TargetPolicy::sphere_max, {}, n_max, options);
}

SpectralEstimate spectral_radius_srw(const Multigraph& g, int max_iters)
{
    g.validate();
    const auto p = srw_matrix<double>(g);
    const std::size_t n = g.num_vertices();
    auto norm = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += g.degree(static_cast<Vertex>(i)) * v[i] * v[i];
        return std::sqrt(s);
    };
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i % 7) / 7.0;
    double nv = norm(v);
    for (auto& c : v) c /= nv;
    double lambda = 0.0;
    int it = 0;
    for (; it < max_iters; ++it) {
        auto w = p.apply(v);
        const double next = norm(w);
        for (auto& c : w) c /= next;
        v.swap(w);
        const bool done = std::abs(next - lambda) < 1e-15;
        lambda = next;
        if (done) break;
    }
    SpectralEstimate est;
    est.value = lambda;
    est.method = SpectralMethod::power_iteration;
    est.n_used = it + 1;
    est.monotonicity_note = "power iteration in l2(X, deg)";
    return est;
}

SpectralEstimate spectral_radius_srw(const GraphSource& source, const std::string& x, int n_max,
                                     const SourceWalkOptions& options)
{
    if (n_max < 1) throw BadParams("n_max must be >= 1");
    const BallView view = ball_capped(source, x, (n_max + 1) / 2, options.max_ball_vertices);
    const int n_used = std::min(n_max, 2 * view.radius + 1);
    auto run = [&](auto tag) {
        using T = decltype(tag);
        const auto p = srw_matrix<T>(view.graph);
        std::vector<T> cur(view.graph.num_vertices(), T(0));
        cur[static_cast<std::size_t>(view.center)] = T(1);
        std::vector<T> a{T(1)};
        for (int k = 1; k <= n_used; ++k) {
            cur = p.left_apply(cur);
            a.push_back(cur[static_cast<std::size_t>(view.center)]);
        }
        return root_test_estimate(std::span<const T>(a));
    };
    if (options.mode == NumericMode::rational) return run(Rational());
    return run(0.0);
}

NormEstimate qe_operator_norm(const NbrwKernel& kernel, int n_iters, double tolerance)
{
    const auto q = kernel.matrix<double>();
    const auto qt = q.transpose();
    const std::size_t m = kernel.size();
    auto norm2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return s;
    };
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = 1.0 + static_cast<double>((i * 37) % 11) / 11.0;
    const double n0 = std::sqrt(norm2(v));
    for (auto& c : v) c /= n0;

    double lambda = -1.0;
    for (int it = 1; it <= n_iters; ++it) {
        const auto w = q.apply(v);     // Q v
        const double rq = norm2(w);    // <v, Q^T Q v> with |v| = 1
        auto u = qt.apply(w);          // Q^T Q v
        const double nu = std::sqrt(norm2(u));
        if (nu == 0.0) return {0.0, it};
        for (auto& c : u) c /= nu;
        v.swap(u);
        if (std::abs(rq - lambda) <= tolerance) return {std::sqrt(rq), it};
        lambda = rq;
    }
    throw NoConvergence("operator norm power iteration did not settle within " + std::to_string(n_iters) +
                        " iterations");
}

MonteCarloResult monte_carlo_nbrw(const NbrwKernel& kernel, Vertex x, int n, std::int64_t trials, std::uint64_t seed)
{
    if (trials < 1) throw BadParams("trials must be >= 1");
    if (n < 0) throw BadParams("n must be nonnegative");
    const auto& space = kernel.space();
    MonteCarloResult out;
    out.trials = trials;
    out.counts.assign(space.num_vertices(), 0);
    for (std::int64_t t = 0; t < trials; ++t) {
        Vertex at = x;
        if (n > 0) {
            Rng rng(seed, static_cast<std::uint64_t>(t));
            auto first = space.out_edges(x);
            EdgeId e = first[rng.below(first.size())];
            for (int k = 1; k < n; ++k) {
                auto succ = space.successors(e);
                e = succ[rng.below(succ.size())];
            }
            at = space.head(e);
        }
        ++out.counts[static_cast<std::size_t>(at)];
    }
    out.frequencies.resize(out.counts.size());
    for (std::size_t i = 0; i < out.counts.size(); ++i)
        out.frequencies[i] = static_cast<double>(out.counts[i]) / static_cast<double>(trials);
    return out;
}

double total_variation(std::span<const double> p, std::span<const double> q)
{
    if (p.size() != q.size()) throw BadParams("distributions differ in size");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

UniformIrreducibilityReport uniform_irreducibility_check(const NbrwKernel& kernel, int K, double epsilon0)
{
    if (K < 1 || epsilon0 <= 0.0) throw BadParams("need K >= 1 and epsilon0 > 0");
    const auto& space = kernel.space();
    const auto m = static_cast<EdgeId>(space.size());
    UniformIrreducibilityReport rep;
    rep.K = K;
    rep.epsilon0 = epsilon0;
    rep.feasible = true;
    rep.attained_epsilon = 1.0;
    int needed = 0;

    std::vector<double> row, scratch;
    for (EdgeId e = 0; e < m; ++e) {
        // SOLG neighbours of e: successors and predecessors.
        std::vector<EdgeId> nbrs(space.successors(e).begin(), space.successors(e).end());
        for (EdgeId b : space.successors(OrientedEdgeSpace::reverse(e))) nbrs.push_back(OrientedEdgeSpace::reverse(b));
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());

        std::vector<double> best(nbrs.size(), 0.0);
        std::vector<int> first_ok(nbrs.size(), 0);
        row.assign(space.size(), 0.0);
        row[static_cast<std::size_t>(e)] = 1.0;
        for (int k = 1; k <= K; ++k) {
            kernel.step_into<double>(row, scratch);
            row.swap(scratch);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const double v = row[static_cast<std::size_t>(nbrs[i])];
                best[i] = std::max(best[i], v);
                if (first_ok[i] == 0 && v >= epsilon0) first_ok[i] = k;
            }
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            ++rep.pairs;
            rep.attained_epsilon = std::min(rep.attained_epsilon, best[i]);
            if (first_ok[i] == 0) {
                if (rep.feasible) rep.failing_pair = std::make_pair(e, nbrs[i]);
                rep.feasible = false;
            } else {
                needed = std::max(needed, first_ok[i]);
            }
        }
    }
    // The definition is about neighbours in a connected graph; a split
    // SOLG (cycle graphs) cannot be uniformly irreducible.
    if (m > 0) {
        const auto d0 = solg_distances(space, 0);
        const auto it = std::find(d0.begin(), d0.end(), -1);
        rep.solg_connected = it == d0.end();
        if (!rep.solg_connected) {
            rep.feasible = false;
            rep.failing_pair = std::make_pair(EdgeId{0}, static_cast<EdgeId>(it - d0.begin()));
        }
    }
    if (rep.feasible) rep.minimal_K = needed;

    rep.turnaround_L = turnaround_bound(kernel);
    if (rep.turnaround_L) {
        int M = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(space.num_vertices()); ++v) M = std::max(M, space.degree(v));
        rep.predicted_K = 2 * *rep.turnaround_L + 1;
        rep.predicted_epsilon = std::pow(static_cast<double>(M - 1), -static_cast<double>(*rep.predicted_K));
    }
    return rep;
}

} // namespace nbrw
