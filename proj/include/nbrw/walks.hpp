#ifndef NBRW_WALKS_HPP
#define NBRW_WALKS_HPP

#include "nbrw/edge_space.hpp"
#include "nbrw/generators.hpp"
#include "nbrw/multigraph.hpp"
#include "nbrw/rational.hpp"
#include "nbrw/sparse_matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbrw {

template <class T>
struct VertexDistribution {
    std::vector<T> values; // indexed by vertex id

    T total() const
    {
        T s(0);
        for (const auto& v : values) s += v;
        return s;
    }
};

// ---------------------------------------------------------------------------
// Vertex-NBRW through the edge chain

/// Edge mass at time 0: 1/deg(x) on every oriented edge ending at x.
template <class T>
std::vector<T> initial_edge_mass(const NbrwKernel& kernel, Vertex x)
{
    const auto& space = kernel.space();
    std::vector<T> mu(space.size(), T(0));
    const T w = fraction<T>(1, space.degree(x));
    for (EdgeId e : space.in_edges(x)) mu[static_cast<std::size_t>(e)] = w;
    return mu;
}

/// Sums edge mass by head vertex.
template <class T>
std::vector<T> mass_by_head(const OrientedEdgeSpace& space, std::span<const T> mu)
{
    std::vector<T> out(space.num_vertices(), T(0));
    for (EdgeId e = 0; e < static_cast<EdgeId>(space.size()); ++e)
        if (!is_zero(mu[static_cast<std::size_t>(e)]))
            out[static_cast<std::size_t>(space.head(e))] += mu[static_cast<std::size_t>(e)];
    return out;
}

/// Calls visit(n, q^(n)(x, .)) for n = 0..n_max.
template <class T, class Visit>
void nbrw_iterate(const NbrwKernel& kernel, Vertex x, int n_max, Visit&& visit)
{
    std::vector<T> mu = initial_edge_mass<T>(kernel, x);
    std::vector<T> next;
    for (int n = 0;; ++n) {
        if (n == 0) {
            // The empty walk sits at x.
            std::vector<T> at_x(kernel.space().num_vertices(), T(0));
            at_x[static_cast<std::size_t>(x)] = T(1);
            visit(0, std::span<const T>(at_x));
        } else {
            const auto dist = mass_by_head<T>(kernel.space(), mu);
            visit(n, std::span<const T>(dist));
        }
        if (n == n_max) break;
        kernel.step_into<T>(mu, next);
        mu.swap(next);
    }
}

/// q^(n)(x, .) by pushing the edge distribution forward n times.
template <class T>
VertexDistribution<T> nbrw_nstep(const NbrwKernel& kernel, Vertex x, int n)
{
    VertexDistribution<T> out;
    nbrw_iterate<T>(kernel, x, n, [&](int k, std::span<const T> d) {
        if (k == n) out.values.assign(d.begin(), d.end());
    });
    return out;
}

template <class T>
VertexDistribution<T> nbrw_nstep(const Multigraph& g, Vertex x, int n)
{
    return nbrw_nstep<T>(NbrwKernel(g), x, n);
}

/// Trajectories q^(n)(x, .) for n = 0..n_max.
template <class T>
std::vector<VertexDistribution<T>> nbrw_trajectory(const NbrwKernel& kernel, Vertex x, int n_max)
{
    std::vector<VertexDistribution<T>> out;
    nbrw_iterate<T>(kernel, x, n_max, [&](int, std::span<const T> d) {
        out.push_back({std::vector<T>(d.begin(), d.end())});
    });
    return out;
}

/// q^(n)(x, .) from explicit rows of Q_E^n summed as
/// (1/deg x) * sum over e+ = x, f+ = y.
template <class T>
VertexDistribution<T> nbrw_nstep_from_powers(const NbrwKernel& kernel, Vertex x, int n)
{
    const auto& space = kernel.space();
    const auto rows = kernel.power_rows<T>(n);
    VertexDistribution<T> out{std::vector<T>(space.num_vertices(), T(0))};
    for (EdgeId e : space.in_edges(x))
        for (EdgeId f = 0; f < static_cast<EdgeId>(space.size()); ++f)
            out.values[static_cast<std::size_t>(space.head(f))] +=
                rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
    for (auto& v : out.values) v /= T(space.degree(x));
    return out;
}

// ---------------------------------------------------------------------------
// Limits

/// Exact limits of q^(n)(x,y) along residue classes n = r mod period.
///
/// Uses the cyclic decomposition of each (essential) OLG component C:
/// q_E^(n)(e,f) -> d_C / |C| when n = index(f) - index(e) mod d_C and f
/// lies in the component of e, 0 otherwise. period is the lcm of the
/// component periods reached from x.
struct ResidueLimits {
    int period = 1;
    std::vector<Rational> limits; // size period
};

ResidueLimits nbrw_residue_limits(const NbrwKernel& kernel, const OlgStructure& structure, Vertex x, Vertex y);

template <class T>
struct LimitRow {
    int n;
    Vertex vertex;
    T value;
    std::optional<T> cesaro; // undefined at n = 0
    T target;
    T residual; // value - target
};

template <class T>
struct LimitProfile {
    Vertex from = 0;
    int period = 1;
    /// residue_limits[y][r]: limit of the walk at y along n = r mod period.
    std::vector<std::vector<Rational>> residue_limits;
    /// Limit of the Cesaro means, deg(y)/|E(X)|.
    std::vector<Rational> cesaro_targets;
    std::vector<LimitRow<T>> rows;
    /// First n at which the sup-norm change over one full period drops
    /// below 1e-12 (floating mode) or vanishes (rational mode).
    std::optional<int> converged_at;
    double max_final_residual = 0.0;
    double max_final_cesaro_residual = 0.0;
};

/// Vertex-NBRW trajectories with Cesaro means (q^(1)+...+q^(n))/n and
/// residuals against the residue-class limits.
template <class T>
LimitProfile<T> nbrw_limit_profile(const Multigraph& g, Vertex x, int n_max);

/// SRW trajectories; target deg(y)/|E| (doubled on the matching parity
/// class when g is bipartite).
template <class T>
LimitProfile<T> srw_limit_profile(const Multigraph& g, Vertex x, int n_max);

// ---------------------------------------------------------------------------
// Simple random walk

/// p(x,y) = e(x,y)/deg(x), loops counted twice.
template <class T>
SparseMatrix<T> srw_matrix(const Multigraph& g)
{
    std::vector<typename SparseMatrix<T>::Entry> entries;
    for (Vertex x = 0; x < static_cast<Vertex>(g.num_vertices()); ++x) {
        const int d = g.degree(x);
        if (g.loops(x) > 0)
            entries.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(x), fraction<T>(2 * g.loops(x), d)});
        for (const auto& a : g.neighbors(x))
            entries.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(a.to), fraction<T>(a.multiplicity, d)});
    }
    return SparseMatrix<T>(g.num_vertices(), g.num_vertices(), std::move(entries));
}

template <class T>
std::vector<VertexDistribution<T>> srw_trajectory(const Multigraph& g, Vertex x, int n_max)
{
    const auto p = srw_matrix<T>(g);
    std::vector<VertexDistribution<T>> out;
    std::vector<T> cur(g.num_vertices(), T(0));
    cur[static_cast<std::size_t>(x)] = T(1);
    out.push_back({cur});
    for (int n = 1; n <= n_max; ++n) {
        cur = p.left_apply(cur);
        out.push_back({cur});
    }
    return out;
}

template <class T>
VertexDistribution<T> srw_nstep(const Multigraph& g, Vertex x, int n)
{
    return srw_trajectory<T>(g, x, n).back();
}

// ---------------------------------------------------------------------------
// Spectral radius

enum class SpectralMethod { exact_eigen, power_iteration, root_test, subsequence_root, geometric_ratio };

std::string to_string(SpectralMethod m);

struct SpectralEstimate {
    double value = 0.0;
    SpectralMethod method = SpectralMethod::root_test;
    int n_used = 0;
    /// Spacing of the positive terms (period of the sequence), when > 1.
    std::optional<int> residue_class;
    std::string monotonicity_note;
    std::optional<Rational> exact_value;
    /// (n, a_n^(1/n)) for the positive terms.
    std::vector<std::pair<int, double>> roots;
};

/// Period-aware root test on a_1..a_N (a[0] is ignored).
///
/// Admissible n are those with a_n > 0; the point estimate is the maximum
/// of a_n^(1/n) over the last ceil(N/4) admissible n. In rational mode a
/// tail of at least three identical ratios a_(n+p)/a_n = r (p the spacing
/// of positive terms) is recognised as geometric and the limit r^(1/p) is
/// returned. Throws AllZero if no a_n with n >= 1 is positive.
SpectralEstimate root_test_estimate(std::span<const double> a);
SpectralEstimate root_test_estimate(std::span<const Rational> a);

/// rho(Q) on a finite graph is exactly 1; the root sequence of
/// q^(n)(x,y) up to n_max is attached as evidence.
SpectralEstimate spectral_radius_nbrw(const Multigraph& g, Vertex x, Vertex y, int n_max);

struct SourceWalkOptions {
    NumericMode mode = NumericMode::floating;
    /// Upper bound on the vertices of the ball materialised around x; the
    /// number of steps is reduced so that the computation stays exact.
    std::size_t max_ball_vertices = 2'000'000;
};

/// Root test on q^(n)(x,y) for an infinite source, computed exactly on
/// B(x,n) (B(x, ceil(n/2)) when x == y). A lower-bound style estimate.
SpectralEstimate spectral_radius_nbrw(const GraphSource& source, const std::string& x, const std::string& y,
                                      int n_max, const SourceWalkOptions& options = {});

/// Root test on q^(n)(x, y_n) with y_n = target_at(n), e.g. along a ray.
SpectralEstimate spectral_radius_nbrw_ray(const GraphSource& source, const std::string& x,
                                          const std::function<std::string(int)>& target_at, int n_max,
                                          const SourceWalkOptions& options = {});

/// Root test on max_y q^(n)(x,y).
SpectralEstimate spectral_radius_nbrw_sphere_max(const GraphSource& source, const std::string& x, int n_max,
                                                 const SourceWalkOptions& options = {});

/// Raw sequences behind the estimators: a[n] for n = 0..n_used.
template <class T>
std::vector<T> nbrw_source_sequence(const GraphSource& source, const std::string& x,
                                    const std::function<std::string(int)>& target_at, int n_max,
                                    std::size_t max_ball_vertices = 2'000'000);

/// q^(n)(x, .) on a source as a label -> probability map (nonzero only).
template <class T>
std::map<std::string, T> nbrw_nstep_source(const GraphSource& source, const std::string& x, int n);

/// Largest |eigenvalue| of P by power iteration in l^2(X, deg); 1 on
/// every finite connected graph.
SpectralEstimate spectral_radius_srw(const Multigraph& g, int max_iters = 100000);

/// Root test on p^(2n)(x,x) for a source, exact on B(x,n).
SpectralEstimate spectral_radius_srw(const GraphSource& source, const std::string& x, int n_max,
                                     const SourceWalkOptions& options = {});

struct NormEstimate {
    double value = 0.0;
    int iterations = 0;
};

/// sqrt of the top eigenvalue of Q_E^T Q_E by power iteration (adjoint
/// with respect to counting measure). Throws NoConvergence if the
/// Rayleigh quotient has not settled to `tolerance` after n_iters steps.
NormEstimate qe_operator_norm(const NbrwKernel& kernel, int n_iters = 100000, double tolerance = 1e-15);

// ---------------------------------------------------------------------------
// Monte Carlo

struct MonteCarloResult {
    std::int64_t trials = 0;
    std::vector<std::int64_t> counts;
    std::vector<double> frequencies;
};

/// Simulates the vertex NBRW directly: the first step is uniform over the
/// deg(x) edges at x, later steps uniform over the deg - 1 edges other
/// than the reverse of the last one. Trial i draws from Rng(seed, i).
MonteCarloResult monte_carlo_nbrw(const NbrwKernel& kernel, Vertex x, int n, std::int64_t trials,
                                  std::uint64_t seed);

double total_variation(std::span<const double> p, std::span<const double> q);

// ---------------------------------------------------------------------------
// Uniform irreducibility

struct UniformIrreducibilityReport {
    int K = 0;
    double epsilon0 = 0.0;
    bool feasible = false;
    /// Smallest K' <= K that works with epsilon0.
    std::optional<int> minimal_K;
    /// min over SOLG-adjacent ordered pairs of max_{k <= K} q_E^(k)(e,f).
    double attained_epsilon = 0.0;
    std::size_t pairs = 0;
    bool solg_connected = true;
    /// First pair that fails; for a disconnected SOLG an unreachable pair.
    std::optional<std::pair<EdgeId, EdgeId>> failing_pair;
    /// Bounds predicted from the turnaround bound L: K <= 2L+1 and
    /// epsilon >= (M-1)^-(2L+1).
    std::optional<int> turnaround_L;
    std::optional<int> predicted_K;
    std::optional<double> predicted_epsilon;
};

/// Ordered SOLG-adjacent pairs (e,f) must reach f from e within K steps
/// with probability >= epsilon0. Reported infeasible when the SOLG is
/// disconnected, as for cycle graphs.
UniformIrreducibilityReport uniform_irreducibility_check(const NbrwKernel& kernel, int K, double epsilon0);

} // namespace nbrw

#endif // NBRW_WALKS_HPP
