#ifndef NBRW_AMENABILITY_HPP
#define NBRW_AMENABILITY_HPP

#include "nbrw/generators.hpp"
#include "nbrw/multigraph.hpp"
#include "nbrw/rational.hpp"
#include "nbrw/walks.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbrw {

/// Area(F): unoriented edges with exactly one endpoint in F, with
/// multiplicity (stubs of a truncated graph count as leaving F).
/// Vol(F): sum of degrees. Loops add to Vol but never to Area.
struct AreaVol {
    std::int64_t area = 0;
    std::int64_t vol = 0;
    Rational ratio() const { return fraction<Rational>(area, vol); }
};

AreaVol area_vol(const Multigraph& g, std::span<const Vertex> set);
AreaVol area_vol(const GraphSource& source, const std::vector<std::string>& set);

struct IsoperimetricWitness {
    std::string description;
    std::vector<std::string> set;
    std::int64_t area = 0;
    std::int64_t vol = 0;
    Rational ratio() const { return fraction<Rational>(area, vol); }
};

struct FolnerPoint {
    int radius = 0;
    std::int64_t area = 0;
    std::int64_t vol = 0;
    double ratio = 0.0;
};

struct IsoperimetricReport {
    /// Exact minimum of Area/Vol over the search scope.
    std::optional<Rational> lower_bound_exact;
    std::string scope;
    int k = 0;
    std::uint64_t subsets_visited = 0;
    /// Every entry is a concrete set F with ratio >= iota(X).
    std::vector<IsoperimetricWitness> upper_bounds;
    std::vector<FolnerPoint> folner_trend;
};

struct IotaOptions {
    /// Restrict to sets containing this vertex (enough on vertex-transitive
    /// graphs); otherwise every connected set is enumerated once, rooted at
    /// its smallest vertex.
    std::optional<Vertex> anchor;
    std::uint64_t budget = 50'000'000;
};

/// Exact min of Area(F)/Vol(F) over nonempty F with |F| <= k.
///
/// Only connected F are enumerated. This loses nothing: if F splits into
/// non-adjacent parts F1..Fm then Area and Vol are both additive, so
/// Area(F)/Vol(F) is a mediant of the parts' ratios and at least their
/// minimum. Throws BudgetExceeded once more than options.budget sets have
/// been visited.
IsoperimetricReport iota_bruteforce(const Multigraph& g, int k, const IotaOptions& options = {});

/// Area/Vol of the balls B(x, r), r = 0..r_max.
std::vector<FolnerPoint> folner_trend(const Multigraph& g, Vertex x, int r_max);

/// Same on a source; stops early once the ball would exceed max_vertices.
std::vector<FolnerPoint> folner_trend(const GraphSource& source, const std::string& x, int r_max,
                                      std::size_t max_vertices = 2'000'000);

enum class Verdict { consistent_amenable, consistent_nonamenable, inconclusive };
std::string to_string(Verdict v);

struct DiagnoseOptions {
    int probe_radius = 3;
    int max_cycle_radius = 4;
    std::uint64_t budget = 50'000'000;
    std::size_t max_ball_vertices = 2'000'000;
    /// Ball cap for the exact fallback estimate used when the dense-cycle
    /// probe fails.
    std::size_t max_exact_ball_vertices = 20'000;
    double rho_amenable_min = 0.95;
    double folner_max = 0.1;
    double rho_nonamenable_max = 0.9;
};

struct AmenabilityDiagnostic {
    SpectralEstimate rho_estimate;
    std::string rho_sequence; // which walk statistic fed the root test
    IsoperimetricReport iota_report;
    Verdict verdict = Verdict::inconclusive;
    bool prerequisite_verified = false;
    std::optional<int> small_cycle_radius;
    bool folner_to_zero = false;
    bool rho_near_one = false;
    bool iota_positive = false;
    bool rho_below_one = false;
    std::vector<std::string> notes;
};

/// Evidence for or against amenability of an infinite source, read
/// against the criterion "amenable iff rho(Q) = 1" (which needs dense
/// small cycles and bounded degree). Returns a consistency verdict, never
/// a proof. When the dense-cycle probe fails the verdict is inconclusive
/// and the remaining evidence is informational.
AmenabilityDiagnostic diagnose(const GraphSource& source, const std::string& x, int n_max, int r_max, int k,
                               const DiagnoseOptions& options = {});

/// Rejects finite graphs with BadParams (iota = 0 and rho(Q) = 1 there).
AmenabilityDiagnostic diagnose(const AnyGraph& graph, const std::string& x, int n_max, int r_max, int k,
                               const DiagnoseOptions& options = {});

} // namespace nbrw

#endif // NBRW_AMENABILITY_HPP
