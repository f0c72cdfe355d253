#ifndef NBRW_COGROWTH_HPP
#define NBRW_COGROWTH_HPP

#include "nbrw/multigraph.hpp"
#include "nbrw/power_series.hpp"
#include "nbrw/rational.hpp"
#include "nbrw/walks.hpp"

#include <string>
#include <vector>

namespace nbrw {

// Statistics of the universal covering tree T rooted at a lift of x. The
// sphere S(x~, n) is the set of non-backtracking walks of length n from x
// and projects to X by taking the terminal vertex; the tree itself is
// never built. Walks are counted by iterating the 0/1 non-backtracking
// adjacency between arcs (oriented edge copies) of the multigraph.

enum class CogrowthMode { ordinary, nbrw_weighted };

std::string to_string(CogrowthMode mode);
CogrowthMode parse_cogrowth_mode(const std::string& text);

struct SphereCounts {
    /// by_vertex[n][y]: number of non-backtracking walks of length n from
    /// x that end at y.
    std::vector<std::vector<BigInt>> by_vertex;
    /// |S(x~, n)|.
    std::vector<BigInt> totals;
};

SphereCounts sphere_counts(const Multigraph& g, Vertex x, int n_max);

/// cog_n(x, y) for every y: table[n][y].
template <class T>
struct CogrowthTable {
    Vertex x = 0;
    CogrowthMode mode = CogrowthMode::ordinary;
    std::vector<std::vector<T>> table;
    std::vector<BigInt> sphere_sizes;
};

/// Ordinary cogrowth is the fraction of S(x~, n) above y. The weighted
/// variant gives the walk x~, x~_1, ..., x~_(n-1), y~ the mass
/// 1/deg(x) * prod 1/(deg(x~_i) - 1).
template <class T>
CogrowthTable<T> cogrowth_table(const Multigraph& g, Vertex x, int n_max, CogrowthMode mode);

template <class T>
struct CogrowthSeries {
    Vertex x = 0;
    Vertex y = 0;
    CogrowthMode mode = CogrowthMode::ordinary;
    std::vector<T> coefficients;
    std::vector<BigInt> sphere_sizes;
};

template <class T>
CogrowthSeries<T> cogrowth_series(const Multigraph& g, Vertex x, Vertex y, int n_max, CogrowthMode mode);

/// Same on an infinite source, computed on B(x, n_max) where every walk of
/// length <= n_max lives.
template <class T>
CogrowthSeries<T> cogrowth_series(const GraphSource& source, const std::string& x, const std::string& y,
                                  int n_max, CogrowthMode mode);

/// Period-aware root test on cog_n(x,y), same estimator as for rho(Q).
/// Throws AllZero when no coefficient with n >= 1 is positive.
template <class T>
SpectralEstimate cogrowth_rate(const CogrowthSeries<T>& series)
{
    return root_test_estimate(std::span<const T>(series.coefficients));
}

/// G(x,y|z) = sum p^(n)(x,y) z^n through degree N, exact.
PowerSeries<Rational> green_series(const Multigraph& g, Vertex x, Vertex y, int N);

struct FunctionalEquationReport {
    int d = 0;
    int N = 0;
    std::vector<Rational> lhs; // cogrowth coefficients
    std::vector<Rational> rhs; // expansion of the right-hand side
    Rational max_residual;
    bool exact_zero() const { return sgn(max_residual) == 0; }
};

/// For d-regular g (d >= 3) compares, coefficient by coefficient through
/// t^N, the cogrowth series C(x,y|t) with
///   delta_x(y)/d + ((d-1)^2 - t^2) / (d (d-1+t^2)) * G(x, y | d t / (d-1+t^2)),
/// all as formal power series over the rationals.
/// Throws NotRegular if g is not regular.
FunctionalEquationReport functional_equation_check(const Multigraph& g, Vertex x, Vertex y, int N);

} // namespace nbrw

#endif // NBRW_COGROWTH_HPP
