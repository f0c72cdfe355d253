#ifndef NBRW_EDGE_SPACE_HPP
#define NBRW_EDGE_SPACE_HPP

#include "nbrw/multigraph.hpp"
#include "nbrw/rational.hpp"
#include "nbrw/sparse_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbrw {

using EdgeId = std::int32_t;

/// The oriented edge set E(X) of a multigraph.
///
/// Every unoriented edge (including each copy of a parallel edge and each
/// loop) yields two oriented edges with consecutive ids 2k and 2k+1, so
/// reverse(e) == e ^ 1 and reverse never fixes an edge. Edges are listed
/// by increasing tail: the loops of u, then edges to each neighbour v > u
/// in increasing order, copy by copy.
class OrientedEdgeSpace {
public:
    explicit OrientedEdgeSpace(const Multigraph& g);

    std::size_t size() const noexcept { return tail_.size(); }
    std::size_t num_vertices() const noexcept { return degree_.size(); }

    Vertex tail(EdgeId e) const { return tail_[static_cast<std::size_t>(e)]; }
    Vertex head(EdgeId e) const { return head_[static_cast<std::size_t>(e)]; }
    static EdgeId reverse(EdgeId e) noexcept { return e ^ 1; }
    /// Degree in the ambient graph, counting loops twice and stubs once.
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    bool is_loop(EdgeId e) const { return tail(e) == head(e); }

    std::span<const EdgeId> out_edges(Vertex v) const { return slice(out_offsets_, out_, v); }
    std::span<const EdgeId> in_edges(Vertex v) const { return slice(in_offsets_, in_, v); }

    /// f with e -> f, i.e. tail(f) == head(e) and f != reverse(e).
    std::span<const EdgeId> successors(EdgeId e) const { return slice(succ_offsets_, succ_, e); }

    /// "u>v#k" with k the parallel-copy index, for reports.
    std::string describe(EdgeId e, const Multigraph& g) const;

private:
    template <class Idx>
    static std::span<const EdgeId> slice(const std::vector<std::size_t>& off, const std::vector<EdgeId>& data, Idx i)
    {
        const auto k = static_cast<std::size_t>(i);
        return {data.data() + off[k], off[k + 1] - off[k]};
    }

    std::vector<Vertex> tail_;
    std::vector<Vertex> head_;
    std::vector<int> copy_;
    std::vector<int> degree_;
    std::vector<std::size_t> out_offsets_, in_offsets_, succ_offsets_;
    std::vector<EdgeId> out_, in_, succ_;
};

/// Edge-NBRW transition kernel q_E(e,f) = 1/(deg(e+) - 1) for e -> f.
///
/// Rows are stochastic on ordinary graphs. On balls cut from a source the
/// degree of a boundary vertex still counts its stubs, so rows of edges
/// into the boundary lose the mass that would leave the ball.
class NbrwKernel {
public:
    /// Throws DegreeError if some edge ends at a vertex of degree < 2.
    explicit NbrwKernel(const Multigraph& g);

    const OrientedEdgeSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return space_.size(); }

    /// deg(e+) - 1, the common denominator of row e.
    int row_denominator(EdgeId e) const { return space_.degree(space_.head(e)) - 1; }

    template <class T>
    T entry(EdgeId e, EdgeId f) const
    {
        for (EdgeId s : space_.successors(e))
            if (s == f) return fraction<T>(1, row_denominator(e));
        return T(0);
    }

    template <class T>
    SparseMatrix<T> matrix() const
    {
        std::vector<typename SparseMatrix<T>::Entry> entries;
        for (EdgeId e = 0; e < static_cast<EdgeId>(size()); ++e) {
            const T w = fraction<T>(1, row_denominator(e));
            for (EdgeId f : space_.successors(e))
                entries.push_back({static_cast<std::size_t>(e), static_cast<std::size_t>(f), w});
        }
        return SparseMatrix<T>(size(), size(), std::move(entries));
    }

    /// One step of a row vector: out(f) = sum_e mu(e) q_E(e,f).
    template <class T>
    std::vector<T> step(std::span<const T> mu) const
    {
        std::vector<T> out(size(), T(0));
        step_into(mu, out);
        return out;
    }

    template <class T>
    void step_into(std::span<const T> mu, std::vector<T>& out) const
    {
        out.assign(size(), T(0));
        for (EdgeId e = 0; e < static_cast<EdgeId>(size()); ++e) {
            const T& m = mu[static_cast<std::size_t>(e)];
            if (is_zero(m)) continue;
            auto succ = space_.successors(e);
            if (succ.empty()) continue;
            const T share = m / T(row_denominator(e));
            for (EdgeId f : succ) out[static_cast<std::size_t>(f)] += share;
        }
    }

    /// Rows e of Q_E^n for every e, as a dense |E| x |E| table.
    template <class T>
    std::vector<std::vector<T>> power_rows(int n) const
    {
        std::vector<std::vector<T>> rows(size());
        std::vector<T> scratch;
        for (std::size_t e = 0; e < size(); ++e) {
            std::vector<T> row(size(), T(0));
            row[e] = T(1);
            for (int k = 0; k < n; ++k) {
                step_into<T>(row, scratch);
                row.swap(scratch);
            }
            rows[e] = std::move(row);
        }
        return rows;
    }

private:
    OrientedEdgeSpace space_;
};

/// Strongly connected structure of the oriented line graph.
struct OlgComponent {
    std::vector<EdgeId> members;
    bool essential = false; // no arc leaves the component
    int period = 0;         // gcd of closed-walk lengths; 0 if there is none
};

struct OlgStructure {
    std::vector<OlgComponent> components;
    std::vector<int> component_of; // per edge
    /// Level of each edge mod its component's period: within a component
    /// every arc e -> f satisfies cyclic_index(f) = cyclic_index(e) + 1.
    std::vector<int> cyclic_index;
    bool irreducible = false;
    std::optional<int> period; // set when irreducible

    std::size_t num_essential() const;
};

OlgStructure analyze_structure(const NbrwKernel& kernel);

/// Max over e of the length of a shortest OLG walk e -> reverse(e);
/// nullopt if some reverse is unreachable (cycle graphs).
std::optional<int> turnaround_bound(const NbrwKernel& kernel);

/// Shortest OLG walk lengths from e to every edge (-1 if unreachable).
std::vector<int> olg_distances(const OrientedEdgeSpace& space, EdgeId e);

/// Graph distance in the symmetrized OLG (e ~ f iff e -> f or f -> e).
/// Throws DisconnectedError if f is unreachable.
int solg_distance(const OrientedEdgeSpace& space, EdgeId e, EdgeId f);
std::vector<int> solg_distances(const OrientedEdgeSpace& space, EdgeId e);

struct SymmetryViolation {
    EdgeId e;
    EdgeId f;
    std::string lhs;
    std::string rhs;
};

struct SymmetryReport {
    int n = 0;
    NumericMode mode = NumericMode::rational;
    std::size_t pairs_checked = 0;
    double max_abs_difference = 0.0;
    std::vector<SymmetryViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks q_E^(n)(e,f) == q_E^(n)(reverse f, reverse e) for all pairs;
/// exactly in rational mode, to 1e-12 in floating mode.
SymmetryReport check_reversal_symmetry(const NbrwKernel& kernel, int n, NumericMode mode = NumericMode::rational);

} // namespace nbrw

#endif // NBRW_EDGE_SPACE_HPP
