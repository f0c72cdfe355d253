#ifndef NBRW_SPARSE_MATRIX_HPP
#define NBRW_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace nbrw {

// Compressed-row sparse matrix over double or Rational. Transition
// kernels act on row vectors (distributions) through left_apply and on
// column vectors (functions) through apply.
template <class T>
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        T value;
    };

    SparseMatrix() = default;

    // Duplicate (row, col) entries are summed.
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
        : rows_(rows), cols_(cols), offsets_(rows + 1, 0)
    {
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        for (auto& e : entries) {
            assert(e.row < rows && e.col < cols);
            if (!cols_idx_.empty() && last_row_ == e.row && cols_idx_.back() == e.col) {
                values_.back() += e.value;
                continue;
            }
            cols_idx_.push_back(e.col);
            values_.push_back(std::move(e.value));
            ++offsets_[e.row + 1];
            last_row_ = e.row;
        }
        for (std::size_t r = 0; r < rows; ++r) offsets_[r + 1] += offsets_[r];
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }

    std::span<const std::size_t> row_cols(std::size_t r) const
    {
        return {cols_idx_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }
    std::span<const T> row_values(std::size_t r) const
    {
        return {values_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }

    T at(std::size_t r, std::size_t c) const
    {
        auto cs = row_cols(r);
        auto it = std::lower_bound(cs.begin(), cs.end(), c);
        if (it == cs.end() || *it != c) return T(0);
        return values_[offsets_[r] + static_cast<std::size_t>(it - cs.begin())];
    }

    // v^T M
    std::vector<T> left_apply(std::span<const T> v) const
    {
        assert(v.size() == rows_);
        std::vector<T> out(cols_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (v[r] == T(0)) continue;
            for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k)
                out[cols_idx_[k]] += v[r] * values_[k];
        }
        return out;
    }

    // M v
    std::vector<T> apply(std::span<const T> v) const
    {
        assert(v.size() == cols_);
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            T acc(0);
            for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k)
                acc += values_[k] * v[cols_idx_[k]];
            out[r] = acc;
        }
        return out;
    }

    SparseMatrix transpose() const
    {
        std::vector<Entry> entries;
        entries.reserve(values_.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k)
                entries.push_back({cols_idx_[k], r, values_[k]});
        return SparseMatrix(cols_, rows_, std::move(entries));
    }

    std::vector<T> row_sums() const
    {
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) out[r] += values_[k];
        return out;
    }

    std::vector<T> col_sums() const
    {
        std::vector<T> out(cols_, T(0));
        for (std::size_t k = 0; k < values_.size(); ++k) out[cols_idx_[k]] += values_[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t last_row_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> cols_idx_;
    std::vector<T> values_;
};

} // namespace nbrw

#endif // NBRW_SPARSE_MATRIX_HPP
