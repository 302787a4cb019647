#pragma once

#include "vrk/numeric.hpp"

#include <cstdint>
#include <vector>

namespace vrk {

// Exact-integer sparse matrix in triplet form: entries sorted by (row, col),
// no duplicates, no stored zeros. This is the assembly and interchange
// format; the elimination engines build their own working structures.
class SparseIntMatrix {
public:
    struct Triplet {
        std::int64_t row = 0;
        std::int64_t col = 0;
        Integer value;

        bool operator==(const Triplet&) const = default;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {}

    // Sorts, checks bounds, drops zeros, rejects duplicate positions.
    static SparseIntMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Triplet> triplets);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::int64_t nonzero_count() const { return static_cast<std::int64_t>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }

    const std::vector<Triplet>& entries() const { return entries_; }

    // Zero when the position is not stored.
    Integer entry(std::int64_t row, std::int64_t col) const;

    SparseIntMatrix transposed() const;

    bool operator==(const SparseIntMatrix&) const = default;

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<Triplet> entries_;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Dense exact matrix; used for unimodular transforms and small checks.
class DenseIntMatrix {
public:
    DenseIntMatrix() = default;
    DenseIntMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static DenseIntMatrix identity(std::int64_t n);
    static DenseIntMatrix from_sparse(const SparseIntMatrix& m);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    Integer& at(std::int64_t r, std::int64_t c) {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }
    const Integer& at(std::int64_t r, std::int64_t c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    bool operator==(const DenseIntMatrix&) const = default;

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<Integer> data_;
};

DenseIntMatrix multiply(const DenseIntMatrix& a, const DenseIntMatrix& b);

} // namespace vrk
