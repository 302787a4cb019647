#pragma once

#include "vrk/sparse_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vrk {

// Smith normal form D = U * M * V with U, V unimodular and D diagonal with
// a divisibility chain. invariant_factors holds the nonzero diagonal
// (positive, ascending divisibility, including 1s); the rank is its length.
struct SmithForm {
    std::vector<Integer> invariant_factors;
    std::optional<DenseIntMatrix> transform_left;  // U, rows x rows
    std::optional<DenseIntMatrix> transform_right; // V, cols x cols

    std::int64_t rank() const { return static_cast<std::int64_t>(invariant_factors.size()); }

    // Factors > 1: the torsion a boundary matrix contributes.
    std::vector<Integer> nontrivial_factors() const;

    // D as a dense matrix of the given shape.
    DenseIntMatrix diagonal_matrix(std::int64_t rows, std::int64_t cols) const;
};

// Elimination picks pivots minimizing fill, (row nnz - 1) * (col nnz - 1),
// with smallest-magnitude then lowest-(col,row) tie-breaks; this keeps
// intermediate growth tame on boundary matrices whose entries start at +-1.
// Transform tracking is dense, so request it only at small sizes.
SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);

// Rank over the prime field F_p (p an odd size prime or 2; validated by
// callers). Same pivot strategy, field arithmetic.
std::int64_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p);

} // namespace vrk
