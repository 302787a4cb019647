#include "vrk/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace vrk {

SparseIntMatrix SparseIntMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                               std::vector<Triplet> triplets) {
    SparseIntMatrix m(rows, cols);
    std::erase_if(triplets, [](const Triplet& t) { return t.value == 0; });
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < triplets.size(); ++i) {
        const Triplet& t = triplets[i];
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::invalid_argument("triplet out of bounds at (" + std::to_string(t.row) +
                                        "," + std::to_string(t.col) + ")");
        if (i > 0 && triplets[i - 1].row == t.row && triplets[i - 1].col == t.col)
            throw std::invalid_argument("duplicate triplet at (" + std::to_string(t.row) + "," +
                                        std::to_string(t.col) + ")");
    }
    m.entries_ = std::move(triplets);
    return m;
}

Integer SparseIntMatrix::entry(std::int64_t row, std::int64_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                               [](const Triplet& t, const std::pair<std::int64_t, std::int64_t>& p) {
                                   return t.row != p.first ? t.row < p.first : t.col < p.second;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return Integer(0);
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    std::vector<Triplet> flipped;
    flipped.reserve(entries_.size());
    for (const Triplet& t : entries_) flipped.push_back({t.col, t.row, t.value});
    return from_triplets(cols_, rows_, std::move(flipped));
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("sparse multiply: shape mismatch");
    // rows of b, for streaming row-by-row accumulation
    std::vector<std::vector<const SparseIntMatrix::Triplet*>> b_rows(
        static_cast<std::size_t>(b.rows()));
    for (const auto& t : b.entries()) b_rows[static_cast<std::size_t>(t.row)].push_back(&t);

    std::vector<SparseIntMatrix::Triplet> out;
    std::map<std::int64_t, Integer> acc;
    std::size_t i = 0;
    const auto& ae = a.entries();
    while (i < ae.size()) {
        std::int64_t row = ae[i].row;
        acc.clear();
        for (; i < ae.size() && ae[i].row == row; ++i)
            for (const auto* bt : b_rows[static_cast<std::size_t>(ae[i].col)])
                acc[bt->col] += ae[i].value * bt->value;
        for (auto& [col, val] : acc)
            if (val != 0) out.push_back({row, col, std::move(val)});
    }
    return SparseIntMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

DenseIntMatrix DenseIntMatrix::identity(std::int64_t n) {
    DenseIntMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseIntMatrix DenseIntMatrix::from_sparse(const SparseIntMatrix& s) {
    DenseIntMatrix m(s.rows(), s.cols());
    for (const auto& t : s.entries()) m.at(t.row, t.col) = t.value;
    return m;
}

DenseIntMatrix multiply(const DenseIntMatrix& a, const DenseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dense multiply: shape mismatch");
    DenseIntMatrix out(a.rows(), b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::int64_t j = 0; j < b.cols(); ++j) {
                const Integer& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

} // namespace vrk
