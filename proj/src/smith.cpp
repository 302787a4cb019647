#include "vrk/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vrk {

namespace {

// ext_gcd(a, b) -> (g, s, t) with s*a + t*b = g > 0 (a, b not both zero)
std::tuple<Integer, Integer, Integer> ext_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r; // truncated division is fine: invariants hold per step
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

// Shared sparse workspace: per-row hash maps plus per-column row sets, kept
// consistent by the mutation helpers below.
template <class Value>
struct Workspace {
    std::vector<std::unordered_map<std::int64_t, Value>> rows;
    std::vector<std::unordered_set<std::int64_t>> col_rows;
    std::vector<char> row_active, col_active;
    std::int64_t nrows, ncols;

    Workspace(std::int64_t r, std::int64_t c)
        : rows(static_cast<std::size_t>(r)), col_rows(static_cast<std::size_t>(c)),
          row_active(static_cast<std::size_t>(r), 1), col_active(static_cast<std::size_t>(c), 1),
          nrows(r), ncols(c) {}

    void set(std::int64_t r, std::int64_t c, Value v) {
        auto& row = rows[static_cast<std::size_t>(r)];
        if (v == Value(0)) {
            if (row.erase(c)) col_rows[static_cast<std::size_t>(c)].erase(r);
        } else {
            auto [it, inserted] = row.insert_or_assign(c, std::move(v));
            (void)it;
            if (inserted) col_rows[static_cast<std::size_t>(c)].insert(r);
        }
    }

    std::int64_t row_count(std::int64_t r) const {
        return static_cast<std::int64_t>(rows[static_cast<std::size_t>(r)].size());
    }
    std::int64_t col_count(std::int64_t c) const {
        return static_cast<std::int64_t>(col_rows[static_cast<std::size_t>(c)].size());
    }

    // Fill-minimizing pivot: minimize (row nnz - 1)*(col nnz - 1); ties by
    // magnitude (when the caller provides one), then (col, row). Columns
    // are scanned in ascending nnz so the bound (col nnz - 1)*(min row
    // nnz - 1) lets us stop early without missing a minimum.
    template <class Magnitude>
    std::optional<std::pair<std::int64_t, std::int64_t>> pick_pivot(Magnitude magnitude) const {
        std::int64_t min_row = -1;
        for (std::int64_t r = 0; r < nrows; ++r)
            if (row_active[static_cast<std::size_t>(r)] && row_count(r) > 0 &&
                (min_row < 0 || row_count(r) < min_row))
                min_row = row_count(r);
        if (min_row < 0) return std::nullopt;

        std::vector<std::vector<std::int64_t>> buckets;
        for (std::int64_t c = 0; c < ncols; ++c) {
            if (!col_active[static_cast<std::size_t>(c)]) continue;
            std::int64_t cnt = col_count(c);
            if (cnt == 0) continue;
            if (static_cast<std::size_t>(cnt) >= buckets.size())
                buckets.resize(static_cast<std::size_t>(cnt) + 1);
            buckets[static_cast<std::size_t>(cnt)].push_back(c);
        }

        bool have_best = false;
        std::int64_t best_cost = 0, best_row = -1, best_col = -1;
        Integer best_mag;
        for (std::size_t cnt = 1; cnt < buckets.size(); ++cnt) {
            if (have_best &&
                (static_cast<std::int64_t>(cnt) - 1) * (min_row - 1) > best_cost)
                break;
            for (std::int64_t c : buckets[cnt]) {
                for (std::int64_t r : col_rows[static_cast<std::size_t>(c)]) {
                    std::int64_t cost = (row_count(r) - 1) * (static_cast<std::int64_t>(cnt) - 1);
                    Integer mag = magnitude(rows[static_cast<std::size_t>(r)].at(c));
                    bool better = !have_best;
                    if (!better && cost != best_cost) better = cost < best_cost;
                    else if (!better && mag != best_mag) better = mag < best_mag;
                    else if (!better && c != best_col) better = c < best_col;
                    else if (!better) better = r < best_row;
                    if (better) {
                        have_best = true;
                        best_cost = cost;
                        best_mag = mag;
                        best_row = r;
                        best_col = c;
                        // a zero-fill unit pivot cannot be improved upon
                        if (best_cost == 0 && best_mag <= 1)
                            return std::make_pair(best_row, best_col);
                    }
                }
            }
        }
        if (!have_best) return std::nullopt;
        return std::make_pair(best_row, best_col);
    }
};

class IntegerEliminator {
public:
    IntegerEliminator(const SparseIntMatrix& m, bool with_transforms)
        : work_(m.rows(), m.cols()), with_transforms_(with_transforms) {
        for (const auto& t : m.entries()) work_.set(t.row, t.col, t.value);
        if (with_transforms_) {
            left_ = DenseIntMatrix::identity(m.rows());
            right_ = DenseIntMatrix::identity(m.cols());
        }
    }

    SmithForm run() {
        while (true) {
            auto pivot = work_.pick_pivot([](const Integer& v) { return abs(v); });
            if (!pivot) break;
            auto [pr, pc] = *pivot;
            normalize_pivot(pr, pc);
            eliminate(pr, pc);
        }
        return finish();
    }

private:
    // row_dst -= m * row_src (on the matrix and, mirrored, on U)
    void row_axpy(std::int64_t dst, std::int64_t src, const Integer& m) {
        if (m == 0) return;
        // copy source items: mutation invalidates iteration otherwise
        const auto& src_row = work_.rows[static_cast<std::size_t>(src)];
        std::vector<std::pair<std::int64_t, Integer>> items(src_row.begin(), src_row.end());
        for (auto& [c, v] : items) {
            auto& drow = work_.rows[static_cast<std::size_t>(dst)];
            auto it = drow.find(c);
            Integer nv = (it == drow.end() ? Integer(0) : it->second) - m * v;
            work_.set(dst, c, std::move(nv));
        }
        if (with_transforms_)
            for (std::int64_t j = 0; j < left_->cols(); ++j)
                left_->at(dst, j) -= m * left_->at(src, j);
    }

    // (row_a; row_b) <- (s*row_a + t*row_b ; u*row_a + v*row_b), s*v - t*u = +-1
    void row_two_op(std::int64_t a, std::int64_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
        std::unordered_set<std::int64_t> cols;
        for (auto& [c, val] : work_.rows[static_cast<std::size_t>(a)]) cols.insert(c);
        for (auto& [c, val] : work_.rows[static_cast<std::size_t>(b)]) cols.insert(c);
        for (std::int64_t c : cols) {
            auto& ra = work_.rows[static_cast<std::size_t>(a)];
            auto& rb = work_.rows[static_cast<std::size_t>(b)];
            auto ita = ra.find(c);
            auto itb = rb.find(c);
            Integer va = ita == ra.end() ? Integer(0) : ita->second;
            Integer vb = itb == rb.end() ? Integer(0) : itb->second;
            work_.set(a, c, s * va + t * vb);
            work_.set(b, c, u * va + v * vb);
        }
        if (with_transforms_)
            for (std::int64_t j = 0; j < left_->cols(); ++j) {
                Integer va = left_->at(a, j), vb = left_->at(b, j);
                left_->at(a, j) = s * va + t * vb;
                left_->at(b, j) = u * va + v * vb;
            }
    }

    void col_two_op(std::int64_t a, std::int64_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
        std::vector<std::int64_t> rows_touched;
        for (std::int64_t r : work_.col_rows[static_cast<std::size_t>(a)]) rows_touched.push_back(r);
        for (std::int64_t r : work_.col_rows[static_cast<std::size_t>(b)])
            if (!work_.col_rows[static_cast<std::size_t>(a)].count(r)) rows_touched.push_back(r);
        for (std::int64_t r : rows_touched) {
            auto& row = work_.rows[static_cast<std::size_t>(r)];
            auto ita = row.find(a);
            auto itb = row.find(b);
            Integer va = ita == row.end() ? Integer(0) : ita->second;
            Integer vb = itb == row.end() ? Integer(0) : itb->second;
            work_.set(r, a, s * va + t * vb);
            work_.set(r, b, u * va + v * vb);
        }
        if (with_transforms_)
            for (std::int64_t i = 0; i < right_->rows(); ++i) {
                Integer va = right_->at(i, a), vb = right_->at(i, b);
                right_->at(i, a) = s * va + t * vb;
                right_->at(i, b) = u * va + v * vb;
            }
    }

    Integer value_at(std::int64_t r, std::int64_t c) const {
        const auto& row = work_.rows[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? Integer(0) : it->second;
    }

    // gcd transforms until the pivot divides everything in its row/column
    void normalize_pivot(std::int64_t pr, std::int64_t pc) {
        while (true) {
            bool changed = false;
            Integer p = value_at(pr, pc);

            std::vector<std::int64_t> col_mates(work_.col_rows[static_cast<std::size_t>(pc)].begin(),
                                                work_.col_rows[static_cast<std::size_t>(pc)].end());
            std::sort(col_mates.begin(), col_mates.end());
            for (std::int64_t r : col_mates) {
                if (r == pr) continue;
                Integer a = value_at(r, pc);
                if (a == 0 || a % p == 0) continue;
                auto [g, s, t] = ext_gcd(p, a);
                row_two_op(pr, r, s, t, -(a / g), p / g);
                p = g;
                changed = true;
            }

            std::vector<std::pair<std::int64_t, Integer>> row_items(
                work_.rows[static_cast<std::size_t>(pr)].begin(),
                work_.rows[static_cast<std::size_t>(pr)].end());
            std::sort(row_items.begin(), row_items.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [c, b] : row_items) {
                if (c == pc) continue;
                Integer bb = value_at(pr, c); // row may have changed above
                if (bb == 0 || bb % p == 0) continue;
                auto [g, s, t] = ext_gcd(p, bb);
                col_two_op(pc, c, s, t, -(bb / g), p / g);
                p = g;
                changed = true;
            }
            if (!changed) return;
        }
    }

    void eliminate(std::int64_t pr, std::int64_t pc) {
        Integer p = value_at(pr, pc);
        std::vector<std::int64_t> col_mates(work_.col_rows[static_cast<std::size_t>(pc)].begin(),
                                            work_.col_rows[static_cast<std::size_t>(pc)].end());
        std::sort(col_mates.begin(), col_mates.end());
        for (std::int64_t r : col_mates) {
            if (r == pr) continue;
            row_axpy(r, pr, value_at(r, pc) / p);
        }
        // the pivot column is now singleton; clear the pivot row by column
        // operations, which touch no other row
        std::vector<std::pair<std::int64_t, Integer>> row_items(
            work_.rows[static_cast<std::size_t>(pr)].begin(),
            work_.rows[static_cast<std::size_t>(pr)].end());
        std::sort(row_items.begin(), row_items.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [c, v] : row_items) {
            if (c == pc) continue;
            Integer m = v / p;
            work_.set(pr, c, Integer(0));
            if (with_transforms_)
                for (std::int64_t i = 0; i < right_->rows(); ++i)
                    right_->at(i, c) -= m * right_->at(i, pc);
        }
        if (p < 0) {
            p = -p;
            work_.set(pr, pc, p);
            if (with_transforms_)
                for (std::int64_t j = 0; j < left_->cols(); ++j)
                    left_->at(pr, j) = -left_->at(pr, j);
        }
        work_.row_active[static_cast<std::size_t>(pr)] = 0;
        work_.col_active[static_cast<std::size_t>(pc)] = 0;
        pivots_.push_back({pr, pc, p});
    }

    SmithForm finish() {
        // divisibility fix-up: one full pairwise (a,b) -> (gcd,lcm) sweep,
        // after which position k holds the gcd of positions k and beyond,
        // realized by elementary operations when transforms are tracked
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            for (std::size_t l = k + 1; l < pivots_.size(); ++l) {
                Integer &a = pivots_[k].value, &b = pivots_[l].value;
                if (b % a == 0) continue;
                auto [g, s, t] = ext_gcd(a, b);
                if (with_transforms_) {
                    auto [ra, ca] = std::pair{pivots_[k].row, pivots_[k].col};
                    auto [rb, cb] = std::pair{pivots_[l].row, pivots_[l].col};
                    // local 2x2: diag(a, b) -> diag(g, lcm)
                    for (std::int64_t j = 0; j < left_->cols(); ++j)
                        left_->at(ra, j) += left_->at(rb, j);
                    Integer u = -(b / g), v = a / g;
                    for (std::int64_t i = 0; i < right_->rows(); ++i) {
                        Integer va = right_->at(i, ca), vb = right_->at(i, cb);
                        right_->at(i, ca) = s * va + t * vb;
                        right_->at(i, cb) = u * va + v * vb;
                    }
                    Integer w = t * b / g;
                    for (std::int64_t j = 0; j < left_->cols(); ++j)
                        left_->at(rb, j) -= w * left_->at(ra, j);
                }
                Integer lcm = a / g * b;
                a = g;
                b = lcm;
            }
        }

        SmithForm result;
        result.invariant_factors.reserve(pivots_.size());
        for (auto& piv : pivots_) result.invariant_factors.push_back(piv.value);
        if (with_transforms_) {
            // permute pivots to the leading diagonal
            DenseIntMatrix U(work_.nrows, work_.nrows), V(work_.ncols, work_.ncols);
            std::vector<std::int64_t> row_order, col_order;
            std::vector<char> row_used(static_cast<std::size_t>(work_.nrows), 0),
                col_used(static_cast<std::size_t>(work_.ncols), 0);
            for (auto& piv : pivots_) {
                row_order.push_back(piv.row);
                col_order.push_back(piv.col);
                row_used[static_cast<std::size_t>(piv.row)] = 1;
                col_used[static_cast<std::size_t>(piv.col)] = 1;
            }
            for (std::int64_t r = 0; r < work_.nrows; ++r)
                if (!row_used[static_cast<std::size_t>(r)]) row_order.push_back(r);
            for (std::int64_t c = 0; c < work_.ncols; ++c)
                if (!col_used[static_cast<std::size_t>(c)]) col_order.push_back(c);
            for (std::int64_t i = 0; i < work_.nrows; ++i)
                for (std::int64_t j = 0; j < work_.nrows; ++j)
                    U.at(i, j) = left_->at(row_order[static_cast<std::size_t>(i)], j);
            for (std::int64_t i = 0; i < work_.ncols; ++i)
                for (std::int64_t j = 0; j < work_.ncols; ++j)
                    V.at(i, j) = right_->at(i, col_order[static_cast<std::size_t>(j)]);
            result.transform_left = std::move(U);
            result.transform_right = std::move(V);
        }
        return result;
    }

    struct Pivot {
        std::int64_t row, col;
        Integer value;
    };

    Workspace<Integer> work_;
    bool with_transforms_;
    std::optional<DenseIntMatrix> left_, right_;
    std::vector<Pivot> pivots_;
};

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
    std::int64_t m = v % p;
    return m < 0 ? m + p : m;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    return mod_pos(old_s, p);
}

} // namespace

std::vector<Integer> SmithForm::nontrivial_factors() const {
    std::vector<Integer> out;
    for (const Integer& d : invariant_factors)
        if (d > 1) out.push_back(d);
    return out;
}

DenseIntMatrix SmithForm::diagonal_matrix(std::int64_t rows, std::int64_t cols) const {
    DenseIntMatrix d(rows, cols);
    for (std::size_t k = 0; k < invariant_factors.size(); ++k)
        d.at(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k)) = invariant_factors[k];
    return d;
}

SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
    return IntegerEliminator(m, with_transforms).run();
}

std::int64_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be at least 2");
    Workspace<std::int64_t> work(m.rows(), m.cols());
    for (const auto& t : m.entries()) {
        Integer red = t.value % p;
        if (red < 0) red += p;
        work.set(t.row, t.col, static_cast<std::int64_t>(red));
    }

    std::int64_t rank = 0;
    while (true) {
        // over a field every nonzero is a unit: no magnitude tie-break
        auto pivot = work.pick_pivot([](std::int64_t) { return Integer(0); });
        if (!pivot) break;
        auto [pr, pc] = *pivot;
        std::int64_t pv = work.rows[static_cast<std::size_t>(pr)].at(pc);
        std::int64_t inv = mod_inv(pv, p);

        std::vector<std::int64_t> col_mates(work.col_rows[static_cast<std::size_t>(pc)].begin(),
                                            work.col_rows[static_cast<std::size_t>(pc)].end());
        const auto& prow = work.rows[static_cast<std::size_t>(pr)];
        std::vector<std::pair<std::int64_t, std::int64_t>> pivot_row(prow.begin(), prow.end());
        for (std::int64_t r : col_mates) {
            if (r == pr) continue;
            std::int64_t factor = mod_mul(work.rows[static_cast<std::size_t>(r)].at(pc), inv, p);
            for (auto& [c, v] : pivot_row) {
                auto& drow = work.rows[static_cast<std::size_t>(r)];
                auto it = drow.find(c);
                std::int64_t cur = it == drow.end() ? 0 : it->second;
                work.set(r, c, mod_pos(cur - mod_mul(factor, v, p), p));
            }
        }
        for (auto& [c, v] : pivot_row) work.set(pr, c, 0);
        work.row_active[static_cast<std::size_t>(pr)] = 0;
        work.col_active[static_cast<std::size_t>(pc)] = 0;
        ++rank;
    }
    return rank;
}

} // namespace vrk
