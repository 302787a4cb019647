#include "vrk/flag_complex.hpp"

#include "vrk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vrk {

namespace {

std::int64_t env_cap(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0)
        throw std::invalid_argument(std::string(name) + " must be a positive integer");
    return static_cast<std::int64_t>(v);
}

} // namespace

BuildLimits BuildLimits::defaults() {
    static const BuildLimits cached{env_cap("VRK_MAX_SIMPLICES", 5'000'000),
                                    env_cap("VRK_MAX_ENTRIES", 50'000'000)};
    return cached;
}

std::span<const VertexId> FlagComplex::simplex(int q, std::int64_t idx) const {
    const auto& level = simplices_[static_cast<std::size_t>(q)];
    return {level.data() + idx * (q + 1), static_cast<std::size_t>(q + 1)};
}

std::int64_t FlagComplex::index_of(int q, std::span<const VertexId> vertices) const {
    if (q < 0 || q > top_dimension() || static_cast<int>(vertices.size()) != q + 1) return -1;
    std::int64_t lo = 0, hi = simplex_count(q) - 1;
    while (lo <= hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        auto s = simplex(q, mid);
        int cmp = 0;
        for (int i = 0; i <= q; ++i) {
            if (s[static_cast<std::size_t>(i)] != vertices[static_cast<std::size_t>(i)]) {
                cmp = s[static_cast<std::size_t>(i)] < vertices[static_cast<std::size_t>(i)] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

std::vector<std::int64_t> FlagComplex::f_vector() const {
    std::vector<std::int64_t> f;
    f.reserve(simplices_.size());
    for (int q = 0; q <= top_dimension(); ++q) f.push_back(simplex_count(q));
    return f;
}

std::int64_t FlagComplex::total_simplices() const {
    std::int64_t total = 0;
    for (int q = 0; q <= top_dimension(); ++q) total += simplex_count(q);
    return total;
}

FlagComplex build_flag_complex(const Graph& g, int max_dim, const BuildLimits& limits,
                               OnLimit policy) {
    if (max_dim < 0) throw std::invalid_argument("dimension cap must be nonnegative");
    const VertexId n = g.vertex_count();
    using Bitset = boost::dynamic_bitset<>;

    FlagComplex k;
    k.vertex_count_ = n;
    k.requested_cap_ = max_dim;

    std::int64_t budget = limits.max_simplices;
    auto over_budget = [&](std::int64_t total) { return total > budget; };

    std::vector<VertexId> level0(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) level0[static_cast<std::size_t>(v)] = v;
    std::int64_t total = n;
    if (over_budget(total)) {
        if (policy == OnLimit::fail)
            throw resource_limit_error("flag complex exceeds simplex cap at dimension 0");
        k.truncated_ = true;
        return k;
    }
    k.simplices_.push_back(std::move(level0));

    // cands[i]: vertices above the maximum of simplex i that are adjacent
    // to all of it; children of i extend by exactly those vertices, so each
    // clique is produced once, in lexicographic order.
    std::vector<Bitset> cands(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        Bitset c = g.neighbors(v);
        for (std::size_t u = c.find_first(); u != Bitset::npos && u <= static_cast<std::size_t>(v);
             u = c.find_next(u))
            c.reset(u);
        cands[static_cast<std::size_t>(v)] = std::move(c);
    }

    for (int q = 1; q <= max_dim; ++q) {
        const auto& prev = k.simplices_.back();
        const std::int64_t prev_count = k.simplex_count(q - 1);
        std::vector<VertexId> level;
        std::vector<Bitset> next_cands;
        bool hit_limit = false;

        for (std::int64_t i = 0; i < prev_count && !hit_limit; ++i) {
            const Bitset& cand = cands[static_cast<std::size_t>(i)];
            for (std::size_t v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
                if (over_budget(++total)) {
                    if (policy == OnLimit::fail)
                        throw resource_limit_error("flag complex exceeds simplex cap (" +
                                                   std::to_string(budget) + ") at dimension " +
                                                   std::to_string(q));
                    hit_limit = true;
                    break;
                }
                for (int j = 0; j < q; ++j)
                    level.push_back(prev[static_cast<std::size_t>(i * q + j)]);
                level.push_back(static_cast<VertexId>(v));
                Bitset c = cand & g.neighbors(static_cast<VertexId>(v));
                for (std::size_t u = c.find_first(); u != Bitset::npos && u <= v; u = c.find_next(u))
                    c.reset(u);
                next_cands.push_back(std::move(c));
            }
        }

        if (hit_limit) { // drop the partial dimension, keep complete ones
            k.truncated_ = true;
            return k;
        }
        if (level.empty()) {
            // nothing at dimension q, hence nothing above it either
            k.truncated_ = false;
            return k;
        }
        k.simplices_.push_back(std::move(level));
        cands = std::move(next_cands);
    }

    // the cap was reached with simplices present: probe one level further
    // so "nothing above" and "not enumerated" stay distinguishable
    k.truncated_ = false;
    for (const auto& c : cands) {
        if (c.any()) {
            k.truncated_ = true;
            break;
        }
    }
    return k;
}

SparseIntMatrix boundary_matrix(const FlagComplex& k, int q) {
    if (q < 1 || q > k.top_dimension())
        throw std::out_of_range("boundary degree " + std::to_string(q) +
                                " outside 1.." + std::to_string(k.top_dimension()));
    std::vector<SparseIntMatrix::Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(k.simplex_count(q)) * (q + 1));
    std::vector<VertexId> face(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < k.simplex_count(q); ++j) {
        auto s = k.simplex(q, j);
        for (int omit = 0; omit <= q; ++omit) {
            int pos = 0;
            for (int i = 0; i <= q; ++i)
                if (i != omit) face[static_cast<std::size_t>(pos++)] = s[static_cast<std::size_t>(i)];
            std::int64_t row = k.index_of(q - 1, face);
            if (row < 0) throw std::logic_error("face missing from flag complex");
            triplets.push_back({row, j, Integer(omit % 2 == 0 ? 1 : -1)});
        }
    }
    return SparseIntMatrix::from_triplets(k.simplex_count(q - 1), k.simplex_count(q),
                                          std::move(triplets));
}

Integer ChainComplex::euler_characteristic() const {
    Integer chi = 0;
    for (int q = 0; q <= top_degree(); ++q)
        chi += (q % 2 == 0 ? Integer(dims[static_cast<std::size_t>(q)])
                           : Integer(-dims[static_cast<std::size_t>(q)]));
    return chi;
}

void ChainComplex::validate() const {
    if (boundaries.size() != dims.size())
        throw std::logic_error("chain complex: boundary count does not match grading");
    for (int q = 0; q <= top_degree(); ++q) {
        const auto& d = boundaries[static_cast<std::size_t>(q)];
        std::int64_t expected_rows = q == 0 ? 0 : dims[static_cast<std::size_t>(q) - 1];
        if (d.rows() != expected_rows || d.cols() != dims[static_cast<std::size_t>(q)])
            throw std::logic_error("chain complex: boundary " + std::to_string(q) +
                                   " has wrong shape");
        if (q >= 2 && !multiply(boundaries[static_cast<std::size_t>(q) - 1], d).is_zero())
            throw std::logic_error("chain complex: d o d != 0 at degree " + std::to_string(q));
    }
}

std::string export_complex_text(const FlagComplex& k) {
    std::string out = "flag-complex n " + std::to_string(k.vertex_count()) + "\ncap " +
                      std::to_string(k.requested_cap()) + "\ntruncated " +
                      (k.truncated() ? "1" : "0") + "\nf";
    for (std::int64_t count : k.f_vector()) out += " " + std::to_string(count);
    for (int q = 0; q <= k.top_dimension(); ++q)
        for (std::int64_t i = 0; i < k.simplex_count(q); ++i) {
            out += "\nsimplex " + std::to_string(q);
            for (VertexId v : k.simplex(q, i)) out += " " + std::to_string(v);
        }
    for (int q = 1; q <= k.top_dimension(); ++q) {
        SparseIntMatrix d = boundary_matrix(k, q);
        for (const auto& t : d.entries())
            out += "\nentry " + std::to_string(q) + " " + std::to_string(t.row) + " " +
                   std::to_string(t.col) + " " + t.value.str();
    }
    return out;
}

std::string export_matrix_text(const SparseIntMatrix& m) {
    std::string out =
        "matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols());
    for (const auto& t : m.entries())
        out += "\nentry " + std::to_string(t.row) + " " + std::to_string(t.col) + " " +
               t.value.str();
    return out;
}

ChainComplex chain_complex(const FlagComplex& k) {
    ChainComplex c;
    c.truncated = k.truncated();
    for (int q = 0; q <= k.top_dimension(); ++q) {
        c.dims.push_back(k.simplex_count(q));
        c.boundaries.push_back(q == 0 ? SparseIntMatrix(0, k.simplex_count(0))
                                      : boundary_matrix(k, q));
    }
    return c;
}

ChainComplex tensor_chain_complex(const ChainComplex& a, const ChainComplex& b, int max_deg,
                                  const BuildLimits& limits) {
    if (max_deg < 0) throw std::invalid_argument("tensor degree cap must be nonnegative");

    const int full_top = a.top_degree() + b.top_degree();
    int top = std::min(max_deg, full_top);
    bool truncated = top < full_top;
    if (a.truncated) top = std::min(top, a.top_degree());
    if (b.truncated) top = std::min(top, b.top_degree());
    truncated = truncated || a.truncated || b.truncated;

    ChainComplex t;
    t.truncated = truncated;

    // block offset of the (i, n-i) summand within degree n
    auto block_offsets = [&](int n) {
        std::vector<std::int64_t> off;
        std::int64_t acc = 0;
        for (int i = 0; i <= n; ++i) {
            off.push_back(acc);
            acc += a.dim_at(i) * b.dim_at(n - i);
        }
        off.push_back(acc); // total
        return off;
    };

    for (int n = 0; n <= top; ++n) t.dims.push_back(block_offsets(n).back());

    for (int n = 0; n <= top; ++n) {
        if (n == 0) {
            t.boundaries.emplace_back(0, t.dims[0]);
            continue;
        }
        auto off_n = block_offsets(n);
        auto off_m = block_offsets(n - 1);
        std::vector<SparseIntMatrix::Triplet> triplets;
        std::int64_t entry_budget = limits.max_matrix_entries;

        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            std::int64_t da = a.dim_at(i), db = b.dim_at(j);
            if (da == 0 || db == 0) continue;
            std::int64_t col_base = off_n[static_cast<std::size_t>(i)];

            // dx (x) y lands in block i-1 of degree n-1
            if (i >= 1 && a.has_boundary(i)) {
                std::int64_t row_base = off_m[static_cast<std::size_t>(i) - 1];
                for (const auto& e : a.boundary(i).entries())
                    for (std::int64_t y = 0; y < db; ++y)
                        triplets.push_back({row_base + e.row * db + y, col_base + e.col * db + y,
                                            e.value});
            }
            // (-1)^i x (x) dy lands in block i of degree n-1
            if (j >= 1 && b.has_boundary(j)) {
                std::int64_t row_base = off_m[static_cast<std::size_t>(i)];
                std::int64_t db_m = b.dim_at(j - 1);
                for (const auto& e : b.boundary(j).entries())
                    for (std::int64_t x = 0; x < da; ++x)
                        triplets.push_back({row_base + x * db_m + e.row, col_base + x * db + e.col,
                                            i % 2 == 0 ? e.value : Integer(-e.value)});
            }
            if (static_cast<std::int64_t>(triplets.size()) > entry_budget)
                throw resource_limit_error("tensor complex boundary exceeds entry cap at degree " +
                                           std::to_string(n));
        }
        t.boundaries.push_back(SparseIntMatrix::from_triplets(
            t.dims[static_cast<std::size_t>(n) - 1], t.dims[static_cast<std::size_t>(n)],
            std::move(triplets)));
    }
    return t;
}

} // namespace vrk
