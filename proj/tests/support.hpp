// Shared generators and independent oracles for the test suites. Oracles
// here stay deliberately naive (subset enumeration, dense textbook
// elimination) so they share no code path with the engine they check.
#pragma once

#include "vrk/abelian.hpp"
#include "vrk/flag_complex.hpp"
#include "vrk/homology.hpp"
#include "vrk/relation.hpp"

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace vrt {

// f-vector by checking every vertex subset; n <= 20.
inline std::vector<std::int64_t> clique_fvector_oracle(const vrk::Graph& g, int max_dim) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::int64_t> f;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size - 1 > max_dim) continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(mask & (1u << u))) continue;
            for (int v = u + 1; v < n && clique; ++v)
                if ((mask & (1u << v)) && !g.adjacent(u, v)) clique = false;
        }
        if (!clique) continue;
        if (static_cast<int>(f.size()) < size) f.resize(static_cast<std::size_t>(size), 0);
        ++f[static_cast<std::size_t>(size) - 1];
    }
    return f;
}

// Count (k+1)-tuples pairwise related under the relation with diagonal.
inline vrk::Integer tuple_count_oracle(const vrk::Graph& g, int k) {
    const std::int64_t n = g.vertex_count();
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(k) + 1, 0);
    vrk::Integer count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i)
            for (int j = i + 1; j <= k && ok; ++j)
                if (tuple[static_cast<std::size_t>(i)] != tuple[static_cast<std::size_t>(j)] &&
                    !g.adjacent(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) ++count;
        int pos = k;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return count;
}

// Rank via dense Gaussian elimination over exact rationals.
inline std::int64_t rational_rank_oracle(const vrk::SparseIntMatrix& m) {
    std::vector<std::vector<vrk::Rational>> a(
        static_cast<std::size_t>(m.rows()),
        std::vector<vrk::Rational>(static_cast<std::size_t>(m.cols())));
    for (const auto& t : m.entries())
        a[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] = vrk::Rational(t.value);
    std::int64_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(m.cols()); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[pivot_row]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == pivot_row || a[r][col] == 0) continue;
            vrk::Rational factor = a[r][col] / a[pivot_row][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= factor * a[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
        if (pivot_row == a.size()) break;
    }
    return rank;
}

// Textbook dense Smith normal form (no transforms): returns the nonzero
// invariant factors. Independent of the sparse engine.
inline std::vector<vrk::Integer> snf_oracle(const vrk::SparseIntMatrix& m) {
    using vrk::Integer;
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m.rows()),
                                        std::vector<Integer>(static_cast<std::size_t>(m.cols())));
    for (const auto& t : m.entries())
        a[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] = t.value;

    std::vector<Integer> factors;
    std::size_t offset = 0;
    auto rows = a.size();
    auto cols = rows ? a[0].size() : 0;
    while (offset < rows && offset < cols) {
        // find smallest-magnitude nonzero in the trailing block
        std::size_t pr = 0, pc = 0;
        bool found = false;
        Integer best;
        for (std::size_t i = offset; i < rows; ++i)
            for (std::size_t j = offset; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Integer mag = abs(a[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;
        std::swap(a[offset], a[pr]);
        for (std::size_t i = offset; i < rows; ++i) std::swap(a[i][offset], a[i][pc]);

        bool clean = true;
        for (std::size_t i = offset + 1; i < rows && clean; ++i)
            if (a[i][offset] % a[offset][offset] != 0) clean = false;
        for (std::size_t j = offset + 1; j < cols && clean; ++j)
            if (a[offset][j] % a[offset][offset] != 0) clean = false;
        if (!clean) {
            // one division-with-remainder step shrinks somebody; retry
            for (std::size_t i = offset + 1; i < rows; ++i) {
                Integer q = a[i][offset] / a[offset][offset];
                if (q != 0)
                    for (std::size_t j = offset; j < cols; ++j) a[i][j] -= q * a[offset][j];
            }
            for (std::size_t j = offset + 1; j < cols; ++j) {
                Integer q = a[offset][j] / a[offset][offset];
                if (q != 0)
                    for (std::size_t i = offset; i < rows; ++i) a[i][j] -= q * a[i][offset];
            }
            continue;
        }

        for (std::size_t i = offset + 1; i < rows; ++i) {
            Integer q = a[i][offset] / a[offset][offset];
            for (std::size_t j = offset; j < cols; ++j) a[i][j] -= q * a[offset][j];
        }
        for (std::size_t j = offset + 1; j < cols; ++j) a[offset][j] = 0;

        // pivot must divide the whole remaining block for the chain
        bool divides_all = true;
        for (std::size_t i = offset + 1; i < rows && divides_all; ++i)
            for (std::size_t j = offset + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[offset][offset] != 0) divides_all = false;
        if (!divides_all) {
            for (std::size_t i = offset + 1; i < rows; ++i) {
                bool bad = false;
                for (std::size_t j = offset + 1; j < cols; ++j)
                    if (a[i][j] % a[offset][offset] != 0) bad = true;
                if (bad) {
                    for (std::size_t j = offset; j < cols; ++j) a[offset][j] += a[i][j];
                    break;
                }
            }
            continue;
        }
        factors.push_back(abs(a[offset][offset]));
        ++offset;
    }
    return factors;
}

// The product relation built directly from the clauses on pairs, the
// independent route against strong_product.
inline vrk::Graph product_relation_oracle(const vrk::Graph& g, const vrk::Graph& h) {
    const vrk::VertexId ng = g.vertex_count(), nh = h.vertex_count();
    vrk::GraphBuilder b(ng * nh);
    for (vrk::VertexId a = 0; a < ng; ++a)
        for (vrk::VertexId x = 0; x < nh; ++x)
            for (vrk::VertexId c = 0; c < ng; ++c)
                for (vrk::VertexId y = 0; y < nh; ++y) {
                    if (a == c && x == y) continue;
                    bool left = (a == c) || g.adjacent(a, c);
                    bool right = (x == y) || h.adjacent(x, y);
                    if (left && right) b.add_edge(a * nh + x, c * nh + y);
                }
    return b.build();
}

inline vrk::Graph random_graph(std::mt19937_64& rng, vrk::VertexId n, double edge_prob = 0.5) {
    vrk::GraphBuilder b(n);
    std::bernoulli_distribution coin(edge_prob);
    for (vrk::VertexId i = 0; i < n; ++i)
        for (vrk::VertexId j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

inline vrk::FiniteMetricSpace random_metric(std::mt19937_64& rng, vrk::VertexId n) {
    std::uniform_int_distribution<int> num(0, 12), den(1, 8);
    std::vector<vrk::Rational> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (vrk::VertexId i = 0; i < n; ++i)
        for (vrk::VertexId j = i + 1; j < n; ++j) {
            vrk::Rational d(num(rng), den(rng));
            dist[static_cast<std::size_t>(i * n + j)] = d;
            dist[static_cast<std::size_t>(j * n + i)] = d;
        }
    return vrk::FiniteMetricSpace(n, std::move(dist));
}

inline vrk::FgAbelianGroup random_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rank(0, 3), torsion_count(0, 3), order(2, 24);
    std::vector<vrk::Integer> orders;
    int count = torsion_count(rng);
    for (int i = 0; i < count; ++i) orders.emplace_back(order(rng));
    return vrk::FgAbelianGroup::from_parts(rank(rng), std::move(orders));
}

inline vrk::SparseIntMatrix random_matrix(std::mt19937_64& rng, std::int64_t max_size,
                                          int max_abs, double density = 0.6) {
    std::uniform_int_distribution<std::int64_t> size(1, max_size);
    std::uniform_int_distribution<int> value(-max_abs, max_abs);
    std::bernoulli_distribution keep(density);
    std::int64_t rows = size(rng), cols = size(rng);
    std::vector<vrk::SparseIntMatrix::Triplet> trip;
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c)
            if (keep(rng)) {
                int v = value(rng);
                if (v != 0) trip.push_back({r, c, vrk::Integer(v)});
            }
    return vrk::SparseIntMatrix::from_triplets(rows, cols, std::move(trip));
}

// Euler characteristic from dims equals the alternating sum of homology
// ranks; meaningful only for fully enumerated complexes.
inline bool euler_identity_holds(const vrk::ChainComplex& c) {
    if (c.truncated) return true; // nothing to check honestly
    vrk::Integer chi = c.euler_characteristic();
    vrk::Integer alt = 0;
    vrk::HomologyCalculator calc(c, vrk::Coefficients::integers());
    for (int q = 0; q <= c.top_degree(); ++q) {
        vrk::Integer term(calc.at(q).rank());
        alt += (q % 2 == 0) ? term : -term;
    }
    return chi == alt;
}

// dim_Fp H_q predicted from integral homology by universal coefficients:
// rank H_q plus p-torsion counts of H_q and H_{q-1}.
inline std::int64_t uct_fp_dimension(const vrk::FgAbelianGroup& hq,
                                     const vrk::FgAbelianGroup& hq_minus_1, std::int64_t p) {
    std::int64_t dim = hq.rank();
    for (const vrk::Integer& d : hq.invariant_factors())
        if (d % p == 0) ++dim;
    for (const vrk::Integer& d : hq_minus_1.invariant_factors())
        if (d % p == 0) ++dim;
    return dim;
}

} // namespace vrt
