#pragma once

#include "vrk/relation.hpp"
#include "vrk/sparse_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace vrk {

// Resource caps for complex construction. Defaults come from the
// environment (VRK_MAX_SIMPLICES, VRK_MAX_ENTRIES) when set.
struct BuildLimits {
    std::int64_t max_simplices = 0;      // total across all dimensions
    std::int64_t max_matrix_entries = 0; // per assembled sparse matrix

    static BuildLimits defaults();
};

// What to do when a cap is hit mid-build: fail throws resource_limit_error;
// truncate keeps every fully enumerated dimension and marks the complex.
enum class OnLimit { fail, truncate };

// The clique complex of a relation up to a dimension cap. Simplices are
// strictly increasing vertex tuples in lexicographic order per dimension,
// which fixes simplex indices, orientations, and therefore every boundary
// sign and report byte.
class FlagComplex {
public:
    VertexId vertex_count() const { return vertex_count_; }

    // Highest dimension with materialized simplices (trailing empty
    // dimensions below the cap are trimmed away).
    int top_dimension() const { return static_cast<int>(simplices_.size()) - 1; }

    // The cap the complex was built with.
    int requested_cap() const { return requested_cap_; }

    // True if cliques above top_dimension() may exist but were not
    // enumerated (cap or resource limit cut the complex short).
    bool truncated() const { return truncated_; }

    std::int64_t simplex_count(int q) const {
        if (q < 0 || q > top_dimension()) return 0;
        return static_cast<std::int64_t>(simplices_[static_cast<std::size_t>(q)].size()) / (q + 1);
    }

    // Vertices of the idx-th q-simplex, ascending.
    std::span<const VertexId> simplex(int q, std::int64_t idx) const;

    // Position of the given increasing tuple in dimension q, or -1.
    std::int64_t index_of(int q, std::span<const VertexId> vertices) const;

    // Simplex counts by dimension, 0..top_dimension().
    std::vector<std::int64_t> f_vector() const;

    std::int64_t total_simplices() const;

private:
    friend FlagComplex build_flag_complex(const Graph&, int, const BuildLimits&, OnLimit);

    VertexId vertex_count_ = 0;
    int requested_cap_ = 0;
    bool truncated_ = false;
    std::vector<std::vector<VertexId>> simplices_; // [q]: flat, stride q+1
};

// Enumerates all cliques of size <= max_dim+1 by extending each simplex
// with vertices above its maximum that are adjacent to all of it.
FlagComplex build_flag_complex(const Graph& g, int max_dim,
                               const BuildLimits& limits = BuildLimits::defaults(),
                               OnLimit policy = OnLimit::fail);

// Degree-q boundary with the alternating-sign convention on increasing
// tuples: column j has entry (-1)^i at the face of simplex j omitting its
// i-th vertex. Throws std::out_of_range unless 1 <= q <= top_dimension().
SparseIntMatrix boundary_matrix(const FlagComplex& k, int q);

// A chain complex of free abelian groups: dims[q] is the rank in degree q
// and boundaries[q] maps degree q to q-1 (boundaries[0] has zero rows).
// Degrees above top_degree() are zero groups unless `truncated`, in which
// case they are unknown rather than zero.
struct ChainComplex {
    std::vector<std::int64_t> dims;
    std::vector<SparseIntMatrix> boundaries;
    bool truncated = false;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    std::int64_t dim_at(int q) const {
        return (q < 0 || q > top_degree()) ? 0 : dims[static_cast<std::size_t>(q)];
    }

    bool has_boundary(int q) const { return q >= 1 && q <= top_degree(); }
    const SparseIntMatrix& boundary(int q) const { return boundaries[static_cast<std::size_t>(q)]; }

    // Alternating sum of dims.
    Integer euler_characteristic() const;

    // Shape consistency and d composed with d == 0; throws std::logic_error.
    void validate() const;
};

ChainComplex chain_complex(const FlagComplex& k);

// Graded tensor product through degree max_deg: degree n is the direct sum
// of C_i(a) (x) C_j(b) over i+j = n, blocks in ascending i, each block
// row-major (index of x times dims_j(b) plus index of y). The differential
// is d(x (x) y) = dx (x) y + (-1)^i x (x) dy.
ChainComplex tensor_chain_complex(const ChainComplex& a, const ChainComplex& b, int max_deg,
                                  const BuildLimits& limits = BuildLimits::defaults());

// Line-based text dump for diffing against other tools: header lines, one
// "simplex q v0 ... vq" line per simplex in index order, then one
// "entry q row col value" line per boundary triplet, degrees ascending.
std::string export_complex_text(const FlagComplex& k);

// "matrix rows cols" then "entry row col value" lines in storage order.
std::string export_matrix_text(const SparseIntMatrix& m);

} // namespace vrk
