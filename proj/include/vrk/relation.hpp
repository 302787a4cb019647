#pragma once

#include "vrk/numeric.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vrk {

using VertexId = std::int64_t;

// A finite symmetric relation on {0,...,n-1}, stored without the diagonal.
// This is the maximal generating relation of the semi-uniform structure of
// an undirected graph: the full filter is everything containing E together
// with the diagonal, so a single relation represents it faithfully.
// Immutable after construction.
class Graph {
public:
    // Edgeless graph on n >= 1 vertices.
    explicit Graph(VertexId n);

    VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    // False on the diagonal; the implicit (v,v) relation is handled by
    // callers that need the reflexive closure.
    bool adjacent(VertexId u, VertexId v) const { return adj_[u][static_cast<std::size_t>(v)]; }

    // Neighbor bitset of v (diagonal bit clear).
    const boost::dynamic_bitset<>& neighbors(VertexId v) const { return adj_[v]; }

    // Edges as (u,v) with u < v, in lexicographic order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    friend Graph make_graph(VertexId, const std::vector<std::pair<VertexId, VertexId>>&);
    friend Graph strong_product(const Graph&, const Graph&);
    friend class GraphBuilder;

    void add_edge_unchecked(VertexId u, VertexId v);

    std::vector<boost::dynamic_bitset<>> adj_;
    std::int64_t edge_count_ = 0;
};

// Incremental construction helper for generators that decide adjacency
// pair by pair. Validates endpoints, drops self-pairs, symmetrizes.
class GraphBuilder {
public:
    explicit GraphBuilder(VertexId n) : g_(n) {}

    void add_edge(VertexId u, VertexId v);
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

// Symmetric closure of the edge list; self-pairs are silently dropped
// (the diagonal is implicit). Throws std::invalid_argument on an endpoint
// outside 0..n-1.
Graph make_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges);

// Strong graph product: vertex (v,v') has index v * h.vertex_count() + v'
// (row-major, so reports are reproducible), and two distinct product
// vertices are adjacent iff each coordinate pair is adjacent or equal.
// Throws resource_limit_error if the product vertex count overflows.
Graph strong_product(const Graph& g, const Graph& h);

// True iff the adjacency matrices are identical. Throws
// std::invalid_argument on a vertex-count mismatch.
bool relation_equals(const Graph& g, const Graph& h);

// Number of (k+1)-tuples of vertices, repeats allowed, that are pairwise
// related under E together with the diagonal. These are the degree-k
// simplices of the Vietoris-Rips simplicial set of the relation, counted
// with degeneracies.
Integer tuple_count(const Graph& g, int k);

// Finite metric sample: exact rational distances, zero diagonal,
// symmetric. The triangle inequality is deliberately not enforced; every
// construction here only reads pairwise distances. Immutable.
class FiniteMetricSpace {
public:
    // dist is row-major n*n. Throws std::invalid_argument on a negative
    // entry, nonzero diagonal, or asymmetry.
    FiniteMetricSpace(VertexId n, std::vector<Rational> dist);

    VertexId point_count() const { return n_; }
    const Rational& distance(VertexId i, VertexId j) const {
        return dist_[static_cast<std::size_t>(i * n_ + j)];
    }

    bool operator==(const FiniteMetricSpace& other) const = default;

private:
    VertexId n_;
    std::vector<Rational> dist_;
};

// Scale with a closed (d <= r) or open (d < r) comparison. On a finite
// space the filter of relations at scale r stabilizes -- the distance set
// is finite, so all sets U_{r+eps} with eps small enough coincide with
// U_{<=r} -- which is why a single thresholded relation stands in for the
// whole structure. Both comparison modes are exposed; they differ exactly
// when some distance hits r.
struct Threshold {
    enum class Mode { closed, open };

    Rational value;
    Mode mode = Mode::closed;

    Threshold(Rational v, Mode m);

    bool admits(const Rational& d) const {
        return mode == Mode::closed ? d <= value : d < value;
    }

    std::string describe() const;
};

// (i,j) adjacent, i != j, iff distance(i,j) passes the threshold.
// Comparisons are exact.
Graph relation_from_metric(const FiniteMetricSpace& m, const Threshold& t);

// Product points with the coordinatewise maximum distance; point (x,y)
// has index x * b.point_count() + y.
FiniteMetricSpace max_metric_product(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

} // namespace vrk
