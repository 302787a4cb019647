#pragma once

#include "vrk/relation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vrk {

// n-cycle, n >= 3.
Graph cycle(VertexId n);

// Complete graph on n >= 1 vertices.
Graph complete_graph(VertexId n);

// i ~ j iff circular distance <= k, with 1 <= k < n/2. Equals
// relation_from_metric(circle_metric(n), closed k/n).
Graph power_cycle(VertexId n, VertexId k);

// n equally spaced points on the circle of unit circumference with the
// geodesic distance min(|i-j|, n-|i-j|) / n.
FiniteMetricSpace circle_metric(VertexId n);

// Graph on all nonempty faces of the closure of the given simplices, with
// adjacency = strict containment either way; its flag complex is the
// barycentric subdivision of the input complex. Vertices of the output are
// faces ordered by (size, lexicographic), so indices are reproducible.
// Throws std::invalid_argument on an empty list, an empty simplex, or a
// repeated vertex within a simplex.
Graph barycentric_flag(const std::vector<std::vector<VertexId>>& top_simplices);

// 1-skeleton of the barycentric subdivision of the 6-vertex triangulation
// of the real projective plane: 31 vertices, 90 edges, and a flag complex
// that is the subdivided surface itself. The triangle data is embedded and
// validated once (H_1 = Z/2, H_2 = 0, Euler characteristic 1) before the
// graph is handed out; this is the one torsion-bearing fixture, so it is
// checked rather than trusted.
Graph rp2_flag();

// The ten triangles of the 6-vertex triangulation, 0-indexed.
const std::vector<std::vector<VertexId>>& rp2_six_vertex_triangles();

// Reproducible G(n, p): pairs (i,j), i < j, visited in lexicographic
// order; each consumes one draw of a mersenne-twister-64 seeded with
// `seed`; the edge is present iff draw * denom(p) < numer(p) * 2^64.
Graph erdos_renyi(VertexId n, const Rational& p, std::uint64_t seed);

// Edge-list file: first line n, then one "u v" pair per line, 0-indexed,
// whitespace-separated; '#' starts a comment anywhere on a line.
Graph load_edge_list(const std::string& path);

// Distance-matrix file: first line n, then n lines of n exact decimal or
// "p/q" entries, with the same comment rule.
FiniteMetricSpace load_distance_matrix(const std::string& path);

// A tagged generator call, the unit the command line composes.
struct SpaceRecipe {
    enum class Kind { cycle, complete, power_cycle, circle, rp2, erdos_renyi, edge_file, metric_file };

    Kind kind = Kind::cycle;
    VertexId n = 0;
    VertexId k = 0;
    Rational p;
    std::uint64_t seed = 0;
    std::string path;

    static SpaceRecipe make_cycle(VertexId n);
    static SpaceRecipe make_complete(VertexId n);
    static SpaceRecipe make_power_cycle(VertexId n, VertexId k);
    static SpaceRecipe make_circle(VertexId n);
    static SpaceRecipe make_rp2();
    static SpaceRecipe make_erdos_renyi(VertexId n, Rational p, std::uint64_t seed);
    static SpaceRecipe make_edge_file(std::string path);
    static SpaceRecipe make_metric_file(std::string path);

    bool is_metric() const { return kind == Kind::circle || kind == Kind::metric_file; }

    std::string describe() const;

    // Metric recipes need a threshold to become a relation; passing one for
    // a graph recipe (or none for a metric recipe) is an error.
    Graph realize_graph(const Threshold* threshold = nullptr) const;
    FiniteMetricSpace realize_metric() const;
};

} // namespace vrk
