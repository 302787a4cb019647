#include "vrk/relation.hpp"

#include "vrk/errors.hpp"

#include <limits>
#include <stdexcept>

namespace vrk {

Graph::Graph(VertexId n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n), boost::dynamic_bitset<>(static_cast<std::size_t>(n)));
}

void Graph::add_edge_unchecked(VertexId u, VertexId v) {
    if (!adj_[u][static_cast<std::size_t>(v)]) {
        adj_[u].set(static_cast<std::size_t>(v));
        adj_[v].set(static_cast<std::size_t>(u));
        ++edge_count_;
    }
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (std::size_t v = adj_[u].find_next(static_cast<std::size_t>(u)); v != boost::dynamic_bitset<>::npos;
             v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<VertexId>(v));
    return out;
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
    VertexId n = g_.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") on " + std::to_string(n) + " vertices");
    if (u == v) return; // diagonal is implicit
    g_.add_edge_unchecked(u, v);
}

Graph make_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph strong_product(const Graph& g, const Graph& h) {
    VertexId ng = g.vertex_count(), nh = h.vertex_count();
    if (ng > std::numeric_limits<VertexId>::max() / nh)
        throw resource_limit_error("strong product vertex count overflows the index type");
    VertexId n = ng * nh;
    Graph p(n);
    for (VertexId v0 = 0; v0 < ng; ++v0)
        for (VertexId w0 = 0; w0 < nh; ++w0) {
            VertexId a = v0 * nh + w0;
            // coordinates may each move along an edge or stay fixed, not both fixed
            for (VertexId v1 = v0; v1 < ng; ++v1) {
                if (v1 != v0 && !g.adjacent(v0, v1)) continue;
                for (VertexId w1 = 0; w1 < nh; ++w1) {
                    if (w1 != w0 && !h.adjacent(w0, w1)) continue;
                    VertexId b = v1 * nh + w1;
                    if (b > a) p.add_edge_unchecked(a, b);
                }
            }
        }
    return p;
}

bool relation_equals(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("relation_equals: vertex counts differ (" +
                                    std::to_string(g.vertex_count()) + " vs " +
                                    std::to_string(h.vertex_count()) + ")");
    return g == h;
}

namespace {

// counts[s] += number of cliques of size s extending `base` inside `cand`,
// where cand holds only vertices greater than the last vertex of base.
void count_cliques_rec(const Graph& g, const boost::dynamic_bitset<>& cand, int depth,
                       int max_size, std::vector<Integer>& counts) {
    if (depth == max_size) return;
    for (std::size_t v = cand.find_first(); v != boost::dynamic_bitset<>::npos;
         v = cand.find_next(v)) {
        counts[static_cast<std::size_t>(depth) + 1] += 1;
        boost::dynamic_bitset<> next = cand & g.neighbors(static_cast<VertexId>(v));
        // keep only vertices above v so each clique is seen once
        for (std::size_t u = next.find_first(); u != boost::dynamic_bitset<>::npos && u <= v;
             u = next.find_next(u))
            next.reset(u);
        if (next.any()) count_cliques_rec(g, next, depth + 1, max_size, counts);
    }
}

// counts[s] = number of cliques with exactly s vertices, s = 1..max_size.
std::vector<Integer> clique_counts(const Graph& g, int max_size) {
    std::vector<Integer> counts(static_cast<std::size_t>(max_size) + 1, Integer(0));
    boost::dynamic_bitset<> all(static_cast<std::size_t>(g.vertex_count()));
    all.set();
    count_cliques_rec(g, all, 0, max_size, counts);
    return counts;
}

} // namespace

Integer tuple_count(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("tuple_count: negative degree");
    // A tuple with repeats is pairwise related iff its support is a clique,
    // so tally cliques by size and weigh each by the surjections onto it.
    int m = k + 1;
    int max_support = static_cast<int>(std::min<VertexId>(g.vertex_count(), m));
    std::vector<Integer> cliques = clique_counts(g, max_support);

    // surj[s] = number of surjections from m labeled positions onto s labels
    std::vector<Integer> surj(static_cast<std::size_t>(max_support) + 1, Integer(0));
    std::vector<Integer> prev(surj.size(), Integer(0));
    prev[0] = 1; // zero positions onto zero labels
    for (int positions = 1; positions <= m; ++positions) {
        std::vector<Integer> cur(surj.size(), Integer(0));
        for (int s = 1; s < static_cast<int>(cur.size()); ++s)
            cur[s] = Integer(s) * (prev[s] + prev[s - 1]);
        prev = std::move(cur);
    }
    surj = std::move(prev);

    Integer total = 0;
    for (int s = 1; s <= max_support; ++s) total += cliques[s] * surj[s];
    return total;
}

FiniteMetricSpace::FiniteMetricSpace(VertexId n, std::vector<Rational> dist)
    : n_(n), dist_(std::move(dist)) {
    if (n < 1) throw std::invalid_argument("metric space needs at least one point");
    if (dist_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("distance matrix has wrong size");
    for (VertexId i = 0; i < n; ++i) {
        if (distance(i, i) != 0)
            throw std::invalid_argument("nonzero diagonal distance at point " + std::to_string(i));
        for (VertexId j = i + 1; j < n; ++j) {
            if (distance(i, j) < 0)
                throw std::invalid_argument("negative distance between points " + std::to_string(i) +
                                            " and " + std::to_string(j));
            if (distance(i, j) != distance(j, i))
                throw std::invalid_argument("asymmetric distance between points " +
                                            std::to_string(i) + " and " + std::to_string(j));
        }
    }
}

Threshold::Threshold(Rational v, Mode m) : value(std::move(v)), mode(m) {
    if (value < 0) throw std::invalid_argument("threshold must be nonnegative");
}

std::string Threshold::describe() const {
    return (mode == Mode::closed ? "d <= " : "d < ") + format_rational(value);
}

Graph relation_from_metric(const FiniteMetricSpace& m, const Threshold& t) {
    GraphBuilder b(m.point_count());
    for (VertexId i = 0; i < m.point_count(); ++i)
        for (VertexId j = i + 1; j < m.point_count(); ++j)
            if (t.admits(m.distance(i, j))) b.add_edge(i, j);
    return b.build();
}

FiniteMetricSpace max_metric_product(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    VertexId na = a.point_count(), nb = b.point_count();
    if (na > std::numeric_limits<VertexId>::max() / nb)
        throw resource_limit_error("metric product point count overflows the index type");
    VertexId n = na * nb;
    std::vector<Rational> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (VertexId x1 = 0; x1 < na; ++x1)
        for (VertexId y1 = 0; y1 < nb; ++y1)
            for (VertexId x2 = 0; x2 < na; ++x2)
                for (VertexId y2 = 0; y2 < nb; ++y2) {
                    const Rational& dx = a.distance(x1, x2);
                    const Rational& dy = b.distance(y1, y2);
                    dist[static_cast<std::size_t>((x1 * nb + y1) * n + (x2 * nb + y2))] =
                        dx >= dy ? dx : dy;
                }
    return FiniteMetricSpace(n, std::move(dist));
}

} // namespace vrk
