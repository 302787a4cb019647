#include "vrk/spaces.hpp"

#include "vrk/errors.hpp"
#include "vrk/homology.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vrk {

Graph cycle(VertexId n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete_graph(VertexId n) {
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph power_cycle(VertexId n, VertexId k) {
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("power_cycle window must satisfy 1 <= k < n/2");
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId step = 1; step <= k; ++step) b.add_edge(i, (i + step) % n);
    return b.build();
}

FiniteMetricSpace circle_metric(VertexId n) {
    if (n < 1) throw std::invalid_argument("circle sample needs at least one point");
    std::vector<Rational> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j) {
            VertexId gap = i > j ? i - j : j - i;
            VertexId arc = std::min(gap, n - gap);
            dist[static_cast<std::size_t>(i * n + j)] = Rational(arc, n);
        }
    return FiniteMetricSpace(n, std::move(dist));
}

Graph barycentric_flag(const std::vector<std::vector<VertexId>>& top_simplices) {
    if (top_simplices.empty()) throw std::invalid_argument("no simplices given");

    std::set<std::vector<VertexId>> closure_set;
    for (const auto& raw : top_simplices) {
        if (raw.empty()) throw std::invalid_argument("empty simplex in input");
        std::vector<VertexId> s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("repeated vertex within a simplex");
        // all nonempty subsets
        std::size_t m = s.size();
        if (m > 20) throw std::invalid_argument("simplex too large to subdivide");
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            closure_set.insert(std::move(face));
        }
    }

    // faces ordered by (size, lex) become the vertices of the flag graph
    std::vector<std::vector<VertexId>> faces(closure_set.begin(), closure_set.end());
    std::stable_sort(faces.begin(), faces.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    auto contains = [](const std::vector<VertexId>& big, const std::vector<VertexId>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    GraphBuilder b(static_cast<VertexId>(faces.size()));
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (faces[i].size() != faces[j].size() && contains(faces[j], faces[i]))
                b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return b.build();
}

const std::vector<std::vector<VertexId>>& rp2_six_vertex_triangles() {
    static const std::vector<std::vector<VertexId>> triangles = {
        {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return triangles;
}

namespace {

Graph build_checked_rp2() {
    Graph g = barycentric_flag(rp2_six_vertex_triangles());
    FlagComplex k = build_flag_complex(g, 3);
    auto f = k.f_vector();
    if (f != std::vector<std::int64_t>{31, 90, 60})
        throw std::logic_error("projective-plane fixture has wrong face counts");
    ChainComplex c = chain_complex(k);
    Integer chi = c.euler_characteristic();
    FgAbelianGroup h1 = homology_at(c, 1);
    FgAbelianGroup h2 = homology_at(c, 2);
    if (chi != 1 || h1 != FgAbelianGroup::from_parts(0, {Integer(2)}) || !h2.is_zero())
        throw std::logic_error("projective-plane fixture failed its homology self-check");
    return g;
}

} // namespace

Graph rp2_flag() {
    static const Graph validated = build_checked_rp2();
    return validated;
}

Graph erdos_renyi(VertexId n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("edge probability must lie in [0,1]");
    std::mt19937_64 gen(seed);
    const Integer num = numerator(p), den = denominator(p);
    const Integer scale = Integer(1) << 64;
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            Integer draw = Integer(gen());
            if (draw * den < num * scale) b.add_edge(i, j);
        }
    return b.build();
}

namespace {

// strips '#' comments; true if anything substantive remains
bool strip_comment(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

} // namespace

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    std::int64_t lineno = 0;
    VertexId n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_comment(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n < 1) throw parse_error("expected positive vertex count", lineno);
            std::string extra;
            if (ss >> extra) throw parse_error("trailing tokens after vertex count", lineno);
            continue;
        }
        VertexId u, v;
        if (!(ss >> u >> v)) throw parse_error("expected 'u v' edge pair", lineno);
        std::string extra;
        if (ss >> extra) throw parse_error("trailing tokens after edge pair", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range 0.." + std::to_string(n - 1), lineno);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw parse_error("missing vertex count", lineno == 0 ? 1 : lineno);
    return make_graph(n, edges);
}

FiniteMetricSpace load_distance_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    std::int64_t lineno = 0;
    VertexId n = -1;
    std::vector<Rational> dist;
    VertexId rows_read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_comment(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n < 1) throw parse_error("expected positive point count", lineno);
            std::string extra;
            if (ss >> extra) throw parse_error("trailing tokens after point count", lineno);
            dist.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            continue;
        }
        if (rows_read == n) throw parse_error("more matrix rows than declared points", lineno);
        std::string token;
        VertexId cols = 0;
        while (ss >> token) {
            if (cols == n) throw parse_error("row has more than n entries", lineno);
            try {
                dist.push_back(parse_rational(token));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what(), lineno);
            }
            ++cols;
        }
        if (cols != n) throw parse_error("row has fewer than n entries", lineno);
        ++rows_read;
    }
    if (n < 0) throw parse_error("missing point count", lineno == 0 ? 1 : lineno);
    if (rows_read != n) throw parse_error("expected " + std::to_string(n) + " matrix rows", lineno);
    return FiniteMetricSpace(n, std::move(dist)); // validates symmetry and sign
}

namespace {

SpaceRecipe recipe_of(SpaceRecipe::Kind kind, VertexId n = 0, VertexId k = 0) {
    SpaceRecipe r;
    r.kind = kind;
    r.n = n;
    r.k = k;
    return r;
}

} // namespace

SpaceRecipe SpaceRecipe::make_cycle(VertexId n) { return recipe_of(Kind::cycle, n); }
SpaceRecipe SpaceRecipe::make_complete(VertexId n) { return recipe_of(Kind::complete, n); }
SpaceRecipe SpaceRecipe::make_power_cycle(VertexId n, VertexId k) {
    return recipe_of(Kind::power_cycle, n, k);
}
SpaceRecipe SpaceRecipe::make_circle(VertexId n) { return recipe_of(Kind::circle, n); }
SpaceRecipe SpaceRecipe::make_rp2() { return recipe_of(Kind::rp2); }
SpaceRecipe SpaceRecipe::make_erdos_renyi(VertexId n, Rational p, std::uint64_t seed) {
    SpaceRecipe r = recipe_of(Kind::erdos_renyi, n);
    r.p = std::move(p);
    r.seed = seed;
    return r;
}
SpaceRecipe SpaceRecipe::make_edge_file(std::string path) {
    SpaceRecipe r = recipe_of(Kind::edge_file);
    r.path = std::move(path);
    return r;
}
SpaceRecipe SpaceRecipe::make_metric_file(std::string path) {
    SpaceRecipe r = recipe_of(Kind::metric_file);
    r.path = std::move(path);
    return r;
}

std::string SpaceRecipe::describe() const {
    switch (kind) {
    case Kind::cycle: return "cycle(" + std::to_string(n) + ")";
    case Kind::complete: return "complete(" + std::to_string(n) + ")";
    case Kind::power_cycle:
        return "power-cycle(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Kind::circle: return "circle(" + std::to_string(n) + ")";
    case Kind::rp2: return "rp2";
    case Kind::erdos_renyi:
        return "er(" + std::to_string(n) + "," + format_rational(p) + "," + std::to_string(seed) +
               ")";
    case Kind::edge_file: return "edge-file(" + path + ")";
    case Kind::metric_file: return "metric-file(" + path + ")";
    }
    return "?";
}

Graph SpaceRecipe::realize_graph(const Threshold* threshold) const {
    if (is_metric()) {
        if (!threshold)
            throw std::invalid_argument(describe() + " is a metric recipe and needs --threshold");
        return relation_from_metric(realize_metric(), *threshold);
    }
    switch (kind) {
    case Kind::cycle: return cycle(n);
    case Kind::complete: return complete_graph(n);
    case Kind::power_cycle: return power_cycle(n, k);
    case Kind::rp2: return rp2_flag();
    case Kind::erdos_renyi: return erdos_renyi(n, p, seed);
    case Kind::edge_file: return load_edge_list(path);
    default: break;
    }
    throw std::logic_error("unhandled recipe kind");
}

FiniteMetricSpace SpaceRecipe::realize_metric() const {
    switch (kind) {
    case Kind::circle: return circle_metric(n);
    case Kind::metric_file: return load_distance_matrix(path);
    default: throw std::invalid_argument(describe() + " is not a metric recipe");
    }
}

} // namespace vrk
