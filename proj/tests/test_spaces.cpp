#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "vrk/errors.hpp"
#include "vrk/homology.hpp"
#include "vrk/spaces.hpp"

#include <cstdio>
#include <fstream>

using namespace vrk;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("vrk_test_") + std::to_string(counter()++) + ".txt";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

} // namespace

TEST_CASE("cycle and complete generators") {
    CHECK(relation_equals(cycle(3), complete_graph(3)));
    CHECK(cycle(8).edge_count() == 8);
    CHECK(cycle(4).edge_count() == 4);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("power cycles: window semantics and edge cases") {
    CHECK(relation_equals(power_cycle(7, 1), cycle(7)));
    CHECK(relation_equals(power_cycle(5, 2), complete_graph(5)));
    CHECK_THROWS_AS(power_cycle(8, 4), std::invalid_argument);
    CHECK_THROWS_AS(power_cycle(8, 0), std::invalid_argument);

    Graph pc = power_cycle(8, 3);
    CHECK(pc.edge_count() == 24);
    // only antipodal pairs are missing
    for (VertexId i = 0; i < 8; ++i) CHECK_FALSE(pc.adjacent(i, (i + 4) % 8));
}

TEST_CASE("circle metric distances and thresholds") {
    FiniteMetricSpace m4 = circle_metric(4);
    CHECK(m4.distance(0, 1) == Rational(1, 4));
    CHECK(m4.distance(0, 2) == Rational(1, 2));
    CHECK(circle_metric(2).distance(0, 1) == Rational(1, 2));
    CHECK(relation_equals(relation_from_metric(m4, {Rational(1, 4), Threshold::Mode::closed}),
                          cycle(4)));
}

TEST_CASE("power_cycle equals the thresholded circle sample") {
    for (auto [n, k] : {std::pair<VertexId, VertexId>{7, 2}, {8, 3}, {9, 4}, {12, 3}, {5, 1}}) {
        Graph direct = power_cycle(n, k);
        Graph via_metric =
            relation_from_metric(circle_metric(n), {Rational(k, n), Threshold::Mode::closed});
        CHECK(relation_equals(direct, via_metric));
    }
}

TEST_CASE("barycentric subdivision graphs") {
    // one triangle subdivides to a contractible complex
    Graph tri = barycentric_flag({{0, 1, 2}});
    CHECK(tri.vertex_count() == 7);
    ChainComplex c = chain_complex(build_flag_complex(tri, 3));
    CHECK(homology_at(c, 0) == FgAbelianGroup::free_of_rank(1));
    CHECK(homology_at(c, 1).is_zero());

    // the boundary of a triangle subdivides to a hexagon
    Graph hexagon = barycentric_flag({{0, 1}, {1, 2}, {0, 2}});
    CHECK(hexagon.vertex_count() == 6);
    CHECK(hexagon.edge_count() == 6);
    ChainComplex hc = chain_complex(build_flag_complex(hexagon, 2));
    CHECK(homology_at(hc, 1) == FgAbelianGroup::free_of_rank(1));

    CHECK_THROWS_AS(barycentric_flag({}), std::invalid_argument);
    CHECK_THROWS_AS(barycentric_flag({{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(barycentric_flag({{}}), std::invalid_argument);
}

TEST_CASE("projective plane fixture") {
    Graph rp2 = rp2_flag();
    CHECK(rp2.vertex_count() == 31);
    CHECK(rp2.edge_count() == 90);

    FlagComplex k = build_flag_complex(rp2, 3);
    CHECK(k.f_vector() == std::vector<std::int64_t>{31, 90, 60});
    CHECK_FALSE(k.truncated());

    ChainComplex c = chain_complex(k);
    CHECK(c.euler_characteristic() == 1);
    CHECK(homology_at(c, 1) == FgAbelianGroup::from_parts(0, {Integer(2)}));
    CHECK(homology_at(c, 2).is_zero());

    // same graph as subdividing the six-vertex triangulation directly
    CHECK(relation_equals(rp2, barycentric_flag(rp2_six_vertex_triangles())));
}

TEST_CASE("random graphs are reproducible functions of the seed") {
    Graph a = erdos_renyi(6, Rational(1, 2), 42);
    Graph b = erdos_renyi(6, Rational(1, 2), 42);
    CHECK(relation_equals(a, b));
    // frozen draw: the generator algorithm is pinned, so this cannot drift
    CHECK(a.edge_count() == 6);

    CHECK(erdos_renyi(7, Rational(0), 1).edge_count() == 0);
    CHECK(erdos_renyi(7, Rational(1), 1).edge_count() == 21);
    CHECK_THROWS_AS(erdos_renyi(5, Rational(3, 2), 7), std::invalid_argument);
}

TEST_CASE("edge list files") {
    TempFile good("# a four-cycle\n4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(relation_equals(load_edge_list(good.path), cycle(4)));

    TempFile bad_endpoint("3\n0 5\n");
    CHECK_THROWS_AS(load_edge_list(bad_endpoint.path), parse_error);

    TempFile garbage("4\n0 x\n");
    try {
        load_edge_list(garbage.path);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(load_edge_list("definitely_missing_file.txt"), std::runtime_error);
}

TEST_CASE("distance matrix files") {
    TempFile good("3\n0 1/2 0.25\n1/2 0 3/4\n0.25 3/4 0\n");
    FiniteMetricSpace m = load_distance_matrix(good.path);
    CHECK(m.distance(0, 2) == Rational(1, 4));
    CHECK(m.distance(1, 2) == Rational(3, 4));

    TempFile asym("2\n0 1\n2 0\n");
    CHECK_THROWS_AS(load_distance_matrix(asym.path), std::invalid_argument);

    TempFile negative("2\n0 -1\n-1 0\n");
    CHECK_THROWS_AS(load_distance_matrix(negative.path), std::invalid_argument);

    TempFile short_row("2\n0 1\n1\n");
    CHECK_THROWS_AS(load_distance_matrix(short_row.path), parse_error);

    TempFile float_entry("2\n0 1e-3\n1e-3 0\n");
    CHECK_THROWS_AS(load_distance_matrix(float_entry.path), parse_error);
}

TEST_CASE("recipes realize and describe themselves") {
    CHECK(SpaceRecipe::make_cycle(4).describe() == "cycle(4)");
    CHECK(SpaceRecipe::make_power_cycle(8, 3).describe() == "power-cycle(8,3)");
    CHECK(relation_equals(SpaceRecipe::make_complete(5).realize_graph(), complete_graph(5)));

    Threshold t(Rational(1, 4), Threshold::Mode::closed);
    CHECK(relation_equals(SpaceRecipe::make_circle(4).realize_graph(&t), cycle(4)));
    CHECK_THROWS_AS(SpaceRecipe::make_circle(4).realize_graph(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceRecipe::make_cycle(4).realize_metric(), std::invalid_argument);
}
