#include <doctest.h>

#include "fibnet/generator.hpp"
#include "fibnet/graph.hpp"
#include "helpers.hpp"

using namespace fibnet;

TEST_CASE("seed rectangle: 4 vertices, 4 edges, orientations paired") {
    auto g = LabeledGraph::seed(SeedKind::rectangle);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    int vertical = 0, aclinic = 0;
    for (const auto& e : g.edges()) {
        if (e.orientation == Orientation::vertical) ++vertical;
        if (e.orientation == Orientation::aclinic) ++aclinic;
    }
    CHECK(vertical == 2);
    CHECK(aclinic == 2);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.rectangles().size() == 1);
    CHECK(g.validate().ok());
}

TEST_CASE("seed single edge") {
    auto g = LabeledGraph::seed(SeedKind::single_edge);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edges()[0].orientation == Orientation::unoriented);
}

TEST_CASE("triangle growth on the single-edge seed yields a triangle") {
    auto g = LabeledGraph::seed(SeedKind::single_edge);
    g.advance_step();
    auto s = g.apply_growth(GrowthPhase::triangle, std::vector<int>{0});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(s.new_vertices == 1);
    CHECK(s.new_edges == 2);
    CHECK(s.new_triangles == 1);
    CHECK(g.edges()[0].triangle_member);
    CHECK(g.validate().ok());
}

TEST_CASE("star growth on both seed aclinics adds 4 vertices and 4 pendant edges") {
    auto g = LabeledGraph::seed(SeedKind::rectangle);
    g.advance_step();
    std::vector<int> aclinics;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges()[i].orientation == Orientation::aclinic) aclinics.push_back(i);
    auto s = g.apply_growth(GrowthPhase::star, aclinics);
    CHECK(s.new_vertices == 4);
    CHECK(s.new_edges == 4);
    CHECK(s.new_triangles == 0);
    for (int i = 4; i < g.edge_count(); ++i) {
        CHECK(g.edges()[i].pendant);
        CHECK(g.edges()[i].orientation == Orientation::vertical);
        // pendant edges have exactly one degree-1 endpoint at birth
        int deg_u = g.degree(g.edges()[i].u), deg_v = g.degree(g.edges()[i].v);
        CHECK(((deg_u == 1) != (deg_v == 1)));
    }
}

TEST_CASE("rectangle growth registers the new 4-cycle with labeled sides") {
    auto g = LabeledGraph::seed(SeedKind::single_edge);
    g.advance_step();
    auto s = g.apply_growth(GrowthPhase::rectangle, std::vector<int>{0});
    CHECK(s.new_vertices == 2);
    CHECK(s.new_edges == 3);
    CHECK(s.new_rectangles == 1);
    REQUIRE(g.rectangles().size() == 1);
    const auto& r = g.rectangles()[0];
    CHECK(g.edges()[r.vertical_edges[1]].orientation == Orientation::vertical);
    CHECK(g.edges()[r.aclinic_edges[0]].orientation == Orientation::aclinic);
    CHECK(g.edges()[r.aclinic_edges[1]].orientation == Orientation::aclinic);
    CHECK(g.validate().ok());
}

TEST_CASE("hub growth on a seed rectangle: +1V +4E and 4 new triangles") {
    auto g = LabeledGraph::seed(SeedKind::rectangle);
    g.advance_step();
    auto s = g.apply_growth(GrowthPhase::hub, std::vector<int>{0});
    CHECK(s.new_vertices == 1);
    CHECK(s.new_edges == 4);
    CHECK(s.new_triangles == 4);
    CHECK(g.vertex_count() == 5);
    CHECK(g.degree(4) == 4);
    CHECK(g.rectangles()[0].hubbed);
    // the rectangle's sides sit on triangles now
    for (int e : g.rectangles()[0].vertical_edges) CHECK(g.edges()[e].triangle_member);
    for (int e : g.rectangles()[0].aclinic_edges) CHECK(g.edges()[e].triangle_member);
}

TEST_CASE("growth target validation") {
    auto g = LabeledGraph::seed(SeedKind::rectangle);
    CHECK_THROWS_AS(g.apply_growth(GrowthPhase::triangle, std::vector<int>{99}),
                    std::invalid_argument);
    CHECK_THROWS_AS(g.apply_growth(GrowthPhase::triangle, std::vector<int>{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(g.apply_growth(GrowthPhase::hub, std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("validate flags an injected duplicate edge") {
    std::vector<VertexRec> vs{{0, 0, Origin::seed}, {1, 0, Origin::seed}, {2, 0, Origin::seed}};
    std::vector<EdgeRec> es(3);
    es[0].u = 0; es[0].v = 1;
    es[1].u = 0; es[1].v = 1;  // duplicate
    es[2].u = 1; es[2].v = 2;
    auto g = LabeledGraph::from_parts(vs, es);
    auto report = g.validate();
    CHECK_FALSE(report.simple);
    CHECK_FALSE(report.ok());
    CHECK(report.connected);
}

TEST_CASE("validate flags disconnection") {
    auto g = testing::graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(g.validate().connected);
}

TEST_CASE("degree sum identity on N(3)") {
    auto g = generate_n(3).graph;
    long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 248);
    CHECK(sum == 2 * g.edge_count());
    CHECK(g.validate().ok());
}

TEST_CASE("growth is deterministic: identical runs produce identical graphs") {
    auto a = generate_n(4).graph;
    auto b = generate_n(4).graph;
    CHECK(a == b);
}

TEST_CASE("per-phase vertex/edge increments scale with the target count") {
    // triangle: +1V+2E each; star: +2V+2E; rectangle: +2V+3E; hub: +1V+4E
    auto g = generate_n(2).graph;
    std::vector<int> tri_targets;
    for (int i = 0; i < g.edge_count() && tri_targets.size() < 5; ++i)
        if (g.edges()[i].triangle_member) tri_targets.push_back(i);
    int v0 = g.vertex_count(), e0 = g.edge_count();
    g.apply_growth(GrowthPhase::triangle, tri_targets);
    CHECK(g.vertex_count() - v0 == static_cast<int>(tri_targets.size()));
    CHECK(g.edge_count() - e0 == 2 * static_cast<int>(tri_targets.size()));

    v0 = g.vertex_count(); e0 = g.edge_count();
    g.apply_growth(GrowthPhase::star, std::vector<int>{0, 1});
    CHECK(g.vertex_count() - v0 == 4);
    CHECK(g.edge_count() - e0 == 4);

    v0 = g.vertex_count(); e0 = g.edge_count();
    g.apply_growth(GrowthPhase::rectangle, std::vector<int>{2, 3});
    CHECK(g.vertex_count() - v0 == 4);
    CHECK(g.edge_count() - e0 == 6);

    CHECK(g.validate().ok());  // simplicity and connectivity preserved
}
