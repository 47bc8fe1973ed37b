#include <doctest.h>

#include "fibnet/generator.hpp"
#include "fibnet/spanning.hpp"
#include "helpers.hpp"

using namespace fibnet;
using namespace fibnet::testing;

TEST_CASE("Kirchhoff counts on tiny graphs") {
    CHECK(count_spanning_trees(complete_graph(3)) == 3);
    CHECK(count_spanning_trees(cycle_graph(4)) == 4);
    CHECK(count_spanning_trees(complete_graph(4)) == 16);
    CHECK(count_spanning_trees(star_graph(5)) == 1);
    CHECK(count_spanning_trees(path_graph(6)) == 1);
    // Cayley: n^(n-2)
    CHECK(count_spanning_trees(complete_graph(6)) == 1296);
}

TEST_CASE("Kirchhoff: disconnected graphs count zero") {
    auto g = graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK(count_spanning_trees(g) == 0);
}

TEST_CASE("Kirchhoff matches a frozen independently computed value on N(3)") {
    auto g = generate_n(3).graph;
    CHECK(count_spanning_trees(g) == BigInt("119967698814566400000"));
    CHECK(count_spanning_trees(generate_n(2).graph) == 2156544);
    CHECK(count_spanning_trees(generate_n(1).graph) == 30);
}

TEST_CASE("determinant is invariant under the deleted row/column choice") {
    std::vector<LabeledGraph> corpus;
    corpus.push_back(generate_n(1).graph);
    corpus.push_back(generate_n1(2));
    corpus.push_back(complete_graph(4));
    corpus.push_back(complete_graph(5));
    corpus.push_back(cycle_graph(7));
    for (auto& g : random_connected_graphs(5, 777)) corpus.push_back(std::move(g));
    REQUIRE(corpus.size() == 10);
    for (const auto& g : corpus) {
        auto a = count_spanning_trees(g, 0);
        auto b = count_spanning_trees(g, g.vertex_count() / 2);
        auto c = count_spanning_trees(g, g.vertex_count() - 1);
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("enumeration equals the determinant on the corpus") {
    std::vector<LabeledGraph> corpus;
    corpus.push_back(LabeledGraph::seed(SeedKind::rectangle));
    corpus.push_back(generate_n(1).graph);
    corpus.push_back(generate_n1(2));
    corpus.push_back(complete_graph(3));
    corpus.push_back(complete_graph(4));
    for (int n = 4; n <= 8; ++n) corpus.push_back(cycle_graph(n));
    for (auto& g : random_connected_graphs(20)) corpus.push_back(std::move(g));
    for (const auto& g : corpus) {
        auto e = enumerate_spanning_trees(g, 2000000);
        REQUIRE_FALSE(e.capped);
        CHECK(e.count == count_spanning_trees(g));
    }
}

TEST_CASE("both enumeration methods agree") {
    for (const auto& g : {complete_graph(4), cycle_graph(6), generate_n1(2)}) {
        auto subset = enumerate_spanning_trees(g, 1000000, EnumMethod::subset_filter);
        auto reverse = enumerate_spanning_trees(g, 1000000, EnumMethod::reverse_search);
        CHECK(subset.count == reverse.count);
        CHECK(subset.leaf_histogram == reverse.leaf_histogram);
    }
}

TEST_CASE("enumeration leaf histograms") {
    auto c4 = enumerate_spanning_trees(cycle_graph(4), 100);
    CHECK(c4.count == 4);
    CHECK(c4.leaf_histogram == std::map<int, long long>{{2, 4}});

    auto k4 = enumerate_spanning_trees(complete_graph(4), 100);
    CHECK(k4.count == 16);
    CHECK(k4.leaf_histogram == std::map<int, long long>{{2, 12}, {3, 4}});

    auto n1 = enumerate_spanning_trees(generate_n(1).graph, 1000);
    CHECK(n1.count == 30);
    CHECK(n1.leaf_histogram ==
          std::map<int, long long>{{4, 2}, {5, 12}, {6, 16}});
}

TEST_CASE("enumeration cap is a soft stop") {
    auto e = enumerate_spanning_trees(complete_graph(6), 100);
    CHECK(e.capped);
    CHECK(e.leaf_histogram.empty());
}

TEST_CASE("max-leaf search on canonical graphs") {
    auto star = max_leaf_spanning_tree(star_graph(5));
    CHECK(star.exhaustive);
    CHECK(star.max_leaves == 5);
    CHECK(star.witness_edges.size() == 5);

    auto c4 = max_leaf_spanning_tree(cycle_graph(4));
    CHECK(c4.exhaustive);
    CHECK(c4.max_leaves == 2);

    auto k4 = max_leaf_spanning_tree(complete_graph(4));
    CHECK(k4.exhaustive);
    CHECK(k4.max_leaves == 3);
    CHECK(count_mls_trees(complete_graph(4), 1000) == ExactCount(4));
}

TEST_CASE("max-leaf search equals the enumeration histogram maximum on N(1)") {
    auto g = generate_n(1).graph;
    auto enumeration = enumerate_spanning_trees(g, 1000);
    REQUIRE_FALSE(enumeration.capped);
    int hist_max = enumeration.leaf_histogram.rbegin()->first;
    auto bb = max_leaf_spanning_tree(g);
    CHECK(bb.exhaustive);
    CHECK(bb.max_leaves == hist_max);
    CHECK(bb.max_leaves == 6);
    CHECK(count_mls_trees(g, 1000) == ExactCount(16));
}

TEST_CASE("max-leaf witness validates as a spanning tree with the reported leaves") {
    std::vector<LabeledGraph> corpus;
    corpus.push_back(generate_n(1).graph);
    corpus.push_back(generate_n1(2));
    corpus.push_back(complete_graph(5));
    for (auto& g : random_connected_graphs(8, 4242)) corpus.push_back(std::move(g));
    for (const auto& g : corpus) {
        auto r = max_leaf_spanning_tree(g);
        REQUIRE(r.exhaustive);
        REQUIRE(static_cast<int>(r.witness_edges.size()) == g.vertex_count() - 1);
        // acyclic + spanning via union-find over witness edges
        std::vector<int> parent(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e : r.witness_edges) {
            int u = g.edges()[e].u, v = g.edges()[e].v;
            int ru = find(u), rv = find(v);
            REQUIRE(ru != rv);
            parent[ru] = rv;
            ++deg[u];
            ++deg[v];
        }
        int leaves = 0;
        for (int d : deg) {
            CHECK(d >= 1);  // spanning: every vertex touched
            if (d == 1) ++leaves;
        }
        CHECK(leaves == r.max_leaves);
        if (g.vertex_count() >= 2) CHECK(r.max_leaves >= 2);
    }
}

TEST_CASE("max-leaf search respects its budget") {
    auto g = generate_n(2).graph;
    auto capped = max_leaf_spanning_tree(g, 50);
    CHECK_FALSE(capped.exhaustive);
    CHECK(capped.expansions > 50);
    // the incumbent it did find is still a valid bound
    CHECK(capped.max_leaves >= 0);
    CHECK_THROWS_AS(max_leaf_spanning_tree(graph_from_edges(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("count_mls_trees: unique tree of the star, cap handling") {
    CHECK(count_mls_trees(star_graph(5), 10) == ExactCount(1));
    CHECK(count_mls_trees(cycle_graph(4), 10) == ExactCount(4));
    CHECK_FALSE(count_mls_trees(complete_graph(6), 100).has_value());
}

TEST_CASE("kirchhoff bound rejection") {
    auto g = generate_n(2).graph;
    CHECK_THROWS_AS(count_spanning_trees(g, 0, 10), std::invalid_argument);
}
