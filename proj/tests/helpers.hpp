#pragma once

#include <random>
#include <vector>

#include "fibnet/graph.hpp"

namespace fibnet::testing {

/// Plain graph from an edge list; labels defaulted.
inline LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexRec> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = {i, 0, Origin::seed};
    std::vector<EdgeRec> es;
    for (auto [u, v] : edges) {
        EdgeRec e;
        e.u = u;
        e.v = v;
        es.push_back(e);
    }
    return LabeledGraph::from_parts(std::move(vs), std::move(es));
}

inline LabeledGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
}

inline LabeledGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                   std::max(i, (i + 1) % n));
    return graph_from_edges(n, edges);
}

inline LabeledGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return graph_from_edges(n, edges);
}

inline LabeledGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return graph_from_edges(leaves + 1, edges);
}

/// Deterministic connected random graphs on 4..8 vertices (fixed mt19937 seeds).
inline std::vector<LabeledGraph> random_connected_graphs(int how_many, unsigned seed = 20240613) {
    std::mt19937 rng(seed);
    std::vector<LabeledGraph> out;
    while (static_cast<int>(out.size()) < how_many) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 45) edges.emplace_back(u, v);
        auto g = graph_from_edges(n, edges);
        if (g.validate().connected) out.push_back(std::move(g));
    }
    return out;
}

/// Independent all-pairs oracle for the BFS-based distance report.
inline std::vector<std::vector<int>> floyd_warshall(const LabeledGraph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

}  // namespace fibnet::testing
