#include "fibnet/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fibnet {

namespace {

bool is_connected(const LabeledGraph& g) { return g.validate().connected; }

}  // namespace

ExactCount count_spanning_trees(const LabeledGraph& g, int delete_index, int resource_bound) {
    const int n = g.vertex_count();
    if (n > resource_bound) throw std::invalid_argument("count_spanning_trees: |V| over bound");
    if (n <= 1) return 1;
    if (delete_index < 0 || delete_index >= n)
        throw std::invalid_argument("count_spanning_trees: bad delete index");
    if (!is_connected(g)) return 0;

    // Laplacian principal minor
    const int m = n - 1;
    auto row_of = [&](int v) { return v < delete_index ? v : v - 1; };
    std::vector<BigInt> a(static_cast<std::size_t>(m) * m, BigInt(0));
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * m + j]; };
    for (int v = 0; v < n; ++v) {
        if (v == delete_index) continue;
        at(row_of(v), row_of(v)) = g.degree(v);
        for (auto nb : g.neighbors(v))
            if (nb.vertex != delete_index) at(row_of(v), row_of(nb.vertex)) -= 1;
    }

    // Bareiss: a[i][j] = (a[i][j]*a[k][k] - a[i][k]*a[k][j]) / prev, exactly
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < m; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;  // singular: no spanning tree
            for (int j = k; j < m; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                BigInt num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    BigInt det = at(m - 1, m - 1);
    return sign > 0 ? det : BigInt(-det);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

EnumerationResult enumerate_by_subsets(const LabeledGraph& g, long long cap) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    EnumerationResult out;
    if (n < 2) {
        out.count = 1;
        out.leaf_histogram[0] = 1;
        return out;
    }
    const int k = n - 1;
    if (k > m) return out;  // too few edges: no spanning tree

    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> deg(n);
    while (true) {
        UnionFind uf(n);
        std::fill(deg.begin(), deg.end(), 0);
        bool acyclic = true;
        for (int i : idx) {
            const auto& e = g.edges()[i];
            if (!uf.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
            ++deg[e.u];
            ++deg[e.v];
        }
        if (acyclic) {  // k = n-1 acyclic edges always span
            out.count += 1;
            if (out.count > static_cast<long>(cap)) {
                out.capped = true;
                out.leaf_histogram.clear();
                return out;
            }
            out.leaf_histogram[static_cast<int>(std::count(deg.begin(), deg.end(), 1))] += 1;
        }
        // next k-combination of {0..m-1}
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Frontier-edge recursion: branch on the lowest-id alive edge leaving the
/// grown component; the exclude branch is taken only while the alive graph
/// stays connected.
struct ReverseSearch {
    const LabeledGraph& g;
    long long cap;
    EnumerationResult out;
    std::vector<char> alive, in_comp;
    std::vector<int> tree;
    std::vector<int> deg;
    int comp_size = 0;
    bool stop = false;

    explicit ReverseSearch(const LabeledGraph& graph, long long c)
        : g(graph),
          cap(c),
          alive(graph.edge_count(), 1),
          in_comp(graph.vertex_count(), 0),
          deg(graph.vertex_count(), 0) {}

    bool alive_graph_connected() {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto a : g.neighbors(u))
                if (alive[a.edge] && !seen[a.vertex]) {
                    seen[a.vertex] = 1;
                    ++reached;
                    stack.push_back(a.vertex);
                }
        }
        return reached == g.vertex_count();
    }

    void grow() {
        if (stop) return;
        if (comp_size == g.vertex_count()) {
            out.count += 1;
            if (out.count > static_cast<long>(cap)) {
                out.capped = true;
                out.leaf_histogram.clear();
                stop = true;
                return;
            }
            int leaves = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (deg[v] == 1) ++leaves;
            out.leaf_histogram[leaves] += 1;
            return;
        }
        // lowest-id alive edge crossing the component boundary
        int e = -1;
        for (int i = 0; i < g.edge_count(); ++i)
            if (alive[i] && (in_comp[g.edges()[i].u] != in_comp[g.edges()[i].v])) {
                e = i;
                break;
            }
        if (e < 0) return;
        const auto& er = g.edges()[e];
        int fresh = in_comp[er.u] ? er.v : er.u;

        // include e
        in_comp[fresh] = 1;
        ++comp_size;
        ++deg[er.u];
        ++deg[er.v];
        tree.push_back(e);
        grow();
        tree.pop_back();
        --deg[er.u];
        --deg[er.v];
        --comp_size;
        in_comp[fresh] = 0;
        if (stop) return;

        // exclude e while some spanning tree avoiding it still exists
        alive[e] = 0;
        if (alive_graph_connected()) grow();
        alive[e] = 1;
    }

    EnumerationResult run() {
        if (g.vertex_count() < 2) {
            out.count = 1;
            out.leaf_histogram[0] = 1;
            return out;
        }
        in_comp[0] = 1;
        comp_size = 1;
        grow();
        return out;
    }
};

}  // namespace

EnumerationResult enumerate_spanning_trees(const LabeledGraph& g, long long cap,
                                           EnumMethod method) {
    if (cap < 1) throw std::invalid_argument("enumerate_spanning_trees: cap must be positive");
    if (!is_connected(g)) return {};
    if (method == EnumMethod::automatic)
        method = g.edge_count() <= 20 ? EnumMethod::subset_filter : EnumMethod::reverse_search;
    if (method == EnumMethod::subset_filter) return enumerate_by_subsets(g, cap);
    ReverseSearch rs(g, cap);
    return rs.run();
}

namespace {

struct MlsSearch {
    const LabeledGraph& g;
    long long budget;
    long long expansions = 0;
    bool exhausted = true;
    int best_leaves = 0;
    std::vector<int> best_tree;

    std::vector<char> alive;      // not excluded
    std::vector<char> included;
    std::vector<int> deg_in;
    std::vector<int> tree;
    int included_count = 0;

    explicit MlsSearch(const LabeledGraph& graph, long long b)
        : g(graph),
          budget(b),
          alive(graph.edge_count(), 1),
          included(graph.edge_count(), 0),
          deg_in(graph.vertex_count(), 0) {}

    bool included_acyclic_with(int extra) {
        UnionFind uf(g.vertex_count());
        for (int e : tree) uf.unite(g.edges()[e].u, g.edges()[e].v);
        return uf.unite(g.edges()[extra].u, g.edges()[extra].v);
    }

    bool alive_connected() {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto a : g.neighbors(u))
                if (alive[a.edge] && !seen[a.vertex]) {
                    seen[a.vertex] = 1;
                    ++reached;
                    stack.push_back(a.vertex);
                }
        }
        return reached == g.vertex_count();
    }

    void record_tree() {
        int leaves = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg_in[v] == 1) ++leaves;
        if (leaves > best_leaves) {
            best_leaves = leaves;
            best_tree = tree;
        }
    }

    void search(int next_edge) {
        if (++expansions > budget) {
            exhausted = false;
            return;
        }
        if (included_count == g.vertex_count() - 1) {
            record_tree();
            return;
        }
        // admissible bound: only vertices not yet forced internal can be leaves
        int forced_internal = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg_in[v] >= 2) ++forced_internal;
        if (g.vertex_count() - forced_internal <= best_leaves) return;

        int e = next_edge;
        while (e < g.edge_count() && !alive[e]) ++e;
        if (e >= g.edge_count()) return;
        const auto& er = g.edges()[e];

        // include branch first
        if (included_acyclic_with(e)) {
            included[e] = 1;
            tree.push_back(e);
            ++included_count;
            ++deg_in[er.u];
            ++deg_in[er.v];
            search(e + 1);
            --deg_in[er.v];
            --deg_in[er.u];
            --included_count;
            tree.pop_back();
            included[e] = 0;
        }
        if (!exhausted) return;

        // exclude branch only while included + undecided can still span
        alive[e] = 0;
        if (alive_connected()) search(e + 1);
        alive[e] = 1;
    }
};

}  // namespace

MlsResult max_leaf_spanning_tree(const LabeledGraph& g, long long budget) {
    if (!is_connected(g)) throw std::invalid_argument("max_leaf_spanning_tree: disconnected");
    MlsResult out;
    if (g.vertex_count() < 2) {
        out.exhaustive = true;
        return out;
    }
    MlsSearch s(g, budget);
    s.search(0);
    out.max_leaves = s.best_leaves;
    out.witness_edges = s.best_tree;
    out.exhaustive = s.exhausted;
    out.expansions = s.expansions;
    return out;
}

std::optional<ExactCount> count_mls_trees(const LabeledGraph& g, long long cap) {
    auto enumeration = enumerate_spanning_trees(g, cap);
    if (enumeration.capped) return std::nullopt;
    if (enumeration.leaf_histogram.empty()) return ExactCount(0);
    return ExactCount(static_cast<long>(enumeration.leaf_histogram.rbegin()->second));
}

}  // namespace fibnet
