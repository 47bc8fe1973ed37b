#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fibnet/graph.hpp"
#include "fibnet/numeric.hpp"

namespace fibnet {

using ExactCount = BigInt;

/// Kirchhoff count: determinant of the Laplacian principal minor obtained by
/// deleting row/column delete_index, computed by fraction-free integer
/// elimination (division-exact two-step scheme). The result is independent of
/// delete_index. Returns 0 for a disconnected graph. Throws when |V| exceeds
/// the resource bound.
ExactCount count_spanning_trees(const LabeledGraph& g, int delete_index = 0,
                                int resource_bound = 500);

enum class EnumMethod { automatic, subset_filter, reverse_search };

struct EnumerationResult {
    ExactCount count = 0;
    bool capped = false;                 // enumeration stopped at the cap
    std::map<int, long long> leaf_histogram;  // leaves -> trees (valid when not capped)
};

/// Exhaustive spanning-tree enumeration. Subset filtering over all (|V|-1)-edge
/// subsets up to 20 edges, frontier-edge reverse search above that.
EnumerationResult enumerate_spanning_trees(const LabeledGraph& g, long long cap,
                                           EnumMethod method = EnumMethod::automatic);

struct MlsResult {
    int max_leaves = 0;
    std::vector<int> witness_edges;  // spanning tree attaining max_leaves
    bool exhaustive = false;         // search completed within budget
    long long expansions = 0;
};

/// Branch and bound over edge inclusion/exclusion. The admissible bound is
/// |V| minus the number of vertices already forced internal (two or more
/// included edges). Branching follows ascending edge id, include before
/// exclude, so results are reproducible. When the budget runs out the best
/// tree found so far is returned with exhaustive = false.
MlsResult max_leaf_spanning_tree(const LabeledGraph& g, long long budget = 10000000);

/// Number of spanning trees attaining the maximum leaf count, by exhaustive
/// enumeration. Empty when the cap is exceeded.
std::optional<ExactCount> count_mls_trees(const LabeledGraph& g, long long cap);

}  // namespace fibnet
