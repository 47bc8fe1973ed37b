#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibnet/graph.hpp"
#include "fibnet/metrics.hpp"

namespace fibnet {

enum class TriangleScope { all_triangle_edges, triangle_edges_born_prev_step };
enum class HubScope { rectangles_born_prev_step, rectangles_born_in_step, none };
enum class RectScope { pendants_born_prev_step, all_pendants };

// star_scope flag set
namespace star_flag {
inline constexpr unsigned seed_aclinic_always = 1u;
inline constexpr unsigned aclinic_of_rects_born_in_step = 2u;
inline constexpr unsigned aclinic_of_rects_born_prev_step = 4u;
inline constexpr unsigned all_old_rectangle_aclinic = 8u;
inline constexpr unsigned mask = 15u;
}  // namespace star_flag

/// Declarative description of which edge/vertex classes each growth phase
/// targets at steps t >= 2. Step 0 (the seed) and step 1 (triangle growth on
/// the seed verticals, star growth on the seed aclinics) are fixed.
struct RuleConfig {
    TriangleScope triangle_scope = TriangleScope::all_triangle_edges;
    HubScope hub_scope = HubScope::rectangles_born_prev_step;
    unsigned star_scope = star_flag::seed_aclinic_always | star_flag::aclinic_of_rects_born_in_step;
    RectScope rect_scope = RectScope::pendants_born_prev_step;
    bool step2_exception = true;  // at t=2 star targets only the seed aclinic edges

    bool valid() const { return star_scope != 0 && (star_scope & ~star_flag::mask) == 0; }
    std::string fingerprint() const;
    static std::optional<RuleConfig> from_fingerprint(const std::string& s);

    /// Canonical total order used by calibrate_rules: lexicographic over
    /// (triangle_scope, hub_scope, star_scope bitmask, rect_scope, exception
    /// with true first), each enum in its declaration order.
    friend bool operator<(const RuleConfig& a, const RuleConfig& b) {
        auto key = [](const RuleConfig& c) {
            return std::tuple(static_cast<int>(c.triangle_scope), static_cast<int>(c.hub_scope),
                              c.star_scope, static_cast<int>(c.rect_scope),
                              c.step2_exception ? 0 : 1);
        };
        return key(a) < key(b);
    }
    friend bool operator==(const RuleConfig&, const RuleConfig&) = default;
};

/// Per-step counters measured while growing.
struct StepCounters {
    long new_nonfractal_triangles = 0;  // triangles not born inside a triangle cluster
    long new_rectangles = 0;
    long new_pendant_edges = 0;
    long lineage_star_edges = 0;   // star edges landing on the tracked seed corner
    long lineage_rectangles = 0;   // rectangles gaining the tracked seed corner
};

struct GrowthTrace {
    std::vector<StepCounters> steps;  // index = step, length t+1
};

struct GrowthResult {
    LabeledGraph graph;
    GrowthTrace trace;
};

/// Deterministic hybrid growth for t steps. Throws on t over the resource
/// bound or an invalid config.
GrowthResult generate_n(int t, const RuleConfig& config = RuleConfig{}, int resource_bound = 8);

/// Single-edge seed, triangle growth on every edge each step.
LabeledGraph generate_n1(int t, int resource_bound = 10);

struct CountAnchor {
    int t = 0;
    long long vertices = 0;
    long long edges = 0;
    std::optional<long long> pendant_edges;  // L(t)
    std::optional<long long> rectangles;     // Theta(t)
};

/// Candidate values per field; defaults to the full space.
struct RuleSpace {
    std::vector<TriangleScope> triangle{TriangleScope::all_triangle_edges,
                                        TriangleScope::triangle_edges_born_prev_step};
    std::vector<HubScope> hub{HubScope::rectangles_born_prev_step,
                              HubScope::rectangles_born_in_step, HubScope::none};
    std::vector<unsigned> star;  // empty = all non-empty flag subsets
    std::vector<RectScope> rect{RectScope::pendants_born_prev_step, RectScope::all_pendants};
    std::vector<bool> exception{true, false};
};

/// Exhaustively enumerates the configuration space in the canonical order and
/// returns every config whose generated counts match all anchors exactly.
/// An empty result is a legal outcome. Anchors need t >= 0; generation runs to
/// the largest anchor t.
std::vector<RuleConfig> calibrate_rules(std::span<const CountAnchor> anchors,
                                        const RuleSpace& space = RuleSpace{});

enum class AppendixModel { apollonian, sierpinski };
std::optional<AppendixModel> appendix_model_from_string(const std::string& s);

/// Degree tables of the two reference models, by rank:
///   apollonian: degree 3*2^(t-r+1), counts 1, 3, 3^2, ..., 3^t
///   sierpinski: degree 3^(t-r+1)+1, counts 6, 3*6, ..., 3*6^(t-1)
std::vector<DegreeClassRow> appendix_degree_table(AppendixModel model, int t);

/// Vertex classes of the pseudofractal model: for i = 0..t-1 a class of 3^i
/// vertices with degree 2^(t-i), sitting on 2^(t-i)-1 triangles, clustering
/// 2/degree. The two seed vertices share the top class's degree.
struct PseudofractalClassRow {
    BigInt count;
    BigInt degree;
    BigInt triangles;
    Rational clustering;
};
std::vector<PseudofractalClassRow> pseudofractal_vertex_classes(int t);

}  // namespace fibnet
