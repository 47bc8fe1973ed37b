#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fibnet {

enum class Origin : std::uint8_t { seed, triangle, star, rectangle, hub };
enum class Orientation : std::uint8_t { vertical, aclinic, unoriented };
enum class SeedKind { rectangle, single_edge };
enum class GrowthPhase { triangle, star, rectangle, hub };

const char* to_string(Origin o);
const char* to_string(Orientation o);
std::optional<Origin> origin_from_string(const std::string& s);
std::optional<Orientation> orientation_from_string(const std::string& s);

struct VertexRec {
    int id = 0;
    int birth_step = 0;
    Origin origin = Origin::seed;
};

struct EdgeRec {
    int u = 0, v = 0;  // endpoints, stored u < v
    Orientation orientation = Orientation::unoriented;
    int birth_step = 0;
    Origin origin = Origin::seed;
    bool triangle_member = false;  // lies on at least one triangle
    bool rectangle_side = false;   // registered as a side of some rectangle
    bool pendant = false;          // had a degree-1 endpoint at birth
};

/// A 4-cycle registered by the seed or by rectangle growth; hub growth targets these.
struct RectangleRec {
    int id = 0;
    std::array<int, 4> corners{};        // u, v, v', u' around the cycle
    std::array<int, 2> vertical_edges{};  // target edge and its parallel copy
    std::array<int, 2> aclinic_edges{};   // the two connectors
    int birth_step = 0;
    bool hubbed = false;
};

struct MutationSummary {
    int new_vertices = 0;
    int new_edges = 0;
    int new_triangles = 0;
    int new_rectangles = 0;
};

struct ValidationReport {
    bool simple = true;           // no self-loops, no duplicate endpoint pairs
    bool connected = true;
    bool degree_sum_ok = true;    // sum of degrees == 2|E|
    bool adjacency_ok = true;     // adjacency index consistent with edge list
    bool birth_monotone = true;   // vertex birth steps non-decreasing in id
    std::vector<std::string> violations;

    bool ok() const {
        return simple && connected && degree_sum_ok && adjacency_ok && birth_monotone;
    }
};

/// Simple undirected graph whose vertices and edges carry birth step, origin and
/// orientation labels. Grows through the four growth phases; never shrinks.
/// After construction it is immutable from the caller's perspective and safe to
/// read from any number of threads.
class LabeledGraph {
public:
    struct AdjEntry {
        int vertex;
        int edge;
    };

    static LabeledGraph seed(SeedKind kind);

    /// Rebuilds a graph from raw records (import, test fixtures). Performs no
    /// validation beyond id bounds; use validate() to inspect the result.
    static LabeledGraph from_parts(std::vector<VertexRec> vertices, std::vector<EdgeRec> edges);

    /// Applies one growth phase to an explicit, pre-snapshotted target set.
    /// Targets are edge ids for triangle/star/rectangle, rectangle ids for hub.
    /// Growth never cascades within a call. Throws std::invalid_argument on an
    /// unknown or duplicated target id.
    MutationSummary apply_growth(GrowthPhase phase, std::span<const int> targets);

    void advance_step() { ++current_step_; }
    int current_step() const { return current_step_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexRec>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const std::vector<RectangleRec>& rectangles() const { return rectangles_; }
    std::span<const AdjEntry> neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;
    std::optional<int> find_edge(int u, int v) const;

    /// Never mutates; violations are report entries, not failures.
    ValidationReport validate() const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

private:
    LabeledGraph() = default;

    int add_vertex(Origin origin);
    int add_edge(int u, int v, Orientation orientation, Origin origin,
                 bool triangle_member = false, bool pendant = false);
    int count_common_neighbors(int u, int v) const;
    void register_rectangle(std::array<int, 4> corners, std::array<int, 2> verticals,
                            std::array<int, 2> aclinics);

    std::vector<VertexRec> vertices_;
    std::vector<EdgeRec> edges_;
    std::vector<RectangleRec> rectangles_;
    std::vector<std::vector<AdjEntry>> adjacency_;
    int current_step_ = 0;
};

/// Record-level equality: vertices plus edge endpoints/orientation/birth/origin.
/// Role flags and the rectangle registry are bookkeeping, not identity.
bool operator==(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace fibnet
