#include "fibnet/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace fibnet {

const char* to_string(Origin o) {
    switch (o) {
        case Origin::seed: return "seed";
        case Origin::triangle: return "triangle";
        case Origin::star: return "star";
        case Origin::rectangle: return "rectangle";
        case Origin::hub: return "hub";
    }
    return "?";
}

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::vertical: return "vertical";
        case Orientation::aclinic: return "aclinic";
        case Orientation::unoriented: return "unoriented";
    }
    return "?";
}

std::optional<Origin> origin_from_string(const std::string& s) {
    for (Origin o : {Origin::seed, Origin::triangle, Origin::star, Origin::rectangle, Origin::hub})
        if (s == to_string(o)) return o;
    return std::nullopt;
}

std::optional<Orientation> orientation_from_string(const std::string& s) {
    for (Orientation o : {Orientation::vertical, Orientation::aclinic, Orientation::unoriented})
        if (s == to_string(o)) return o;
    return std::nullopt;
}

int LabeledGraph::add_vertex(Origin origin) {
    int id = static_cast<int>(vertices_.size());
    vertices_.push_back({id, current_step_, origin});
    adjacency_.emplace_back();
    return id;
}

int LabeledGraph::add_edge(int u, int v, Orientation orientation, Origin origin,
                           bool triangle_member, bool pendant) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v, orientation, current_step_, origin, triangle_member, false, pendant});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
}

bool LabeledGraph::has_edge(int u, int v) const {
    const auto& adj = adjacency_[degree(u) <= degree(v) ? u : v];
    int other = degree(u) <= degree(v) ? v : u;
    for (const auto& e : adj)
        if (e.vertex == other) return true;
    return false;
}

std::optional<int> LabeledGraph::find_edge(int u, int v) const {
    for (const auto& e : adjacency_[u])
        if (e.vertex == v) return e.edge;
    return std::nullopt;
}

int LabeledGraph::count_common_neighbors(int u, int v) const {
    int n = 0;
    const auto& small = adjacency_[degree(u) <= degree(v) ? u : v];
    int other = degree(u) <= degree(v) ? v : u;
    for (const auto& e : small)
        if (has_edge(e.vertex, other)) ++n;
    return n;
}

void LabeledGraph::register_rectangle(std::array<int, 4> corners, std::array<int, 2> verticals,
                                      std::array<int, 2> aclinics) {
    int id = static_cast<int>(rectangles_.size());
    rectangles_.push_back({id, corners, verticals, aclinics, current_step_, false});
    for (int e : verticals) edges_[e].rectangle_side = true;
    for (int e : aclinics) edges_[e].rectangle_side = true;
}

LabeledGraph LabeledGraph::seed(SeedKind kind) {
    LabeledGraph g;
    if (kind == SeedKind::single_edge) {
        g.add_vertex(Origin::seed);
        g.add_vertex(Origin::seed);
        g.add_edge(0, 1, Orientation::unoriented, Origin::seed);
        return g;
    }
    // 4-cycle 0-1-3-2-0; opposite sides share orientation.
    for (int i = 0; i < 4; ++i) g.add_vertex(Origin::seed);
    int v1 = g.add_edge(0, 1, Orientation::vertical, Origin::seed);
    int a1 = g.add_edge(1, 3, Orientation::aclinic, Origin::seed);
    int v2 = g.add_edge(2, 3, Orientation::vertical, Origin::seed);
    int a2 = g.add_edge(0, 2, Orientation::aclinic, Origin::seed);
    g.register_rectangle({0, 1, 3, 2}, {v1, v2}, {a1, a2});
    return g;
}

LabeledGraph LabeledGraph::from_parts(std::vector<VertexRec> vertices, std::vector<EdgeRec> edges) {
    LabeledGraph g;
    g.vertices_ = std::move(vertices);
    g.adjacency_.assign(g.vertices_.size(), {});
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= static_cast<int>(g.vertices_.size()))
            throw std::invalid_argument("edge endpoint out of range");
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back(e);
        g.adjacency_[e.u].push_back({e.v, id});
        g.adjacency_[e.v].push_back({e.u, id});
    }
    for (const auto& v : g.vertices_) g.current_step_ = std::max(g.current_step_, v.birth_step);
    return g;
}

MutationSummary LabeledGraph::apply_growth(GrowthPhase phase, std::span<const int> targets) {
    int limit = phase == GrowthPhase::hub ? static_cast<int>(rectangles_.size())
                                          : static_cast<int>(edges_.size());
    std::set<int> seen;
    for (int id : targets) {
        if (id < 0 || id >= limit) throw std::invalid_argument("unknown growth target id");
        if (!seen.insert(id).second) throw std::invalid_argument("duplicate growth target");
    }

    MutationSummary s;
    switch (phase) {
        case GrowthPhase::triangle:
            // One new vertex joined to both endpoints of each target edge.
            for (int eid : targets) {
                auto [u, v] = std::pair{edges_[eid].u, edges_[eid].v};
                int w = add_vertex(Origin::triangle);
                add_edge(u, w, Orientation::unoriented, Origin::triangle, true);
                add_edge(v, w, Orientation::unoriented, Origin::triangle, true);
                edges_[eid].triangle_member = true;
                s.new_vertices += 1;
                s.new_edges += 2;
                s.new_triangles += 1;
            }
            break;
        case GrowthPhase::star:
            // One new pendant per endpoint; star edges are vertical.
            for (int eid : targets) {
                for (int x : {edges_[eid].u, edges_[eid].v}) {
                    int w = add_vertex(Origin::star);
                    add_edge(x, w, Orientation::vertical, Origin::star, false, true);
                    s.new_vertices += 1;
                    s.new_edges += 1;
                }
            }
            break;
        case GrowthPhase::rectangle:
            // Parallel copy of the target edge through two new vertices; the new
            // 4-cycle is registered with the target and the copy as its verticals.
            for (int eid : targets) {
                auto [u, v] = std::pair{edges_[eid].u, edges_[eid].v};
                int up = add_vertex(Origin::rectangle);
                int vp = add_vertex(Origin::rectangle);
                int par = add_edge(up, vp, Orientation::vertical, Origin::rectangle);
                int cu = add_edge(u, up, Orientation::aclinic, Origin::rectangle);
                int cv = add_edge(v, vp, Orientation::aclinic, Origin::rectangle);
                register_rectangle({u, v, vp, up}, {eid, par}, {cu, cv});
                s.new_vertices += 2;
                s.new_edges += 3;
                s.new_rectangles += 1;
            }
            break;
        case GrowthPhase::hub:
            // One shared apex adjacent to all four corners of each target rectangle.
            for (int rid : targets) {
                auto& rect = rectangles_[rid];
                int h = add_vertex(Origin::hub);
                for (int c : rect.corners) {
                    s.new_triangles += count_common_neighbors(c, h);
                    add_edge(c, h, Orientation::unoriented, Origin::hub, true);
                }
                for (int e : rect.vertical_edges) edges_[e].triangle_member = true;
                for (int e : rect.aclinic_edges) edges_[e].triangle_member = true;
                rect.hubbed = true;
                s.new_vertices += 1;
                s.new_edges += 4;
            }
            break;
    }
    return s;
}

ValidationReport LabeledGraph::validate() const {
    ValidationReport r;
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : edges_) {
        if (e.u == e.v) {
            r.simple = false;
            r.violations.push_back("self-loop at vertex " + std::to_string(e.u));
        }
        auto key = std::minmax(e.u, e.v);
        if (!pairs.insert({key.first, key.second}).second) {
            r.simple = false;
            r.violations.push_back("duplicate edge " + std::to_string(e.u) + "-" +
                                   std::to_string(e.v));
        }
    }

    // degree sum and adjacency consistency
    std::size_t half_entries = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        half_entries += adjacency_[v].size();
        for (const auto& a : adjacency_[v]) {
            if (a.edge < 0 || a.edge >= edge_count()) {
                r.adjacency_ok = false;
                r.violations.push_back("adjacency entry with bad edge id");
                continue;
            }
            const auto& e = edges_[a.edge];
            bool matches = (e.u == v && e.v == a.vertex) || (e.v == v && e.u == a.vertex);
            if (!matches) {
                r.adjacency_ok = false;
                r.violations.push_back("adjacency entry disagrees with edge " +
                                       std::to_string(a.edge));
            }
        }
    }
    if (half_entries != 2 * edges_.size()) {
        r.degree_sum_ok = false;
        r.violations.push_back("degree sum != 2|E|");
    }

    // connectivity
    if (vertex_count() > 0) {
        std::vector<char> seen(vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& a : adjacency_[u])
                if (!seen[a.vertex]) {
                    seen[a.vertex] = 1;
                    ++reached;
                    stack.push_back(a.vertex);
                }
        }
        if (reached != vertex_count()) {
            r.connected = false;
            r.violations.push_back("graph is disconnected");
        }
    }

    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i].birth_step < vertices_[i - 1].birth_step) {
            r.birth_monotone = false;
            r.violations.push_back("vertex birth steps decrease at id " + std::to_string(i));
            break;
        }
    return r;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size())
        return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
        const auto& x = a.vertices_[i];
        const auto& y = b.vertices_[i];
        if (x.id != y.id || x.birth_step != y.birth_step || x.origin != y.origin) return false;
    }
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.orientation != y.orientation ||
            x.birth_step != y.birth_step || x.origin != y.origin)
            return false;
    }
    return true;
}

}  // namespace fibnet
