#include "fibnet/generator.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibnet {

namespace {

constexpr int kTrackedCorner = 0;  // lineage counters follow seed corner 0

const char* scope_name(TriangleScope s) {
    return s == TriangleScope::all_triangle_edges ? "all" : "prev";
}
const char* scope_name(HubScope s) {
    switch (s) {
        case HubScope::rectangles_born_prev_step: return "prev";
        case HubScope::rectangles_born_in_step: return "instep";
        case HubScope::none: return "none";
    }
    return "?";
}
const char* scope_name(RectScope s) {
    return s == RectScope::pendants_born_prev_step ? "prev" : "all";
}

std::string star_name(unsigned flags) {
    static const std::pair<unsigned, const char*> parts[] = {
        {star_flag::seed_aclinic_always, "seed"},
        {star_flag::aclinic_of_rects_born_in_step, "instep"},
        {star_flag::aclinic_of_rects_born_prev_step, "prev"},
        {star_flag::all_old_rectangle_aclinic, "allold"},
    };
    std::string out;
    for (auto [bit, name] : parts)
        if (flags & bit) {
            if (!out.empty()) out += "+";
            out += name;
        }
    return out.empty() ? "none" : out;
}

}  // namespace

std::string RuleConfig::fingerprint() const {
    std::ostringstream os;
    os << "tri=" << scope_name(triangle_scope) << ";hub=" << scope_name(hub_scope)
       << ";star=" << star_name(star_scope) << ";rect=" << scope_name(rect_scope)
       << ";ex2=" << (step2_exception ? 1 : 0);
    return os.str();
}

std::optional<RuleConfig> RuleConfig::from_fingerprint(const std::string& s) {
    // brute-force match against the (small) space
    RuleSpace space;
    for (auto tri : space.triangle)
        for (auto hub : space.hub)
            for (unsigned star = 1; star <= star_flag::mask; ++star)
                for (auto rect : space.rect)
                    for (bool ex : {true, false}) {
                        RuleConfig c{tri, hub, star, rect, ex};
                        if (c.fingerprint() == s) return c;
                    }
    return std::nullopt;
}

namespace {

struct Targets {
    std::vector<int> triangle, hub, rect;
    std::vector<int> star_static;
};

Targets snapshot_targets(const LabeledGraph& g, const RuleConfig& cfg, int t) {
    Targets out;
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const auto& e = edges[i];
        if (e.triangle_member &&
            (cfg.triangle_scope == TriangleScope::all_triangle_edges || e.birth_step == t - 1))
            out.triangle.push_back(i);
        bool live_pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
        if (cfg.rect_scope == RectScope::pendants_born_prev_step
                ? (e.pendant && e.birth_step == t - 1 && live_pendant)
                : live_pendant)
            out.rect.push_back(i);
    }
    for (const auto& r : g.rectangles())
        if (cfg.hub_scope == HubScope::rectangles_born_prev_step && r.birth_step == t - 1)
            out.hub.push_back(r.id);

    std::set<int> star;
    if (cfg.star_scope & star_flag::seed_aclinic_always)
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].origin == Origin::seed && edges[i].orientation == Orientation::aclinic)
                star.insert(i);
    if (cfg.star_scope & star_flag::aclinic_of_rects_born_prev_step)
        for (const auto& r : g.rectangles())
            if (r.birth_step == t - 1)
                star.insert(r.aclinic_edges.begin(), r.aclinic_edges.end());
    if (cfg.star_scope & star_flag::all_old_rectangle_aclinic)
        for (const auto& r : g.rectangles())
            star.insert(r.aclinic_edges.begin(), r.aclinic_edges.end());
    out.star_static.assign(star.begin(), star.end());
    return out;
}

long count_lineage_star(const LabeledGraph& g, int first_new_edge) {
    long n = 0;
    const auto& edges = g.edges();
    for (int i = first_new_edge; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].origin == Origin::star &&
            (edges[i].u == kTrackedCorner || edges[i].v == kTrackedCorner))
            ++n;
    return n;
}

}  // namespace

GrowthResult generate_n(int t, const RuleConfig& config, int resource_bound) {
    if (t < 0) throw std::invalid_argument("generate_n: t must be nonnegative");
    if (t > resource_bound) throw std::invalid_argument("generate_n: t over resource bound");
    if (!config.valid())
        throw std::invalid_argument("generate_n: invalid config (empty star scope)");

    GrowthResult res{LabeledGraph::seed(SeedKind::rectangle), {}};
    auto& g = res.graph;
    res.trace.steps.push_back({0, 1, 0, 0, 0});  // the seed registers one rectangle

    for (int step = 1; step <= t; ++step) {
        g.advance_step();
        StepCounters c;
        if (step == 1) {
            std::vector<int> verticals, aclinics;
            for (int i = 0; i < g.edge_count(); ++i) {
                if (g.edges()[i].orientation == Orientation::vertical) verticals.push_back(i);
                if (g.edges()[i].orientation == Orientation::aclinic) aclinics.push_back(i);
            }
            auto tri = g.apply_growth(GrowthPhase::triangle, verticals);
            c.new_nonfractal_triangles += tri.new_triangles;
            int first_new_edge = g.edge_count();
            auto star = g.apply_growth(GrowthPhase::star, aclinics);
            c.new_pendant_edges += star.new_edges;
            c.lineage_star_edges += count_lineage_star(g, first_new_edge);
        } else {
            auto targets = snapshot_targets(g, config, step);

            auto tri = g.apply_growth(GrowthPhase::triangle, targets.triangle);
            // growth on edges already inside triangles is cluster-internal
            c.new_nonfractal_triangles += tri.new_triangles
                                          - static_cast<long>(targets.triangle.size());

            auto hub = g.apply_growth(GrowthPhase::hub, targets.hub);
            c.new_nonfractal_triangles += hub.new_triangles;

            int first_new_rect = static_cast<int>(g.rectangles().size());
            auto rect = g.apply_growth(GrowthPhase::rectangle, targets.rect);
            c.new_rectangles += rect.new_rectangles;

            if (config.hub_scope == HubScope::rectangles_born_in_step) {
                std::vector<int> hub_now;
                for (int r = first_new_rect; r < static_cast<int>(g.rectangles().size()); ++r)
                    hub_now.push_back(r);
                auto h2 = g.apply_growth(GrowthPhase::hub, hub_now);
                c.new_nonfractal_triangles += h2.new_triangles;
            }

            for (int r = first_new_rect; r < static_cast<int>(g.rectangles().size()); ++r) {
                const auto& corners = g.rectangles()[r].corners;
                if (std::find(corners.begin(), corners.end(), kTrackedCorner) != corners.end())
                    ++c.lineage_rectangles;
            }

            std::set<int> star;
            if (step == 2 && config.step2_exception) {
                // the exception restores the hand count: only the seed aclinics
                for (int i = 0; i < g.edge_count(); ++i)
                    if (g.edges()[i].origin == Origin::seed &&
                        g.edges()[i].orientation == Orientation::aclinic)
                        star.insert(i);
            } else {
                star.insert(targets.star_static.begin(), targets.star_static.end());
                if (config.star_scope & star_flag::aclinic_of_rects_born_in_step)
                    for (int r = first_new_rect; r < static_cast<int>(g.rectangles().size()); ++r) {
                        const auto& rec = g.rectangles()[r];
                        star.insert(rec.aclinic_edges.begin(), rec.aclinic_edges.end());
                    }
            }
            std::vector<int> star_targets(star.begin(), star.end());
            int first_new_edge = g.edge_count();
            auto st = g.apply_growth(GrowthPhase::star, star_targets);
            c.new_pendant_edges += st.new_edges;
            c.lineage_star_edges += count_lineage_star(g, first_new_edge);
        }
        res.trace.steps.push_back(c);
    }
    return res;
}

LabeledGraph generate_n1(int t, int resource_bound) {
    if (t < 0) throw std::invalid_argument("generate_n1: t must be nonnegative");
    if (t > resource_bound) throw std::invalid_argument("generate_n1: t over resource bound");
    auto g = LabeledGraph::seed(SeedKind::single_edge);
    for (int step = 1; step <= t; ++step) {
        g.advance_step();
        std::vector<int> all(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
        g.apply_growth(GrowthPhase::triangle, all);
    }
    return g;
}

std::vector<RuleConfig> calibrate_rules(std::span<const CountAnchor> anchors,
                                        const RuleSpace& space) {
    if (anchors.empty()) throw std::invalid_argument("calibrate_rules: no anchors");
    int max_t = 0;
    for (const auto& a : anchors) {
        if (a.t < 0) throw std::invalid_argument("calibrate_rules: negative anchor t");
        max_t = std::max(max_t, a.t);
    }

    std::vector<unsigned> stars = space.star;
    if (stars.empty())
        for (unsigned s = 1; s <= star_flag::mask; ++s) stars.push_back(s);

    std::vector<RuleConfig> matches;
    for (auto tri : space.triangle)
        for (auto hub : space.hub)
            for (unsigned star : stars)
                for (auto rect : space.rect)
                    for (bool ex : space.exception) {
                        RuleConfig cfg{tri, hub, star, rect, ex};
                        if (!cfg.valid()) continue;
                        auto run = generate_n(max_t, cfg, std::max(max_t, 8));
                        bool ok = true;
                        for (const auto& a : anchors) {
                            // growth is append-only, so counts at step a.t are
                            // recoverable from birth steps of the full run
                            long long v_at = 0, e_at = 0;
                            for (const auto& vr : run.graph.vertices())
                                if (vr.birth_step <= a.t) ++v_at;
                            for (const auto& er : run.graph.edges())
                                if (er.birth_step <= a.t) ++e_at;
                            if (v_at != a.vertices || e_at != a.edges) {
                                ok = false;
                                break;
                            }
                            const auto& step = run.trace.steps[a.t];
                            if (a.pendant_edges && step.new_pendant_edges != *a.pendant_edges) {
                                ok = false;
                                break;
                            }
                            if (a.rectangles && step.new_rectangles != *a.rectangles) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) matches.push_back(cfg);
                    }
    std::sort(matches.begin(), matches.end());
    return matches;
}

std::optional<AppendixModel> appendix_model_from_string(const std::string& s) {
    if (s == "apollonian") return AppendixModel::apollonian;
    if (s == "sierpinski") return AppendixModel::sierpinski;
    return std::nullopt;
}

std::vector<DegreeClassRow> appendix_degree_table(AppendixModel model, int t) {
    if (t < 1) throw std::invalid_argument("appendix_degree_table: t must be positive");
    std::vector<DegreeClassRow> rows;
    if (model == AppendixModel::apollonian) {
        for (int r = 1; r <= t + 1; ++r)
            rows.push_back({r, 3 * pow_int(2, t - r + 1), pow_int(3, r - 1)});
    } else {
        rows.push_back({1, pow_int(3, t) + 1, BigInt(6)});
        for (int r = 2; r <= t; ++r)
            rows.push_back({r, pow_int(3, t - r + 1) + 1, 3 * pow_int(6, r - 1)});
    }
    return rows;
}

std::vector<PseudofractalClassRow> pseudofractal_vertex_classes(int t) {
    if (t < 1) throw std::invalid_argument("pseudofractal_vertex_classes: t must be positive");
    std::vector<PseudofractalClassRow> rows;
    for (int i = 0; i < t; ++i) {
        BigInt degree = pow_int(2, t - i);
        rows.push_back({pow_int(3, i), degree, degree - 1, make_rational(2, degree)});
    }
    return rows;
}

}  // namespace fibnet
