#include "fibnet/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fibnet {

std::string export_edgelist(const LabeledGraph& g, const GraphMeta& meta) {
    std::ostringstream os;
    os << "# model=" << meta.model << " t=" << meta.t << " config=" << meta.config << "\n";
    for (const auto& e : g.edges())
        os << e.u << " " << e.v << " " << to_string(e.orientation) << " " << e.birth_step << " "
           << to_string(e.origin) << "\n";
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    throw std::runtime_error("edgelist parse error at line " + std::to_string(line_no) + ": " +
                             why);
}

}  // namespace

ImportedGraph import_edgelist(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    int line_no = 0;
    GraphMeta meta;
    bool have_header = false;
    std::vector<EdgeRec> edges;
    int max_vertex = -1;

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string token;
            while (hs >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos) continue;
                std::string key = token.substr(0, eq), value = token.substr(eq + 1);
                if (key == "model") meta.model = value;
                else if (key == "t") {
                    try {
                        meta.t = std::stoi(value);
                    } catch (...) {
                        parse_fail(line_no, "bad t value");
                    }
                } else if (key == "config") meta.config = value;
            }
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        int u, v, birth;
        std::string orient, origin;
        if (!(ls >> u >> v >> orient >> birth >> origin))
            parse_fail(line_no, "expected '<u> <v> <orientation> <birth_step> <origin>'");
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing tokens");
        if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
        if (u >= v) parse_fail(line_no, "endpoints must satisfy u < v");
        auto o = orientation_from_string(orient);
        if (!o) parse_fail(line_no, "unknown orientation '" + orient + "'");
        auto og = origin_from_string(origin);
        if (!og) parse_fail(line_no, "unknown origin '" + origin + "'");
        EdgeRec e;
        e.u = u;
        e.v = v;
        e.orientation = *o;
        e.birth_step = birth;
        e.origin = *og;
        e.pendant = (*og == Origin::star);
        edges.push_back(e);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (!have_header) throw std::runtime_error("edgelist parse error: missing header line");
    if (edges.empty()) throw std::runtime_error("edgelist parse error: no edges");

    // vertex records from the earliest incident edge
    std::vector<VertexRec> vertices(max_vertex + 1);
    std::vector<int> best(max_vertex + 1, -1);
    for (int i = 0; i <= max_vertex; ++i) vertices[i].id = i;
    int idx = 0;
    for (const auto& e : edges) {
        for (int x : {e.u, e.v})
            if (best[x] < 0 || e.birth_step < edges[best[x]].birth_step) best[x] = idx;
        ++idx;
    }
    for (int i = 0; i <= max_vertex; ++i) {
        if (best[i] < 0) continue;  // isolated id gap; validate() will flag disconnection
        vertices[i].birth_step = edges[best[i]].birth_step;
        vertices[i].origin = edges[best[i]].origin;
    }

    auto g = LabeledGraph::from_parts(std::move(vertices), std::move(edges));
    // triangle membership is recoverable from adjacency
    std::vector<EdgeRec> fixed(g.edges().begin(), g.edges().end());
    for (auto& e : fixed) {
        e.triangle_member = false;
        for (auto nb : g.neighbors(e.u))
            if (nb.vertex != e.v && g.has_edge(nb.vertex, e.v)) {
                e.triangle_member = true;
                break;
            }
    }
    auto verts = g.vertices();
    return {LabeledGraph::from_parts(std::move(verts), std::move(fixed)), meta};
}

std::string export_dot(const LabeledGraph& g, const GraphMeta& meta) {
    std::ostringstream os;
    os << "graph \"" << meta.model << "_t" << meta.t << "\" {\n";
    for (const auto& v : g.vertices())
        os << "  " << v.id << " [birth=" << v.birth_step << ", origin=" << to_string(v.origin)
           << "];\n";
    for (const auto& e : g.edges())
        os << "  " << e.u << " -- " << e.v << " [orientation=" << to_string(e.orientation)
           << ", birth=" << e.birth_step << "];\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json graph_to_json(const LabeledGraph& g, const GraphMeta& meta) {
    nlohmann::ordered_json j;
    j["format"] = "fibnet-graph";
    j["schema_version"] = 1;
    j["model"] = meta.model;
    j["t"] = meta.t;
    j["config"] = meta.config;
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices())
        vs.push_back({{"id", v.id}, {"birth", v.birth_step}, {"origin", to_string(v.origin)}});
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        nlohmann::ordered_json je{{"u", e.u},
                                  {"v", e.v},
                                  {"orientation", to_string(e.orientation)},
                                  {"birth", e.birth_step},
                                  {"origin", to_string(e.origin)}};
        nlohmann::ordered_json roles = nlohmann::ordered_json::array();
        if (e.triangle_member) roles.push_back("triangle-member");
        if (e.rectangle_side) roles.push_back("rectangle-side");
        if (e.pendant) roles.push_back("pendant");
        je["roles"] = roles;
        es.push_back(je);
    }
    auto& rs = j["rectangles"] = nlohmann::ordered_json::array();
    for (const auto& r : g.rectangles())
        rs.push_back({{"corners", r.corners},
                      {"vertical_edges", r.vertical_edges},
                      {"aclinic_edges", r.aclinic_edges},
                      {"birth", r.birth_step},
                      {"hubbed", r.hubbed}});
    return j;
}

ImportedGraph graph_from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::runtime_error("graph json: missing vertices/edges");
    GraphMeta meta;
    meta.model = j.value("model", "custom");
    meta.t = j.value("t", 0);
    meta.config = j.value("config", "-");
    std::vector<VertexRec> vertices;
    for (const auto& jv : j["vertices"]) {
        VertexRec v;
        v.id = jv.at("id").get<int>();
        v.birth_step = jv.at("birth").get<int>();
        auto o = origin_from_string(jv.at("origin").get<std::string>());
        if (!o) throw std::runtime_error("graph json: unknown vertex origin");
        v.origin = *o;
        vertices.push_back(v);
    }
    std::vector<EdgeRec> edges;
    for (const auto& je : j["edges"]) {
        EdgeRec e;
        e.u = je.at("u").get<int>();
        e.v = je.at("v").get<int>();
        auto o = orientation_from_string(je.at("orientation").get<std::string>());
        auto og = origin_from_string(je.at("origin").get<std::string>());
        if (!o || !og) throw std::runtime_error("graph json: unknown edge label");
        e.orientation = *o;
        e.origin = *og;
        e.birth_step = je.at("birth").get<int>();
        for (const auto& role : je.value("roles", nlohmann::ordered_json::array())) {
            if (role == "triangle-member") e.triangle_member = true;
            if (role == "rectangle-side") e.rectangle_side = true;
            if (role == "pendant") e.pendant = true;
        }
        edges.push_back(e);
    }
    return {LabeledGraph::from_parts(std::move(vertices), std::move(edges)), meta};
}

nlohmann::ordered_json config_to_json(const RuleConfig& config) {
    nlohmann::ordered_json j;
    j["triangle_scope"] =
        config.triangle_scope == TriangleScope::all_triangle_edges ? "all-triangle-edges"
                                                                   : "triangle-edges-born-prev";
    switch (config.hub_scope) {
        case HubScope::rectangles_born_prev_step: j["hub_scope"] = "rectangles-born-prev"; break;
        case HubScope::rectangles_born_in_step: j["hub_scope"] = "rectangles-born-in-step"; break;
        case HubScope::none: j["hub_scope"] = "none"; break;
    }
    auto flags = nlohmann::ordered_json::array();
    if (config.star_scope & star_flag::seed_aclinic_always) flags.push_back("seed-aclinic-always");
    if (config.star_scope & star_flag::aclinic_of_rects_born_in_step)
        flags.push_back("aclinic-of-rectangles-born-in-step");
    if (config.star_scope & star_flag::aclinic_of_rects_born_prev_step)
        flags.push_back("aclinic-of-rectangles-born-prev");
    if (config.star_scope & star_flag::all_old_rectangle_aclinic)
        flags.push_back("all-old-rectangle-aclinic");
    j["star_scope"] = flags;
    j["rect_scope"] = config.rect_scope == RectScope::pendants_born_prev_step
                          ? "pendants-born-prev"
                          : "all-pendants";
    j["step2_exception"] = config.step2_exception;
    return j;
}

RuleConfig config_from_json(const nlohmann::ordered_json& j) {
    RuleConfig c;
    std::string tri = j.at("triangle_scope").get<std::string>();
    if (tri == "all-triangle-edges") c.triangle_scope = TriangleScope::all_triangle_edges;
    else if (tri == "triangle-edges-born-prev")
        c.triangle_scope = TriangleScope::triangle_edges_born_prev_step;
    else throw std::runtime_error("config json: unknown triangle_scope");

    std::string hub = j.at("hub_scope").get<std::string>();
    if (hub == "rectangles-born-prev") c.hub_scope = HubScope::rectangles_born_prev_step;
    else if (hub == "rectangles-born-in-step") c.hub_scope = HubScope::rectangles_born_in_step;
    else if (hub == "none") c.hub_scope = HubScope::none;
    else throw std::runtime_error("config json: unknown hub_scope");

    c.star_scope = 0;
    for (const auto& f : j.at("star_scope")) {
        std::string name = f.get<std::string>();
        if (name == "seed-aclinic-always") c.star_scope |= star_flag::seed_aclinic_always;
        else if (name == "aclinic-of-rectangles-born-in-step")
            c.star_scope |= star_flag::aclinic_of_rects_born_in_step;
        else if (name == "aclinic-of-rectangles-born-prev")
            c.star_scope |= star_flag::aclinic_of_rects_born_prev_step;
        else if (name == "all-old-rectangle-aclinic")
            c.star_scope |= star_flag::all_old_rectangle_aclinic;
        else throw std::runtime_error("config json: unknown star flag");
    }

    std::string rect = j.at("rect_scope").get<std::string>();
    if (rect == "pendants-born-prev") c.rect_scope = RectScope::pendants_born_prev_step;
    else if (rect == "all-pendants") c.rect_scope = RectScope::all_pendants;
    else throw std::runtime_error("config json: unknown rect_scope");

    c.step2_exception = j.at("step2_exception").get<bool>();
    if (!c.valid()) throw std::runtime_error("config json: empty star scope");
    return c;
}

}  // namespace fibnet
