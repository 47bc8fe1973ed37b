// Command-line front end: generation, measurement, prediction, verification.
// Exit codes: 0 success, 1 hard-anchor mismatch, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fibnet/closed_forms.hpp"
#include "fibnet/generator.hpp"
#include "fibnet/io.hpp"
#include "fibnet/metrics.hpp"
#include "fibnet/spanning.hpp"
#include "fibnet/verify.hpp"
#include "fibnet/version.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

fibnet::ImportedGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return fibnet::graph_from_json(ordered_json::parse(text));
    return fibnet::import_edgelist(text);
}

int run_gen(const std::string& model, int t, const std::string& config_path,
            const std::string& format, const std::string& out) {
    fibnet::RuleConfig config;
    if (!config_path.empty())
        config = fibnet::config_from_json(ordered_json::parse(read_file(config_path)));
    fibnet::GraphMeta meta;
    meta.model = model;
    meta.t = t;
    fibnet::LabeledGraph graph = [&] {
        if (model == "n1") {
            meta.config = "-";
            return fibnet::generate_n1(t);
        }
        meta.config = config.fingerprint();
        return fibnet::generate_n(t, config).graph;
    }();
    std::string payload;
    if (format == "edgelist") payload = fibnet::export_edgelist(graph, meta);
    else if (format == "dot") payload = fibnet::export_dot(graph, meta);
    else payload = fibnet::graph_to_json(graph, meta).dump(2) + "\n";
    write_output(out, payload);
    std::cerr << "generated " << model << " t=" << t << ": |V|=" << graph.vertex_count()
              << " |E|=" << graph.edge_count() << "\n";
    return 0;
}

int run_tables(const std::string& model, int t) {
    auto m = fibnet::appendix_model_from_string(model);
    if (!m) throw CLI::ValidationError("tables", "unknown model " + model);
    auto rows = fibnet::appendix_degree_table(*m, t);
    std::cout << "rank,degree,count\n";
    for (const auto& r : rows)
        std::cout << r.rank << "," << r.degree.get_str() << "," << r.count.get_str() << "\n";
    return 0;
}

int run_analyze(const std::string& in, bool exact_apl, int sample) {
    auto loaded = load_graph(in);
    const auto& g = loaded.graph;
    auto degrees = fibnet::degree_report(g);
    auto clustering = fibnet::clustering_report(g);
    auto distances = (exact_apl || sample <= 0) ? fibnet::distance_report_exact(g)
                                                : fibnet::distance_report_sampled(g, sample);
    ordered_json j;
    j["model"] = loaded.meta.model;
    j["t"] = loaded.meta.t;
    j["order"] = g.vertex_count();
    j["size"] = g.edge_count();
    j["average_degree"] = fibnet::to_decimal(degrees.average_degree);
    auto& classes = j["degree_classes"] = ordered_json::array();
    for (const auto& c : degrees.classes)
        classes.push_back({{"rank", c.rank},
                           {"degree", c.degree.get_str()},
                           {"count", c.count.get_str()}});
    j["clustering_average"] = fibnet::to_decimal(clustering.average);
    j["diameter"] = distances.diameter;
    j["apl"] = fibnet::to_decimal(distances.apl);
    j["apl_exact"] = distances.exact;
    j["apl_sources"] = distances.sources;
    auto validation = g.validate();
    j["valid"] = validation.ok();
    if (!validation.ok()) j["violations"] = validation.violations;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_predict(int t) {
    ordered_json j;
    j["t"] = t;
    auto counts = fibnet::predict_counts(t);
    j["order"] = counts.vertices.get_str();
    j["size"] = counts.edges.get_str();
    j["pendant_edges"] = counts.pendant_edges.get_str();
    j["triangles_added"] = {{"general_row", counts.delta_general.get_str()}};
    if (counts.delta_literal) j["triangles_added"]["row_literal"] = counts.delta_literal->get_str();
    j["rectangles_added"] = {{"general_row", counts.theta_general.get_str()}};
    if (counts.theta_literal)
        j["rectangles_added"]["row_literal"] = counts.theta_literal->get_str();
    j["diameter"] = 2 * t + 2;
    if (t >= 3) {
        auto table = fibnet::predict_degree_table(t);
        auto& rows = j["degree_table"] = ordered_json::array();
        for (const auto& r : table.rows)
            rows.push_back({{"rank", r.rank},
                            {"degree", r.degree.get_str()},
                            {"count", r.count.get_str()}});
        j["degree_table_mass"] = table.degree_mass.get_str();
        j["degree_table_vertex_sum"] = table.vertex_sum.get_str();
    }
    if (t >= 1) {
        auto clustering = fibnet::predict_clustering(t);
        j["clustering"] = {{"triangle_sum", fibnet::to_decimal(clustering.triangle_sum)},
                           {"rectangle_sum", fibnet::to_decimal(clustering.rectangle_sum)},
                           {"average", fibnet::to_decimal(clustering.average)},
                           {"degenerate", clustering.degenerate}};
        auto spanning = fibnet::predict_spanning(t);
        auto sv = [](const fibnet::SpanningValue& v) -> ordered_json {
            if (!v.in_domain) return nullptr;
            if (v.exact) return v.exact->get_str();
            return ordered_json{{"log2", v.log2_value}};
        };
        j["spanning"] = {{"per_triangle_cluster", sv(spanning.per_triangle_cluster)},
                         {"per_rectangle_assembly", sv(spanning.per_rectangle_assembly)},
                         {"total", sv(spanning.spanning_total)},
                         {"mls_leaf_count", sv(spanning.mls_leaf_count)},
                         {"mls_tree_count", sv(spanning.mls_tree_count)}};
        auto n1 = fibnet::predict_n1(t);
        j["pseudofractal"] = {{"order", n1.first.get_str()}, {"size", n1.second.get_str()}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_recurrence(double p, double q, double r, double s, double a1, int n) {
    auto to_rational = [](double x) {
        fibnet::Rational v(x);
        v.canonicalize();
        return v;
    };
    fibnet::MobiusRecurrence rec{to_rational(p), to_rational(q), to_rational(r), to_rational(s),
                                 to_rational(a1)};
    auto solved = fibnet::solve_moebius(rec, n);
    ordered_json j;
    j["n"] = n;
    j["closed_form"] = solved.exact ? fibnet::to_decimal(*solved.exact)
                                    : (std::ostringstream{} << solved.value).str();
    j["value"] = solved.value;
    j["repeated_root"] = solved.repeated_root;
    try {
        auto iterated = fibnet::iterate_moebius(rec, n);
        j["iterated"] = fibnet::to_decimal(iterated);
        j["agrees"] = std::abs(solved.value - iterated.get_d()) <=
                      1e-9 * std::max(1.0, std::abs(iterated.get_d()));
    } catch (const std::domain_error& e) {
        j["iterated"] = std::string("pole: ") + e.what();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_spanning(const std::string& in, long long enum_cap) {
    auto loaded = load_graph(in);
    const auto& g = loaded.graph;
    ordered_json j;
    j["order"] = g.vertex_count();
    j["size"] = g.edge_count();
    j["spanning_trees"] = fibnet::count_spanning_trees(g).get_str();
    if (enum_cap > 0) {
        auto e = fibnet::enumerate_spanning_trees(g, enum_cap);
        j["enumeration"] = e.capped ? ordered_json("cap exceeded")
                                    : ordered_json(e.count.get_str());
        if (!e.capped) {
            auto& hist = j["leaf_histogram"] = ordered_json::object();
            for (const auto& [leaves, trees] : e.leaf_histogram)
                hist[std::to_string(leaves)] = trees;
        }
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_mlst(const std::string& in, long long budget) {
    auto loaded = load_graph(in);
    auto result = fibnet::max_leaf_spanning_tree(loaded.graph, budget);
    ordered_json j;
    j["max_leaves"] = result.max_leaves;
    j["exhaustive"] = result.exhaustive;
    j["expansions"] = result.expansions;
    auto& w = j["witness"] = ordered_json::array();
    for (int e : result.witness_edges)
        w.push_back({{"u", loaded.graph.edges()[e].u}, {"v", loaded.graph.edges()[e].v}});
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_verify(int t, const std::string& config_path, const std::vector<std::string>& groups,
               const std::string& out, double lambda) {
    fibnet::RuleConfig config;
    if (!config_path.empty())
        config = fibnet::config_from_json(ordered_json::parse(read_file(config_path)));
    fibnet::VerifyOptions options;
    options.zipf_lambda = lambda;
    if (!groups.empty()) {
        options.groups = 0;
        for (const auto& name : groups) {
            if (name == "counts") options.groups |= fibnet::check_group::counts;
            else if (name == "degrees") options.groups |= fibnet::check_group::degrees;
            else if (name == "zipf") options.groups |= fibnet::check_group::zipf;
            else if (name == "clustering") options.groups |= fibnet::check_group::clustering;
            else if (name == "distances") options.groups |= fibnet::check_group::distances;
            else if (name == "spanning") options.groups |= fibnet::check_group::spanning;
            else if (name == "mlst") options.groups |= fibnet::check_group::mlst;
            else throw CLI::ValidationError("verify", "unknown group " + name);
        }
    }
    auto report = fibnet::verify_model(t, config, options);
    std::string payload = fibnet::report_to_json(report).dump(2) + "\n";
    write_output(out, payload);
    int mismatches = 0;
    for (const auto& item : report.items)
        if (item.status == fibnet::ItemStatus::mismatch) ++mismatches;
    std::cerr << "verify t=" << t << ": " << report.items.size() << " items, " << mismatches
              << " hard mismatches\n";
    return report.hard_failure() ? 1 : 0;
}

int run_calibrate(const std::string& anchors_path) {
    auto j = ordered_json::parse(read_file(anchors_path));
    std::vector<fibnet::CountAnchor> anchors;
    for (const auto& ja : j.at("anchors")) {
        fibnet::CountAnchor a;
        a.t = ja.at("t").get<int>();
        a.vertices = ja.at("vertices").get<long long>();
        a.edges = ja.at("edges").get<long long>();
        if (ja.contains("pendant_edges")) a.pendant_edges = ja["pendant_edges"].get<long long>();
        if (ja.contains("rectangles")) a.rectangles = ja["rectangles"].get<long long>();
        anchors.push_back(a);
    }
    auto matches = fibnet::calibrate_rules(anchors);
    ordered_json out;
    out["matches"] = ordered_json::array();
    for (const auto& m : matches) out["matches"].push_back(m.fingerprint());
    out["count"] = matches.size();
    if (!matches.empty()) out["first"] = fibnet::config_to_json(matches.front());
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic hybrid-growth graph workbench"};
    app.set_version_flag("--version", fibnet::kToolVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a model and write it out");
    std::string gen_model = "n", gen_config, gen_format = "edgelist", gen_out = "-";
    int gen_t = 0;
    gen->add_option("--model", gen_model)->check(CLI::IsMember({"n", "n1"}));
    gen->add_option("--t", gen_t)->required();
    gen->add_option("--config", gen_config);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "dot", "json"}));
    gen->add_option("--out", gen_out);

    // tables
    auto* tables = app.add_subcommand("tables", "print a reference-model degree table");
    std::string tables_model;
    int tables_t = 1;
    tables->add_option("--model", tables_model)
        ->required()
        ->check(CLI::IsMember({"apollonian", "sierpinski"}));
    tables->add_option("--t", tables_t)->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "measure a graph file");
    std::string analyze_in;
    bool analyze_exact = false;
    int analyze_sample = 0;
    analyze->add_option("--in", analyze_in)->required();
    auto* exact_flag = analyze->add_flag("--exact-apl", analyze_exact);
    analyze->add_option("--sample", analyze_sample)->excludes(exact_flag);

    // predict
    auto* predict = app.add_subcommand("predict", "evaluate every closed form at t");
    int predict_t = 0;
    predict->add_option("--t", predict_t)->required();

    // recurrence
    auto* recurrence = app.add_subcommand("recurrence", "solve a_{n+1}=(p a_n+q)/(r a_n+s)");
    double rp = 0, rq = 0, rr = 0, rs = 0, ra1 = 0;
    int rn = 1;
    recurrence->add_option("--p", rp)->required();
    recurrence->add_option("--q", rq)->required();
    recurrence->add_option("--r", rr)->required();
    recurrence->add_option("--s", rs)->required();
    recurrence->add_option("--a1", ra1)->required();
    recurrence->add_option("--n", rn)->required();

    // spanning
    auto* spanning = app.add_subcommand("spanning", "count spanning trees of a graph file");
    std::string spanning_in;
    long long spanning_cap = 0;
    spanning->add_option("--in", spanning_in)->required();
    spanning->add_option("--enumerate-cap", spanning_cap);

    // mlst
    auto* mlst = app.add_subcommand("mlst", "maximum-leaf spanning tree search");
    std::string mlst_in;
    long long mlst_budget = 10000000;
    mlst->add_option("--in", mlst_in)->required();
    mlst->add_option("--budget", mlst_budget);

    // verify
    auto* verify = app.add_subcommand("verify", "compare predictions against measurements");
    int verify_t = 0;
    std::string verify_config, verify_out = "-";
    std::vector<std::string> verify_groups;
    double verify_lambda = 1.0;
    verify->add_option("--t", verify_t)->required();
    verify->add_option("--config", verify_config);
    verify->add_option("--groups", verify_groups);
    verify->add_option("--lambda", verify_lambda);
    verify->add_option("--out", verify_out);

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate", "search rule configs matching anchors");
    std::string calibrate_anchors;
    calibrate->add_option("--anchors", calibrate_anchors)->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(gen_model, gen_t, gen_config, gen_format, gen_out);
        if (tables->parsed()) return run_tables(tables_model, tables_t);
        if (analyze->parsed()) return run_analyze(analyze_in, analyze_exact, analyze_sample);
        if (predict->parsed()) return run_predict(predict_t);
        if (recurrence->parsed()) return run_recurrence(rp, rq, rr, rs, ra1, rn);
        if (spanning->parsed()) return run_spanning(spanning_in, spanning_cap);
        if (mlst->parsed()) return run_mlst(mlst_in, mlst_budget);
        if (verify->parsed())
            return run_verify(verify_t, verify_config, verify_groups, verify_out, verify_lambda);
        if (calibrate->parsed()) return run_calibrate(calibrate_anchors);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
