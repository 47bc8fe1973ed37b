#include "fibnet/verify.hpp"

#include <algorithm>
#include <sstream>

#include "fibnet/closed_forms.hpp"
#include "fibnet/metrics.hpp"
#include "fibnet/spanning.hpp"
#include "fibnet/version.hpp"

namespace fibnet {

const char* to_string(ItemStatus s) {
    switch (s) {
        case ItemStatus::match: return "match";
        case ItemStatus::mismatch: return "mismatch";
        case ItemStatus::report_only: return "report-only";
        case ItemStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

bool DiscrepancyReport::hard_failure() const {
    return std::any_of(items.begin(), items.end(),
                       [](const ReportItem& i) { return i.status == ItemStatus::mismatch; });
}

namespace {

ReportItem numeric_item(std::string name, std::string provenance, const BigInt& predicted,
                        const BigInt& measured, bool hard) {
    ReportItem item;
    item.name = std::move(name);
    item.provenance = std::move(provenance);
    item.predicted = to_decimal(predicted);
    item.measured = to_decimal(measured);
    item.residual = to_decimal(BigInt(predicted - measured));
    item.hard = hard;
    item.status = hard ? (predicted == measured ? ItemStatus::match : ItemStatus::mismatch)
                       : ItemStatus::report_only;
    return item;
}

ReportItem rational_item(std::string name, std::string provenance, const Rational& predicted,
                         const Rational& measured, bool hard) {
    ReportItem item;
    item.name = std::move(name);
    item.provenance = std::move(provenance);
    item.predicted = to_decimal(predicted);
    item.measured = to_decimal(measured);
    item.residual = to_decimal(Rational(predicted - measured));
    item.hard = hard;
    item.status = hard ? (predicted == measured ? ItemStatus::match : ItemStatus::mismatch)
                       : ItemStatus::report_only;
    return item;
}

ReportItem info_item(std::string name, std::string provenance, std::string predicted,
                     std::string measured, ItemStatus status = ItemStatus::not_applicable) {
    ReportItem item;
    item.name = std::move(name);
    item.provenance = std::move(provenance);
    item.predicted = std::move(predicted);
    item.measured = std::move(measured);
    item.status = status;
    return item;
}

std::string spanning_value_string(const SpanningValue& v) {
    if (!v.in_domain) return "-";
    if (v.exact) return to_decimal(*v.exact);
    std::ostringstream os;
    os << "log2=" << v.log2_value;
    return os.str();
}

}  // namespace

DiscrepancyReport verify_model(int t, const RuleConfig& config, const VerifyOptions& options) {
    DiscrepancyReport report;
    report.model = "n";
    report.t = t;
    report.config_fingerprint = config.fingerprint();
    report.tool_version = kToolVersion;
    report.schema_version = kReportSchemaVersion;

    auto run = generate_n(t, config, options.resource_bound);
    const auto& g = run.graph;
    const auto& step = run.trace.steps[t];
    auto counts = predict_counts(t);
    const bool anchored = t <= 3;  // hand-count authority

    auto add = [&](ReportItem item) { report.items.push_back(std::move(item)); };

    if (options.groups & check_group::counts) {
        add(numeric_item("order", "closed-form order", counts.vertices, g.vertex_count(),
                         anchored));
        add(numeric_item("size", "closed-form size", counts.edges, g.edge_count(), anchored));

        long live_pendants = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1) ++live_pendants;
        add(numeric_item("pendant-edges", "pendant-increment formula", counts.pendant_edges,
                         step.new_pendant_edges, anchored && t >= 1));
        add(numeric_item("pendant-vertices", "pendant-increment formula", counts.pendant_edges,
                         live_pendants, anchored && t >= 1));

        if (t >= 2)
            add(numeric_item("rectangles-added", "increment-table general row",
                             counts.theta_general, step.new_rectangles, anchored));
        if (counts.theta_literal && t >= 2)
            add(numeric_item("rectangles-added-literal", "increment-table printed row",
                             *counts.theta_literal, step.new_rectangles, false));
        if (t >= 1) {
            add(numeric_item("triangles-added", "increment-table general row",
                             counts.delta_general, step.new_nonfractal_triangles, false));
            if (counts.delta_literal)
                add(numeric_item("triangles-added-literal", "increment-table printed row",
                                 *counts.delta_literal, step.new_nonfractal_triangles, false));
            auto adjusted = alpha_beta(t, true);
            auto truth = alpha_beta(t, false);
            add(numeric_item("lineage-star-edges-adjusted", "lineage-table adjusted column",
                             adjusted.alpha[t - 1], step.lineage_star_edges, false));
            add(numeric_item("lineage-star-edges", "lineage-table recurrence",
                             truth.alpha[t - 1], step.lineage_star_edges, false));
            add(numeric_item("lineage-rectangles-adjusted", "lineage-table adjusted column",
                             adjusted.beta[t - 1], step.lineage_rectangles, false));
            add(numeric_item("lineage-rectangles", "lineage-table recurrence", truth.beta[t - 1],
                             step.lineage_rectangles, false));
        }
    }

    DegreeReport degrees = degree_report(g);

    if (options.groups & check_group::degrees) {
        BigInt measured_mass = 0;
        for (const auto& [k, n] : degrees.histogram) measured_mass += BigInt(k) * n;
        add(numeric_item("degree-sum", "handshake identity", 2 * BigInt(g.edge_count()),
                         measured_mass, true));
        add(rational_item("average-degree", "average-degree formula",
                          make_rational(2 * counts.edges, counts.vertices),
                          degrees.average_degree, anchored));
        add(rational_item("average-degree-limit", "average-degree limit 56/17",
                          make_rational(56, 17), degrees.average_degree, false));

        if (t >= 3) {
            auto table = predict_degree_table(t);
            for (const auto& row : table.rows) {
                BigInt measured_count = 0;
                auto it = degrees.histogram.find(row.degree.get_si());
                if (it != degrees.histogram.end()) measured_count = it->second;
                add(numeric_item("degree-class-k" + row.degree.get_str(),
                                 "degree-table rank " + std::to_string(row.rank), row.count,
                                 measured_count, false));
            }
            add(numeric_item("degree-table-mass", "degree-table mass identity", table.degree_mass,
                             2 * counts.edges, t == 3));
            add(numeric_item("degree-table-vertex-sum", "degree-table count column",
                             table.vertex_sum, counts.vertices, false));
        } else {
            add(info_item("degree-table-mass", "degree-table mass identity", "-",
                          "defined for t >= 3"));
        }
    }

    if (options.groups & check_group::zipf) {
        auto zipf = zipf_report(g, options.zipf_lambda);
        double lo = zipf.entries.front().ratio, hi = lo;
        for (const auto& e : zipf.entries) {
            lo = std::min(lo, e.ratio);
            hi = std::max(hi, e.ratio);
        }
        std::ostringstream spread;
        spread << "min=" << lo << " max=" << hi;
        add(info_item("zipf-ratio-spread", "rank-frequency ratio", "O(1)", spread.str(),
                      ItemStatus::report_only));
        std::ostringstream slope;
        slope << zipf.slope_freq_vs_cumulative;
        add(info_item("zipf-vs-cumulative-slope", "rank-frequency vs cumulative tail", "~1",
                      slope.str(), ItemStatus::report_only));
    }

    if (options.groups & check_group::clustering) {
        auto measured = clustering_report(g);
        ReportItem range;
        range.name = "clustering-range";
        range.provenance = "clustering bounds";
        range.predicted = "(0,1)";
        range.measured = to_decimal(measured.average);
        range.hard = t >= 1;
        bool inside = sgn(measured.average) > 0 && measured.average < 1;
        range.status = t < 1 ? ItemStatus::report_only
                             : (inside ? ItemStatus::match : ItemStatus::mismatch);
        add(range);
        if (t >= 1) {
            auto predicted = predict_clustering(t);
            ReportItem avg = rational_item("clustering-average", "clustering sum formulas",
                                           predicted.average, measured.average, false);
            if (predicted.degenerate) {
                avg.status = ItemStatus::not_applicable;
                avg.predicted += " (degenerate index ranges)";
            }
            add(avg);
        }
    }

    if (options.groups & check_group::distances) {
        DistanceReport dist = t <= options.exact_distance_max_t
                                  ? distance_report_exact(g)
                                  : distance_report_sampled(g, options.sample_sources);
        add(numeric_item("diameter", "diameter linear law 2t+2", BigInt(2 * t + 2),
                         dist.diameter, t <= 1));
        if (t == 2)
            add(numeric_item("diameter-hand-value", "diameter hand value at t=2", BigInt(4),
                             dist.diameter, false));
        std::ostringstream apl;
        apl << to_decimal(dist.apl) << (dist.exact ? " (exact)" : " (sampled)");
        if (!dist.exact) apl << " sources=" << dist.sources;
        add(info_item("average-path-length", "path-length growth O(t)", "O(t)", apl.str(),
                      ItemStatus::report_only));
    }

    if (options.groups & check_group::spanning) {
        if (t <= options.spanning_max_t) {
            auto measured = count_spanning_trees(g);
            auto predicted = predict_spanning(std::max(t, 1));
            if (predicted.spanning_total.in_domain && predicted.spanning_total.exact)
                add(numeric_item("spanning-trees", "spanning-count product formula",
                                 *predicted.spanning_total.exact, measured, false));
            else
                add(info_item("spanning-trees", "spanning-count product formula",
                              spanning_value_string(predicted.spanning_total),
                              to_decimal(measured)));
        } else {
            add(info_item("spanning-trees", "spanning-count product formula", "-",
                          "skipped: t over determinant bound"));
        }
    }

    if (options.groups & check_group::mlst) {
        auto predicted = predict_spanning(std::max(t, 1));
        if (t <= options.mlst_max_t) {
            auto result = max_leaf_spanning_tree(g, options.mlst_budget);
            std::string pred = spanning_value_string(predicted.mls_leaf_count);
            if (result.exhaustive && predicted.mls_leaf_count.exact)
                add(numeric_item("mls-leaf-count", "mls leaf-count formula",
                                 *predicted.mls_leaf_count.exact, result.max_leaves, false));
            else {
                std::ostringstream meas;
                meas << (result.exhaustive ? "" : ">= ") << result.max_leaves;
                if (!result.exhaustive) meas << " (budget exhausted)";
                add(info_item("mls-leaf-count", "mls leaf-count formula", pred, meas.str()));
            }
            auto mls_count = count_mls_trees(g, options.enum_cap);
            std::string mc = mls_count ? to_decimal(*mls_count) : "cap exceeded";
            add(info_item("mls-tree-count", "mls tree-count formula",
                          spanning_value_string(predicted.mls_tree_count), mc,
                          mls_count && predicted.mls_tree_count.exact
                              ? ItemStatus::report_only
                              : ItemStatus::not_applicable));
        } else {
            add(info_item("mls-leaf-count", "mls leaf-count formula",
                          spanning_value_string(predicted.mls_leaf_count),
                          "skipped: t over search bound"));
            add(info_item("mls-tree-count", "mls tree-count formula",
                          spanning_value_string(predicted.mls_tree_count),
                          "skipped: t over enumeration bound"));
        }
    }

    return report;
}

nlohmann::ordered_json report_to_json(const DiscrepancyReport& report) {
    nlohmann::ordered_json j;
    j["format"] = "fibnet-report";
    j["schema_version"] = report.schema_version;
    j["tool_version"] = report.tool_version;
    j["model"] = report.model;
    j["t"] = report.t;
    j["config"] = report.config_fingerprint;
    j["hard_failure"] = report.hard_failure();
    auto& items = j["items"] = nlohmann::ordered_json::array();
    for (const auto& item : report.items)
        items.push_back({{"name", item.name},
                         {"provenance", item.provenance},
                         {"predicted", item.predicted},
                         {"measured", item.measured},
                         {"residual", item.residual},
                         {"status", to_string(item.status)},
                         {"hard", item.hard}});
    return j;
}

}  // namespace fibnet
