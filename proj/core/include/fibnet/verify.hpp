#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fibnet/generator.hpp"

namespace fibnet {

namespace check_group {
inline constexpr unsigned counts = 1u;
inline constexpr unsigned degrees = 2u;
inline constexpr unsigned zipf = 4u;
inline constexpr unsigned clustering = 8u;
inline constexpr unsigned distances = 16u;
inline constexpr unsigned spanning = 32u;
inline constexpr unsigned mlst = 64u;
inline constexpr unsigned all = 127u;
}  // namespace check_group

struct VerifyOptions {
    unsigned groups = check_group::all;
    double zipf_lambda = 1.0;
    int exact_distance_max_t = 5;  // sampled beyond
    int sample_sources = 16;
    int spanning_max_t = 3;        // Kirchhoff determinant bound
    int mlst_max_t = 3;            // branch-and-bound attempted up to here
    long long mlst_budget = 200000;
    long long enum_cap = 20000;
    int resource_bound = 8;
};

enum class ItemStatus { match, mismatch, report_only, not_applicable };
const char* to_string(ItemStatus s);

/// One comparable quantity. Hard items carry anchor authority: a hard mismatch
/// fails the run. Report-only items document where predictions and graph-side
/// measurements disagree without failing anything.
struct ReportItem {
    std::string name;
    std::string provenance;  // which formula/table produced the prediction
    std::string predicted;   // "-" when no prediction applies
    std::string measured;
    std::string residual;    // predicted - measured where both sides are numeric
    ItemStatus status = ItemStatus::report_only;
    bool hard = false;
};

struct DiscrepancyReport {
    std::string model = "n";
    int t = 0;
    std::string config_fingerprint;
    std::string tool_version;
    int schema_version = 0;
    std::vector<ReportItem> items;

    bool hard_failure() const;
};

/// Generates N(t), measures it, evaluates every prediction, and emits one item
/// per comparable quantity. Groups whose resource bounds exclude the requested
/// t are marked not-applicable; the run always completes.
DiscrepancyReport verify_model(int t, const RuleConfig& config = RuleConfig{},
                               const VerifyOptions& options = VerifyOptions{});

nlohmann::ordered_json report_to_json(const DiscrepancyReport& report);

}  // namespace fibnet
