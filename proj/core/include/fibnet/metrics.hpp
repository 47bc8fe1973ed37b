#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fibnet/graph.hpp"
#include "fibnet/numeric.hpp"

namespace fibnet {

/// One degree class: rank 1 holds the largest degree, ranks are contiguous.
struct DegreeClassRow {
    int rank = 0;
    BigInt degree;
    BigInt count;
};

struct DegreeReport {
    std::map<long, long> histogram;             // degree -> vertex count
    std::vector<DegreeClassRow> classes;        // sorted by decreasing degree
    Rational average_degree;                    // 2|E| / |V|
    std::vector<std::pair<long, Rational>> cumulative;  // (k, fraction with degree >= k), k ascending
};

DegreeReport degree_report(const LabeledGraph& g);

std::vector<DegreeClassRow> classes_from_histogram(const std::map<long, long>& histogram);

struct PowerlawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    int points = 0;
};

/// Least-squares slope of log P_cum(k) against log k over the degree classes.
/// For a tail law P_cum ~ k^(1-gamma) the slope estimates 1-gamma.
/// Throws std::invalid_argument with fewer than 3 distinct degrees.
PowerlawFit powerlaw_fit(std::span<const DegreeClassRow> classes);

/// Rank-frequency view of the degree structure. Entries are listed by ascending
/// degree so the cumulative frequencies are non-increasing in rank:
///   frequency(rank) = #(vertices with degree >= k_rank) / (2|E|)
///   cumulative(rank) = P_cum(k >= k_rank)
/// ratio holds frequency^lambda / cumulative as a floating value.
struct ZipfReport {
    struct Entry {
        int rank = 0;
        BigInt degree;
        Rational frequency;
        Rational cumulative;
        double ratio = 0.0;
    };
    std::vector<Entry> entries;
    double lambda = 1.0;
    double slope_freq_vs_cumulative = 0.0;  // log f ~ log P_cum
    double slope_freq_vs_degree = 0.0;      // log f ~ log k
};

/// From explicit classes the edge-mass normalizer 2|E| is taken as sum(count*degree).
ZipfReport zipf_report(std::span<const DegreeClassRow> classes, double lambda);
ZipfReport zipf_report(const LabeledGraph& g, double lambda);

struct ClusteringReport {
    std::vector<Rational> per_vertex;  // degree <= 1 vertices carry 0
    Rational average;
};

ClusteringReport clustering_report(const LabeledGraph& g);

struct DistanceReport {
    int diameter = 0;
    Rational apl;     // exact mean over unordered pairs, or the sampled estimate
    bool exact = true;
    int sources = 0;  // BFS sources used
};

/// All-sources BFS. Unweighted distances.
DistanceReport distance_report_exact(const LabeledGraph& g);

/// Deterministic sampling: one BFS from every ceil(|V|/n_sources)-th vertex id.
/// Throws std::invalid_argument when n_sources < 2.
DistanceReport distance_report_sampled(const LabeledGraph& g, int n_sources);

}  // namespace fibnet
