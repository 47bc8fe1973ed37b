#pragma once

#include <optional>
#include <vector>

#include "fibnet/metrics.hpp"
#include "fibnet/numeric.hpp"

namespace fibnet {

/// tau-term generalized Fibonacci sequence: the first tau terms are seeds,
/// every later term sums the preceding tau terms.
struct FibSpec {
    int tau = 2;
    std::vector<BigInt> seeds{1, 1};
};

std::vector<BigInt> fibonacci(const FibSpec& spec, int n);

/// Lineage counter recurrences: alpha(1)=1, beta(1)=adjusted?1:0,
/// alpha(i)=sum of beta(1..i-1), beta(i)=alpha(i-1). The adjusted variant turns
/// both columns into Fibonacci-like sequences.
struct AlphaBeta {
    std::vector<BigInt> alpha, beta;  // index 0 holds t=1
};
AlphaBeta alpha_beta(int t, bool adjusted);

/// Pendant-edge increment: L(1)=4, L(t)=(4^t-4)/3 for t>=2.
BigInt pendant_edges_formula(int t);

/// Closed-form order/size with the hand-count table for t<=2, plus the
/// triangle/rectangle increments in both bookkeeping variants where the
/// incremental table conflicts with its own general row.
struct CountPrediction {
    int t = 0;
    BigInt vertices, edges, pendant_edges;
    BigInt delta_general, theta_general;          // Delta(t)=2L(t-1), Theta(t)=L(t-1)
    std::optional<BigInt> delta_literal, theta_literal;  // the printed small-t rows
    bool variant_conflict = false;
};
CountPrediction predict_counts(int t);

std::pair<BigInt, BigInt> predict_n1(int t);  // ((3^t+3)/2, 3^t), t >= 1

struct DegreeTablePrediction {
    std::vector<DegreeClassRow> rows;
    BigInt degree_mass;  // sum of degree*count; equals 2|E(3)| at t=3 only
    BigInt vertex_sum;   // sum of counts; known to overshoot |V(t)|
};
DegreeTablePrediction predict_degree_table(int t);  // t >= 3

struct ClusteringPrediction {
    Rational triangle_sum;   // clustering mass of triangle-grown vertices
    Rational rectangle_sum;  // clustering mass of rectangle-located vertices
    Rational average;        // (triangle_sum + rectangle_sum) / |V(t)|
    bool degenerate = false;  // t < 5: some index ranges are empty or negative
};
ClusteringPrediction predict_clustering(int t);

/// a_{n+1} = (p*a_n + q) / (r*a_n + s). Preconditions r != 0 and ps - qr != 0.
struct MobiusRecurrence {
    Rational p, q, r, s;
    Rational a1;
};

struct MobiusResult {
    std::optional<Rational> exact;  // set when the fixed points are rational
    double value = 0.0;
    bool repeated_root = false;
};

/// Closed-form a_n via the fixed points of the map. Throws std::invalid_argument
/// on a precondition violation, std::domain_error when a1 equals the second
/// fixed point (degenerate input) or a pole is hit.
MobiusResult solve_moebius(const MobiusRecurrence& rec, int n);

/// Direct exact iteration; throws std::domain_error when the orbit hits -s/r.
Rational iterate_moebius(const MobiusRecurrence& rec, int n);

enum class ThetaConvention { general_row, row_literal };

/// Exact or log2-valued nonnegative quantity; exact when the integer stays
/// under the bit bound and the index range is defined.
struct SpanningValue {
    std::optional<BigInt> exact;
    double log2_value = 0.0;
    bool in_domain = false;
};

struct SpanningPredictions {
    int t = 0;
    SpanningValue per_triangle_cluster;   // spanning trees per triangle cluster
    SpanningValue per_rectangle_assembly; // spanning trees per rectangle assembly
    SpanningValue spanning_total;         // t >= 3
    SpanningValue mls_leaf_count;         // t >= 3
    SpanningValue mls_tree_count;         // t >= 5 (uses spanning_total at t-2)
    ThetaConvention theta = ThetaConvention::general_row;
};
SpanningPredictions predict_spanning(int t, ThetaConvention theta = ThetaConvention::general_row,
                                     long bit_bound = 1000000);

}  // namespace fibnet
