#pragma once

#include <span>
#include <vector>

#include "bhrank/pagerank.hpp"

namespace bhrank {

/// The black-hole construction of a bounded graph: rescaled arc weights
/// abar_ij = (r_ij - l_i) / (out_i (h_i - l_i)), plus the per-node weight
/// absorbed by the synthetic black-hole node. For every non-sink row,
/// sum_j abar_ij + b_i == 1; sink rows are empty with b_i == 0.
struct TransformedNetwork {
    SparseMatrix abar;
    std::vector<double> b;
    SinkVector sinks;
    std::size_t n = 0;
};

struct BlackHoleResult {
    std::vector<double> pbar;
    /// Steady-state probability of the black-hole node.
    double p_b = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    double residual = 0.0;
};

/// Scalars of one iteration step, recorded before the step is applied.
struct IterationScalars {
    double s_p = 0.0; // sink mass, S^T pbar
    double b_p = 0.0; // black-hole inflow, B^T pbar
    double t_p = 0.0; // total mass, T^T pbar; equals 1 - p_b
    double p_b = 0.0;
};

struct BlackHoleTrace {
    std::vector<IterationScalars> steps;
};

/// Rescaled weight of one arc: (r - l) / (out * (h - l)).
/// Throws DegenerateScale when h <= l.
double bh_arc_weight(double r, double l, double h, std::uint32_t out);

/// Weight of the arc into the black hole: sum_j (h - r_j) / (out * (h - l)).
/// Complements the rescaled out-weights to exactly 1 in exact arithmetic.
double black_hole_weight(std::span<const double> weights, double l, double h);

/// Applies the black-hole weight transformation to every node of a bounded
/// graph. Arcs at the lower bound keep a structural (zero-valued) entry, so
/// they still count toward out_i.
TransformedNetwork transform_network(const WeightedDigraph& g);

/// Black Hole Metric by the split recurrence
///   pbar_n = d Abar^T pbar_{n-1} + [1 - d (1 - s_p - p_b)] V^T
///   p_b,n  = d B^T pbar_{n-1}
/// starting from pbar_0 = V^T, p_b,0 = 0. Cost per iteration is O(|E| + N);
/// the bordered (N+1)-node system is never materialized. Convergence is the
/// combined L1 delta over (pbar, p_b).
BlackHoleResult blackhole_metric(const WeightedDigraph& g, const PageRankConfig& cfg,
                                 BlackHoleTrace* trace = nullptr);

/// The full (N+1)x(N+1) dense transition matrix of the bordered system,
/// assembled from the transformed link matrix, the sink vector extended with
/// the 1/d black-hole entry, and the teleport/personalization vectors zeroed
/// at the black-hole slot. Every row sums to 1. Row-major, for small graphs.
std::vector<double> assemble_dense_transition(const WeightedDigraph& g,
                                              const PageRankConfig& cfg);

/// Reference solver: dense power iteration on the explicitly assembled
/// bordered transition matrix. Quadratic per step; refuses graphs larger
/// than max_nodes (TooLarge). Exists to cross-check blackhole_metric.
BlackHoleResult blackhole_metric_dense(const WeightedDigraph& g,
                                       const PageRankConfig& cfg,
                                       std::size_t max_nodes = 200);

/// Network-level wariness W = sqrt((p_b / max P) * sum_k (b_k + s_k) / N),
/// where max P runs over the combined steady state including p_b.
/// W is 0 when nothing reaches the black hole and 1 when every node feeds
/// it entirely; always in [0, 1].
double wariness(const TransformedNetwork& t, const BlackHoleResult& r);

} // namespace bhrank
