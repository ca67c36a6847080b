#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bhrank/blackhole.hpp"
#include "bhrank/graph.hpp"
#include "bhrank/pagerank.hpp"

namespace bhrank {

/// 1-based rank of each node: higher score, smaller position. Ties break by
/// ascending node index, so positions are always a permutation of 1..N.
struct RankPositions {
    std::vector<std::uint32_t> positions;
    std::string tie_policy = "descending score, ties by ascending node index";
};

/// Pairwise rank comparison: per-node |pos_a - pos_b| and its empirical CDF,
/// evaluated at every distinct difference value.
struct RankComparison {
    std::string label;
    std::vector<std::uint32_t> abs_diffs;
    std::vector<std::pair<std::uint32_t, double>> cdf;
};

RankPositions rank_positions(std::span<const double> scores);

/// Throws LengthMismatch when a and b rank different node counts.
RankComparison compare_ranks(const RankPositions& a, const RankPositions& b,
                             std::string label);

/// Step-function value of the empirical CDF at x (fraction of diffs <= x).
double cdf_value_at(const RankComparison& c, double x);

/// q-quantile (q in [0, 1]) of the absolute differences, nearest-rank.
std::uint32_t diff_quantile(const RankComparison& c, double q);

/// One metric executed on one graph.
struct MetricRun {
    std::string name;
    std::vector<double> scores;
    RankPositions positions;
    std::size_t iterations = 0;
    bool converged = false;
    double residual = 0.0;
    std::optional<double> p_b;
    std::optional<double> wariness;
    double seconds = 0.0;
};

struct TopEntry {
    std::string label;
    double score = 0.0;
};

struct ExperimentReport {
    std::vector<MetricRun> runs;
    std::vector<RankComparison> comparisons;
    /// L-inf distance between the PageRank vectors of the base and scaled
    /// graphs, and whether it stayed under 10 * tol.
    double pr_scale_max_diff = 0.0;
    bool pr_scale_invariant = true;
    /// Emitted CDF files keep x <= trim * N; raw diffs are always complete.
    double cdf_trim_fraction = 0.2;
    /// Node labels when the source graph carries them.
    std::vector<std::string> labels;
    std::vector<TopEntry> pr_top;
    std::vector<TopEntry> bh_top;
};

/// The two-step weight-scaling pipeline: PageRank and the black-hole metric
/// on g under full_bounds, the black-hole metric again after multiplying all
/// weights by factor, and the three pairwise rank comparisons
/// (PR-BH1, PR-BH2, BH1-BH2). PageRank is checked to be scale-invariant.
ExperimentReport run_scaling_experiment(const WeightedDigraph& g, double factor,
                                        const WeightBounds& full_bounds,
                                        const PageRankConfig& cfg);

/// PageRank vs black-hole comparison on a trust-network edge list whose
/// weights live on a global [l, h] scale, plus the top-k table per metric.
ExperimentReport advogato_experiment(const std::filesystem::path& data,
                                     const PageRankConfig& cfg, double l = 0.6,
                                     double h = 1.0, std::size_t top_k = 10);

} // namespace bhrank
