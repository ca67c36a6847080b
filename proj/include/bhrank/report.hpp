#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bhrank/experiments.hpp"

namespace bhrank {

/// Columns `node_label,score,rank_position`, preceded by a `#` header row
/// carrying the run metadata (d, tol, iterations, converged and, for the
/// black-hole metric, p_b and wariness).
void write_rank_csv(const std::filesystem::path& path, const MetricRun& run,
                    const PageRankConfig& cfg,
                    const std::vector<std::string>& labels = {});

/// Columns `diff,cum_freq`. Rows are trimmed to diff <= trim_fraction * n;
/// pass 1.0 to keep the whole curve.
void write_cdf_csv(const std::filesystem::path& path, const RankComparison& c,
                   std::size_t n, double trim_fraction);

/// Columns `rank,pr_label,pr_score,bh_label,bh_score`.
void write_top_csv(const std::filesystem::path& path,
                   const std::vector<TopEntry>& pr_top,
                   const std::vector<TopEntry>& bh_top);

/// Writes the full report into a directory: one CDF CSV per comparison, the
/// top-k table when present, and manifest.json recording the configuration,
/// the `context` block supplied by the caller (seeds, generator spec, input
/// paths) and per-run convergence, timing, p_b and wariness.
void write_report(const std::filesystem::path& dir, const ExperimentReport& report,
                  const PageRankConfig& cfg, const std::string& context_json);

} // namespace bhrank
