#include "bhrank/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bhrank/edge_list.hpp"
#include "bhrank/generators.hpp"

namespace bhrank {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MetricRun run_pagerank(std::string name, const WeightedDigraph& g,
                       const PageRankConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RankResult r = pagerank(g, cfg);
    MetricRun run;
    run.seconds = seconds_since(start);
    run.name = std::move(name);
    run.positions = rank_positions(r.p);
    run.scores = std::move(r.p);
    run.iterations = r.iterations;
    run.converged = r.converged;
    run.residual = r.residual;
    return run;
}

MetricRun run_blackhole(std::string name, const WeightedDigraph& g,
                        const PageRankConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    BlackHoleResult r = blackhole_metric(g, cfg);
    MetricRun run;
    run.seconds = seconds_since(start);
    run.name = std::move(name);
    run.positions = rank_positions(r.pbar);
    run.p_b = r.p_b;
    run.wariness = wariness(transform_network(g), r);
    run.scores = std::move(r.pbar);
    run.iterations = r.iterations;
    run.converged = r.converged;
    run.residual = r.residual;
    return run;
}

std::vector<TopEntry> top_entries(const MetricRun& run,
                                  const std::vector<std::string>& labels,
                                  std::size_t k) {
    std::vector<std::uint32_t> order(run.scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return run.positions.positions[a] < run.positions.positions[b];
    });
    std::vector<TopEntry> top;
    for (std::size_t i = 0; i < std::min(k, order.size()); ++i) {
        const std::uint32_t node = order[i];
        const std::string label =
            node < labels.size() ? labels[node] : std::to_string(node);
        top.push_back({label, run.scores[node]});
    }
    return top;
}

} // namespace

RankPositions rank_positions(std::span<const double> scores) {
    std::vector<std::uint32_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    RankPositions rp;
    rp.positions.resize(scores.size());
    for (std::uint32_t r = 0; r < order.size(); ++r)
        rp.positions[order[r]] = r + 1;
    return rp;
}

RankComparison compare_ranks(const RankPositions& a, const RankPositions& b,
                             std::string label) {
    if (a.positions.size() != b.positions.size()) {
        std::ostringstream msg;
        msg << "cannot compare rank vectors of size " << a.positions.size()
            << " and " << b.positions.size();
        throw LengthMismatch(msg.str());
    }
    RankComparison c;
    c.label = std::move(label);
    const std::size_t n = a.positions.size();
    c.abs_diffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pa = a.positions[i];
        const auto pb = b.positions[i];
        c.abs_diffs[i] = pa > pb ? pa - pb : pb - pa;
    }

    std::vector<std::uint32_t> sorted = c.abs_diffs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n && sorted[i + 1] == sorted[i]) continue;
        c.cdf.emplace_back(sorted[i],
                           static_cast<double>(i + 1) / static_cast<double>(n));
    }
    return c;
}

double cdf_value_at(const RankComparison& c, double x) {
    double y = 0.0;
    for (const auto& [diff, freq] : c.cdf) {
        if (static_cast<double>(diff) > x) break;
        y = freq;
    }
    return y;
}

std::uint32_t diff_quantile(const RankComparison& c, double q) {
    std::vector<std::uint32_t> sorted = c.abs_diffs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) return 0;
    const auto rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[rank == 0 ? 0 : rank - 1];
}

ExperimentReport run_scaling_experiment(const WeightedDigraph& g, double factor,
                                        const WeightBounds& full_bounds,
                                        const PageRankConfig& cfg) {
    // Step one: both metrics on the original weights, judged on the full
    // scale. Step two: the black-hole metric again after scaling; PageRank
    // is recomputed only to confirm it cannot see the difference.
    const WeightedDigraph base = with_bounds(g, full_bounds);
    const WeightedDigraph scaled = scale_weights(g, factor, full_bounds);

    ExperimentReport report;
    report.runs.push_back(run_pagerank("PR1", base, cfg));
    report.runs.push_back(run_blackhole("BH1", base, cfg));
    report.runs.push_back(run_pagerank("PR2", scaled, cfg));
    report.runs.push_back(run_blackhole("BH2", scaled, cfg));

    const MetricRun& pr1 = report.runs[0];
    const MetricRun& bh1 = report.runs[1];
    const MetricRun& pr2 = report.runs[2];
    const MetricRun& bh2 = report.runs[3];

    double max_diff = 0.0;
    for (std::size_t i = 0; i < pr1.scores.size(); ++i)
        max_diff = std::max(max_diff, std::abs(pr1.scores[i] - pr2.scores[i]));
    report.pr_scale_max_diff = max_diff;
    report.pr_scale_invariant = max_diff < 10.0 * cfg.tol;

    report.comparisons.push_back(
        compare_ranks(pr1.positions, bh1.positions, "PR-BH1"));
    report.comparisons.push_back(
        compare_ranks(pr1.positions, bh2.positions, "PR-BH2"));
    report.comparisons.push_back(
        compare_ranks(bh1.positions, bh2.positions, "BH1-BH2"));
    return report;
}

ExperimentReport advogato_experiment(const std::filesystem::path& data,
                                     const PageRankConfig& cfg, double l, double h,
                                     std::size_t top_k) {
    LoadResult loaded = load_edge_list(data, {}, WeightBounds::global(l, h));

    ExperimentReport report;
    report.labels = std::move(loaded.labels);
    report.runs.push_back(run_pagerank("PR", loaded.graph, cfg));
    report.runs.push_back(run_blackhole("BH", loaded.graph, cfg));
    report.comparisons.push_back(
        compare_ranks(report.runs[0].positions, report.runs[1].positions, "PR-BH"));
    report.pr_top = top_entries(report.runs[0], report.labels, top_k);
    report.bh_top = top_entries(report.runs[1], report.labels, top_k);
    return report;
}

} // namespace bhrank
