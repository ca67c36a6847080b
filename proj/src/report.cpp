#include "bhrank/report.hpp"

#include <fstream>

#include <json.hpp>

namespace bhrank {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out.precision(12);
    return out;
}

nlohmann::json run_json(const MetricRun& run) {
    nlohmann::json j{{"name", run.name},
                     {"iterations", run.iterations},
                     {"converged", run.converged},
                     {"residual", run.residual},
                     {"seconds", run.seconds}};
    if (run.p_b) j["p_b"] = *run.p_b;
    if (run.wariness) j["wariness"] = *run.wariness;
    return j;
}

} // namespace

void write_rank_csv(const std::filesystem::path& path, const MetricRun& run,
                    const PageRankConfig& cfg,
                    const std::vector<std::string>& labels) {
    auto out = open_out(path);
    out << "# d=" << cfg.d << ",tol=" << cfg.tol << ",iterations=" << run.iterations
        << ",converged=" << (run.converged ? 1 : 0);
    if (run.p_b) out << ",p_b=" << *run.p_b;
    if (run.wariness) out << ",wariness=" << *run.wariness;
    out << '\n';
    out << "node_label,score,rank_position\n";
    for (std::size_t i = 0; i < run.scores.size(); ++i) {
        const std::string label = i < labels.size() ? labels[i] : std::to_string(i);
        out << label << ',' << run.scores[i] << ',' << run.positions.positions[i]
            << '\n';
    }
}

void write_cdf_csv(const std::filesystem::path& path, const RankComparison& c,
                   std::size_t n, double trim_fraction) {
    auto out = open_out(path);
    const double x_max = trim_fraction * static_cast<double>(n);
    out << "diff,cum_freq\n";
    for (const auto& [diff, freq] : c.cdf) {
        if (static_cast<double>(diff) > x_max) break;
        out << diff << ',' << freq << '\n';
    }
}

void write_top_csv(const std::filesystem::path& path,
                   const std::vector<TopEntry>& pr_top,
                   const std::vector<TopEntry>& bh_top) {
    auto out = open_out(path);
    out << "rank,pr_label,pr_score,bh_label,bh_score\n";
    const std::size_t k = std::max(pr_top.size(), bh_top.size());
    for (std::size_t i = 0; i < k; ++i) {
        out << (i + 1) << ',';
        if (i < pr_top.size()) out << pr_top[i].label << ',' << pr_top[i].score;
        else out << ',';
        out << ',';
        if (i < bh_top.size()) out << bh_top[i].label << ',' << bh_top[i].score;
        else out << ',';
        out << '\n';
    }
}

void write_report(const std::filesystem::path& dir, const ExperimentReport& report,
                  const PageRankConfig& cfg, const std::string& context_json) {
    std::filesystem::create_directories(dir);

    nlohmann::json manifest;
    manifest["d"] = cfg.d;
    manifest["tol"] = cfg.tol;
    manifest["max_iters"] = cfg.max_iters;
    if (!context_json.empty())
        manifest["context"] = nlohmann::json::parse(context_json);

    for (const MetricRun& run : report.runs)
        manifest["runs"].push_back(run_json(run));

    manifest["pr_scale_max_diff"] = report.pr_scale_max_diff;
    manifest["pr_scale_invariant"] = report.pr_scale_invariant;
    manifest["cdf_trim_fraction"] = report.cdf_trim_fraction;

    const std::size_t n = report.runs.empty() ? 0 : report.runs[0].scores.size();
    for (const RankComparison& c : report.comparisons) {
        const std::string file = c.label + ".csv";
        write_cdf_csv(dir / file, c, n, report.cdf_trim_fraction);
        manifest["comparisons"].push_back(
            {{"label", c.label},
             {"file", file},
             {"max_diff", c.cdf.empty() ? 0 : c.cdf.back().first}});
    }

    if (!report.pr_top.empty() || !report.bh_top.empty()) {
        write_top_csv(dir / "top.csv", report.pr_top, report.bh_top);
        manifest["top_file"] = "top.csv";
    }

    auto out = open_out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
}

} // namespace bhrank
