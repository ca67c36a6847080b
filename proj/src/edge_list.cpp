#include "bhrank/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bhrank {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(std::move(tok));
    return out;
}

double parse_weight(const std::string& tok, std::size_t line_no) {
    double w = 0.0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc{} || ptr != last || !std::isfinite(w)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": invalid weight token '" << tok << "'";
        throw ParseError(msg.str());
    }
    return w;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

struct Sidecar {
    std::optional<std::size_t> n;
    std::optional<WeightBounds> bounds;
    std::vector<std::string> labels; // indexed
};

Sidecar read_sidecar(const std::filesystem::path& meta_path) {
    Sidecar sc;
    std::ifstream in(meta_path);
    if (!in) return sc;

    std::optional<std::pair<double, double>> global_scale;
    std::vector<std::pair<double, double>> node_scales;
    bool per_node = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& key = toks[0];
        auto bad = [&](const char* why) {
            std::ostringstream msg;
            msg << meta_path.string() << " line " << line_no << ": " << why;
            throw ParseError(msg.str());
        };
        if (key == "n") {
            if (toks.size() != 2) bad("expected 'n <count>'");
            sc.n = static_cast<std::size_t>(std::stoull(toks[1]));
        } else if (key == "bounds") {
            if (toks.size() == 4 && toks[1] == "global") {
                global_scale = {parse_weight(toks[2], line_no), parse_weight(toks[3], line_no)};
            } else if (toks.size() == 2 && toks[1] == "pernode") {
                per_node = true;
            } else {
                bad("expected 'bounds global <l> <h>' or 'bounds pernode'");
            }
        } else if (key == "scale") {
            if (toks.size() != 4) bad("expected 'scale <node> <l> <h>'");
            const auto idx = static_cast<std::size_t>(std::stoull(toks[1]));
            if (node_scales.size() <= idx) node_scales.resize(idx + 1, {0.0, 1.0});
            node_scales[idx] = {parse_weight(toks[2], line_no), parse_weight(toks[3], line_no)};
        } else if (key == "label") {
            if (toks.size() != 3) bad("expected 'label <node> <text>'");
            const auto idx = static_cast<std::size_t>(std::stoull(toks[1]));
            if (sc.labels.size() <= idx) sc.labels.resize(idx + 1);
            sc.labels[idx] = toks[2];
        }
        // Unknown keys are ignored so the format can grow.
    }
    if (per_node)
        sc.bounds = WeightBounds::per_node(std::move(node_scales));
    else if (global_scale)
        sc.bounds = WeightBounds::global(global_scale->first, global_scale->second);
    return sc;
}

} // namespace

LoadResult load_edge_list(const std::filesystem::path& path, const EdgeListFormat& format,
                          std::optional<WeightBounds> bounds) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");

    Sidecar sc = read_sidecar(path.string() + ".meta");

    LoadResult result;
    std::unordered_map<std::string, NodeId> index_of;
    std::vector<std::string> labels;
    // Sidecar labels pin the index order so isolated nodes and label->index
    // assignments survive a round trip.
    for (const auto& lab : sc.labels) {
        index_of.emplace(lab, static_cast<NodeId>(labels.size()));
        labels.push_back(lab);
    }
    auto intern = [&](const std::string& tok) -> NodeId {
        auto it = index_of.find(tok);
        if (it != index_of.end()) return it->second;
        const auto id = static_cast<NodeId>(labels.size());
        index_of.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    // keep-last duplicate policy: later lines override earlier ones.
    std::unordered_map<std::uint64_t, std::size_t> arc_slot;
    std::vector<Arc> arcs;
    double w_min = 0.0, w_max = 0.0;
    bool any_arc = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '#' || toks[0][0] == '%') continue;
        if (toks.size() < 2 || (toks.size() > 3 && !format.allow_extra_columns)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'src dst [weight]', got "
                << toks.size() << " tokens";
            throw ParseError(msg.str());
        }
        if (format.require_numeric_ids) {
            for (int t = 0; t < 2; ++t) {
                unsigned long long id = 0;
                const std::string& tok = toks[static_cast<std::size_t>(t)];
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
                if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                    std::ostringstream msg;
                    msg << "line " << line_no << ": invalid node id token '" << tok << "'";
                    throw ParseError(msg.str());
                }
            }
        }
        const NodeId src = intern(toks[0]);
        const NodeId dst = intern(toks[1]);
        const double w = toks.size() >= 3 ? parse_weight(toks[2], line_no)
                                          : format.default_weight;
        if (src == dst) {
            ++result.self_loops_dropped;
            continue;
        }
        if (!any_arc) { w_min = w_max = w; any_arc = true; }
        w_min = std::min(w_min, w);
        w_max = std::max(w_max, w);

        const std::uint64_t key = (static_cast<std::uint64_t>(src) << 32) | dst;
        auto it = arc_slot.find(key);
        if (it != arc_slot.end()) {
            arcs[it->second].weight = w;
            ++result.duplicates_collapsed;
        } else {
            arc_slot.emplace(key, arcs.size());
            arcs.push_back({src, dst, w});
        }
    }

    std::size_t n = labels.size();
    if (sc.n) n = std::max(n, *sc.n);
    if (n == 0) throw EmptyGraph("'" + path.string() + "' contains no nodes");
    while (labels.size() < n) labels.push_back(std::to_string(labels.size()));

    WeightBounds b = WeightBounds::global(0.0, 1.0);
    if (bounds) {
        b = std::move(*bounds);
    } else if (sc.bounds) {
        b = std::move(*sc.bounds);
    } else {
        double l = std::min(0.0, w_min);
        double h = w_max;
        if (!(h > l)) h = l + 1.0;
        b = WeightBounds::global(l, h);
    }

    result.graph = build_graph(n, std::move(arcs), std::move(b));
    result.labels = std::move(labels);
    return result;
}

void write_edge_list(const std::filesystem::path& path, const WeightedDigraph& g,
                     const std::vector<std::string>& labels) {
    auto label_of = [&](NodeId i) {
        return i < labels.size() ? labels[i] : std::to_string(i);
    };

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    for (const Arc& a : g.arcs())
        out << label_of(a.src) << ' ' << label_of(a.dst) << ' '
            << format_double(a.weight) << '\n';

    std::ofstream meta(path.string() + ".meta", std::ios::trunc);
    if (!meta) throw Error("cannot write '" + path.string() + ".meta'");
    meta << "n " << g.node_count() << '\n';
    const WeightBounds& b = g.bounds();
    if (b.is_global()) {
        meta << "bounds global " << format_double(b.global_low()) << ' '
             << format_double(b.global_high()) << '\n';
    } else {
        meta << "bounds pernode\n";
        for (NodeId i = 0; i < g.node_count(); ++i)
            meta << "scale " << i << ' ' << format_double(b.low(i)) << ' '
                 << format_double(b.high(i)) << '\n';
    }
    for (NodeId i = 0; i < g.node_count(); ++i)
        meta << "label " << i << ' ' << label_of(i) << '\n';
}

} // namespace bhrank
