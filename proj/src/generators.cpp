#include "bhrank/generators.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "bhrank/rng.hpp"

namespace bhrank {

namespace {

void check_weight_range(std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) {
        std::ostringstream msg;
        msg << "weight range [" << lo << ", " << hi << "] must have low < high";
        throw InvalidConfig(msg.str());
    }
    if (lo < 0) throw InvalidConfig("weight range must be non-negative");
}

} // namespace

WeightedDigraph generate_er(const ErdosRenyiSpec& spec) {
    if (spec.n < 1) throw InvalidConfig("node count must be at least 1");
    check_weight_range(spec.weight_low, spec.weight_high);
    if (spec.mean_outdegree < 0) throw InvalidConfig("mean outdegree must be non-negative");

    const std::size_t n = spec.n;
    const double p =
        n > 1 ? std::min(1.0, spec.mean_outdegree / static_cast<double>(n - 1)) : 0.0;

    Rng rng(spec.seed);
    std::vector<Arc> arcs;
    auto draw_weight = [&] {
        return static_cast<double>(rng.uniform_int(spec.weight_low, spec.weight_high));
    };

    if (p >= 1.0) {
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j)
                if (i != j) arcs.push_back({i, j, draw_weight()});
    } else if (p > 0.0) {
        if (n <= spec.pair_enumeration_limit) {
            // One Bernoulli comparison per ordered pair; the draw order is
            // part of the determinism contract.
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = 0; j < n; ++j) {
                    if (i == j) continue;
                    if (rng.uniform01() < p) arcs.push_back({i, j, draw_weight()});
                }
        } else {
            // Geometric gaps over the flattened ordered-pair space: same
            // Bernoulli process, O(|E|) draws.
            const std::uint64_t total =
                static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
            const double log_q = std::log1p(-p);
            std::uint64_t pos = 0;
            while (pos < total) {
                const double u = rng.uniform01();
                const double gap = std::floor(std::log1p(-u) / log_q);
                if (!(gap < static_cast<double>(total - pos))) break;
                pos += static_cast<std::uint64_t>(gap);
                const auto i = static_cast<NodeId>(pos / (n - 1));
                const auto rem = static_cast<NodeId>(pos % (n - 1));
                const NodeId j = rem < i ? rem : rem + 1;
                arcs.push_back({i, j, draw_weight()});
                ++pos;
            }
        }
    }

    return build_graph(n, std::move(arcs),
                       WeightBounds::global(static_cast<double>(spec.weight_low),
                                            static_cast<double>(spec.weight_high)));
}

WeightedDigraph generate_scale_free(const ScaleFreeSpec& spec, ScaleFreeStats* stats) {
    if (spec.n < 2) throw InvalidConfig("scale-free target node count must be at least 2");
    check_weight_range(spec.weight_low, spec.weight_high);
    if (spec.alpha < 0 || spec.beta < 0 || spec.gamma < 0 ||
        spec.alpha > 1 || spec.beta > 1 || spec.gamma > 1)
        throw InvalidConfig("alpha, beta, gamma must lie in [0, 1]");
    if (std::abs(spec.alpha + spec.beta + spec.gamma - 1.0) > 1e-12)
        throw InvalidConfig("alpha + beta + gamma must sum to 1");
    if (spec.delta_in < 0 || spec.delta_out < 0)
        throw InvalidConfig("delta_in and delta_out must be non-negative");
    if (spec.alpha == 0.0 && spec.gamma == 0.0)
        throw SpecUnreachable("alpha and gamma are both 0: the node count can never grow");

    Rng rng(spec.seed);
    auto draw_weight = [&] {
        return static_cast<double>(rng.uniform_int(spec.weight_low, spec.weight_high));
    };

    // One entry per arc; sampling an entry uniformly selects a node
    // proportionally to its degree.
    std::vector<NodeId> arc_src;
    std::vector<NodeId> arc_dst;
    std::vector<double> arc_weight;
    std::unordered_set<std::uint64_t> seen;
    auto arc_key = [](NodeId s, NodeId t) {
        return (static_cast<std::uint64_t>(s) << 32) | t;
    };
    auto add_arc = [&](NodeId s, NodeId t) {
        arc_src.push_back(s);
        arc_dst.push_back(t);
        arc_weight.push_back(draw_weight());
        seen.insert(arc_key(s, t));
    };

    // Seed graph: two nodes, one arc 0 -> 1.
    std::size_t nodes = 2;
    add_arc(0, 1);

    auto pick_by_indegree = [&]() -> NodeId {
        const double total =
            static_cast<double>(arc_dst.size()) + spec.delta_in * static_cast<double>(nodes);
        if (rng.uniform01() * total < static_cast<double>(arc_dst.size()))
            return arc_dst[rng.uniform_below(arc_dst.size())];
        return static_cast<NodeId>(rng.uniform_below(nodes));
    };
    auto pick_by_outdegree = [&]() -> NodeId {
        const double total =
            static_cast<double>(arc_src.size()) + spec.delta_out * static_cast<double>(nodes);
        if (rng.uniform01() * total < static_cast<double>(arc_src.size()))
            return arc_src[rng.uniform_below(arc_src.size())];
        return static_cast<NodeId>(rng.uniform_below(nodes));
    };

    while (nodes < spec.n) {
        const double u = rng.uniform01();
        if (u < spec.alpha) {
            // New node with an arc to an existing one; no collision possible.
            const NodeId target = pick_by_indegree();
            const auto fresh = static_cast<NodeId>(nodes++);
            add_arc(fresh, target);
            if (stats) ++stats->alpha_steps;
        } else if (u < spec.alpha + spec.beta) {
            bool placed = false;
            for (std::size_t attempt = 0; attempt <= spec.max_resample; ++attempt) {
                const NodeId s = pick_by_outdegree();
                const NodeId t = pick_by_indegree();
                if (s == t || seen.contains(arc_key(s, t))) continue;
                add_arc(s, t);
                placed = true;
                break;
            }
            if (placed) {
                if (stats) ++stats->beta_steps;
            } else if (stats) {
                ++stats->skipped_steps;
            }
        } else {
            const NodeId source = pick_by_outdegree();
            const auto fresh = static_cast<NodeId>(nodes++);
            add_arc(source, fresh);
            if (stats) ++stats->gamma_steps;
        }
    }

    std::vector<Arc> arcs(arc_src.size());
    for (std::size_t k = 0; k < arcs.size(); ++k)
        arcs[k] = {arc_src[k], arc_dst[k], arc_weight[k]};
    return build_graph(spec.n, std::move(arcs),
                       WeightBounds::global(static_cast<double>(spec.weight_low),
                                            static_cast<double>(spec.weight_high)));
}

WeightedDigraph scale_weights(const WeightedDigraph& g, double factor,
                              WeightBounds new_bounds) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw InvalidConfig("scale factor must be positive and finite");
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    for (Arc& a : arcs) a.weight *= factor;
    return build_graph(g.node_count(), std::move(arcs), std::move(new_bounds));
}

} // namespace bhrank
