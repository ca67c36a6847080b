#pragma once

#include <vector>

#include "bhrank/graph.hpp"
#include "bhrank/rng.hpp"

namespace bhrank::testing {

/// Six-node trust network with two low-trust givers (1, 3), two high-trust
/// givers (2, 4) and two sinks (0, 5); weights on a global [0, 10] scale.
inline WeightedDigraph toy_network() {
    std::vector<Arc> arcs{{1, 0, 1}, {1, 2, 1}, {2, 1, 9}, {2, 5, 9},
                          {3, 0, 1}, {3, 4, 1}, {4, 3, 9}, {4, 5, 9}};
    return build_graph(6, std::move(arcs), WeightBounds::global(0.0, 10.0));
}

struct RandomGraphOptions {
    std::size_t max_nodes = 50;
    double max_arc_prob = 0.4;
    bool per_node_bounds = false;
    /// Set every arc weight to its node's upper bound.
    bool weights_at_high = false;
};

/// Arbitrary valid bounded digraph: random size, topology (sinks included)
/// and weights drawn inside the scale.
inline WeightedDigraph random_graph(Rng& rng, const RandomGraphOptions& opt = {}) {
    const std::size_t n = 1 + rng.uniform_below(opt.max_nodes);
    const double p = rng.uniform01() * opt.max_arc_prob;

    WeightBounds bounds = WeightBounds::global(0.0, 1.0);
    if (opt.per_node_bounds) {
        std::vector<std::pair<double, double>> scales(n);
        for (auto& [l, h] : scales) {
            l = rng.uniform01() * 5.0;
            h = l + 0.5 + rng.uniform01() * 10.0;
        }
        bounds = WeightBounds::per_node(std::move(scales));
    } else {
        const double l = rng.uniform01() * 5.0;
        bounds = WeightBounds::global(l, l + 0.5 + rng.uniform01() * 10.0);
    }

    std::vector<Arc> arcs;
    for (NodeId i = 0; i < n; ++i) {
        const double l = bounds.low(i), h = bounds.high(i);
        for (NodeId j = 0; j < n; ++j) {
            if (i == j || rng.uniform01() >= p) continue;
            const double w = opt.weights_at_high ? h : l + rng.uniform01() * (h - l);
            arcs.push_back({i, j, w});
        }
    }
    return build_graph(n, std::move(arcs), std::move(bounds));
}

} // namespace bhrank::testing
