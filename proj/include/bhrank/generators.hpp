#pragma once

#include <cstdint>

#include "bhrank/graph.hpp"

namespace bhrank {

/// Directed G(n, p) with p = mean_outdegree / (n - 1); weights uniform
/// integers in [weight_low, weight_high].
struct ErdosRenyiSpec {
    std::size_t n = 0;
    double mean_outdegree = 10.0;
    std::int64_t weight_low = 0;
    std::int64_t weight_high = 49;
    std::uint64_t seed = 0;
    /// Above this node count, pair enumeration switches to geometric gap
    /// sampling (same distribution, O(|E|) time).
    std::size_t pair_enumeration_limit = 10000;
};

/// Directed preferential attachment (alpha/beta/gamma process): alpha adds a
/// node with an arc to an existing node chosen by in-degree, beta adds an arc
/// between existing nodes, gamma adds a node with an arc from an existing
/// node chosen by out-degree. delta_in/delta_out bias the degree choices.
struct ScaleFreeSpec {
    std::size_t n = 0;
    double alpha = 0.41;
    double beta = 0.54;
    double gamma = 0.05;
    double delta_in = 0.20;
    double delta_out = 0.0;
    std::int64_t weight_low = 0;
    std::int64_t weight_high = 49;
    std::uint64_t seed = 0;
    /// Attempts to re-draw endpoints that collide with an existing arc or a
    /// self-loop before the step is skipped.
    std::size_t max_resample = 50;
};

/// Per-kind step counts of one scale-free run; for process checks and
/// manifests. Starting from the 2-node seed graph with one arc,
/// arcs == 1 + alpha_steps + beta_steps + gamma_steps and
/// nodes == 2 + alpha_steps + gamma_steps.
struct ScaleFreeStats {
    std::size_t alpha_steps = 0;
    std::size_t beta_steps = 0;
    std::size_t gamma_steps = 0;
    std::size_t skipped_steps = 0;
};

/// Deterministic for a given spec + seed, across platforms.
WeightedDigraph generate_er(const ErdosRenyiSpec& spec);

/// Deterministic for a given spec + seed. Throws SpecUnreachable when
/// alpha == gamma == 0 (the node count could never grow).
WeightedDigraph generate_scale_free(const ScaleFreeSpec& spec,
                                    ScaleFreeStats* stats = nullptr);

/// r'_ij = r_ij * factor with the topology unchanged; every scaled weight
/// must lie within new_bounds.
WeightedDigraph scale_weights(const WeightedDigraph& g, double factor,
                              WeightBounds new_bounds);

} // namespace bhrank
