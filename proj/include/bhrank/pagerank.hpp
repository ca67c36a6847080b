#pragma once

#include <optional>
#include <vector>

#include "bhrank/graph.hpp"
#include "bhrank/sparse.hpp"

namespace bhrank {

/// Power-iteration settings shared by PageRank and the black-hole solver.
struct PageRankConfig {
    /// Damping factor, strictly inside (0, 1).
    double d = 0.85;
    /// Teleport-target distribution; empty means uniform 1/N. If set it must
    /// be non-negative and sum to 1 within 1e-12.
    std::optional<std::vector<double>> personalization;
    /// Convergence threshold on the L1 norm of successive iterates.
    double tol = 1e-10;
    std::size_t max_iters = 1000;
};

struct RankResult {
    std::vector<double> p;
    std::size_t iterations = 0;
    bool converged = false;
    /// L1 delta of the final step.
    double residual = 0.0;
};

/// Per-step records for property tests: mass after each iterate.
struct PowerIterationTrace {
    std::vector<double> mass;
};

/// Throws InvalidConfig when cfg violates its contract for a graph of n nodes.
void validate_config(const PageRankConfig& cfg, std::size_t n);

/// The personalization vector as a concrete length-n vector.
std::vector<double> personalization_vector(const PageRankConfig& cfg, std::size_t n);

/// Row-normalized link matrix: a_ij = r_ij / sum_k r_ik for non-sink rows,
/// stored column-compressed. Sink rows have no entries; their mass is
/// redistributed through the sink term during iteration. Throws
/// ZeroOutStrength for a non-sink node whose outgoing weights sum to 0.
SparseMatrix normalize_weights(const WeightedDigraph& g);

/// Weighted PageRank by sparse power iteration. The dense transition matrix
/// is never materialized; the sink and teleport terms collapse to scalars.
/// A non-converged run returns its best iterate with converged == false.
RankResult pagerank(const WeightedDigraph& g, const PageRankConfig& cfg,
                    PowerIterationTrace* trace = nullptr);

} // namespace bhrank
