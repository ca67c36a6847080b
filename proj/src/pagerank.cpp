#include "bhrank/pagerank.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace bhrank {

void validate_config(const PageRankConfig& cfg, std::size_t n) {
    if (!(cfg.d > 0.0 && cfg.d < 1.0)) {
        std::ostringstream msg;
        msg << "damping factor d = " << cfg.d << " must lie strictly in (0, 1)";
        throw InvalidConfig(msg.str());
    }
    if (!(cfg.tol > 0.0)) throw InvalidConfig("tolerance must be positive");
    if (cfg.max_iters == 0) throw InvalidConfig("max_iters must be at least 1");
    if (cfg.personalization) {
        const auto& v = *cfg.personalization;
        if (v.size() != n) {
            std::ostringstream msg;
            msg << "personalization vector has " << v.size()
                << " entries for a graph of " << n << " nodes";
            throw InvalidConfig(msg.str());
        }
        double sum = 0.0;
        for (double x : v) {
            if (!(x >= 0.0)) throw InvalidConfig("personalization entries must be non-negative");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw InvalidConfig("personalization vector must sum to 1");
    }
}

std::vector<double> personalization_vector(const PageRankConfig& cfg, std::size_t n) {
    if (cfg.personalization) return *cfg.personalization;
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

SparseMatrix normalize_weights(const WeightedDigraph& g) {
    const std::size_t n = g.node_count();
    std::vector<Arc> entries;
    entries.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) {
        const double strength = g.out_strength(a.src);
        if (strength <= 0.0) {
            std::ostringstream msg;
            msg << "node " << a.src << " has outgoing arcs but zero total weight;"
                << " its row cannot be normalized";
            throw ZeroOutStrength(msg.str());
        }
        entries.push_back({a.src, a.dst, a.weight / strength});
    }
    return SparseMatrix::from_triplets(n, n, entries);
}

RankResult pagerank(const WeightedDigraph& g, const PageRankConfig& cfg,
                    PowerIterationTrace* trace) {
    const std::size_t n = g.node_count();
    validate_config(cfg, n);

    const SparseMatrix link = normalize_weights(g);
    const SinkVector sinks = sink_vector(g);
    const std::vector<double> v = personalization_vector(cfg, n);
    const double d = cfg.d;

    RankResult result;
    result.p = v; // P_0 = V^T
    std::vector<double> next(n);

    for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
        double sink_mass = 0.0;
        for (NodeId i = 0; i < n; ++i)
            if (sinks.is_sink(i)) sink_mass += result.p[i];

        // M^T P = d A^T P + [d (S^T P) + (1 - d)] V^T, since T^T P = 1 for a
        // stochastic iterate.
        link.transpose_apply(result.p, next);
        const double teleport = d * sink_mass + (1.0 - d);
        double residual = 0.0;
        for (NodeId j = 0; j < n; ++j) {
            const double value = d * next[j] + teleport * v[j];
            residual += std::abs(value - result.p[j]);
            next[j] = value;
        }
        result.p.swap(next);
        result.iterations = it;
        result.residual = residual;
        if (trace)
            trace->mass.push_back(std::accumulate(result.p.begin(), result.p.end(), 0.0));
        if (residual < cfg.tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

} // namespace bhrank
