#include "bhrank/blackhole.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bhrank {

double bh_arc_weight(double r, double l, double h, std::uint32_t out) {
    if (!(h > l)) {
        std::ostringstream msg;
        msg << "degenerate weight scale [" << l << ", " << h << "]";
        throw DegenerateScale(msg.str());
    }
    return (r - l) / (static_cast<double>(out) * (h - l));
}

double black_hole_weight(std::span<const double> weights, double l, double h) {
    if (!(h > l)) {
        std::ostringstream msg;
        msg << "degenerate weight scale [" << l << ", " << h << "]";
        throw DegenerateScale(msg.str());
    }
    const double denom = static_cast<double>(weights.size()) * (h - l);
    double sum = 0.0;
    for (double r : weights) sum += (h - r) / denom;
    return sum;
}

TransformedNetwork transform_network(const WeightedDigraph& g) {
    const std::size_t n = g.node_count();
    TransformedNetwork t;
    t.n = n;
    t.sinks = sink_vector(g);
    t.b.assign(n, 0.0);

    std::vector<Arc> entries;
    entries.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) {
        const double l = g.bounds().low(a.src);
        const double h = g.bounds().high(a.src);
        if (!(h > l)) {
            std::ostringstream msg;
            msg << "degenerate weight scale [" << l << ", " << h
                << "] for node " << a.src;
            throw DegenerateScale(msg.str());
        }
        const std::uint32_t out = g.out_degree(a.src);
        entries.push_back({a.src, a.dst, bh_arc_weight(a.weight, l, h, out)});
        t.b[a.src] += (h - a.weight) / (static_cast<double>(out) * (h - l));
    }
    t.abar = SparseMatrix::from_triplets(n, n, entries);
    return t;
}

BlackHoleResult blackhole_metric(const WeightedDigraph& g, const PageRankConfig& cfg,
                                 BlackHoleTrace* trace) {
    const std::size_t n = g.node_count();
    validate_config(cfg, n);

    const TransformedNetwork t = transform_network(g);
    const std::vector<double> v = personalization_vector(cfg, n);
    const double d = cfg.d;

    BlackHoleResult result;
    result.pbar = v; // pbar_0 = V^T, p_b,0 = 0
    result.p_b = 0.0;
    std::vector<double> next(n);

    for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
        double sink_mass = 0.0;
        double bh_inflow = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            if (t.sinks.is_sink(i)) sink_mass += result.pbar[i];
            bh_inflow += t.b[i] * result.pbar[i];
        }
        if (trace) {
            const double mass =
                std::accumulate(result.pbar.begin(), result.pbar.end(), 0.0);
            trace->steps.push_back({sink_mass, bh_inflow, mass, result.p_b});
        }

        const double teleport = 1.0 - d * (1.0 - sink_mass - result.p_b);
        t.abar.transpose_apply(result.pbar, next);
        double residual = 0.0;
        for (NodeId j = 0; j < n; ++j) {
            const double value = d * next[j] + teleport * v[j];
            residual += std::abs(value - result.pbar[j]);
            next[j] = value;
        }
        const double pb_next = d * bh_inflow;
        residual += std::abs(pb_next - result.p_b);

        result.pbar.swap(next);
        result.p_b = pb_next;
        result.iterations = it;
        result.residual = residual;
        if (residual < cfg.tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::vector<double> assemble_dense_transition(const WeightedDigraph& g,
                                              const PageRankConfig& cfg) {
    const std::size_t n = g.node_count();
    validate_config(cfg, n);
    const std::size_t m = n + 1;
    const double d = cfg.d;

    const TransformedNetwork t = transform_network(g);
    const std::vector<double> v = personalization_vector(cfg, n);

    // Bordered link matrix: abar in the top-left block, the black-hole
    // column on the right, an all-zero bottom row.
    std::vector<double> link(m * m, 0.0);
    {
        const auto dense = t.abar.to_dense();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) link[i * m + j] = dense[i * n + j];
        for (std::size_t i = 0; i < n; ++i) link[i * m + n] = t.b[i];
    }

    // Sink vector gains a 1/d entry for the black hole, which compensates
    // for its exclusion from the teleport vector and keeps its row
    // stochastic. Teleport and personalization are zero at the black hole.
    std::vector<double> sink_ext(m, 0.0);
    for (NodeId i = 0; i < n; ++i) sink_ext[i] = t.sinks.is_sink(i) ? 1.0 : 0.0;
    sink_ext[n] = 1.0 / d;
    std::vector<double> teleport_ext(m, 1.0);
    teleport_ext[n] = 0.0;
    std::vector<double> v_ext(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) v_ext[j] = v[j];

    std::vector<double> transition(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            transition[i * m + j] = d * (link[i * m + j] + sink_ext[i] * v_ext[j]) +
                                    (1.0 - d) * teleport_ext[i] * v_ext[j];
    return transition;
}

BlackHoleResult blackhole_metric_dense(const WeightedDigraph& g,
                                       const PageRankConfig& cfg,
                                       std::size_t max_nodes) {
    const std::size_t n = g.node_count();
    if (n > max_nodes) {
        std::ostringstream msg;
        msg << "graph of " << n << " nodes exceeds the dense solver bound of "
            << max_nodes;
        throw TooLarge(msg.str());
    }

    const std::vector<double> transition = assemble_dense_transition(g, cfg);
    const std::vector<double> v = personalization_vector(cfg, n);
    const std::size_t m = n + 1;

    std::vector<double> p(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) p[j] = v[j]; // P'_0 = (V^T, 0)
    std::vector<double> next(m);

    BlackHoleResult result;
    for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
        double residual = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) acc += transition[i * m + j] * p[i];
            residual += std::abs(acc - p[j]);
            next[j] = acc;
        }
        p.swap(next);
        result.iterations = it;
        result.residual = residual;
        if (residual < cfg.tol) {
            result.converged = true;
            break;
        }
    }
    result.pbar.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
    result.p_b = p[n];
    return result;
}

double wariness(const TransformedNetwork& t, const BlackHoleResult& r) {
    double max_p = r.p_b;
    for (double x : r.pbar) max_p = std::max(max_p, x);

    double unassigned = 0.0;
    for (std::size_t i = 0; i < t.n; ++i)
        unassigned += t.b[i] + (t.sinks.is_sink(static_cast<NodeId>(i)) ? 1.0 : 0.0);
    unassigned /= static_cast<double>(t.n);

    // max_p > 0 always: the combined steady state sums to 1.
    return std::sqrt((r.p_b / max_p) * unassigned);
}

} // namespace bhrank
