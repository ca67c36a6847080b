#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bhrank/errors.hpp"

namespace bhrank {

using NodeId = std::uint32_t;

struct Arc {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 0.0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Per-node or global weight scale [l, h]. Every node's scale must satisfy
/// h > l strictly and l >= 0.
class WeightBounds {
public:
    static WeightBounds global(double l, double h);
    static WeightBounds per_node(std::vector<std::pair<double, double>> scales);

    bool is_global() const { return global_; }
    double low(NodeId i) const { return global_ ? l_ : scales_[i].first; }
    double high(NodeId i) const { return global_ ? h_ : scales_[i].second; }

    /// Global l (only valid when is_global()).
    double global_low() const { return l_; }
    double global_high() const { return h_; }

    /// Number of per-node scales; 0 for a global scale.
    std::size_t scale_count() const { return scales_.size(); }

    friend bool operator==(const WeightBounds&, const WeightBounds&) = default;

private:
    WeightBounds() = default;

    bool global_ = true;
    double l_ = 0.0;
    double h_ = 1.0;
    std::vector<std::pair<double, double>> scales_;
};

/// Flags marking nodes with zero outdegree.
struct SinkVector {
    std::vector<std::uint8_t> flags;

    bool is_sink(NodeId i) const { return flags[i] != 0; }
    std::size_t count() const;
};

/// Immutable weighted directed graph. Arcs are validated and canonically
/// sorted (by src, then dst) at construction; safe for concurrent reads.
class WeightedDigraph {
public:
    /// Empty placeholder; every populated instance comes from build_graph.
    WeightedDigraph() = default;

    std::size_t node_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    std::span<const Arc> arcs() const { return arcs_; }
    const WeightBounds& bounds() const { return bounds_; }

    std::uint32_t out_degree(NodeId i) const { return out_degree_[i]; }

    /// Sum of raw outgoing weights of node i.
    double out_strength(NodeId i) const { return out_strength_[i]; }

    friend WeightedDigraph build_graph(std::size_t n, std::vector<Arc> arcs,
                                       WeightBounds bounds);

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    WeightBounds bounds_ = WeightBounds::global(0.0, 1.0);
    std::vector<std::uint32_t> out_degree_;
    std::vector<double> out_strength_;
};

/// Validates and builds a graph. Throws NodeIndexOutOfRange, SelfLoop,
/// DuplicateArc, WeightOutOfBounds or InvalidBounds.
WeightedDigraph build_graph(std::size_t n, std::vector<Arc> arcs,
                            WeightBounds bounds);

/// s_i = 1 exactly when node i has zero outdegree.
SinkVector sink_vector(const WeightedDigraph& g);

/// Same topology and weights under a different scale; every weight must fit
/// the new bounds.
WeightedDigraph with_bounds(const WeightedDigraph& g, WeightBounds bounds);

} // namespace bhrank
