#include "bhrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bhrank {

namespace {

void check_scale(double l, double h, std::size_t node, bool per_node) {
    if (!(h > l)) {
        std::ostringstream msg;
        msg << "invalid weight bounds";
        if (per_node) msg << " for node " << node;
        msg << ": h (" << h << ") must be strictly greater than l (" << l << ")";
        throw InvalidBounds(msg.str());
    }
    if (l < 0.0) {
        std::ostringstream msg;
        msg << "invalid weight bounds";
        if (per_node) msg << " for node " << node;
        msg << ": l (" << l << ") must be non-negative";
        throw InvalidBounds(msg.str());
    }
}

} // namespace

WeightBounds WeightBounds::global(double l, double h) {
    check_scale(l, h, 0, false);
    WeightBounds b;
    b.global_ = true;
    b.l_ = l;
    b.h_ = h;
    return b;
}

WeightBounds WeightBounds::per_node(std::vector<std::pair<double, double>> scales) {
    for (std::size_t i = 0; i < scales.size(); ++i)
        check_scale(scales[i].first, scales[i].second, i, true);
    WeightBounds b;
    b.global_ = false;
    b.scales_ = std::move(scales);
    return b;
}

std::size_t SinkVector::count() const {
    std::size_t c = 0;
    for (auto f : flags) c += f;
    return c;
}

WeightedDigraph build_graph(std::size_t n, std::vector<Arc> arcs, WeightBounds bounds) {
    if (n < 1) throw InvalidConfig("node count must be at least 1");
    if (!bounds.is_global() && bounds.scale_count() != n) {
        std::ostringstream msg;
        msg << "per-node bounds list has " << bounds.scale_count()
            << " entries for a graph of " << n << " nodes";
        throw InvalidBounds(msg.str());
    }

    for (const Arc& a : arcs) {
        if (a.src >= n || a.dst >= n) {
            std::ostringstream msg;
            msg << "arc (" << a.src << " -> " << a.dst
                << ") references a node outside [0, " << n << ")";
            throw NodeIndexOutOfRange(msg.str());
        }
        if (a.src == a.dst) {
            std::ostringstream msg;
            msg << "self-loop on node " << a.src;
            throw SelfLoop(msg.str());
        }
        const double l = bounds.low(a.src);
        const double h = bounds.high(a.src);
        if (!(a.weight >= l && a.weight <= h) || !std::isfinite(a.weight)) {
            std::ostringstream msg;
            msg << "weight " << a.weight << " of arc (" << a.src << " -> "
                << a.dst << ") lies outside node " << a.src << "'s scale ["
                << l << ", " << h << "]";
            throw WeightOutOfBounds(msg.str());
        }
    }

    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return a.src != b.src ? a.src < b.src : a.dst < b.dst;
    });
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i].src == arcs[i - 1].src && arcs[i].dst == arcs[i - 1].dst) {
            std::ostringstream msg;
            msg << "duplicate arc (" << arcs[i].src << " -> " << arcs[i].dst << ")";
            throw DuplicateArc(msg.str());
        }
    }

    WeightedDigraph g;
    g.n_ = n;
    g.arcs_ = std::move(arcs);
    g.bounds_ = std::move(bounds);
    g.out_degree_.assign(n, 0);
    g.out_strength_.assign(n, 0.0);
    for (const Arc& a : g.arcs_) {
        ++g.out_degree_[a.src];
        g.out_strength_[a.src] += a.weight;
    }
    return g;
}

SinkVector sink_vector(const WeightedDigraph& g) {
    SinkVector s;
    s.flags.resize(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i)
        s.flags[i] = g.out_degree(i) == 0 ? 1 : 0;
    return s;
}

WeightedDigraph with_bounds(const WeightedDigraph& g, WeightBounds bounds) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    return build_graph(g.node_count(), std::move(arcs), std::move(bounds));
}

} // namespace bhrank
