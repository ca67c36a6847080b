#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bhrank/graph.hpp"

namespace bhrank {

/// Whitespace-separated `src dst weight` lines; `#` and `%` lines are
/// comments. Node ids are arbitrary tokens and get remapped to a dense
/// 0..N-1 range in first-appearance order.
struct EdgeListFormat {
    /// Weight assumed when a line has only `src dst`.
    double default_weight = 1.0;
    /// Tokens past the weight column (e.g. timestamps) are ignored when set.
    bool allow_extra_columns = true;
    /// Reject non-integer node tokens instead of treating them as labels.
    bool require_numeric_ids = false;
};

struct LoadResult {
    WeightedDigraph graph;
    /// Original label of each node index.
    std::vector<std::string> labels;
    /// Arcs overridden by a later line for the same (src, dst); keep-last.
    std::size_t duplicates_collapsed = 0;
    /// Arcs with src == dst dropped at ingestion.
    std::size_t self_loops_dropped = 0;
};

/// Loads an edge list. A sidecar file `<path>.meta`, when present, supplies
/// the node count, the label order and the weight bounds. Explicit `bounds`
/// override the sidecar; with neither, a global scale [min(0, w_min), w_max]
/// is inferred (widened to a unit span if degenerate).
///
/// Throws ParseError (with line number) or EmptyGraph.
LoadResult load_edge_list(const std::filesystem::path& path,
                          const EdgeListFormat& format = {},
                          std::optional<WeightBounds> bounds = std::nullopt);

/// Writes the edge list plus the `<path>.meta` sidecar (node count, bounds,
/// labels). Weights are printed in shortest round-trip form. `labels` may be
/// empty, in which case node indices are used.
void write_edge_list(const std::filesystem::path& path, const WeightedDigraph& g,
                     const std::vector<std::string>& labels = {});

} // namespace bhrank
