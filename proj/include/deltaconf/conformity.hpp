#pragma once

#include <string>
#include <vector>

#include "deltaconf/stream_graph.hpp"
#include "deltaconf/temporal_paths.hpp"
#include "deltaconf/types.hpp"

namespace deltaconf {

/// Multi-scale homophily score of one node in one window. Invalid when the
/// node reaches no peers there; an invalid score carries no numeric value.
struct ConformityScore {
    NodeId node = kInvalidNode;
    Instant window_anchor = 0;
    double alpha = 2.0;
    PathType path_type = PathType::Shortest;
    double value = 0.0;
    bool valid = false;
};

struct TrendPoint {
    Instant anchor;
    double value = 0.0;
    bool valid = false;
    std::size_t group_size = 1;  // valid members contributing (1 for node trends)
};

/// Sliding-window score series for one node or one group.
struct ConformityTrend {
    std::string name;
    PathType path_type = PathType::Shortest;
    double alpha = 2.0;
    Instant delta = 1;
    Instant stride = 1;
    std::vector<TrendPoint> points;
};

/// Simple undirected node-attributed graph, for the static variant.
struct StaticGraph {
    std::vector<std::vector<NodeId>> adj;
    std::vector<LabelId> label;

    explicit StaticGraph(std::size_t n) : adj(n), label(n, kNoLabel) {}
    void add_edge(NodeId u, NodeId v);
};

/// Fraction of v's window neighbors sharing v's in-force label, forced to 1
/// when no neighbor shares it. Errors if v is isolated or unlabeled.
double similarity(const WindowView& w, NodeId v);

/// +1 when the two in-force labels agree, -1 otherwise.
int indicator(const WindowView& w, NodeId u, NodeId v);

/// Distance-decayed homophily score of u over the window, using
/// time-respecting distances of the given typology.
ConformityScore conformity(const WindowView& w, NodeId u, double alpha, PathType type);

/// Same score computed from an already-available distance map (the map's
/// path type and source are taken as authoritative).
ConformityScore conformity_from_distances(const WindowView& w, const DistanceMap& dm,
                                          double alpha);

/// Static variant: geodesic distances on a plain node-attributed graph.
ConformityScore static_conformity(const StaticGraph& g, NodeId u, double alpha);

/// Per-anchor score series for one node over forward windows [t, t+delta],
/// anchors t = alpha, alpha+stride, ... while t+delta <= omega. Windows where
/// the node is absent yield invalid points, preserved in the series.
ConformityTrend delta_conformity_trend(const StreamGraph& g, NodeId u, double alpha,
                                       Instant delta, Instant stride, PathType type);

/// Scores of every window-active node, ordered by node id.
std::vector<ConformityScore> conformity_all(const WindowView& w, double alpha, PathType type);

/// Anchor-wise mean over valid member points; invalid where no member is
/// valid. All members must share delta, stride and anchors.
ConformityTrend group_trend(const std::vector<ConformityTrend>& members,
                            const std::string& group_name);

}  // namespace deltaconf
