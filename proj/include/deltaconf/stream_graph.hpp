#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltaconf/types.hpp"

namespace deltaconf {

/// Piecewise-constant label history: ordered (start, value) entries.
/// Lookup at t yields the latest entry with start <= t, or nothing.
class LabelTimeline {
public:
    void set(Instant start, LabelId value);
    std::optional<LabelId> at(Instant t) const;
    bool empty() const { return entries_.empty(); }
    const std::vector<std::pair<Instant, LabelId>>& entries() const { return entries_; }

private:
    std::vector<std::pair<Instant, LabelId>> entries_;
};

class WindowView;

/// Feature-rich stream graph: a node set, undirected time-stamped events and
/// per-node label timelines over discrete instants [alpha, omega].
/// Mutable while being built; treated as frozen and shareable afterwards.
class StreamGraph {
public:
    NodeId add_node(const std::string& name);
    NodeId find_node(const std::string& name) const;  // kInvalidNode if absent
    const std::string& node_name(NodeId v) const;
    std::size_t num_nodes() const { return node_names_.size(); }

    LabelId intern_label(const std::string& value);
    LabelId find_label(const std::string& value) const;  // kNoLabel if absent
    const std::string& label_name(LabelId l) const;
    std::size_t num_label_values() const { return label_names_.size(); }

    void add_event(Instant t, NodeId u, NodeId v);
    void add_event(Instant t, const std::string& u, const std::string& v);
    std::size_t num_events() const { return events_.size(); }
    const std::set<Event>& events() const { return events_; }

    void set_label(NodeId v, Instant start, LabelId value);
    void set_label(const std::string& v, Instant start, const std::string& value);
    std::optional<LabelId> label_at(NodeId v, Instant t) const;
    const LabelTimeline* timeline(NodeId v) const;

    bool has_time_bounds() const { return bounds_.has_value(); }
    Instant alpha() const;
    Instant omega() const;
    /// Widens [alpha, omega] to cover the given bounds.
    void extend_bounds(Instant a, Instant o);

    /// Forward window [t, t+delta], inclusive at both ends.
    WindowView window(Instant t, Instant delta) const;

    /// Generic edge-list export: one "t,u,v" line per event, sorted.
    void write_edges(std::ostream& out, char delimiter = ',') const;

private:
    std::vector<std::string> node_names_;
    std::unordered_map<std::string, NodeId> node_index_;
    std::vector<std::string> label_names_;
    std::unordered_map<std::string, LabelId> label_index_;
    std::set<Event> events_;
    std::vector<LabelTimeline> timelines_;
    std::optional<std::pair<Instant, Instant>> bounds_;
};

/// Read-only restriction of a stream to [anchor, anchor+delta]: the temporal
/// events, their static aggregated projection, and the labels in force at the
/// anchor. Also constructible standalone (used by the rewiring null model).
class WindowView {
public:
    WindowView(Instant anchor, Instant delta, std::vector<Event> events,
               std::vector<LabelId> labels_in_force, std::size_t num_nodes,
               const std::vector<std::string>* node_names = nullptr,
               const std::vector<std::string>* label_names = nullptr);

    Instant anchor() const { return anchor_; }
    Instant delta() const { return delta_; }
    const std::vector<Event>& temporal_edges() const { return events_; }
    std::size_t num_nodes() const { return adjacency_.size(); }

    /// Aggregated first-order neighborhood of u in the window projection.
    std::span<const NodeId> neighbors(NodeId u) const;
    std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
    bool active(NodeId u) const { return u < adjacency_.size() && !adjacency_[u].empty(); }
    const std::vector<NodeId>& active_nodes() const { return active_nodes_; }
    std::size_t num_projection_edges() const { return num_projection_edges_; }

    /// Label in force at the window anchor; kNoLabel when undefined.
    LabelId label(NodeId u) const { return u < labels_.size() ? labels_[u] : kNoLabel; }
    const std::vector<LabelId>& labels() const { return labels_; }

    /// Mean projection degree over the group (or all nodes when group is
    /// kNoLabel). By default only window-active nodes count; with
    /// include_isolated every labeled node of the parent graph counts.
    /// Empty group yields nothing, never zero.
    std::optional<double> average_degree(LabelId group = kNoLabel,
                                         bool include_isolated = false) const;

    const std::string& node_name(NodeId v) const;
    const std::string& label_name(LabelId l) const;

private:
    Instant anchor_;
    Instant delta_;
    std::vector<Event> events_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<NodeId> active_nodes_;
    std::vector<LabelId> labels_;
    std::size_t num_projection_edges_ = 0;
    const std::vector<std::string>* node_names_;
    const std::vector<std::string>* label_names_;
};

}  // namespace deltaconf
