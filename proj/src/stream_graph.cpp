#include "deltaconf/stream_graph.hpp"

#include <algorithm>
#include <ostream>

namespace deltaconf {

const char* to_string(PathType t) {
    switch (t) {
        case PathType::Shortest: return "shortest";
        case PathType::Fastest: return "fastest";
        case PathType::Foremost: return "foremost";
    }
    return "?";
}

PathType path_type_from_string(const std::string& s) {
    if (s == "shortest") return PathType::Shortest;
    if (s == "fastest") return PathType::Fastest;
    if (s == "foremost") return PathType::Foremost;
    throw Error(ErrorCategory::Usage, "unknown path type: " + s +
                                          " (expected shortest|fastest|foremost)");
}

const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Usage: return "usage";
        case ErrorCategory::Io: return "io";
        case ErrorCategory::Parse: return "parse";
        case ErrorCategory::Domain: return "domain";
        case ErrorCategory::Limit: return "limit";
    }
    return "?";
}

void LabelTimeline::set(Instant start, LabelId value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair<Instant, LabelId>{start, 0},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != entries_.end() && it->first == start) {
        it->second = value;  // same-start overwrite
    } else {
        entries_.insert(it, {start, value});
    }
}

std::optional<LabelId> LabelTimeline::at(Instant t) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(),
                               std::pair<Instant, LabelId>{t, std::numeric_limits<LabelId>::max()},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == entries_.begin()) return std::nullopt;
    return std::prev(it)->second;
}

NodeId StreamGraph::add_node(const std::string& name) {
    auto [it, inserted] = node_index_.try_emplace(name, static_cast<NodeId>(node_names_.size()));
    if (inserted) {
        node_names_.push_back(name);
        timelines_.emplace_back();
    }
    return it->second;
}

NodeId StreamGraph::find_node(const std::string& name) const {
    auto it = node_index_.find(name);
    return it == node_index_.end() ? kInvalidNode : it->second;
}

const std::string& StreamGraph::node_name(NodeId v) const {
    if (v >= node_names_.size())
        throw Error(ErrorCategory::Domain, "unknown node id " + std::to_string(v));
    return node_names_[v];
}

LabelId StreamGraph::intern_label(const std::string& value) {
    auto [it, inserted] = label_index_.try_emplace(value, static_cast<LabelId>(label_names_.size()));
    if (inserted) label_names_.push_back(value);
    return it->second;
}

LabelId StreamGraph::find_label(const std::string& value) const {
    auto it = label_index_.find(value);
    return it == label_index_.end() ? kNoLabel : it->second;
}

const std::string& StreamGraph::label_name(LabelId l) const {
    if (l >= label_names_.size())
        throw Error(ErrorCategory::Domain, "unknown label id " + std::to_string(l));
    return label_names_[l];
}

void StreamGraph::add_event(Instant t, NodeId u, NodeId v) {
    if (u == v)
        throw Error(ErrorCategory::Domain,
                    "self-loop rejected at t=" + std::to_string(t) + " on node " + node_name(u));
    if (u >= node_names_.size() || v >= node_names_.size())
        throw Error(ErrorCategory::Domain, "event endpoint not in node set");
    if (u > v) std::swap(u, v);
    events_.insert({t, u, v});
    extend_bounds(t, t);
}

void StreamGraph::add_event(Instant t, const std::string& u, const std::string& v) {
    NodeId a = add_node(u);  // sequenced: u gets the smaller id when both are new
    NodeId b = add_node(v);
    add_event(t, a, b);
}

void StreamGraph::set_label(NodeId v, Instant start, LabelId value) {
    if (v >= timelines_.size())
        throw Error(ErrorCategory::Domain, "unknown node id " + std::to_string(v));
    timelines_[v].set(start, value);
}

void StreamGraph::set_label(const std::string& v, Instant start, const std::string& value) {
    set_label(add_node(v), start, intern_label(value));
}

std::optional<LabelId> StreamGraph::label_at(NodeId v, Instant t) const {
    if (v >= timelines_.size()) return std::nullopt;
    return timelines_[v].at(t);
}

const LabelTimeline* StreamGraph::timeline(NodeId v) const {
    return v < timelines_.size() ? &timelines_[v] : nullptr;
}

Instant StreamGraph::alpha() const {
    if (!bounds_) throw Error(ErrorCategory::Domain, "stream has no time bounds (no events)");
    return bounds_->first;
}

Instant StreamGraph::omega() const {
    if (!bounds_) throw Error(ErrorCategory::Domain, "stream has no time bounds (no events)");
    return bounds_->second;
}

void StreamGraph::extend_bounds(Instant a, Instant o) {
    if (!bounds_) {
        bounds_ = {a, o};
    } else {
        bounds_->first = std::min(bounds_->first, a);
        bounds_->second = std::max(bounds_->second, o);
    }
}

WindowView StreamGraph::window(Instant t, Instant delta) const {
    if (delta < 1) throw Error(ErrorCategory::Domain, "window length must be >= 1");
    if (t < alpha())
        throw Error(ErrorCategory::Domain, "window anchor " + std::to_string(t) +
                                               " precedes stream start " + std::to_string(alpha()));
    if (t + delta > omega())
        throw Error(ErrorCategory::Domain,
                    "window [" + std::to_string(t) + ", " + std::to_string(t + delta) +
                        "] exceeds stream end " + std::to_string(omega()));

    std::vector<Event> in_window;
    auto lo = events_.lower_bound(Event{t, 0, 0});
    for (auto it = lo; it != events_.end() && it->t <= t + delta; ++it)
        in_window.push_back(*it);

    std::vector<LabelId> labels(num_nodes(), kNoLabel);
    for (NodeId v = 0; v < num_nodes(); ++v)
        if (auto l = timelines_[v].at(t)) labels[v] = *l;

    return WindowView(t, delta, std::move(in_window), std::move(labels), num_nodes(),
                      &node_names_, &label_names_);
}

void StreamGraph::write_edges(std::ostream& out, char delimiter) const {
    for (const Event& e : events_)
        out << e.t << delimiter << node_names_[e.u] << delimiter << node_names_[e.v] << '\n';
}

WindowView::WindowView(Instant anchor, Instant delta, std::vector<Event> events,
                       std::vector<LabelId> labels_in_force, std::size_t num_nodes,
                       const std::vector<std::string>* node_names,
                       const std::vector<std::string>* label_names)
    : anchor_(anchor),
      delta_(delta),
      events_(std::move(events)),
      adjacency_(num_nodes),
      labels_(std::move(labels_in_force)),
      node_names_(node_names),
      label_names_(label_names) {
    std::sort(events_.begin(), events_.end());
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
    for (const Event& e : events_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (NodeId v = 0; v < adjacency_.size(); ++v) {
        auto& nbrs = adjacency_[v];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (!nbrs.empty()) {
            active_nodes_.push_back(v);
            num_projection_edges_ += nbrs.size();
        }
    }
    num_projection_edges_ /= 2;
}

std::span<const NodeId> WindowView::neighbors(NodeId u) const {
    if (u >= adjacency_.size())
        throw Error(ErrorCategory::Domain, "unknown node id " + std::to_string(u));
    return adjacency_[u];
}

std::optional<double> WindowView::average_degree(LabelId group, bool include_isolated) const {
    double sum = 0;
    std::size_t count = 0;
    auto consider = [&](NodeId v) {
        if (group != kNoLabel && labels_[v] != group) return;
        sum += static_cast<double>(degree(v));
        ++count;
    };
    if (include_isolated) {
        for (NodeId v = 0; v < adjacency_.size(); ++v) consider(v);
    } else {
        for (NodeId v : active_nodes_) consider(v);
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

const std::string& WindowView::node_name(NodeId v) const {
    static const std::string fallback = "?";
    if (node_names_ && v < node_names_->size()) return (*node_names_)[v];
    return fallback;
}

const std::string& WindowView::label_name(LabelId l) const {
    static const std::string fallback = "?";
    if (label_names_ && l < label_names_->size()) return (*label_names_)[l];
    return fallback;
}

}  // namespace deltaconf
