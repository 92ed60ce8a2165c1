#pragma once

#include <unordered_map>
#include <vector>

#include "deltaconf/stream_graph.hpp"
#include "deltaconf/types.hpp"

namespace deltaconf {

/// One traversal of an event, in travel direction (from -> to).
struct Hop {
    Instant t;
    NodeId from;
    NodeId to;
    friend bool operator==(const Hop&, const Hop&) = default;
};

/// Chain of events with non-decreasing times; both a length (hop count)
/// and a duration (arrival - departure).
struct TimeRespectingPath {
    std::vector<Hop> hops;

    std::size_t length() const { return hops.size(); }
    Instant departure() const { return hops.empty() ? 0 : hops.front().t; }
    Instant arrival() const { return hops.empty() ? 0 : hops.back().t; }
    Instant duration() const { return arrival() - departure(); }

    /// Checks chaining, time-ordering and window membership by replay.
    bool valid_in(const WindowView& w, NodeId source) const;
};

/// Per-source result of a time-respecting path computation. Unreachable
/// nodes are simply absent (distance infinite).
struct DistanceMap {
    struct Entry {
        std::size_t distance = 0;
        TimeRespectingPath witness;  // empty when witnesses were not requested
    };

    NodeId source = kInvalidNode;
    PathType path_type = PathType::Shortest;
    bool source_active = false;  // false when the source has no window events
    std::unordered_map<NodeId, Entry> entries;  // includes source -> 0

    bool reachable(NodeId v) const { return entries.contains(v); }
};

/// Optimal hop distances (and witnesses) from `source` under the given path
/// typology. Shortest minimizes hop count; fastest minimizes duration;
/// foremost minimizes arrival time. For fastest/foremost the reported
/// distance is the hop count of the optimal witness, ties resolved by
/// minimal hop count then lexicographic node order. Departure is free
/// within the window.
DistanceMap distances(const WindowView& w, NodeId source, PathType type,
                      bool want_witness = true);

/// Exhaustive enumeration of all time-respecting paths source -> target with
/// at most max_hops hops and no repeated event. max_hops <= 0 defaults to
/// the number of window events. Throws on combinatorial blow-up rather than
/// truncating silently.
std::vector<TimeRespectingPath> enumerate_paths(const WindowView& w, NodeId source,
                                                NodeId target, long max_hops = 0,
                                                std::size_t path_limit = 2'000'000);

}  // namespace deltaconf
