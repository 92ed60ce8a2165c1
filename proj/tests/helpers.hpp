#pragma once

// Shared test fixtures: the five-event toy stream, random stream
// generators, and enumeration-based oracles kept independent of the
// production search in src/temporal_paths.cpp (they consume only
// enumerate_paths, the brute-force listing).

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "deltaconf/conformity.hpp"
#include "deltaconf/stream_graph.hpp"
#include "deltaconf/temporal_paths.hpp"

namespace testutil {

using namespace deltaconf;

// Events (0,A,B),(1,B,C),(2,A,C),(3,C,E),(4,A,E); blue={A,C,E}, orange={B,D}.
inline StreamGraph toy_stream() {
    StreamGraph g;
    g.add_event(0, "A", "B");
    g.add_event(1, "B", "C");
    g.add_event(2, "A", "C");
    g.add_event(3, "C", "E");
    g.add_event(4, "A", "E");
    g.add_node("D");
    for (const char* n : {"A", "C", "E"}) g.set_label(n, 0, "blue");
    for (const char* n : {"B", "D"}) g.set_label(n, 0, "orange");
    g.extend_bounds(0, 5);
    return g;
}

struct RandomStreamSpec {
    std::size_t max_nodes = 30;
    std::size_t max_events = 200;
    std::size_t max_labels = 5;
    std::size_t min_labels = 2;
    Instant max_time = 20;
};

inline StreamGraph random_stream(std::mt19937_64& rng, const RandomStreamSpec& spec) {
    std::uniform_int_distribution<std::size_t> nd(2, spec.max_nodes);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> ld(spec.min_labels, spec.max_labels);
    std::size_t labels = std::min(ld(rng), n);
    std::uniform_int_distribution<std::size_t> ed(1, spec.max_events);
    std::size_t events = ed(rng);

    StreamGraph g;
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(g.add_node("n" + std::to_string(i)));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<Instant> td(0, spec.max_time);
    for (std::size_t i = 0; i < events; ++i) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        g.add_event(td(rng), ids[a], ids[b]);
    }
    if (g.num_events() == 0) g.add_event(0, ids[0], ids[1]);
    std::uniform_int_distribution<std::size_t> lv(0, labels - 1);
    for (NodeId v : ids)
        g.set_label(v, g.alpha(), g.intern_label("L" + std::to_string(lv(rng))));
    return g;
}

// ---- enumeration-based oracles ------------------------------------------

struct OracleEntry {
    std::size_t distance;
    Instant arrival;
    Instant duration;
};

// Optimal hop distances from enumerate_paths only: the minimal length for
// shortest, the minimal-arrival witness's minimal length for foremost, the
// minimal-duration witness's minimal length for fastest.
inline std::map<NodeId, OracleEntry> oracle_distances(const WindowView& w, NodeId source,
                                                      PathType type) {
    std::map<NodeId, OracleEntry> out;
    if (!w.active(source)) return out;
    out[source] = {0, w.anchor(), 0};
    for (NodeId v = 0; v < w.num_nodes(); ++v) {
        if (v == source) continue;
        auto paths = enumerate_paths(w, source, v);
        if (paths.empty()) continue;
        OracleEntry best{};
        bool first = true;
        for (const auto& p : paths) {
            auto primary = [&](const TimeRespectingPath& q) -> long long {
                switch (type) {
                    case PathType::Shortest: return static_cast<long long>(q.length());
                    case PathType::Foremost: return q.arrival();
                    case PathType::Fastest: return q.duration();
                }
                return 0;
            };
            auto cand_key = std::pair<long long, std::size_t>{primary(p), p.length()};
            OracleEntry cand{p.length(), p.arrival(), p.duration()};
            auto best_primary = [&]() -> long long {
                switch (type) {
                    case PathType::Shortest: return static_cast<long long>(best.distance);
                    case PathType::Foremost: return best.arrival;
                    case PathType::Fastest: return best.duration;
                }
                return 0;
            };
            if (first || cand_key < std::pair<long long, std::size_t>{best_primary(), best.distance}) {
                best = cand;
                first = false;
            }
        }
        out[v] = best;
    }
    return out;
}

// Literal evaluation of the score from an oracle distance map; own
// similarity computation from the window projection.
inline std::optional<double> oracle_conformity(const WindowView& w, NodeId u, double alpha,
                                               PathType type) {
    auto dists = oracle_distances(w, u, type);
    if (dists.empty()) return std::nullopt;  // source absent

    auto similarity_literal = [&](NodeId v) {
        auto nbrs = w.neighbors(v);
        std::size_t same = 0;
        for (NodeId x : nbrs)
            if (w.label(x) == w.label(v)) ++same;
        if (same == 0) return 1.0;
        return static_cast<double>(same) / static_cast<double>(nbrs.size());
    };

    std::map<std::size_t, std::vector<NodeId>> classes;
    for (const auto& [v, entry] : dists)
        if (v != u) classes[entry.distance].push_back(v);
    if (classes.empty()) return std::nullopt;

    double numerator = 0.0, normalizer = 0.0;
    for (const auto& [d, members] : classes) {
        double inner = 0.0;
        for (NodeId v : members) {
            double iv = (w.label(v) == w.label(u)) ? 1.0 : -1.0;
            inner += iv * similarity_literal(v);
        }
        double weight = 1.0 / std::pow(static_cast<double>(d), alpha);
        numerator += (inner / static_cast<double>(members.size())) * weight;
        normalizer += weight;
    }
    return numerator / normalizer;
}

}  // namespace testutil
