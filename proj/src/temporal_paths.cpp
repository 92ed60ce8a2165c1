#include "deltaconf/temporal_paths.hpp"

#include <algorithm>
#include <limits>

namespace deltaconf {

bool TimeRespectingPath::valid_in(const WindowView& w, NodeId source) const {
    NodeId at = source;
    Instant now = w.anchor();
    const auto& events = w.temporal_edges();
    for (const Hop& h : hops) {
        if (h.from != at || h.t < now || h.t > w.anchor() + w.delta()) return false;
        Event e{h.t, std::min(h.from, h.to), std::max(h.from, h.to)};
        if (!std::binary_search(events.begin(), events.end(), e)) return false;
        at = h.to;
        now = h.t;
    }
    return true;
}

namespace {

constexpr std::int32_t kNoParent = -1;

struct State {
    Instant dep;   // departure time; 0 when the path type ignores it
    Instant arr;   // arrival time
    std::uint32_t hops;
    std::int32_t parent;
    Hop via;
};

// a dominates b when it departs no earlier, arrives no later and uses no
// more hops. Strict domination only; equal triples are resolved by the
// lexicographic witness rule at insertion.
bool dominates(const State& a, const State& b) {
    return a.dep >= b.dep && a.arr <= b.arr && a.hops <= b.hops;
}

struct Search {
    const WindowView& w;
    NodeId source;
    bool track_dep;
    std::vector<State> arena;
    std::vector<std::vector<std::int32_t>> frontier;

    Search(const WindowView& w_, NodeId source_, bool track_dep_)
        : w(w_), source(source_), track_dep(track_dep_), frontier(w.num_nodes()) {}

    std::vector<NodeId> node_sequence(std::int32_t s) const {
        std::vector<NodeId> seq;
        for (std::int32_t i = s; i != kNoParent; i = arena[i].parent)
            seq.push_back(arena[i].via.to);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

    bool lex_less(std::int32_t a, std::int32_t b) const {
        return node_sequence(a) < node_sequence(b);
    }

    // Returns true when the frontier of `node` changed.
    bool insert(NodeId node, State cand) {
        auto& fr = frontier[node];
        for (std::int32_t idx : fr) {
            const State& s = arena[idx];
            if (s.dep == cand.dep && s.arr == cand.arr && s.hops == cand.hops) {
                // equal triple: keep the lexicographically smaller witness
                arena.push_back(cand);
                std::int32_t c = static_cast<std::int32_t>(arena.size() - 1);
                if (lex_less(c, idx)) {
                    std::replace(fr.begin(), fr.end(), idx, c);
                    return true;
                }
                arena.pop_back();
                return false;
            }
            if (dominates(s, cand)) return false;
        }
        arena.push_back(cand);
        std::int32_t c = static_cast<std::int32_t>(arena.size() - 1);
        std::erase_if(fr, [&](std::int32_t idx) { return dominates(arena[c], arena[idx]); });
        fr.push_back(c);
        return true;
    }

    void run() {
        const auto& events = w.temporal_edges();
        std::size_t gi = 0;
        while (gi < events.size()) {
            std::size_t ge = gi;
            while (ge < events.size() && events[ge].t == events[gi].t) ++ge;
            // same-instant chaining: relax the instant group to a fixpoint
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = gi; i < ge; ++i) {
                    const Event& e = events[i];
                    changed |= relax(e.u, e.v, e.t);
                    changed |= relax(e.v, e.u, e.t);
                }
            }
            gi = ge;
        }
    }

    bool relax(NodeId from, NodeId to, Instant t) {
        if (to == source) return false;  // re-entering the source never helps
        bool changed = false;
        if (from == source) {
            // fresh departure from the source at time t
            State cand{track_dep ? t : 0, t, 1, kNoParent, Hop{t, from, to}};
            changed |= insert(to, cand);
        }
        const auto& fr = frontier[from];
        for (std::size_t k = 0; k < fr.size(); ++k) {
            std::int32_t idx = fr[k];
            const State s = arena[idx];
            if (s.arr > t) continue;
            State cand{s.dep, t, s.hops + 1, idx, Hop{t, from, to}};
            changed |= insert(to, cand);
        }
        return changed;
    }
};

}  // namespace

DistanceMap distances(const WindowView& w, NodeId source, PathType type, bool want_witness) {
    if (source >= w.num_nodes())
        throw Error(ErrorCategory::Domain, "unknown source node id " + std::to_string(source));

    DistanceMap result;
    result.source = source;
    result.path_type = type;
    result.source_active = w.active(source);
    if (!result.source_active) return result;

    Search search(w, source, type == PathType::Fastest);
    search.run();

    result.entries[source] = DistanceMap::Entry{0, {}};
    for (NodeId v = 0; v < w.num_nodes(); ++v) {
        if (v == source) continue;
        const auto& fr = search.frontier[v];
        if (fr.empty()) continue;
        auto key = [&](std::int32_t idx) -> std::pair<Instant, std::uint32_t> {
            const State& s = search.arena[idx];
            switch (type) {
                case PathType::Shortest: return {static_cast<Instant>(s.hops), 0};
                case PathType::Foremost: return {s.arr, s.hops};
                case PathType::Fastest: return {s.arr - s.dep, s.hops};
            }
            return {0, 0};
        };
        auto tiebreak = [&](std::int32_t idx) -> std::pair<Instant, std::uint32_t> {
            // secondary ordering below the primary key; for shortest prefer
            // the earlier arrival among minimum-hop witnesses
            const State& s = search.arena[idx];
            if (type == PathType::Shortest) return {s.arr, 0};
            return {0, 0};
        };
        std::int32_t best = fr[0];
        for (std::size_t k = 1; k < fr.size(); ++k) {
            std::int32_t c = fr[k];
            auto kc = key(c), kb = key(best);
            if (kc < kb || (kc == kb && tiebreak(c) < tiebreak(best)) ||
                (kc == kb && tiebreak(c) == tiebreak(best) && search.lex_less(c, best)))
                best = c;
        }
        DistanceMap::Entry entry;
        entry.distance = search.arena[best].hops;
        if (want_witness) {
            for (std::int32_t i = best; i != kNoParent; i = search.arena[i].parent)
                entry.witness.hops.push_back(search.arena[i].via);
            std::reverse(entry.witness.hops.begin(), entry.witness.hops.end());
        }
        result.entries.emplace(v, std::move(entry));
    }
    return result;
}

std::vector<TimeRespectingPath> enumerate_paths(const WindowView& w, NodeId source,
                                                NodeId target, long max_hops,
                                                std::size_t path_limit) {
    if (source >= w.num_nodes() || target >= w.num_nodes())
        throw Error(ErrorCategory::Domain, "unknown node id in path enumeration");
    if (source == target) return {TimeRespectingPath{}};

    const auto& events = w.temporal_edges();
    if (max_hops <= 0) max_hops = static_cast<long>(events.size());

    std::vector<TimeRespectingPath> out;
    std::vector<bool> used(events.size(), false);
    std::vector<Hop> stack;
    std::size_t visited = 0;

    auto dfs = [&](auto&& self, NodeId at, Instant now) -> void {
        if (++visited > path_limit * 8 || out.size() > path_limit)
            throw Error(ErrorCategory::Limit,
                        "path enumeration cutoff exceeded (limit " +
                            std::to_string(path_limit) + " paths)");
        if (static_cast<long>(stack.size()) >= max_hops) return;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (used[i]) continue;
            const Event& e = events[i];
            if (e.t < now) continue;
            NodeId next;
            if (e.u == at) next = e.v;
            else if (e.v == at) next = e.u;
            else continue;
            used[i] = true;
            stack.push_back(Hop{e.t, at, next});
            if (next == target) out.push_back(TimeRespectingPath{stack});
            self(self, next, e.t);
            stack.pop_back();
            used[i] = false;
        }
    };
    dfs(dfs, source, w.anchor());
    return out;
}

}  // namespace deltaconf
