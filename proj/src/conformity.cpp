#include "deltaconf/conformity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <optional>

namespace deltaconf {

void StaticGraph::add_edge(NodeId u, NodeId v) {
    if (u == v) throw Error(ErrorCategory::Domain, "self-loop in static graph");
    if (u >= adj.size() || v >= adj.size())
        throw Error(ErrorCategory::Domain, "static graph endpoint out of range");
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
}

namespace {

LabelId require_label(const WindowView& w, NodeId v) {
    LabelId l = w.label(v);
    if (l == kNoLabel)
        throw Error(ErrorCategory::Domain, "node " + w.node_name(v) + " has no label in force");
    return l;
}

template <typename Nbrs>
double similarity_of(const Nbrs& nbrs, LabelId own, const std::vector<LabelId>& labels) {
    std::size_t same = 0;
    for (NodeId n : nbrs) {
        if (labels[n] == kNoLabel)
            throw Error(ErrorCategory::Domain, "unlabeled node " + std::to_string(n) +
                                                   " in similarity neighborhood");
        if (labels[n] == own) ++same;
    }
    if (same == 0) return 1.0;  // forced when the numerator nullifies
    return static_cast<double>(same) / static_cast<double>(nbrs.size());
}

// Distance classes d with their similarity-weighted indicator sums; the
// inner average per class is computed before the decay weighting.
template <typename DistOf, typename SimOf>
ConformityScore evaluate(NodeId u, double alpha, std::size_t num_nodes,
                         const std::vector<LabelId>& labels, DistOf&& dist_of, SimOf&& sim_of) {
    ConformityScore score;
    score.node = u;
    score.alpha = alpha;

    LabelId own = labels[u];
    if (own == kNoLabel)
        throw Error(ErrorCategory::Domain,
                    "node " + std::to_string(u) + " has no label in force");

    std::map<std::size_t, std::pair<double, std::size_t>> classes;  // d -> (sum, count)
    for (NodeId v = 0; v < num_nodes; ++v) {
        if (v == u) continue;
        auto d = dist_of(v);
        if (!d) continue;
        if (labels[v] == kNoLabel)
            throw Error(ErrorCategory::Domain,
                        "reachable node " + std::to_string(v) + " has no label in force");
        double iv = (labels[v] == own) ? 1.0 : -1.0;
        auto& [sum, count] = classes[*d];
        sum += iv * sim_of(v);
        ++count;
    }
    if (classes.empty()) return score;  // no reachable peers: invalid

    double numerator = 0.0;
    double normalizer = 0.0;
    for (const auto& [d, acc] : classes) {
        double weight = 1.0 / std::pow(static_cast<double>(d), alpha);
        numerator += (acc.first / static_cast<double>(acc.second)) * weight;
        normalizer += weight;
    }
    score.value = numerator / normalizer;
    score.valid = true;
    return score;
}

}  // namespace

double similarity(const WindowView& w, NodeId v) {
    auto nbrs = w.neighbors(v);
    if (nbrs.empty())
        throw Error(ErrorCategory::Domain,
                    "similarity undefined for isolated node " + w.node_name(v));
    return similarity_of(nbrs, require_label(w, v), w.labels());
}

int indicator(const WindowView& w, NodeId u, NodeId v) {
    return require_label(w, u) == require_label(w, v) ? 1 : -1;
}

ConformityScore conformity(const WindowView& w, NodeId u, double alpha, PathType type) {
    DistanceMap dm = distances(w, u, type, /*want_witness=*/false);
    return conformity_from_distances(w, dm, alpha);
}

ConformityScore conformity_from_distances(const WindowView& w, const DistanceMap& dm,
                                          double alpha) {
    if (alpha < 0) throw Error(ErrorCategory::Domain, "alpha must be >= 0");
    ConformityScore score;
    score.node = dm.source;
    score.alpha = alpha;
    score.window_anchor = w.anchor();
    score.path_type = dm.path_type;
    if (!dm.source_active) return score;  // absent from the window: invalid

    auto dist_of = [&](NodeId v) -> std::optional<std::size_t> {
        auto it = dm.entries.find(v);
        if (it == dm.entries.end()) return std::nullopt;
        return it->second.distance;
    };
    auto sim_of = [&](NodeId v) { return similarity(w, v); };
    ConformityScore s = evaluate(dm.source, alpha, w.num_nodes(), w.labels(), dist_of, sim_of);
    s.window_anchor = w.anchor();
    s.path_type = dm.path_type;
    return s;
}

ConformityScore static_conformity(const StaticGraph& g, NodeId u, double alpha) {
    if (alpha < 0) throw Error(ErrorCategory::Domain, "alpha must be >= 0");
    if (u >= g.adj.size()) throw Error(ErrorCategory::Domain, "unknown node in static graph");

    ConformityScore score;
    score.node = u;
    score.alpha = alpha;
    if (g.adj[u].empty()) return score;  // isolated: invalid

    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.adj.size(), unreached);
    std::deque<NodeId> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        NodeId at = queue.front();
        queue.pop_front();
        for (NodeId n : g.adj[at]) {
            if (dist[n] == unreached) {
                dist[n] = dist[at] + 1;
                queue.push_back(n);
            }
        }
    }
    auto dist_of = [&](NodeId v) -> std::optional<std::size_t> {
        if (dist[v] == unreached) return std::nullopt;
        return dist[v];
    };
    auto sim_of = [&](NodeId v) { return similarity_of(g.adj[v], g.label[v], g.label); };
    return evaluate(u, alpha, g.adj.size(), g.label, dist_of, sim_of);
}

ConformityTrend delta_conformity_trend(const StreamGraph& g, NodeId u, double alpha,
                                       Instant delta, Instant stride, PathType type) {
    if (delta < 1 || stride < 1)
        throw Error(ErrorCategory::Domain, "delta and stride must be >= 1");
    if (alpha < 0) throw Error(ErrorCategory::Domain, "alpha must be >= 0");
    ConformityTrend trend;
    trend.name = g.node_name(u);
    trend.path_type = type;
    trend.alpha = alpha;
    trend.delta = delta;
    trend.stride = stride;
    for (Instant t = g.alpha(); t + delta <= g.omega(); t += stride) {
        WindowView w = g.window(t, delta);
        ConformityScore s = conformity(w, u, alpha, type);
        trend.points.push_back({t, s.value, s.valid, 1});
    }
    return trend;
}

std::vector<ConformityScore> conformity_all(const WindowView& w, double alpha, PathType type) {
    if (alpha < 0) throw Error(ErrorCategory::Domain, "alpha must be >= 0");
    // similarity is source-independent; compute it once per window
    std::vector<double> sim(w.num_nodes(), 0.0);
    for (NodeId v : w.active_nodes()) sim[v] = similarity(w, v);

    std::vector<ConformityScore> scores;
    scores.reserve(w.active_nodes().size());
    for (NodeId u : w.active_nodes()) {
        DistanceMap dm = distances(w, u, type, /*want_witness=*/false);
        auto dist_of = [&](NodeId v) -> std::optional<std::size_t> {
            auto it = dm.entries.find(v);
            if (it == dm.entries.end()) return std::nullopt;
            return it->second.distance;
        };
        auto sim_of = [&](NodeId v) { return sim[v]; };
        ConformityScore s = evaluate(u, alpha, w.num_nodes(), w.labels(), dist_of, sim_of);
        s.window_anchor = w.anchor();
        s.path_type = type;
        scores.push_back(s);
    }
    return scores;
}

ConformityTrend group_trend(const std::vector<ConformityTrend>& members,
                            const std::string& group_name) {
    if (members.empty()) throw Error(ErrorCategory::Domain, "empty group trend");
    const ConformityTrend& first = members.front();
    for (const auto& m : members) {
        if (m.delta != first.delta || m.stride != first.stride ||
            m.points.size() != first.points.size())
            throw Error(ErrorCategory::Domain, "group members have mismatched trend anchors");
        for (std::size_t i = 0; i < m.points.size(); ++i)
            if (m.points[i].anchor != first.points[i].anchor)
                throw Error(ErrorCategory::Domain, "group members have mismatched trend anchors");
    }
    ConformityTrend trend;
    trend.name = group_name;
    trend.path_type = first.path_type;
    trend.alpha = first.alpha;
    trend.delta = first.delta;
    trend.stride = first.stride;
    for (std::size_t i = 0; i < first.points.size(); ++i) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto& m : members) {
            if (m.points[i].valid) {
                sum += m.points[i].value;
                ++n;
            }
        }
        TrendPoint p;
        p.anchor = first.points[i].anchor;
        p.group_size = n;
        if (n > 0) {
            p.value = sum / static_cast<double>(n);
            p.valid = true;
        }
        trend.points.push_back(p);
    }
    return trend;
}

}  // namespace deltaconf
