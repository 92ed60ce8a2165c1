#include "deltaconf/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace deltaconf {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t anchor, std::uint64_t sample) {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(seed) ^ anchor) ^ sample);
}

namespace {

// Bounded uniform via rejection; avoids std::uniform_int_distribution whose
// output sequence is implementation-defined.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

WindowView rewire(const WindowView& w, std::uint64_t seed, std::size_t swaps_per_edge) {
    if (w.num_projection_edges() < 2)
        throw Error(ErrorCategory::Domain, "rewiring needs at least 2 projection edges");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(w.num_projection_edges());
    for (NodeId v : w.active_nodes())
        for (NodeId n : w.neighbors(v))
            if (v < n) edges.push_back({v, n});
    std::set<std::pair<NodeId, NodeId>> present(edges.begin(), edges.end());

    // double-edge swaps: pick two edges, exchange endpoints, skip any swap
    // that would create a self-loop or a duplicate edge
    std::mt19937_64 rng(seed);
    std::size_t attempts = swaps_per_edge * edges.size();
    for (std::size_t k = 0; k < attempts; ++k) {
        std::size_t i = uniform_below(rng, edges.size());
        std::size_t j = uniform_below(rng, edges.size());
        if (i == j) continue;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (uniform_below(rng, 2) == 1) std::swap(c, d);
        NodeId p1 = std::min(a, d), q1 = std::max(a, d);
        NodeId p2 = std::min(c, b), q2 = std::max(c, b);
        if (p1 == q1 || p2 == q2) continue;
        std::pair<NodeId, NodeId> e1{p1, q1}, e2{p2, q2};
        if (e1 == e2 || present.contains(e1) || present.contains(e2)) continue;
        present.erase(edges[i]);
        present.erase(edges[j]);
        present.insert(e1);
        present.insert(e2);
        edges[i] = e1;
        edges[j] = e2;
    }

    std::vector<Event> events;
    events.reserve(present.size());
    for (const auto& [a, b] : present) events.push_back({w.anchor(), a, b});
    return WindowView(w.anchor(), w.delta(), std::move(events),
                      std::vector<LabelId>(w.labels()), w.num_nodes());
}

double group_mean_conformity(const WindowView& w, LabelId group, double alpha, PathType type,
                             std::size_t& out_valid, std::size_t& out_present) {
    out_valid = 0;
    out_present = 0;
    double sum = 0.0;
    for (NodeId u : w.active_nodes()) {
        if (w.label(u) != group) continue;
        ++out_present;
        ConformityScore s = conformity(w, u, alpha, type);
        if (s.valid) {
            sum += s.value;
            ++out_valid;
        }
    }
    return out_valid > 0 ? sum / static_cast<double>(out_valid) : 0.0;
}

std::vector<NullEnsembleStats> z_score_trend(const StreamGraph& g, LabelId group, double alpha,
                                             Instant delta, Instant stride, PathType type,
                                             std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw Error(ErrorCategory::Domain, "need at least 2 null samples");
    if (delta < 1 || stride < 1)
        throw Error(ErrorCategory::Domain, "delta and stride must be >= 1");

    std::vector<NullEnsembleStats> out;
    for (Instant t = g.alpha(); t + delta <= g.omega(); t += stride) {
        WindowView w = g.window(t, delta);

        NullEnsembleStats stats;
        stats.window_anchor = t;
        stats.group = g.label_name(group);

        std::size_t valid = 0, present = 0;
        double x = group_mean_conformity(w, group, alpha, type, valid, present);
        stats.group_size = present;
        stats.observed_valid = valid > 0;
        stats.observed = x;

        if (!stats.observed_valid || w.num_projection_edges() < 2) {
            out.push_back(std::move(stats));
            continue;
        }

        std::vector<double> ensemble;
        ensemble.reserve(samples);
        for (std::size_t i = 0; i < samples; ++i) {
            WindowView rw = rewire(w, derive_seed(seed, static_cast<std::uint64_t>(t), i));
            std::size_t rv = 0, rp = 0;
            double m = group_mean_conformity(rw, group, alpha, type, rv, rp);
            ensemble.push_back(rv > 0 ? m : 0.0);
        }
        stats.samples = ensemble.size();
        double mean = 0.0;
        for (double v : ensemble) mean += v;
        mean /= static_cast<double>(ensemble.size());
        double var = 0.0;
        for (double v : ensemble) var += (v - mean) * (v - mean);
        var /= static_cast<double>(ensemble.size() - 1);  // sample stdev
        stats.mean = mean;
        stats.stdev = std::sqrt(var);

        if (stats.stdev > 0 && stats.group_size > 0) {
            stats.z = (x - mean) / (stats.stdev / std::sqrt(static_cast<double>(present)));
            stats.z_defined = true;
        }
        out.push_back(std::move(stats));
    }
    return out;
}

}  // namespace deltaconf
