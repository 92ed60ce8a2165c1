#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltaconf/conformity.hpp"
#include "deltaconf/stream_graph.hpp"

namespace deltaconf {

/// Significance of one group's window score against a rewired ensemble.
/// z = (observed - mean) / (stdev / sqrt(group_size)); undefined when the
/// ensemble is degenerate (stdev == 0) or no group member scored.
struct NullEnsembleStats {
    Instant window_anchor = 0;
    std::string group;
    double observed = 0.0;
    bool observed_valid = false;
    double mean = 0.0;
    double stdev = 0.0;
    std::size_t samples = 0;
    std::size_t group_size = 0;
    double z = 0.0;
    bool z_defined = false;
};

/// Significance bands plotted alongside z trends.
inline constexpr double kZBandUpper = 3.0;
inline constexpr double kZBandLower = -3.0;

/// Degree-preserving resample of the window's static projection: a Markov
/// chain of double-edge swaps started from the observed edges, rejecting
/// swaps that would create self-loops or multi-edges (the simple-graph
/// configuration model). Labels are untouched; all rewired edges sit at the
/// window anchor instant, so every path typology degenerates to geodesics on
/// the resampled projection. Chain length is swaps_per_edge attempts per
/// projection edge.
WindowView rewire(const WindowView& w, std::uint64_t seed, std::size_t swaps_per_edge = 20);

/// Per-anchor z-score trend of a group's mean score against `samples`
/// rewired windows. Sample i at anchor t draws its seed from (seed, t, i),
/// so results are independent of evaluation order.
std::vector<NullEnsembleStats> z_score_trend(const StreamGraph& g, LabelId group, double alpha,
                                             Instant delta, Instant stride, PathType type,
                                             std::size_t samples, std::uint64_t seed);

/// Group mean over valid member scores in one window; returns the count of
/// contributing members through `out_valid`. Present group members are the
/// window-active nodes carrying the label.
double group_mean_conformity(const WindowView& w, LabelId group, double alpha, PathType type,
                             std::size_t& out_valid, std::size_t& out_present);

/// Deterministic per-sample seed derivation (splitmix-style mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t anchor, std::uint64_t sample);

}  // namespace deltaconf
