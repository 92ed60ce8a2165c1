#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "deltaconf/temporal_paths.hpp"

using namespace deltaconf;

namespace {

std::vector<std::string> witness_nodes(const StreamGraph& g, const TimeRespectingPath& p) {
    std::vector<std::string> out;
    for (const Hop& h : p.hops) out.push_back(g.node_name(h.to));
    return out;
}

}  // namespace

TEST_CASE("toy shortest paths from A") {
    StreamGraph g = testutil::toy_stream();
    WindowView w = g.window(0, 5);
    DistanceMap dm = distances(w, g.find_node("A"), PathType::Shortest);
    REQUIRE(dm.source_active);
    CHECK(dm.entries.at(g.find_node("A")).distance == 0);
    CHECK(dm.entries.at(g.find_node("B")).distance == 1);
    CHECK(dm.entries.at(g.find_node("C")).distance == 1);
    CHECK(dm.entries.at(g.find_node("E")).distance == 1);
    CHECK_FALSE(dm.reachable(g.find_node("D")));
    CHECK(dm.entries.at(g.find_node("B")).witness.hops ==
          std::vector<Hop>{{0, g.find_node("A"), g.find_node("B")}});
    CHECK(dm.entries.at(g.find_node("C")).witness.hops ==
          std::vector<Hop>{{2, g.find_node("A"), g.find_node("C")}});
    CHECK(dm.entries.at(g.find_node("E")).witness.hops ==
          std::vector<Hop>{{4, g.find_node("A"), g.find_node("E")}});
}

TEST_CASE("toy foremost paths from A") {
    StreamGraph g = testutil::toy_stream();
    WindowView w = g.window(0, 5);
    DistanceMap dm = distances(w, g.find_node("A"), PathType::Foremost);
    CHECK(dm.entries.at(g.find_node("B")).distance == 1);
    CHECK(dm.entries.at(g.find_node("C")).distance == 2);
    CHECK(dm.entries.at(g.find_node("E")).distance == 2);
    CHECK(witness_nodes(g, dm.entries.at(g.find_node("C")).witness) ==
          std::vector<std::string>{"B", "C"});
    CHECK(witness_nodes(g, dm.entries.at(g.find_node("E")).witness) ==
          std::vector<std::string>{"C", "E"});
    CHECK(dm.entries.at(g.find_node("C")).witness.arrival() == 1);
    CHECK(dm.entries.at(g.find_node("E")).witness.arrival() == 3);
}

TEST_CASE("inactive source yields an empty flagged map") {
    StreamGraph g = testutil::toy_stream();
    WindowView w = g.window(0, 5);
    DistanceMap dm = distances(w, g.find_node("D"), PathType::Shortest);
    CHECK_FALSE(dm.source_active);
    CHECK(dm.entries.empty());
}

TEST_CASE("unknown source is an error") {
    StreamGraph g = testutil::toy_stream();
    WindowView w = g.window(0, 5);
    CHECK_THROWS_AS(distances(w, 99, PathType::Shortest), Error);
}

TEST_CASE("path enumeration on the toy") {
    StreamGraph g = testutil::toy_stream();
    WindowView w = g.window(0, 5);
    NodeId a = g.find_node("A"), c = g.find_node("C");

    auto paths = enumerate_paths(w, a, c, 3);
    auto contains = [&](std::vector<std::string> nodes) {
        return std::any_of(paths.begin(), paths.end(), [&](const TimeRespectingPath& p) {
            return witness_nodes(g, p) == nodes;
        });
    };
    CHECK(contains({"C"}));
    CHECK(contains({"B", "C"}));

    SUBCASE("source to itself is the empty path only") {
        auto self = enumerate_paths(w, a, a);
        REQUIRE(self.size() == 1);
        CHECK(self[0].hops.empty());
    }
    SUBCASE("disconnected target") {
        CHECK(enumerate_paths(w, a, g.find_node("D")).empty());
    }
    SUBCASE("cutoff raises instead of truncating") {
        CHECK_THROWS_AS(enumerate_paths(w, a, c, 0, /*path_limit=*/1), Error);
    }
    SUBCASE("every enumerated path replays as valid") {
        for (const auto& p : paths) CHECK(p.valid_in(w, a));
    }
}

TEST_CASE("same-instant chaining is allowed") {
    StreamGraph g;
    g.add_event(0, "A", "B");
    g.add_event(0, "B", "C");
    g.extend_bounds(0, 1);
    WindowView w = g.window(0, 1);
    DistanceMap dm = distances(w, g.find_node("A"), PathType::Foremost);
    REQUIRE(dm.reachable(g.find_node("C")));
    CHECK(dm.entries.at(g.find_node("C")).distance == 2);
    CHECK(dm.entries.at(g.find_node("C")).witness.duration() == 0);
}

TEST_CASE("oracle agreement and dominance on random windows") {
    std::mt19937_64 rng(23);
    int windows = 0;
    while (windows < 60) {
        StreamGraph g = testutil::random_stream(
            rng, {.max_nodes = 10, .max_events = 25, .max_time = 8});
        Instant span = g.omega() - g.alpha();
        if (span < 1) continue;
        ++windows;
        Instant delta = 1 + static_cast<Instant>(rng() % span);
        WindowView w = g.window(g.alpha(), delta);

        for (NodeId source = 0; source < g.num_nodes(); ++source) {
            if (!w.active(source)) continue;
            auto sp = distances(w, source, PathType::Shortest);
            auto fa = distances(w, source, PathType::Fastest);
            auto fo = distances(w, source, PathType::Foremost);
            auto o_sp = testutil::oracle_distances(w, source, PathType::Shortest);
            auto o_fa = testutil::oracle_distances(w, source, PathType::Fastest);
            auto o_fo = testutil::oracle_distances(w, source, PathType::Foremost);

            REQUIRE(sp.entries.size() == o_sp.size());
            for (const auto& [v, entry] : o_sp)
                CHECK(sp.entries.at(v).distance == entry.distance);
            for (const auto& [v, entry] : o_fo) {
                if (v == source) continue;
                CHECK(fo.entries.at(v).witness.arrival() == entry.arrival);
                CHECK(fo.entries.at(v).distance == entry.distance);
            }
            for (const auto& [v, entry] : o_fa) {
                if (v == source) continue;
                CHECK(fa.entries.at(v).witness.duration() == entry.duration);
                CHECK(fa.entries.at(v).distance == entry.distance);
            }

            // dominance across typologies
            for (const auto& [v, entry] : sp.entries) {
                if (v == source) continue;
                CHECK(entry.distance <= fa.entries.at(v).distance);
                CHECK(entry.distance <= fo.entries.at(v).distance);
                CHECK(fa.entries.at(v).witness.duration() <=
                      entry.witness.duration());
                CHECK(fa.entries.at(v).witness.duration() <=
                      fo.entries.at(v).witness.duration());
                CHECK(fo.entries.at(v).witness.arrival() <= entry.witness.arrival());
                CHECK(fo.entries.at(v).witness.arrival() <=
                      fa.entries.at(v).witness.arrival());
            }

            // every witness replays as a valid time-respecting path
            for (const auto* dm : {&sp, &fa, &fo})
                for (const auto& [v, entry] : dm->entries)
                    CHECK(entry.witness.valid_in(w, source));
        }
    }
}

TEST_CASE("reachability never shrinks as the window grows") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        StreamGraph g = testutil::random_stream(
            rng, {.max_nodes = 10, .max_events = 30, .max_time = 10});
        Instant span = g.omega() - g.alpha();
        if (span < 2) continue;
        Instant d1 = 1 + static_cast<Instant>(rng() % (span - 1));
        WindowView small = g.window(g.alpha(), d1);
        WindowView big = g.window(g.alpha(), span);
        for (NodeId source = 0; source < g.num_nodes(); ++source) {
            if (!small.active(source)) continue;
            auto dm1 = distances(small, source, PathType::Shortest);
            auto dm2 = distances(big, source, PathType::Shortest);
            for (const auto& [v, entry] : dm1.entries) CHECK(dm2.reachable(v));
        }
    }
}
