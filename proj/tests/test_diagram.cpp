#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "quandlekit/diagram.hpp"

using namespace quandlekit;

TEST_CASE("fixture diagrams parse with the expected shape") {
    struct Row {
        const char* key;
        int crossings, arcs, regions, components, writhe, loops;
    };
    const Row rows[] = {
        {"trefoil", 3, 3, 5, 1, -3, 0},     {"trefoil_r", 3, 3, 5, 1, 3, 0},
        {"figure_eight", 4, 4, 6, 1, 0, 0}, {"granny", 6, 6, 8, 1, 6, 0},
        {"unknot_0", 0, 1, 2, 1, 0, 1},     {"unknot_r1", 1, 1, 3, 1, 1, 0},
        {"unknot_r1neg", 1, 1, 3, 1, -1, 0}, {"unknot_r2", 2, 2, 4, 1, 0, 0},
        {"unlink_r2", 2, 3, 4, 2, 0, 0},
    };
    for (const Row& r : rows) {
        CAPTURE(r.key);
        Diagram d = qk_test::load_diagram(r.key);
        CHECK(d.crossing_count() == r.crossings);
        CHECK(d.arc_count() == r.arcs);
        CHECK(d.region_count() == r.regions);
        CHECK(d.component_count() == r.components);
        CHECK(d.writhe() == r.writhe);
        CHECK(d.free_loop_count() == r.loops);
        CHECK(d.edge_count() == 2 * r.crossings);
        // Euler characteristic of the sphere
        CHECK(r.crossings - 2 * r.crossings + r.regions == 2);
    }
    Diagram t = qk_test::load_diagram("trefoil");
    for (int c = 0; c < 3; ++c) CHECK(t.sign(c) == -1);
    Diagram f8 = qk_test::load_diagram("figure_eight");
    CHECK(f8.sign(0) + f8.sign(1) + f8.sign(2) + f8.sign(3) == 0);
}

TEST_CASE("zero-crossing unknot bookkeeping") {
    Diagram u = Diagram::parse("PD[]");
    CHECK(u.crossing_count() == 0);
    CHECK(u.free_loop_count() == 1);
    CHECK(u.arc_count() == 1);
    CHECK(u.region_count() == 2);
    CHECK(u.infinity_region() == 0);
    CHECK(u.loop_outer_region(0) == 0);
    CHECK(u.loop_inner_region(0) == 1);
    CHECK(u.to_pd_text() == "PD[]");
}

TEST_CASE("pd text round trips canonically") {
    for (const char* key : {"trefoil", "figure_eight", "granny", "unknot_r2", "unlink_r2"}) {
        CAPTURE(key);
        Diagram d = qk_test::load_diagram(key);
        Diagram again = Diagram::parse(d.to_pd_text());
        CHECK(again.to_json() == d.to_json());
        CHECK(d.to_json() == d.to_json());  // serialization is deterministic
    }
    CHECK(qk_test::load_diagram("trefoil").to_pd_text() ==
          "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
}

TEST_CASE("json export exposes the derived structure") {
    Diagram t = qk_test::load_diagram("trefoil");
    nlohmann::json j = nlohmann::json::parse(t.to_json());
    CHECK(j["pd"] == t.to_pd_text());
    CHECK(j["components"] == 1);
    CHECK(j["free_loops"] == 0);
    CHECK(j["signs"].size() == 3);
    CHECK(j["arcs"].size() == 3);
    std::set<int> seen;
    for (const auto& arc : j["arcs"]) {
        CHECK(arc.size() == 2);  // each trefoil arc covers two edges
        for (const auto& e : arc) seen.insert(e.get<int>());
    }
    CHECK(seen.size() == 6);
    CHECK(j["regions"].size() == 5);
    CHECK(j["infinity_region"] == t.infinity_region());
}

TEST_CASE("whitespace table format parses too") {
    Diagram d = Diagram::parse("1 4 2 5\n3 6 4 1\n5 2 6 3\n");
    CHECK(d.crossing_count() == 3);
    CHECK(d.writhe() == -3);
    CHECK(d.to_json() == qk_test::load_diagram("trefoil").to_json());
    CHECK_THROWS_AS(Diagram::parse("1 4 2\n"), PdParseError);
}

TEST_CASE("malformed codes are rejected with positions") {
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,2,3]]"), doctest::Contains("expected ','"),
                         PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,1,2,2]"), doctest::Contains("expected ']'"),
                         PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[] junk"), doctest::Contains("trailing"),
                         PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse(""), doctest::Contains("no crossings"), PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[0,1,0,1]]"),
                         doctest::Contains("edge id 0 outside"), PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,1,2,3]]"), doctest::Contains("outside"),
                         PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,2,1,1]]"), doctest::Contains("occurs 3"),
                         PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,2,2,2]]"), doctest::Contains("occurs 1"),
                         PdParseError);
    try {
        Diagram::parse("PD[X[1,2,3]]");
        FAIL("expected PdParseError");
    } catch (const PdParseError& e) {
        CHECK(e.position == 10);
    }
}

TEST_CASE("non-planar and disconnected codes are rejected") {
    // two closed curves meeting in a single crossing cannot lie on the sphere
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,2,1,2]]"),
                         doctest::Contains("not a planar connected diagram"), PdParseError);
    // disjoint union of two trefoils fails the same Euler count
    CHECK_THROWS_WITH_AS(
        Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3],"
                       "X[7,10,8,11],X[9,12,10,7],X[11,8,12,9]]"),
        doctest::Contains("not a planar connected diagram"), PdParseError);
    CHECK_THROWS_WITH_AS(Diagram::parse("PD[X[1,3,2,4],X[1,4,2,3]]"),
                         doctest::Contains("inconsistent orientation"), PdParseError);
}

TEST_CASE("edge accessors respect crossing signs") {
    Diagram t = qk_test::load_diagram("trefoil");
    for (int c = 0; c < t.crossing_count(); ++c) {
        const Crossing& q = t.crossings()[c];
        CHECK(t.under_in_edge(c) == q.e[0]);
        CHECK(t.under_out_edge(c) == q.e[2]);
        if (t.sign(c) > 0) {
            CHECK(t.over_in_edge(c) == q.e[3]);
            CHECK(t.over_out_edge(c) == q.e[1]);
        } else {
            CHECK(t.over_in_edge(c) == q.e[1]);
            CHECK(t.over_out_edge(c) == q.e[3]);
        }
        // both over edges belong to one arc, the under strand switches arcs
        CHECK(t.arc_of_edge(t.over_in_edge(c)) == t.arc_of_edge(t.over_out_edge(c)));
    }
}

TEST_CASE("regions form a consistent face structure") {
    for (const char* key : {"trefoil", "figure_eight", "unlink_r2"}) {
        CAPTURE(key);
        Diagram d = qk_test::load_diagram(key);
        std::vector<int> sides_seen(d.region_count(), 0);
        for (int e = 1; e <= d.edge_count(); ++e) {
            CHECK(d.right_region(e) != d.left_region(e));
            ++sides_seen[d.right_region(e)];
            ++sides_seen[d.left_region(e)];
        }
        int total = 0;
        for (int r = 0; r < d.region_count(); ++r) {
            CHECK(static_cast<int>(d.regions()[r].size()) == sides_seen[r]);
            total += sides_seen[r];
        }
        CHECK(total == 2 * d.edge_count());
        for (int c = 0; c < d.crossing_count(); ++c) {
            int s = d.source_region(c);
            CHECK(s >= 0);
            CHECK(s < d.region_count());
        }
    }
}

TEST_CASE("arc_edge_on_region agrees with the side maps") {
    Diagram t = qk_test::load_diagram("trefoil");
    for (int a = 0; a < t.arc_count(); ++a) {
        for (int r = 0; r < t.region_count(); ++r) {
            int e = t.arc_edge_on_region(a, r);
            bool adjacent = false;
            int lowest = -1;
            for (int k = 1; k <= t.edge_count(); ++k) {
                if (t.arc_of_edge(k) != a) continue;
                if (t.right_region(k) == r || t.left_region(k) == r) {
                    adjacent = true;
                    if (lowest < 0) lowest = k;
                }
            }
            CHECK(e == lowest);
            CHECK((e != -1) == adjacent);
        }
        CHECK(t.arc_edge_on_region(a, t.infinity_region()) != -1);
    }
}

TEST_CASE("with_infinity rebases the outer region") {
    Diagram t = qk_test::load_diagram("trefoil");
    CHECK(t.infinity_region() == 2);
    Diagram w = t.with_infinity(0);
    CHECK(w.infinity_region() == 0);
    CHECK(w.to_pd_text() == t.to_pd_text());  // combinatorics unchanged
    CHECK_THROWS_AS(t.with_infinity(99), std::invalid_argument);
}

TEST_CASE("first Reidemeister move insertion") {
    Diagram t = qk_test::load_diagram("trefoil");
    for (int a = 0; a < t.arc_count(); ++a) {
        for (int chi : {1, -1}) {
            Diagram d = t.r1_insert(a, chi);
            CHECK(d.crossing_count() == 4);
            CHECK(d.arc_count() == 4);
            CHECK(d.writhe() == t.writhe() + chi);
            CHECK(d.component_count() == 1);
        }
    }
    Diagram u = Diagram::parse("PD[]");
    Diagram kink = u.r1_insert(0, -1);
    CHECK(kink.crossing_count() == 1);
    CHECK(kink.free_loop_count() == 0);
    CHECK(kink.writhe() == -1);
    CHECK_THROWS_AS(t.r1_insert(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.r1_insert(0, 2), std::invalid_argument);
}

TEST_CASE("second Reidemeister move insertion") {
    Diagram t = qk_test::load_diagram("trefoil");
    int done = 0;
    for (int over = 0; over < t.arc_count(); ++over) {
        for (int under = 0; under < t.arc_count(); ++under) {
            try {
                Diagram d = t.r2_insert(over, under);
                ++done;
                CHECK(d.crossing_count() == 5);
                CHECK(d.writhe() == t.writhe());
                CHECK(d.component_count() == 1);
            } catch (const std::invalid_argument&) {
                // arcs share no region on distinct edges
            }
        }
    }
    CHECK(done > 0);
    CHECK_THROWS_AS(t.r2_insert(9, 0), std::invalid_argument);
}

TEST_CASE("connected sum splices at outer arcs") {
    Diagram t = qk_test::load_diagram("trefoil");
    Diagram g = Diagram::connected_sum(t, t, 0, 0);
    CHECK(g.crossing_count() == 6);
    CHECK(g.component_count() == 1);
    CHECK(g.writhe() == -6);
    CHECK(g.arc_count() == 6);
    CHECK_THROWS_WITH_AS(
        Diagram::connected_sum(qk_test::load_diagram("unlink_r2"), t, 0, 0),
        doctest::Contains("single-component"), std::invalid_argument);
}
