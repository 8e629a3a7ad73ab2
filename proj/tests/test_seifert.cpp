#include <set>

#include "doctest.h"

#include "braidix/errors.hpp"
#include "braidix/seifert.hpp"
#include "helpers.hpp"

using braidix::arrangement;
using braidix::Diagram;
using braidix::seifert;

TEST_CASE("circle decomposition and graph match recorded values") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        const auto& exp = expectations().at(name);
        Diagram d = load_corpus(name);
        auto s = seifert(d);
        CHECK(s.total_circles() == exp.at("seifert_circles").get<int>());
        CHECK(s.stats.tau_plus == exp.at("stats").at("tau_plus").get<int>());
        CHECK(s.stats.tau_minus == exp.at("stats").at("tau_minus").get<int>());
        CHECK(s.stats.sigma_plus == exp.at("stats").at("sigma_plus").get<int>());
        CHECK(s.stats.sigma_minus == exp.at("stats").at("sigma_minus").get<int>());

        const auto& edges = exp.at("gs_edges");
        REQUIRE(s.edges.size() == edges.size());
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            CAPTURE(i);
            CHECK(s.edges[i].u == edges[i][0].get<int>());
            CHECK(s.edges[i].v == edges[i][1].get<int>());
            CHECK(s.edges[i].weight == edges[i][2].get<int>());
            CHECK(s.edges[i].pos == edges[i][3].get<int>());
            CHECK(s.edges[i].neg == edges[i][4].get<int>());
        }
    }
}

TEST_CASE("site lists cover each crossing twice, in circle order") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        Diagram d = load_corpus(name);
        auto s = seifert(d);
        std::size_t total_sites = 0;
        for (std::size_t c = 0; c < s.circles.size(); ++c) {
            CHECK(s.sites[c].size() == s.circles[c].size());
            total_sites += s.sites[c].size();
            // site count of a circle equals the sum of incident edge weights
            int incident = 0;
            for (const auto& e : s.edges) {
                if (e.u == static_cast<int>(c) || e.v == static_cast<int>(c)) {
                    incident += e.weight;
                }
            }
            CHECK(static_cast<int>(s.sites[c].size()) == incident);
        }
        CHECK(total_sites == 2 * d.num_crossings());
    }
}

TEST_CASE("trefoil circles and nesting") {
    Diagram d = load_corpus("trefoil_left");
    auto s = seifert(d);
    REQUIRE(s.circles.size() == 2);
    CHECK(s.circles[0] == std::vector<int>{1, 5, 3});
    CHECK(s.circles[1] == std::vector<int>{2, 6, 4});
    auto a = arrangement(d, s);
    // the outer face touches arcs 1,3,5, so circle 0 is the outer circle
    CHECK(a.nesting_parent[0] == -1);
    CHECK(a.nesting_parent[1] == 0);
    CHECK(a.nesting_children[0] == std::vector<int>{1});
    CHECK(a.inside(1, 0));
    CHECK(!a.inside(0, 1));
    // nested circles joined by crossings run the same way around
    CHECK(a.clockwise[0] == a.clockwise[1]);
}

TEST_CASE("arrangement structural invariants across the corpus") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        Diagram d = load_corpus(name);
        auto s = seifert(d);
        auto a = arrangement(d, s);
        if (d.xs.empty()) {
            CHECK(a.num_regions == 1);
            continue;
        }
        CHECK(a.num_regions == static_cast<int>(s.circles.size()) + 1);
        for (std::size_t c = 0; c < s.circles.size(); ++c) {
            const int ci = static_cast<int>(c);
            CHECK(a.region_depth[static_cast<std::size_t>(a.region_inside(ci))] ==
                  a.region_depth[static_cast<std::size_t>(a.region_outside(ci))] + 1);
            const int p = a.nesting_parent[c];
            if (p != -1) CHECK(a.inside(ci, p));
        }
        // adjacent circles: nested ones run the same way, side-by-side ones
        // run opposite ways
        for (const auto& e : s.edges) {
            const bool nested = a.nesting_parent[static_cast<std::size_t>(e.u)] == e.v ||
                                a.nesting_parent[static_cast<std::size_t>(e.v)] == e.u;
            if (nested) {
                CHECK(a.clockwise[static_cast<std::size_t>(e.u)] ==
                      a.clockwise[static_cast<std::size_t>(e.v)]);
            } else {
                CHECK(a.inside(e.u, e.v) == false);
                CHECK(a.inside(e.v, e.u) == false);
                CHECK(a.clockwise[static_cast<std::size_t>(e.u)] !=
                      a.clockwise[static_cast<std::size_t>(e.v)]);
            }
        }
    }
}

TEST_CASE("two-strand torus closures are one nested pair") {
    for (const auto& name : {"torus2_2", "torus2_3", "torus2_4", "torus2_5",
                             "torus2_6"}) {
        CAPTURE(name);
        Diagram d = load_corpus(name);
        auto s = seifert(d);
        auto a = arrangement(d, s);
        REQUIRE(s.circles.size() == 2);
        const int roots = (a.nesting_parent[0] == -1) + (a.nesting_parent[1] == -1);
        // one nested pair (equal orientation) or a side-by-side pair
        // (opposite orientation), depending on which face the outer-face
        // rule picks on the sphere
        CHECK((roots == 1) == (a.clockwise[0] == a.clockwise[1]));
    }
}

TEST_CASE("dot rendering is deterministic and carries edge labels") {
    Diagram d = load_corpus("trefoil_left");
    auto s = seifert(d);
    auto a = arrangement(d, s);
    std::string dot1 = gs_dot(s, a);
    std::string dot2 = gs_dot(seifert(d), arrangement(d, seifert(d)));
    CHECK(dot1 == dot2);
    CHECK(dot1.find("c0 -- c1 [label=\"3:+0/-3\"]") != std::string::npos);
    CHECK(dot1.find("graph seifert {") == 0);

    Diagram mixed = load_corpus("figure_eight");
    auto ms = seifert(mixed);
    std::string mdot = gs_dot(ms, arrangement(mixed, ms));
    CHECK(mdot.find(":+2/-0") != std::string::npos);
    CHECK(mdot.find(":+0/-2") != std::string::npos);
}
