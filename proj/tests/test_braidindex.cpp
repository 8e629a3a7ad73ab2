#include <string>
#include <vector>

#include "braidix/braidindex.hpp"
#include "braidix/diagram.hpp"
#include "braidix/errors.hpp"
#include "braidix/seifert.hpp"
#include "braidix/skein.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace braidix;

namespace {

std::string frozen_homfly(const std::string& name) {
    return expectations().at(name).at("homfly").get<std::string>();
}

}  // namespace

TEST_CASE("weight-one pairs are listed by ascending crossing id") {
    const Diagram t = load_corpus("trefoil_left");
    CHECK(weight_one_pairs(t, seifert(t)).empty());

    const Diagram f = load_corpus("five_two");
    const auto pairs = weight_one_pairs(f, seifert(f));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].crossing == 0);
    CHECK(pairs[0].u == 0);
    CHECK(pairs[0].v == 1);
    CHECK(pairs[1].crossing == 2);
    CHECK(pairs[1].u == 0);
    CHECK(pairs[1].v == 3);
    CHECK(pairs[2].crossing == 3);
    CHECK(pairs[2].u == 2);
    CHECK(pairs[2].v == 3);

    const Diagram c = load_corpus("chain_two_merges");
    const auto cpairs = weight_one_pairs(c, seifert(c));
    REQUIRE(cpairs.size() == 2);
    CHECK(cpairs[0].crossing == 2);
    CHECK(cpairs[0].u == 1);
    CHECK(cpairs[0].v == 2);
    CHECK(cpairs[1].crossing == 7);
    CHECK(cpairs[1].u == 4);
    CHECK(cpairs[1].v == 5);
}

TEST_CASE("weight-one pair lists match the frozen circle graphs") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const SeifertData s = seifert(d);
        std::vector<std::pair<int, int>> expected;
        for (const auto& e : expectations().at(name).at("gs_edges")) {
            if (e.at(2).get<int>() == 1) {
                expected.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            }
        }
        std::vector<std::pair<int, int>> got;
        for (const MergeablePair& p : weight_one_pairs(d, s)) {
            got.emplace_back(p.u, p.v);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("merging the first five_two pair leaves three circles and the same polynomial") {
    const Diagram d = load_corpus("five_two");
    const auto pairs = weight_one_pairs(d, seifert(d));
    const MergeResult res = merge_pair(d, pairs.front());
    CHECK_FALSE(res.nugatory);
    CHECK(seifert(res.diagram).total_circles() == 3);
    CHECK(res.diagram.num_crossings() == d.num_crossings() - 1 + 2 * static_cast<std::size_t>(res.pokes));
    CHECK(homfly(res.diagram).str() == frozen_homfly("five_two"));
}

TEST_CASE("every weight-one merge in the corpus drops one circle and keeps the polynomial") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const SeifertData s = seifert(d);
        const int n = s.total_circles();
        for (const MergeablePair& pair : weight_one_pairs(d, s)) {
            CAPTURE(pair.crossing);
            const MergeResult res = merge_pair(d, pair);
            CHECK(seifert(res.diagram).total_circles() == n - 1);
            CHECK(res.diagram.num_crossings() ==
                  d.num_crossings() - 1 + 2 * static_cast<std::size_t>(res.pokes));
            if (res.nugatory) CHECK(res.pokes == 0);
            CHECK(homfly(res.diagram).str() == frozen_homfly(name));
        }
    }
}

TEST_CASE("a pair whose circle carries no other crossing is removed as a kink") {
    for (const char* name : {"trefoil_r1", "figure_eight_r1", "trefoil_r3b"}) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const auto pairs = weight_one_pairs(d, seifert(d));
        REQUIRE(pairs.size() == 1);
        const MergeResult res = merge_pair(d, pairs.front());
        CHECK(res.nugatory);
        CHECK(res.pokes == 0);
        CHECK(res.diagram.num_crossings() == d.num_crossings() - 1);
    }
}

TEST_CASE("stale or malformed merge pairs are rejected") {
    const Diagram t = load_corpus("trefoil_left");
    CHECK_THROWS_AS(merge_pair(t, MergeablePair{0, 1, 0}), computation_error);
    const Diagram f = load_corpus("five_two");
    CHECK_THROWS_AS(merge_pair(f, MergeablePair{0, 1, 1}), computation_error);
    CHECK_THROWS_AS(merge_pair(f, MergeablePair{0, 1, 99}), computation_error);
    CHECK_THROWS_AS(merge_pair(f, MergeablePair{0, 1, -1}), computation_error);
}

TEST_CASE("iterated merging terminates with no weight-one pairs left") {
    SUBCASE("five_two stops at its breadth bound") {
        Diagram d = load_corpus("five_two");
        int merges = 0;
        while (true) {
            const auto pairs = weight_one_pairs(d, seifert(d));
            if (pairs.empty()) break;
            d = merge_pair(d, pairs.front()).diagram;
            CHECK(homfly(d).str() == frozen_homfly("five_two"));
            REQUIRE(++merges <= 4);
        }
        CHECK(merges == 1);
        CHECK(seifert(d).total_circles() == 3);
    }
    SUBCASE("chain_two_merges supports two merges") {
        Diagram d = load_corpus("chain_two_merges");
        int merges = 0;
        while (true) {
            const auto pairs = weight_one_pairs(d, seifert(d));
            if (pairs.empty()) break;
            d = merge_pair(d, pairs.front()).diagram;
            CHECK(homfly(d).str() == frozen_homfly("chain_two_merges"));
            REQUIRE(++merges <= 7);
        }
        CHECK(merges == 2);
        CHECK(seifert(d).total_circles() == 5);
    }
}

TEST_CASE("weight-one criterion verdicts") {
    for (const char* name :
         {"trefoil_left", "trefoil_right", "figure_eight", "hopf_plus", "torus2_2",
          "torus2_3", "torus2_4", "torus2_5", "torus2_6", "twist_chain4", "unknot",
          "unlink2", "unlink3", "unlink4", "unlink5"}) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const CriterionDecision c = weight_one_criterion(d, seifert(d));
        CHECK(c.verdict == "b = n");
        CHECK(c.weight_one_free);
        CHECK(c.reduced);
        CHECK(c.alternating);
    }
    for (const char* name : {"five_two", "chain_two_merges", "trefoil_r1",
                             "figure_eight_r1", "trefoil_r3b"}) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const CriterionDecision c = weight_one_criterion(d, seifert(d));
        CHECK(c.verdict == "b < n");
        CHECK_FALSE(c.weight_one_free);
    }
    for (const char* name : {"trefoil_r2", "trefoil_r3a", "figure_eight_r2",
                             "figure_eight_r3a", "figure_eight_r3b", "trap_pocket"}) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const CriterionDecision c = weight_one_criterion(d, seifert(d));
        CHECK(c.verdict == "criterion inapplicable");
        CHECK(c.weight_one_free);
        CHECK_FALSE(c.alternating);
    }
}

TEST_CASE("independent mergeable pairs") {
    const Diagram t = load_corpus("trefoil_left");
    CHECK(independent_mergeable_pairs(t, seifert(t)).empty());

    const Diagram f = load_corpus("five_two");
    const auto indep_f = independent_mergeable_pairs(f, seifert(f));
    REQUIRE(indep_f.size() == 1);
    CHECK(indep_f[0].crossing == 0);

    const Diagram c = load_corpus("chain_two_merges");
    const auto indep_c = independent_mergeable_pairs(c, seifert(c));
    REQUIRE(indep_c.size() == 2);
    CHECK(indep_c[0].crossing == 2);
    CHECK(indep_c[1].crossing == 7);

    SUBCASE("the greedy fallback finds the same sets here") {
        CHECK(independent_mergeable_pairs(f, seifert(f), 0).size() == 1);
        const auto greedy_c = independent_mergeable_pairs(c, seifert(c), 0);
        REQUIRE(greedy_c.size() == 2);
        CHECK(greedy_c[0].crossing == 2);
        CHECK(greedy_c[1].crossing == 7);
    }
}

TEST_CASE("the breadth bound never exceeds the distant-pair bound") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const SeifertData s = seifert(d);
        const int m = static_cast<int>(independent_mergeable_pairs(d, s).size());
        const int mfw = expectations().at(name).at("mfw").get<int>();
        CHECK(mfw <= s.total_circles() - m);
    }
}

TEST_CASE("bounds reports on anchor diagrams") {
    struct Row {
        const char* name;
        int n;
        int lower;
        int upper;
    };
    const Row rows[] = {
        {"unknot", 1, 1, 1},           {"unlink3", 3, 3, 3},
        {"unlink5", 5, 5, 5},          {"trefoil_left", 2, 2, 2},
        {"trefoil_right", 2, 2, 2},    {"figure_eight", 3, 3, 3},
        {"torus2_2", 2, 2, 2},         {"torus2_6", 2, 2, 2},
        {"twist_chain4", 4, 4, 4},     {"five_two", 4, 3, 3},
        {"chain_two_merges", 7, 5, 5}, {"trefoil_r1", 3, 2, 2},
        {"trefoil_r2", 2, 2, 2},       {"trefoil_r3a", 3, 2, 3},
        {"figure_eight_r2", 3, 3, 3},  {"trap_pocket", 3, 3, 3},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        const nlohmann::ordered_json rep = braid_index_report(load_corpus(row.name));
        CHECK(rep.at("n").get<int>() == row.n);
        CHECK(rep.at("lower").get<int>() == row.lower);
        CHECK(rep.at("upper").get<int>() == row.upper);
        if (row.lower == row.upper) {
            CHECK(rep.at("exact").get<int>() == row.lower);
        } else {
            CHECK(rep.at("exact").is_null());
        }
    }
}

TEST_CASE("report certificates carry the expected shapes") {
    SUBCASE("weight-one-free certificate on a reduced alternating diagram") {
        const nlohmann::ordered_json rep = braid_index_report(load_corpus("trefoil_left"));
        REQUIRE(rep.at("certificates").size() == 2);
        CHECK(rep.at("certificates").at(0).at("type") == "mfw");
        CHECK(rep.at("certificates").at(0).at("lower").get<int>() == 2);
        CHECK(rep.at("certificates").at(1).at("type") == "weight-one-free");
        CHECK(rep.at("certificates").at(1).at("n").get<int>() == 2);
    }
    SUBCASE("merge and distant-pairs certificates on five_two") {
        const nlohmann::ordered_json rep = braid_index_report(load_corpus("five_two"));
        REQUIRE(rep.at("certificates").size() == 3);
        const auto& merge = rep.at("certificates").at(1);
        CHECK(merge.at("type") == "merge");
        CHECK(merge.at("crossing").get<int>() == 0);
        CHECK(merge.at("u").get<int>() == 0);
        CHECK(merge.at("v").get<int>() == 1);
        CHECK_FALSE(merge.at("nugatory").get<bool>());
        CHECK(merge.at("circles_after").get<int>() == 3);
        CHECK(merge.at("upper").get<int>() == 3);
        const auto& distant = rep.at("certificates").at(2);
        CHECK(distant.at("type") == "distant-pairs");
        CHECK(distant.at("m").get<int>() == 1);
        REQUIRE(distant.at("pairs").size() == 1);
        CHECK(distant.at("pairs").at(0).at(0).get<int>() == 0);
        CHECK(distant.at("pairs").at(0).at(1).get<int>() == 1);
    }
    SUBCASE("a kink merge is reported as such") {
        const nlohmann::ordered_json rep = braid_index_report(load_corpus("trefoil_r1"));
        const auto& merge = rep.at("certificates").at(1);
        CHECK(merge.at("type") == "merge");
        CHECK(merge.at("nugatory").get<bool>());
        CHECK(merge.at("upper").get<int>() == 2);
    }
    SUBCASE("two distant pairs on chain_two_merges") {
        const nlohmann::ordered_json rep = braid_index_report(load_corpus("chain_two_merges"));
        const auto& distant = rep.at("certificates").back();
        CHECK(distant.at("type") == "distant-pairs");
        CHECK(distant.at("m").get<int>() == 2);
        REQUIRE(distant.at("pairs").size() == 2);
        CHECK(distant.at("pairs").at(0).at(0).get<int>() == 1);
        CHECK(distant.at("pairs").at(0).at(1).get<int>() == 2);
        CHECK(distant.at("pairs").at(1).at(0).get<int>() == 4);
        CHECK(distant.at("pairs").at(1).at(1).get<int>() == 5);
    }
    SUBCASE("no weight-one-free certificate without alternation") {
        const nlohmann::ordered_json rep = braid_index_report(load_corpus("trefoil_r3a"));
        REQUIRE(rep.at("certificates").size() == 1);
        CHECK(rep.at("certificates").at(0).at("type") == "mfw");
    }
}

TEST_CASE("reports are coherent across the corpus") {
    const std::vector<std::string> keys = {"n",     "lower",  "upper",
                                           "exact", "homfly", "certificates"};
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        const Diagram d = load_corpus(name);
        const nlohmann::ordered_json rep = braid_index_report(d);
        std::vector<std::string> got;
        for (auto it = rep.begin(); it != rep.end(); ++it) got.push_back(it.key());
        CHECK(got == keys);
        const int n = rep.at("n").get<int>();
        const int lower = rep.at("lower").get<int>();
        const int upper = rep.at("upper").get<int>();
        CHECK(n == seifert(d).total_circles());
        CHECK(lower == expectations().at(name).at("mfw").get<int>());
        CHECK(lower <= upper);
        CHECK(upper <= n);
        if (lower == upper) {
            CHECK(rep.at("exact").get<int>() == lower);
        } else {
            CHECK(rep.at("exact").is_null());
        }
        CHECK(rep.at("homfly").get<std::string>() == frozen_homfly(name));
        REQUIRE(!rep.at("certificates").empty());
        CHECK(rep.at("certificates").at(0).at("type") == "mfw");
    }
}
