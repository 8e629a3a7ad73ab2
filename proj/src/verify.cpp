#include "braidix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braidix/braidindex.hpp"
#include "braidix/castle.hpp"
#include "braidix/diagram.hpp"
#include "braidix/errors.hpp"
#include "braidix/poly.hpp"
#include "braidix/seifert.hpp"
#include "braidix/skein.hpp"

namespace braidix::verify {

namespace {

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result_.passed;
        } else {
            ++result_.failed;
            if (result_.failures.size() < 20) result_.failures.push_back(what);
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

struct Entry {
    std::string name;
    Diagram diagram;
};

using Corpus = std::vector<Entry>;

Corpus load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw computation_error("corpus directory not found: " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".pd") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw computation_error("no .pd files in corpus directory: " + dir);
    }
    Corpus corpus;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw computation_error("cannot open corpus file: " + path.string());
        std::ostringstream text;
        text << in.rdbuf();
        corpus.push_back({path.stem().string(), Diagram::parse(text.str())});
    }
    return corpus;
}

SuiteResult diagram_suite(const Corpus& corpus) {
    Checker ch("diagram");
    for (const auto& [name, d] : corpus) {
        bool valid = true;
        try {
            d.validate();
        } catch (const computation_error&) {
            valid = false;
        }
        ch.check(valid, name + ": structural validation");

        const std::vector<int> arcs = d.arcs();
        bool consecutive = arcs.size() == 2 * d.num_crossings();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            consecutive = consecutive && arcs[i] == static_cast<int>(i) + 1;
        }
        ch.check(consecutive, name + ": arc labels are 1..2k");

        Diagram copy = d;
        copy.renormalize();
        ch.check(copy.canonical_key() == d.canonical_key(),
                 name + ": canonical key stable under relabeling");

        std::set<int> seen;
        std::size_t covered = 0;
        for (const auto& comp : d.components()) {
            covered += comp.size();
            seen.insert(comp.begin(), comp.end());
        }
        ch.check(covered == arcs.size() &&
                     std::vector<int>(seen.begin(), seen.end()) == arcs,
                 name + ": components partition the arcs");

        const auto is_permutation = [&arcs](const std::map<int, int>& succ) {
            if (succ.size() != arcs.size()) return false;
            std::set<int> values;
            for (const auto& [from, to] : succ) {
                if (!std::binary_search(arcs.begin(), arcs.end(), from)) return false;
                values.insert(to);
            }
            return std::vector<int>(values.begin(), values.end()) == arcs;
        };
        ch.check(is_permutation(d.strand_succ()),
                 name + ": strand successor is a permutation of the arcs");
        ch.check(is_permutation(d.smoothed_succ()),
                 name + ": smoothed successor is a permutation of the arcs");

        const Faces f = d.faces();
        std::size_t corners = 0;
        for (const auto& orbit : f.orbits) corners += orbit.size();
        ch.check(corners == 4 * d.num_crossings(),
                 name + ": face corners cover every crossing end once");
        ch.check(f.total == static_cast<int>(f.orbits.size()) + 2 * d.free_loops,
                 name + ": face total counts two faces per free loop");
        ch.check(d.num_crossings() == 0 ||
                     (f.outer >= 0 && f.outer < static_cast<int>(f.orbits.size())),
                 name + ": an outer face is chosen");
    }
    return ch.take();
}

SuiteResult seifert_suite(const Corpus& corpus) {
    Checker ch("seifert");
    for (const auto& [name, d] : corpus) {
        const SeifertData s = seifert(d);
        const std::vector<int> arcs = d.arcs();

        std::set<int> seen;
        std::size_t covered = 0;
        bool mapped = true;
        for (std::size_t c = 0; c < s.circles.size(); ++c) {
            covered += s.circles[c].size();
            for (int arc : s.circles[c]) {
                seen.insert(arc);
                auto it = s.circle_of.find(arc);
                mapped = mapped && it != s.circle_of.end() &&
                         it->second == static_cast<int>(c);
            }
        }
        ch.check(covered == arcs.size() &&
                     std::vector<int>(seen.begin(), seen.end()) == arcs && mapped,
                 name + ": circles partition the arcs");
        ch.check(s.free_loops == d.free_loops, name + ": free loops carried over");

        bool sites_ok = s.sites.size() == s.circles.size();
        for (std::size_t c = 0; sites_ok && c < s.circles.size(); ++c) {
            sites_ok = s.sites[c].size() == s.circles[c].size();
            for (std::size_t i = 0; sites_ok && i < s.sites[c].size(); ++i) {
                const int ci = s.sites[c][i];
                sites_ok = ci >= 0 && ci < static_cast<int>(d.num_crossings());
                if (sites_ok) {
                    const auto& tuple = d.xs[static_cast<std::size_t>(ci)].e;
                    sites_ok = std::find(tuple.begin(), tuple.end(),
                                         s.circles[c][i]) != tuple.end();
                }
            }
        }
        ch.check(sites_ok, name + ": sites align with circle arcs");

        bool edges_ok = true;
        int weight_sum = 0;
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            const GsEdge& e = s.edges[i];
            edges_ok = edges_ok && e.u < e.v && e.weight >= 1 &&
                       e.pos + e.neg == e.weight;
            if (i > 0) {
                edges_ok = edges_ok && std::make_pair(s.edges[i - 1].u, s.edges[i - 1].v) <
                                           std::make_pair(e.u, e.v);
            }
            weight_sum += e.weight;
        }
        ch.check(edges_ok, name + ": edges are sorted with consistent weights");
        ch.check(weight_sum == static_cast<int>(d.num_crossings()),
                 name + ": edge weights cover every crossing");

        int tau_plus = 0;
        for (const Crossing& x : d.xs) tau_plus += x.sign > 0 ? 1 : 0;
        int sigma_plus = 0;
        int sigma_minus = 0;
        for (const GsEdge& e : s.edges) {
            sigma_plus += e.pos > 0 ? 1 : 0;
            sigma_minus += e.neg > 0 ? 1 : 0;
        }
        ch.check(s.stats.tau_plus == tau_plus &&
                     s.stats.tau_plus + s.stats.tau_minus ==
                         static_cast<int>(d.num_crossings()) &&
                     s.stats.sigma_plus == sigma_plus &&
                     s.stats.sigma_minus == sigma_minus,
                 name + ": crossing and edge sign counts agree");

        const Arrangement a = arrangement(d, s);
        ch.check(a.clockwise.size() == s.circles.size() &&
                     a.nesting_parent.size() == s.circles.size(),
                 name + ": arrangement covers every circle");

        bool regions_ok = true;
        for (std::size_t c = 0; c < s.circles.size(); ++c) {
            const int in_r = a.region_inside(static_cast<int>(c));
            const int out_r = a.region_outside(static_cast<int>(c));
            regions_ok = regions_ok && in_r >= 0 && out_r >= 0 &&
                         a.region_depth[static_cast<std::size_t>(in_r)] ==
                             a.region_depth[static_cast<std::size_t>(out_r)] + 1;
        }
        ch.check(regions_ok, name + ": inside region is one step deeper than outside");

        bool forest_ok = true;
        for (std::size_t c = 0; c < s.circles.size(); ++c) {
            int at = static_cast<int>(c);
            std::size_t steps = 0;
            while (at != -1 && steps <= s.circles.size()) {
                at = a.nesting_parent[static_cast<std::size_t>(at)];
                ++steps;
            }
            forest_ok = forest_ok && at == -1;
            const int parent = a.nesting_parent[c];
            if (parent >= 0) {
                const auto& siblings = a.nesting_children[static_cast<std::size_t>(parent)];
                forest_ok = forest_ok && std::find(siblings.begin(), siblings.end(),
                                                   static_cast<int>(c)) != siblings.end();
            }
        }
        ch.check(forest_ok, name + ": nesting forest is acyclic and consistent");

        for (const GsEdge& e : s.edges) {
            const bool nested = a.inside(e.u, e.v) || a.inside(e.v, e.u);
            const bool same = a.clockwise[static_cast<std::size_t>(e.u)] ==
                              a.clockwise[static_cast<std::size_t>(e.v)];
            ch.check(nested == same,
                     name + ": adjacent circles " + std::to_string(e.u) + "," +
                         std::to_string(e.v) +
                         " orient together exactly when nested");
        }
    }
    return ch.take();
}

SuiteResult skein_suite(const Corpus& corpus) {
    Checker ch("skein");
    ch.check(homfly(Diagram::parse("O")) == Poly::one(),
             "crossing-free loop has polynomial 1");
    std::string unlink_text = "O";
    for (int k = 2; k <= 5; ++k) {
        unlink_text += " O";
        ch.check(homfly(Diagram::parse(unlink_text)) == Poly::delta_pow(k - 1),
                 "trivial " + std::to_string(k) + "-component link polynomial");
        ch.check(mfw_lower_bound(Poly::delta_pow(k - 1)) == k,
                 "breadth bound of the trivial " + std::to_string(k) +
                     "-component link");
    }

    const Poly a_pos = Poly::mono(1, 0);
    const Poly a_neg = Poly::mono(-1, 0);
    const Poly z = Poly::mono(0, 1);
    for (const auto& [name, d] : corpus) {
        if (d.num_crossings() == 0) continue;
        const Poly as_is = homfly(d);
        for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) {
            Diagram flipped = d;
            flipped.flip(ci);
            Diagram smoothed = d;
            smoothed.smooth(ci);
            const Poly other = homfly(flipped);
            const Poly at_zero = homfly(smoothed);
            const bool positive = d.xs[ci].sign > 0;
            const Poly& plus = positive ? as_is : other;
            const Poly& minus = positive ? other : as_is;
            const Poly relation = a_pos * plus - a_neg * minus - z * at_zero;
            ch.check(relation.is_zero(), name + ": skein relation at crossing " +
                                             std::to_string(ci));
        }
    }
    return ch.take();
}

SuiteResult castle_suite(const Corpus& corpus) {
    Checker ch("castle");
    std::vector<SeifertData> datas;
    datas.reserve(corpus.size());
    for (const auto& [name, d] : corpus) {
        const SeifertData s = seifert(d);
        const Arrangement a = arrangement(d, s);
        const int n = s.total_circles();

        const TrapFreeSearch search = find_trap_free_castle(d, s, a);
        ch.check(search.castle.trapped.empty(), name + ": trap-free castle found");
        ch.check(search.rebase_steps <= n,
                 name + ": rebasing bounded by the circle count");

        const Castle& castle = search.castle;
        bool shape = !castle.floors.empty() && castle.floors.front().level == 0;
        for (std::size_t fi = 0; shape && fi < castle.floors.size(); ++fi) {
            shape = castle.floors[fi].id == static_cast<int>(fi);
        }
        for (const Ladder& ladder : castle.ladders) {
            shape = shape && ladder.lower_floor >= 0 && ladder.upper_floor >= 0 &&
                    ladder.lower_floor < static_cast<int>(castle.floors.size()) &&
                    ladder.upper_floor < static_cast<int>(castle.floors.size()) &&
                    castle.floors[static_cast<std::size_t>(ladder.upper_floor)]
                            .lower_floor == ladder.lower_floor;
        }
        for (const auto& tower : castle.towers) {
            shape = shape && !tower.empty() && tower.front() == 0 &&
                    tower.size() <= static_cast<std::size_t>(n);
            for (std::size_t i = 1; shape && i < tower.size(); ++i) {
                shape = castle.floors[static_cast<std::size_t>(tower[i])].lower_floor ==
                        tower[i - 1];
            }
        }
        ch.check(shape, name + ": castle structure coherent");

        const Poly generic = homfly(d);
        for (const TreeKind kind : {TreeKind::P, TreeKind::N}) {
            const ResolveTree tree = resolve_tree(d, kind);
            ch.check(tree.poly == generic,
                     name + ": castle-guided tree matches the generic polynomial");
            for (const LeafRecord& leaf : tree.leaves) {
                int loop_total = 0;
                for (int c : leaf.loop_counts) loop_total += c;
                const bool leaf_ok =
                    leaf.gamma >= 1 && leaf.t_minus <= leaf.t &&
                    leaf.writhe_removed == leaf.loop_sign_sum &&
                    leaf.gamma + loop_total <= n &&
                    std::abs(leaf.writhe_removed) <= loop_total &&
                    leaf.gamma + std::abs(leaf.writhe_removed) <= n;
                ch.check(leaf_ok, name + ": leaf bookkeeping within bounds");
            }
        }
        datas.push_back(s);
    }

    std::mt19937 rng(0xB7A1D1C5u);
    for (int sample = 0; sample < 1000; ++sample) {
        const std::size_t pick = rng() % corpus.size();
        const Diagram& d = corpus[pick].diagram;
        const SeifertData& s = datas[pick];
        const auto comps = d.components();
        std::vector<int> starts;
        starts.reserve(comps.size());
        for (const auto& comp : comps) {
            starts.push_back(comp[rng() % comp.size()]);
        }
        const ISDecomposition dec = is_decomposition(d, starts);
        const int n = s.total_circles();
        bool ok = dec.count() == static_cast<int>(comps.size()) +
                                     static_cast<int>(dec.loop_crossings.size()) +
                                     d.free_loops &&
                  dec.count() <= n;
        for (const auto& circle : dec.circles) {
            if (walk_contains_cycle(seifert_walk(s, circle))) {
                ok = ok && dec.count() < n;
            }
        }
        ch.check(ok, corpus[pick].name + ": sampled decomposition bounds (sample " +
                         std::to_string(sample) + ")");
    }
    return ch.take();
}

SuiteResult braidindex_suite(const Corpus& corpus) {
    Checker ch("braidindex");
    for (const auto& [name, d] : corpus) {
        const SeifertData s = seifert(d);
        const int n = s.total_circles();
        const Poly poly = homfly(d);
        const auto pairs = weight_one_pairs(d, s);

        for (const MergeablePair& pair : pairs) {
            bool ok = true;
            try {
                const MergeResult res = merge_pair(d, pair);
                ok = seifert(res.diagram).total_circles() == n - 1 &&
                     homfly(res.diagram) == poly &&
                     res.diagram.num_crossings() ==
                         d.num_crossings() - 1 +
                             2 * static_cast<std::size_t>(res.pokes) &&
                     (!res.nugatory || res.pokes == 0);
            } catch (const computation_error&) {
                ok = false;
            }
            ch.check(ok, name + ": merge at crossing " +
                             std::to_string(pair.crossing) +
                             " drops one circle and keeps the polynomial");
        }

        const CriterionDecision c = weight_one_criterion(d, s);
        ch.check(c.weight_one_free == pairs.empty(),
                 name + ": criterion sees the weight-one edges");
        const std::string expected_verdict =
            !c.weight_one_free
                ? "b < n"
                : (c.reduced && c.alternating ? "b = n" : "criterion inapplicable");
        ch.check(c.verdict == expected_verdict, name + ": criterion verdict wiring");

        const int m = static_cast<int>(independent_mergeable_pairs(d, s).size());
        ch.check(mfw_lower_bound(poly) <= n - m,
                 name + ": breadth bound within the distant-pair bound");

        const nlohmann::ordered_json rep = braid_index_report(d);
        const int lower = rep.at("lower").get<int>();
        const int upper = rep.at("upper").get<int>();
        bool report_ok = rep.at("n").get<int>() == n && lower <= upper &&
                         upper <= n &&
                         rep.at("homfly").get<std::string>() == poly.str() &&
                         !rep.at("certificates").empty() &&
                         rep.at("certificates").at(0).at("type") == "mfw";
        if (lower == upper) {
            report_ok = report_ok && rep.at("exact").get<int>() == lower;
        } else {
            report_ok = report_ok && rep.at("exact").is_null();
        }
        ch.check(report_ok, name + ": bounds report coherent");
    }
    return ch.take();
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& suite,
                                    const std::string& corpus_dir) {
    const Corpus corpus = load_corpus_dir(corpus_dir);
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (all || suite == "diagram") out.push_back(diagram_suite(corpus));
    if (all || suite == "seifert") out.push_back(seifert_suite(corpus));
    if (all || suite == "skein") out.push_back(skein_suite(corpus));
    if (all || suite == "castle") out.push_back(castle_suite(corpus));
    if (all || suite == "braidindex") out.push_back(braidindex_suite(corpus));
    if (out.empty()) throw computation_error("unknown suite: " + suite);
    return out;
}

}  // namespace braidix::verify
