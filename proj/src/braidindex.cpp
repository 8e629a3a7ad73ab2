#include "braidix/braidindex.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "braidix/errors.hpp"
#include "braidix/skein.hpp"

namespace braidix {

namespace {

// The two circles meeting at a crossing: `first` carries the under-in and
// over-out arcs, `second` the over-in and under-out arcs.
std::pair<int, int> crossing_circles(const Crossing& x, const SeifertData& s) {
    return {s.circle_of.at(x.e[0]), s.circle_of.at(x.e[over_in_slot(x.sign)])};
}

// Redirect the single consuming end of `arc` to consume `to` instead.
void rewrite_consumer(Diagram& m, int arc, int to) {
    int found = 0;
    for (auto& c : m.xs) {
        for (int slot : {0, over_in_slot(c.sign)}) {
            if (c.e[slot] == arc) {
                c.e[slot] = to;
                ++found;
            }
        }
    }
    if (found != 1) {
        throw invariant_error(
            "arc " + std::to_string(arc) +
            " must have exactly one consumer during the merge rewrite, found " +
            std::to_string(found));
    }
}

}  // namespace

std::vector<MergeablePair> weight_one_pairs(const Diagram& d, const SeifertData& s) {
    std::vector<MergeablePair> out;
    for (std::size_t ci = 0; ci < d.xs.size(); ++ci) {
        auto [p, q] = crossing_circles(d.xs[ci], s);
        if (p == q) continue;
        const int u = std::min(p, q);
        const int v = std::max(p, q);
        const GsEdge* e = s.edge_between(u, v);
        if (e != nullptr && e->weight == 1) {
            out.push_back({u, v, static_cast<int>(ci)});
        }
    }
    return out;
}

MergeResult merge_pair(const Diagram& d, const MergeablePair& pair) {
    const SeifertData s = seifert(d);
    if (pair.crossing < 0 ||
        pair.crossing >= static_cast<int>(d.xs.size())) {
        throw computation_error("stale merge pair: crossing " +
                                std::to_string(pair.crossing) +
                                " is not in the diagram");
    }
    const Crossing x = d.xs[static_cast<std::size_t>(pair.crossing)];
    const auto [cp_first, cp_second] = crossing_circles(x, s);
    const int u = std::min(cp_first, cp_second);
    const int v = std::max(cp_first, cp_second);
    if (u == v || std::min(pair.u, pair.v) != u || std::max(pair.u, pair.v) != v) {
        throw computation_error(
            "stale merge pair: crossing " + std::to_string(pair.crossing) +
            " does not join circles " + std::to_string(pair.u) + " and " +
            std::to_string(pair.v));
    }
    const GsEdge* edge = s.edge_between(u, v);
    if (edge == nullptr || edge->weight != 1) {
        throw computation_error("stale merge pair: circles " + std::to_string(u) +
                                " and " + std::to_string(v) +
                                " are not joined by exactly one crossing");
    }

    const int n_before = s.total_circles();
    const std::size_t xi = static_cast<std::size_t>(pair.crossing);
    MergeResult res;
    Diagram m = d;

    if (s.sites[u].size() == 1 || s.sites[v].size() == 1) {
        // One circle of the pair exists only at this crossing, so the
        // crossing is a kink: undo it and drop the collapsed loop.
        const int loops_before = m.free_loops;
        m.smooth(xi);
        if (m.free_loops <= loops_before) {
            throw invariant_error("undoing a kink must close its loop");
        }
        m.free_loops -= 1;
        res.nugatory = true;
    } else {
        // C'' is the circle the rerouted strand travels around: the one
        // with fewer crossings (smaller id on a tie).  C' is the other.
        const int cpp = (s.sites[u].size() <= s.sites[v].size()) ? u : v;
        const int cp = (cpp == u) ? v : u;
        const Arrangement arr = arrangement(d, s);
        // The detour lane hugs C'' on the side where C' lies, so it meets
        // exactly the arms of C'''s same-side crossings.
        const bool lane_inside = arr.inside(cp, cpp);
        const bool lane_right = (lane_inside == arr.clockwise[cpp]);

        const int e0 = x.e[0];
        const int e2 = x.e[2];
        const int oin = x.e[over_in_slot(x.sign)];
        const int oout = x.e[over_out_slot(x.sign)];

        // Plan the passages before mutating: walk C'''s sites backwards
        // from the merged crossing (the lane runs against C'''s
        // orientation) and keep the sites whose other circle is in the lane.
        const std::vector<int>& csites = s.sites[static_cast<std::size_t>(cpp)];
        const int site_count = static_cast<int>(csites.size());
        int px = -1;
        for (int i = 0; i < site_count; ++i) {
            if (csites[static_cast<std::size_t>(i)] == pair.crossing) px = i;
        }
        if (px < 0) {
            throw invariant_error("merge crossing missing from its circle's site list");
        }
        std::vector<std::pair<int, int>> plan;  // (crossing id in d, other circle)
        for (int step = 1; step < site_count; ++step) {
            const int pos = ((px - step) % site_count + site_count) % site_count;
            const int y = csites[static_cast<std::size_t>(pos)];
            const auto [yp, yq] = crossing_circles(d.xs[static_cast<std::size_t>(y)], s);
            const int w = (yp == cpp) ? yq : yp;
            if (w == cpp) {
                throw computation_error(
                    "cannot merge along a circle that crosses itself");
            }
            if (arr.inside(w, cpp) == lane_inside) plan.emplace_back(y, w);
        }

        m.xs.erase(m.xs.begin() + static_cast<std::ptrdiff_t>(xi));
        const std::vector<int> labels = d.arcs();
        int next_label = labels.empty() ? 1 : labels.back() + 1;

        // Join the under strand straight through.
        rewrite_consumer(m, e2, e0);

        // Reroute the over strand: start at its incoming arc, pass over
        // both arms of every planned site, and splice into its outgoing
        // arc.  Per site the lane meets the outgoing arm first (both
        // passages of a crossing point the same way, and the lane runs
        // against them).
        int cur = oin;
        for (const auto& [y0, w] : plan) {
            (void)w;
            const std::size_t y =
                static_cast<std::size_t>(y0 - (y0 > pair.crossing ? 1 : 0));
            const Crossing& original = d.xs[static_cast<std::size_t>(y0)];
            int w_in_slot;
            int w_out_slot;
            if (s.circle_of.at(original.e[0]) != cpp) {
                w_in_slot = 0;
                w_out_slot = over_out_slot(original.sign);
            } else {
                w_in_slot = over_in_slot(original.sign);
                w_out_slot = 2;
            }

            // Cut the outgoing arm: the piece at the site keeps its label,
            // the far piece is relabeled at its consumer.
            const int t_out = m.xs[y].e[static_cast<std::size_t>(w_out_slot)];
            const int f_far = next_label++;
            const int lane_out1 = next_label++;
            rewrite_consumer(m, t_out, f_far);
            if (lane_right) {
                m.xs.push_back(Crossing{{t_out, lane_out1, f_far, cur}, +1});
            } else {
                m.xs.push_back(Crossing{{t_out, cur, f_far, lane_out1}, -1});
            }
            cur = lane_out1;

            // Cut the incoming arm: the far piece keeps its label, the
            // piece at the site is relabeled where the site consumes it.
            const int t_in = m.xs[y].e[static_cast<std::size_t>(w_in_slot)];
            const int f_site = next_label++;
            const int lane_out2 = next_label++;
            m.xs[y].e[static_cast<std::size_t>(w_in_slot)] = f_site;
            if (lane_right) {
                m.xs.push_back(Crossing{{t_in, cur, f_site, lane_out2}, -1});
            } else {
                m.xs.push_back(Crossing{{t_in, lane_out2, f_site, cur}, +1});
            }
            cur = lane_out2;
            res.pokes += 1;
        }
        rewrite_consumer(m, oout, cur);
    }

    try {
        m.validate();
    } catch (const computation_error& err) {
        throw invariant_error(std::string("merge produced an invalid diagram: ") +
                              err.what());
    }
    m.renormalize();
    if (seifert(m).total_circles() != n_before - 1) {
        throw invariant_error("merge must reduce the circle count by exactly one");
    }
    res.diagram = std::move(m);
    return res;
}

CriterionDecision weight_one_criterion(const Diagram& d, const SeifertData& s) {
    CriterionDecision c;
    c.reduced = d.is_reduced();
    c.alternating = d.is_alternating();
    c.weight_one_free =
        std::none_of(s.edges.begin(), s.edges.end(),
                     [](const GsEdge& e) { return e.weight == 1; });
    if (!c.weight_one_free) {
        c.verdict = "b < n";
    } else if (c.reduced && c.alternating) {
        c.verdict = "b = n";
    } else {
        c.verdict = "criterion inapplicable";
    }
    return c;
}

std::vector<MergeablePair> independent_mergeable_pairs(
    const Diagram& d, const SeifertData& s, std::size_t exhaustive_limit) {
    const std::vector<MergeablePair> pairs = weight_one_pairs(d, s);
    const std::size_t k = pairs.size();
    if (k <= 1) return pairs;

    // Breadth-first distances in the circle graph from every endpoint.
    const std::size_t nc = s.circles.size();
    std::vector<std::vector<int>> adj(nc);
    for (const GsEdge& e : s.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    const int far = std::numeric_limits<int>::max() / 2;
    auto bfs = [&](int from) {
        std::vector<int> dist(nc, far);
        std::deque<int> queue{from};
        dist[static_cast<std::size_t>(from)] = 0;
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            for (int to : adj[static_cast<std::size_t>(at)]) {
                if (dist[static_cast<std::size_t>(to)] > dist[static_cast<std::size_t>(at)] + 1) {
                    dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(at)] + 1;
                    queue.push_back(to);
                }
            }
        }
        return dist;
    };
    std::map<int, std::vector<int>> dist_from;
    for (const MergeablePair& p : pairs) {
        for (int end : {p.u, p.v}) {
            if (dist_from.find(end) == dist_from.end()) dist_from[end] = bfs(end);
        }
    }
    auto compatible = [&](const MergeablePair& a, const MergeablePair& b) {
        int best = far;
        for (int ea : {a.u, a.v}) {
            for (int eb : {b.u, b.v}) {
                best = std::min(best, dist_from.at(ea)[static_cast<std::size_t>(eb)]);
            }
        }
        return best >= 2;
    };

    std::vector<std::size_t> best;
    if (k <= exhaustive_limit) {
        // Exhaustive search, keeping the first maximum found; trying
        // "include" before "exclude" makes the result the lexicographically
        // earliest maximum set in crossing order.
        std::vector<std::size_t> current;
        auto search = [&](auto&& self, std::size_t idx) -> void {
            if (current.size() + (k - idx) <= best.size()) return;
            if (idx == k) {
                if (current.size() > best.size()) best = current;
                return;
            }
            const bool fits = std::all_of(
                current.begin(), current.end(), [&](std::size_t chosen) {
                    return compatible(pairs[chosen], pairs[idx]);
                });
            if (fits) {
                current.push_back(idx);
                self(self, idx + 1);
                current.pop_back();
            }
            self(self, idx + 1);
        };
        search(search, 0);
    } else {
        for (std::size_t idx = 0; idx < k; ++idx) {
            const bool fits =
                std::all_of(best.begin(), best.end(), [&](std::size_t chosen) {
                    return compatible(pairs[chosen], pairs[idx]);
                });
            if (fits) best.push_back(idx);
        }
    }

    std::vector<MergeablePair> out;
    out.reserve(best.size());
    for (std::size_t idx : best) out.push_back(pairs[idx]);
    return out;
}

nlohmann::ordered_json braid_index_report(const Diagram& d) {
    const SeifertData s = seifert(d);
    const int n = s.total_circles();
    const Poly p = homfly(d);
    const int lower = mfw_lower_bound(p);
    const std::vector<MergeablePair> pairs = weight_one_pairs(d, s);

    nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
    certificates.push_back(nlohmann::ordered_json{
        {"type", "mfw"}, {"span", p.a_span()}, {"lower", lower}});

    int upper = n;
    if (pairs.empty()) {
        if (d.is_reduced() && d.is_alternating()) {
            if (lower != n) {
                throw invariant_error(
                    "the breadth bound must equal the circle count for a reduced "
                    "alternating diagram without weight-one edges");
            }
            certificates.push_back(
                nlohmann::ordered_json{{"type", "weight-one-free"}, {"n", n}});
        }
    } else {
        const std::vector<MergeablePair> indep = independent_mergeable_pairs(d, s);
        const int m = static_cast<int>(indep.size());
        upper = std::min(upper, n - m);

        const MergeablePair& first = pairs.front();
        const MergeResult merged = merge_pair(d, first);
        if (homfly(merged.diagram) != p) {
            throw invariant_error("merging a weight-one pair changed the polynomial");
        }
        const nlohmann::ordered_json sub = braid_index_report(merged.diagram);
        const int sub_upper = sub.at("upper").get<int>();
        upper = std::min(upper, sub_upper);

        certificates.push_back(nlohmann::ordered_json{{"type", "merge"},
                                                      {"crossing", first.crossing},
                                                      {"u", first.u},
                                                      {"v", first.v},
                                                      {"nugatory", merged.nugatory},
                                                      {"pokes", merged.pokes},
                                                      {"circles_after", n - 1},
                                                      {"upper", sub_upper}});
        nlohmann::ordered_json pair_list = nlohmann::ordered_json::array();
        for (const MergeablePair& q : indep) {
            pair_list.push_back(nlohmann::ordered_json::array({q.u, q.v}));
        }
        certificates.push_back(nlohmann::ordered_json{
            {"type", "distant-pairs"}, {"m", m}, {"pairs", pair_list}});
    }

    if (lower > upper) {
        throw invariant_error("braid index bounds crossed: lower " +
                              std::to_string(lower) + " exceeds upper " +
                              std::to_string(upper));
    }

    nlohmann::ordered_json out;
    out["n"] = n;
    out["lower"] = lower;
    out["upper"] = upper;
    if (lower == upper) {
        out["exact"] = lower;
    } else {
        out["exact"] = nullptr;
    }
    out["homfly"] = p.str();
    out["certificates"] = certificates;
    return out;
}

}  // namespace braidix
