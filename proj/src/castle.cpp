#include "braidix/castle.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "braidix/errors.hpp"

namespace braidix {

namespace {

// The two circles meeting at a crossing, as (circle of the under strand,
// circle of the over strand).  They always differ: a circle crossing itself
// would have to bound area on both sides of the strand at once.
std::pair<int, int> crossing_circles(const SeifertData& s, const Crossing& x) {
    const int cu = s.circle_of.at(x.e[0]);
    const int co = s.circle_of.at(x.e[static_cast<std::size_t>(over_in_slot(x.sign))]);
    return {cu, co};
}

int other_circle(const SeifertData& s, const Crossing& x, int host) {
    const auto [cu, co] = crossing_circles(s, x);
    if (cu == host) return co;
    if (co == host) return cu;
    throw invariant_error("crossing does not touch the host circle");
}

// Position of a crossing in a circle's site list (unique because a circle
// never meets a crossing twice).
int site_position(const std::vector<int>& sites, int crossing) {
    const auto it = std::find(sites.begin(), sites.end(), crossing);
    if (it == sites.end()) {
        throw invariant_error("crossing missing from the circle's site list");
    }
    return static_cast<int>(it - sites.begin());
}

}  // namespace

Castle build_castle(const Diagram& d, const SeifertData& s, const Arrangement& a,
                    int base_circle) {
    Castle castle;
    if (s.circles.empty()) {
        if (base_circle != -1) {
            throw computation_error("crossing-free diagram has no circle to build on");
        }
        Floor ground;
        ground.id = 0;
        castle.floors.push_back(ground);
        castle.towers.push_back({0});
        return castle;
    }
    if (base_circle < 0 || base_circle >= static_cast<int>(s.circles.size())) {
        throw computation_error("base circle out of range");
    }
    if (!a.nesting_children[static_cast<std::size_t>(base_circle)].empty()) {
        throw computation_error("base circle is not innermost");
    }

    castle.base_circle = base_circle;
    castle.start_arc = s.circles[static_cast<std::size_t>(base_circle)][0];

    Floor ground;
    ground.id = 0;
    ground.level = 0;
    ground.host = base_circle;
    ground.sites = s.sites[static_cast<std::size_t>(base_circle)];
    ground.above_is_inside = false;  // the base is innermost, so everything
                                     // else lies outside it
    castle.floors.push_back(ground);

    // Track which site positions of each circle are already covered by a
    // floor; intervals of distinct floors on one circle must not overlap.
    std::map<int, std::set<int>> used_positions;
    for (int p = 0; p < static_cast<int>(ground.sites.size()); ++p) {
        used_positions[base_circle].insert(p);
    }

    for (std::size_t fi = 0; fi < castle.floors.size(); ++fi) {
        // Group the floor's non-ladder sites by the other circle met there,
        // in order of first appearance along the floor.
        const Floor floor = castle.floors[fi];  // copy: the vector grows below
        const std::set<int> down(floor.down_ladders.begin(), floor.down_ladders.end());
        const int parent_host =
            floor.lower_floor >= 0 ? castle.floors[static_cast<std::size_t>(floor.lower_floor)].host : -1;
        std::vector<std::pair<int, std::vector<int>>> groups;
        std::map<int, std::size_t> group_index;
        for (const int crossing : floor.sites) {
            if (down.count(crossing)) continue;
            const int w = other_circle(s, d.xs[static_cast<std::size_t>(crossing)], floor.host);
            if (w == parent_host) {
                throw invariant_error(
                    "floor has crossings to its supporting circle outside the ladder set");
            }
            const auto it = group_index.find(w);
            if (it == group_index.end()) {
                group_index.emplace(w, groups.size());
                groups.push_back({w, {crossing}});
            } else {
                groups[it->second].second.push_back(crossing);
            }
        }

        for (const auto& [w, ladder_list] : groups) {
            const bool w_inside_host = a.inside(w, floor.host);
            const bool above = (w_inside_host == floor.above_is_inside);
            if (!above) {
                castle.trapped.push_back({w, floor.lower_floor, floor.id});
                continue;
            }

            Floor next;
            next.id = static_cast<int>(castle.floors.size());
            next.level = floor.level + 1;
            next.host = w;
            next.lower_floor = floor.id;
            next.down_ladders = ladder_list;
            next.above_is_inside = !a.inside(floor.host, w);

            // The new floor spans from the first to the last ladder along
            // its own circle.  The two strands of every crossing run
            // parallel, so both circles pass their shared crossings in the
            // same order; walking forward from the first ladder must meet
            // the ladders exactly in floor order.
            const auto& sw = s.sites[static_cast<std::size_t>(w)];
            const int length = static_cast<int>(sw.size());
            const int p_first = site_position(sw, ladder_list.front());
            const int p_last = site_position(sw, ladder_list.back());
            const std::set<int> ladder_set(ladder_list.begin(), ladder_list.end());
            std::vector<int> ladder_order;
            for (int p = p_first;; p = (p + 1) % length) {
                next.sites.push_back(sw[static_cast<std::size_t>(p)]);
                if (!used_positions[w].insert(p).second) {
                    throw invariant_error("floor intervals overlap on circle " +
                                          std::to_string(w));
                }
                if (ladder_set.count(sw[static_cast<std::size_t>(p)])) {
                    ladder_order.push_back(sw[static_cast<std::size_t>(p)]);
                }
                if (p == p_last) break;
            }
            if (ladder_order != ladder_list) {
                throw invariant_error("ladders do not line up between adjacent floors");
            }

            for (const int crossing : ladder_list) {
                castle.ladders.push_back({crossing, floor.id, next.id});
            }
            castle.floors.push_back(next);
        }
    }

    // Towers: maximal chains from the ground to each floor nothing stands on.
    std::set<int> has_upper;
    for (const Floor& f : castle.floors) {
        if (f.lower_floor >= 0) has_upper.insert(f.lower_floor);
    }
    for (const Floor& f : castle.floors) {
        if (has_upper.count(f.id)) continue;
        std::vector<int> chain;
        for (int cur = f.id; cur >= 0; cur = castle.floors[static_cast<std::size_t>(cur)].lower_floor) {
            chain.push_back(cur);
        }
        std::reverse(chain.begin(), chain.end());
        std::set<int> hosts;
        for (const int fid : chain) {
            if (!hosts.insert(castle.floors[static_cast<std::size_t>(fid)].host).second) {
                throw invariant_error("tower visits a circle twice");
            }
        }
        if (chain.size() > s.circles.size()) {
            throw invariant_error("tower taller than the number of circles");
        }
        castle.towers.push_back(std::move(chain));
    }

    return castle;
}

TrapFreeSearch find_trap_free_castle(const Diagram& d, const SeifertData& s,
                                     const Arrangement& a) {
    TrapFreeSearch search;
    if (s.circles.empty()) {
        search.castle = build_castle(d, s, a, -1);
        return search;
    }

    const auto descend_to_innermost = [&](int c) {
        while (!a.nesting_children[static_cast<std::size_t>(c)].empty()) {
            const auto& kids = a.nesting_children[static_cast<std::size_t>(c)];
            c = *std::min_element(kids.begin(), kids.end());
        }
        return c;
    };

    int base = -1;
    for (int c = 0; c < static_cast<int>(s.circles.size()); ++c) {
        if (a.nesting_children[static_cast<std::size_t>(c)].empty()) {
            base = c;
            break;
        }
    }
    if (base < 0) throw invariant_error("nesting forest has no leaf");

    std::set<int> tried;
    while (true) {
        if (!tried.insert(base).second) {
            throw invariant_error("castle search revisited a base circle");
        }
        search.bases_tried.push_back(base);
        search.castle = build_castle(d, s, a, base);
        if (search.castle.trapped.empty()) return search;
        if (search.rebase_steps >= static_cast<int>(s.circles.size())) {
            throw invariant_error("castle search exceeded the circle count");
        }
        search.rebase_steps += 1;
        base = descend_to_innermost(search.castle.trapped.front().circle);
    }
}

namespace {

// Walk the component of `start` following the mixed successor (smoothed at
// crossings in `omega`, straight through elsewhere); whenever a crossing is
// reached a second time, add it to `omega` and restart.  Returns the
// crossings added.
std::vector<int> component_loop_walk(const Diagram& d,
                                     const std::map<int, Occurrence>& cons,
                                     int start, std::set<int>& omega) {
    std::vector<int> added;
    while (true) {
        std::set<int> visited;
        int pos = start;
        bool fresh = true;
        bool revisit = false;
        while (true) {
            if (!fresh && pos == start) break;
            fresh = false;
            const Occurrence occ = cons.at(pos);
            const Crossing& x = d.xs[static_cast<std::size_t>(occ.crossing)];
            const bool via_under = occ.slot == 0;
            const int through =
                via_under ? x.e[2] : x.e[static_cast<std::size_t>(over_out_slot(x.sign))];
            const int smoothed =
                via_under ? x.e[static_cast<std::size_t>(over_out_slot(x.sign))] : x.e[2];
            if (omega.count(occ.crossing)) {
                pos = smoothed;
            } else if (visited.count(occ.crossing)) {
                omega.insert(occ.crossing);
                added.push_back(occ.crossing);
                revisit = true;
                break;
            } else {
                visited.insert(occ.crossing);
                pos = through;
            }
        }
        if (!revisit) break;
    }
    return added;
}

struct EngineAcc {
    int gamma = 0;
    int writhe_removed = 0;
    int t = 0;
    int t_minus = 0;
    std::vector<int> loop_counts;
    int loop_sign_sum = 0;
};

enum class Mark : char { Intact, Kept, Smoothed };

struct Engine {
    TreeKind kind;
    bool record;
    ResolveTree out;

    void phase(Diagram d, EngineAcc acc, Poly mono, int depth);
    void walk(const Diagram& d, const std::map<int, Occurrence>& cons, int start,
              int pos, bool fresh, std::vector<Mark> marks, std::vector<char> flips,
              EngineAcc acc, Poly mono, int depth, bool keep_over);
    void finish(const Diagram& d, int start, const std::vector<Mark>& marks,
                const std::vector<char>& flips, EngineAcc acc, Poly mono, int depth);
};

void Engine::phase(Diagram d, EngineAcc acc, Poly mono, int depth) {
    d.renormalize();
    if (d.xs.empty()) {
        const int gamma = acc.gamma + d.free_loops;
        if (gamma == 0) throw invariant_error("phase recursion lost every component");
        LeafRecord leaf;
        leaf.gamma = gamma;
        leaf.writhe_removed = acc.writhe_removed;
        leaf.t = acc.t;
        leaf.t_minus = acc.t_minus;
        leaf.loop_counts = acc.loop_counts;
        leaf.loop_sign_sum = acc.loop_sign_sum;
        out.leaves.push_back(std::move(leaf));
        out.poly += mono * Poly::delta_pow(gamma - 1);
        return;
    }
    const SeifertData s = seifert(d);
    const Arrangement a = arrangement(d, s);
    const TrapFreeSearch search = find_trap_free_castle(d, s, a);
    const int base = search.castle.base_circle;
    const bool base_clockwise = a.clockwise[static_cast<std::size_t>(base)];
    const bool keep_over = (kind == TreeKind::P) ? base_clockwise : !base_clockwise;
    const auto cons = d.consumers();
    const int start = search.castle.start_arc;
    walk(d, cons, start, start, true, std::vector<Mark>(d.xs.size(), Mark::Intact),
         std::vector<char>(d.xs.size(), 0), std::move(acc), std::move(mono), depth,
         keep_over);
}

void Engine::walk(const Diagram& d, const std::map<int, Occurrence>& cons, int start,
                  int pos, bool fresh, std::vector<Mark> marks, std::vector<char> flips,
                  EngineAcc acc, Poly mono, int depth, bool keep_over) {
    while (true) {
        if (!fresh && pos == start) {
            finish(d, start, marks, flips, std::move(acc), std::move(mono), depth);
            return;
        }
        fresh = false;
        const Occurrence occ = cons.at(pos);
        const std::size_t ci = static_cast<std::size_t>(occ.crossing);
        const Crossing& x = d.xs[ci];
        const bool via_under = occ.slot == 0;
        const int through =
            via_under ? x.e[2] : x.e[static_cast<std::size_t>(over_out_slot(x.sign))];
        const int smoothed =
            via_under ? x.e[static_cast<std::size_t>(over_out_slot(x.sign))] : x.e[2];
        switch (marks[ci]) {
        case Mark::Smoothed:
            pos = smoothed;
            break;
        case Mark::Kept:
            pos = through;
            break;
        case Mark::Intact: {
            const bool over_now = !via_under;
            if (over_now == keep_over) {
                marks[ci] = Mark::Kept;
                pos = through;
                break;
            }
            const int sign = x.sign;
            {
                auto m2 = marks;
                auto f2 = flips;
                m2[ci] = Mark::Kept;
                f2[ci] = 1;
                if (record) out.lines.push_back({depth, occ.crossing, true, flip_monomial(sign)});
                walk(d, cons, start, through, false, std::move(m2), std::move(f2), acc,
                     mono * flip_factor(sign), depth + 1, keep_over);
            }
            {
                auto m2 = marks;
                auto f2 = flips;
                m2[ci] = Mark::Smoothed;
                EngineAcc a2 = acc;
                a2.t += 1;
                if (sign < 0) a2.t_minus += 1;
                if (record) out.lines.push_back({depth, occ.crossing, false, smooth_monomial(sign)});
                walk(d, cons, start, smoothed, false, std::move(m2), std::move(f2),
                     std::move(a2), mono * smooth_factor(sign), depth + 1, keep_over);
            }
            return;
        }
        }
    }
}

void Engine::finish(const Diagram& d, int start, const std::vector<Mark>& marks,
                    const std::vector<char>& flips, EngineAcc acc, Poly mono, int depth) {
    Diagram m = d;
    for (std::size_t ci = 0; ci < flips.size(); ++ci) {
        if (flips[ci]) m.flip(ci);
    }
    std::map<int, int> alias;
    for (std::size_t ci = marks.size(); ci-- > 0;) {
        if (marks[ci] == Mark::Smoothed) m.smooth(ci, &alias);
    }
    const int live_start = Diagram::resolve_alias(alias, start);
    const auto cons = m.consumers();
    if (cons.count(live_start)) {
        std::set<int> omega;
        const std::vector<int> loops = component_loop_walk(m, cons, live_start, omega);
        int loop_signs = 0;
        for (const int ci : loops) {
            loop_signs += m.xs[static_cast<std::size_t>(ci)].sign;
        }
        const int removed = m.remove_component(m.component_of(live_start));
        acc.gamma += 1;
        acc.writhe_removed += removed;
        acc.loop_counts.push_back(static_cast<int>(loops.size()));
        acc.loop_sign_sum += loop_signs;
    }
    // Otherwise the walked component closed into a crossing-free loop while
    // smoothing; it stays in free_loops and is counted at the leaf.
    phase(std::move(m), std::move(acc), std::move(mono), depth);
}

}  // namespace

ResolveTree resolve_tree(const Diagram& d, TreeKind kind, bool record_lines) {
    if (d.xs.empty() && d.free_loops == 0) {
        throw computation_error("empty diagram has no polynomial");
    }
    Engine engine{kind, record_lines, {}};
    engine.phase(d, {}, Poly::one(), 0);
    return std::move(engine.out);
}

ISDecomposition is_decomposition(const Diagram& d, const std::vector<int>& starts) {
    const auto comps = d.components();
    std::map<int, int> comp_of;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (const int arc : comps[i]) comp_of[arc] = static_cast<int>(i);
    }
    if (starts.size() != comps.size()) {
        throw computation_error("need exactly one start arc per component");
    }
    std::set<int> covered;
    for (const int arc : starts) {
        const auto it = comp_of.find(arc);
        if (it == comp_of.end()) {
            throw computation_error("start arc " + std::to_string(arc) +
                                    " is not in the diagram");
        }
        if (!covered.insert(it->second).second) {
            throw computation_error("two start arcs lie on the same component");
        }
    }

    ISDecomposition out;
    out.free_loops = d.free_loops;
    const auto cons = d.consumers();
    std::set<int> omega;
    for (const int start : starts) {
        const std::vector<int> added = component_loop_walk(d, cons, start, omega);
        out.per_component_loops.push_back(static_cast<int>(added.size()));
        for (const int ci : added) {
            out.loop_crossings.push_back(ci);
            out.loop_sign_sum += d.xs[static_cast<std::size_t>(ci)].sign;
        }
    }

    // Cycles of the final mixed successor map.
    std::map<int, int> succ;
    for (std::size_t ci = 0; ci < d.xs.size(); ++ci) {
        const Crossing& x = d.xs[ci];
        const int o_in = x.e[static_cast<std::size_t>(over_in_slot(x.sign))];
        const int o_out = x.e[static_cast<std::size_t>(over_out_slot(x.sign))];
        if (omega.count(static_cast<int>(ci))) {
            succ[x.e[0]] = o_out;
            succ[o_in] = x.e[2];
        } else {
            succ[x.e[0]] = x.e[2];
            succ[o_in] = o_out;
        }
    }
    std::set<int> seen;
    for (const auto& [arc, next] : succ) {
        (void)next;
        if (seen.count(arc)) continue;
        std::vector<int> cycle;
        for (int cur = arc; !seen.count(cur); cur = succ.at(cur)) {
            seen.insert(cur);
            cycle.push_back(cur);
        }
        out.circles.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> seifert_walk(const SeifertData& s, const std::vector<int>& circle_arcs) {
    std::vector<int> walk;
    for (const int arc : circle_arcs) {
        const int c = s.circle_of.at(arc);
        if (walk.empty() || walk.back() != c) walk.push_back(c);
    }
    while (walk.size() > 1 && walk.front() == walk.back()) walk.pop_back();
    return walk;
}

bool walk_contains_cycle(const std::vector<int>& walk) {
    const int length = static_cast<int>(walk.size());
    if (length < 3) return false;
    std::vector<int> doubled(walk);
    doubled.insert(doubled.end(), walk.begin(), walk.end());
    for (int i = 0; i < length; ++i) {
        std::set<int> seen{doubled[static_cast<std::size_t>(i)]};
        for (int j = i + 1; j <= i + length; ++j) {
            const int v = doubled[static_cast<std::size_t>(j)];
            if (v == doubled[static_cast<std::size_t>(i)]) {
                if (j - i >= 3) return true;
                break;
            }
            if (!seen.insert(v).second) break;
        }
    }
    return false;
}

}  // namespace braidix
