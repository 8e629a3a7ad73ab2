#include "braidix/skein.hpp"

#include <map>

#include "braidix/errors.hpp"

namespace braidix {

namespace {

struct WalkStop {
    bool finished;    // walked all the way around the component
    int crossing;     // branch crossing when !finished
};

// Walk the component of arc `start` through the diagram in descending style:
// pass crossings met over first (marking them kept) and crossings already
// marked; stop at the first crossing met under before being met over.
WalkStop descending_walk(const Diagram& d, int start) {
    auto cons = d.consumers();
    std::vector<char> seen(d.xs.size(), 0);
    int cur = start;
    while (true) {
        const Occurrence occ = cons.at(cur);
        const Crossing& x = d.xs[static_cast<std::size_t>(occ.crossing)];
        const bool under = occ.slot == 0;
        if (!seen[static_cast<std::size_t>(occ.crossing)] && under) {
            return {false, occ.crossing};
        }
        seen[static_cast<std::size_t>(occ.crossing)] = 1;
        cur = under ? x.e[2] : x.e[static_cast<std::size_t>(over_out_slot(x.sign))];
        if (cur == start) return {true, -1};
    }
}

using Memo = std::map<std::vector<int>, Poly>;

Poly homfly_rec(Diagram d, Memo& memo) {
    d.renormalize();
    if (d.xs.empty()) {
        if (d.free_loops == 0) {
            throw invariant_error("recursion reached a diagram with no components");
        }
        return Poly::delta_pow(d.free_loops - 1);
    }
    const auto key = d.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Poly result;
    const WalkStop stop = descending_walk(d, 1);
    if (stop.finished) {
        // The walked component is a descending unknot lying over everything
        // else: split it off as a separate trivial loop.
        Diagram rest = d;
        rest.remove_component(rest.component_of(1));
        rest.free_loops += 1;
        result = homfly_rec(std::move(rest), memo);
    } else {
        const int sign = d.xs[static_cast<std::size_t>(stop.crossing)].sign;
        Diagram flipped = d;
        flipped.flip(static_cast<std::size_t>(stop.crossing));
        Diagram smoothed = d;
        smoothed.smooth(static_cast<std::size_t>(stop.crossing));
        result = flip_factor(sign) * homfly_rec(std::move(flipped), memo) +
                 smooth_factor(sign) * homfly_rec(std::move(smoothed), memo);
    }
    memo.emplace(key, result);
    return result;
}

GenericTree tree_rec(Diagram d, int depth) {
    d.renormalize();
    if (d.xs.empty()) {
        if (d.free_loops == 0) {
            throw invariant_error("recursion reached a diagram with no components");
        }
        return {Poly::delta_pow(d.free_loops - 1), {}};
    }
    const WalkStop stop = descending_walk(d, 1);
    if (stop.finished) {
        Diagram rest = d;
        rest.remove_component(rest.component_of(1));
        rest.free_loops += 1;
        return tree_rec(std::move(rest), depth);
    }
    const int sign = d.xs[static_cast<std::size_t>(stop.crossing)].sign;
    Diagram flipped = d;
    flipped.flip(static_cast<std::size_t>(stop.crossing));
    Diagram smoothed = d;
    smoothed.smooth(static_cast<std::size_t>(stop.crossing));
    GenericTree left = tree_rec(std::move(flipped), depth + 1);
    GenericTree right = tree_rec(std::move(smoothed), depth + 1);
    GenericTree out;
    out.poly = flip_factor(sign) * left.poly + smooth_factor(sign) * right.poly;
    out.lines.push_back({depth, stop.crossing, true, flip_monomial(sign)});
    out.lines.insert(out.lines.end(), left.lines.begin(), left.lines.end());
    out.lines.push_back({depth, stop.crossing, false, smooth_monomial(sign)});
    out.lines.insert(out.lines.end(), right.lines.begin(), right.lines.end());
    return out;
}

}  // namespace

Poly homfly(const Diagram& d) {
    if (d.xs.empty() && d.free_loops == 0) {
        throw computation_error("empty diagram has no polynomial");
    }
    Memo memo;
    return homfly_rec(d, memo);
}

GenericTree homfly_tree(const Diagram& d) {
    if (d.xs.empty() && d.free_loops == 0) {
        throw computation_error("empty diagram has no polynomial");
    }
    return tree_rec(d, 0);
}

int mfw_lower_bound(const Poly& p) {
    if (p.is_zero()) {
        throw computation_error("breadth bound undefined for the zero polynomial");
    }
    const int span = p.a_span();
    if (span % 2 != 0) {
        throw computation_error("exponent span " + std::to_string(span) +
                                " is odd; expected an even span");
    }
    return span / 2 + 1;
}

}  // namespace braidix
