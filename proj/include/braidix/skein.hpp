#pragma once

#include <string>
#include <vector>

#include "braidix/diagram.hpp"
#include "braidix/poly.hpp"

namespace braidix {

// One decision edge of a resolving tree, for --dump-tree output.  The
// crossing id is the index of the crossing in the diagram of the tree node
// where the decision was taken (that diagram is renormalized, so ids are
// only meaningful within their own node).
struct TreeLine {
    int depth = 0;
    int crossing = 0;
    bool flip = false;  // false: smoothed
    std::string monomial;
};

// Factors multiplying the flipped and smoothed child polynomials when a
// resolving tree branches at a crossing of the given sign, and their
// canonical text forms for tree dumps.
inline Poly flip_factor(int sign) { return Poly::mono(sign > 0 ? -2 : 2, 0); }
inline Poly smooth_factor(int sign) {
    return sign > 0 ? Poly::mono(-1, 1) : Poly::mono(1, 1, -1);
}
inline std::string flip_monomial(int sign) { return sign > 0 ? "a^-2" : "a^2"; }
inline std::string smooth_monomial(int sign) { return sign > 0 ? "a^-1*z" : "-a*z"; }

// Skein-relation polynomial of an oriented link diagram, computed by a
// memoized descending-unknot recursion.  Throws computation_error for an
// empty diagram.
Poly homfly(const Diagram& d);

struct GenericTree {
    Poly poly;
    std::vector<TreeLine> lines;
};

// Same recursion without memoization, recording every branch decision.
GenericTree homfly_tree(const Diagram& d);

// Lower bound for the braid index from the exponent breadth of the
// polynomial: span/2 + 1.  Throws computation_error when the polynomial is
// zero or the span is odd.
int mfw_lower_bound(const Poly& p);

}  // namespace braidix
