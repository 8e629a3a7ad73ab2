#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidix/diagram.hpp"
#include "braidix/seifert.hpp"
#include "json.hpp"

namespace braidix {

// A weight-one edge of the circle graph together with the crossing that
// realizes it.
struct MergeablePair {
    int u = 0;
    int v = 0;
    int crossing = -1;
};

// All weight-one edges, listed by ascending crossing id.
std::vector<MergeablePair> weight_one_pairs(const Diagram& d, const SeifertData& s);

struct MergeResult {
    Diagram diagram;
    bool nugatory = false;  // the pair was removed by undoing a kink
    int pokes = 0;          // crossing pairs added by the rerouted strand
};

// Merge the two circles of a weight-one edge into one: delete the crossing,
// join the under strand straight through, and reroute the over strand
// around the circle with fewer crossings, passing over every strand arm in
// its lane (each passage adds a writhe-neutral crossing pair).  When one
// circle of the pair carries no other crossing, the crossing is a kink and
// is undone instead.  The result has exactly one circle less and the same
// polynomial.  Throws computation_error when the pair is stale (the edge is
// not weight-one any more, or the crossing does not realize it).
MergeResult merge_pair(const Diagram& d, const MergeablePair& pair);

struct CriterionDecision {
    bool reduced = false;
    bool alternating = false;
    bool weight_one_free = false;
    std::string verdict;  // "b = n", "b < n", or "criterion inapplicable"
};

// The weight-one criterion: a reduced alternating diagram without
// weight-one edges realizes its braid index with its circle count; any
// diagram with a weight-one edge has braid index below its circle count.
CriterionDecision weight_one_criterion(const Diagram& d, const SeifertData& s);

// Largest set of weight-one edges whose pairwise distance in the circle
// graph is at least two (distance taken between nearest endpoints).  Up to
// `exhaustive_limit` weight-one edges the maximum is found by exhaustive
// search; beyond that a greedy scan in crossing order is used.
std::vector<MergeablePair> independent_mergeable_pairs(
    const Diagram& d, const SeifertData& s, std::size_t exhaustive_limit = 20);

// Bounds report: {"n", "lower", "upper", "exact", "homfly", "certificates"}.
// lower is the polynomial breadth bound; upper combines the circle count,
// the independent-pair bound n - m, and recursive reports on merged
// diagrams (each merge is checked to preserve the polynomial); exact is set
// when the bounds meet and null otherwise.
nlohmann::ordered_json braid_index_report(const Diagram& d);

}  // namespace braidix
