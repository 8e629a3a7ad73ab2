#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidix/diagram.hpp"

namespace braidix {

// Edge of the circle graph: circles u < v joined by `weight` crossings,
// `pos` of them positive and `neg` negative.
struct GsEdge {
    int u = 0, v = 0;
    int weight = 0, pos = 0, neg = 0;
};

struct SeifertStats {
    int tau_plus = 0;     // positive crossings in the diagram
    int tau_minus = 0;    // negative crossings
    int sigma_plus = 0;   // edges carrying at least one positive crossing
    int sigma_minus = 0;  // edges carrying at least one negative crossing
};

struct SeifertData {
    // Cycles of the smoothed successor map, each rotated to its smallest
    // arc, ordered by smallest arc.  Crossing-free loops are counted
    // separately in free_loops.
    std::vector<std::vector<int>> circles;
    std::map<int, int> circle_of;  // arc -> circle index
    // sites[c][i] is the crossing where circle c hops from circles[c][i] to
    // the next arc; the site order follows the circle.
    std::vector<std::vector<int>> sites;
    std::vector<GsEdge> edges;  // sorted by (u, v)
    SeifertStats stats;
    int free_loops = 0;

    int total_circles() const {
        return static_cast<int>(circles.size()) + free_loops;
    }
    const GsEdge* edge_between(int u, int v) const;
};

SeifertData seifert(const Diagram& d);

// Planar data of the circle family: complement regions, the region tree,
// the orientation of each circle, and the nesting forest.
struct Arrangement {
    Faces faces;
    std::vector<int> region_of_face;  // face id -> region id
    int num_regions = 0;
    int outer_region = -1;
    std::vector<int> left_region;   // per circle: region on its left side
    std::vector<int> right_region;  // per circle: region on its right side
    std::vector<bool> clockwise;    // per circle: interior lies on the right
    std::vector<int> region_depth;  // distance from the outer region in the
                                    // region tree
    std::vector<int> region_parent_circle;  // circle crossed toward the outer
                                            // region (-1 at the root)
    std::vector<int> nesting_parent;        // per circle, -1 when outermost
    std::vector<std::vector<int>> nesting_children;

    // Region immediately inside / outside the circle.
    int region_inside(int circle) const;
    int region_outside(int circle) const;
    // True when `inner` lies strictly inside `outer` (any nesting depth).
    bool inside(int inner, int outer) const;
};

Arrangement arrangement(const Diagram& d, const SeifertData& s);

// Deterministic Graphviz rendering of the circle graph; edge labels are
// "weight:+pos/-neg".
std::string gs_dot(const SeifertData& s, const Arrangement& a);

}  // namespace braidix
