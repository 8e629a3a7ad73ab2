#pragma once

#include <map>
#include <set>
#include <vector>

#include "braidix/diagram.hpp"
#include "braidix/poly.hpp"
#include "braidix/seifert.hpp"
#include "braidix/skein.hpp"

namespace braidix {

// A floor is an interval of consecutive sites on one circle.  The ground
// floor covers its whole circle; every higher floor spans from the first to
// the last crossing it shares with the floor below it.
struct Floor {
    int id = 0;
    int level = 0;    // ground floor is level 0
    int host = -1;    // circle the floor lies on (-1 for a crossing-free base)
    std::vector<int> sites;         // crossing ids in circle order
    std::vector<int> down_ladders;  // subset of sites shared with lower_floor
    int lower_floor = -1;           // floor id this one stands on (-1 for ground)
    bool above_is_inside = false;   // whether "up" from this floor means the
                                    // inside of the host circle
};

struct Ladder {
    int crossing = -1;
    int lower_floor = -1;
    int upper_floor = -1;
};

// A circle attached to a floor from below: it hangs into the pocket between
// that floor and the one supporting it, so no floor can be built on it.
struct TrappedCircle {
    int circle = -1;
    int lower_floor = -1;
    int upper_floor = -1;
};

struct Castle {
    int base_circle = -1;
    int start_arc = -1;  // smallest arc on the base circle
    std::vector<Floor> floors;
    std::vector<Ladder> ladders;
    std::vector<TrappedCircle> trapped;
    std::vector<std::vector<int>> towers;  // maximal floor chains, ground first
};

// Build the castle over the given innermost base circle.  Throws
// computation_error when the base is not innermost.
Castle build_castle(const Diagram& d, const SeifertData& s, const Arrangement& a,
                    int base_circle);

struct TrapFreeSearch {
    Castle castle;
    int rebase_steps = 0;
    std::vector<int> bases_tried;
};

// Start from the smallest innermost circle; while the castle traps some
// circle, restart from an innermost circle inside (or equal to) the first
// trapped one.  Each step moves strictly inward, so it ends within the
// number of circles.
TrapFreeSearch find_trap_free_castle(const Diagram& d, const SeifertData& s,
                                     const Arrangement& a);

// Resolving-tree flavor: P applies the descending rule on clockwise ground
// circles and the ascending rule otherwise; N is the mirror choice.
enum class TreeKind { P, N };

// Bookkeeping of one leaf of the phase recursion.
struct LeafRecord {
    int gamma = 0;          // trivial components of the resolved diagram
    int writhe_removed = 0; // writhe of the resolved diagram
    int t = 0;              // smoothings along the path
    int t_minus = 0;        // smoothings of negative crossings along the path
    std::vector<int> loop_counts;  // loop crossings per removed component
    int loop_sign_sum = 0;
};

struct ResolveTree {
    Poly poly;
    std::vector<LeafRecord> leaves;
    std::vector<TreeLine> lines;  // only filled when record_lines is set
};

// Castle-guided resolving tree: phases walk the component of the trap-free
// ground circle's smallest arc, keeping crossings that match the phase rule
// and branching (flip + smooth) at the rest; finished components are split
// off and the recursion continues on what is left.
ResolveTree resolve_tree(const Diagram& d, TreeKind kind, bool record_lines = false);

// Partial smoothing of a diagram driven by per-component walks: walk each
// component from its start arc, and every time a crossing is reached for
// the second time, smooth it and restart the walk.  The cycles of the final
// mixed successor map are the decomposition's circles.
struct ISDecomposition {
    std::vector<std::vector<int>> circles;
    std::vector<int> loop_crossings;       // discovery order
    std::vector<int> per_component_loops;  // per walked component
    int loop_sign_sum = 0;
    int free_loops = 0;

    int count() const { return static_cast<int>(circles.size()) + free_loops; }
};

ISDecomposition is_decomposition(const Diagram& d, const std::vector<int>& starts);

// Circles a decomposition circle visits, consecutive repeats collapsed
// cyclically.
std::vector<int> seifert_walk(const SeifertData& s, const std::vector<int>& circle_arcs);

// Whether the cyclic walk contains a contiguous simple cycle (length >= 3).
bool walk_contains_cycle(const std::vector<int>& walk);

}  // namespace braidix
