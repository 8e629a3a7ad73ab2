#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidix {

// Slot layout of a crossing tuple X[a,b,c,d]: slots are numbered 0..3 for
// a,b,c,d, listed counterclockwise starting from the incoming under-strand.
// The under-strand enters at slot 0 and leaves at slot 2.  For a positive
// crossing the over-strand enters at slot 3 and leaves at slot 1; for a
// negative crossing it enters at slot 1 and leaves at slot 3.
inline int over_in_slot(int sign) { return sign > 0 ? 3 : 1; }
inline int over_out_slot(int sign) { return sign > 0 ? 1 : 3; }

struct Crossing {
    std::array<int, 4> e{};  // arc labels at slots 0..3
    int sign = 0;            // +1 or -1
};

// Where an arc label occurs in the tuple list.
struct Occurrence {
    int crossing = -1;
    int slot = -1;
};

// Complement regions of the underlying 4-valent plane graph.  Each "end" is
// a (crossing, slot) pair; an orbit element (v, s) stands for the corner of
// the face between slots s-1 and s of crossing v.
struct Faces {
    std::vector<std::vector<std::pair<int, int>>> orbits;
    std::map<std::pair<int, int>, int> face_of;  // end -> orbit index
    int outer = -1;   // orbit index of the unbounded face (-1 if no crossings)
    int total = 0;    // orbits plus two faces per free loop
};

class Diagram {
public:
    std::vector<Crossing> xs;
    int free_loops = 0;

    // Parse PD text: X[a,b,c,d] tuples, O tokens for crossing-free loops,
    // '#' comments.  Orientations/signs are inferred from the labels; all
    // structural problems raise parse_error with a source position.
    static Diagram parse(const std::string& text);

    std::size_t num_crossings() const { return xs.size(); }
    std::vector<int> arcs() const;  // sorted distinct arc labels
    int writhe() const;

    std::map<int, Occurrence> consumers() const;  // arc -> end where it enters a crossing
    std::map<int, Occurrence> emitters() const;   // arc -> end where it leaves a crossing
    std::map<int, int> strand_succ() const;       // next arc along the strand
    std::map<int, int> smoothed_succ() const;     // next arc after smoothing every crossing

    std::vector<std::vector<int>> components() const;  // strand cycles, each rotated to
                                                       // its smallest arc, sorted by it
    std::vector<int> component_of(int arc) const;

    Faces faces() const;
    bool is_alternating() const;
    bool is_reduced() const;

    // Structural soundness: every arc consumed once and emitted once, and
    // every connected piece of the 4-valent graph satisfies the sphere
    // Euler relation.  Throws computation_error describing the defect.
    void validate() const;

    // Exchange the over/under roles of the two strands at crossing ci.
    // The smoothed successor map is unchanged; the sign is negated.
    void flip(std::size_t ci);

    // Delete crossing ci and join the strands the oriented way (in-arc of
    // each passage keeps its label).  A passage whose two arcs coincide
    // closes into a crossing-free loop.  When `alias` is supplied it is used
    // and extended as the arc-relabeling union-find, letting callers compose
    // several smoothings and still resolve old arc labels afterwards.
    void smooth(std::size_t ci, std::map<int, int>* alias = nullptr);

    // Delete every crossing touched by the given strand cycle, fusing the
    // other strand at crossings the cycle crosses but does not own.  Returns
    // the sign sum of all deleted crossings.  The component itself is
    // dropped (not turned into a free loop); fused strands that close up do
    // increment free_loops.
    int remove_component(const std::vector<int>& comp_arcs);

    // Relabel arcs 1..N: components ordered by smallest old label, each
    // walked from its smallest old label along the strand.  Returns the
    // old->new mapping.
    std::map<int, int> renormalize();

    // Label-independent identity: renormalized, crossing order forgotten.
    std::vector<int> canonical_key() const;

    static int resolve_alias(const std::map<int, int>& alias, int arc);

private:
    void rewrite_labels(const std::map<int, int>& alias);
};

}  // namespace braidix
