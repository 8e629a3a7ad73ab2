#include "braidix/diagram.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "braidix/errors.hpp"

namespace braidix {

namespace {

struct RawCrossing {
    std::array<int, 4> e;
    int line;
    int col;
};

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
                advance();
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_blank();
        return pos_ >= text_.size();
    }

    char peek() const { return text_[pos_]; }
    int line() const { return line_; }
    int col() const { return col_; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void expect(char c, const char* what) {
        skip_ws_inline();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw parse_error(line_, col_, std::string("expected ") + what);
        }
        advance();
    }

    int read_label() {
        skip_ws_inline();
        int l = line_, c = col_;
        if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw parse_error(l, c, "expected arc label (positive integer)");
        }
        long value = 0;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000L) throw parse_error(l, c, "arc label too large");
            advance();
        }
        if (value == 0) throw parse_error(l, c, "arc labels start at 1");
        return static_cast<int>(value);
    }

private:
    void skip_ws_inline() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                text_[pos_] == '\n')) {
            advance();
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Union-find over arc labels 1..n.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) {
        for (int i = 0; i <= n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Diagram::resolve_alias(const std::map<int, int>& alias, int arc) {
    auto it = alias.find(arc);
    while (it != alias.end()) {
        arc = it->second;
        it = alias.find(arc);
    }
    return arc;
}

Diagram Diagram::parse(const std::string& text) {
    Scanner sc(text);
    std::vector<RawCrossing> raw;
    int free_loops = 0;
    while (!sc.done()) {
        char c = sc.peek();
        if (c == 'X') {
            int line = sc.line(), col = sc.col();
            sc.advance();
            sc.expect('[', "'[' after X");
            std::array<int, 4> e{};
            for (int i = 0; i < 4; ++i) {
                e[i] = sc.read_label();
                if (i < 3) sc.expect(',', "','");
            }
            sc.expect(']', "']'");
            raw.push_back({e, line, col});
        } else if (c == 'O') {
            sc.advance();
            ++free_loops;
        } else {
            throw parse_error(sc.line(), sc.col(),
                              std::string("unexpected character '") + c + "'");
        }
    }
    if (raw.empty() && free_loops == 0) {
        throw parse_error(1, 1, "empty input: no crossings or free loops");
    }

    Diagram d;
    d.free_loops = free_loops;
    if (raw.empty()) return d;

    const int n_arcs = static_cast<int>(raw.size()) * 2;
    std::vector<int> occurrence_count(n_arcs + 1, 0);
    for (const auto& rc : raw) {
        for (int lab : rc.e) {
            if (lab > n_arcs) {
                throw parse_error(rc.line, rc.col,
                                  "arc label " + std::to_string(lab) +
                                      " out of range: expected 1.." +
                                      std::to_string(n_arcs));
            }
            ++occurrence_count[lab];
        }
    }
    for (int lab = 1; lab <= n_arcs; ++lab) {
        if (occurrence_count[lab] != 2) {
            throw parse_error(1, 1,
                              "arc label " + std::to_string(lab) + " occurs " +
                                  std::to_string(occurrence_count[lab]) +
                                  " times; every label 1..N must occur exactly twice");
        }
    }

    // Group arcs into strand components: the two under arcs belong to one
    // strand, the two over arcs to another (possibly the same).
    UnionFind uf(n_arcs);
    for (const auto& rc : raw) {
        uf.unite(rc.e[0], rc.e[2]);
        uf.unite(rc.e[1], rc.e[3]);
    }
    std::map<int, std::pair<int, int>> block_range;  // root -> (min,max)
    for (int lab = 1; lab <= n_arcs; ++lab) {
        int root = uf.find(lab);
        auto it = block_range.find(root);
        if (it == block_range.end()) {
            block_range.emplace(root, std::make_pair(lab, lab));
        } else {
            it->second.first = std::min(it->second.first, lab);
            it->second.second = std::max(it->second.second, lab);
        }
    }
    // Each component must label a consecutive block, so block sizes must add
    // up: verify every block {lo..hi} contains exactly its own labels.
    std::vector<int> block_of(n_arcs + 1, -1);
    {
        int covered = 0;
        int block_id = 0;
        for (const auto& [root, range] : block_range) {
            (void)root;
            covered += range.second - range.first + 1;
            ++block_id;
        }
        (void)block_id;
        if (covered != n_arcs) {
            throw parse_error(1, 1, "component labels are not consecutive blocks");
        }
        for (const auto& [root, range] : block_range) {
            for (int lab = range.first; lab <= range.second; ++lab) {
                if (uf.find(lab) != root) {
                    throw parse_error(
                        1, 1,
                        "component labels are not consecutive blocks near arc " +
                            std::to_string(lab));
                }
                block_of[lab] = root;
            }
        }
    }
    auto succ = [&](int lab) {
        auto range = block_range.at(block_of[lab]);
        return lab == range.second ? range.first : lab + 1;
    };

    // Under-strand must advance from slot 0 to slot 2.
    for (const auto& rc : raw) {
        if (succ(rc.e[0]) != rc.e[2]) {
            throw parse_error(rc.line, rc.col,
                              "under-strand does not advance: expected X[a,b,c,d] "
                              "with c following a along its component");
        }
    }

    // Determine signs.  A positive crossing has b following d along the over
    // strand, a negative one has d following b.
    std::vector<int> signs(raw.size(), 0);
    std::vector<std::pair<bool, bool>> feasible(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& rc = raw[i];
        std::set<int> under{rc.e[0], rc.e[2]};
        std::set<int> over{rc.e[1], rc.e[3]};
        if (under == over && under.size() == 2) {
            throw parse_error(rc.line, rc.col,
                              "ambiguous over-strand orientation: the two strands "
                              "use the same pair of arc labels");
        }
        bool can_plus = (succ(rc.e[3]) == rc.e[1]);
        bool can_minus = (succ(rc.e[1]) == rc.e[3]);
        if (!can_plus && !can_minus) {
            throw parse_error(rc.line, rc.col,
                              "over-strand does not advance: neither b after d "
                              "nor d after b along its component");
        }
        feasible[i] = {can_plus, can_minus};
        if (can_plus != can_minus) signs[i] = can_plus ? 1 : -1;
    }

    // Propagate the remaining signs from arc consumer/emitter bookkeeping:
    // every arc is consumed exactly once and emitted exactly once overall.
    std::vector<int> consumed(n_arcs + 1, 0), emitted(n_arcs + 1, 0);
    auto account = [&](std::size_t i) {
        ++consumed[raw[i].e[0]];
        ++emitted[raw[i].e[2]];
        if (signs[i] != 0) {
            ++consumed[raw[i].e[over_in_slot(signs[i])]];
            ++emitted[raw[i].e[over_out_slot(signs[i])]];
        }
    };
    for (std::size_t i = 0; i < raw.size(); ++i) account(i);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (signs[i] != 0) continue;
            const int b = raw[i].e[1], dd = raw[i].e[3];
            int forced = 0;
            auto force = [&](int s) {
                if (forced == 0) {
                    forced = s;
                } else if (forced != s) {
                    throw parse_error(raw[i].line, raw[i].col,
                                      "inconsistent over-strand orientation");
                }
            };
            // If b is already consumed elsewhere it must be emitted here,
            // which makes slot 1 the over-strand exit: a positive crossing.
            if (consumed[b] >= 1) force(1);
            if (emitted[b] >= 1) force(-1);
            if (consumed[dd] >= 1) force(-1);
            if (emitted[dd] >= 1) force(1);
            if (forced != 0) {
                bool ok = forced > 0 ? feasible[i].first : feasible[i].second;
                if (!ok) {
                    throw parse_error(raw[i].line, raw[i].col,
                                      "inconsistent over-strand orientation");
                }
                signs[i] = forced;
                ++consumed[raw[i].e[over_in_slot(forced)]];
                ++emitted[raw[i].e[over_out_slot(forced)]];
                progress = true;
            }
        }
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (signs[i] == 0) {
            throw parse_error(raw[i].line, raw[i].col,
                              "ambiguous over-strand orientation");
        }
        d.xs.push_back(Crossing{raw[i].e, signs[i]});
    }

    try {
        d.validate();
    } catch (const computation_error& err) {
        throw parse_error(1, 1, err.what());
    }
    return d;
}

std::vector<int> Diagram::arcs() const {
    std::set<int> labels;
    for (const auto& x : xs) labels.insert(x.e.begin(), x.e.end());
    return {labels.begin(), labels.end()};
}

int Diagram::writhe() const {
    int w = 0;
    for (const auto& x : xs) w += x.sign;
    return w;
}

std::map<int, Occurrence> Diagram::consumers() const {
    std::map<int, Occurrence> result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int ci = static_cast<int>(i);
        result[xs[i].e[0]] = {ci, 0};
        result[xs[i].e[over_in_slot(xs[i].sign)]] = {ci, over_in_slot(xs[i].sign)};
    }
    return result;
}

std::map<int, Occurrence> Diagram::emitters() const {
    std::map<int, Occurrence> result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int ci = static_cast<int>(i);
        result[xs[i].e[2]] = {ci, 2};
        result[xs[i].e[over_out_slot(xs[i].sign)]] = {ci, over_out_slot(xs[i].sign)};
    }
    return result;
}

std::map<int, int> Diagram::strand_succ() const {
    std::map<int, int> succ;
    for (const auto& x : xs) {
        succ[x.e[0]] = x.e[2];
        succ[x.e[over_in_slot(x.sign)]] = x.e[over_out_slot(x.sign)];
    }
    return succ;
}

std::map<int, int> Diagram::smoothed_succ() const {
    std::map<int, int> succ;
    for (const auto& x : xs) {
        succ[x.e[0]] = x.e[over_out_slot(x.sign)];
        succ[x.e[over_in_slot(x.sign)]] = x.e[2];
    }
    return succ;
}

std::vector<std::vector<int>> Diagram::components() const {
    auto succ = strand_succ();
    std::vector<std::vector<int>> comps;
    std::set<int> visited;
    for (const auto& [arc, next] : succ) {
        (void)next;
        if (visited.count(arc)) continue;
        std::vector<int> cycle;
        int cur = arc;
        do {
            cycle.push_back(cur);
            visited.insert(cur);
            cur = succ.at(cur);
        } while (cur != arc);
        comps.push_back(std::move(cycle));
    }
    return comps;  // map iteration is ascending, so each cycle starts at its
                   // smallest arc and cycles are sorted by smallest arc
}

std::vector<int> Diagram::component_of(int arc) const {
    for (auto& comp : components()) {
        if (std::find(comp.begin(), comp.end(), arc) != comp.end()) return comp;
    }
    throw computation_error("arc " + std::to_string(arc) + " not in diagram");
}

Faces Diagram::faces() const {
    Faces f;
    if (xs.empty()) {
        f.total = 2 * free_loops;
        return f;
    }
    // Each arc occurs at exactly two ends; alpha swaps them.
    std::map<int, std::vector<std::pair<int, int>>> ends_of_arc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (int s = 0; s < 4; ++s) {
            ends_of_arc[xs[i].e[s]].push_back({static_cast<int>(i), s});
        }
    }
    auto alpha = [&](std::pair<int, int> end) {
        const auto& two = ends_of_arc.at(xs[end.first].e[end.second]);
        return two[0] == end ? two[1] : two[0];
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (int s = 0; s < 4; ++s) {
            std::pair<int, int> start{static_cast<int>(i), s};
            if (f.face_of.count(start)) continue;
            std::vector<std::pair<int, int>> orbit;
            std::pair<int, int> cur = start;
            do {
                f.face_of[cur] = static_cast<int>(f.orbits.size());
                orbit.push_back(cur);
                auto other = alpha(cur);
                cur = {other.first, (other.second + 1) % 4};
            } while (cur != start);
            f.orbits.push_back(std::move(orbit));
        }
    }
    // Outer face: most corners; ties to the smallest incident arc label.
    int best = -1, best_size = -1, best_arc = 0;
    for (std::size_t k = 0; k < f.orbits.size(); ++k) {
        int size = static_cast<int>(f.orbits[k].size());
        int min_arc = std::numeric_limits<int>::max();
        for (auto [ci, s] : f.orbits[k]) min_arc = std::min(min_arc, xs[ci].e[s]);
        if (size > best_size || (size == best_size && min_arc < best_arc)) {
            best = static_cast<int>(k);
            best_size = size;
            best_arc = min_arc;
        }
    }
    f.outer = best;
    f.total = static_cast<int>(f.orbits.size()) + 2 * free_loops;
    return f;
}

bool Diagram::is_alternating() const {
    auto cons = consumers();
    auto emit = emitters();
    for (int arc : arcs()) {
        const bool consumed_under = cons.at(arc).slot == 0;
        const bool emitted_under = emit.at(arc).slot == 2;
        if (consumed_under == emitted_under) return false;
    }
    return true;
}

bool Diagram::is_reduced() const {
    auto f = faces();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int ci = static_cast<int>(i);
        if (f.face_of.at({ci, 0}) == f.face_of.at({ci, 2})) return false;
        if (f.face_of.at({ci, 1}) == f.face_of.at({ci, 3})) return false;
    }
    return true;
}

void Diagram::validate() const {
    if (xs.empty()) return;
    std::map<int, int> consumed, emitted;
    for (const auto& x : xs) {
        if (x.sign != 1 && x.sign != -1) {
            throw computation_error("crossing with unset sign");
        }
        ++consumed[x.e[0]];
        ++consumed[x.e[over_in_slot(x.sign)]];
        ++emitted[x.e[2]];
        ++emitted[x.e[over_out_slot(x.sign)]];
    }
    for (int arc : arcs()) {
        if (consumed[arc] != 1 || emitted[arc] != 1) {
            throw computation_error("arc " + std::to_string(arc) +
                                    " is consumed " + std::to_string(consumed[arc]) +
                                    " times and emitted " +
                                    std::to_string(emitted[arc]) +
                                    " times; expected once each");
        }
    }
    // Euler relation per connected piece of the 4-valent graph.
    UnionFind piece(static_cast<int>(xs.size()));
    std::map<int, int> first_crossing_of_arc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (int lab : xs[i].e) {
            auto it = first_crossing_of_arc.find(lab);
            if (it == first_crossing_of_arc.end()) {
                first_crossing_of_arc[lab] = static_cast<int>(i);
            } else {
                piece.unite(it->second + 1, static_cast<int>(i) + 1);
            }
        }
    }
    std::map<int, int> verts, edges, face_count;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ++verts[piece.find(static_cast<int>(i) + 1)];
    }
    for (const auto& [arc, ci] : first_crossing_of_arc) {
        (void)arc;
        ++edges[piece.find(ci + 1)];
    }
    auto f = faces();
    for (const auto& orbit : f.orbits) {
        ++face_count[piece.find(orbit.front().first + 1)];
    }
    for (const auto& [root, v] : verts) {
        const int e = edges[root];
        const int fc = face_count[root];
        if (v - e + fc != 2) {
            throw computation_error(
                "diagram is not planar: a connected piece has V=" +
                std::to_string(v) + " E=" + std::to_string(e) + " F=" +
                std::to_string(fc));
        }
    }
}

void Diagram::flip(std::size_t ci) {
    Crossing& x = xs.at(ci);
    if (x.sign > 0) {
        x.e = {x.e[3], x.e[0], x.e[1], x.e[2]};  // rotate right
    } else {
        x.e = {x.e[1], x.e[2], x.e[3], x.e[0]};  // rotate left
    }
    x.sign = -x.sign;
}

void Diagram::rewrite_labels(const std::map<int, int>& alias) {
    for (auto& x : xs) {
        for (int& lab : x.e) lab = resolve_alias(alias, lab);
    }
}

void Diagram::smooth(std::size_t ci, std::map<int, int>* alias) {
    std::map<int, int> local;
    std::map<int, int>& a = alias ? *alias : local;
    const Crossing x = xs.at(ci);
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(ci));
    const std::array<std::pair<int, int>, 2> joins{
        std::make_pair(x.e[0], x.e[over_out_slot(x.sign)]),
        std::make_pair(x.e[over_in_slot(x.sign)], x.e[2]),
    };
    for (const auto& [in_arc, out_arc] : joins) {
        const int in_root = resolve_alias(a, in_arc);
        const int out_root = resolve_alias(a, out_arc);
        if (in_root == out_root) {
            ++free_loops;
        } else {
            a[out_root] = in_root;
        }
    }
    rewrite_labels(a);
}

int Diagram::remove_component(const std::vector<int>& comp_arcs) {
    const std::set<int> comp(comp_arcs.begin(), comp_arcs.end());
    int sign_sum = 0;
    std::vector<Crossing> kept;
    std::vector<std::pair<int, int>> joins;
    for (const auto& x : xs) {
        const bool under_in_comp = comp.count(x.e[0]) > 0;
        const bool over_in_comp = comp.count(x.e[over_in_slot(x.sign)]) > 0;
        if (!under_in_comp && !over_in_comp) {
            kept.push_back(x);
            continue;
        }
        sign_sum += x.sign;
        if (!under_in_comp) joins.emplace_back(x.e[0], x.e[2]);
        if (!over_in_comp) {
            joins.emplace_back(x.e[over_in_slot(x.sign)], x.e[over_out_slot(x.sign)]);
        }
    }
    xs = std::move(kept);
    std::map<int, int> alias;
    for (const auto& [in_arc, out_arc] : joins) {
        const int in_root = resolve_alias(alias, in_arc);
        const int out_root = resolve_alias(alias, out_arc);
        if (in_root == out_root) {
            ++free_loops;
        } else {
            alias[out_root] = in_root;
        }
    }
    rewrite_labels(alias);
    for (const auto& x : xs) {
        for (int lab : x.e) {
            if (comp.count(lab)) {
                throw invariant_error("arc survived removal of its component");
            }
        }
    }
    return sign_sum;
}

std::map<int, int> Diagram::renormalize() {
    std::map<int, int> mapping;
    if (xs.empty()) return mapping;
    int next = 1;
    for (const auto& comp : components()) {
        for (int arc : comp) mapping[arc] = next++;
    }
    // Plain substitution: mapping is a bijection, not a union-find.
    for (auto& x : xs) {
        for (int& lab : x.e) lab = mapping.at(lab);
    }
    return mapping;
}

std::vector<int> Diagram::canonical_key() const {
    Diagram copy = *this;
    copy.renormalize();
    std::vector<std::array<int, 5>> rows;
    rows.reserve(copy.xs.size());
    for (const auto& x : copy.xs) {
        rows.push_back({x.e[0], x.e[1], x.e[2], x.e[3], x.sign});
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> key;
    key.reserve(2 + rows.size() * 5);
    key.push_back(copy.free_loops);
    key.push_back(static_cast<int>(rows.size()));
    for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace braidix
