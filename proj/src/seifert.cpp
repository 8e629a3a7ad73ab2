#include "braidix/seifert.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "braidix/errors.hpp"

namespace braidix {

const GsEdge* SeifertData::edge_between(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges) {
        if (e.u == u && e.v == v) return &e;
    }
    return nullptr;
}

SeifertData seifert(const Diagram& d) {
    SeifertData s;
    s.free_loops = d.free_loops;
    auto succ = d.smoothed_succ();
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
        const int id = static_cast<int>(s.circles.size());
        for (int a : cycle) s.circle_of[a] = id;
        s.circles.push_back(std::move(cycle));
    }

    auto cons = d.consumers();
    s.sites.resize(s.circles.size());
    for (std::size_t c = 0; c < s.circles.size(); ++c) {
        for (int arc : s.circles[c]) {
            s.sites[c].push_back(cons.at(arc).crossing);
        }
    }

    std::map<std::pair<int, int>, GsEdge> edge_map;
    for (const auto& x : d.xs) {
        int u = s.circle_of.at(x.e[0]);
        int v = s.circle_of.at(x.e[over_in_slot(x.sign)]);
        if (u == v) {
            throw invariant_error("smoothed circle meets itself at a crossing");
        }
        if (u > v) std::swap(u, v);
        GsEdge& e = edge_map[{u, v}];
        e.u = u;
        e.v = v;
        ++e.weight;
        (x.sign > 0 ? e.pos : e.neg)++;
        (x.sign > 0 ? s.stats.tau_plus : s.stats.tau_minus)++;
    }
    for (auto& [key, e] : edge_map) {
        (void)key;
        if (e.pos > 0) ++s.stats.sigma_plus;
        if (e.neg > 0) ++s.stats.sigma_minus;
        s.edges.push_back(e);
    }
    return s;
}

namespace {

struct RegionUF {
    std::vector<int> parent;
    explicit RegionUF(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Arrangement::region_inside(int circle) const {
    const int l = left_region[static_cast<std::size_t>(circle)];
    const int r = right_region[static_cast<std::size_t>(circle)];
    return region_depth[static_cast<std::size_t>(l)] >
                   region_depth[static_cast<std::size_t>(r)]
               ? l
               : r;
}

int Arrangement::region_outside(int circle) const {
    const int l = left_region[static_cast<std::size_t>(circle)];
    const int r = right_region[static_cast<std::size_t>(circle)];
    return region_depth[static_cast<std::size_t>(l)] >
                   region_depth[static_cast<std::size_t>(r)]
               ? r
               : l;
}

bool Arrangement::inside(int inner, int outer) const {
    int cur = nesting_parent[static_cast<std::size_t>(inner)];
    while (cur != -1) {
        if (cur == outer) return true;
        cur = nesting_parent[static_cast<std::size_t>(cur)];
    }
    return false;
}

Arrangement arrangement(const Diagram& d, const SeifertData& s) {
    Arrangement a;
    a.faces = d.faces();
    if (d.xs.empty()) {
        a.num_regions = 1;
        a.outer_region = 0;
        a.region_depth = {0};
        a.region_parent_circle = {-1};
        return a;
    }

    const int num_faces = static_cast<int>(a.faces.orbits.size());
    RegionUF uf(num_faces);
    for (std::size_t i = 0; i < d.xs.size(); ++i) {
        const int ci = static_cast<int>(i);
        if (d.xs[i].sign > 0) {
            uf.unite(a.faces.face_of.at({ci, 0}), a.faces.face_of.at({ci, 2}));
        } else {
            uf.unite(a.faces.face_of.at({ci, 1}), a.faces.face_of.at({ci, 3}));
        }
    }
    a.region_of_face.resize(static_cast<std::size_t>(num_faces));
    std::map<int, int> compress;
    for (int f = 0; f < num_faces; ++f) {
        const int root = uf.find(f);
        auto it = compress.find(root);
        if (it == compress.end()) {
            it = compress.emplace(root, static_cast<int>(compress.size())).first;
        }
        a.region_of_face[static_cast<std::size_t>(f)] = it->second;
    }
    a.num_regions = static_cast<int>(compress.size());
    a.outer_region = a.region_of_face[static_cast<std::size_t>(a.faces.outer)];

    const int num_circles = static_cast<int>(s.circles.size());
    if (a.num_regions != num_circles + 1) {
        throw invariant_error("circle arrangement has " +
                              std::to_string(a.num_regions) + " regions for " +
                              std::to_string(num_circles) + " circles");
    }

    // Sides of each circle: the face at an arc's emitting end lies to the
    // arc's right, the face at its consuming end to its left.
    auto cons = d.consumers();
    auto emit = d.emitters();
    a.left_region.assign(static_cast<std::size_t>(num_circles), -1);
    a.right_region.assign(static_cast<std::size_t>(num_circles), -1);
    for (int c = 0; c < num_circles; ++c) {
        for (int arc : s.circles[static_cast<std::size_t>(c)]) {
            const auto e = emit.at(arc);
            const auto k = cons.at(arc);
            const int right =
                a.region_of_face[static_cast<std::size_t>(a.faces.face_of.at({e.crossing, e.slot}))];
            const int left =
                a.region_of_face[static_cast<std::size_t>(a.faces.face_of.at({k.crossing, k.slot}))];
            auto& rslot = a.right_region[static_cast<std::size_t>(c)];
            auto& lslot = a.left_region[static_cast<std::size_t>(c)];
            if (rslot == -1) {
                rslot = right;
            } else if (rslot != right) {
                throw invariant_error("circle has inconsistent right regions");
            }
            if (lslot == -1) {
                lslot = left;
            } else if (lslot != left) {
                throw invariant_error("circle has inconsistent left regions");
            }
        }
        if (a.left_region[static_cast<std::size_t>(c)] ==
            a.right_region[static_cast<std::size_t>(c)]) {
            throw invariant_error("circle has the same region on both sides");
        }
    }

    // Region tree: regions as nodes, one edge per circle.
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(a.num_regions));  // (neighbor region, circle)
    for (int c = 0; c < num_circles; ++c) {
        const int l = a.left_region[static_cast<std::size_t>(c)];
        const int r = a.right_region[static_cast<std::size_t>(c)];
        adj[static_cast<std::size_t>(l)].push_back({r, c});
        adj[static_cast<std::size_t>(r)].push_back({l, c});
    }
    a.region_depth.assign(static_cast<std::size_t>(a.num_regions), -1);
    a.region_parent_circle.assign(static_cast<std::size_t>(a.num_regions), -1);
    std::deque<int> queue{a.outer_region};
    a.region_depth[static_cast<std::size_t>(a.outer_region)] = 0;
    int reached = 1;
    while (!queue.empty()) {
        const int r = queue.front();
        queue.pop_front();
        for (auto [nxt, c] : adj[static_cast<std::size_t>(r)]) {
            if (a.region_depth[static_cast<std::size_t>(nxt)] != -1) continue;
            a.region_depth[static_cast<std::size_t>(nxt)] =
                a.region_depth[static_cast<std::size_t>(r)] + 1;
            a.region_parent_circle[static_cast<std::size_t>(nxt)] = c;
            queue.push_back(nxt);
            ++reached;
        }
    }
    if (reached != a.num_regions) {
        throw invariant_error("region graph of the circle arrangement is disconnected");
    }

    a.clockwise.assign(static_cast<std::size_t>(num_circles), false);
    a.nesting_parent.assign(static_cast<std::size_t>(num_circles), -1);
    a.nesting_children.assign(static_cast<std::size_t>(num_circles), {});
    for (int c = 0; c < num_circles; ++c) {
        const int l = a.left_region[static_cast<std::size_t>(c)];
        const int r = a.right_region[static_cast<std::size_t>(c)];
        const int dl = a.region_depth[static_cast<std::size_t>(l)];
        const int dr = a.region_depth[static_cast<std::size_t>(r)];
        if (dl - dr != 1 && dr - dl != 1) {
            throw invariant_error("circle sides are not adjacent region-tree levels");
        }
        a.clockwise[static_cast<std::size_t>(c)] = dr > dl;  // interior on the right
        a.nesting_parent[static_cast<std::size_t>(c)] =
            a.region_parent_circle[static_cast<std::size_t>(a.region_outside(c))];
    }
    for (int c = 0; c < num_circles; ++c) {
        const int p = a.nesting_parent[static_cast<std::size_t>(c)];
        if (p != -1) a.nesting_children[static_cast<std::size_t>(p)].push_back(c);
    }
    return a;
}

std::string gs_dot(const SeifertData& s, const Arrangement& a) {
    std::ostringstream out;
    out << "graph seifert {\n";
    for (std::size_t c = 0; c < s.circles.size(); ++c) {
        out << "  c" << c << " [label=\"C" << c << " ("
            << (a.clockwise[c] ? "cw" : "ccw") << ")\"];\n";
    }
    for (int l = 0; l < s.free_loops; ++l) {
        out << "  o" << l << " [label=\"O" << l << "\"];\n";
    }
    for (const auto& e : s.edges) {
        out << "  c" << e.u << " -- c" << e.v << " [label=\"" << e.weight
            << ":+" << e.pos << "/-" << e.neg << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace braidix
