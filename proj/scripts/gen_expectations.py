#!/usr/bin/env python3
"""Generate the PD corpus and the frozen expectations file for the test suites.

Everything in here is a brute-force reference implementation, written
independently of the C++ library: naive traversals, dict-based Laurent
polynomials, an ascending-from-highest-label resolving tree for HOMFLY.
The outputs (corpus/*.pd and tests/data/expectations.json) are checked in.

Run from the repo root:  python3 scripts/gen_expectations.py
"""

import json
import os
import sys
from math import comb

# ---------------------------------------------------------------------------
# two-variable Laurent polynomials: dict (a_exp, z_exp) -> int
# ---------------------------------------------------------------------------

def pclean(p):
    return {k: v for k, v in p.items() if v}

def padd(p, q):
    r = dict(p)
    for k, v in q.items():
        r[k] = r.get(k, 0) + v
    return pclean(r)

def pmul(p, q):
    r = {}
    for (pa, pz), pv in p.items():
        for (qa, qz), qv in q.items():
            k = (pa + qa, pz + qz)
            r[k] = r.get(k, 0) + pv * qv
    return pclean(r)

def pmono(c, a, z):
    return {(a, z): c} if c else {}

def delta_pow(n):
    """((a - a^-1) * z^-1)^n, n >= 0."""
    r = {}
    for k in range(n + 1):
        r[(n - 2 * k, -n)] = (-1) ** k * comb(n, k)
    return r if n else {(0, 0): 1}

def canon_str(p):
    """Canonical text form shared with the C++ library (single source of truth
    for expected strings): terms by a-exp desc then z-exp desc."""
    if not p:
        return "0"
    out = []
    for (a, z) in sorted(p.keys(), key=lambda k: (-k[0], -k[1])):
        c = p[(a, z)]
        mag = abs(c)
        parts = []
        if mag != 1 or (a == 0 and z == 0):
            parts.append(str(mag))
        if a != 0:
            parts.append("a" if a == 1 else "a^%d" % a)
        if z != 0:
            parts.append("z" if z == 1 else "z^%d" % z)
        term = "*".join(parts)
        if not out:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append((" - " if c < 0 else " + ") + term)
    return "".join(out)

# ---------------------------------------------------------------------------
# diagrams: crossings are tuples (a,b,c,d) CCW from the incoming under-arc
# ---------------------------------------------------------------------------

class Diagram:
    def __init__(self, crossings, signs, loops=0):
        self.crossings = [tuple(t) for t in crossings]
        self.signs = list(signs)
        self.loops = loops

    def arcs(self):
        s = set()
        for t in self.crossings:
            s.update(t)
        return s

def over_in_slot(sign):
    return 3 if sign > 0 else 1

def over_out_slot(sign):
    return 1 if sign > 0 else 3

def occurrences(crossings):
    occ = {}
    for ci, t in enumerate(crossings):
        for s, arc in enumerate(t):
            occ.setdefault(arc, []).append((ci, s))
    return occ

def solve_signs(crossings):
    """Resolve crossing signs.

    Components are recovered by joining strand pairs {a,c} and {b,d}; each
    must occupy a consecutive label block, giving the cyclic successor map.
    A crossing's over orientation must satisfy b = succ(d) (sign +1) or
    d = succ(b) (sign -1).  Two-arc blocks satisfy both, so leftover
    crossings are settled by consume/emit propagation (slot a consumes,
    slot c emits, over-in consumes); residual freedom is an error.
    """
    occ = occurrences(crossings)
    for arc, os_ in occ.items():
        if len(os_) != 2:
            raise ValueError("arc %d used %d times" % (arc, len(os_)))
    labels = sorted(occ)
    if labels != list(range(1, len(labels) + 1)):
        raise ValueError("arc labels must be 1..N")
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b, c, d) in crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    blocks = {}
    for x in labels:
        blocks.setdefault(find(x), []).append(x)
    succ = {}
    for blk in blocks.values():
        blk.sort()
        if blk != list(range(blk[0], blk[-1] + 1)):
            raise ValueError("component arcs %s are not a consecutive block" % blk)
        for x in blk:
            succ[x] = blk[0] if x == blk[-1] else x + 1
    # variable per crossing: over_in_is_d (True -> sign +1)
    assign = [None] * len(crossings)
    for ci, (a, b, c, d) in enumerate(crossings):
        if succ[a] != c:
            raise ValueError("crossing %d under-strand %d->%d breaks orientation" % (ci, a, c))
        if {a, c} == {b, d} and len({a, b, c, d}) == 2:
            raise ValueError("crossing %d pairs a two-arc component with itself" % ci)
        plus = b == succ[d]
        minus = d == succ[b]
        if not plus and not minus:
            raise ValueError("crossing %d over-strand %s/%s matches no orientation" % (ci, b, d))
        if plus != minus:
            assign[ci] = plus

    def occ_kind(ci, s, val):
        # returns 'c' consume / 'e' emit given assignment val of crossing ci
        if s == 0:
            return "c"
        if s == 2:
            return "e"
        if val is None:
            return None
        if s == 3:
            return "c" if val else "e"
        return "e" if val else "c"

    # propagate: for each arc, its two occurrences must be one consume one emit
    changed = True
    while changed:
        changed = False
        for arc, os_ in occ.items():
            (c1, s1), (c2, s2) = os_
            k1 = occ_kind(c1, s1, assign[c1])
            k2 = occ_kind(c2, s2, assign[c2])
            if k1 and k2:
                if k1 == k2:
                    raise ValueError("arc %d consumed/emitted inconsistently" % arc)
                continue
            if k1 and not k2:
                want = "e" if k1 == "c" else "c"
                v = (want == "c") if s2 == 3 else (want == "e")
                if assign[c2] is None:
                    assign[c2] = v
                    changed = True
            elif k2 and not k1:
                want = "e" if k2 == "c" else "c"
                v = (want == "c") if s1 == 3 else (want == "e")
                if assign[c1] is None:
                    assign[c1] = v
                    changed = True
    if any(v is None for v in assign):
        raise ValueError("ambiguous over-strand orientation")
    return [1 if v else -1 for v in assign]

def strand_succ(d):
    """arc -> next arc following the link orientation."""
    nxt = {}
    for ci, t in enumerate(d.crossings):
        s = d.signs[ci]
        nxt[t[0]] = t[2]
        nxt[t[over_in_slot(s)]] = t[over_out_slot(s)]
    return nxt

def components(d):
    nxt = strand_succ(d)
    seen, comps = set(), []
    for a in sorted(nxt):
        if a in seen:
            continue
        cyc, x = [], a
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = nxt[x]
        comps.append(cyc)
    return comps

def validate(d):
    occ = occurrences(d.crossings)
    for ci, t in enumerate(d.crossings):
        s = d.signs[ci]
        # structural succession along components must match label succession
        pass
    comps = components(d)
    lab = {}
    for cyc in comps:
        lo = min(cyc)
        block = sorted(cyc)
        if block != list(range(block[0], block[0] + len(block))):
            raise ValueError("component block not consecutive: %s" % block)
        # orientation: succ(x) = x+1 with wrap
        nxt = strand_succ(d)
        for x in cyc:
            want = x + 1 if x != block[-1] else block[0]
            if nxt[x] != want:
                raise ValueError("label succession broken at arc %d" % x)
    faces_check(d)
    return True

def smoothed_succ(d):
    """arc -> next arc after smoothing every crossing (Seifert)."""
    nxt = {}
    for ci, t in enumerate(d.crossings):
        a, b, c, cc = t[0], t[1], t[2], t[3]
        if d.signs[ci] > 0:
            nxt[t[0]] = t[1]
            nxt[t[3]] = t[2]
        else:
            nxt[t[0]] = t[3]
            nxt[t[1]] = t[2]
    return nxt

def seifert_circles(d):
    nxt = smoothed_succ(d)
    seen, circles = set(), []
    for a in sorted(nxt):
        if a in seen:
            continue
        cyc, x = [], a
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = nxt[x]
        circles.append(cyc)
    circles.sort(key=lambda c: min(c))
    return circles

def seifert_graph(d):
    circles = seifert_circles(d)
    cid = {}
    for i, cyc in enumerate(circles):
        for a in cyc:
            cid[a] = i
    edges = {}
    for ci, t in enumerate(d.crossings):
        s = d.signs[ci]
        if s > 0:
            u, v = cid[t[0]], cid[t[3]]
        else:
            u, v = cid[t[0]], cid[t[1]]
        if u == v:
            raise ValueError("crossing %d joins a circle to itself" % ci)
        k = (min(u, v), max(u, v))
        w = edges.setdefault(k, [0, 0])
        if s > 0:
            w[0] += 1
        else:
            w[1] += 1
    return circles, edges

def seifert_stats(d):
    _, edges = seifert_graph(d)
    tp = sum(1 for s in d.signs if s > 0)
    tm = sum(1 for s in d.signs if s < 0)
    sp = sum(1 for w in edges.values() if w[0] > 0)
    sm = sum(1 for w in edges.values() if w[1] > 0)
    return tp, tm, sp, sm

def faces_check(d):
    """Orbits of sigma∘alpha; per connected piece Euler characteristic must be 2.
    Returns the number of faces (free loops contribute 2 each)."""
    occ = occurrences(d.crossings)
    alpha = {}
    for arc, os_ in occ.items():
        (c1, s1), (c2, s2) = os_
        alpha[(c1, s1)] = (c2, s2)
        alpha[(c2, s2)] = (c1, s1)
    # connected pieces of the 4-valent graph
    parent = list(range(len(d.crossings)))
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    def union(x, y):
        parent[find(x)] = find(y)
    for arc, os_ in occ.items():
        union(os_[0][0], os_[1][0])
    halfedges = [(ci, s) for ci in range(len(d.crossings)) for s in range(4)]
    seen = set()
    faces_per_piece = {}
    for h in halfedges:
        if h in seen:
            continue
        x = h
        while x not in seen:
            seen.add(x)
            c2, s2 = alpha[x]
            x = (c2, (s2 + 1) % 4)
        p = find(h[0])
        faces_per_piece[p] = faces_per_piece.get(p, 0) + 1
    total = 0
    for p, f in faces_per_piece.items():
        cs = [ci for ci in range(len(d.crossings)) if find(ci) == p]
        V = len(cs)
        E = 2 * V
        if V - E + f != 2:
            raise ValueError("piece not planar: V=%d F=%d" % (V, f))
        total += f
    return total + 2 * d.loops

def is_alternating(d):
    occ = occurrences(d.crossings)
    for arc, os_ in occ.items():
        kinds = set()
        for ci, s in os_:
            kinds.add("u" if s in (0, 2) else "o")
        if len(kinds) != 2:
            return False
    return len(d.crossings) > 0 or True

def writhe(d):
    return sum(d.signs)

# ---------------------------------------------------------------------------
# rewrites (with relabeling to the canonical consecutive scheme)
# ---------------------------------------------------------------------------

def relabel(crossings, signs, loops):
    """Renormalize arc labels: components ordered by smallest current label,
    each starting at its smallest current label."""
    d = Diagram(crossings, signs, loops)
    comps = components(d) if crossings else []
    comps.sort(key=lambda c: min(c))
    m = {}
    nxt_label = 1
    for cyc in comps:
        i = cyc.index(min(cyc))
        order = cyc[i:] + cyc[:i]
        for a in order:
            m[a] = nxt_label
            nxt_label += 1
    new_cross = [tuple(m[a] for a in t) for t in crossings]
    return Diagram(new_cross, signs, loops)

def flip(d, ci):
    t = list(d.crossings[ci])
    s = d.signs[ci]
    if s > 0:
        nt = (t[3], t[0], t[1], t[2])
    else:
        nt = (t[1], t[2], t[3], t[0])
    cross = list(d.crossings)
    cross[ci] = nt
    signs = list(d.signs)
    signs[ci] = -s
    return Diagram(cross, signs, d.loops)

def smooth(d, ci):
    t = d.crossings[ci]
    s = d.signs[ci]
    # join (a -> over_out) and (over_in -> c)
    pairs = [(t[0], t[over_out_slot(s)]), (t[over_in_slot(s)], t[2])]
    cross = [list(x) for x in d.crossings]
    signs = list(d.signs)
    del cross[ci]
    del signs[ci]
    loops = d.loops
    alias = {}
    def res(x):
        while x in alias:
            x = alias[x]
        return x
    for x, y in pairs:
        x, y = res(x), res(y)
        if x == y:
            loops += 1
        else:
            # merged arc keeps x's identity; y's occurrences become x
            alias[y] = x
    for t2 in cross:
        for i in range(4):
            t2[i] = res(t2[i])
    return relabel(cross, signs, loops)

# ---------------------------------------------------------------------------
# HOMFLY oracle: ascending resolving tree, phase base at highest arc label
# ---------------------------------------------------------------------------

def freeze(d):
    return (tuple(sorted(zip(d.crossings, d.signs))), d.loops)

def homfly(d, memo=None):
    if memo is None:
        memo = {}
    d = relabel(d.crossings, d.signs, d.loops)
    return _homfly_rec(d, memo)

def _homfly_rec(d, memo):
    if not d.crossings:
        assert d.loops >= 1
        return delta_pow(d.loops - 1)
    key = freeze(d)
    if key in memo:
        return memo[key]
    nxt = strand_succ(d)
    consumer = {}
    for ci, t in enumerate(d.crossings):
        consumer[t[0]] = (ci, "u")
        consumer[t[over_in_slot(d.signs[ci])]] = (ci, "o")
    out_arc = {}
    for ci, t in enumerate(d.crossings):
        out_arc[(ci, "u")] = t[2]
        out_arc[(ci, "o")] = t[over_out_slot(d.signs[ci])]

    start = max(d.arcs())
    pos = start
    visited = set()
    result = None
    while True:
        ci, role = consumer[pos]
        if ci in visited:
            pos = out_arc[(ci, role)]
        else:
            meets_under = role == "u"
            if meets_under:  # ascending: keep under-first crossings
                visited.add(ci)
                pos = out_arc[(ci, role)]
            else:
                s = d.signs[ci]
                if s > 0:
                    mf, ms = pmono(1, -2, 0), pmono(1, -1, 1)
                else:
                    mf, ms = pmono(1, 2, 0), pmono(-1, 1, 1)
                pf = _homfly_rec(relabel(*_raw(flip(d, ci))), memo)
                ps = _homfly_rec(smooth(d, ci), memo)
                result = padd(pmul(mf, pf), pmul(ms, ps))
                break
        if pos == start:
            # Component finished: every crossing it touches was first met at
            # the under slot, so it is an unknot lying below the rest.  Delete
            # it; at each deleted mixed crossing the other strand's in/out
            # arcs fuse back together.
            comp = set()
            x = start
            while True:
                comp.add(x)
                x = nxt[x]
                if x == start:
                    break
            cross, signs = [], []
            loops = d.loops + 1
            alias = {}

            def res(x):
                while x in alias:
                    x = alias[x]
                return x

            for cj, t in enumerate(d.crossings):
                if not (set(t) & comp):
                    cross.append(list(t))
                    signs.append(d.signs[cj])
                    continue
                oi = over_in_slot(d.signs[cj])
                oo = over_out_slot(d.signs[cj])
                for pin, pout in ((t[0], t[2]), (t[oi], t[oo])):
                    if pin in comp:
                        continue
                    x, y = res(pin), res(pout)
                    if x == y:
                        loops += 1
                    else:
                        alias[y] = x
            for t2 in cross:
                for i in range(4):
                    t2[i] = res(t2[i])
            d2 = relabel([tuple(t) for t in cross], signs, loops)
            result = _homfly_rec(d2, memo)
            break
    memo[key] = result
    return result

def _raw(d):
    return d.crossings, d.signs, d.loops

# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def to_pd_text(d, comment=None):
    parts = []
    if comment:
        parts.append("# " + comment + "\n")
    toks = ["X[%d,%d,%d,%d]" % t for t in d.crossings] + ["O"] * d.loops
    parts.append(" ".join(toks) + "\n")
    return "".join(parts)

def parse_pd(text):
    toks = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        toks.extend(line.split())
    cross, loops = [], 0
    for tok in toks:
        if tok == "O":
            loops += 1
        else:
            assert tok.startswith("X[") and tok.endswith("]"), tok
            nums = [int(x) for x in tok[2:-1].split(",")]
            assert len(nums) == 4
            cross.append(tuple(nums))
    signs = solve_signs(cross) if cross else []
    d = Diagram(cross, signs, loops)
    if cross:
        validate(d)
    return d

# ---------------------------------------------------------------------------
# braid closures (sigma_i positive: incoming right strand passes over)
# ---------------------------------------------------------------------------

def braid_closure(word, strands):
    """word: list of nonzero ints, i>0 for sigma_i, i<0 for sigma_i^-1."""
    nextid = [0]
    def fresh():
        nextid[0] += 1
        return nextid[0]
    top = [fresh() for _ in range(strands)]
    cur = list(top)
    cross = []  # records (tuple of provisional arcs, sign)
    for g in word:
        i = abs(g) - 1
        in_l, in_r = cur[i], cur[i + 1]
        out_l, out_r = fresh(), fresh()
        if g > 0:
            cross.append(((in_l, out_l, out_r, in_r), 1))
        else:
            cross.append(((in_r, in_l, out_l, out_r), -1))
        cur[i], cur[i + 1] = out_l, out_r
    # closure: identify bottom with top
    parent = {}
    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x
    for p in range(strands):
        a, b = find(cur[p]), find(top[p])
        if a != b:
            parent[a] = b
    cross2 = [tuple(find(a) for a in t) for t, _ in cross]
    signs = [s for _, s in cross]
    d = relabel(cross2, signs, 0)
    assert solve_signs(d.crossings) == d.signs, "braid sign mismatch"
    validate(d)
    return d

# ---------------------------------------------------------------------------
# R-move insertions (used to build the Reidemeister corpus variants)
# ---------------------------------------------------------------------------

def r1_kink(d, arc, positive):
    """Insert a kink on `arc`. Positive kink: X[p,r,q,q]; negative: X[p,q,q,r]."""
    occ = occurrences(d.crossings)
    (c1, s1), (c2, s2) = occ[arc]
    # consumed end of the arc: slot a or over-in
    def is_consume(ci, s):
        return s == 0 or s == over_in_slot(d.signs[ci])
    # use large temporary labels for the two new pieces
    q, r = 10 ** 6, 10 ** 6 + 1
    cross = [list(t) for t in d.crossings]
    for (ci, s) in occ[arc]:
        if is_consume(ci, s):
            cross[ci][s] = r
    if positive:
        kink = (arc, r, q, q)
        sign = 1
    else:
        kink = (arc, q, q, r)
        sign = -1
    cross.append(kink)
    signs = list(d.signs) + [sign]
    d2 = relabel(cross, signs, d.loops)
    assert solve_signs(d2.crossings) == d2.signs
    validate(d2)
    return d2

def face_orbits(d):
    occ = occurrences(d.crossings)
    alpha = {}
    for arc, os_ in occ.items():
        (c1, s1), (c2, s2) = os_
        alpha[(c1, s1)] = (c2, s2)
        alpha[(c2, s2)] = (c1, s1)
    seen = set()
    orbits = []
    for ci in range(len(d.crossings)):
        for s in range(4):
            h = (ci, s)
            if h in seen:
                continue
            orb = []
            x = h
            while x not in seen:
                seen.add(x)
                orb.append(x)
                c2, s2 = alpha[x]
                x = (c2, (s2 + 1) % 4)
            orbits.append(orb)
    return orbits

# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

def build_corpus():
    corpus = {}

    def add(name, d, comment):
        corpus[name] = (d, comment)

    add("unknot", Diagram([], [], 1), "unknot, no crossings")
    for n in range(2, 6):
        add("unlink%d" % n, Diagram([], [], n), "%d-component unlink" % n)

    tref_l = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    add("trefoil_left", tref_l, "left-handed trefoil, standard alternating diagram")
    tref_r = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    add("trefoil_right", tref_r, "right-handed trefoil (mirror)")

    fig8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")
    add("figure_eight", fig8, "figure-eight knot, standard alternating diagram")

    add("hopf_plus", parse_pd("X[3,2,4,1] X[2,3,1,4]"), "positive Hopf link")

    for k in range(2, 7):
        add("torus2_%d" % k, braid_closure([-1] * k, 2),
            "(2,%d) torus diagram, negative crossings" % k)

    five2 = parse_pd("X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]")
    add("five_two", five2, "5_2 knot, standard alternating diagram")

    trap = parse_pd("X[1,6,2,3] X[2,6,1,5] X[8,4,7,3] X[7,4,8,5]")
    add("trap_pocket", trap,
        "small circle caught in the pocket between two circles")

    twist_chain = braid_closure([1, 1, -2, -2, 3, 3], 4)
    add("twist_chain4", twist_chain,
        "alternating closed 4-braid; every circle pair joined by a full twist")

    chain = braid_closure([1, 1, 2, 3, 3, 4, 4, 5, 6, 6], 7)
    add("chain_two_merges", chain,
        "closed braid with two weight-one columns far apart")

    # Reidemeister variants
    add("trefoil_r1", r1_kink(tref_l, 2, True), "left trefoil with a positive kink")
    add("figure_eight_r1", r1_kink(fig8, 1, False), "figure-eight with a negative kink")
    add("trefoil_r2", braid_closure([-1, -1, -1, 1, -1], 2),
        "left trefoil with an R2 poke pair")
    add("figure_eight_r2", braid_closure([1, -2, 1, -2, 2, -2], 3),
        "figure-eight with an R2 poke pair")
    add("trefoil_r3a", braid_closure([1, 2, 1, 2], 3), "positive trefoil, braid form")
    add("trefoil_r3b", braid_closure([2, 1, 2, 2], 3),
        "positive trefoil after one triangle slide")
    add("figure_eight_r3a", braid_closure([2, 1, -2, 1, -2, -2], 3),
        "figure-eight, conjugated braid form, before the slide")
    add("figure_eight_r3b", braid_closure([-1, 2, 1, 1, -2, -2], 3),
        "figure-eight, conjugated braid form, after one triangle slide")
    return corpus

def expectations_for(name, d):
    comps = components(d) if d.crossings else []
    circles, edges = seifert_graph(d) if d.crossings else ([], {})
    n = len(circles) + d.loops
    tp, tm, sp, sm = seifert_stats(d) if d.crossings else (0, 0, 0, 0)
    p = homfly(d)
    aexps = [a for (a, z) in p.keys()]
    E, e = (max(aexps), min(aexps)) if p else (0, 0)
    span = E - e
    # max z-exponent among terms with a-exponent E
    maxz_at_E = max(z for (a, z) in p.keys() if a == E) if p else 0
    rec = {
        "crossings": len(d.crossings),
        "components": len(comps) + d.loops,
        "free_loops": d.loops,
        "writhe": writhe(d),
        "seifert_circles": n,
        "faces": faces_check(d) if d.crossings else 2 * d.loops,
        "alternating": is_alternating(d),
        "stats": {"tau_plus": tp, "tau_minus": tm,
                  "sigma_plus": sp, "sigma_minus": sm},
        "gs_edges": sorted([[u, v, w[0] + w[1], w[0], w[1]]
                            for (u, v), w in edges.items()]),
        "homfly": canon_str(p),
        "a_max": E,
        "a_min": e,
        "a_span": span,
        "mfw": span // 2 + 1,
        "max_z_at_a_max": maxz_at_E,
    }
    return rec

def self_checks(corpus, expect):
    P = lambda s: expect[s]["homfly"]
    assert P("unknot") == "1", P("unknot")
    assert P("unlink2") == canon_str(delta_pow(1)), P("unlink2")
    assert P("trefoil_left") == canon_str(
        {(4, 0): -1, (2, 0): 2, (2, 2): 1}), P("trefoil_left")
    assert P("figure_eight") == canon_str(
        {(2, 0): 1, (-2, 0): 1, (0, 0): -1, (0, 2): -1}), P("figure_eight")
    # mirror rule a -> -1/a
    tl = corpus["trefoil_left"][0]
    pl = homfly(tl)
    mir = {}
    for (a, z), c in pl.items():
        mir[(-a, z)] = mir.get((-a, z), 0) + c * ((-1) ** a)
    assert canon_str(pclean(mir)) == P("trefoil_right"), P("trefoil_right")
    # Hopf+ hand value: a^-1 z + a^-1 z^-1 - a^-3 z^-1
    assert P("hopf_plus") == canon_str(
        {(-1, 1): 1, (-1, -1): 1, (-3, -1): -1}), P("hopf_plus")
    # skein identity spot check on every crossing of the trefoil and 5_2
    for nm in ("trefoil_left", "five_two", "twist_chain4"):
        d = corpus[nm][0]
        for ci in range(len(d.crossings)):
            s = d.signs[ci]
            dp = d if s > 0 else flip(d, ci)
            dm = flip(d, ci) if s > 0 else d
            d0 = smooth(d, ci)
            lhs = padd(pmul(pmono(1, 1, 0), homfly(dp)),
                       padd(pmul(pmono(-1, -1, 0), homfly(dm)),
                            pmul(pmono(-1, 0, 1), homfly(d0))))
            assert not lhs, (nm, ci, canon_str(lhs))
    # R-move invariance
    assert P("trefoil_r1") == P("trefoil_left")
    assert P("trefoil_r2") == P("trefoil_left")
    assert P("trefoil_r3a") == P("trefoil_right")
    assert P("trefoil_r3b") == P("trefoil_right")
    assert P("figure_eight_r1") == P("figure_eight")
    assert P("figure_eight_r2") == P("figure_eight")
    assert P("figure_eight_r3a") == P("figure_eight")
    assert P("figure_eight_r3b") == P("figure_eight")
    # 5_2 anchors
    assert expect["five_two"]["seifert_circles"] == 4
    assert expect["five_two"]["a_span"] == 4
    assert expect["five_two"]["mfw"] == 3
    assert any(e[2] == 1 for e in expect["five_two"]["gs_edges"])
    # extreme power law on reduced alternating, no weight-one edges
    for nm in ("trefoil_left", "trefoil_right", "figure_eight", "twist_chain4",
               "torus2_2", "torus2_3", "torus2_4", "torus2_5", "torus2_6"):
        r = expect[nm]
        nn, w = r["seifert_circles"], r["writhe"]
        assert r["a_max"] == nn - w - 1, (nm, r["a_max"], nn - w - 1)
        assert r["a_min"] == -nn - w + 1, (nm, r["a_min"], -nn - w + 1)
        st = r["stats"]
        want = st["tau_plus"] + st["tau_minus"] - 2 * st["sigma_minus"] - (nn - 1)
        assert r["max_z_at_a_max"] == want, (nm, r["max_z_at_a_max"], want)
    print("self-checks passed")

def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    corpus = build_corpus()
    os.makedirs(os.path.join(root, "corpus"), exist_ok=True)
    os.makedirs(os.path.join(root, "tests", "data"), exist_ok=True)
    expect = {}
    for name in sorted(corpus):
        d, comment = corpus[name]
        with open(os.path.join(root, "corpus", name + ".pd"), "w") as f:
            f.write(to_pd_text(d, comment))
        expect[name] = expectations_for(name, d)
        print("%-20s C=%2d n=%d homfly=%s" % (
            name, expect[name]["crossings"], expect[name]["seifert_circles"],
            expect[name]["homfly"]))
    self_checks(corpus, expect)
    with open(os.path.join(root, "tests", "data", "expectations.json"), "w") as f:
        json.dump(expect, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote corpus/*.pd and tests/data/expectations.json")

if __name__ == "__main__":
    main()
