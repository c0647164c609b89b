"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here recompute results straight from definitions (subset scans,
walk counting, cell probing) so they share no case logic with the package.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import hypothesis.strategies as st

from primspec.circle import CircleSet
from primspec.graph import OMEGA, Cardinality, Graph, parse_graph
from primspec.topology import PrimIdeal, PrimSpace, PrimSubset, prim_subset

E1_TEXT = """
graph {
  vertices: v, w;
  edge v -> v;
  edge v -> w [inf];
}
"""

E2_TEXT = """
graph {
  vertices: u, v, w;
  edge u -> u;
  edge u -> v;
  edge v -> w [inf];
  edge w -> w;
}
"""

NAMES = tuple("abcdefgh")

# Filled in by test_acceptance, printed by the conftest terminal-summary hook.
ACCEPTANCE_LINES: list = []


def mk(text: str) -> Graph:
    return parse_graph(text)


def random_graph(rng: random.Random, max_n: int = 5, mults=(1, 2, "inf"), p_edge: float = 0.4) -> Graph:
    n = rng.randint(1, max_n)
    names = NAMES[:n]
    edges = []
    for s in names:
        for d in names:
            if rng.random() < p_edge:
                m = rng.choice(mults)
                edges.append((s, d, OMEGA if m == "inf" else Cardinality(m)))
    return Graph(names, edges)


def graph_strategy(max_n: int = 4, mults=(1, 2, "inf")):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        names = NAMES[:n]
        edges = []
        for s in names:
            for d in names:
                m = draw(st.sampled_from((None, None) + tuple(mults)))
                if m is not None:
                    edges.append((s, d, OMEGA if m == "inf" else Cardinality(m)))
        return Graph(names, edges)

    return build()


_TURNS = [Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
          Fraction(2, 3), Fraction(3, 4), Fraction(5, 6)]


def random_circle_set(rng: random.Random) -> CircleSet:
    r = rng.random()
    if r < 0.2:
        return CircleSet.all()
    if r < 0.45:
        return CircleSet.point(rng.choice(_TURNS))
    if r < 0.55:
        t = rng.choice(_TURNS)
        return CircleSet.arc(t, t, False, False)  # circle minus a point
    lo, hi = rng.sample(_TURNS, 2)
    piece = CircleSet.arc(lo, hi, rng.random() < 0.5, rng.random() < 0.5)
    if rng.random() < 0.3:
        piece = piece.union(random_circle_set(rng))
    return piece


def random_subset(rng: random.Random, space: PrimSpace, p_keep: float = 0.4) -> PrimSubset:
    gamma = [m for m in space.gamma_tails if rng.random() < p_keep]
    bv = [v for v in space.bv if rng.random() < p_keep]
    circle = {}
    for n in space.tau_tails:
        if rng.random() < p_keep + 0.2:
            circle[n] = random_circle_set(rng)
    return prim_subset(gamma, bv, circle)


def probe_points(space: PrimSpace, s: PrimSubset):
    """Candidate points for membership comparison: every discrete point plus
    circle probes at a fixed grid, all arc endpoints, and rational nudges."""
    pts = [PrimIdeal.gamma(m) for m in space.gamma_tails]
    pts += [PrimIdeal.bv(v) for v in space.bv]
    turns = {Fraction(0), Fraction(1, 8), Fraction(1, 3), Fraction(1, 2), Fraction(7, 12)}
    for _, d in s.circle:
        for t in d.endpoints():
            turns.add(t)
            turns.add((t + Fraction(1, 97)) % 1)
            turns.add((t - Fraction(1, 97)) % 1)
    for n in space.tau_tails:
        for t in sorted(turns):
            pts.append(PrimIdeal.circle(n, t))
    return pts


# -- exact comparisons for circle sets ----------------------------------------


def _cells(*sets: CircleSet):
    """Sample points meeting every region where membership is constant."""
    bounds = sorted({t for s in sets for t in s.endpoints()})
    if not bounds:
        return [Fraction(0), Fraction(1, 2)]
    samples = list(bounds)
    k = len(bounds)
    for i, lo in enumerate(bounds):
        hi = bounds[(i + 1) % k]
        length = (hi - lo) % 1 or Fraction(1)
        samples.append((lo + length / 2) % 1)
    return samples


def circle_subset(a: CircleSet, b: CircleSet) -> bool:
    return all(b.contains(t) for t in _cells(a, b) if a.contains(t))


def circle_eq(a: CircleSet, b: CircleSet) -> bool:
    return all(a.contains(t) == b.contains(t) for t in _cells(a, b))


def subset_leq(a: PrimSubset, b: PrimSubset) -> bool:
    if not (a.gamma <= b.gamma and a.bv <= b.bv):
        return False
    bm = b.circle_map
    return all(t in bm and circle_subset(d, bm[t]) for t, d in a.circle)


# -- brute-force structural oracles -------------------------------------------


def brute_tails(g: Graph):
    """Scan every non-empty vertex subset for the three tail conditions."""
    vs = g.vertices
    found = []
    for r in range(1, len(vs) + 1):
        for comb in itertools.combinations(vs, r):
            m = frozenset(comb)
            mt1 = all(v in m
                      for w in m for v in vs if g.reaches(v, w))
            mt2 = True
            for v in m:
                card = g.out_cardinality(v)
                if card.is_finite and card.n > 0 and not any(d in m for d in g.successors(v)):
                    mt2 = False
            mt3 = all(any(g.reaches(x, z) and g.reaches(y, z) for z in m)
                      for x in m for y in m)
            if mt1 and mt2 and mt3:
                found.append(m)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def brute_hs(g: Graph):
    out = []
    for r in range(len(g.vertices) + 1):
        for comb in itertools.combinations(g.vertices, r):
            k = frozenset(comb)
            hereditary = all(d in k for v in k for d in g.successors(v))
            saturated = True
            for v in g.vertices:
                if v in k:
                    continue
                card = g.out_cardinality(v)
                if card.is_finite and card.n > 0 and all(d in k for d in g.successors(v)):
                    saturated = False
            if hereditary and saturated:
                out.append(k)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def brute_shc(g: Graph, xs):
    xs = frozenset(xs)
    candidates = [k for k in brute_hs(g) if xs <= k]
    best = frozenset(g.vertices)
    for k in candidates:
        best &= k
    return best


def _has_edge(g: Graph, a: str, b: str) -> bool:
    m = g.edge_mult(a, b)
    return m.is_omega or m.n > 0


def brute_loops(g: Graph):
    """All vertex-simple cycles as rotation-normalized vertex tuples."""
    vs = g.vertices
    found = set()
    for r in range(1, len(vs) + 1):
        for comb in itertools.combinations(vs, r):
            first = comb[0]
            for rest in itertools.permutations(comb[1:]):
                seq = (first,) + rest
                if all(_has_edge(g, seq[i], seq[(i + 1) % r]) for i in range(r)):
                    found.add(seq)
    return sorted(found, key=lambda s: (len(s), s))


def brute_a_count_finite(g: Graph, tail, v: str) -> bool:
    """Layered walk growth: the path count to the loop is infinite exactly
    when a relevant walk longer than |E0| exists or an omega edge sits on a
    relevant route.  Walks stop at the loop."""
    loop = set(tail.loop.vertex_set)
    n = len(g.vertices)
    co = set(loop)
    changed = True
    while changed:
        changed = False
        for a in g.vertices:
            if a in co or a in loop:
                continue
            if any(d in co for d in g.successors(a)):
                co.add(a)
                changed = True
    if v in loop:
        raise AssertionError("probe vertex is on the loop")
    layer = {v} if v in co else set()
    for step in range(n + 1):
        nxt = set()
        for a in layer:
            if a in loop:
                continue
            for d in g.successors(a):
                if d in co:
                    nxt.add(d)
        layer = nxt
        if step == n and layer:
            return False
    for e in g.edges:
        if not e.mult.is_omega:
            continue
        if e.src in loop or e.src not in co or e.dst not in co:
            continue
        fwd = {v}
        changed = True
        while changed:
            changed = False
            for a in list(fwd):
                if a in loop:
                    continue
                for d in g.successors(a):
                    if d in co and d not in fwd:
                        fwd.add(d)
                        changed = True
        if e.src in fwd:
            return False
    return True


def _loop_reach(g: Graph, a, b) -> bool:
    return any(g.reaches(x, y) for x in a.loop.vertices for y in b.loop.vertices)


def row_finite_closure(space: PrimSpace, s: PrimSubset) -> PrimSubset:
    """Definition-direct closure for row-finite graphs: four cases, no
    finiteness side conditions, no breaking vertices."""
    g = space.graph
    assert g.is_row_finite
    xs = set(s.gamma)
    dmap = s.circle_map
    cov_x = set().union(*(m.vertex_set for m in xs)) if xs else set()
    y = list(dmap)
    y_min = {u for u in y
             if all(not _loop_reach(g, u, o) for o in y if o is not u)}
    y_inf = {u for u in y
             if all(not _loop_reach(g, u, m) for m in y_min)}
    cov_y = set().union(*(u.vertex_set for u in y)) if y else set()
    cov_min = set().union(*(u.vertex_set for u in y_min)) if y_min else set()
    cov_inf = set().union(*(u.vertex_set for u in y_inf)) if y_inf else set()

    gamma = {m for m in space.gamma_tails
             if m.vertex_set <= cov_x or m.vertex_set <= cov_y}
    circle = {}
    for n in space.tau_tails:
        nv = n.vertex_set
        if nv <= cov_x or nv <= cov_inf or (n not in y_min and nv <= cov_min):
            circle[n] = CircleSet.all()
        elif n in y_min:
            circle[n] = dmap[n].closure()
    return prim_subset(gamma, [], circle)


def brute_bv(g: Graph):
    out = []
    for v in g.vertices:
        if not g.out_cardinality(v).is_omega:
            continue
        tail = g.tail_of_vertex(v)
        into = g.out_cardinality_into(v, tail)
        if into.is_finite and into.n > 0:
            out.append(v)
    return out
