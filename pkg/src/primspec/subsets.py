"""Hereditary and saturated vertex sets, and the derived subset operators.

A set K of vertices is hereditary when every edge leaving K lands in K, and
saturated when every vertex that emits finitely many (but at least one) edges,
all of them into K, already belongs to K.  Sinks and infinite emitters are
never forced into a set by saturation.

These two closure properties index the gauge-invariant ideal lattice, so
everything downstream (tails, ideals, the topology) is phrased in terms of
the operators defined here.
"""

from __future__ import annotations

from .errors import ValidationError
from .graph import Graph


def is_hereditary(g: Graph, k) -> bool:
    k = g.check_vertices(k)
    return all(e.dst in k for e in g.edges if e.src in k)


def is_saturated(g: Graph, k) -> bool:
    k = g.check_vertices(k)
    for v in g.vertices:
        if v in k:
            continue
        out = g.out_cardinality(v)
        if out.is_finite and out.n > 0 and all(d in k for d in g.successors(v)):
            return False
    return True


def saturate(g: Graph, xs) -> frozenset:
    """Smallest saturated set containing xs."""
    k = set(g.check_vertices(xs))
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in k:
                continue
            out = g.out_cardinality(v)
            if out.is_finite and out.n > 0 and all(d in k for d in g.successors(v)):
                k.add(v)
                changed = True
    return frozenset(k)


def hereditary_closure(g: Graph, xs) -> frozenset:
    """Smallest hereditary set containing xs: everything reachable from xs."""
    xs = g.check_vertices(xs)
    out = set()
    for x in xs:
        out |= g.reach_set(x)
    return frozenset(out)


def shc(g: Graph, xs) -> frozenset:
    """Smallest hereditary and saturated set containing xs.

    Saturating a hereditary set preserves heredity (a vertex is only added
    when all of its edges already land inside), so one pass of each closure
    suffices.
    """
    return saturate(g, hereditary_closure(g, xs))


def omega(g: Graph, xs) -> frozenset:
    """The vertices from which xs cannot be reached.

    Always hereditary and saturated when xs is a maximal tail; in general it
    is the largest hereditary saturated set missing the tail generated by xs.
    """
    xs = g.check_vertices(xs)
    return frozenset(v for v in g.vertices if not (g.reach_set(v) & xs))


def k_fin_inf(g: Graph, k) -> frozenset:
    """Infinite emitters outside k with finitely many, but some, edges escaping k.

    For a hereditary saturated k these are the vertices whose escaping edge
    bundle can be severed independently of k itself; they parameterize the
    second coordinate of the ideal lattice.
    """
    k = g.check_vertices(k)
    rest = g.vertex_set - k
    out = set()
    for v in rest:
        if g.out_cardinality(v).is_omega:
            escape = g.out_cardinality_into(v, rest)
            if escape.is_finite and escape.n > 0:
                out.add(v)
    return frozenset(out)


def k_inf_empty(g: Graph, k) -> frozenset:
    """Infinite emitters outside k all of whose edges land in k."""
    k = g.check_vertices(k)
    out = set()
    for v in g.vertex_set - k:
        if g.out_cardinality(v).is_omega and all(d in k for d in g.successors(v)):
            out.add(v)
    return frozenset(out)


def set_sort_key(s):
    return (len(s), tuple(sorted(s)))


def enumerate_hs(g: Graph, method: str = "auto") -> list[frozenset]:
    """All hereditary saturated vertex sets, sorted by size then name.

    Two interchangeable strategies: a full scan of the 2^n subsets, and a
    lattice generation pass that closes the principal sets under joins.  The
    scan is only sensible for small n; "auto" switches on vertex count.
    """
    if method == "auto":
        method = "scan" if len(g.vertices) <= 12 else "generated"
    if method == "scan":
        sets = _enumerate_hs_scan(g)
    elif method == "generated":
        sets = _enumerate_hs_generated(g)
    else:
        raise ValidationError(f"unknown enumeration method {method!r}")
    return sorted(sets, key=set_sort_key)


def _enumerate_hs_scan(g: Graph) -> list[frozenset]:
    verts = g.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    succ_mask = [0] * n
    for e in g.edges:
        succ_mask[idx[e.src]] |= 1 << idx[e.dst]
    finite_emitter = [g.out_cardinality(v).is_finite and g.out_cardinality(v).n > 0 for v in verts]
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            has = mask >> i & 1
            if has and succ_mask[i] & ~mask:
                ok = False  # an edge escapes the set
                break
            if not has and finite_emitter[i] and succ_mask[i] & ~mask == 0:
                ok = False  # saturation forces vertex i in
                break
        if ok:
            out.append(frozenset(verts[i] for i in range(n) if mask >> i & 1))
    return out


def _enumerate_hs_generated(g: Graph) -> list[frozenset]:
    base = frozenset()  # the empty set is hereditary and saturated in any graph
    principals = [shc(g, (v,)) for v in g.vertices]
    seen = {base}
    frontier = [base]
    while frontier:
        cur = frontier.pop()
        for p in principals:
            if p <= cur:
                continue
            # Union of hereditary sets is hereditary, so the join is a
            # saturation pass away.
            nxt = saturate(g, cur | p)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return list(seen)
