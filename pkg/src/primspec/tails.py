"""Maximal tails, their classifying loops, and breaking vertices.

A maximal tail is a non-empty vertex set M that is closed under taking
predecessors, keeps an edge inside M for every finite positive emitter in M,
and is downward directed (any two members reach a common member).  Tails come
in two kinds: those in which every cycle has an exit inside the tail, and
those carrying a cycle with no exit in the tail.  In the second kind the
cycle is unique up to rotation and the tail contributes a circle of points to
the primitive ideal space instead of a single point.

Breaking vertices are the infinite emitters whose edge bundle into their own
tail is finite and non-empty; each contributes one more point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, ValidationError
from .graph import Graph, Loop
from .subsets import k_fin_inf, k_inf_empty, omega

GAMMA = "gamma"
TAU = "tau"


@dataclass(frozen=True)
class MaximalTail:
    """A maximal tail, with its no-exit loop when one exists."""

    vertices: tuple[str, ...]
    loop: Loop | None = None

    @property
    def kind(self) -> str:
        return TAU if self.loop is not None else GAMMA

    @property
    def is_tau(self) -> bool:
        return self.loop is not None

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def sort_key(self):
        return (len(self.vertices), self.vertices)


@dataclass(frozen=True)
class TailData:
    """Derived data of a maximal tail used by closure computations.

    m_inf_empty: the infinite emitters of the tail all of whose edges leave
    it.  A maximal tail has at most one such vertex.  For loop-carrying tails
    k_m collects the loop plus every vertex with only finitely many first-hit
    paths to it, and b_m the infinite emitters pinched between k_m and the
    tail's complement; both are None for the other kind.
    """

    m_inf_empty: frozenset
    k_m: frozenset | None = None
    b_m: frozenset | None = None


def maximal_tails(g: Graph) -> list[MaximalTail]:
    """All maximal tails, sorted by size then vertex names.

    With finitely many vertices, downward directedness forces every maximal
    tail to be the predecessor set of a single vertex, so the candidates are
    exactly the distinct tail_of_vertex(x) and only the edge condition on
    finite emitters needs checking.
    """
    seen = set()
    out = []
    for x in g.vertices:
        m = g.tail_of_vertex(x)
        if m in seen:
            continue
        seen.add(m)
        if _keeps_edge_inside(g, m):
            out.append(MaximalTail(tuple(sorted(m)), no_exit_loop(g, m)))
    return sorted(out, key=MaximalTail.sort_key)


def _keeps_edge_inside(g: Graph, m: frozenset) -> bool:
    for v in m:
        out = g.out_cardinality(v)
        if out.is_finite and out.n > 0 and not any(d in m for d in g.successors(v)):
            return False
    return True


def no_exit_loop(g: Graph, m) -> Loop | None:
    """The unique cycle inside m with no exit in m, or None.

    An exit is an edge from a cycle vertex into m that is not one of the
    cycle's edges; a multiplicity of two or more on a cycle edge supplies an
    exit via its extra parallel copies.  Uniqueness up to rotation holds for
    maximal tails; finding two distinct no-exit cycles means the argument was
    not a maximal tail (or a bug).
    """
    m = g.check_vertices(m)
    found = []
    for loop in g.vertex_simple_loops(m):
        if not _has_exit_in(g, loop, m):
            found.append(loop)
    if len(found) > 1:
        raise InternalInconsistencyError(
            f"two distinct no-exit cycles {found[0].vertices} and {found[1].vertices}"
            f" inside {sorted(m)}; not a maximal tail"
        )
    return found[0] if found else None


def _has_exit_in(g: Graph, loop: Loop, m: frozenset) -> bool:
    pairs = set(loop.edge_pairs())
    for src in loop.vertices:
        for dst in g.successors(src):
            if dst not in m:
                continue
            if (src, dst) in pairs:
                mult = g.edge_mult(src, dst)
                if mult.is_omega or mult.n >= 2:
                    return True
            else:
                return True
    return False


def a_count_is_finite(g: Graph, tail: MaximalTail, v: str) -> bool:
    """Whether v has only finitely many paths that first hit the tail's loop.

    Counted paths run from v and touch the loop exactly once, at their final
    vertex; parallel edges count separately.  The count is infinite exactly
    when some such route crosses an omega edge bundle or a cycle, which is
    decidable on the subgraph of vertices between v and the loop.
    """
    if not tail.is_tau:
        raise ValidationError("path counts are only defined for loop-carrying tails")
    g.check_vertices((v,))
    loop_set = tail.loop.vertex_set
    if v in loop_set:
        raise ValidationError(f"vertex {v!r} lies on the loop itself")

    # Successor map with the loop's out-edges removed: walks stop at first hit.
    succ = {u: (() if u in loop_set else g.successors(u)) for u in g.vertices}

    fwd = {v}
    stack = [v]
    while stack:
        for nxt in succ[stack.pop()]:
            if nxt not in fwd:
                fwd.add(nxt)
                stack.append(nxt)
    back = set(loop_set)
    changed = True
    while changed:
        changed = False
        for u in g.vertices:
            if u not in back and any(d in back for d in succ[u]):
                back.add(u)
                changed = True
    relevant = fwd & back
    inner = relevant - loop_set

    for u in inner:
        for d in succ[u]:
            if d in relevant and g.edge_mult(u, d).is_omega:
                return False
    # Any cycle among the inner vertices can be pumped.
    remaining = set(inner)
    trimmed = True
    while trimmed:
        trimmed = False
        for u in list(remaining):
            if not any(d in remaining for d in succ[u]):
                remaining.discard(u)
                trimmed = True
    return not remaining


def tail_data(g: Graph, tail: MaximalTail) -> TailData:
    m_set = tail.vertex_set
    outside = omega(g, m_set)
    m_inf_empty = k_inf_empty(g, outside)
    if len(m_inf_empty) > 1:
        raise InternalInconsistencyError(
            f"tail {tail.vertices} has several all-escaping infinite emitters {sorted(m_inf_empty)}"
        )
    if not tail.is_tau:
        return TailData(m_inf_empty=m_inf_empty)
    loop_set = tail.loop.vertex_set
    k_m = set(loop_set)
    for v in g.vertices:
        if v not in loop_set and a_count_is_finite(g, tail, v):
            k_m.add(v)
    k_m = frozenset(k_m)
    b_m = k_fin_inf(g, k_m) & k_fin_inf(g, outside)
    return TailData(m_inf_empty=m_inf_empty, k_m=k_m, b_m=b_m)


def breaking_vertices(g: Graph) -> tuple[str, ...]:
    """Infinite emitters with finitely many, but some, edges back into their own tail."""
    out = []
    for v in g.vertices:
        if g.out_cardinality(v).is_omega:
            into_tail = g.out_cardinality_into(v, g.tail_of_vertex(v))
            if into_tail.is_finite and into_tail.n > 0:
                out.append(v)
    return tuple(out)
