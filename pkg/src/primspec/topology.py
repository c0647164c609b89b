"""The primitive ideal space as a set with a computable closure operator.

Points come in three families: one per maximal tail whose cycles all have
exits inside it, one per breaking vertex, and a circle of points per
loop-carrying tail.  A subset is therefore a triple (tails, vertices, and a
circle subset per loop-carrying tail), and the hull-kernel closure of such a
subset is again one, computed by a nine-case analysis: three source families
times three target families, with the loop-carrying sources split by how
their loops reach each other.

Alongside the case analysis, ``oracle_closure_member`` decides membership in
a closure straight from the ideal calculus: a point lies in the closure of a
set exactly when the intersection of the set's ideals is contained in the
point's ideal.  Since points are prime, the intersection test factors through
the finitely many members, each comparison resolved by coordinatewise
containment, the sandwich bounds, or loop reachability.  The case route forms
each source family's intersection ideal outright and never factors through a
member; the oracle factors through members and never forms an intersection.
Their agreement therefore still exercises two different paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import CirclePoint, CircleSet
from .errors import InternalInconsistencyError, ValidationError
from .graph import Graph
from .ideals import (
    GaugeInvariantIdeal,
    circle_lower_ideal,
    circle_upper_ideal,
    gi_contains,
    gi_meet,
    ideal_of_breaking_vertex,
    ideal_of_gamma_tail,
)
from .subsets import omega
from .tails import MaximalTail, breaking_vertices, maximal_tails, tail_data


@dataclass(frozen=True)
class PrimIdeal:
    """A single point of the primitive ideal space."""

    kind: str  # "gamma" | "bv" | "circle"
    tail: MaximalTail | None = None
    vertex: str | None = None
    t: CirclePoint | None = None

    @staticmethod
    def gamma(tail: MaximalTail) -> "PrimIdeal":
        return PrimIdeal("gamma", tail=tail)

    @staticmethod
    def bv(vertex: str) -> "PrimIdeal":
        return PrimIdeal("bv", vertex=vertex)

    @staticmethod
    def circle(tail: MaximalTail, t) -> "PrimIdeal":
        return PrimIdeal("circle", tail=tail, t=CirclePoint.of(t))


@dataclass(frozen=True)
class PrimSubset:
    """A subset of the space: tails, breaking vertices, circle portions."""

    gamma: frozenset = frozenset()
    bv: frozenset = frozenset()
    circle: tuple = ()  # sorted (MaximalTail, non-empty CircleSet) pairs

    @property
    def circle_map(self) -> dict:
        return dict(self.circle)

    @property
    def is_empty(self) -> bool:
        return not self.gamma and not self.bv and not self.circle

    def union(self, other: "PrimSubset") -> "PrimSubset":
        cmap = self.circle_map
        for tail, d in other.circle:
            cmap[tail] = cmap[tail].union(d) if tail in cmap else d
        return prim_subset(self.gamma | other.gamma, self.bv | other.bv, cmap)


def prim_subset(gamma=(), bv=(), circle=None) -> PrimSubset:
    """Normalized constructor; drops empty circle portions."""
    items = []
    for tail, d in (circle or {}).items() if isinstance(circle, dict) else (circle or ()):
        if not isinstance(d, CircleSet):
            raise ValidationError(f"circle portion for {tail.vertices} is not a CircleSet")
        if not d.is_empty:
            items.append((tail, d))
    items.sort(key=lambda pair: pair[0].sort_key())
    return PrimSubset(frozenset(gamma), frozenset(bv), tuple(items))


EMPTY_SUBSET = prim_subset()


class PrimSpace:
    """Per-graph context: the point families and the closure machinery."""

    def __init__(self, g: Graph):
        self.graph = g
        self.tails = maximal_tails(g)
        self.gamma_tails = tuple(t for t in self.tails if not t.is_tau)
        self.tau_tails = tuple(t for t in self.tails if t.is_tau)
        self.bv = breaking_vertices(g)
        self.data = {t: tail_data(g, t) for t in self.tails}
        self.bv_outside = {v: omega(g, (v,)) for v in self.bv}
        self.gamma_ideal = {t: ideal_of_gamma_tail(g, t) for t in self.gamma_tails}
        self.bv_ideal = {v: ideal_of_breaking_vertex(g, v) for v in self.bv}
        self.lower = {t: circle_lower_ideal(g, t) for t in self.tau_tails}
        self.upper = {t: circle_upper_ideal(g, t) for t in self.tau_tails}

    # -- validation --------------------------------------------------------

    def check_subset(self, s: PrimSubset):
        for t in s.gamma:
            if t not in self.gamma_ideal:
                raise ValidationError(f"{t.vertices} is not an exit-rich maximal tail of this graph")
        for v in s.bv:
            if v not in self.bv_ideal:
                raise ValidationError(f"{v!r} is not a breaking vertex of this graph")
        for t, _ in s.circle:
            if t not in self.lower:
                raise ValidationError(f"{t.vertices} is not a loop-carrying maximal tail of this graph")

    def check_point(self, j: PrimIdeal):
        if j.kind == "gamma":
            if j.tail not in self.gamma_ideal:
                raise ValidationError(f"{j.tail} is not an exit-rich maximal tail of this graph")
        elif j.kind == "bv":
            if j.vertex not in self.bv_ideal:
                raise ValidationError(f"{j.vertex!r} is not a breaking vertex of this graph")
        elif j.kind == "circle":
            if j.tail not in self.lower:
                raise ValidationError(f"{j.tail} is not a loop-carrying maximal tail of this graph")
            if j.t is None:
                raise ValidationError("a circle point needs a position t")
        else:
            raise ValidationError(f"unknown point kind {j.kind!r}")

    # -- loop order ----------------------------------------------------------

    def loop_reaches(self, a: MaximalTail, b: MaximalTail) -> bool:
        """Whether a path runs from a's loop to b's loop (true when a == b)."""
        return bool(self.graph.reach_set(a.loop.vertices[0]) & b.loop.vertex_set)

    def tau_order(self, tails) -> tuple[list, list]:
        """Split a family of loop-carrying tails into minimal and unbounded parts.

        Minimal members have no path from their loop to any other member's
        loop; the unbounded part collects members with no path to any minimal
        member's loop (they descend forever inside the family).
        """
        family = list(tails)
        for t in family:
            if t not in self.lower:
                raise ValidationError(f"{t.vertices} is not a loop-carrying maximal tail of this graph")
        y_min = [
            u for u in family
            if all(u2 == u or not self.loop_reaches(u, u2) for u2 in family)
        ]
        y_inf = [
            u for u in family
            if all(not self.loop_reaches(u, v) for v in y_min)
        ]
        y_min.sort(key=MaximalTail.sort_key)
        y_inf.sort(key=MaximalTail.sort_key)
        return y_min, y_inf

    # -- closure (case analysis) -----------------------------------------

    def closure(self, s: PrimSubset) -> PrimSubset:
        """Hull-kernel closure; the union of the three source-family closures."""
        self.check_subset(s)
        out = EMPTY_SUBSET
        for part in (self._close_from_gamma(s), self._close_from_bv(s), self._close_from_circle(s)):
            out = out.union(part)
        return out

    def _swallowing(self, kernel: GaugeInvariantIdeal) -> tuple[set, set]:
        """Discrete points whose ideals contain the given kernel ideal.

        An edge-count shortcut ("the candidate emits finitely many edges into
        the kernel's vertex set") is tempting here but wrong: a vertex with
        infinitely many edges into the kernel set and infinitely many escaping
        it never enters the meet's breaking part, so the containment holds
        anyway.  Testing the kernel pair directly settles every case.
        """
        g = self.graph
        gamma = {m for m in self.gamma_tails if gi_contains(g, kernel, self.gamma_ideal[m])}
        bv = {v for v in self.bv if gi_contains(g, kernel, self.bv_ideal[v])}
        return gamma, bv

    def _close_from_gamma(self, s: PrimSubset) -> PrimSubset:
        xs = s.gamma
        if not xs:
            return EMPTY_SUBSET
        covered = frozenset().union(*(t.vertex_set for t in xs))
        gamma, bv = self._swallowing(gi_meet(self.graph, [self.gamma_ideal[t] for t in xs]))
        circle = {n: CircleSet.all() for n in self.tau_tails if n.vertex_set <= covered}
        return prim_subset(gamma, bv, circle)

    def _close_from_bv(self, s: PrimSubset) -> PrimSubset:
        ws = s.bv
        if not ws:
            return EMPTY_SUBSET
        region = self.graph.vertex_set
        for v in ws:
            region &= self.bv_outside[v]
        covered = self.graph.vertex_set - region
        gamma, bv = self._swallowing(gi_meet(self.graph, [self.bv_ideal[w] for w in ws]))
        circle = {n: CircleSet.all() for n in self.tau_tails if n.vertex_set <= covered}
        return prim_subset(gamma, bv, circle)

    def _close_from_circle(self, s: PrimSubset) -> PrimSubset:
        dmap = s.circle_map
        if not dmap:
            return EMPTY_SUBSET
        y_min, y_inf = self.tau_order(dmap.keys())
        min_set = set(y_min)
        covered_min = frozenset().union(*(t.vertex_set for t in y_min))
        gamma, bv = self._swallowing(gi_meet(self.graph, [self.lower[u] for u in y_min]))
        if y_inf:
            covered_inf = frozenset().union(*(t.vertex_set for t in y_inf))
            g2, b2 = self._swallowing(gi_meet(self.graph, [self.lower[u] for u in y_inf]))
            gamma |= g2
            bv |= b2
        circle = {}
        for n in self.tau_tails:
            d = CircleSet.empty()
            if y_inf and n.vertex_set <= covered_inf:
                d = CircleSet.all()
            elif n not in min_set and n.vertex_set <= covered_min:
                d = CircleSet.all()
            if n in min_set:
                d = d.union(dmap[n].closure())
            circle[n] = d
        return prim_subset(gamma, bv, circle)

    # -- closure (ideal-calculus oracle) ----------------------------------

    def oracle_closure_member(self, s: PrimSubset, j: PrimIdeal) -> bool:
        """Whether j lies in the closure of s, decided by ideal containment.

        The closure of s consists of the points containing the intersection
        of s's ideals; primeness of points turns that into a disjunction of
        one containment test per member of s.
        """
        self.check_subset(s)
        self.check_point(j)
        for u in s.gamma:
            if self._gi_below(self.gamma_ideal[u], j):
                return True
        for w in s.bv:
            if self._gi_below(self.bv_ideal[w], j):
                return True
        for u, d in s.circle:
            if self._circle_family_below(u, d, j):
                return True
        return False

    def _point_gi_target(self, j: PrimIdeal) -> GaugeInvariantIdeal:
        """A gauge-invariant stand-in: the point's ideal, or for a circle
        point the largest gauge-invariant ideal inside it (a gauge-invariant
        ideal is contained in the point iff contained in that)."""
        if j.kind == "gamma":
            return self.gamma_ideal[j.tail]
        if j.kind == "bv":
            return self.bv_ideal[j.vertex]
        return self.lower[j.tail]

    def _gi_below(self, ideal: GaugeInvariantIdeal, j: PrimIdeal) -> bool:
        return gi_contains(self.graph, ideal, self._point_gi_target(j))

    def _circle_family_below(self, u: MaximalTail, d: CircleSet, j: PrimIdeal) -> bool:
        """Whether the intersection of u's circle ideals over d sits inside j."""
        dbar = d.closure()
        if j.kind == "circle":
            if j.tail == u:
                # Same circle: the intersection over d is contained in the
                # point at t exactly when t is a limit of d.
                return dbar.contains(j.t)
            # Different circles compare through the sandwich bounds, which
            # collapses to loop reachability from the candidate to the family.
            return self.loop_reaches(j.tail, u)
        # Gauge-invariant candidate: replace the family's intersection by its
        # gauge-invariant envelope.  Closing up a dense circle portion kills
        # the whole circle fiber, leaving the lower sandwich bound; otherwise
        # the envelope is the upper bound.
        envelope = self.lower[u] if dbar.is_all else self.upper[u]
        return gi_contains(self.graph, envelope, self._point_gi_target(j))

    # -- derived topology ---------------------------------------------------

    def singleton(self, j: PrimIdeal) -> PrimSubset:
        self.check_point(j)
        if j.kind == "gamma":
            return prim_subset(gamma=(j.tail,))
        if j.kind == "bv":
            return prim_subset(bv=(j.vertex,))
        return prim_subset(circle={j.tail: CircleSet.point(j.t.turn)})

    def specialization_pairs(self) -> list[tuple]:
        """All pairs (a, b) with b in the closure of {a}.

        Circle families are handled symbolically: a pair targeting a circle
        family carries "all" when every point of the family is hit, and a
        same-family pair carries "param" (positions must match, each circle
        point being closed in its own fiber).
        """
        pairs = []
        for m in self.gamma_tails:
            pairs.extend(self._pairs_from(("gamma", m), self.closure(self.singleton(PrimIdeal.gamma(m)))))
        for v in self.bv:
            pairs.extend(self._pairs_from(("bv", v), self.closure(self.singleton(PrimIdeal.bv(v)))))
        probe = CirclePoint.of(0)
        for n in self.tau_tails:
            c = self.closure(self.singleton(PrimIdeal.circle(n, probe)))
            pairs.extend(self._pairs_from(("circle", n), c, same_tail=n))
        return pairs

    def _pairs_from(self, src, closed: PrimSubset, same_tail=None) -> list[tuple]:
        out = []
        for m in sorted(closed.gamma, key=MaximalTail.sort_key):
            out.append((src, ("gamma", m), None))
        for v in sorted(closed.bv):
            out.append((src, ("bv", v), None))
        for n, d in closed.circle:
            if same_tail is not None and n == same_tail:
                # closure of one circle point meets its own fiber in just
                # that point, whatever the position
                out.append((src, ("circle", n), "param"))
            elif d.is_all:
                out.append((src, ("circle", n), "all"))
            else:
                raise InternalInconsistencyError(
                    f"partial circle portion {d} for tail {n.vertices} in a singleton closure"
                )
        return out

    def is_simple(self) -> bool:
        """Whether the space is a single point (no proper nonzero ideals)."""
        if not self.graph.vertices:
            raise ValidationError("the empty graph has no primitive ideal space")
        return (
            len(self.tails) == 1
            and not self.tau_tails
            and not self.bv
            and self.tails[0].vertex_set == self.graph.vertex_set
        )


# -- module-level convenience wrappers ---------------------------------------


def closure(g: Graph, s: PrimSubset) -> PrimSubset:
    return PrimSpace(g).closure(s)


def tau_order(g: Graph, tails) -> tuple[list, list]:
    return PrimSpace(g).tau_order(tails)


def oracle_closure_member(g: Graph, s: PrimSubset, j: PrimIdeal) -> bool:
    return PrimSpace(g).oracle_closure_member(s, j)


def specialization_order(g: Graph) -> list[tuple]:
    return PrimSpace(g).specialization_pairs()


def is_simple(g: Graph) -> bool:
    return PrimSpace(g).is_simple()
