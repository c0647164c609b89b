"""The lattice of gauge-invariant ideals and the points of the primitive ideal space.

A gauge-invariant ideal is indexed by an admissible pair (K, B): K a
hereditary saturated vertex set and B a set of infinite emitters outside K
with finitely many, but some, edges escaping K.  Containment and meets are
decided coordinatewise:

    (K1, B1) <= (K2, B2)  iff  K1 <= K2 and B1 <= K2 | B2
    meet_i (Ki, Bi) = (K, (intersection of Ki | Bi) & escape_candidates(K))
                      where K = intersection of Ki.

The points of the primitive ideal space come in three families: one ideal per
maximal tail whose cycles all have exits inside, one per breaking vertex, and
a circle of non-gauge-invariant ideals per loop-carrying tail.  The circle
ideals are pinched between two gauge-invariant ones (their largest
gauge-invariant subideal and smallest gauge-invariant cover), which is what
makes the topology computable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InadmissiblePairError, ValidationError
from .graph import Graph
from .subsets import (
    enumerate_hs,
    is_hereditary,
    is_saturated,
    k_fin_inf,
    omega,
    set_sort_key,
)
from .tails import MaximalTail, maximal_tails, breaking_vertices, tail_data


@dataclass(frozen=True)
class GaugeInvariantIdeal:
    """An admissible pair (K, B); construct through gi_ideal for validation."""

    k: tuple[str, ...]
    b: tuple[str, ...]

    @property
    def k_set(self) -> frozenset:
        return frozenset(self.k)

    @property
    def b_set(self) -> frozenset:
        return frozenset(self.b)

    def to_json_obj(self) -> dict:
        return {"K": list(self.k), "B": list(self.b)}

    def sort_key(self):
        return (set_sort_key(self.k), set_sort_key(self.b))


def gi_ideal(g: Graph, k, b=()) -> GaugeInvariantIdeal:
    """Validate and build an admissible pair; raises InadmissiblePairError."""
    k = g.check_vertices(k)
    b = g.check_vertices(b)
    if not is_hereditary(g, k):
        raise InadmissiblePairError(f"K={sorted(k)} is not hereditary")
    if not is_saturated(g, k):
        raise InadmissiblePairError(f"K={sorted(k)} is not saturated")
    allowed = k_fin_inf(g, k)
    stray = b - allowed
    if stray:
        raise InadmissiblePairError(
            f"B={sorted(b)} contains {sorted(stray)} outside the escape candidates of K={sorted(k)}"
        )
    return GaugeInvariantIdeal(tuple(sorted(k)), tuple(sorted(b)))


def zero_ideal(g: Graph) -> GaugeInvariantIdeal:
    return GaugeInvariantIdeal((), ())


def whole_ideal(g: Graph) -> GaugeInvariantIdeal:
    """The improper pair (all vertices, nothing); admitted as the lattice top."""
    return GaugeInvariantIdeal(tuple(g.vertices), ())


def enumerate_gi_ideals(g: Graph) -> list[GaugeInvariantIdeal]:
    """Every admissible pair, ordered by (K, B) canonical order."""
    out = []
    for k in enumerate_hs(g):
        candidates = sorted(k_fin_inf(g, k))
        for size in range(len(candidates) + 1):
            for combo in combinations(candidates, size):
                out.append(GaugeInvariantIdeal(tuple(sorted(k)), combo))
    return sorted(out, key=GaugeInvariantIdeal.sort_key)


def gi_contains(g: Graph, small: GaugeInvariantIdeal, large: GaugeInvariantIdeal) -> bool:
    """Whether the first ideal is contained in the second."""
    return small.k_set <= large.k_set and small.b_set <= large.k_set | large.b_set


def gi_meet(g: Graph, ideals) -> GaugeInvariantIdeal:
    """Intersection of a non-empty family of gauge-invariant ideals."""
    ideals = list(ideals)
    if not ideals:
        raise ValidationError("meet of an empty family is undefined")
    k = frozenset(g.vertices)
    for ideal in ideals:
        k &= ideal.k_set
    survivors = frozenset(g.vertices)
    for ideal in ideals:
        survivors &= ideal.k_set | ideal.b_set
    b = survivors & k_fin_inf(g, k)
    return GaugeInvariantIdeal(tuple(sorted(k)), tuple(sorted(b)))


def mt_intersection_special(g: Graph, tails) -> GaugeInvariantIdeal:
    """Intersection of the full circle families of loop-carrying tails.

    For such a family the intersection collapses to the pair
    (K, escape_candidates(K)) with K the common unreachable region; this is a
    closed form for what gi_meet computes from the sandwich lower bounds.
    """
    tails = list(tails)
    if not tails:
        raise ValidationError("intersection of an empty family is undefined")
    for t in tails:
        if not t.is_tau:
            raise ValidationError(f"tail {t.vertices} carries no loop")
    k = frozenset(g.vertices)
    for t in tails:
        k &= omega(g, t.vertex_set)
    return GaugeInvariantIdeal(tuple(sorted(k)), tuple(sorted(k_fin_inf(g, k))))


# -- points of the primitive ideal space -------------------------------------


@dataclass(frozen=True)
class PrimElements:
    """The three families of points, with their ideals where gauge-invariant."""

    gamma: tuple  # (MaximalTail, GaugeInvariantIdeal) pairs
    bv: tuple     # (vertex, GaugeInvariantIdeal) pairs
    tau: tuple    # MaximalTail entries; each stands for a circle of ideals


def ideal_of_gamma_tail(g: Graph, tail: MaximalTail) -> GaugeInvariantIdeal:
    out = omega(g, tail.vertex_set)
    return GaugeInvariantIdeal(tuple(sorted(out)), tuple(sorted(k_fin_inf(g, out))))


def ideal_of_breaking_vertex(g: Graph, v: str) -> GaugeInvariantIdeal:
    out = omega(g, (v,))
    b = k_fin_inf(g, out) - {v}
    return GaugeInvariantIdeal(tuple(sorted(out)), tuple(sorted(b)))


def circle_lower_ideal(g: Graph, tail: MaximalTail) -> GaugeInvariantIdeal:
    """Largest gauge-invariant ideal inside each circle ideal of the tail."""
    return ideal_of_gamma_tail(g, tail)


def circle_upper_ideal(g: Graph, tail: MaximalTail) -> GaugeInvariantIdeal:
    """Smallest gauge-invariant ideal containing each circle ideal of the tail."""
    data = tail_data(g, tail)
    return GaugeInvariantIdeal(tuple(sorted(data.k_m)), tuple(sorted(data.b_m)))


def sandwich(g: Graph, tail: MaximalTail) -> tuple[GaugeInvariantIdeal, GaugeInvariantIdeal]:
    """The strict gauge-invariant bounds around the circle ideals of a tail."""
    if not tail.is_tau:
        raise ValidationError(f"tail {tail.vertices} carries no loop; its point is gauge-invariant")
    return circle_lower_ideal(g, tail), circle_upper_ideal(g, tail)


def prim_elements(g: Graph) -> PrimElements:
    tails = maximal_tails(g)
    gamma = tuple((t, ideal_of_gamma_tail(g, t)) for t in tails if not t.is_tau)
    bv = tuple((v, ideal_of_breaking_vertex(g, v)) for v in breaking_vertices(g))
    tau = tuple(t for t in tails if t.is_tau)
    return PrimElements(gamma=gamma, bv=bv, tau=tau)


# -- quotient graph ------------------------------------------------------------


def quotient_graph(g: Graph, ideal: GaugeInvariantIdeal) -> Graph:
    """The graph presenting the quotient algebra by the given ideal.

    Vertices outside K survive; each escape candidate of K not in B also
    gets a sink twin (named beta_<vertex>) that receives one copy of every
    edge into the original vertex.
    """
    ideal = gi_ideal(g, ideal.k_set, ideal.b_set)  # revalidate against this graph
    k = ideal.k_set
    kept = [v for v in g.vertices if v not in k]
    twins = sorted(k_fin_inf(g, k) - ideal.b_set)
    twin_name = {}
    for v in twins:
        name = f"beta_{v}"
        if name in g.vertex_set:
            raise ValidationError(
                f"cannot name the sink twin of {v!r}: vertex {name!r} already exists"
            )
        twin_name[v] = name
    edges = []
    for e in g.edges:
        if e.dst in k:
            continue
        edges.append((e.src, e.dst, e.mult))
        if e.dst in twin_name:
            edges.append((e.src, twin_name[e.dst], e.mult))
    return Graph(kept + list(twin_name.values()), edges)
