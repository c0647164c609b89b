"""Exact finite unions of rational points and arcs on the unit circle.

Positions are rational turns in [0, 1) and all arithmetic is done with
Fractions, so membership, union and topological closure are decided exactly.
An arc runs counterclockwise from ``lo`` to ``hi`` (wrapping through 0 when
hi <= lo); equal endpoints with both ends open denote the full circle minus
that single point.  One distinguished value represents the whole circle.

Text forms: ``T`` for the whole circle, ``point:1/4``, ``arc:(1/4,1/2]``,
``arc:(3/4,1/4]`` (a wrapping arc), and comma-joined unions of these.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError


def parse_turn(text: str) -> Fraction:
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad circle position {text!r}: use a rational like 1/4")
    return value % 1


def format_turn(t: Fraction) -> str:
    return str(t)


@dataclass(frozen=True)
class CirclePoint:
    """A single point of the circle, as a rational turn in [0, 1)."""

    turn: Fraction

    def __post_init__(self):
        if not isinstance(self.turn, Fraction) or not 0 <= self.turn < 1:
            raise ValidationError(f"circle point turn must be a Fraction in [0,1), got {self.turn!r}")

    @staticmethod
    def of(value) -> "CirclePoint":
        if isinstance(value, CirclePoint):
            return value
        if isinstance(value, (int, str)):
            return CirclePoint(parse_turn(str(value)))
        if isinstance(value, Fraction):
            return CirclePoint(value % 1)
        raise ValidationError(f"cannot interpret {value!r} as a circle point")

    def __str__(self):
        return format_turn(self.turn)


@dataclass(frozen=True)
class Arc:
    """A counterclockwise arc from lo to hi with endpoint membership flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        for end in (self.lo, self.hi):
            if not isinstance(end, Fraction) or not 0 <= end < 1:
                raise ValidationError(f"arc endpoint must be a Fraction in [0,1), got {end!r}")
        if self.lo == self.hi and (self.lo_closed or self.hi_closed):
            # Equal endpoints are only meaningful for the full-wrap open arc;
            # a closed full wrap is the whole circle and a zero-length arc a point.
            raise ValidationError(
                "arc endpoints coincide: use T for the full circle or point:x for a point"
            )

    def contains_turn(self, t: Fraction) -> bool:
        if t == self.lo:
            return self.lo_closed
        if t == self.hi:
            return self.hi_closed
        if self.lo == self.hi:
            return True  # full wrap minus the endpoint
        if self.lo < self.hi:
            return self.lo < t < self.hi
        return t > self.lo or t < self.hi

    def __str__(self):
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{format_turn(self.lo)},{format_turn(self.hi)}{rb}"


@dataclass(frozen=True)
class CircleSet:
    """A normalized finite union of points and arcs, or the full circle."""

    full: bool = False
    pieces: tuple = ()

    # -- constructors --------------------------------------------------------

    @staticmethod
    def empty() -> "CircleSet":
        return _EMPTY

    @staticmethod
    def all() -> "CircleSet":
        return _ALL

    @staticmethod
    def point(value) -> "CircleSet":
        return CircleSet.of(points=(CirclePoint.of(value).turn,))

    @staticmethod
    def arc(lo, hi, lo_closed: bool, hi_closed: bool) -> "CircleSet":
        ends = (CirclePoint.of(lo).turn, CirclePoint.of(hi).turn)
        return CircleSet.of(arcs=(Arc(ends[0], ends[1], lo_closed, hi_closed),))

    @staticmethod
    def of(points=(), arcs=(), full: bool = False) -> "CircleSet":
        if full:
            return _ALL
        return _normalize([CirclePoint.of(p).turn for p in points], list(arcs))

    # -- queries ---------------------------------------------------------

    @property
    def is_all(self) -> bool:
        return self.full

    @property
    def is_empty(self) -> bool:
        return not self.full and not self.pieces

    def contains(self, value) -> bool:
        if self.full:
            return True
        t = CirclePoint.of(value).turn
        for piece in self.pieces:
            if isinstance(piece, CirclePoint):
                if piece.turn == t:
                    return True
            elif piece.contains_turn(t):
                return True
        return False

    def __contains__(self, value):
        return self.contains(value)

    def endpoints(self) -> tuple[Fraction, ...]:
        """All point positions and arc endpoints; useful for choosing probes."""
        out = set()
        for piece in self.pieces:
            if isinstance(piece, CirclePoint):
                out.add(piece.turn)
            else:
                out.add(piece.lo)
                out.add(piece.hi)
        return tuple(sorted(out))

    # -- algebra -----------------------------------------------------------

    def union(self, other: "CircleSet") -> "CircleSet":
        if self.full or other.full:
            return _ALL
        points, arcs = [], []
        for piece in self.pieces + other.pieces:
            (points if isinstance(piece, CirclePoint) else arcs).append(
                piece.turn if isinstance(piece, CirclePoint) else piece
            )
        return _normalize(points, arcs)

    def closure(self) -> "CircleSet":
        """Topological closure: arcs keep their endpoints."""
        if self.full:
            return _ALL
        points, arcs = [], []
        for piece in self.pieces:
            if isinstance(piece, CirclePoint):
                points.append(piece.turn)
            elif piece.lo == piece.hi:
                # the circle minus a point closes up to the whole circle
                return _ALL
            else:
                arcs.append(Arc(piece.lo, piece.hi, True, True))
        return _normalize(points, arcs)

    # -- text form -----------------------------------------------------------

    def format(self) -> str:
        if self.full:
            return "T"
        parts = []
        for piece in self.pieces:
            if isinstance(piece, CirclePoint):
                parts.append(f"point:{piece}")
            else:
                parts.append(f"arc:{piece}")
        return ",".join(parts)

    def __str__(self):
        return self.format()

    @staticmethod
    def parse(text: str) -> "CircleSet":
        text = text.strip()
        if text == "":
            return _EMPTY
        if text == "T":
            return _ALL
        points, arcs = [], []
        for term in _split_top_level(text):
            term = term.strip()
            if term.startswith("point:"):
                points.append(parse_turn(term[len("point:"):]))
            elif term.startswith("arc:"):
                arcs.append(_parse_arc(term[len("arc:"):].strip()))
            else:
                raise ValidationError(
                    f"bad circle term {term!r}: expected T, point:x or arc:(x,y)"
                )
        return _normalize(points, arcs)


def circle_closure(d: CircleSet) -> CircleSet:
    return d.closure()


_EMPTY = CircleSet(False, ())
_ALL = CircleSet(True, ())
# dataclass __init__ is still reachable; the module-level constants above are
# the canonical empty and full values used by all constructors.


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_arc(body: str) -> Arc:
    if len(body) < 2 or body[0] not in "([" or body[-1] not in ")]":
        raise ValidationError(f"bad arc {body!r}: expected like (1/4,1/2]")
    lo_closed = body[0] == "["
    hi_closed = body[-1] == "]"
    inner = body[1:-1].split(",")
    if len(inner) != 2:
        raise ValidationError(f"bad arc {body!r}: expected two endpoints")
    return Arc(parse_turn(inner[0]), parse_turn(inner[1]), lo_closed, hi_closed)


def _normalize(point_turns: list[Fraction], arcs: list[Arc]) -> CircleSet:
    """Canonical form via a boundary sweep.

    Between consecutive boundary values membership is constant, so sampling
    one midpoint per gap plus each boundary value determines the set; maximal
    covered runs become arcs, isolated covered boundary values become points.
    """
    if not point_turns and not arcs:
        return _EMPTY
    point_set = set(point_turns)

    def member(t: Fraction) -> bool:
        return t in point_set or any(a.contains_turn(t) for a in arcs)

    boundary = sorted(point_set | {a.lo for a in arcs} | {a.hi for a in arcs})
    k = len(boundary)
    gap_mid = []
    for i in range(k):
        lo = boundary[i]
        hi = boundary[(i + 1) % k]
        length = (hi - lo) % 1
        if length == 0:
            length = Fraction(1)
        gap_mid.append((lo + length / 2) % 1)
    covered = []  # alternating boundary value, following gap
    for i in range(k):
        covered.append(member(boundary[i]))
        covered.append(member(gap_mid[i]))
    if all(covered):
        return _ALL

    n = 2 * k
    start = covered.index(False)
    pieces = []
    i = start + 1
    while i <= start + n:
        if not covered[i % n]:
            i += 1
            continue
        j = i
        while covered[(j + 1) % n] and j + 1 <= start + n:
            j += 1
        run = [(p % n) for p in range(i, j + 1)]
        pieces.append(_run_to_piece(run, boundary))
        i = j + 2
    pieces.sort(key=_piece_key)
    return CircleSet(False, tuple(pieces))


def _run_to_piece(run: list[int], boundary: list[Fraction]):
    k = len(boundary)
    has_gap = any(p % 2 == 1 for p in run)
    first, last = run[0], run[-1]
    if not has_gap:
        return CirclePoint(boundary[first // 2])
    if first % 2 == 0:
        lo, lo_closed = boundary[first // 2], True
    else:
        lo, lo_closed = boundary[first // 2], False
    if last % 2 == 0:
        hi, hi_closed = boundary[last // 2], True
    else:
        hi, hi_closed = boundary[(last // 2 + 1) % k], False
    return Arc(lo, hi, lo_closed, hi_closed)


def _piece_key(piece):
    if isinstance(piece, CirclePoint):
        return (piece.turn, 0)
    return (piece.lo, 1)
