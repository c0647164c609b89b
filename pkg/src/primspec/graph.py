"""Directed graphs with a finite vertex set and edge multiplicities in {1, 2, ...} or omega.

A graph is presented by listing its vertices and, for each ordered pair of
vertices, how many parallel edges run between them.  An infinite bundle of
parallel edges is recorded with the multiplicity ``omega``.  This finite
presentation is what every computation in the package consumes.

Text format::

    graph {
      # comment
      vertices: u, v, w;
      edge u -> v;          # multiplicity 1
      edge v -> w [inf];    # infinitely many parallel edges
      edge w -> w [3];
    }

Repeated ``edge`` lines for the same ordered pair accumulate: multiplicities
are summed, with omega absorbing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

from .errors import GraphParseError, ValidationError

# Bound on a single multiplicity literal in the text format.  Sums held in
# memory are exact Python integers, so arithmetic never wraps; the bound only
# keeps presentations within a fixed-width range.
MAX_MULTIPLICITY = 2**63 - 1

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Cardinality:
    """A count of edges: a non-negative integer or omega (countable infinity).

    Addition absorbs omega and is exact on finite values.  Instances are
    immutable and totally ordered, with omega greater than every finite value.
    """

    __slots__ = ("_n",)

    def __init__(self, n: int | None):
        if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 0):
            raise ValidationError(f"finite cardinality must be a non-negative integer, got {n!r}")
        object.__setattr__(self, "_n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Cardinality is immutable")

    @property
    def is_omega(self) -> bool:
        return self._n is None

    @property
    def is_finite(self) -> bool:
        return self._n is not None

    @property
    def n(self) -> int:
        """The finite value; raises on omega."""
        if self._n is None:
            raise ValidationError("cardinality is omega, not a finite integer")
        return self._n

    def __add__(self, other: "Cardinality") -> "Cardinality":
        if not isinstance(other, Cardinality):
            return NotImplemented
        if self._n is None or other._n is None:
            return OMEGA
        return Cardinality(self._n + other._n)

    def __eq__(self, other):
        return isinstance(other, Cardinality) and self._n == other._n

    def __lt__(self, other: "Cardinality") -> bool:
        if self._n is None:
            return False
        if other._n is None:
            return True
        return self._n < other._n

    def __le__(self, other: "Cardinality") -> bool:
        return self == other or self < other

    def __hash__(self):
        return hash(("Cardinality", self._n))

    def __repr__(self):
        return "OMEGA" if self._n is None else f"Cardinality({self._n})"

    def __str__(self):
        return "inf" if self._n is None else str(self._n)

    def to_json(self):
        return "inf" if self._n is None else self._n

    @classmethod
    def from_json(cls, value) -> "Cardinality":
        if value == "inf":
            return OMEGA
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        raise ValidationError(f"cardinality must be a non-negative integer or \"inf\", got {value!r}")


OMEGA = Cardinality(None)
ZERO = Cardinality(0)


def finite(n: int) -> Cardinality:
    return Cardinality(n)


@dataclass(frozen=True)
class Edge:
    """A bundle of parallel edges from src to dst; mult >= 1."""

    src: str
    dst: str
    mult: Cardinality

    def __post_init__(self):
        if self.mult.is_finite and self.mult.n < 1:
            raise ValidationError(f"edge {self.src} -> {self.dst} has multiplicity 0")


@dataclass(frozen=True)
class Loop:
    """A vertex-simple directed cycle, stored in a canonical rotation.

    ``vertices`` lists the cycle in traversal order starting from its
    lexicographically least vertex; consecutive vertices (and last back to
    first) are connected by edges of the underlying graph.
    """

    vertices: tuple[str, ...]

    @staticmethod
    def from_cycle(seq) -> "Loop":
        seq = tuple(seq)
        if not seq:
            raise ValidationError("a loop needs at least one vertex")
        if len(set(seq)) != len(seq):
            raise ValidationError(f"loop {seq!r} repeats a vertex")
        k = seq.index(min(seq))
        return Loop(seq[k:] + seq[:k])

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edge_pairs(self) -> tuple[tuple[str, str], ...]:
        n = len(self.vertices)
        return tuple((self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n))

    def sort_key(self):
        return (len(self.vertices), self.vertices)

    def __len__(self):
        return len(self.vertices)


class Graph:
    """Immutable directed graph over named vertices.

    Vertex names are non-empty strings over [A-Za-z0-9_].  Edges are stored
    as one record per ordered pair with an aggregated multiplicity.
    """

    def __init__(self, vertices, edges=()):
        seen = []
        for name in vertices:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValidationError(f"bad vertex name {name!r}: use [A-Za-z0-9_]+")
            if name not in seen:
                seen.append(name)
        self._vertices = tuple(sorted(seen))
        self._vset = frozenset(self._vertices)

        acc: dict[tuple[str, str], Cardinality] = {}
        for e in edges:
            if isinstance(e, Edge):
                src, dst, mult = e.src, e.dst, e.mult
            else:
                src, dst, mult = e
                if isinstance(mult, int):
                    mult = Cardinality(mult)
            for end in (src, dst):
                if end not in self._vset:
                    raise ValidationError(f"edge endpoint {end!r} is not a declared vertex")
            if mult.is_finite and mult.n < 1:
                raise ValidationError(f"edge {src} -> {dst} has multiplicity 0")
            key = (src, dst)
            acc[key] = acc[key] + mult if key in acc else mult
        self._edges = tuple(Edge(s, d, m) for (s, d), m in sorted(acc.items()))
        self._out: dict[str, dict[str, Cardinality]] = {v: {} for v in self._vertices}
        for e in self._edges:
            self._out[e.src][e.dst] = e.mult

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset:
        return self._vset

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"Graph({len(self._vertices)} vertices, {len(self._edges)} edge records)"

    # -- local edge structure ------------------------------------------------

    def successors(self, v: str) -> tuple[str, ...]:
        return tuple(self._out[v])

    def edge_mult(self, src: str, dst: str) -> Cardinality:
        return self._out[src].get(dst, ZERO)

    def out_cardinality(self, v: str) -> Cardinality:
        """Total number of edges emitted by v."""
        total = ZERO
        for m in self._out[v].values():
            total = total + m
        return total

    def out_cardinality_into(self, v: str, targets) -> Cardinality:
        """Number of edges from v whose target lies in the given vertex set."""
        targets = frozenset(targets)
        total = ZERO
        for dst, m in self._out[v].items():
            if dst in targets:
                total = total + m
        return total

    def is_row_finite(self) -> bool:
        """True when no vertex emits infinitely many edges."""
        return all(e.mult.is_finite for e in self._edges)

    def check_vertices(self, xs) -> frozenset:
        xs = frozenset(xs)
        bad = xs - self._vset
        if bad:
            raise ValidationError(f"unknown vertices: {sorted(bad)}")
        return xs

    # -- reachability ----------------------------------------------------

    @cached_property
    def _reach(self) -> dict[str, frozenset]:
        """For each vertex, the set of vertices reachable from it (reflexive)."""
        out = {}
        for start in self._vertices:
            seen = {start}
            stack = [start]
            while stack:
                for nxt in self._out[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            out[start] = frozenset(seen)
        return out

    def reaches(self, a: str, b: str) -> bool:
        """True when there is a path (possibly of length zero) from a to b."""
        self.check_vertices((a, b))
        return b in self._reach[a]

    def reach_set(self, a: str) -> frozenset:
        return self._reach[a]

    def tail_of_vertex(self, x: str) -> frozenset:
        """All vertices that reach x; the principal candidate for a maximal tail."""
        self.check_vertices((x,))
        return frozenset(v for v in self._vertices if x in self._reach[v])

    # -- cycles ----------------------------------------------------------

    def vertex_simple_loops(self, within=None) -> tuple[Loop, ...]:
        """All vertex-simple directed cycles whose vertices lie in ``within``.

        Each cycle is reported once, in canonical rotation, regardless of edge
        multiplicities.  ``within`` defaults to the whole vertex set.
        """
        allowed = self._vset if within is None else self.check_vertices(within)
        loops = []
        order = {v: i for i, v in enumerate(self._vertices)}
        for start in self._vertices:
            if start not in allowed:
                continue
            # Only collect cycles whose least vertex is `start`: restrict the
            # DFS to vertices strictly greater than `start`.
            path = [start]
            on_path = {start}

            def dfs():
                here = path[-1]
                for nxt in self._out[here]:
                    if nxt == start:
                        loops.append(Loop(tuple(path)))
                    elif nxt in allowed and nxt not in on_path and order[nxt] > order[start]:
                        path.append(nxt)
                        on_path.add(nxt)
                        dfs()
                        on_path.discard(path.pop())

            dfs()
        return tuple(sorted(loops, key=Loop.sort_key))

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self._vertices),
            "edges": [[e.src, e.dst, e.mult.to_json()] for e in self._edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "Graph":
        try:
            vertices = obj["vertices"]
            raw_edges = obj["edges"]
        except (TypeError, KeyError):
            raise ValidationError("graph object needs 'vertices' and 'edges' fields")
        edges = []
        for item in raw_edges:
            if len(item) == 2:
                src, dst = item
                mult = Cardinality(1)
            elif len(item) == 3:
                src, dst, raw = item
                mult = Cardinality.from_json(raw)
            else:
                raise ValidationError(f"bad edge entry {item!r}: use [src, dst, mult]")
            edges.append((src, dst, mult))
        return cls(vertices, edges)

    def to_text(self) -> str:
        lines = ["graph {"]
        if self._vertices:
            lines.append("  vertices: " + ", ".join(self._vertices) + ";")
        for e in self._edges:
            if e.mult == Cardinality(1):
                lines.append(f"  edge {e.src} -> {e.dst};")
            else:
                lines.append(f"  edge {e.src} -> {e.dst} [{e.mult}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- text format parser ------------------------------------------------------

_PUNCT = ("->", "{", "}", ":", ";", ",", "[", "]")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "punct", "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("->", i):
            tokens.append(_Token("punct", "->", line, col))
            i += 2
            col += 2
            continue
        if c in "{}:;,[]":
            tokens.append(_Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        m = re.match(r"[A-Za-z0-9_]+", text[i:])
        if m:
            word = m.group(0)
            tokens.append(_Token("ident", word, line, col))
            i += len(word)
            col += len(word)
            continue
        raise GraphParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise GraphParseError(message, tok.line, tok.col)

    def expect_punct(self, text: str) -> _Token:
        tok = self.next()
        if tok.kind != "punct" or tok.text != text:
            shown = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected {text!r}, found {shown!r}", tok)
        return tok

    def expect_ident(self, what: str) -> _Token:
        tok = self.next()
        if tok.kind != "ident":
            shown = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected {what}, found {shown!r}", tok)
        return tok

    def parse(self) -> Graph:
        head = self.next()
        if head.kind != "ident" or head.text != "graph":
            self.fail("expected 'graph'", head)
        self.expect_punct("{")
        vertices: list[str] = []
        declared: set[str] = set()
        edges: list[tuple[_Token, str, str, Cardinality]] = []
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "}":
                self.next()
                break
            if tok.kind == "eof":
                self.fail("expected '}' before end of input", tok)
            if tok.kind != "ident":
                self.fail(f"expected 'vertices:' or 'edge', found {tok.text!r}", tok)
            if tok.text == "vertices":
                self.next()
                self.expect_punct(":")
                while True:
                    name = self.expect_ident("a vertex name")
                    if name.text not in declared:
                        declared.add(name.text)
                        vertices.append(name.text)
                    sep = self.next()
                    if sep.kind == "punct" and sep.text == ",":
                        continue
                    if sep.kind == "punct" and sep.text == ";":
                        break
                    shown = sep.text if sep.kind != "eof" else "end of input"
                    self.fail(f"expected ',' or ';', found {shown!r}", sep)
            elif tok.text == "edge":
                at = self.next()
                src = self.expect_ident("a source vertex")
                self.expect_punct("->")
                dst = self.expect_ident("a target vertex")
                mult = Cardinality(1)
                nxt = self.peek()
                if nxt.kind == "punct" and nxt.text == "[":
                    self.next()
                    val = self.expect_ident("a multiplicity (integer or 'inf')")
                    if val.text == "inf":
                        mult = OMEGA
                    elif val.text.isdigit():
                        value = int(val.text)
                        if value < 1:
                            self.fail("edge multiplicity must be at least 1", val)
                        if value > MAX_MULTIPLICITY:
                            self.fail(f"edge multiplicity exceeds {MAX_MULTIPLICITY}", val)
                        mult = Cardinality(value)
                    else:
                        self.fail(f"expected an integer or 'inf', found {val.text!r}", val)
                    self.expect_punct("]")
                self.expect_punct(";")
                edges.append((at, src.text, dst.text, mult))
            else:
                self.fail(f"expected 'vertices:' or 'edge', found {tok.text!r}", tok)
        tail = self.next()
        if tail.kind != "eof":
            self.fail(f"unexpected trailing input {tail.text!r}", tail)
        for at, src, dst, _ in edges:
            for end in (src, dst):
                if end not in declared:
                    raise GraphParseError(f"edge endpoint {end!r} is not a declared vertex", at.line, at.col)
        return Graph(vertices, [(src, dst, mult) for _, src, dst, mult in edges])


def parse_graph(text: str) -> Graph:
    """Parse the graph text format; raises GraphParseError with position info."""
    return _Parser(text).parse()
