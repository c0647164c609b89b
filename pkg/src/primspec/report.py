"""Serialization of analysis results: JSON reports, DOT drawings, text summaries.

All JSON reports carry a schema tag and have deterministic field and element
ordering, so byte-for-byte comparison of outputs is meaningful.  Maximal
tails are referred to by identifiers M1, M2, ... in canonical tail order
(size, then vertex names); with label_by_root they are instead named after
the least vertex generating the tail.  Identifier lookup accepts both forms.
"""

from __future__ import annotations

from .circle import CircleSet
from .errors import ValidationError
from .graph import Graph
from .ideals import (
    GaugeInvariantIdeal,
    enumerate_gi_ideals,
    gi_contains,
    prim_elements,
    sandwich,
)
from .subsets import enumerate_hs
from .tails import MaximalTail
from .topology import PrimSpace, PrimSubset, prim_subset

SCHEMA = "primspec/1"


class TailLabels:
    """Stable identifiers for the maximal tails of one graph."""

    def __init__(self, space: PrimSpace, by_root: bool = False):
        self.space = space
        self.by_root = by_root
        self._by_tail = {}
        self._by_text = {}
        for i, tail in enumerate(space.tails, start=1):
            root = min(
                v for v in tail.vertices
                if space.graph.tail_of_vertex(v) == tail.vertex_set
            )
            canonical = f"M{i}"
            label = root if by_root else canonical
            self._by_tail[tail] = label
            self._by_text[canonical] = tail
            self._by_text.setdefault(root, tail)

    def label(self, tail: MaximalTail) -> str:
        return self._by_tail[tail]

    def resolve(self, text: str) -> MaximalTail:
        tail = self._by_text.get(str(text))
        if tail is None:
            known = sorted(self._by_tail.values())
            raise ValidationError(f"unknown tail identifier {text!r}; known: {known}")
        return tail


def vertex_list(vs) -> list[str]:
    return sorted(vs)


def ideal_json(ideal: GaugeInvariantIdeal) -> dict:
    return ideal.to_json_obj()


# -- subcommand reports ------------------------------------------------------


def parse_report(g: Graph) -> dict:
    return {"schema": SCHEMA, "graph": g.to_json_obj()}


def tails_report(space: PrimSpace, labels: TailLabels) -> dict:
    entries = []
    for tail in space.tails:
        data = space.data[tail]
        entries.append({
            "id": labels.label(tail),
            "vertices": list(tail.vertices),
            "kind": tail.kind,
            "loop": list(tail.loop.vertices) if tail.loop else None,
            "k_m": vertex_list(data.k_m) if data.k_m is not None else None,
            "b_m": vertex_list(data.b_m) if data.b_m is not None else None,
            "m_inf_empty": vertex_list(data.m_inf_empty),
        })
    return {"schema": SCHEMA, "tails": entries}


def bv_report(space: PrimSpace) -> dict:
    return {"schema": SCHEMA, "breaking_vertices": vertex_list(space.bv)}


def hs_report(g: Graph) -> dict:
    return {"schema": SCHEMA, "sets": [vertex_list(s) for s in enumerate_hs(g)]}


def ideals_report(g: Graph) -> dict:
    ideals = enumerate_gi_ideals(g)
    hasse = _cover_pairs(g, ideals)
    return {
        "schema": SCHEMA,
        "ideals": [ideal_json(i) for i in ideals],
        "hasse": hasse,
    }


def _cover_pairs(g: Graph, ideals) -> list[list[int]]:
    n = len(ideals)
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and gi_contains(g, ideals[i], ideals[j]):
                below[i][j] = True
    pairs = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][m] and below[m][j] for m in range(n)):
                pairs.append([i, j])
    return pairs


def prim_report(space: PrimSpace, labels: TailLabels) -> dict:
    elements = prim_elements(space.graph)
    gamma = [
        {"tail": labels.label(t), "vertices": list(t.vertices), "ideal": ideal_json(i)}
        for t, i in elements.gamma
    ]
    bv = [{"vertex": v, "ideal": ideal_json(i)} for v, i in elements.bv]
    tau = []
    for t in elements.tau:
        lower, upper = sandwich(space.graph, t)
        tau.append({
            "tail": labels.label(t),
            "vertices": list(t.vertices),
            "loop": list(t.loop.vertices),
            "sandwich": {"lower": ideal_json(lower), "upper": ideal_json(upper)},
        })
    return {"schema": SCHEMA, "gamma": gamma, "bv": bv, "tau": tau}


def simple_report(space: PrimSpace) -> dict:
    return {
        "schema": SCHEMA,
        "simple": space.is_simple(),
        "gamma_tails": len(space.gamma_tails),
        "tau_tails": len(space.tau_tails),
        "breaking_vertices": len(space.bv),
    }


def quotient_report(g: Graph) -> dict:
    return {"schema": SCHEMA, "graph": g.to_json_obj()}


# -- subsets of the space ------------------------------------------------------


def subset_to_json(s: PrimSubset, labels: TailLabels) -> dict:
    out = {}
    if s.gamma:
        out["gamma"] = [labels.label(t) for t in sorted(s.gamma, key=MaximalTail.sort_key)]
    if s.bv:
        out["bv"] = vertex_list(s.bv)
    if s.circle:
        out["circle"] = {labels.label(t): d.format() for t, d in s.circle}
    return out


def subset_from_json(space: PrimSpace, labels: TailLabels, obj) -> PrimSubset:
    if not isinstance(obj, dict):
        raise ValidationError("a space subset must be a JSON object")
    unknown = set(obj) - {"gamma", "bv", "circle"}
    if unknown:
        raise ValidationError(f"unknown subset fields {sorted(unknown)}; use gamma, bv, circle")
    gamma = []
    for item in obj.get("gamma", ()):
        tail = labels.resolve(item)
        if tail.is_tau:
            raise ValidationError(f"tail {item!r} carries a loop; address it under 'circle'")
        gamma.append(tail)
    bv = list(obj.get("bv", ()))
    circle = {}
    raw_circle = obj.get("circle", {})
    if not isinstance(raw_circle, dict):
        raise ValidationError("'circle' must map tail identifiers to circle set expressions")
    for key, expr in raw_circle.items():
        tail = labels.resolve(key)
        if not tail.is_tau:
            raise ValidationError(f"tail {key!r} carries no loop; address it under 'gamma'")
        d = expr if isinstance(expr, CircleSet) else CircleSet.parse(str(expr))
        circle[tail] = circle[tail].union(d) if tail in circle else d
    s = prim_subset(gamma, bv, circle)
    space.check_subset(s)
    return s


def subset_from_inline(space: PrimSpace, labels: TailLabels, text: str) -> PrimSubset:
    """Shorthand: semicolon-joined terms 'M2', 'bv:v', 'M1:arc:(0,1/2)'.

    A bare identifier adds the tail's point, or its whole circle for a
    loop-carrying tail.
    """
    obj: dict = {"gamma": [], "bv": [], "circle": {}}
    for term in text.split(";"):
        term = term.strip()
        if not term:
            continue
        if term.startswith("bv:"):
            obj["bv"].append(term[3:].strip())
        elif ":" in term:
            key, expr = term.split(":", 1)
            prev = obj["circle"].get(key.strip())
            d = CircleSet.parse(expr.strip())
            obj["circle"][key.strip()] = prev.union(d) if prev else d
        else:
            tail = labels.resolve(term)
            if tail.is_tau:
                obj["circle"][term] = CircleSet.all()
            else:
                obj["gamma"].append(term)
    return subset_from_json(space, labels, obj)


# -- specialization order -----------------------------------------------------


def _node_ref(labels: TailLabels, node) -> str:
    kind, payload = node
    if kind == "bv":
        return f"bv:{payload}"
    return f"{kind}:{labels.label(payload)}"


def order_report(space: PrimSpace, labels: TailLabels) -> dict:
    nodes = []
    for m in space.gamma_tails:
        nodes.append({
            "ref": f"gamma:{labels.label(m)}",
            "type": "gamma",
            "tail": labels.label(m),
            "vertices": list(m.vertices),
        })
    for v in space.bv:
        nodes.append({"ref": f"bv:{v}", "type": "bv", "vertex": v})
    for n in space.tau_tails:
        nodes.append({
            "ref": f"circle:{labels.label(n)}",
            "type": "circle",
            "tail": labels.label(n),
            "vertices": list(n.vertices),
        })
    pairs = []
    for src, dst, match in space.specialization_pairs():
        entry = {"from": _node_ref(labels, src), "to": _node_ref(labels, dst)}
        if match is not None:
            entry["match"] = match
        pairs.append(entry)
    return {"schema": SCHEMA, "nodes": nodes, "pairs": pairs}


# -- DOT output ---------------------------------------------------------------


def _dot_quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def graph_dot(g: Graph) -> str:
    lines = ["digraph G {"]
    for v in g.vertices:
        lines.append(f"  {_dot_quote(v)};")
    for e in g.edges:
        label = str(e.mult)
        lines.append(f"  {_dot_quote(e.src)} -> {_dot_quote(e.dst)} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _set_label(s) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def hs_dot(g: Graph) -> str:
    sets = enumerate_hs(g)
    lines = ["digraph HS {", "  rankdir=BT;"]
    for i, s in enumerate(sets):
        lines.append(f"  n{i} [label={_dot_quote(_set_label(s))}];")
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if a < b and not any(a < c < b for c in sets):
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ideals_dot(g: Graph) -> str:
    report = ideals_report(g)
    lines = ["digraph Ideals {", "  rankdir=BT;"]
    for i, ideal in enumerate(report["ideals"]):
        label = "K={" + ",".join(ideal["K"]) + "} B={" + ",".join(ideal["B"]) + "}"
        lines.append(f"  n{i} [label={_dot_quote(label)}];")
    for i, j in report["hasse"]:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def order_dot(space: PrimSpace, labels: TailLabels) -> str:
    """Specialization diagram; each circle family collapses to one node."""
    report = order_report(space, labels)
    lines = ["digraph Specialization {", "  rankdir=BT;"]
    for node in report["nodes"]:
        ref = node["ref"]
        if node["type"] == "circle":
            label = f"{node['tail']} ×𝕋"
        elif node["type"] == "gamma":
            label = f"{node['tail']} {_set_label(node['vertices'])}"
        else:
            label = f"bv {node['vertex']}"
        lines.append(f"  {_dot_quote(ref)} [label={_dot_quote(label)}];")
    for pair in report["pairs"]:
        if pair["from"] == pair["to"]:
            continue  # reflexive pairs clutter the drawing
        attrs = ""
        if pair.get("match") == "param":
            attrs = ' [style=dashed, label="t=z"]'
        lines.append(f"  {_dot_quote(pair['from'])} -> {_dot_quote(pair['to'])}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- text output ----------------------------------------------------------------


def tails_text(space: PrimSpace, labels: TailLabels) -> str:
    lines = []
    for tail in space.tails:
        bits = [labels.label(tail), _set_label(tail.vertices), tail.kind]
        if tail.loop:
            bits.append("loop " + "->".join(tail.loop.vertices))
        lines.append("  ".join(bits))
    return "\n".join(lines) + "\n" if lines else "no maximal tails\n"


def subset_text(s: PrimSubset, labels: TailLabels) -> str:
    obj = subset_to_json(s, labels)
    lines = []
    for t in obj.get("gamma", ()):
        lines.append(f"gamma {t}")
    for v in obj.get("bv", ()):
        lines.append(f"bv {v}")
    for t, expr in obj.get("circle", {}).items():
        lines.append(f"circle {t}: {expr}")
    return "\n".join(lines) + "\n" if lines else "empty\n"
