"""Request/response models and the handlers shared by the CLI and the service.

Handlers take a parsed Graph plus plain parameters and return JSON-ready
dicts, so the CLI can print them directly and the service can validate them
against the response models below.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from . import report
from .errors import ValidationError
from .graph import Graph, parse_graph
from .ideals import gi_ideal, quotient_graph
from .report import SCHEMA, TailLabels
from .topology import PrimSpace

# -- request models -----------------------------------------------------------


class GraphSource(BaseModel):
    """Exactly one of text (surface syntax) or graph (JSON form)."""

    model_config = ConfigDict(extra="forbid")

    text: str | None = None
    graph: dict | None = None


class LabeledRequest(GraphSource):
    label_by_root: bool = False


class ClosureRequest(LabeledRequest):
    # a subset object {"gamma":[...],"bv":[...],"circle":{...}} or the
    # semicolon shorthand accepted by the CLI --set flag
    subset: dict | str


class QuotientRequest(GraphSource):
    K: list[str]
    B: list[str] = Field(default_factory=list)


# -- response models ----------------------------------------------------------


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA, alias="schema")


class GraphJson(BaseModel):
    vertices: list[str]
    edges: list[list]


class GraphResponse(Report):
    graph: GraphJson


class TailEntry(BaseModel):
    id: str
    vertices: list[str]
    kind: str
    loop: list[str] | None
    k_m: list[str] | None
    b_m: list[str] | None
    m_inf_empty: list[str]


class TailsResponse(Report):
    tails: list[TailEntry]


class BvResponse(Report):
    breaking_vertices: list[str]


class HsResponse(Report):
    sets: list[list[str]]


class IdealJson(BaseModel):
    K: list[str]
    B: list[str]


class IdealsResponse(Report):
    ideals: list[IdealJson]
    hasse: list[list[int]]


class PrimGammaEntry(BaseModel):
    tail: str
    vertices: list[str]
    ideal: IdealJson


class PrimBvEntry(BaseModel):
    vertex: str
    ideal: IdealJson


class SandwichJson(BaseModel):
    lower: IdealJson
    upper: IdealJson


class PrimTauEntry(BaseModel):
    tail: str
    vertices: list[str]
    loop: list[str]
    sandwich: SandwichJson


class PrimResponse(Report):
    gamma: list[PrimGammaEntry]
    bv: list[PrimBvEntry]
    tau: list[PrimTauEntry]


class SubsetJson(BaseModel):
    gamma: list[str] | None = None
    bv: list[str] | None = None
    circle: dict[str, str] | None = None


class OrderNode(BaseModel):
    ref: str
    type: str
    tail: str | None = None
    vertices: list[str] | None = None
    vertex: str | None = None


class OrderPair(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(alias="from")
    to: str
    match: str | None = None


class OrderResponse(Report):
    nodes: list[OrderNode]
    pairs: list[OrderPair]


class SimpleResponse(Report):
    simple: bool
    gamma_tails: int
    tau_tails: int
    breaking_vertices: int


# -- shared handlers ----------------------------------------------------------


def load_graph(source: GraphSource) -> Graph:
    if (source.text is None) == (source.graph is None):
        raise ValidationError("provide exactly one of 'text' or 'graph'")
    if source.text is not None:
        return parse_graph(source.text)
    return Graph.from_json_obj(source.graph)


def handle_parse(g: Graph) -> dict:
    return report.parse_report(g)


def handle_tails(g: Graph, by_root: bool = False) -> dict:
    space = PrimSpace(g)
    return report.tails_report(space, TailLabels(space, by_root))


def handle_bv(g: Graph) -> dict:
    return report.bv_report(PrimSpace(g))


def handle_hs(g: Graph) -> dict:
    return report.hs_report(g)


def handle_ideals(g: Graph) -> dict:
    return report.ideals_report(g)


def handle_prim(g: Graph, by_root: bool = False) -> dict:
    space = PrimSpace(g)
    return report.prim_report(space, TailLabels(space, by_root))


def handle_closure(g: Graph, subset, by_root: bool = False) -> dict:
    space = PrimSpace(g)
    labels = TailLabels(space, by_root)
    if isinstance(subset, str):
        s = report.subset_from_inline(space, labels, subset)
    else:
        s = report.subset_from_json(space, labels, subset)
    return report.subset_to_json(space.closure(s), labels)


def handle_order(g: Graph, by_root: bool = False) -> dict:
    space = PrimSpace(g)
    return report.order_report(space, TailLabels(space, by_root))


def handle_quotient(g: Graph, k: list[str], b: list[str]) -> dict:
    ideal = gi_ideal(g, k, b)
    return report.quotient_report(quotient_graph(g, ideal))


def handle_simple(g: Graph) -> dict:
    return report.simple_report(PrimSpace(g))
