"""HTTP service exposing the analyses; all endpoints POST a graph payload."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import api
from .errors import PrimspecError

_STATUS = {"parse": 422, "validation": 422, "inadmissible": 409, "internal": 500}


def create_app() -> FastAPI:
    app = FastAPI(title="primspec", version="0.1.0")

    @app.exception_handler(PrimspecError)
    async def _domain_error(request: Request, exc: PrimspecError):
        status = _STATUS.get(exc.kind, 500)
        return JSONResponse(status_code=status, content={"error": exc.payload()})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/parse", response_model=api.GraphResponse)
    def parse(req: api.GraphSource):
        return api.handle_parse(api.load_graph(req))

    @app.post("/tails", response_model=api.TailsResponse)
    def tails(req: api.LabeledRequest):
        return api.handle_tails(api.load_graph(req), req.label_by_root)

    @app.post("/bv", response_model=api.BvResponse)
    def bv(req: api.GraphSource):
        return api.handle_bv(api.load_graph(req))

    @app.post("/hs", response_model=api.HsResponse)
    def hs(req: api.GraphSource):
        return api.handle_hs(api.load_graph(req))

    @app.post("/ideals", response_model=api.IdealsResponse)
    def ideals(req: api.GraphSource):
        return api.handle_ideals(api.load_graph(req))

    @app.post("/prim", response_model=api.PrimResponse)
    def prim(req: api.LabeledRequest):
        return api.handle_prim(api.load_graph(req), req.label_by_root)

    @app.post("/closure", response_model=api.SubsetJson, response_model_exclude_none=True)
    def closure(req: api.ClosureRequest):
        return api.handle_closure(api.load_graph(req), req.subset, req.label_by_root)

    @app.post("/order", response_model=api.OrderResponse, response_model_exclude_none=True)
    def order(req: api.LabeledRequest):
        return api.handle_order(api.load_graph(req), req.label_by_root)

    @app.post("/quotient", response_model=api.GraphResponse)
    def quotient(req: api.QuotientRequest):
        return api.handle_quotient(api.load_graph(req), req.K, req.B)

    @app.post("/simple", response_model=api.SimpleResponse)
    def simple(req: api.GraphSource):
        return api.handle_simple(api.load_graph(req))

    return app


app = create_app()
