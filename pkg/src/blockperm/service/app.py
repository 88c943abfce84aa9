"""FastAPI service exposing the block-permutation toolkit over HTTP.

Library domain errors surface as 400 responses with the library message;
malformed request bodies are FastAPI's usual 422.  All endpoints are pure
request/response; there is no state.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bijections import (
    BijectionTrace,
    delete_max,
    insert_max,
    majorize_inject,
    map_v,
    map_w,
    reorder_blocks,
    swap_adjacent,
    transfer_step,
)
from ..core import BlockPermError, BlockPermutation, TwoBlockView, parse
from ..enumeration import CountTable, count_D, count_L, gen_D, gen_L, gen_ascending
from ..tableaux import cell_count, render_shape, skew_count
from ..verify import run_suite
from .schemas import (
    CountRequest,
    CountResponse,
    EnumerateRequest,
    EnumerateResponse,
    HealthResponse,
    MapRequest,
    MapResponse,
    TableauCountRequest,
    TableauCountResponse,
    TableRequest,
    TableResponse,
    TableRow,
    TraceStepModel,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="blockperm",
    version=__version__,
    description=(
        "Block-ascending permutations: increasing-pattern avoidance, "
        "explicit bijections, enumeration, and Young tableau counts."
    ),
)


@app.exception_handler(BlockPermError)
def _domain_error(request: Request, exc: BlockPermError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"detail": str(exc), "error": type(exc).__name__},
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    comp = tuple(req.comp)
    if req.k is not None:
        return CountResponse(
            comp=req.comp, selector="k", param=req.k,
            count=count_L(req.k, comp, req.cap),
        )
    assert req.lis is not None
    return CountResponse(
        comp=req.comp, selector="lis", param=req.lis,
        count=count_D(req.lis, comp, req.cap),
    )


@app.post("/count/table", response_model=TableResponse)
def count_table(req: TableRequest) -> TableResponse:
    table = CountTable.for_composition(tuple(req.comp), req.cap)
    table.check()
    return TableResponse(
        comp=req.comp,
        rows=[TableRow(**row) for row in table.to_rows()],
        csv=table.to_csv(),
    )


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_perms(req: EnumerateRequest) -> EnumerateResponse:
    comp = tuple(req.comp)
    if req.k is not None:
        stream = gen_L(req.k, comp, req.cap)
    elif req.lis is not None:
        stream = gen_D(req.lis, comp, req.cap)
    else:
        stream = gen_ascending(comp, req.cap)
    perms = [pi.text() for pi in stream]  # canonical comma form
    return EnumerateResponse(comp=req.comp, perms=perms, count=len(perms))


def _apply_map(req: MapRequest) -> tuple[BlockPermutation, BijectionTrace]:
    pi = parse(req.perm)
    trace = BijectionTrace()
    if req.name == "w":
        view = map_w(TwoBlockView.from_perm(pi))
        out = view.to_perm()
        trace.record("w", 1, pi.text(compact=True), out.text(compact=True))
    elif req.name == "v":
        view = map_v(TwoBlockView.from_perm(pi))
        out = view.to_perm()
        trace.record("v", 1, pi.text(compact=True), out.text(compact=True))
    elif req.name == "swap":
        out = swap_adjacent(pi, req.index, trace)
    elif req.name == "sort":
        out, trace = reorder_blocks(pi, tuple(req.target))
    elif req.name == "transfer":
        out = transfer_step(pi, req.index, trace)
    elif req.name == "inject":
        out, trace = majorize_inject(pi, tuple(req.target))
    elif req.name == "insert-max":
        out = insert_max(pi, req.k)
        trace.record("insert-max", 1, pi.text(compact=True), out.text(compact=True))
    else:
        out = delete_max(pi, req.k)
        trace.record("delete-max", 1, pi.text(compact=True), out.text(compact=True))
    return out, trace


@app.post("/map", response_model=MapResponse, response_model_exclude_none=True)
def apply_map(req: MapRequest) -> MapResponse:
    out, trace = _apply_map(req)
    return MapResponse(
        perm=out.text(compact=True),
        comp=list(out.comp),
        values=list(out.values),
        trace=[TraceStepModel(**s) for s in trace.to_json()] if req.trace else None,
    )


@app.post("/tableau/count", response_model=TableauCountResponse, response_model_exclude_none=True)
def tableau_count(req: TableauCountRequest) -> TableauCountResponse:
    outer, inner = tuple(req.outer), tuple(req.inner)
    return TableauCountResponse(
        outer=req.outer,
        inner=req.inner,
        cells=cell_count(outer, inner),
        count=skew_count(outer, inner),
        diagram=render_shape(outer, inner) if req.diagram else None,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    report = run_suite(req.suite, req.max_size)
    return VerifyResponse(**report.to_json())
