"""FastAPI service exposing the analysis library.

The service is stateless: every endpoint takes a full algebra document and
computes from scratch, so results are reproducible and the process can be
scaled horizontally.  The CLI is a thin client of these endpoints.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..analysis import analyze_algebra, idempotent_report
from ..errors import AxialError
from ..fileio import from_document, to_document
from ..frobenius import build_form, check_A0_closed, choose_Xprime
from ..graphs import axial_decomposition
from ..axes import analyze_axis
from ..models import make_model
from . import schemas

app = FastAPI(
    title="axialalg",
    description="Exact analysis of primitive axial algebras of Jordan type",
    version=__version__,
)


@app.exception_handler(AxialError)
async def axial_error_handler(_: Request, exc: AxialError):
    return JSONResponse(status_code=400, content={"detail": f"{type(exc).__name__}: {exc}"})


@app.get("/health", response_model=schemas.HealthResponse)
async def health():
    return schemas.HealthResponse(status="ok", name="axialalg", version=__version__)


@app.post("/make", response_model=schemas.MakeResponse)
async def make(req: schemas.MakeRequest):
    field = req.field.to_field()
    A = make_model(field, req.kind, n=req.n, lam=req.lam, phi=req.phi)
    return schemas.MakeResponse(algebra=to_document(A))


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
async def analyze(req: schemas.AnalyzeRequest):
    A = from_document(req.algebra)
    report = analyze_algebra(
        A,
        max_depth=req.options.max_depth,
        max_axes=req.options.max_axes,
        include_idempotents=req.options.idempotents,
        generators=req.options.generators,
    )
    return schemas.AnalyzeResponse(
        verdict=report["verdict"],
        violations=[schemas.Violation(**v) for v in report["violations"]],
        report=report,
    )


@app.post("/idempotents", response_model=schemas.IdempotentsResponse)
async def idempotents(req: schemas.IdempotentsRequest):
    A = from_document(req.algebra)
    axes = _pick_generators(A, req.generators)
    return schemas.IdempotentsResponse(report=idempotent_report(A, axes))


def _pick_generators(A, names):
    axes = []
    for i, name in enumerate(A.basis_names):
        if names is not None and name not in names:
            continue
        e = A.basis_element(i)
        if analyze_axis(e).is_primitive_axis:
            axes.append(e)
    if not axes:
        raise AxialError("no verified axes among the requested basis vectors")
    return axes


@app.post("/decompose", response_model=schemas.DecomposeResponse)
async def decompose(req: schemas.DecomposeRequest):
    A = from_document(req.algebra)
    axes = _pick_generators(A, req.generators)
    dec = axial_decomposition(axes, max_depth=req.max_depth, max_axes=req.max_axes)
    comps = []
    for c in dec.components:
        z = None
        if c.z_ideal is not None:
            z = {
                "dim": len(c.z_ideal.basis),
                "is_ideal": c.z_ideal.is_ideal,
                "square_zero": c.z_ideal.square_zero,
                "quotient_splits": c.z_ideal.quotient_splits,
            }
        comps.append(
            schemas.ComponentInfo(
                size=len(c.axes),
                type=c.type_desc.label(),
                subalgebra_dim=len(c.subalgebra_basis),
                annihilator_dim=len(c.annihilator_basis),
                axes=[repr(x) for x in c.axes],
                z_ideal=z,
            )
        )
    return schemas.DecomposeResponse(
        spanning=dec.spanning,
        truncated=dec.truncated,
        pairwise_products_zero=dec.pairwise_products_zero,
        components=comps,
        intersections=[
            {"components": [i, j], "dim": len(basis), "annihilating": ann}
            for i, j, basis, ann in dec.intersections
        ],
    )


@app.post("/frobenius", response_model=schemas.FrobeniusResponse)
async def frobenius(req: schemas.FrobeniusRequest):
    A = from_document(req.algebra)
    axes = _pick_generators(A, req.generators)
    dec = axial_decomposition(axes, max_depth=req.max_depth, max_axes=req.max_axes)
    sel = choose_Xprime(dec)
    form = build_form(sel)
    a0 = []
    # Verdicts for every closure axis: the exceptional ones are those
    # excluded from X'.
    for x, r in zip(dec.closure.axes, dec.closure.reports):
        v = check_A0_closed(r, form)
        a0.append({"axis": repr(x), "verdict": v.verdict, "norm": str(v.norm)})
    return schemas.FrobeniusResponse(
        basis=[repr(b) for b in form.basis],
        gram=[[str(x) for x in row] for row in form.gram],
        norms=[str(form.norm(x)) for x in sel.axes],
        radical_dim=len(form.radical_basis),
        radical=[repr(r) for r in form.radical_basis],
        cases=[
            {"component": c.index, "case": c.case, "nu": None if c.chosen_nu is None else str(c.chosen_nu)}
            for c in sel.components
        ],
        a0_verdicts=a0,
    )


@app.post("/graph", response_model=schemas.GraphResponse)
async def graph(req: schemas.GraphRequest):
    A = from_document(req.algebra)
    axes = _pick_generators(A, req.generators)
    dec = axial_decomposition(axes, max_depth=req.max_depth, max_axes=req.max_axes)
    g = dec.graph
    return schemas.GraphResponse(
        dot=g.dot(),
        vertices=len(g.vertices),
        edges=len(g.edges),
        strong_edges=len(g.strong_edges),
        components=len(g.components()),
    )
