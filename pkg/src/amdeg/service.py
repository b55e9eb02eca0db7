"""Optional HTTP service exposing the library over JSON.

Run with: uvicorn amdeg.service:app

Long computations run synchronously in the request worker; for the heavy
fixtures prefer the CLI. The service mirrors the CLI subcommands:
POST /scroll, /project, /analyze, /betti, /verify; GET /fixtures, /health.
"""

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .polyring import DEFAULT_PRIME
from .varieties import (ScrollSpec, ProjectionPoint, scroll_ideal,
                        project_from_point, random_point_off_variety)
from .amdcheck import analyze
from .resolve import free_resolution, minimalize
from .ideal_io import ideal_to_json, ideal_from_json
from .fixtures import FIXTURES, fixture_names, verify_fixture

app = FastAPI(
    title="amdeg",
    description="Graded algebra toolkit for projected rational normal "
                "scrolls and near-minimal-degree varieties.",
)


class RingModel(BaseModel):
    variables: List[str]
    prime: int
    order: str = "degrevlex"


class IdealModel(BaseModel):
    ring: RingModel
    generators: List[str]


class ScrollRequest(BaseModel):
    spec: str = Field(..., examples=["S(2,2,6)", "S(1,1,2)+vertex:0"])
    prime: int = DEFAULT_PRIME


class ScrollResponse(BaseModel):
    spec: str
    matrix: List[List[str]]
    vertex_variables: List[str]
    ideal: IdealModel


class ProjectRequest(BaseModel):
    spec: Optional[str] = None
    ideal: Optional[IdealModel] = None
    point: Optional[str] = Field(None, examples=["e9", "2,1,1,1,1"])
    random_point: bool = False
    seed: int = 0
    prime: int = DEFAULT_PRIME


class ProjectResponse(BaseModel):
    point: List[int]
    ideal: IdealModel


class AnalyzeRequest(BaseModel):
    ideal: IdealModel


class BettiResponse(BaseModel):
    nvars: int
    pd: int
    reg: int
    depth: int
    entries: List[List[int]]   # [homological index i, twist j, rank]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyRequest(BaseModel):
    names: Optional[List[str]] = None   # default: all fixtures
    prime: int = DEFAULT_PRIME
    window: List[int] = [-6, 4]


class FixtureSummary(BaseModel):
    name: str
    description: str


def _to_ideal(model):
    try:
        return ideal_from_json(model.model_dump())
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/fixtures", response_model=List[FixtureSummary])
def list_fixtures():
    return [FixtureSummary(name=n, description=FIXTURES[n].description)
            for n in fixture_names()]


@app.post("/scroll", response_model=ScrollResponse)
def scroll(req: ScrollRequest):
    try:
        spec = ScrollSpec.parse(req.spec)
        mat, ideal = scroll_ideal(spec, prime=req.prime)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ScrollResponse(
        spec=str(spec),
        matrix=[[str(mat.entry_poly(i, j)) for j in range(mat.ncols)]
                for i in range(2)],
        vertex_variables=[ideal.ring.variable_names[v]
                          for v in mat.vertex_vars],
        ideal=IdealModel(**ideal_to_json(ideal)),
    )


@app.post("/project", response_model=ProjectResponse)
def project(req: ProjectRequest):
    if req.ideal is not None:
        ideal = _to_ideal(req.ideal)
    elif req.spec:
        try:
            _, ideal = scroll_ideal(ScrollSpec.parse(req.spec),
                                    prime=req.prime)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
    else:
        raise HTTPException(status_code=422,
                            detail="need a scroll spec or an ideal")
    try:
        if req.random_point:
            point = random_point_off_variety(ideal, seed=req.seed)
        elif req.point:
            point = ProjectionPoint.parse(req.point, ideal.ring.nvars)
        else:
            raise ValueError("need a point or random_point=true")
        projected = project_from_point(ideal, point)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ProjectResponse(point=list(point.coords),
                           ideal=IdealModel(**ideal_to_json(projected)))


@app.post("/analyze")
def analyze_endpoint(req: AnalyzeRequest):
    ideal = _to_ideal(req.ideal)
    try:
        report = analyze(ideal)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return report.to_json()


@app.post("/betti", response_model=BettiResponse)
def betti(req: AnalyzeRequest):
    ideal = _to_ideal(req.ideal)
    res = free_resolution(ideal)
    tab = minimalize(res)
    return BettiResponse(**tab.to_json())


@app.post("/verify")
def verify(req: VerifyRequest):
    names = req.names or fixture_names()
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        raise HTTPException(status_code=422,
                            detail=f"unknown fixtures: {', '.join(unknown)}")
    if len(req.window) != 2:
        raise HTTPException(status_code=422, detail="window must be [lo, hi]")
    out = {}
    for name in names:
        checks = verify_fixture(name, prime=req.prime,
                                window=tuple(req.window))
        out[name] = {
            "passed": all(c[1] for c in checks),
            "checks": [CheckResult(name=c[0], passed=c[1],
                                   detail=c[2]).model_dump() for c in checks],
        }
    return out
