"""HTTP JSON service exposing the workbench to the CLI and the web UI.

One mutation session lives in the app (single SessionState with explicit
reset); state-changing requests are serialized by a lock, read endpoints see
immutable snapshots.  Every response is deterministic given the session
history.  Stateless endpoints (build / enumerate / autgroup / report /
verify) recompute from their inputs.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import polyauto
from .autgroup import candidate_maps, close_group, identify
from .groupexpr import render as render_group
from .invariants import invariant_report
from .laurent import render
from .presentations import a2_presentation, a3_presentation, verify_presentation
from .quiver import DynkinType, Quiver, build_hl_quiver, dynkin_quiver
from .seeds import (
    DEFAULT_BUDGET,
    Seed,
    census,
    exchange_graph,
    initial_seed,
    mutate_seed,
    specialize,
)


class ResetRequest(BaseModel):
    family: str = Field(pattern="^[ADE]$")
    rank: int = Field(ge=1)
    level: int = Field(ge=1, default=1)
    principal: bool = False


class BuildRequest(BaseModel):
    family: str = Field(pattern="^[ADE]$")
    rank: int = Field(ge=1)
    level: int = Field(ge=1, default=1)


class MutateRequest(BaseModel):
    vertex: int | str


class VerifyRequest(BaseModel):
    target: str = Field(pattern="^(all|a2|a3|nagata)$")
    a: str = "2"  # Nagata parameter, a rational like "1/2"


class SessionState:
    """Current seed = initial seed replayed through the mutation history."""

    def __init__(self, descriptor: ResetRequest):
        self.descriptor = descriptor
        t = DynkinType(descriptor.family, descriptor.rank)
        seed = initial_seed(build_hl_quiver(t, descriptor.level))
        if descriptor.principal:
            seed = specialize(seed)
        self.initial = seed
        self.history: list[int] = []
        self.current = seed

    def replay(self) -> Seed:
        seed = self.initial
        for k in self.history:
            seed = mutate_seed(seed, k)
        return seed

    def seed_json(self) -> dict:
        q = self.current.quiver
        return {
            "descriptor": self.descriptor.model_dump(),
            "history": list(self.history),
            "quiver": q.to_json_dict(),
            "arrows": [list(a) for a in q.arrows()],
            "variables": [render(c) for c in self.current.certs],
        }


def _quiver_from_descriptor(
    family: str, rank: int, level: int, principal: bool
) -> Seed:
    t = DynkinType(family, rank)
    seed = initial_seed(build_hl_quiver(t, level))
    return specialize(seed) if principal else seed


def _census_json(seed: Seed, budget: int) -> dict:
    g = exchange_graph(seed, budget)
    if g.status != "complete":
        return {"status": g.status, "nodes_explored": g.n_nodes}
    c = census(g)
    out = c.to_json_dict()
    out["status"] = "complete"
    return out


def _autgroup_json(family: str, rank: int, budget: int) -> dict:
    t = DynkinType(family, rank)
    s = initial_seed(dynkin_quiver(t))
    g = exchange_graph(s, budget)
    c = census(g)
    grp = close_group(candidate_maps(g, c, s))
    return grp.to_json_dict(render_group(identify(grp)))


def _verify_json(target: str, a: str) -> dict:
    checks: list[dict] = []
    if target in ("all", "a2"):
        checks.append({"check": "a2_presentation", "passed": verify_presentation(a2_presentation())})
    if target in ("all", "a3"):
        checks.append({"check": "a3_presentation", "passed": verify_presentation(a3_presentation())})
    if target in ("all", "nagata"):
        coef = Fraction(a)
        inv = polyauto.nagata_inverse(coef)
        roundtrip = polyauto.is_identity(polyauto.compose(polyauto.nagata(coef), inv))
        checks.append({"check": f"nagata_roundtrip(a={a})", "passed": roundtrip})
        checks.append({"check": f"nagata_delta_invariance(a={a})", "passed": polyauto.delta_invariance(coef)})
    return {"passed": all(c["passed"] for c in checks), "checks": checks}


def create_app() -> FastAPI:
    app = FastAPI(title="clusterbench", version="0.1.0")
    lock = threading.Lock()
    state: dict[str, SessionState] = {
        "session": SessionState(ResetRequest(family="A", rank=2, level=1))
    }

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(TypeError)
    async def bad_type(request: Request, exc: TypeError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    # -- session endpoints ---------------------------------------------------

    @app.get("/api/seed")
    def get_seed():
        return state["session"].seed_json()

    @app.post("/api/reset")
    def reset(req: ResetRequest):
        with lock:
            try:
                state["session"] = SessionState(req)
            except TypeError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            return state["session"].seed_json()

    @app.post("/api/mutate")
    def mutate(req: MutateRequest):
        with lock:
            session = state["session"]
            q = session.current.quiver
            if isinstance(req.vertex, str):
                if req.vertex not in q.labels:
                    raise HTTPException(status_code=422, detail=f"unknown vertex {req.vertex!r}")
                k = q.labels.index(req.vertex)
            else:
                k = req.vertex
            if not q.is_mutable(k):
                raise HTTPException(status_code=422, detail=f"vertex {req.vertex} is frozen or out of range")
            old = render(session.current.certs[k])
            session.current = mutate_seed(session.current, k)
            session.history.append(k)
            return {
                "mutated": k,
                "label": q.labels[k],
                "old_variable": old,
                "new_variable": render(session.current.certs[k]),
                "seed": session.seed_json(),
            }

    @app.post("/api/undo")
    def undo():
        with lock:
            session = state["session"]
            if not session.history:
                raise HTTPException(status_code=422, detail="history is empty")
            session.history.pop()
            session.current = session.replay()
            return session.seed_json()

    @app.get("/api/census")
    def session_census(budget: int = DEFAULT_BUDGET):
        session = state["session"]
        return _census_json(session.current, budget)

    @app.get("/api/report")
    def session_report():
        d = state["session"].descriptor
        t = DynkinType(d.family, d.rank)
        return invariant_report(t, d.level).to_json_dict()

    # -- stateless endpoints ------------------------------------------------

    @app.post("/api/build")
    def build(req: BuildRequest):
        t = DynkinType(req.family, req.rank)
        q = build_hl_quiver(t, req.level)
        out = q.to_json_dict()
        out["arrows"] = [list(a) for a in q.arrows()]
        out["arrow_count"] = q.arrow_count()
        return out

    @app.get("/api/enumerate")
    def enumerate_type(
        family: str,
        rank: int,
        level: int | None = None,
        principal: bool = False,
        budget: int = DEFAULT_BUDGET,
    ):
        t = DynkinType(family, rank)
        if level is None:
            seed = initial_seed(dynkin_quiver(t))
        else:
            seed = _quiver_from_descriptor(family, rank, level, principal)
        return _census_json(seed, budget)

    @app.get("/api/autgroup")
    def autgroup(family: str, rank: int, budget: int = DEFAULT_BUDGET):
        return _autgroup_json(family, rank, budget)

    @app.get("/api/invariant-report")
    def report(family: str, rank: int, level: int = 1):
        t = DynkinType(family, rank)
        return invariant_report(t, level).to_json_dict()

    @app.post("/api/verify")
    def verify(req: VerifyRequest):
        try:
            return _verify_json(req.target, req.a)
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    return app


app = create_app()
