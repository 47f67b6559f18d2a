"""HTTP facade over the operation handlers."""

from __future__ import annotations

from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import ops

app = FastAPI(
    title="translist",
    description="Transfinite list structures separating quantifier-free "
                "list induction schemata.",
)


class HealthResponse(BaseModel):
    status: str
    version: str


class OrdinalRequest(BaseModel):
    expression: str


class OrdinalResponse(BaseModel):
    expression: str
    result: str


class EvalRequest(BaseModel):
    model: str
    formula: str
    assignment: str = ""


class EvalResponse(BaseModel):
    model: str
    formula: str
    assignment: Dict[str, str]
    value: bool


class AxiomsRequest(BaseModel):
    model: str
    axioms: Optional[List[str]] = None
    samples: int = 1000
    seed: int = 0


class AxiomsResponse(BaseModel):
    model: str
    samples: int
    seed: int
    all_hold: bool
    reports: List[dict]


class CounterexampleRequest(BaseModel):
    model: str
    name: str
    samples: int = 10000
    seed: int = 0


class CounterexampleResponse(BaseModel):
    certificate: dict
    valid: bool


class InductionRequest(BaseModel):
    model: str
    formula: str
    schema_kind: str = "big-step"
    m: int = 1
    strides: Optional[List[int]] = None
    variables: Optional[List[str]] = None
    budget: int = 2000
    alphabet_bound: int = Field(default=1, ge=0)
    seed: int = 0
    exhaustive: bool = False


class InductionResponse(BaseModel):
    instance: dict
    report: dict
    instance_falsified: bool


class UniversalRequest(BaseModel):
    model: str
    formula: str
    budget: int = 2000
    alphabet_bound: int = Field(default=1, ge=0)
    seed: int = 0
    exhaustive: bool = False


class UniversalResponse(BaseModel):
    model: str
    formula: str
    verdict: dict
    falsified: bool


class EmitRequest(BaseModel):
    format: str
    ms: List[int]


class EmitResponse(BaseModel):
    format: str
    files: Dict[str, str]


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ops.OperationError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health", response_model=HealthResponse)
def health() -> dict:
    return ops.op_health()


@app.post("/ordinal", response_model=OrdinalResponse)
def ordinal(req: OrdinalRequest) -> dict:
    return _run(ops.op_ordinal, req.expression)


@app.post("/eval", response_model=EvalResponse)
def evaluate(req: EvalRequest) -> dict:
    return _run(ops.op_eval, req.model, req.formula, req.assignment)


@app.post("/check/axioms", response_model=AxiomsResponse)
def axioms(req: AxiomsRequest) -> dict:
    return _run(ops.op_check_axioms, req.model, req.axioms, req.samples,
                req.seed)


@app.post("/check/counterexample", response_model=CounterexampleResponse)
def counterexample(req: CounterexampleRequest) -> dict:
    return _run(ops.op_counterexample, req.model, req.name, req.samples,
                req.seed)


@app.post("/check/induction", response_model=InductionResponse)
def induction(req: InductionRequest) -> dict:
    return _run(ops.op_check_induction, req.model, req.formula,
                req.schema_kind, req.m, req.strides, req.variables,
                req.budget, req.alphabet_bound, req.seed, req.exhaustive)


@app.post("/check/universal", response_model=UniversalResponse)
def universal(req: UniversalRequest) -> dict:
    return _run(ops.op_check_universal, req.model, req.formula, req.budget,
                req.alphabet_bound, req.seed, req.exhaustive)


@app.post("/emit", response_model=EmitResponse)
def emit(req: EmitRequest) -> dict:
    return _run(ops.op_emit, req.format, req.ms)
