"""Operation handlers shared by the command line and the HTTP service.

Each handler takes primitives, runs the corresponding core routine, and
returns a JSON-ready dict.  Domain failures raise OperationError with a
message suitable for the user; transports map it to exit code 2 or an
unprocessable-entity response.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from . import __version__
from .benchmarks import emit_benchmarks
from .induction import (
    CERTIFICATES,
    InductionError,
    build_big_step,
    build_double,
    build_multivariate,
    build_one_step,
    check_instance,
    check_universal,
)
from .logic import LogicError, Var, LIST, format_formula, parse_formula
from .models import (
    ModelError,
    check_axioms,
    eval_formula,
    get_model,
    parse_assignment,
    validate_assignment,
)
from .ordinal import OrdinalError, format_ordinal, parse_ordinal_query
from .sequences import SequenceError


class OperationError(ValueError):
    """User-level failure: bad input, wrong model, malformed query."""


_DOMAIN_ERRORS = (LogicError, ModelError, OrdinalError, SequenceError,
                  InductionError, ValueError)


def _wrap(fn):
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except OperationError:
            raise
        except _DOMAIN_ERRORS as exc:
            raise OperationError(str(exc)) from exc
    return inner


@_wrap
def op_health() -> dict:
    return {"status": "ok", "version": __version__}


@_wrap
def op_ordinal(expression: str) -> dict:
    value = parse_ordinal_query(expression)
    if isinstance(value, tuple):
        q, r = value
        result = f"({format_ordinal(q)}, {format_ordinal(r)})"
    else:
        result = format_ordinal(value)
    return {"expression": expression, "result": result}


@_wrap
def op_eval(model: str, formula: str, assignment: str = "") -> dict:
    M = get_model(model)
    phi = parse_formula(formula, M.signature)
    sigma = parse_assignment(assignment)
    validate_assignment(M, sigma)
    value = eval_formula(M, phi, sigma)
    return {
        "model": M.name,
        "formula": format_formula(phi),
        "assignment": {v.name: _fmt(val) for v, val in sorted(
            sigma.items(), key=lambda kv: kv[0].name)},
        "value": value,
    }


def _fmt(val) -> str:
    from .models import format_value
    return format_value(val)


@_wrap
def op_check_axioms(model: str, axioms: Optional[List[str]] = None,
                    samples: int = 1000, seed: int = 0) -> dict:
    M = get_model(model)
    reports = check_axioms(M, axioms, samples=samples, seed=seed)
    return {
        "model": M.name,
        "samples": samples,
        "seed": seed,
        "all_hold": all(r.holds for r in reports),
        "reports": [r.to_dict() for r in reports],
    }


@_wrap
def op_counterexample(model: str, name: str, samples: int = 10000,
                      seed: int = 0) -> dict:
    M = get_model(model)
    if name not in CERTIFICATES:
        raise OperationError(f"unknown counterexample {name!r}; expected one "
                             f"of {', '.join(sorted(CERTIFICATES))}")
    if name == "big-step":
        if M.kind != "m1":
            raise OperationError("the big-step failure lives in the m1 "
                                 "structures; pass a model like m1:2")
        cert = CERTIFICATES[name](M.m, samples=samples, seed=seed)  # type: ignore[attr-defined]
    else:
        if M.kind != "m2":
            raise OperationError(f"the {name} failure lives in m2")
        cert = CERTIFICATES[name](samples=samples, seed=seed)
    return {"certificate": cert.to_dict(), "valid": cert.valid}


_SCHEMAS = ("one-step", "big-step", "double", "multivariate")


@_wrap
def op_check_induction(model: str, formula: str, schema_kind: str = "big-step",
                       m: int = 1, strides: Optional[List[int]] = None,
                       variables: Optional[List[str]] = None,
                       budget: int = 2000, alphabet_bound: int = 1,
                       seed: int = 0, exhaustive: bool = False) -> dict:
    M = get_model(model)
    phi = parse_formula(formula, M.signature)
    if schema_kind == "one-step":
        inst = build_one_step(phi)
    elif schema_kind == "big-step":
        inst = build_big_step(phi, m)
    elif schema_kind == "double":
        inst = build_double(phi)
    elif schema_kind == "multivariate":
        if not strides:
            raise OperationError("multivariate induction needs strides, "
                                 "e.g. 2,1")
        names = variables or ["X", "Y", "Z"][:len(strides)]
        if len(names) != len(strides):
            raise OperationError("need exactly one variable per stride")
        vs = [Var(n, LIST) for n in names]
        inst = build_multivariate(phi, vs, strides)
    else:
        raise OperationError(f"unknown schema {schema_kind!r}; expected one "
                             f"of {', '.join(_SCHEMAS)}")
    report = check_instance(M, inst, budget=budget,
                            alphabet_bound=alphabet_bound, seed=seed,
                            exhaustive=exhaustive)
    return {"instance": inst.to_dict(), "report": report.to_dict(),
            "instance_falsified": report.instance_falsified}


@_wrap
def op_check_universal(model: str, formula: str, budget: int = 2000,
                       alphabet_bound: int = 1, seed: int = 0,
                       exhaustive: bool = False) -> dict:
    M = get_model(model)
    phi = parse_formula(formula, M.signature)
    verdict = check_universal(M, phi, budget=budget,
                              alphabet_bound=alphabet_bound, seed=seed,
                              exhaustive=exhaustive)
    return {"model": M.name, "formula": format_formula(phi),
            "verdict": verdict.to_dict(), "falsified": verdict.falsified}


@_wrap
def op_emit(fmt: str, ms: List[int]) -> dict:
    files = emit_benchmarks(fmt, ms)
    return {"format": fmt, "files": files}
