"""Prover benchmark emission for big-step induction instances.

Each instance asserts the m word bases and the m-step implication for an
uninterpreted predicate over cons lists, then denies the conclusion, so
a prover returning unsat has shown that the big step follows from the
usual list axioms, and a saturation without contradiction leaves room
for structures like the ones built here.  SMT-LIB2 output relies on the
datatype declaration for nil/cons freeness; the typed first-order form
states the freeness axioms explicitly because tff has no datatypes.
"""

from __future__ import annotations

import os
from typing import Dict, Iterable, List

from .induction import InductionError

FORMATS = ("smtlib2", "tptp")


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InductionError("benchmark emission needs an integer m >= 1")


def _smt_chain(heads: List[str], tail: str) -> str:
    out = tail
    for h in reversed(heads):
        out = f"(cons {h} {out})"
    return out


def emit_smtlib2(m: int) -> str:
    """SMT-LIB2 encoding of the m-step induction instance for a marking
    predicate A, with the conclusion negated."""
    _check_m(m)
    lines = [
        f"; big-step list induction, {m} head(s) per step",
        "; premises asserted, conclusion negated: unsat = instance derivable",
        "(set-logic UFDT)",
        "(declare-sort Elem 0)",
        "(declare-datatypes ((Lst 0)) (((nil) (cons (head Elem) (tail Lst)))))",
        "(declare-fun A (Lst) Bool)",
    ]
    for i in range(1, m + 1):
        xs = [f"x{j}" for j in range(1, i)]
        body = f"(A {_smt_chain(xs, 'nil')})"
        if xs:
            binds = " ".join(f"({x} Elem)" for x in xs)
            lines.append(f"(assert (forall ({binds}) {body}))")
        else:
            lines.append(f"(assert {body})")
    xs = [f"x{j}" for j in range(1, m + 1)]
    binds = " ".join(["(X Lst)"] + [f"({x} Elem)" for x in xs])
    chain = _smt_chain(xs, "X")
    lines.append(f"(assert (forall ({binds}) (=> (A X) (A {chain}))))")
    lines.append("(assert (not (forall ((X Lst)) (A X))))")
    lines.append("(check-sat)")
    return "\n".join(lines) + "\n"


def _tptp_chain(heads: List[str], tail: str) -> str:
    out = tail
    for h in reversed(heads):
        out = f"cons({h},{out})"
    return out


def emit_tptp(m: int) -> str:
    """Typed first-order (tff) encoding of the same instance, stated as a
    conjecture from the bases, the step, and the list freeness axioms."""
    _check_m(m)
    lines = [
        f"% big-step list induction, {m} head(s) per step",
        "% freeness of nil/cons is axiomatized since tff lacks datatypes",
        "tff(elem_type, type, elem: $tType).",
        "tff(lst_type, type, lst: $tType).",
        "tff(nil_decl, type, nil: lst).",
        "tff(cons_decl, type, cons: (elem * lst) > lst).",
        "tff(a_decl, type, a: lst > $o).",
        "tff(nil_not_cons, axiom, ![X: elem, L: lst]: nil != cons(X,L)).",
        "tff(cons_injective, axiom, ![X: elem, Y: elem, L: lst, M: lst]:",
        "    (cons(X,L) = cons(Y,M) => (X = Y & L = M))).",
    ]
    for i in range(1, m + 1):
        xs = [f"X{j}" for j in range(1, i)]
        body = f"a({_tptp_chain(xs, 'nil')})"
        if xs:
            binds = ", ".join(f"{x}: elem" for x in xs)
            lines.append(f"tff(base_{i}, axiom, ![{binds}]: {body}).")
        else:
            lines.append(f"tff(base_{i}, axiom, {body}).")
    xs = [f"X{j}" for j in range(1, m + 1)]
    binds = ", ".join(["L: lst"] + [f"{x}: elem" for x in xs])
    chain = _tptp_chain(xs, "L")
    lines.append(f"tff(step, axiom, ![{binds}]: (a(L) => a({chain}))).")
    lines.append("tff(goal, conjecture, ![L: lst]: a(L)).")
    return "\n".join(lines) + "\n"


_EMITTERS = {"smtlib2": emit_smtlib2, "tptp": emit_tptp}
_SUFFIX = {"smtlib2": ".smt2", "tptp": ".p"}


def emit_benchmarks(fmt: str, ms: Iterable[int]) -> Dict[str, str]:
    """Map deterministic file names to benchmark contents."""
    if fmt not in _EMITTERS:
        raise InductionError(f"unknown benchmark format {fmt!r}; "
                             f"expected one of {', '.join(FORMATS)}")
    emit = _EMITTERS[fmt]
    out: Dict[str, str] = {}
    for m in ms:
        out[f"big_step_{m}{_SUFFIX[fmt]}"] = emit(m)
    return out


def write_benchmarks(fmt: str, ms: Iterable[int], outdir: str) -> List[str]:
    files = emit_benchmarks(fmt, ms)
    os.makedirs(outdir, exist_ok=True)
    written = []
    for name in sorted(files):
        path = os.path.join(outdir, name)
        with open(path, "w") as fh:
            fh.write(files[name])
        written.append(path)
    return written
