"""Command line front end.

Runs in process by default; --server posts the same payloads to a
running service instead.  Exit codes: 0 for the expected verdict, 1 when
a check comes back with the wrong verdict, 2 for usage, parse, or I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from . import ops

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


def _parse_m_values(text: str) -> List[int]:
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",") if p.strip()]


def _parse_strides(text: str) -> List[int]:
    return [int(p) for p in text.split(",") if p.strip()]


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


class _Remote:
    """Thin httpx client speaking to a running service."""

    def __init__(self, base: str):
        import httpx

        self._client = httpx.Client(base_url=base.rstrip("/"), timeout=600.0)

    def post(self, path: str, payload: dict) -> dict:
        r = self._client.post(path, json=payload)
        if r.status_code == 422:
            detail = r.json().get("detail", r.text)
            raise ops.OperationError(str(detail))
        r.raise_for_status()
        return r.json()


def _call(server: Optional[str], path: str, local, payload: dict) -> dict:
    if server:
        return _Remote(server).post(path, payload)
    return local(**payload)


# --- renderers ---------------------------------------------------------------

def _render_axioms(out: dict) -> None:
    for rep in out["reports"]:
        line = f"{rep['axiom']:6s} {'holds' if rep['holds'] else 'FAILS'}"
        if rep["counterexample"]:
            parts = ", ".join(f"{k}={v}" for k, v in rep["counterexample"].items())
            line += f"  counterexample: {parts}"
        if rep.get("note"):
            line += f"  ({rep['note']})"
        print(line)
    print("all axioms hold" if out["all_hold"] else "some axioms fail")


def _render_certificate(out: dict) -> None:
    cert = out["certificate"]
    print(f"counterexample {cert['name']} in {cert['model']}")
    parts = ", ".join(f"{k} = {v}" for k, v in cert["witness"].items())
    print(f"witness: {parts}")
    for claim in cert["claims"]:
        mark = "ok" if claim["verified"] else "XX"
        print(f"  [{mark}] {claim['statement']}")
    print("certificate valid" if out["valid"] else "certificate INVALID")


def _render_verdict_line(name: str, verdict: dict) -> None:
    if verdict["falsified"]:
        parts = ", ".join(f"{k} = {v}" for k, v in (verdict["witness"] or {}).items())
        print(f"  {name}: falsified ({parts}) [{verdict['phase']}]")
    else:
        print(f"  {name}: no counterexample found "
              f"(bound {verdict['searched_bound']}, "
              f"{verdict['evaluations']} evaluations)")


def _render_induction(out: dict) -> None:
    rep = out["report"]
    print(f"{rep['kind']} induction for {rep['phi']} in {rep['model']}")
    for p in rep["premises"]:
        _render_verdict_line(p["name"], p["verdict"])
    _render_verdict_line("conclusion", rep["conclusion"]["verdict"])
    if rep.get("note"):
        print(f"  note: {rep['note']}")
    print("instance falsified" if out["instance_falsified"]
          else "instance not falsified")


def _render_universal(out: dict) -> None:
    print(out["formula"])
    _render_verdict_line("verdict", out["verdict"])


# --- command implementations --------------------------------------------------

def _cmd_ord(args) -> int:
    out = _call(args.server, "/ordinal", ops.op_ordinal,
                {"expression": args.expression})
    if args.json:
        _emit_json(out)
    else:
        print(out["result"])
    return EXIT_OK


def _cmd_eval(args) -> int:
    out = _call(args.server, "/eval", ops.op_eval,
                {"model": args.model, "formula": args.formula,
                 "assignment": args.assignment})
    if args.json:
        _emit_json(out)
    else:
        print("true" if out["value"] else "false")
    return EXIT_OK


def _cmd_axioms(args) -> int:
    payload = {"model": args.model, "axioms": args.axioms.split(",") if args.axioms else None,
               "samples": args.samples, "seed": args.seed}
    out = _call(args.server, "/check/axioms", ops.op_check_axioms, payload)
    if args.json:
        _emit_json(out)
    else:
        _render_axioms(out)
    return EXIT_OK if out["all_hold"] else EXIT_UNEXPECTED


def _cmd_counterexample(args) -> int:
    payload = {"model": args.model, "name": args.name,
               "samples": args.samples, "seed": args.seed}
    out = _call(args.server, "/check/counterexample", ops.op_counterexample,
                payload)
    if args.json:
        _emit_json(out)
    else:
        _render_certificate(out)
    return EXIT_OK if out["valid"] else EXIT_UNEXPECTED


def _cmd_induction(args) -> int:
    payload = {"model": args.model, "formula": args.formula,
               "schema_kind": args.schema, "m": args.m,
               "strides": _parse_strides(args.strides) if args.strides else None,
               "variables": args.vars.split(",") if args.vars else None,
               "budget": args.budget, "alphabet_bound": args.alphabet_bound,
               "seed": args.seed, "exhaustive": args.exhaustive}
    out = _call(args.server, "/check/induction", ops.op_check_induction,
                payload)
    if args.json:
        _emit_json(out)
    else:
        _render_induction(out)
    # the append structure satisfies open induction, so a falsified
    # instance there signals a bug; the predicate structures are built
    # to falsify some instances, so any verdict is expected
    if args.model.strip().lower() == "m2" and out["instance_falsified"]:
        return EXIT_UNEXPECTED
    return EXIT_OK


def _cmd_universal(args) -> int:
    payload = {"model": args.model, "formula": args.formula,
               "budget": args.budget, "alphabet_bound": args.alphabet_bound,
               "seed": args.seed, "exhaustive": args.exhaustive}
    out = _call(args.server, "/check/universal", ops.op_check_universal,
                payload)
    if args.json:
        _emit_json(out)
    else:
        _render_universal(out)
    return EXIT_OK


def _cmd_emit(args) -> int:
    ms = _parse_m_values(args.m)
    if args.server:
        out = _Remote(args.server).post("/emit", {"format": args.format, "ms": ms})
    else:
        out = ops.op_emit(args.format, ms)
    files: Dict[str, str] = out["files"]
    os.makedirs(args.out, exist_ok=True)
    for name in sorted(files):
        path = os.path.join(args.out, name)
        with open(path, "w") as fh:
            fh.write(files[name])
        if not args.json:
            print(path)
    if args.json:
        _emit_json({"format": out["format"], "written": sorted(files),
                    "out": args.out})
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("translist.service:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="print the full report as canonical JSON")
    common.add_argument("--server", metavar="URL", default=None,
                        help="send the request to a running service")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=2000,
                        help="assignment budget per search phase")
    search.add_argument("--alphabet-bound", type=int, default=1,
                        help="size bound for the enumerated pools")
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--exhaustive", action="store_true",
                        help="scan the full enumerated product instead")

    p = argparse.ArgumentParser(
        prog="translist",
        description="Transfinite list structures separating quantifier-free "
                    "list induction schemata.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ord", parents=[common],
                        help="evaluate an ordinal expression")
    sp.add_argument("expression")
    sp.set_defaults(fn=_cmd_ord)

    sp = sub.add_parser("eval", parents=[common],
                        help="evaluate a quantifier-free formula")
    sp.add_argument("model", help="m1[:m] or m2")
    sp.add_argument("formula")
    sp.add_argument("assignment", nargs="?", default="",
                    help="bindings like 'X=rep(N(0)); x=3'")
    sp.set_defaults(fn=_cmd_eval)

    cp = sub.add_parser("check", help="check axioms, schemata, or failures")
    cp.add_argument("model", help="m1[:m] or m2")
    targets = cp.add_subparsers(dest="target", required=True)

    sp = targets.add_parser("axioms", parents=[common])
    sp.add_argument("--axioms", default=None,
                    help="comma-separated subset, e.g. L0.1,CA")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_axioms)

    sp = targets.add_parser("counterexample", parents=[common])
    sp.add_argument("name",
                    choices=["big-step", "right-cancellation",
                             "right-decomposition"])
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_counterexample)

    sp = targets.add_parser("induction", parents=[common, search])
    sp.add_argument("formula")
    sp.add_argument("--schema", default="big-step",
                    choices=["one-step", "big-step", "double", "multivariate"])
    sp.add_argument("--m", type=int, default=1,
                    help="heads consed per step (big-step)")
    sp.add_argument("--strides", default=None,
                    help="per-variable strides for multivariate, e.g. 2,1")
    sp.add_argument("--vars", default=None,
                    help="induction variables for multivariate, e.g. X,Y")
    sp.set_defaults(fn=_cmd_induction)

    sp = targets.add_parser("universal", parents=[common, search])
    sp.add_argument("formula")
    sp.set_defaults(fn=_cmd_universal)

    sp = sub.add_parser("emit", parents=[common],
                        help="write prover benchmark files")
    sp.add_argument("format", choices=["smtlib2", "tptp"])
    sp.add_argument("--m", default="1..3",
                    help="instance sizes: '1..5' or '1,3'")
    sp.add_argument("--out", default=".", help="output directory")
    sp.set_defaults(fn=_cmd_emit)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(fn=_cmd_serve)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ops.OperationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
