"""Induction schema instances and their mechanical verification.

Builders produce the premises and conclusion of one-step, big-step,
double, and multivariate structural induction for an open formula.
check_universal searches for counterexamples to a universally quantified
statement over a model: a deterministic diagonal sweep over enumerated
domain pools, then seeded random sampling whose magnitudes are pushed
past every applicable stabilization bound.  check_instance combines the
per-premise verdicts into an instance-level one, and the replicate_*
functions produce self-validating certificates for the three failures
these structures were built to exhibit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import sampling
from .logic import (
    And,
    App,
    Bottom,
    Const,
    ELEM,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    LIST,
    NIL,
    Not,
    Or,
    PredApp,
    Term,
    Top,
    Var,
    atoms,
    cons,
    format_formula,
    free_vars,
    is_quantifier_free,
    sort_check,
    substitute,
    term_vars,
)
from .models import (
    M1,
    M2,
    Assignment,
    Model,
    ModelError,
    StabilizationBound,
    VAR_X,
    VAR_Y,
    Value,
    a_atom_bound,
    equation_bound_m1,
    equation_bound_m2,
    eval_formula,
    format_value,
)
from .sequences import (
    EMPTY,
    NElem,
    Ordinal,
    TransfiniteList,
    at,
    concat,
    format_translist,
    from_nelem,
    from_word,
    is_word,
    last_decomposition,
    length,
    nelem,
    omega_power,
    prepend_word,
    suffix,
)


class InductionError(ValueError):
    """Malformed schema parameters."""


# --- schema builders ---------------------------------------------------------

@dataclass(frozen=True)
class InductionInstance:
    kind: str
    phi: Formula
    list_vars: Tuple[Var, ...]
    strides: Tuple[int, ...]
    elem_vars: Tuple[Tuple[Var, ...], ...]
    premises: Tuple[Tuple[str, Formula], ...]
    conclusion: Formula

    @property
    def n_elem_vars(self) -> int:
        return sum(self.strides)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "phi": format_formula(self.phi),
            "list_vars": [v.name for v in self.list_vars],
            "strides": list(self.strides),
            "premises": [[name, format_formula(f)] for name, f in self.premises],
            "conclusion": format_formula(self.conclusion),
        }


def cons_chain(heads: Sequence[Term], tail: Term) -> Term:
    out = tail
    for h in reversed(heads):
        out = cons(h, out)
    return out


def _require_open(phi: Formula) -> None:
    if not is_quantifier_free(phi):
        raise InductionError("induction schemata take quantifier-free formulas")


def _fresh_elems(phi: Formula, count: int) -> List[Var]:
    used = {v.name for v in free_vars(phi)}
    out: List[Var] = []
    i = 1
    while len(out) < count:
        name = f"x{i}"
        if name not in used:
            out.append(Var(name, ELEM))
        i += 1
    return out


def build_multivariate(phi: Formula, list_vars: Sequence[Var],
                       strides: Sequence[int]) -> InductionInstance:
    """Simultaneous induction on several list variables, consuming
    strides[i] fresh heads of list_vars[i] per step."""
    _require_open(phi)
    xs = tuple(list_vars)
    ps = tuple(strides)
    if not xs or len(xs) != len(ps):
        raise InductionError("need one stride per induction variable")
    if len(set(xs)) != len(xs):
        raise InductionError("induction variables must be distinct")
    for x in xs:
        if x.sort != LIST:
            raise InductionError(f"{x.name} is not list-sorted")
    for p in ps:
        if not isinstance(p, int) or p < 1:
            raise InductionError("strides must be positive integers")
    fresh = _fresh_elems(phi, sum(ps))
    vecs: List[Tuple[Var, ...]] = []
    pos = 0
    for p in ps:
        vecs.append(tuple(fresh[pos:pos + p]))
        pos += p

    premises: List[Tuple[str, Formula]] = []
    for i, x in enumerate(xs):
        others = [v for v in xs if v != x]
        for j in range(1, ps[i] + 1):
            head_vars = vecs[i][:j - 1]
            body = substitute(phi, {x: cons_chain(head_vars, NIL)})
            for v in reversed(head_vars):
                body = Forall(v, body)
            for v in reversed(others):
                body = Forall(v, body)
            premises.append((f"base-{i + 1}-{j}", body))
    step_sub = {x: cons_chain(vecs[i], x) for i, x in enumerate(xs)}
    core: Formula = Implies(phi, substitute(phi, step_sub))
    for v in reversed(fresh):
        core = Forall(v, core)
    for x in reversed(xs):
        core = Forall(x, core)
    premises.append(("step", core))

    conclusion: Formula = phi
    for x in reversed(xs):
        conclusion = Forall(x, conclusion)
    return InductionInstance(
        kind="multivariate",
        phi=phi,
        list_vars=xs,
        strides=ps,
        elem_vars=tuple(vecs),
        premises=tuple(premises),
        conclusion=conclusion,
    )


def build_big_step(phi: Formula, m: int, x: Var = VAR_X) -> InductionInstance:
    """Induction consing m fresh heads at once, with m word bases."""
    inst = build_multivariate(phi, [x], [m])
    names = {f"base-1-{j}": f"base-{j}" for j in range(1, m + 1)}
    premises = tuple((names.get(n, n), f) for n, f in inst.premises)
    return replace(inst, kind="big-step", premises=premises)


def build_one_step(phi: Formula, x: Var = VAR_X) -> InductionInstance:
    return replace(build_big_step(phi, 1, x), kind="one-step")


def build_double(phi: Formula, x: Var = VAR_X, y: Var = VAR_Y) -> InductionInstance:
    """Parallel induction on two list variables, one head each per step."""
    inst = build_multivariate(phi, [x, y], [1, 1])
    names = {"base-1-1": f"base-{x.name}", "base-2-1": f"base-{y.name}"}
    premises = tuple((names.get(n, n), f) for n, f in inst.premises)
    return replace(inst, kind="double", premises=premises)


# --- domain enumeration ------------------------------------------------------

def iter_domain(M: Model, alphabet: Sequence[int] = (),
                bound: int = 1) -> Iterator[TransfiniteList]:
    """Deterministic stream of domain elements built from the alphabet
    plus one fresh symbol: words by length, progression letters by prefix
    length, and (for the append model) cycle patterns with short tails."""
    if bound < 0:
        raise InductionError("bound must be nonnegative")
    base = sorted(set(alphabet))
    freshv = 0
    while freshv in set(base):
        freshv += 1
    syms = sorted(set(base) | {freshv})
    seen = set()

    def emit(t: TransfiniteList) -> Iterator[TransfiniteList]:
        if t not in seen:
            seen.add(t)
            yield t

    for n in range(bound + 1):
        for w in itertools.product(syms, repeat=n):
            yield from emit(from_word(w))
    for plen in range(bound + 1):
        for p in itertools.product(syms, repeat=plen):
            for start in range(bound + 1):
                yield from emit(from_nelem(nelem(p, start)))
    if M.kind != "m2":
        return

    letters: List[NElem] = []
    for plen in range(min(bound, 1) + 1):
        for p in itertools.product(syms, repeat=plen):
            for start in range(min(bound, 2) + 1):
                e = nelem(p, start)
                if e not in letters:
                    letters.append(e)
    singles = [omega_power((a,)) for a in letters]
    cycles = list(singles)
    for a in letters:
        for b in letters:
            if a != b:
                cycles.append(omega_power((a, b)))
    tails = [EMPTY]
    if bound >= 1:
        tails.extend(from_word((s,)) for s in syms)
    for c in cycles:
        for t in tails:
            yield from emit(concat(c, t))
    for a in letters:
        for c in cycles:
            for t in tails:
                yield from emit(concat(from_nelem(a), concat(c, t)))
    for c in cycles:
        for a in letters:
            for t in tails:
                yield from emit(concat(c, concat(from_nelem(a), t)))
    for c1 in singles:
        for c2 in singles:
            for t in tails:
                yield from emit(concat(c1, concat(c2, t)))


def enumerate_domain(M: Model, alphabet: Sequence[int] = (), bound: int = 1,
                     limit: Optional[int] = None) -> List[TransfiniteList]:
    it = iter_domain(M, alphabet, bound)
    if limit is not None:
        return list(itertools.islice(it, limit))
    return list(it)


def _term_alphabet(t: Term, acc: set) -> None:
    if isinstance(t, Var):
        return
    if isinstance(t, Const):
        v = t.value
        if isinstance(v, int):
            acc.add(v)
            return
        acc.update(v.tail)
        for blk in v.blocks:
            es = (blk.elem,) if hasattr(blk, "elem") else blk.letters
            for e in es:
                acc.update(e.prefix)
                acc.add(e.start)
        return
    for a in t.args:
        _term_alphabet(a, acc)


def formula_alphabet(phi: Formula) -> List[int]:
    """Element values mentioned by the formula's constants."""
    acc: set = set()
    for atom in atoms(phi):
        if isinstance(atom, (Top, Bottom)):
            continue
        ts = (atom.left, atom.right) if isinstance(atom, Eq) else atom.args
        for t in ts:
            _term_alphabet(t, acc)
    return sorted(acc)


# --- universal checking ------------------------------------------------------

@dataclass(frozen=True)
class UniversalVerdict:
    falsified: bool
    witness: Optional[Dict[str, str]]
    searched_bound: int
    evaluations: int
    phase: str
    exhaustive: bool = False
    note: str = ""
    witness_values: Optional[Dict[Var, Value]] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "falsified": self.falsified,
            "witness": self.witness,
            "searched_bound": self.searched_bound,
            "evaluations": self.evaluations,
            "phase": self.phase,
            "exhaustive": self.exhaustive,
            "note": self.note,
        }


def _strip_quantifiers(phi: Formula) -> Tuple[List[Var], Formula]:
    out: List[Var] = []
    while isinstance(phi, Forall):
        out.append(phi.bound)
        phi = phi.body
    return out, phi


def _contains_quantifier(phi: Formula) -> bool:
    return not is_quantifier_free(phi)


def _atom_bounds(M: Model, body: Formula) -> List[StabilizationBound]:
    out: List[StabilizationBound] = []
    for atom in set(atoms(body)):
        if isinstance(atom, (Top, Bottom)):
            continue
        ts = (atom.left, atom.right) if isinstance(atom, Eq) else atom.args
        tvars = set()
        for t in ts:
            tvars |= term_vars(t)
        if any(v.sort == ELEM for v in tvars):
            continue
        lvars = [v for v in tvars if v.sort == LIST]
        if len(lvars) != 1:
            continue
        x = lvars[0]
        try:
            if isinstance(atom, PredApp) and M.kind == "m1":
                out.append(a_atom_bound(M.m, atom.args[0], x))  # type: ignore[attr-defined]
            elif isinstance(atom, Eq) and M.kind == "m1":
                b = equation_bound_m1(atom, x)
                if b is not None:
                    out.append(b)
            elif isinstance(atom, Eq) and M.kind == "m2":
                b = equation_bound_m2(atom, x)
                if b is not None:
                    out.append(b)
        except ModelError:
            continue
    return out


def _diagonal_indices(sizes: Sequence[int], cap: int) -> Iterator[Tuple[int, ...]]:
    """Index tuples ordered by total rank, then lexicographically."""
    def compositions(rank: int, rest: Sequence[int]) -> Iterator[Tuple[int, ...]]:
        if len(rest) == 1:
            if rank < rest[0]:
                yield (rank,)
            return
        for i in range(min(rank, rest[0] - 1) + 1):
            for tail in compositions(rank - i, rest[1:]):
                yield (i,) + tail

    count = 0
    for rank in range(sum(s - 1 for s in sizes) + 1):
        for tup in compositions(rank, sizes):
            yield tup
            count += 1
            if count >= cap:
                return


def check_universal(M: Model, phi: Formula, budget: int = 2000,
                    alphabet_bound: int = 1, seed: int = 0,
                    exhaustive: bool = False,
                    extra_lists: Sequence[TransfiniteList] = (),
                    extra_elems: Sequence[int] = ()) -> UniversalVerdict:
    """Search for a falsifying assignment of a universally quantified
    quantifier-free statement.

    The search is systematic first: every variable gets a deterministic
    pool (enumerate_domain for list sorts, the formula's alphabet plus
    fresh values for element sorts) and assignments are visited in
    diagonal order until the budget is spent, or completely when
    exhaustive is set.  A seeded random phase follows, sampling values
    whose entries reach the largest applicable stabilization bound, so
    the search is decisive for single-variable atoms even though the
    domain is infinite.
    """
    qvars, body = _strip_quantifiers(phi)
    if _contains_quantifier(body):
        raise ModelError("check_universal handles universal prefixes over "
                         "quantifier-free bodies only")
    try:
        sort_check(phi, M.signature)
    except Exception as exc:
        raise ModelError(f"formula does not fit the signature of {M.name}: {exc}")
    variables = qvars + sorted(free_vars(body) - set(qvars), key=lambda v: v.name)

    alphabet = formula_alphabet(body)
    bounds = _atom_bounds(M, body)
    searched = max([alphabet_bound] + [b.bound for b in bounds])

    if not variables:
        ok = eval_formula(M, body, {})
        return UniversalVerdict(
            falsified=not ok, witness=None if ok else {},
            searched_bound=searched, evaluations=1,
            phase="systematic", exhaustive=True,
            witness_values=None if ok else {})

    fresh_count = max(1, alphabet_bound)
    elem_pool: List[int] = list(alphabet)
    k = 0
    while len(elem_pool) < len(alphabet) + fresh_count:
        if k not in elem_pool:
            elem_pool.append(k)
        k += 1
    for v in extra_elems:
        if v not in elem_pool:
            elem_pool.insert(0, v)

    list_cap = None if exhaustive else max(64, budget)
    list_pool = enumerate_domain(M, alphabet, alphabet_bound, limit=list_cap)
    pool_seen = set(list_pool)
    # targeted hints go first so the diagonal sweep reaches them
    for v in reversed(extra_lists):
        if v not in pool_seen:
            list_pool.insert(0, v)
            pool_seen.add(v)

    pools: List[List[Value]] = []
    for v in variables:
        pools.append(list(elem_pool) if v.sort == ELEM else list(list_pool))

    evaluations = 0
    sigma: Dict[Var, Value] = {}

    if exhaustive:
        def scan(i: int) -> Optional[Dict[Var, Value]]:
            nonlocal evaluations
            if i == len(variables):
                evaluations += 1
                if not eval_formula(M, body, sigma):
                    return dict(sigma)
                return None
            for val in pools[i]:
                sigma[variables[i]] = val
                found = scan(i + 1)
                if found is not None:
                    return found
            return None

        found = scan(0)
        if found is not None:
            return UniversalVerdict(
                falsified=True,
                witness={v.name: format_value(found[v]) for v in variables},
                searched_bound=searched, evaluations=evaluations,
                phase="systematic", exhaustive=True, witness_values=found)
        return UniversalVerdict(
            falsified=False, witness=None, searched_bound=searched,
            evaluations=evaluations, phase="none", exhaustive=True,
            note="full product scan of the enumerated pools")

    for tup in _diagonal_indices([len(p) for p in pools], budget):
        for v, p, i in zip(variables, pools, tup):
            sigma[v] = p[i]
        evaluations += 1
        if not eval_formula(M, body, sigma):
            found = dict(sigma)
            return UniversalVerdict(
                falsified=True,
                witness={v.name: format_value(found[v]) for v in variables},
                searched_bound=searched, evaluations=evaluations,
                phase="systematic", witness_values=found)

    rng = random.Random(seed)
    for _ in range(budget):
        for v in variables:
            sigma[v] = sampling.random_value(
                M.kind, v.sort, rng, max_len=alphabet_bound + 2,
                max_entry=searched, max_start=searched)
        evaluations += 1
        if not eval_formula(M, body, sigma):
            found = dict(sigma)
            return UniversalVerdict(
                falsified=True,
                witness={v.name: format_value(found[v]) for v in variables},
                searched_bound=searched, evaluations=evaluations,
                phase="random", witness_values=found)

    return UniversalVerdict(
        falsified=False, witness=None, searched_bound=searched,
        evaluations=evaluations, phase="none",
        note=f"diagonal sweep plus {budget} random samples up to {searched}")


# --- instance checking -------------------------------------------------------

@dataclass(frozen=True)
class PremiseResult:
    name: str
    formula: str
    verdict: UniversalVerdict

    def to_dict(self) -> dict:
        return {"name": self.name, "formula": self.formula,
                "verdict": self.verdict.to_dict()}


@dataclass(frozen=True)
class CheckReport:
    model: str
    kind: str
    phi: str
    strides: Tuple[int, ...]
    premises: Tuple[PremiseResult, ...]
    conclusion: PremiseResult
    instance_falsified: bool
    budget: int
    alphabet_bound: int
    seed: int
    exhaustive: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "kind": self.kind,
            "phi": self.phi,
            "strides": list(self.strides),
            "premises": [p.to_dict() for p in self.premises],
            "conclusion": self.conclusion.to_dict(),
            "instance_falsified": self.instance_falsified,
            "budget": self.budget,
            "alphabet_bound": self.alphabet_bound,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "note": self.note,
        }


def _descent_rescue(M: Model, inst: InductionInstance,
                    wit: Dict[Var, Value]) -> Optional[Tuple[str, Dict[Var, Value]]]:
    """Walk the conclusion witness down the step relation to pin the
    premise the witness refutes.  Returns (premise name, assignment)."""
    phi, xs, ps = inst.phi, inst.list_vars, inst.strides
    strays = {v: val for v, val in wit.items() if v not in xs}
    cur: Dict[Var, Value] = dict(strays)
    for x in xs:
        if x not in wit:
            return None
        cur[x] = wit[x]
    names = {n: i for i, (n, _) in enumerate(inst.premises)}

    def base_name(i: int, j: int) -> Optional[str]:
        for cand in (f"base-{i + 1}-{j}", f"base-{j}",
                     f"base-{xs[i].name}"):
            if cand in names:
                return cand
        return None

    if eval_formula(M, phi, cur):
        return None
    for _ in range(500):
        for i, (x, p) in enumerate(zip(xs, ps)):
            if length(cur[x]) < Ordinal.from_int(p):
                # the witness bottomed out in a word shorter than the
                # stride, which is exactly a base case instance
                word = cur[x]
                j = len(word.tail) + 1
                name = base_name(i, j)
                if name is None:
                    return None
                assign = dict(cur)
                for r, v in enumerate(inst.elem_vars[i][:j - 1]):
                    assign[v] = word.tail[r]
                return name, assign
        nxt = dict(cur)
        heads: Dict[Var, int] = {}
        for i, (x, p) in enumerate(zip(xs, ps)):
            for r, v in enumerate(inst.elem_vars[i]):
                heads[v] = at(cur[x], r)
            nxt[x] = suffix(cur[x], p)
        if eval_formula(M, phi, nxt):
            assign = dict(nxt)
            assign.update(heads)
            return "step", assign
        cur = nxt
        if all(is_word(cur[x]) for x in xs):
            continue
        # infinite coordinates never bottom out; give the walk a chance
        # to cross a block boundary, then stop
    return None


def check_instance(M: Model, inst: InductionInstance, budget: int = 2000,
                   alphabet_bound: int = 1, seed: int = 0,
                   exhaustive: bool = False,
                   extra_lists: Sequence[TransfiniteList] = ()) -> CheckReport:
    """Check every premise and the conclusion of an induction instance.

    The instance itself counts as falsified only when no premise could
    be falsified but the conclusion could: that combination contradicts
    the schema in the given structure.
    """
    eff_bound = max(alphabet_bound, inst.n_elem_vars)
    results: List[PremiseResult] = []
    for name, f in inst.premises:
        verdict = check_universal(M, f, budget=budget,
                                  alphabet_bound=eff_bound, seed=seed,
                                  exhaustive=exhaustive, extra_lists=extra_lists)
        results.append(PremiseResult(name, format_formula(f), verdict))
    conclusion_verdict = check_universal(M, inst.conclusion, budget=budget,
                                         alphabet_bound=eff_bound, seed=seed,
                                         exhaustive=exhaustive,
                                         extra_lists=extra_lists)
    conclusion = PremiseResult("conclusion", format_formula(inst.conclusion),
                               conclusion_verdict)
    note = ""
    if conclusion_verdict.falsified and not any(r.verdict.falsified for r in results):
        rescue = None
        if conclusion_verdict.witness_values is not None:
            rescue = _descent_rescue(M, inst, conclusion_verdict.witness_values)
        if rescue is not None:
            name, assign = rescue
            wit = {v.name: format_value(val) for v, val in sorted(
                assign.items(), key=lambda kv: kv[0].name)}
            for idx, r in enumerate(results):
                if r.name == name:
                    verdict = UniversalVerdict(
                        falsified=True, witness=wit,
                        searched_bound=r.verdict.searched_bound,
                        evaluations=r.verdict.evaluations,
                        phase="descent", witness_values=assign,
                        note="found by walking the conclusion witness down "
                             "the step relation")
                    results[idx] = PremiseResult(r.name, r.formula, verdict)
                    break
            note = f"premise {name} pinned by descent from the conclusion witness"

    falsified = conclusion.verdict.falsified and not any(
        r.verdict.falsified for r in results)
    return CheckReport(
        model=M.name,
        kind=inst.kind,
        phi=format_formula(inst.phi),
        strides=inst.strides,
        premises=tuple(results),
        conclusion=conclusion,
        instance_falsified=falsified,
        budget=budget,
        alphabet_bound=alphabet_bound,
        seed=seed,
        exhaustive=exhaustive,
        note=note,
    )


# --- counterexample certificates ----------------------------------------------

@dataclass(frozen=True)
class Claim:
    statement: str
    verified: bool

    def to_dict(self) -> dict:
        return {"statement": self.statement, "verified": self.verified}


@dataclass(frozen=True)
class Certificate:
    name: str
    model: str
    witness: Dict[str, str]
    claims: Tuple[Claim, ...]
    samples: int
    seed: int

    @property
    def valid(self) -> bool:
        return all(c.verified for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "model": self.model,
            "witness": self.witness,
            "claims": [c.to_dict() for c in self.claims],
            "samples": self.samples,
            "seed": self.seed,
            "valid": self.valid,
        }


def replicate_big_step_failure(m: int, samples: int = 10000,
                               seed: int = 0) -> Certificate:
    """Certificate that the period-m structure satisfies every premise of
    m-step induction for the marking predicate yet refutes its conclusion.

    Rejects m = 1: the construction is about strides of at least two,
    where the structure additionally falsifies the step of every shorter
    schema; the period-1 structure refutes plain one-step induction,
    which check_instance exhibits directly without a certificate.
    """
    if not isinstance(m, int) or m < 2:
        raise InductionError("the big-step failure needs m >= 2")
    M = M1(m)
    phi = PredApp("A", (VAR_X,))
    inst = build_big_step(phi, m)
    rng = random.Random(seed)
    claims: List[Claim] = []

    ok = True
    for _ in range(samples):
        i = rng.randint(1, m)
        w = tuple(rng.randint(0, 9) for _ in range(i - 1))
        if not M.holds_a(from_word(w)):
            ok = False
            break
    claims.append(Claim(
        f"bases: every list built by consing onto nil is a word, and all "
        f"words carry the predicate ({samples} sampled instances)", ok))

    probe = 40 * m
    ok = True
    for k in range(0, probe, m):
        heads = tuple(range(k, k + m))
        l = from_nelem(nelem((), k + m))
        chain = prepend_word(heads, l)
        if chain != from_nelem(nelem((), k)):
            ok = False
            break
        if M.holds_a(l) or M.holds_a(chain):
            ok = False
            break
    claims.append(Claim(
        "step, symbolic: a consed list escapes the predicate only when it "
        "is a blocked progression N(k), which forces the heads to spell "
        f"k..k+{m - 1} and the tail to be N(k+{m}), itself blocked, so the "
        f"implication never has a true premise and false conclusion "
        f"(verified exactly for the {probe // m} candidates below {probe})", ok))

    step_formula = inst.premises[-1][1]
    _, step_body = _strip_quantifiers(step_formula)
    ok = True
    for _ in range(samples):
        sigma: Dict[Var, Value] = {VAR_X: sampling.random_m1_value(rng, max_start=probe)}
        for vec in inst.elem_vars:
            for v in vec:
                sigma[v] = rng.randint(0, probe)
        if not eval_formula(M, step_body, sigma):
            ok = False
            break
    claims.append(Claim(
        f"step, sampled: {samples} random head vectors and tails never "
        "falsify the step implication", ok))

    n0 = from_nelem(nelem((), 0))
    claims.append(Claim(
        "conclusion fails: N(0) is a blocked progression, so the predicate "
        "does not hold of it", not M.holds_a(n0)))

    return Certificate(
        name="big-step",
        model=M.name,
        witness={"X": format_translist(n0)},
        claims=tuple(claims),
        samples=samples,
        seed=seed,
    )


def replicate_right_cancellation_failure(samples: int = 1000,
                                         seed: int = 0) -> Certificate:
    """Certificate that appending on the left by N(0) fixes the cycle list
    rep(N(0)), refuting right cancellation in the append structure."""
    M = M2()
    y = from_nelem(nelem((), 0))
    x = omega_power((nelem((), 0),))
    rng = random.Random(seed)
    claims = [
        Claim("N(0) ++ rep(N(0)) equals rep(N(0)) exactly",
              concat(y, x) == x),
        Claim("N(0) is not nil", y != EMPTY),
    ]
    ok = True
    for _ in range(samples):
        w = sampling.random_word(rng, 6, 9)
        if not w:
            continue
        if concat(from_word(w), x) == x:
            ok = False
            break
    claims.append(Claim(
        f"contrast: no nonempty word absorbs into rep(N(0)) "
        f"({samples} samples)", ok))
    return Certificate(
        name="right-cancellation",
        model=M.name,
        witness={"Y": format_translist(y), "X": format_translist(x)},
        claims=tuple(claims),
        samples=samples,
        seed=seed,
    )


def replicate_right_decomposition_failure(samples: int = 1000,
                                          seed: int = 0) -> Certificate:
    """Certificate that N(0) has no last element: the append structure
    refutes the decomposition X = nil or exists Z, z with X = Z ++ [z]."""
    M = M2()
    n0 = from_nelem(nelem((), 0))
    rng = random.Random(seed)
    claims = [
        Claim("N(0) is not nil", n0 != EMPTY),
        Claim("last_decomposition(N(0)) is undefined",
              last_decomposition(n0) is None),
        Claim("the length of N(0) is a limit ordinal, and any list of the "
              "form Z ++ [z] has successor length, so no such Z exists",
              length(n0).is_limit),
    ]
    ok = True
    for _ in range(samples):
        w = sampling.random_word(rng, 6, 9)
        if not w:
            continue
        d = last_decomposition(from_word(w))
        if d is None:
            ok = False
            break
        init, z = d
        if concat(init, from_word((z,))) != from_word(w):
            ok = False
            break
    claims.append(Claim(
        f"contrast: every nonempty word decomposes and recombines "
        f"({samples} samples)", ok))
    return Certificate(
        name="right-decomposition",
        model=M.name,
        witness={"X": format_translist(n0)},
        claims=tuple(claims),
        samples=samples,
        seed=seed,
    )


CERTIFICATES = {
    "big-step": replicate_big_step_failure,
    "right-cancellation": replicate_right_cancellation_failure,
    "right-decomposition": replicate_right_decomposition_failure,
}
