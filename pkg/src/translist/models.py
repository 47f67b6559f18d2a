"""The two non-standard list structures and their decision helpers.

M1(m) interprets the predicate signature: its lists are the finite words
together with the single arithmetic-progression letters, and A holds
everywhere except on the pure progressions N(k) whose start is divisible
by m.  M2 interprets the append signature over the full block fragment.

Besides term and formula evaluation this module provides

  * sampled axiom checking with replayable counterexamples,
  * decomposition of a term into the constant segments surrounding the
    occurrences of a chosen list variable, and
  * stabilization bounds: explicit thresholds past which an atom or a
    formula can no longer distinguish long words from infinite lists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import sampling
from .logic import (
    And,
    App,
    Bottom,
    Const,
    ELEM,
    Eq,
    Formula,
    Forall,
    Exists,
    Implies,
    LIST,
    Not,
    Or,
    PredApp,
    SIG_L1,
    SIG_LA,
    Signature,
    SortError,
    Term,
    Top,
    Var,
    atoms,
    format_formula,
    free_vars,
    is_quantifier_free,
    parse_formula,
    sort_check,
    term_vars,
    var,
)
from .sequences import (
    EMPTY,
    Letter,
    Ordinal,
    TransfiniteList,
    Word,
    as_nelem,
    at,
    common_prefix_split,
    concat,
    format_translist,
    from_word,
    is_single_nelem,
    is_word,
    last_decomposition,
    length,
    parse_translist,
    prepend_word,
    suffix,
)

Value = Union[int, TransfiniteList]

VAR_X = Var("X", LIST)
VAR_Y = Var("Y", LIST)


class ModelError(Exception):
    """Evaluation outside a structure's domain or signature."""


class Model:
    name: str
    signature: Signature
    kind: str

    def contains(self, value: Value) -> bool:
        raise NotImplementedError


class M1(Model):
    """Words plus single progression letters; A marks the blocked lists.

    The parameter m >= 1 fixes which progressions N(k) fall outside A,
    namely those with m | k.
    """

    kind = "m1"

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 1:
            raise ValueError("m1 requires an integer period m >= 1")
        self.m = m
        self.name = f"m1:{m}"
        self.signature = SIG_LA

    def contains(self, value: Value) -> bool:
        if isinstance(value, int):
            return value >= 0
        return is_word(value) or is_single_nelem(value)

    def holds_a(self, l: TransfiniteList) -> bool:
        if is_word(l):
            return True
        e = as_nelem(l)
        return bool(e.prefix) or e.start % self.m != 0


class M2(Model):
    """The full block fragment with append interpreted as concatenation."""

    kind = "m2"

    def __init__(self):
        self.name = "m2"
        self.signature = SIG_L1

    def contains(self, value: Value) -> bool:
        if isinstance(value, int):
            return value >= 0
        return isinstance(value, TransfiniteList)


def get_model(spec: str) -> Model:
    """Parse a model name: 'm2', 'm1:3', or bare 'm1' (period 1)."""
    text = spec.strip().lower()
    if text == "m2":
        return M2()
    if text == "m1":
        return M1(1)
    if text.startswith("m1:"):
        try:
            return M1(int(text[3:]))
        except ValueError:
            raise ModelError(f"bad m1 period in {spec!r}") from None
    raise ModelError(f"unknown model {spec!r} (expected m1[:m] or m2)")


# --- evaluation -------------------------------------------------------------

Assignment = Mapping[Var, Value]


def eval_term(M: Model, t: Term, assignment: Assignment) -> Value:
    if isinstance(t, Var):
        try:
            return assignment[t]
        except KeyError:
            raise ModelError(f"variable {t.name} has no assigned value") from None
    if isinstance(t, Const):
        v = t.value
        if isinstance(v, TransfiniteList) and not M.contains(v):
            raise ModelError(
                f"constant {format_translist(v)} lies outside the domain of {M.name}")
        return v
    if t.func == "nil":
        return EMPTY
    if t.func == "cons":
        head = eval_term(M, t.args[0], assignment)
        tail = eval_term(M, t.args[1], assignment)
        return prepend_word((head,), tail)
    if t.func == "++":
        if "++" not in M.signature.functions:
            raise ModelError(f"append is not interpreted in {M.name}")
        left = eval_term(M, t.args[0], assignment)
        right = eval_term(M, t.args[1], assignment)
        return concat(left, right)
    raise ModelError(f"unknown function {t.func!r}")


def eval_formula(M: Model, phi: Formula, assignment: Assignment) -> bool:
    """Classical evaluation of a quantifier-free formula."""
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Bottom):
        return False
    if isinstance(phi, Eq):
        return eval_term(M, phi.left, assignment) == eval_term(M, phi.right, assignment)
    if isinstance(phi, PredApp):
        if phi.name not in M.signature.predicates:
            raise ModelError(f"predicate {phi.name} is not interpreted in {M.name}")
        value = eval_term(M, phi.args[0], assignment)
        return M.holds_a(value)  # type: ignore[attr-defined]
    if isinstance(phi, Not):
        return not eval_formula(M, phi.body, assignment)
    if isinstance(phi, And):
        return eval_formula(M, phi.left, assignment) and eval_formula(M, phi.right, assignment)
    if isinstance(phi, Or):
        return eval_formula(M, phi.left, assignment) or eval_formula(M, phi.right, assignment)
    if isinstance(phi, Implies):
        return (not eval_formula(M, phi.left, assignment)) or eval_formula(M, phi.right, assignment)
    if isinstance(phi, (Forall, Exists)):
        raise ModelError("eval_formula handles quantifier-free formulas only; "
                         "use check_universal for quantified statements")
    raise ModelError(f"unknown formula node {type(phi).__name__}")


def format_value(v: Value) -> str:
    if isinstance(v, int):
        return str(v)
    return format_translist(v)


def parse_assignment(text: str) -> Dict[Var, Value]:
    """Parse 'X=rep(N(0)); x=3' style bindings; sorts follow variable case."""
    out: Dict[Var, Value] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        name, sep, rhs = part.partition("=")
        if not sep:
            raise ModelError(f"binding {part!r} is missing '='")
        v = var(name.strip())
        rhs = rhs.strip()
        if v.sort == ELEM:
            try:
                out[v] = int(rhs)
            except ValueError:
                raise ModelError(f"element binding for {v.name} must be a natural "
                                 f"number, got {rhs!r}") from None
        else:
            out[v] = parse_translist(rhs)
    return out


def validate_assignment(M: Model, assignment: Assignment) -> None:
    for v, val in assignment.items():
        if v.sort == ELEM and not isinstance(val, int):
            raise ModelError(f"{v.name} is element-sorted but bound to a list")
        if v.sort == LIST and not isinstance(val, TransfiniteList):
            raise ModelError(f"{v.name} is list-sorted but bound to an element")
        if not M.contains(val):
            raise ModelError(f"value {format_value(val)} for {v.name} lies outside "
                             f"the domain of {M.name}")


# --- axioms -----------------------------------------------------------------

AXIOM_TEXTS: Dict[str, str] = {
    "L0.1": "nil != cons(x, X)",
    "L0.2": "cons(x, X) = cons(y, Y) -> x = y & X = Y",
    "L1.1": "nil ++ Y = Y",
    "L1.2": "cons(x, X) ++ Y = cons(x, X ++ Y)",
    "CA": "X = nil | (exists x1. exists X1. X = cons(x1, X1))",
}


def default_axioms(M: Model) -> List[str]:
    if M.kind == "m1":
        return ["L0.1", "L0.2", "CA"]
    return ["L0.1", "L0.2", "L1.1", "L1.2", "CA"]


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    formula: str
    samples: int
    holds: bool
    counterexample: Optional[Dict[str, str]]
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "formula": self.formula,
            "samples": self.samples,
            "holds": self.holds,
            "counterexample": self.counterexample,
            "note": self.note,
        }


def ca_witness(l: TransfiniteList) -> Optional[Tuple[int, TransfiniteList]]:
    """A head and tail witnessing the case-analysis axiom, None for nil."""
    if l == EMPTY:
        return None
    return at(l, 0), suffix(l, 1)


def check_axioms(M: Model, axioms: Optional[Sequence[str]] = None,
                 samples: int = 1000, seed: int = 0) -> List[AxiomReport]:
    rng = random.Random(seed)
    reports: List[AxiomReport] = []
    for name in axioms if axioms is not None else default_axioms(M):
        if name not in AXIOM_TEXTS:
            raise ModelError(f"unknown axiom {name!r}")
        if name == "CA":
            reports.append(_check_ca(M, samples, rng))
            continue
        phi = parse_formula(AXIOM_TEXTS[name], M.signature)
        variables = sorted(free_vars(phi), key=lambda v: v.name)
        counterexample = None
        for _ in range(samples):
            sigma = sampling.random_assignment(M.kind, variables, rng)
            if not eval_formula(M, phi, sigma):
                counterexample = {v.name: format_value(sigma[v]) for v in variables}
                break
        reports.append(AxiomReport(
            axiom=name,
            formula=AXIOM_TEXTS[name],
            samples=samples,
            holds=counterexample is None,
            counterexample=counterexample,
        ))
    return reports


def _check_ca(M: Model, samples: int, rng: random.Random) -> AxiomReport:
    counterexample = None
    note = ""
    for _ in range(samples):
        l = sampling.random_value(M.kind, LIST, rng)
        w = ca_witness(l)
        if w is None:
            continue
        head, tail = w
        if not M.contains(tail) or prepend_word((head,), tail) != l:
            counterexample = {"X": format_translist(l)}
            break
        if not note:
            note = (f"witnessed by {format_translist(l)} = "
                    f"cons({head}, {format_translist(tail)})")
    return AxiomReport(
        axiom="CA",
        formula=AXIOM_TEXTS["CA"],
        samples=samples,
        holds=counterexample is None,
        counterexample=counterexample,
        note=note,
    )


# --- decomposition ----------------------------------------------------------

def decompose_term(M: Model, t: Term, x: Var = VAR_X,
                   assignment: Optional[Assignment] = None
                   ) -> List[TransfiniteList]:
    """Split a list term into the constant segments around occurrences of x.

    For a term with n occurrences of x the result has n + 1 segments
    l_0, ..., l_n with t(X/l) = l_0 ^ l ^ l_1 ^ l ^ ... ^ l_n.  Element
    subterms must be closed under the given assignment; list variables
    other than x are not allowed.
    """
    sigma: Assignment = assignment or {}

    def go(term: Term) -> List[TransfiniteList]:
        if isinstance(term, Var):
            if term == x:
                return [EMPTY, EMPTY]
            if term.sort == LIST:
                raise ModelError(
                    f"decomposition is relative to {x.name}; free list variable "
                    f"{term.name} has no constant value")
            raise ModelError(f"element variable {term.name} in list position")
        if isinstance(term, Const):
            v = eval_term(M, term, sigma)
            if not isinstance(v, TransfiniteList):
                raise ModelError("element constant in list position")
            return [v]
        if term.func == "nil":
            return [EMPTY]
        if term.func == "cons":
            head = eval_term(M, term.args[0], sigma)
            rest = go(term.args[1])
            return [prepend_word((head,), rest[0])] + rest[1:]
        if term.func == "++":
            if "++" not in M.signature.functions:
                raise ModelError(f"append is not interpreted in {M.name}")
            left = go(term.args[0])
            right = go(term.args[1])
            return left[:-1] + [concat(left[-1], right[0])] + right[1:]
        raise ModelError(f"unknown function {term.func!r}")

    return go(t)


def recompose(segments: Sequence[TransfiniteList],
              l: TransfiniteList) -> TransfiniteList:
    """Evaluate a decomposition at l: l_0 ^ l ^ l_1 ^ ... ^ l_n."""
    out = segments[0]
    for seg in segments[1:]:
        out = concat(out, concat(l, seg))
    return out


# --- stabilization bounds ---------------------------------------------------

@dataclass(frozen=True)
class StabilizationBound:
    kind: str
    bound: int
    trace: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "bound": self.bound, "trace": self.trace}


def a_atom_bound(m: int, t: Term, x: Var = VAR_X) -> StabilizationBound:
    """Threshold K: A(t(N(k))) is true for every k >= K not divisible by m,
    and A(t(w)) is true for every word w of length >= K."""
    M = M1(m)
    if x not in term_vars(t):
        value = eval_term(M, t, {})
        if not isinstance(value, TransfiniteList):
            raise ModelError("A expects a list argument")
        if M.holds_a(value):
            return StabilizationBound("a-atom", 0, "constant atom, already true")
        raise ModelError("A-atom on a fixed blocked progression is constantly "
                         "false; no stabilization threshold exists")
    segments = decompose_term(M, t, x)
    if len(segments) != 2 or segments[1] != EMPTY:
        raise ModelError("predicate-signature terms carry the variable as "
                         "their spine tail")
    w = segments[0]
    if not is_word(w):
        raise ModelError("cons prefix must be a word")
    if w.tail == ():
        return StabilizationBound("a-atom", 0, "bare variable: A flips only on "
                                               "the blocked progressions")
    bound = w.tail[-1] + 2
    return StabilizationBound(
        "a-atom", bound,
        f"prefix {format_translist(w)} stops merging into N(k) once "
        f"k >= {bound}, leaving a non-progression letter in A")


def _m1_sides(M: M1, eq: Eq, x: Var):
    left = decompose_term(M, eq.left, x)
    right = decompose_term(M, eq.right, x)
    def shape(segs: List[TransfiniteList]):
        if len(segs) == 1:
            return ("const", segs[0])
        return ("var", segs[0])
    return shape(left), shape(right)


def equation_bound_m1(eq: Eq, x: Var = VAR_X) -> Optional[StabilizationBound]:
    """Threshold K past which the equation's truth value is constant (false)
    on all words of length >= K and all progressions N(k) with k >= K.

    Returns None when the equation holds for every value of x, so no
    finite threshold is needed.
    """
    M = M1(1)
    (k1, a), (k2, b) = _m1_sides(M, eq, x)
    kind = "m1-equation"
    if k1 == "const" and k2 == "const":
        if a == b:
            return None
        return StabilizationBound(kind, 0, "distinct constants never agree")
    if k1 == "var" and k2 == "var":
        if a == b:
            return None
        return StabilizationBound(kind, 0, "distinct cons prefixes never agree")
    w, const = (a, b) if k1 == "var" else (b, a)
    wlen = len(w.tail)
    if length(const) < Ordinal.from_int(wlen):
        return StabilizationBound(kind, 0, "constant side is shorter than the "
                                           "cons prefix")
    if any(at(const, i) != w.tail[i] for i in range(wlen)):
        return StabilizationBound(kind, 0, "cons prefix mismatches the constant")
    residue = suffix(const, wlen)
    if is_word(residue):
        bound = len(residue.tail) + 1
        return StabilizationBound(
            kind, bound,
            f"x must equal the word {format_translist(residue)}; anything of "
            f"length >= {bound} differs")
    bound = at(residue, 0) + 1
    return StabilizationBound(
        kind, bound,
        f"x must equal {format_translist(residue)}; entries from {bound} on "
        f"miss its first letter")


def equation_bound_m2(eq: Eq, x: Var = VAR_X) -> Optional[StabilizationBound]:
    """Threshold N: substituting any list starting with an entry >= N
    falsifies the equation.  None when the equation is universally true."""
    M = M2()
    left = decompose_term(M, eq.left, x)
    right = decompose_term(M, eq.right, x)
    if len(left) > len(right):
        left, right = right, left
    kind = "m2-equation"
    j0 = next((j for j in range(len(left)) if left[j] != right[j]), None)
    if j0 is None:
        if len(left) == len(right):
            return None
        return StabilizationBound(
            kind, 0,
            "sides agree up to extra variable copies; only nil could close "
            "the gap and substituted lists here are nonempty")
    common, rest_a, rest_b = common_prefix_split(left[j0], right[j0])
    if rest_a != EMPTY and rest_b != EMPTY:
        return StabilizationBound(kind, 0, "segments diverge at a fixed entry")
    if rest_a == EMPTY:
        side_ends = j0 == len(left) - 1
        other = rest_b
    else:
        side_ends = j0 == len(right) - 1
        other = rest_a
    if side_ends:
        return StabilizationBound(
            kind, 0,
            "one side is exhausted while the other still owes "
            f"{format_translist(other)}")
    first = at(other, 0)
    return StabilizationBound(
        kind, first + 1,
        f"after the shared prefix the substituted list faces the fixed entry "
        f"{first}; heads >= {first + 1} can never match")


def formula_sync_bound(phi: Formula, lam: TransfiniteList,
                       x: Var = VAR_X) -> StabilizationBound:
    """Threshold n0: for n >= n0 the formula cannot tell the tail lam^n
    from the single word (n), because every falsifiable atom has gone
    constantly false on both."""
    if is_word(lam):
        raise ModelError("synchronization needs an infinite list")
    if not is_quantifier_free(phi):
        raise ModelError("synchronization bounds apply to open formulas")
    extra = free_vars(phi) - {x}
    if extra:
        names = ", ".join(sorted(v.name for v in extra))
        raise ModelError(f"formula must have {x.name} as its only free "
                         f"variable, found {names}")
    sort_check(phi, SIG_L1)
    block = lam.blocks[0]
    head = block.elem if isinstance(block, Letter) else block.letters[0]
    n0 = 0
    considered = 0
    for atom in set(atoms(phi)):
        if isinstance(atom, (Top, Bottom)):
            continue
        if isinstance(atom, PredApp):
            raise ModelError("append-signature formulas carry no predicates")
        if x not in term_vars(atom.left) | term_vars(atom.right):
            continue
        b = equation_bound_m2(atom, x)
        if b is None:
            continue
        considered += 1
        # entries of lam pass b.bound once the progression head catches up
        n_lam = len(head.prefix) + max(0, b.bound - head.start)
        n0 = max(n0, b.bound, n_lam)
    return StabilizationBound(
        "formula-sync", n0,
        f"{considered} falsifiable atom(s); entries of "
        f"{format_translist(lam)} and of singleton words line up past {n0}")
