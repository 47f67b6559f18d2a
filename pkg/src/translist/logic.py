"""Many-sorted first-order logic over list signatures.

Two sorts: ``i`` (elements, naturals) and ``list``.  Signatures:

* ``L0``: nil, cons
* ``LA``: L0 plus the unary list predicate A
* ``L1``: L0 plus append (``++``)

Variable case fixes the sort: upper-case identifiers are list variables,
lower-case are element variables.  Domain constants appear directly as
literals (numerals for elements, sequence literals for lists), which is
the executable reading of expanding a signature by names for every
domain element.

Connective precedence, loosest to tightest: ``->`` (right associative),
``|``, ``&``, ``~``.  A quantifier body extends as far right as
possible.  ``t != u`` is sugar for ``~(t = u)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple, Union

from . import sequences
from .sequences import SequenceError, TransfiniteList

ELEM = "i"
LIST = "list"
SORTS = (ELEM, LIST)


class LogicError(Exception):
    pass


class LexError(LogicError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ParseError(LogicError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SortError(LogicError):
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# -- signatures ------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    name: str
    functions: Mapping[str, Tuple[Tuple[str, ...], str]]
    predicates: Mapping[str, Tuple[str, ...]]

    def __str__(self) -> str:
        return self.name


_L0_FUNCS = {"nil": ((), LIST), "cons": ((ELEM, LIST), LIST)}

SIG_L0 = Signature("L0", dict(_L0_FUNCS), {})
SIG_LA = Signature("LA", dict(_L0_FUNCS), {"A": (LIST,)})
SIG_L1 = Signature("L1", {**_L0_FUNCS, "++": ((LIST, LIST), LIST)}, {})


# -- terms -----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Var:
    name: str
    sort: str


@dataclass(frozen=True, slots=True)
class App:
    func: str
    args: Tuple["Term", ...]


@dataclass(frozen=True, slots=True)
class Const:
    """Domain constant: an element value or a sequence value."""

    value: Union[int, TransfiniteList]


Term = Union[Var, App, Const]


def var(name: str) -> Var:
    """Variable with its sort read off the identifier case."""
    if not name or not name[0].isalpha():
        raise LogicError(f"bad variable name {name!r}")
    return Var(name, LIST if name[0].isupper() else ELEM)


def term_sort(t: Term, sig: Signature) -> str:
    if isinstance(t, Var):
        return t.sort
    if isinstance(t, Const):
        return ELEM if isinstance(t.value, int) else LIST
    if t.func not in sig.functions:
        raise SortError(f"function {t.func!r} not in signature {sig.name}")
    arg_sorts, result = sig.functions[t.func]
    if len(arg_sorts) != len(t.args):
        raise SortError(f"{t.func} expects {len(arg_sorts)} arguments")
    for expected, arg in zip(arg_sorts, t.args):
        got = term_sort(arg, sig)
        if got != expected:
            raise SortError(
                f"{t.func} argument has sort {got}, expected {expected}")
    return result


# -- formulas --------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class PredApp:
    name: str
    args: Tuple[Term, ...]


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


@dataclass(frozen=True, slots=True)
class Not:
    body: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Forall:
    bound: Var
    body: "Formula"


@dataclass(frozen=True, slots=True)
class Exists:
    bound: Var
    body: "Formula"


Formula = Union[Eq, PredApp, Top, Bottom, Not, And, Or, Implies, Forall, Exists]

TOP = Top()
BOTTOM = Bottom()


def sort_check(phi: Formula, sig: Signature) -> None:
    """Raise SortError unless phi is well-sorted over sig."""
    if isinstance(phi, Eq):
        ls, rs = term_sort(phi.left, sig), term_sort(phi.right, sig)
        if ls != rs:
            raise SortError(f"equation mixes sorts {ls} and {rs}")
    elif isinstance(phi, PredApp):
        if phi.name not in sig.predicates:
            raise SortError(f"predicate {phi.name!r} not in signature {sig.name}")
        expected = sig.predicates[phi.name]
        if len(expected) != len(phi.args):
            raise SortError(f"{phi.name} expects {len(expected)} arguments")
        for want, arg in zip(expected, phi.args):
            got = term_sort(arg, sig)
            if got != want:
                raise SortError(f"{phi.name} argument has sort {got}, expected {want}")
    elif isinstance(phi, (Top, Bottom)):
        pass
    elif isinstance(phi, Not):
        sort_check(phi.body, sig)
    elif isinstance(phi, (And, Or, Implies)):
        sort_check(phi.left, sig)
        sort_check(phi.right, sig)
    elif isinstance(phi, (Forall, Exists)):
        sort_check(phi.body, sig)
    else:
        raise LogicError(f"not a formula: {phi!r}")


def term_vars(t: Term) -> FrozenSet[Var]:
    if isinstance(t, Var):
        return frozenset((t,))
    if isinstance(t, App):
        out: FrozenSet[Var] = frozenset()
        for a in t.args:
            out |= term_vars(a)
        return out
    return frozenset()


def free_vars(phi: Formula) -> FrozenSet[Var]:
    if isinstance(phi, Eq):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, PredApp):
        out: FrozenSet[Var] = frozenset()
        for a in phi.args:
            out |= term_vars(a)
        return out
    if isinstance(phi, (Top, Bottom)):
        return frozenset()
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, (And, Or, Implies)):
        return free_vars(phi.left) | free_vars(phi.right)
    return free_vars(phi.body) - {phi.bound}


def is_quantifier_free(phi: Formula) -> bool:
    if isinstance(phi, (Eq, PredApp, Top, Bottom)):
        return True
    if isinstance(phi, Not):
        return is_quantifier_free(phi.body)
    if isinstance(phi, (And, Or, Implies)):
        return is_quantifier_free(phi.left) and is_quantifier_free(phi.right)
    return False


def atoms(phi: Formula) -> Iterator[Formula]:
    """All atomic subformulas (equations, predicate atoms, top, bottom)."""
    if isinstance(phi, (Eq, PredApp, Top, Bottom)):
        yield phi
    elif isinstance(phi, Not):
        yield from atoms(phi.body)
    elif isinstance(phi, (And, Or, Implies)):
        yield from atoms(phi.left)
        yield from atoms(phi.right)
    elif isinstance(phi, (Forall, Exists)):
        yield from atoms(phi.body)


def fresh_var(base: Var, taken: FrozenSet[Var]) -> Var:
    if base not in taken:
        return base
    stem = base.name.rstrip("0123456789")
    i = 1
    while True:
        cand = Var(f"{stem}{i}", base.sort)
        if cand not in taken:
            return cand
        i += 1


def substitute_term(t: Term, sub: Mapping[Var, Term]) -> Term:
    if isinstance(t, Var):
        return sub.get(t, t)
    if isinstance(t, App):
        return App(t.func, tuple(substitute_term(a, sub) for a in t.args))
    return t


def substitute(phi: Formula, sub: Mapping[Var, Term]) -> Formula:
    """Simultaneous capture-avoiding substitution of terms for variables."""
    for v, t in sub.items():
        if isinstance(t, Var) or isinstance(t, (App, Const)):
            continue
        raise LogicError(f"substitution maps {v} to a non-term {t!r}")
    return _subst(phi, dict(sub))


def _subst(phi: Formula, sub: Dict[Var, Term]) -> Formula:
    if not sub:
        return phi
    if isinstance(phi, Eq):
        return Eq(substitute_term(phi.left, sub), substitute_term(phi.right, sub))
    if isinstance(phi, PredApp):
        return PredApp(phi.name, tuple(substitute_term(a, sub) for a in phi.args))
    if isinstance(phi, (Top, Bottom)):
        return phi
    if isinstance(phi, Not):
        return Not(_subst(phi.body, sub))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(_subst(phi.left, sub), _subst(phi.right, sub))
    if isinstance(phi, (Forall, Exists)):
        inner = {v: t for v, t in sub.items() if v != phi.bound}
        if not inner:
            return phi
        replaced: FrozenSet[Var] = frozenset()
        for t in inner.values():
            replaced |= term_vars(t)
        bound, body = phi.bound, phi.body
        if bound in replaced:
            taken = replaced | free_vars(body) | frozenset(inner)
            bound2 = fresh_var(bound, taken)
            body = _subst(body, {bound: bound2})
            bound = bound2
        return type(phi)(bound, _subst(body, inner))
    raise LogicError(f"not a formula: {phi!r}")


# -- lexer -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<nat>\d+)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_']*)"
    r"|(?P<sym>\+\+|->|!=|[()\[\],.:=~&|])"
)


@dataclass(frozen=True, slots=True)
class _Tok:
    kind: str  # nat | ident | sym | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise LexError(f"unexpected character {text[i]!r}", i)
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), i))
        i = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


_KEYWORDS = {"nil", "cons", "rep", "forall", "exists", "true", "false"}


class _Parser:
    """Recursive descent over the token list; supports backtracking for
    the parenthesized-formula versus parenthesized-term ambiguity."""

    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().text == text and self.peek().kind != "end":
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.kind == "end" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.pos)
        return self.next()

    # formulas

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while self.accept("|"):
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.unary()
        while self.accept("&"):
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.text == "~":
            self.next()
            return Not(self.unary())
        if tok.text in ("forall", "exists"):
            self.next()
            name = self.peek()
            if name.kind != "ident" or name.text in _KEYWORDS:
                raise ParseError(f"expected a variable after {tok.text}", name.pos)
            self.next()
            v = var(name.text)
            if self.accept(":"):
                sort_tok = self.next()
                if sort_tok.text not in SORTS:
                    raise ParseError(f"unknown sort {sort_tok.text!r}", sort_tok.pos)
                if sort_tok.text != v.sort:
                    raise SortError(
                        f"variable {v.name} has sort {v.sort} by its case, "
                        f"annotated {sort_tok.text}", sort_tok.pos)
            self.expect(".")
            body = self.formula()
            return (Forall if tok.text == "forall" else Exists)(v, body)
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.text == "true":
            self.next()
            return TOP
        if tok.text == "false":
            self.next()
            return BOTTOM
        if (tok.kind == "ident" and tok.text in self.sig.predicates
                and self.toks[self.i + 1].text == "("):
            self.next()
            self.next()
            args = [self.term()]
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
            atom = PredApp(tok.text, tuple(args))
            self._check_sorts(atom, tok.pos)
            return atom
        if tok.text == "(":
            save = self.i
            try:
                self.next()
                inner = self.formula()
                self.expect(")")
                return inner
            except LogicError:
                self.i = save
        return self.equation()

    def equation(self) -> Formula:
        tok = self.peek()
        left = self.term()
        op = self.peek()
        if op.text not in ("=", "!="):
            raise ParseError(
                f"expected '=' or '!=' after term, found {op.text or 'end of input'!r}",
                op.pos)
        self.next()
        right = self.term()
        eq = Eq(left, right)
        self._check_sorts(eq, tok.pos)
        return eq if op.text == "=" else Not(eq)

    def _check_sorts(self, atom: Formula, pos: int) -> None:
        try:
            sort_check(atom, self.sig)
        except SortError as e:
            raise SortError(str(e).split(" (at position")[0], pos) from None

    # terms

    def term(self) -> Term:
        out = self.base_term()
        while self.peek().text == "++":
            tok = self.next()
            if "++" not in self.sig.functions:
                raise SortError(f"append is not in signature {self.sig.name}", tok.pos)
            out = App("++", (out, self.base_term()))
        return out

    def base_term(self) -> Term:
        tok = self.peek()
        if tok.kind == "nat":
            self.next()
            return Const(int(tok.text))
        if tok.text == "(":
            self.next()
            inner = self.term()
            self.expect(")")
            return inner
        if tok.text == "nil":
            self.next()
            return App("nil", ())
        if tok.text == "cons":
            self.next()
            self.expect("(")
            first = self.term()
            self.expect(",")
            second = self.term()
            self.expect(")")
            return App("cons", (first, second))
        if tok.text == "[" or tok.text == "rep" or (
                tok.text == "N" and self.toks[self.i + 1].text == "("):
            return Const(self._literal())
        if tok.kind == "ident" and tok.text not in _KEYWORDS:
            self.next()
            if self.peek().text == "(":
                raise ParseError(f"unknown function {tok.text!r}", tok.pos)
            return var(tok.text)
        raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}",
                         tok.pos)

    def _literal(self) -> TransfiniteList:
        out = self._literal_segment()
        while self.peek().text == "." and self.toks[self.i + 1].text in ("[", "rep", "N"):
            self.next()
            out = sequences.concat(out, self._literal_segment())
        return out

    def _literal_segment(self) -> TransfiniteList:
        tok = self.peek()
        if tok.text == "rep":
            self.next()
            self.expect("(")
            letters = [self._nelem_literal()]
            while self.accept(","):
                letters.append(self._nelem_literal())
            self.expect(")")
            return sequences.omega_power(letters)
        if tok.text == "N":
            return sequences.from_nelem(self._nelem_literal())
        if tok.text == "[":
            w = self._word()
            if self.peek().text == "~":
                self.next()
                e = self._nelem_literal()
                return sequences.from_nelem(sequences.nelem(w + e.prefix, e.start))
            return sequences.from_word(w)
        raise ParseError(f"expected a sequence literal, found {tok.text!r}", tok.pos)

    def _word(self) -> Tuple[int, ...]:
        self.expect("[")
        entries = []
        if self.peek().text != "]":
            entries.append(self._nat())
            while self.accept(","):
                entries.append(self._nat())
        self.expect("]")
        return tuple(entries)

    def _nelem_literal(self) -> sequences.NElem:
        tok = self.peek()
        if tok.text == "[":
            w = self._word()
            self.expect("~")
            e = self._bare_nelem()
            return sequences.nelem(w + e.prefix, e.start)
        return self._bare_nelem()

    def _bare_nelem(self) -> sequences.NElem:
        tok = self.expect("N")
        self.expect("(")
        k = self._nat()
        self.expect(")")
        del tok
        return sequences.nelem((), k)

    def _nat(self) -> int:
        tok = self.peek()
        if tok.kind != "nat":
            raise ParseError(f"expected a natural, found {tok.text!r}", tok.pos)
        self.next()
        return int(tok.text)


def parse_formula(text: str, sig: Signature) -> Formula:
    p = _Parser(text, sig)
    phi = p.formula()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.pos)
    return phi


def parse_term(text: str, sig: Signature) -> Term:
    p = _Parser(text, sig)
    t = p.term()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.pos)
    term_sort(t, sig)
    return t


# -- printing --------------------------------------------------------------


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        if isinstance(t.value, int):
            return str(t.value)
        return sequences.format_translist(t.value)
    if t.func == "nil":
        return "nil"
    if t.func == "cons":
        return f"cons({format_term(t.args[0])}, {format_term(t.args[1])})"
    if t.func == "++":
        left, right = t.args
        rs = format_term(right)
        if isinstance(right, App) and right.func == "++":
            rs = f"({rs})"
        return f"{format_term(left)} ++ {rs}"
    return f"{t.func}({', '.join(format_term(a) for a in t.args)})"


_PREC_IMPLIES, _PREC_OR, _PREC_AND, _PREC_NOT = 1, 2, 3, 4


def _fmt(phi: Formula, prec: int) -> str:
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, Eq):
        return f"{format_term(phi.left)} = {format_term(phi.right)}"
    if isinstance(phi, PredApp):
        return f"{phi.name}({', '.join(format_term(a) for a in phi.args)})"
    if isinstance(phi, Not):
        if isinstance(phi.body, Eq):
            e = phi.body
            return f"{format_term(e.left)} != {format_term(e.right)}"
        return f"~{_fmt(phi.body, _PREC_NOT)}"
    if isinstance(phi, And):
        # left associative: a nested conjunction on the right needs parens
        s = f"{_fmt(phi.left, _PREC_AND)} & {_fmt(phi.right, _PREC_AND + 1)}"
        return f"({s})" if prec > _PREC_AND else s
    if isinstance(phi, Or):
        s = f"{_fmt(phi.left, _PREC_OR)} | {_fmt(phi.right, _PREC_OR + 1)}"
        return f"({s})" if prec > _PREC_OR else s
    if isinstance(phi, Implies):
        # right associative: parenthesize a nested implication on the left
        s = f"{_fmt(phi.left, _PREC_OR)} -> {_fmt(phi.right, _PREC_IMPLIES)}"
        return f"({s})" if prec > _PREC_IMPLIES else s
    if isinstance(phi, (Forall, Exists)):
        word = "forall" if isinstance(phi, Forall) else "exists"
        s = f"{word} {phi.bound.name}:{phi.bound.sort}. {_fmt(phi.body, 0)}"
        return f"({s})" if prec > 0 else s
    raise LogicError(f"not a formula: {phi!r}")


def format_formula(phi: Formula) -> str:
    return _fmt(phi, 0)


NIL = App("nil", ())


def cons(head: Term, tl: Term) -> App:
    return App("cons", (head, tl))


def append(left: Term, right: Term) -> App:
    return App("++", (left, right))
