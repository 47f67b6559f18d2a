"""Exact ordinal arithmetic in Cantor normal form below w^w.

An ordinal is a finite sum  w^e1*c1 + ... + w^ek*ck  with strictly
decreasing natural exponents and positive integer coefficients, stored
as a tuple of (exponent, coefficient) pairs.  All operations are exact
and use arbitrary-precision integers throughout.

Subtraction is left subtraction: ``a - b`` is the unique d with
``b + d == a`` and requires ``b <= a``.  Right cancellation genuinely
fails here (``1 + w == 2 + w == w``), so no right subtraction exists.
"""

from __future__ import annotations

import re
from typing import Tuple, Union

Terms = Tuple[Tuple[int, int], ...]


class OrdinalError(ArithmeticError):
    """Operation left its domain (underflow, division by zero, bad syntax)."""


class Ordinal:
    __slots__ = ("_terms",)

    def __init__(self, terms: Terms = ()):
        for i, (e, c) in enumerate(terms):
            if e < 0 or c < 1:
                raise OrdinalError(f"malformed term w^{e}*{c}")
            if i > 0 and terms[i - 1][0] <= e:
                raise OrdinalError("exponents must strictly decrease")
        self._terms = tuple(terms)

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalError(f"not an ordinal: {n}")
        return cls(((0, n),) if n else ())

    @property
    def terms(self) -> Terms:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return not self._terms or self._terms[0][0] == 0

    @property
    def is_successor(self) -> bool:
        return bool(self._terms) and self._terms[-1][0] == 0

    @property
    def is_limit(self) -> bool:
        return bool(self._terms) and self._terms[-1][0] > 0

    def as_int(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{self} is infinite")
        return self._terms[0][1] if self._terms else 0

    # -- comparison ----------------------------------------------------

    def _cmp(self, other: "Ordinal") -> int:
        a, b = self._terms, other._terms
        for (e1, c1), (e2, c2) in zip(a, b):
            if e1 != e2:
                return -1 if e1 < e2 else 1
            if c1 != c2:
                return -1 if c1 < c2 else 1
        return (len(a) > len(b)) - (len(a) < len(b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __lt__(self, other: "OrdinalLike") -> bool:
        return self._cmp(_coerce(other)) < 0

    def __le__(self, other: "OrdinalLike") -> bool:
        return self._cmp(_coerce(other)) <= 0

    def __gt__(self, other: "OrdinalLike") -> bool:
        return self._cmp(_coerce(other)) > 0

    def __ge__(self, other: "OrdinalLike") -> bool:
        return self._cmp(_coerce(other)) >= 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "OrdinalLike") -> "Ordinal":
        b = _coerce(other)._terms
        if not b:
            return self
        a = self._terms
        e = b[0][0]
        i = 0
        while i < len(a) and a[i][0] > e:
            i += 1
        if i < len(a) and a[i][0] == e:
            # boundary exponents coincide: coefficients add
            merged = (e, a[i][1] + b[0][1])
            return Ordinal(a[:i] + (merged,) + b[1:])
        return Ordinal(a[:i] + b)

    def __radd__(self, other: int) -> "Ordinal":
        return _coerce(other) + self

    def __sub__(self, other: "OrdinalLike") -> "Ordinal":
        """Left subtraction: the unique d with other + d == self."""
        a, b = self._terms, _coerce(other)._terms
        i = 0
        while i < len(a) and i < len(b) and a[i] == b[i]:
            i += 1
        if i == len(b):
            return Ordinal(a[i:])
        if i == len(a):
            raise OrdinalError(f"cannot subtract {_coerce(other)} from {self}")
        (ea, ca), (eb, cb) = a[i], b[i]
        if ea > eb:
            return Ordinal(a[i:])
        if ea == eb and ca > cb:
            return Ordinal(((ea, ca - cb),) + a[i + 1:])
        raise OrdinalError(f"cannot subtract {_coerce(other)} from {self}")

    def __mul__(self, other: "OrdinalLike") -> "Ordinal":
        a, b = self._terms, _coerce(other)._terms
        if not a or not b:
            return Ordinal()
        e1, c1 = a[0]
        result = Ordinal()
        for f, d in b:
            if f > 0:
                # a * w^f absorbs everything below the leading term
                result = result + Ordinal(((e1 + f, d),))
            else:
                result = result + Ordinal(((e1, c1 * d),) + a[1:])
        return result

    def __rmul__(self, other: int) -> "Ordinal":
        return _coerce(other) * self

    def __divmod__(self, alpha: "OrdinalLike") -> Tuple["Ordinal", "Ordinal"]:
        """Unique (d, m) with self == alpha*d + m and m < alpha."""
        alpha = _coerce(alpha)
        if alpha.is_zero:
            raise OrdinalError("division by zero ordinal")
        a1, c1 = alpha._terms[0]
        quot = Ordinal()
        xi = self
        while xi._cmp(alpha) >= 0:
            x1, k1 = xi._terms[0]
            if x1 > a1:
                quot = quot + Ordinal(((x1 - a1, k1),))
                xi = Ordinal(xi._terms[1:])
            else:
                n = k1 // c1
                if Ordinal(((a1, c1 * n),) + alpha._terms[1:])._cmp(xi) > 0:
                    n -= 1
                quot = quot + Ordinal.from_int(n)
                xi = xi - alpha * n
                break
        return quot, xi

    def __floordiv__(self, alpha: "OrdinalLike") -> "Ordinal":
        return divmod(self, alpha)[0]

    def __mod__(self, alpha: "OrdinalLike") -> "Ordinal":
        return divmod(self, alpha)[1]

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"

    def __str__(self) -> str:
        return format_ordinal(self)


OrdinalLike = Union[Ordinal, int]


def _coerce(x: OrdinalLike) -> Ordinal:
    return x if isinstance(x, Ordinal) else Ordinal.from_int(x)


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal(((1, 1),))
OMEGA2 = Ordinal(((2, 1),))


def format_ordinal(o: Ordinal) -> str:
    """Canonical text form, e.g. ``w^2*3 + w*2 + 5``; zero prints as ``0``."""
    if o.is_zero:
        return "0"
    parts = []
    for e, c in o.terms:
        if e == 0:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else f"w^{e}"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


_TOKENS = re.compile(r"\d+|w|divmod|[()^*+,]|-")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        for match in _TOKENS.finditer(text):
            if text[pos:match.start()].strip():
                raise OrdinalError(f"bad ordinal syntax at {pos}: {text[pos:]!r}")
            self.toks.append(match.group())
            pos = match.end()
        if text[pos:].strip():
            raise OrdinalError(f"bad ordinal syntax at {pos}: {text[pos:]!r}")
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise OrdinalError("unexpected end of ordinal expression")
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise OrdinalError(f"expected {tok!r}, got {got!r}")


def _parse_atom(s: _Scanner) -> Ordinal:
    tok = s.next()
    if tok == "w":
        if s.peek() == "^":
            s.next()
            exp = s.next()
            if not exp.isdigit():
                raise OrdinalError(f"exponent must be a natural, got {exp!r}")
            return Ordinal(((int(exp), 1),))
        return OMEGA
    if tok.isdigit():
        return Ordinal.from_int(int(tok))
    if tok == "(":
        inner = _parse_expr(s)
        s.expect(")")
        return inner
    raise OrdinalError(f"unexpected token {tok!r}")


def _parse_product(s: _Scanner) -> Ordinal:
    acc = _parse_atom(s)
    while s.peek() == "*":
        s.next()
        acc = acc * _parse_atom(s)
    return acc


def _parse_expr(s: _Scanner) -> Ordinal:
    acc = _parse_product(s)
    while s.peek() in ("+", "-"):
        op = s.next()
        rhs = _parse_product(s)
        acc = acc + rhs if op == "+" else acc - rhs
    return acc


def parse_ordinal(text: str) -> Ordinal:
    """Evaluate an ordinal expression: naturals, w, ^, *, + and left -."""
    s = _Scanner(text)
    result = _parse_expr(s)
    if s.peek() is not None:
        raise OrdinalError(f"trailing input: {s.peek()!r}")
    return result


def parse_ordinal_query(text: str) -> Union[Ordinal, Tuple[Ordinal, Ordinal]]:
    """Like parse_ordinal but allows a top-level divmod(a, b) query."""
    s = _Scanner(text)
    if s.peek() == "divmod":
        s.next()
        s.expect("(")
        xi = _parse_expr(s)
        s.expect(",")
        alpha = _parse_expr(s)
        s.expect(")")
        if s.peek() is not None:
            raise OrdinalError(f"trailing input: {s.peek()!r}")
        return divmod(xi, alpha)
    result = _parse_expr(s)
    if s.peek() is not None:
        raise OrdinalError(f"trailing input: {s.peek()!r}")
    return result
