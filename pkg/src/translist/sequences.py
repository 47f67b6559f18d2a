"""Transfinite sequences of naturals with exact, canonical representations.

The representable fragment covers sequences of length below w^3 whose
omega-runs are ultimately periodic.  A sequence is a block list followed
by a finite tail word:

* ``Letter(e)`` contributes one omega-letter ``e`` (length w),
* ``Cycle(c1..ck)`` contributes the letters ``c1..ck`` repeated omega
  times (length w^2),
* the tail contributes finitely many entries.

An omega-letter ``NElem(prefix, start)`` denotes ``prefix`` followed by
``start, start+1, start+2, ...``.

Canonical form is unique per denoted sequence, so structural equality
decides sequence equality.  Canonical means: every NElem is minimal (the
prefix never ends with ``start - 1``), every cycle is primitive, no
Letter immediately before a Cycle equals that cycle's last letter (such
a letter is absorbed by rotating the cycle right), and pure finite words
carry no blocks.  All construction goes through canonicalizing factories.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Tuple, Union

from .ordinal import OMEGA, OMEGA2, ZERO, Ordinal, OrdinalLike, _coerce

Word = Tuple[int, ...]


class SequenceError(ValueError):
    """Malformed sequence data or an operation outside its domain."""


def _check_word(w: Iterable[int]) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or x < 0:
            raise SequenceError(f"word entries must be naturals, got {x!r}")
    return w


@dataclass(frozen=True, slots=True)
class NElem:
    """Canonical omega-letter: prefix then start, start+1, start+2, ..."""

    prefix: Word
    start: int

    def entry(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.start + (i - len(self.prefix))

    def drop(self, r: int) -> "NElem":
        """The omega-letter minus its first r entries."""
        if r <= len(self.prefix):
            return nelem(self.prefix[r:], self.start)
        return nelem((), self.start + r - len(self.prefix))


def nelem(prefix: Iterable[int], start: int) -> NElem:
    """Canonicalizing NElem factory: strips prefix entries that merely
    restate the arithmetic tail."""
    prefix = _check_word(prefix)
    if start < 0:
        raise SequenceError(f"start must be a natural, got {start}")
    while prefix and start >= 1 and prefix[-1] == start - 1:
        prefix = prefix[:-1]
        start -= 1
    return NElem(prefix, start)


@dataclass(frozen=True, slots=True)
class Letter:
    elem: NElem


@dataclass(frozen=True, slots=True)
class Cycle:
    letters: Tuple[NElem, ...]


Block = Union[Letter, Cycle]


@dataclass(frozen=True, slots=True)
class TransfiniteList:
    blocks: Tuple[Block, ...]
    tail: Word

    def __str__(self) -> str:
        return format_translist(self)


def _primitive_root(letters: Tuple[NElem, ...]) -> Tuple[NElem, ...]:
    n = len(letters)
    for p in range(1, n + 1):
        if n % p == 0 and letters[:p] * (n // p) == letters:
            return letters[:p]
    raise AssertionError("unreachable")


def _canonical(blocks: Iterable[Block], tail: Iterable[int]) -> TransfiniteList:
    out: list[Block] = []
    for blk in blocks:
        if isinstance(blk, Letter):
            out.append(Letter(nelem(blk.elem.prefix, blk.elem.start)))
            continue
        if not blk.letters:
            raise SequenceError("cycle must contain at least one letter")
        letters = _primitive_root(tuple(nelem(e.prefix, e.start) for e in blk.letters))
        out.append(Cycle(letters))
        # absorb any immediately preceding letter equal to the cycle's last
        while len(out) >= 2 and isinstance(out[-2], Letter):
            cyc = out[-1].letters
            if out[-2].elem != cyc[-1]:
                break
            out[-2:] = [Cycle((cyc[-1],) + cyc[:-1])]
    return TransfiniteList(tuple(out), _check_word(tail))


EMPTY = TransfiniteList((), ())


def from_word(w: Iterable[int]) -> TransfiniteList:
    return TransfiniteList((), _check_word(w))


def from_nelem(e: NElem) -> TransfiniteList:
    return TransfiniteList((Letter(e),), ())


def repeat_word(w: Iterable[int], n: int) -> TransfiniteList:
    """Finite power: the word w concatenated n times."""
    if n < 0:
        raise SequenceError(f"repetition count must be a natural, got {n}")
    return from_word(_check_word(w) * n)


def omega_power(letters: Iterable[NElem]) -> TransfiniteList:
    """The letters repeated omega times, canonicalized."""
    return _canonical((Cycle(tuple(letters)),), ())


def _block_extent(blk: Block) -> Ordinal:
    return OMEGA if isinstance(blk, Letter) else OMEGA2


def length(a: TransfiniteList) -> Ordinal:
    total = ZERO
    for blk in a.blocks:
        total = total + _block_extent(blk)
    return total + len(a.tail)


def prepend_word(w: Word, b: TransfiniteList) -> TransfiniteList:
    """concat(from_word(w), b), canonical in and out, without a full
    renormalization pass (this is the hot path behind cons)."""
    if not w:
        return b
    if not b.blocks:
        return TransfiniteList((), w + b.tail)
    head, rest = b.blocks[0], b.blocks[1:]
    if isinstance(head, Letter):
        merged = nelem(w + head.elem.prefix, head.elem.start)
        # merging can enable absorption into an immediately following cycle
        if rest and isinstance(rest[0], Cycle) and rest[0].letters[-1] == merged:
            cyc = rest[0].letters
            return TransfiniteList((Cycle((merged,) + cyc[:-1]),) + rest[1:], b.tail)
        return TransfiniteList((Letter(merged),) + rest, b.tail)
    # unroll one cycle letter so the word can merge into it; the merged
    # letter differs from the rotation's last letter because w is nonempty,
    # so no absorption fires
    first = head.letters[0]
    merged = nelem(w + first.prefix, first.start)
    rot = head.letters[1:] + head.letters[:1]
    return TransfiniteList((Letter(merged), Cycle(rot)) + rest, b.tail)


def concat(a: TransfiniteList, b: TransfiniteList) -> TransfiniteList:
    if not a.blocks:
        return prepend_word(a.tail, b)
    if not b.blocks:
        return TransfiniteList(a.blocks, a.tail + b.tail)
    merged = prepend_word(a.tail, b)
    return _canonical(a.blocks + merged.blocks, merged.tail)


def at(a: TransfiniteList, xi: OrdinalLike) -> int:
    """Entry at position xi; requires xi < length(a)."""
    xi = _coerce(xi)
    for blk in a.blocks:
        ext = _block_extent(blk)
        if xi < ext:
            if isinstance(blk, Letter):
                return blk.elem.entry(xi.as_int())
            q, r = divmod(xi, OMEGA)
            letters = blk.letters
            return letters[q.as_int() % len(letters)].entry(r.as_int())
        xi = xi - ext
    if xi.is_finite and xi.as_int() < len(a.tail):
        return a.tail[xi.as_int()]
    raise SequenceError(f"position {xi} out of range")


def suffix(a: TransfiniteList, beta: OrdinalLike) -> TransfiniteList:
    """Drop the first beta entries; requires beta <= length(a).

    Defining identity: at(suffix(a, b), g) == at(a, b + g).
    """
    beta = _coerce(beta)
    for i, blk in enumerate(a.blocks):
        ext = _block_extent(blk)
        if beta < ext:
            rest = a.blocks[i + 1:]
            if isinstance(blk, Letter):
                r = beta.as_int()
                head: Tuple[Block, ...] = (Letter(blk.elem.drop(r)),) if r else (blk,)
            else:
                q, r = (x.as_int() for x in divmod(beta, OMEGA))
                p = len(blk.letters)
                rot = blk.letters[q % p:] + blk.letters[:q % p]
                if r == 0:
                    head = (Cycle(rot),)
                else:
                    head = (Letter(rot[0].drop(r)), Cycle(rot[1:] + rot[:1]))
            return _canonical(head + rest, a.tail)
        beta = beta - ext
    if beta.is_finite and beta.as_int() <= len(a.tail):
        return TransfiniteList((), a.tail[beta.as_int():])
    raise SequenceError(f"cannot drop {beta} entries, sequence too short")


def prefix(a: TransfiniteList, beta: OrdinalLike) -> TransfiniteList:
    """The first beta entries; requires beta <= length(a)."""
    beta = _coerce(beta)
    out: list[Block] = []
    for blk in a.blocks:
        ext = _block_extent(blk)
        if beta < ext:
            if isinstance(blk, Letter):
                r = beta.as_int()
                return _canonical(out, tuple(blk.elem.entry(i) for i in range(r)))
            q, r = (x.as_int() for x in divmod(beta, OMEGA))
            p = len(blk.letters)
            out.extend(Letter(blk.letters[j % p]) for j in range(q))
            cut = blk.letters[q % p]
            return _canonical(out, tuple(cut.entry(i) for i in range(r)))
        out.append(blk)
        beta = beta - ext
    if beta.is_finite and beta.as_int() <= len(a.tail):
        return _canonical(out, a.tail[:beta.as_int()])
    raise SequenceError(f"cannot take {beta} entries, sequence too short")


def last_decomposition(a: TransfiniteList) -> Optional[Tuple[TransfiniteList, int]]:
    """Split off the last entry, possible exactly when the length is a
    successor; N(k) has limit length w, so it decomposes to None."""
    if not a.tail:
        return None
    return TransfiniteList(a.blocks, a.tail[:-1]), a.tail[-1]


def _nelem_diff(e1: NElem, e2: NElem) -> int:
    bound = max(len(e1.prefix), len(e2.prefix)) + 2
    for i in range(bound):
        if e1.entry(i) != e2.entry(i):
            return i
    raise AssertionError("distinct canonical letters must differ at some entry")


def _cycle_diff(c: Tuple[NElem, ...], d: Tuple[NElem, ...]) -> Tuple[int, int]:
    # Fine and Wilf: distinct primitive cycles differ within |c| + |d| letters
    for j in range(len(c) + len(d)):
        e1, e2 = c[j % len(c)], d[j % len(d)]
        if e1 != e2:
            return j, _nelem_diff(e1, e2)
    raise AssertionError("distinct primitive cycles with equal omega-powers")


def _pop_letter(t: TransfiniteList) -> TransfiniteList:
    head = t.blocks[0]
    if isinstance(head, Letter):
        return TransfiniteList(t.blocks[1:], t.tail)
    rot = head.letters[1:] + head.letters[:1]
    return TransfiniteList((Cycle(rot),) + t.blocks[1:], t.tail)


def first_difference(a: TransfiniteList, b: TransfiniteList) -> Optional[Ordinal]:
    """Least position where a and b differ (an entry mismatch, or the end
    of the one that is a proper prefix); None when equal."""
    offset = ZERO
    while True:
        if a == b:
            return None
        if not a.blocks and not b.blocks:
            wa, wb = a.tail, b.tail
            n = min(len(wa), len(wb))
            for i in range(n):
                if wa[i] != wb[i]:
                    return offset + i
            return offset + n
        if not a.blocks or not b.blocks:
            fin, inf_ = (a, b) if not a.blocks else (b, a)
            w = fin.tail
            for i in range(len(w)):
                if w[i] != at(inf_, i):
                    return offset + i
            return offset + len(w)
        ha, hb = a.blocks[0], b.blocks[0]
        if isinstance(ha, Cycle) and isinstance(hb, Cycle):
            if ha.letters == hb.letters:
                offset = offset + OMEGA2
                a = TransfiniteList(a.blocks[1:], a.tail)
                b = TransfiniteList(b.blocks[1:], b.tail)
                continue
            j, inner = _cycle_diff(ha.letters, hb.letters)
            return offset + OMEGA * j + inner
        ea = ha.elem if isinstance(ha, Letter) else ha.letters[0]
        eb = hb.elem if isinstance(hb, Letter) else hb.letters[0]
        if ea != eb:
            return offset + _nelem_diff(ea, eb)
        offset = offset + OMEGA
        a = _pop_letter(a)
        b = _pop_letter(b)


def common_prefix_split(
    a: TransfiniteList, b: TransfiniteList
) -> Tuple[TransfiniteList, TransfiniteList, TransfiniteList]:
    """(common, rest_a, rest_b) with a == common+rest_a, b == common+rest_b,
    and rest_a, rest_b starting differently (at most one of them empty)."""
    d = first_difference(a, b)
    if d is None:
        return a, EMPTY, EMPTY
    return prefix(a, d), suffix(a, d), suffix(b, d)


def is_word(a: TransfiniteList) -> bool:
    return not a.blocks


def is_single_nelem(a: TransfiniteList) -> bool:
    return len(a.blocks) == 1 and isinstance(a.blocks[0], Letter) and not a.tail


def as_nelem(a: TransfiniteList) -> NElem:
    if not is_single_nelem(a):
        raise SequenceError(f"{a} is not a single omega-letter")
    return a.blocks[0].elem


# -- literal syntax --------------------------------------------------------
#
#   [1,2,3]           finite word
#   N(k)              the letter k, k+1, k+2, ...
#   [w]~N(k)          omega-letter with explicit prefix w
#   rep(e1,...,en)    the letters e1..en repeated omega times
#   a.b               concatenation of segments
#
# The printer emits canonical forms only; the parser accepts any
# combination and canonicalizes via concat.


def _fmt_word(w: Word) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def _fmt_nelem(e: NElem) -> str:
    if e.prefix:
        return f"{_fmt_word(e.prefix)}~N({e.start})"
    return f"N({e.start})"


def format_translist(a: TransfiniteList) -> str:
    segs = []
    for blk in a.blocks:
        if isinstance(blk, Letter):
            segs.append(_fmt_nelem(blk.elem))
        else:
            segs.append("rep(" + ",".join(_fmt_nelem(e) for e in blk.letters) + ")")
    if a.tail or not a.blocks:
        segs.append(_fmt_word(a.tail))
    return ".".join(segs)


class _LitParser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise SequenceError(
                f"expected {ch!r} at position {self.i} in {self.text!r}")
        self.i += 1

    def nat(self) -> int:
        self._skip()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            raise SequenceError(
                f"expected a natural at position {self.i} in {self.text!r}")
        n = int(self.text[self.i:j])
        self.i = j
        return n

    def word(self) -> Word:
        self.expect("[")
        entries = []
        if self.peek() != "]":
            entries.append(self.nat())
            while self.peek() == ",":
                self.i += 1
                entries.append(self.nat())
        self.expect("]")
        return tuple(entries)

    def nelem_lit(self) -> NElem:
        if self.peek() == "[":
            w = self.word()
            self.expect("~")
            return self._bare_nelem(w)
        return self._bare_nelem(())

    def _bare_nelem(self, prefix: Word) -> NElem:
        self._skip()
        if not self.text.startswith("N", self.i):
            raise SequenceError(
                f"expected N(...) at position {self.i} in {self.text!r}")
        self.i += 1
        self.expect("(")
        k = self.nat()
        self.expect(")")
        return nelem(prefix, k)

    def segment(self) -> TransfiniteList:
        self._skip()
        if self.text.startswith("rep(", self.i):
            self.i += 3
            self.expect("(")
            letters = [self.nelem_lit()]
            while self.peek() == ",":
                self.i += 1
                letters.append(self.nelem_lit())
            self.expect(")")
            return omega_power(letters)
        if self.peek() == "[":
            save = self.i
            w = self.word()
            if self.peek() == "~":
                self.i = save
                return from_nelem(self.nelem_lit())
            return from_word(w)
        if self.text.startswith("N", self.i):
            return from_nelem(self.nelem_lit())
        raise SequenceError(
            f"expected a sequence literal at position {self.i} in {self.text!r}")

    def parse(self) -> TransfiniteList:
        result = self.segment()
        while self.peek() == ".":
            self.i += 1
            result = concat(result, self.segment())
        self._skip()
        if self.i != len(self.text):
            raise SequenceError(
                f"trailing input at position {self.i} in {self.text!r}")
        return result


def parse_translist(text: str) -> TransfiniteList:
    return _LitParser(text).parse()


N0 = from_nelem(nelem((), 0))
