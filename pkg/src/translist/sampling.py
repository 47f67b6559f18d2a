"""Seeded random generators for domain elements, terms, and formulas.

Everything here is driven by an explicit random.Random instance so that
reports quoting a seed can be replayed byte for byte.
"""

from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple, Union

from .logic import (
    ELEM,
    Const,
    Eq,
    Formula,
    Implies,
    Not,
    Or,
    And,
    Term,
    Var,
    cons,
    append,
    NIL,
)
from .sequences import (
    EMPTY,
    Cycle,
    Letter,
    NElem,
    TransfiniteList,
    Word,
    from_nelem,
    from_word,
    nelem,
)

Value = Union[int, TransfiniteList]


def random_word(rng: random.Random, max_len: int = 5, max_entry: int = 8) -> Word:
    n = rng.randint(0, max_len)
    return tuple(rng.randint(0, max_entry) for _ in range(n))


def random_nelem(rng: random.Random, max_prefix: int = 3, max_start: int = 8,
                 max_entry: int = 8) -> NElem:
    prefix = random_word(rng, max_prefix, max_entry)
    return nelem(prefix, rng.randint(0, max_start))


def random_m1_value(rng: random.Random, max_len: int = 5, max_entry: int = 8,
                    max_start: int = 8) -> TransfiniteList:
    if rng.random() < 0.5:
        return from_word(random_word(rng, max_len, max_entry))
    return from_nelem(random_nelem(rng, 3, max_start, max_entry))


def random_m2_value(rng: random.Random, max_len: int = 5, max_entry: int = 8,
                    max_start: int = 8) -> TransfiniteList:
    roll = rng.random()
    if roll < 0.3:
        return from_word(random_word(rng, max_len, max_entry))
    if roll < 0.5:
        return from_nelem(random_nelem(rng, 3, max_start, max_entry))
    # a run of letter and cycle blocks followed by a finite tail
    out = from_word(random_word(rng, 2, max_entry)) if rng.random() < 0.5 else EMPTY
    for _ in range(rng.randint(1, 3)):
        if rng.random() < 0.5:
            e = random_nelem(rng, 2, max_start, max_entry)
            out = concat_block(Letter(e), out)
        else:
            k = rng.randint(1, 2)
            letters = tuple(random_nelem(rng, 1, max_start, max_entry)
                            for _ in range(k))
            out = concat_block(Cycle(letters), out)
    return out


def concat_block(block, rest: TransfiniteList) -> TransfiniteList:
    # route through concat so canonicalization rules apply
    from .sequences import concat, _canonical
    if isinstance(block, Cycle):
        root = _canonical((block,), ())
    else:
        root = TransfiniteList((block,), ())
    return concat(root, rest)


def random_value(kind: str, sort: str, rng: random.Random, max_len: int = 5,
                 max_entry: int = 8, max_start: int = 8) -> Value:
    if sort == ELEM:
        return rng.randint(0, max_entry)
    if kind == "m1":
        return random_m1_value(rng, max_len, max_entry, max_start)
    return random_m2_value(rng, max_len, max_entry, max_start)


def random_assignment(kind: str, variables: Sequence[Var], rng: random.Random,
                      max_len: int = 5, max_entry: int = 8,
                      max_start: int = 8):
    return {v: random_value(kind, v.sort, rng, max_len, max_entry, max_start)
            for v in variables}


# --- random syntax ---------------------------------------------------------

def random_cons_chain(rng: random.Random, x: Var, max_len: int = 4,
                      max_entry: int = 8) -> Term:
    t: Term = x
    for _ in range(rng.randint(0, max_len)):
        t = cons(Const(rng.randint(0, max_entry)), t)
    return t


def random_m1_equation(rng: random.Random, x: Var,
                       constants: Sequence[TransfiniteList],
                       max_entry: int = 8) -> Eq:
    """An equation between cons chains over x and list constants."""
    def side() -> Term:
        if rng.random() < 0.5:
            return random_cons_chain(rng, x, 4, max_entry)
        return Const(rng.choice(list(constants)))
    return Eq(side(), side())


def random_l1_term(rng: random.Random, x: Var,
                   constants: Sequence[TransfiniteList],
                   depth: int = 3, max_entry: int = 8) -> Term:
    if depth <= 0 or rng.random() < 0.35:
        roll = rng.random()
        if roll < 0.45:
            return x
        if roll < 0.65:
            return NIL
        return Const(rng.choice(list(constants)))
    if rng.random() < 0.5:
        head = Const(rng.randint(0, max_entry))
        return cons(head, random_l1_term(rng, x, constants, depth - 1, max_entry))
    return append(random_l1_term(rng, x, constants, depth - 1, max_entry),
                  random_l1_term(rng, x, constants, depth - 1, max_entry))


def random_m2_equation(rng: random.Random, x: Var,
                       constants: Sequence[TransfiniteList],
                       depth: int = 3, max_entry: int = 8) -> Eq:
    return Eq(random_l1_term(rng, x, constants, depth, max_entry),
              random_l1_term(rng, x, constants, depth, max_entry))


def random_open_formula(rng: random.Random, x: Var,
                        constants: Sequence[TransfiniteList],
                        max_atoms: int = 3, depth: int = 3,
                        max_entry: int = 8) -> Formula:
    """A quantifier-free append-signature formula with x as its only variable."""
    n_atoms = rng.randint(1, max_atoms)
    pool: List[Formula] = [
        random_m2_equation(rng, x, constants, rng.randint(1, depth), max_entry)
        for _ in range(n_atoms)
    ]
    while len(pool) > 1:
        a = pool.pop(rng.randrange(len(pool)))
        b = pool.pop(rng.randrange(len(pool)))
        pool.append(rng.choice([And, Or, Implies])(a, b))
    phi = pool[0]
    if rng.random() < 0.3:
        phi = Not(phi)
    return phi
