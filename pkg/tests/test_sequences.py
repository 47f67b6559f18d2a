"""Transfinite sequences: canonical forms, positionwise oracles, and the
algebra of concatenation, cuts, and first differences."""

import random
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from translist.ordinal import OMEGA, OMEGA2, ONE, ZERO, Ordinal
from translist.sequences import (
    EMPTY,
    N0,
    Cycle,
    Letter,
    NElem,
    SequenceError,
    TransfiniteList,
    as_nelem,
    at,
    common_prefix_split,
    concat,
    first_difference,
    format_translist,
    from_nelem,
    from_word,
    is_single_nelem,
    is_word,
    last_decomposition,
    length,
    nelem,
    omega_power,
    parse_translist,
    prefix,
    prepend_word,
    repeat_word,
    suffix,
)


def N(k: int) -> TransfiniteList:
    return from_nelem(nelem((), k))


N0_REP = omega_power((nelem((), 0),))


def rand_nelem(rng: random.Random) -> NElem:
    return nelem(
        tuple(rng.randrange(6) for _ in range(rng.randrange(3))), rng.randrange(6)
    )


def rand_translist(rng: random.Random) -> TransfiniteList:
    out = EMPTY
    for _ in range(rng.randrange(3)):
        if rng.random() < 0.4:
            out = concat(out, from_nelem(rand_nelem(rng)))
        else:
            letters = tuple(rand_nelem(rng) for _ in range(rng.randrange(1, 3)))
            out = concat(out, omega_power(letters))
    tail = tuple(rng.randrange(6) for _ in range(rng.randrange(4)))
    return concat(out, from_word(tail))


def positions_below(rng: random.Random, bound: Ordinal, n: int) -> list:
    """Sampled ordinals strictly below bound (bound has shape w^2*a+w*b+c)."""
    out = []
    for _ in range(n * 20):
        if len(out) >= n:
            break
        xi = OMEGA2 * rng.randrange(4) + OMEGA * rng.randrange(4) + rng.randrange(9)
        if xi < bound:
            out.append(xi)
    return out


def entry_or_none(a, xi):
    try:
        return at(a, xi)
    except SequenceError:
        return None


class TestCanonicalForms:
    def test_nelem_strips_redundant_prefix(self):
        assert nelem((0, 1, 2), 3) == nelem((), 0)
        assert nelem((5, 0), 1) == NElem((5,), 0)
        assert nelem((7,), 3) == NElem((7,), 3)

    def test_nelem_rejects_non_naturals(self):
        with pytest.raises(SequenceError):
            nelem((-1,), 0)
        with pytest.raises(SequenceError):
            nelem((), -2)

    def test_omega_power_primitive_root(self):
        e = nelem((), 0)
        assert omega_power((e, e)) == omega_power((e,))
        f = nelem((), 1)
        assert omega_power((e, f, e, f)) == omega_power((e, f))
        assert omega_power((e, f)) != omega_power((f, e))

    def test_letter_absorbed_into_following_cycle(self):
        # N(0) followed by N(0) repeated forever is just the repetition
        assert concat(N(0), N0_REP) == N0_REP
        # absorption rotates the cycle: N(1).rep(N(2),N(1)) = rep(N(1),N(2))
        e1, e2 = nelem((), 1), nelem((), 2)
        assert concat(N(1), omega_power((e2, e1))) == omega_power((e1, e2))

    def test_word_merges_into_leading_letter(self):
        assert prepend_word((0, 1), N(2)) == N(0)
        assert prepend_word((9,), N(4)) == from_nelem(nelem((9,), 4))

    def test_word_prepended_to_cycle_unrolls_one_letter(self):
        got = prepend_word((5,), N0_REP)
        assert got == parse_translist("[5]~N(0).rep(N(0))")
        assert got.blocks == (Letter(nelem((5,), 0)), Cycle((nelem((), 0),)))

    def test_prepend_word_agrees_with_concat(self):
        rng = random.Random(71)
        for _ in range(300):
            w = tuple(rng.randrange(6) for _ in range(rng.randrange(4)))
            b = rand_translist(rng)
            assert prepend_word(w, b) == concat(from_word(w), b)

    def test_cycle_requires_letters(self):
        with pytest.raises(SequenceError):
            omega_power(())


class TestFrozenValues:
    def test_lengths(self):
        assert length(EMPTY) == ZERO
        assert length(from_word((1, 2, 3))) == Ordinal.from_int(3)
        assert length(N(0)) == OMEGA
        assert length(N0_REP) == OMEGA2
        assert length(concat(N0_REP, from_word((5,)))) == OMEGA2 + 1
        assert length(concat(N(0), N(1))) == OMEGA * 2

    def test_entries(self):
        assert at(from_word((3, 1, 4)), 2) == 4
        assert at(N(0), 7) == 7
        assert at(from_nelem(nelem((9,), 4)), 0) == 9
        assert at(from_nelem(nelem((9,), 4)), 3) == 6
        assert at(N0_REP, OMEGA * 3 + 2) == 2
        assert at(concat(N(0), from_word((8,))), OMEGA) == 8

    def test_entry_out_of_range(self):
        with pytest.raises(SequenceError):
            at(from_word((1, 2)), 2)
        with pytest.raises(SequenceError):
            at(N(0), OMEGA)

    def test_suffix(self):
        assert suffix(N(0), 3) == N(3)
        assert suffix(N0_REP, OMEGA) == N0_REP
        assert suffix(N0_REP, OMEGA2) == EMPTY
        assert suffix(from_word((1, 2, 3)), 1) == from_word((2, 3))
        with pytest.raises(SequenceError):
            suffix(from_word((1,)), 2)

    def test_prefix(self):
        assert prefix(N(0), 3) == from_word((0, 1, 2))
        assert prefix(N0_REP, OMEGA) == N(0)
        assert prefix(N0_REP, OMEGA * 2 + 1) == concat(N(0), concat(N(0), from_word((0,))))
        with pytest.raises(SequenceError):
            prefix(from_word((1,)), OMEGA)

    def test_last_decomposition(self):
        assert last_decomposition(EMPTY) is None
        assert last_decomposition(N(0)) is None
        assert last_decomposition(N0_REP) is None
        assert last_decomposition(from_word((1, 2, 3))) == (from_word((1, 2)), 3)
        assert last_decomposition(concat(N(0), from_word((9,)))) == (N(0), 9)

    def test_first_difference(self):
        assert first_difference(N(0), N(0)) is None
        assert first_difference(N0_REP, concat(N(0), N0_REP)) is None
        assert first_difference(from_word((0, 1, 2)), from_word((0, 7))) == ONE
        assert first_difference(N(0), N(1)) == ZERO
        # a proper prefix differs first at its own end
        assert first_difference(from_word((0, 1)), N(0)) == Ordinal.from_int(2)
        a = concat(N(0), from_word((7,)))
        b = concat(N(0), from_word((8,)))
        assert first_difference(a, b) == OMEGA
        two_cycle = omega_power((nelem((), 0), nelem((), 1)))
        assert first_difference(two_cycle, N0_REP) == OMEGA

    def test_common_prefix_split(self):
        common, ra, rb = common_prefix_split(from_word((0, 1, 5)), N(0))
        assert common == from_word((0, 1))
        assert ra == from_word((5,))
        assert rb == N(2)
        common, ra, rb = common_prefix_split(N0_REP, N0_REP)
        assert (common, ra, rb) == (N0_REP, EMPTY, EMPTY)

    def test_class_predicates(self):
        assert is_word(EMPTY) and is_word(from_word((1,)))
        assert not is_word(N(0))
        assert is_single_nelem(N(0)) and not is_single_nelem(N0_REP)
        assert as_nelem(from_nelem(nelem((4,), 0))) == nelem((4,), 0)
        with pytest.raises(SequenceError):
            as_nelem(from_word((1,)))

    def test_repeat_word(self):
        assert repeat_word((1, 2), 3) == from_word((1, 2, 1, 2, 1, 2))
        assert repeat_word((1, 2), 0) == EMPTY
        with pytest.raises(SequenceError):
            repeat_word((1,), -1)


class TestPointwiseOracle:
    """Structural operations checked against nothing but at() and length()."""

    def test_concat_positions(self):
        rng = random.Random(72)
        for _ in range(250):
            a, b = rand_translist(rng), rand_translist(rng)
            c = concat(a, b)
            la = length(a)
            assert length(c) == la + length(b)
            for xi in positions_below(rng, la, 4) if not la.is_zero else []:
                assert at(c, xi) == at(a, xi)
            for eta in positions_below(rng, length(b), 4):
                assert at(c, la + eta) == at(b, eta)

    def test_cut_positions(self):
        rng = random.Random(73)
        for _ in range(250):
            a = rand_translist(rng)
            la = length(a)
            if la.is_zero:
                continue
            for beta in positions_below(rng, la, 3):
                tail_part = suffix(a, beta)
                assert length(tail_part) == la - beta
                for g in positions_below(rng, length(tail_part), 3):
                    assert at(tail_part, g) == at(a, beta + g)
                head_part = prefix(a, beta)
                assert length(head_part) == beta
                for g in positions_below(rng, beta, 3):
                    assert at(head_part, g) == at(a, g)
                assert concat(head_part, tail_part) == a

    def test_first_difference_positions(self):
        rng = random.Random(74)
        for _ in range(400):
            a, b = rand_translist(rng), rand_translist(rng)
            d = first_difference(a, b)
            if d is None:
                assert a == b
                continue
            assert a != b
            assert entry_or_none(a, d) != entry_or_none(b, d)
            for xi in positions_below(rng, d, 4):
                assert at(a, xi) == at(b, xi)


words = st.lists(st.integers(0, 5), max_size=4).map(tuple)
nelems = st.builds(nelem, words, st.integers(0, 5))
segments = st.one_of(
    words.map(from_word),
    nelems.map(from_nelem),
    st.lists(nelems, min_size=1, max_size=2).map(lambda ls: omega_power(tuple(ls))),
)
translists = st.lists(segments, max_size=3).map(
    lambda xs: reduce(concat, xs, EMPTY)
)


class TestLaws:
    @given(translists, translists, translists)
    def test_concat_associative(self, a, b, c):
        assert concat(concat(a, b), c) == concat(a, concat(b, c))

    @given(translists, translists)
    def test_length_additive(self, a, b):
        assert length(concat(a, b)) == length(a) + length(b)

    @given(translists)
    def test_empty_is_identity(self, a):
        assert concat(EMPTY, a) == a
        assert concat(a, EMPTY) == a

    @given(translists, translists)
    def test_suffix_inverts_concat(self, a, b):
        # constructive left cancellation: a+b determines b given length(a)
        assert suffix(concat(a, b), length(a)) == b

    @given(translists, translists)
    def test_prefix_recovers_left_operand(self, a, b):
        assert prefix(concat(a, b), length(a)) == a

    @given(translists, translists, translists)
    def test_left_cancellation(self, a, b, c):
        assert (concat(a, b) == concat(a, c)) == (b == c)

    @given(translists, translists)
    def test_split_residues_start_differently(self, a, b):
        common, ra, rb = common_prefix_split(a, b)
        assert concat(common, ra) == a
        assert concat(common, rb) == b
        if not (ra == EMPTY and rb == EMPTY):
            assert entry_or_none(ra, 0) != entry_or_none(rb, 0)

    @given(translists)
    def test_format_parse_round_trip(self, a):
        assert parse_translist(format_translist(a)) == a


class TestParser:
    def test_frozen_formats(self):
        assert format_translist(EMPTY) == "[]"
        assert format_translist(from_word((1, 2))) == "[1,2]"
        assert format_translist(N(0)) == "N(0)"
        assert format_translist(from_nelem(nelem((9,), 4))) == "[9]~N(4)"
        assert format_translist(N0_REP) == "rep(N(0))"
        assert format_translist(concat(N0_REP, from_word((5,)))) == "rep(N(0)).[5]"

    def test_parse_canonicalizes(self):
        assert parse_translist("[0,1].N(2)") == N(0)
        assert parse_translist("N(0).rep(N(0))") == N0_REP
        assert parse_translist(" rep( N(1) , N(2) ) . [4] ") == concat(
            omega_power((nelem((), 1), nelem((), 2))), from_word((4,))
        )

    @pytest.mark.parametrize(
        "text",
        ["", "N(", "[1,", "rep()", "N(0)x", "[1]~", "foo", "N(0)..N(1)"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(SequenceError):
            parse_translist(text)
