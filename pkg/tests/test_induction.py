"""Induction instances: builders, the universal checker, instance verdicts
with descent rescue, and the three counterexample certificates."""

import pytest

from translist.induction import (
    CERTIFICATES,
    InductionError,
    InductionInstance,
    build_big_step,
    build_double,
    build_multivariate,
    build_one_step,
    check_instance,
    check_universal,
    cons_chain,
    enumerate_domain,
    formula_alphabet,
    iter_domain,
    replicate_big_step_failure,
    replicate_right_cancellation_failure,
    replicate_right_decomposition_failure,
    _descent_rescue,
)
from translist.logic import (
    NIL,
    SIG_L1,
    SIG_LA,
    Const,
    Var,
    cons,
    format_formula,
    parse_formula,
)
from translist.models import VAR_X, VAR_Y, M1, M2, ModelError
from translist.sequences import (
    EMPTY,
    concat,
    from_nelem,
    from_word,
    nelem,
    omega_power,
)

A_X = parse_formula("A(X)", SIG_LA)
N0_REP = omega_power((nelem((), 0),))


def N(k):
    return from_nelem(nelem((), k))


class TestBuilders:
    def test_big_step_shape(self):
        inst = build_big_step(A_X, 2)
        assert inst.kind == "big-step"
        assert inst.strides == (2,)
        assert inst.list_vars == (VAR_X,)
        assert inst.elem_vars == ((Var("x1", "i"), Var("x2", "i")),)
        assert inst.n_elem_vars == 2
        named = dict(inst.premises)
        assert list(named) == ["base-1", "base-2", "step"]
        assert format_formula(named["base-1"]) == "A(nil)"
        assert format_formula(named["base-2"]) == "forall x1:i. A(cons(x1, nil))"
        assert format_formula(named["step"]) == (
            "forall X:list. forall x1:i. forall x2:i. "
            "A(X) -> A(cons(x1, cons(x2, X)))"
        )
        assert format_formula(inst.conclusion) == "forall X:list. A(X)"

    def test_one_step_is_big_step_one(self):
        one = build_one_step(A_X)
        big = build_big_step(A_X, 1)
        assert one.kind == "one-step"
        assert one.premises == big.premises
        assert one.conclusion == big.conclusion

    def test_big_step_is_multivariate_single(self):
        big = build_big_step(A_X, 2)
        multi = build_multivariate(A_X, [VAR_X], [2])
        assert [f for _, f in big.premises] == [f for _, f in multi.premises]
        assert big.conclusion == multi.conclusion
        assert [n for n, _ in multi.premises] == ["base-1-1", "base-1-2", "step"]

    def test_double_is_multivariate_pair(self):
        phi = parse_formula("X ++ Y = Y ++ X", SIG_L1)
        dbl = build_double(phi)
        multi = build_multivariate(phi, [VAR_X, VAR_Y], [1, 1])
        assert [f for _, f in dbl.premises] == [f for _, f in multi.premises]
        assert [n for n, _ in dbl.premises] == ["base-X", "base-Y", "step"]
        named = dict(dbl.premises)
        assert format_formula(named["base-X"]) == (
            "forall Y:list. nil ++ Y = Y ++ nil"
        )
        assert format_formula(named["step"]) == (
            "forall X:list. forall Y:list. forall x1:i. forall x2:i. "
            "X ++ Y = Y ++ X -> cons(x1, X) ++ cons(x2, Y) = cons(x2, Y) ++ cons(x1, X)"
        )

    def test_fresh_heads_avoid_used_names(self):
        phi = parse_formula("cons(x1, X) = cons(x1, X)", SIG_LA)
        inst = build_big_step(phi, 2)
        assert inst.elem_vars == ((Var("x2", "i"), Var("x3", "i")),)

    def test_builder_errors(self):
        with pytest.raises(InductionError):
            build_multivariate(A_X, [], [])
        with pytest.raises(InductionError):
            build_multivariate(A_X, [VAR_X], [1, 2])
        with pytest.raises(InductionError):
            build_multivariate(A_X, [VAR_X, VAR_X], [1, 1])
        with pytest.raises(InductionError):
            build_multivariate(A_X, [Var("x", "i")], [1])
        with pytest.raises(InductionError):
            build_multivariate(A_X, [VAR_X], [0])
        with pytest.raises(InductionError):
            build_big_step(parse_formula("forall X. A(X)", SIG_LA), 2)

    def test_cons_chain(self):
        xs = (Var("x1", "i"), Var("x2", "i"))
        assert cons_chain(xs, NIL) == cons(xs[0], cons(xs[1], NIL))
        assert cons_chain((), VAR_X) == VAR_X

    def test_to_dict(self):
        d = build_big_step(A_X, 2).to_dict()
        assert d["kind"] == "big-step"
        assert d["strides"] == [2]
        assert d["conclusion"] == "forall X:list. A(X)"
        assert [n for n, _ in d["premises"]] == ["base-1", "base-2", "step"]


class TestDomainEnumeration:
    def test_smallest_pool(self):
        assert enumerate_domain(M1(1), (), 0) == [EMPTY, N(0)]

    def test_bound_one_prefix(self):
        # an empty alphabet still contributes one fresh symbol
        got = enumerate_domain(M1(1), (), 1)
        assert got == [
            EMPTY,
            from_word((0,)),
            N(0),
            N(1),
            from_nelem(nelem((0,), 0)),
        ]

    def test_m2_extends_m1(self):
        m1_part = enumerate_domain(M1(1), (), 1)
        m2_part = enumerate_domain(M2(), (), 1)
        assert m2_part[: len(m1_part)] == m1_part
        assert m2_part[5] == N0_REP
        assert concat(N0_REP, from_word((0,))) in m2_part
        assert concat(N(1), N0_REP) in m2_part

    def test_no_duplicates(self):
        got = enumerate_domain(M2(), (3,), 2)
        assert len(got) == len(set(got))

    def test_alphabet_feeds_entries(self):
        got = enumerate_domain(M1(1), (7,), 1)
        assert from_word((7,)) in got

    def test_limit(self):
        assert enumerate_domain(M2(), (), 3, limit=4) == list(
            iter_domain(M2(), (), 3)
        )[:4]

    def test_negative_bound(self):
        with pytest.raises(InductionError):
            enumerate_domain(M1(1), (), -1)

    def test_formula_alphabet(self):
        phi = parse_formula("cons(7, X) = N(2) & X != [3,1]", SIG_L1)
        assert formula_alphabet(phi) == [1, 2, 3, 7]
        assert formula_alphabet(parse_formula("X = X", SIG_L1)) == []


class TestCheckUniversal:
    def test_trivially_true(self):
        verdict = check_universal(M2(), parse_formula("forall X. X = X", SIG_L1))
        assert not verdict.falsified
        assert verdict.evaluations > 0

    def test_marking_fails_on_blocked_progression(self):
        verdict = check_universal(M1(2), parse_formula("forall X. A(X)", SIG_LA))
        assert verdict.falsified
        assert verdict.witness == {"X": "N(0)"}
        assert verdict.phase == "systematic"

    def test_free_variables_are_universal(self):
        verdict = check_universal(M1(2), A_X)
        assert verdict.falsified and verdict.witness == {"X": "N(0)"}

    def test_right_cancellation_witness(self):
        phi = parse_formula("forall Y. forall X. (Y ++ X = X -> Y = nil)", SIG_L1)
        verdict = check_universal(M2(), phi)
        assert verdict.falsified
        assert verdict.witness == {"Y": "N(0)", "X": "rep(N(0))"}
        assert verdict.phase == "systematic"

    def test_injectivity_survives(self):
        phi = parse_formula(
            "cons(x, X) = cons(y, Y) -> x = y & X = Y", SIG_L1
        )
        verdict = check_universal(M2(), phi, budget=800)
        assert not verdict.falsified

    def test_acyclicity_exhaustive(self):
        phi = parse_formula("X != cons(0, X)", SIG_L1)
        verdict = check_universal(M2(), phi, alphabet_bound=2, exhaustive=True)
        assert not verdict.falsified
        assert verdict.exhaustive

    def test_extra_lists_reach_distant_witnesses(self):
        phi = parse_formula("forall X. X != N(2)", SIG_L1)
        starved = check_universal(M2(), phi, budget=1)
        assert not starved.falsified
        hinted = check_universal(M2(), phi, budget=1, extra_lists=(N(2),))
        assert hinted.falsified and hinted.witness == {"X": "N(2)"}

    def test_random_phase_reaches_bound_entries(self):
        phi = parse_formula("forall X. X != N(2)", SIG_L1)
        verdict = check_universal(M2(), phi, budget=3000, seed=4)
        assert verdict.falsified
        assert verdict.searched_bound >= 3

    def test_no_variables(self):
        verdict = check_universal(M2(), parse_formula("nil = nil", SIG_L1))
        assert not verdict.falsified and verdict.exhaustive

    def test_rejects_inner_quantifier(self):
        phi = parse_formula("forall X. exists Y. X = Y", SIG_L1)
        with pytest.raises(ModelError):
            check_universal(M2(), phi)

    def test_rejects_wrong_signature(self):
        with pytest.raises(ModelError):
            check_universal(M2(), A_X)


class TestCheckInstance:
    def test_big_step_two_fails_in_period_two(self):
        report = check_instance(M1(2), build_big_step(A_X, 2))
        assert report.instance_falsified
        assert report.conclusion.verdict.witness == {"X": "N(0)"}
        assert not any(p.verdict.falsified for p in report.premises)

    def test_shorter_steps_are_refuted_in_period_three(self):
        M = M1(3)
        for j in (1, 2):
            report = check_instance(M, build_big_step(A_X, j))
            assert not report.instance_falsified, j
            step = dict((p.name, p) for p in report.premises)["step"]
            assert step.verdict.falsified
        report = check_instance(M, build_big_step(A_X, 3))
        assert report.instance_falsified

    def test_period_one_refutes_one_step(self):
        report = check_instance(M1(1), build_one_step(A_X))
        assert report.instance_falsified
        assert report.conclusion.verdict.witness == {"X": "N(0)"}

    def test_descent_rescue_pins_hidden_step_witness(self):
        deep = from_word((9, 9, 9, 9))
        phi = parse_formula("X != [9,9,9,9]", SIG_L1)
        report = check_instance(
            M2(), build_one_step(phi), budget=400, extra_lists=(deep,)
        )
        assert not report.instance_falsified
        assert "descent" in report.note or any(
            p.verdict.phase == "descent" for p in report.premises
        )
        step = dict((p.name, p) for p in report.premises)["step"]
        assert step.verdict.falsified
        assert step.verdict.witness == {"X": "[9,9,9]", "x1": "9"}

    def test_report_to_dict(self):
        report = check_instance(M1(2), build_big_step(A_X, 2), budget=300)
        d = report.to_dict()
        assert d["model"] == "m1:2"
        assert d["instance_falsified"] is True
        assert [p["name"] for p in d["premises"]] == ["base-1", "base-2", "step"]


class TestDescentRescue:
    def test_step_branch(self):
        inst = build_big_step(parse_formula("X != [4,7]", SIG_L1), 2)
        got = _descent_rescue(M2(), inst, {VAR_X: from_word((4, 7))})
        assert got is not None
        name, assign = got
        assert name == "step"
        assert assign[VAR_X] == EMPTY
        assert assign[Var("x1", "i")] == 4
        assert assign[Var("x2", "i")] == 7

    def test_base_branch(self):
        inst = build_big_step(parse_formula("X != [5]", SIG_L1), 2)
        got = _descent_rescue(M2(), inst, {VAR_X: from_word((5,))})
        assert got is not None
        name, assign = got
        assert name == "base-2"
        assert assign[Var("x1", "i")] == 5

    def test_no_rescue_for_genuine_countermodel(self):
        inst = build_big_step(A_X, 2)
        assert _descent_rescue(M1(2), inst, {VAR_X: N(0)}) is None

    def test_witness_not_refuting_gives_none(self):
        inst = build_big_step(parse_formula("X != [5]", SIG_L1), 2)
        assert _descent_rescue(M2(), inst, {VAR_X: from_word((3,))}) is None


class TestCertificates:
    def test_big_step_certificate(self):
        cert = replicate_big_step_failure(2, samples=400, seed=3)
        assert cert.valid
        assert cert.model == "m1:2"
        assert cert.witness == {"X": "N(0)"}
        assert len(cert.claims) == 4
        d = cert.to_dict()
        assert d["valid"] is True and d["name"] == "big-step"

    def test_big_step_rejects_small_m(self):
        for bad in (1, 0, -3):
            with pytest.raises(InductionError):
                replicate_big_step_failure(bad)

    def test_right_cancellation_certificate(self):
        cert = replicate_right_cancellation_failure(samples=300, seed=2)
        assert cert.valid
        assert cert.witness == {"Y": "N(0)", "X": "rep(N(0))"}

    def test_right_decomposition_certificate(self):
        cert = replicate_right_decomposition_failure(samples=300, seed=2)
        assert cert.valid
        assert cert.witness == {"X": "N(0)"}

    def test_registry(self):
        assert set(CERTIFICATES) == {
            "big-step",
            "right-cancellation",
            "right-decomposition",
        }
        assert CERTIFICATES["big-step"] is replicate_big_step_failure
