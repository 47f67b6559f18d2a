"""Benchmark emission: golden files byte for byte, plus structural checks
on the generated problem text."""

import pathlib

import pytest

from translist.benchmarks import (
    FORMATS,
    emit_benchmarks,
    emit_smtlib2,
    emit_tptp,
    write_benchmarks,
)
from translist.induction import InductionError

GOLDEN = pathlib.Path(__file__).parent / "golden"


class TestGolden:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_smtlib2_matches_golden(self, m):
        want = (GOLDEN / f"big_step_{m}.smt2").read_bytes()
        assert emit_smtlib2(m).encode() == want

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_tptp_matches_golden(self, m):
        want = (GOLDEN / f"big_step_{m}.p").read_bytes()
        assert emit_tptp(m).encode() == want


class TestStructure:
    def test_base_count_tracks_m(self):
        for m in (1, 2, 4, 7):
            smt = emit_smtlib2(m)
            assert smt.count("(assert ") == m + 2  # bases, step, negated goal
            tptp = emit_tptp(m)
            assert tptp.count(", axiom,") == m + 3  # bases, step, two freeness

    def test_base_one_has_no_empty_binder(self):
        assert "(assert (A nil))" in emit_smtlib2(1)
        assert "forall ()" not in emit_smtlib2(1)
        assert "![]" not in emit_tptp(1)

    def test_step_chain_depth(self):
        smt = emit_smtlib2(3)
        assert "(A (cons x1 (cons x2 (cons x3 X))))" in smt
        assert "(not (forall ((X Lst)) (A X)))" in smt
        tptp = emit_tptp(3)
        assert "a(cons(X1,cons(X2,cons(X3,L))))" in tptp
        assert "tff(goal, conjecture, ![L: lst]: a(L))." in tptp

    def test_balanced_parens(self):
        for m in (1, 2, 5):
            text = emit_smtlib2(m)
            assert text.count("(") == text.count(")")

    def test_tptp_freeness_axioms(self):
        tptp = emit_tptp(2)
        assert "nil != cons(X,L)" in tptp
        assert "cons(X,L) = cons(Y,M) => (X = Y & L = M)" in tptp


class TestEmitApi:
    def test_file_names(self):
        files = emit_benchmarks("smtlib2", [2, 1])
        assert set(files) == {"big_step_1.smt2", "big_step_2.smt2"}
        files = emit_benchmarks("tptp", [3])
        assert set(files) == {"big_step_3.p"}

    def test_unknown_format(self):
        with pytest.raises(InductionError):
            emit_benchmarks("dimacs", [1])
        assert FORMATS == ("smtlib2", "tptp")

    def test_bad_m(self):
        with pytest.raises(InductionError):
            emit_smtlib2(0)
        with pytest.raises(InductionError):
            emit_tptp(-1)

    def test_write_benchmarks(self, tmp_path):
        paths = write_benchmarks("smtlib2", [2, 1], str(tmp_path))
        assert [pathlib.Path(p).name for p in paths] == [
            "big_step_1.smt2",
            "big_step_2.smt2",
        ]
        for p in paths:
            m = int(pathlib.Path(p).stem.rsplit("_", 1)[1])
            assert pathlib.Path(p).read_text() == emit_smtlib2(m)
