from fractions import Fraction

import numpy as np
import pytest

from qrough import measures, overlaps, states
from qrough.errors import QroughError


class TestHyp2F1Terminating:
    def test_a_zero_is_one(self):
        rng = np.random.default_rng(31)
        for _ in range(100):
            b, c, x = rng.uniform(-5, 5, 3)
            if abs(c) < 1e-6:
                c += 1.0
            assert overlaps.hyp2f1_terminating(0, b, c, x) == 1

    def test_two_term_series(self):
        assert overlaps.hyp2f1_terminating(
            -1, Fraction(1), Fraction(1), Fraction(4, 3)
        ) == Fraction(-1, 3)
        assert overlaps.hyp2f1_terminating(
            -1, Fraction(2), Fraction(1), Fraction(4, 3)
        ) == Fraction(-5, 3)

    def test_non_terminating_rejected(self):
        with pytest.raises(QroughError):
            overlaps.hyp2f1_terminating(2, 1.0, 1.0, 0.5)

    def test_pole_rejected(self):
        with pytest.raises(QroughError):
            overlaps.hyp2f1_terminating(-2, Fraction(1), Fraction(-1), Fraction(1, 2))


class TestOverlap:
    def test_pipi_is_kronecker(self):
        for n in (0, 1):
            for m in (0, 1):
                for np_ in (0, 1):
                    for mp_ in (0, 1):
                        val = overlaps.overlap("pipi", n, m, np_, mp_)
                        assert val == Fraction(int(n == np_ and m == mp_))

    def test_psipsi_vacuum(self):
        assert overlaps.overlap("psipsi", 0, 0, 0, 0) == Fraction(1, 2)

    def test_pipsi_vacuum(self):
        assert overlaps.overlap("pipsi", 0, 0, 0, 0) == Fraction(2, 3)

    def test_selection_rule(self):
        assert overlaps.overlap("psipsi", 0, 1, 1, 0) == 0
        assert overlaps.overlap("pipsi", 0, 1, 1, 0) == 0

    def test_pipsi_excited(self):
        assert overlaps.overlap("pipsi", 1, 1, 1, 1) == Fraction(10, 27)

    def test_table_shape_and_finiteness(self):
        table = overlaps.overlap_table()
        assert set(table) == set(overlaps.KINDS)
        for sub in table.values():
            assert len(sub) == 16


class TestBuildLambda:
    def test_diagonal_entries(self):
        lam = overlaps.build_lambda().entries
        assert lam[0][0] == Fraction(1, 6)
        assert lam[1][1] == Fraction(39, 108)
        assert lam[2][2] == Fraction(55, 108)

    def test_cross_entry(self):
        lam = overlaps.build_lambda().entries
        assert lam[0][2] == Fraction(-7, 36)
        assert lam[2][0] == Fraction(-7, 36)

    def test_exact_match_with_target(self):
        assert overlaps.build_lambda().max_deviation_from_target() == 0

    def test_matches_float_constant(self):
        assert np.max(np.abs(overlaps.build_lambda().as_array() - measures.LAMBDA)) <= 1e-15

    def test_bracket_arithmetic(self):
        # 1 + 1/2 - 2/3 - 2/3 and 1 + 1/4 - 10/27 - 10/27
        assert overlaps.bracket(0, 0, 0, 0) == Fraction(1, 6)
        assert overlaps.bracket(1, 1, 1, 1) == Fraction(55, 108)
        assert overlaps.bracket(0, 0, 1, 1) == Fraction(-7, 36)


class TestRoughnessFromOverlaps:
    def test_fixtures(self):
        g = states.validate_single(np.diag([1.0, 0.0]))
        e = states.validate_single(np.diag([0.0, 1.0]))
        p = states.validate_single(np.full((2, 2), 0.5))
        assert abs(overlaps.roughness_sq_from_overlaps(g) - 1 / 6) <= 1e-15
        assert abs(overlaps.roughness_sq_from_overlaps(e) - 55 / 108) <= 1e-15
        assert abs(overlaps.roughness_sq_from_overlaps(p) - 109 / 432) <= 1e-15

    def test_agrees_with_closed_form(self):
        rng = np.random.default_rng(33)
        for _ in range(10_000):
            g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            w = g @ g.conj().T
            st = states.validate_single(w / np.trace(w).real)
            a = overlaps.roughness_sq_from_overlaps(st)
            b = measures.roughness_sq_qubit(st)
            assert abs(a - b) <= 1e-12
