"""
tests/test_fidelity.py — Fidelity formula, lower bounds and the Clebsch–Gordan telescoping identity.
"""
from fractions import Fraction

import pytest

from purity_sim.core.errors import DomainError, InconsistentInputError
from purity_sim.fidelity import (
    DeltaVector,
    FidelityValue,
    cg_coeff_sq,
    event_fidelity_lower_bound,
    falling_factorial,
    fidelity,
    fidelity_from_shapes,
    fidelity_lower_bound,
    fidelity_via_cg,
    weyl_dim,
)
from purity_sim.tableaux import Overhangs, Partition, SemistandardTableau, enumerate_ssyt, overhangs, partitions_of

F = Fraction


def small_tableaux(max_n=8, dims=(2, 3)):
    """Every (λ, T) with |λ| ≤ max_n over the given alphabet sizes."""
    for d in dims:
        for n in range(1, max_n + 1):
            for lam in partitions_of(n, max_parts=d):
                for t in enumerate_ssyt(lam, d):
                    yield lam, t


def overhangs_of(lam, t):
    return overhangs(lam, t.restrict_below(t.d).shape, t.d)


class TestFallingFactorial:
    @pytest.mark.parametrize("n,k,expected", [(5, 2, 20), (2, 3, 0), (7, 0, 1), (-1, 2, 2)])
    def test_values(self, n, k, expected):
        assert falling_factorial(n, k) == expected

    def test_negative_order(self):
        with pytest.raises(DomainError):
            falling_factorial(3, -1)


class TestFidelity:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_all_d_single_row(self, k):
        t = SemistandardTableau.from_rows([[2, 2, 2, 2]], 2)
        value = fidelity((4,), t, k)
        assert value.value == 1
        assert not value.fallback_used

    def test_one_overhang(self):
        t = SemistandardTableau.from_rows([[1, 1, 2], [2]], 2)
        assert fidelity((3, 1), t, 1).value == F(1, 2)

    def test_no_d_in_first_row(self):
        t = SemistandardTableau.from_rows([[1, 1], [2]], 2)
        assert fidelity((2, 1), t, 1).value == 0

    def test_single_overhang_tableau(self):
        t = SemistandardTableau.from_rows([[1, 1, 2, 3], [2, 2, 3], [3]], 3)
        assert DeltaVector.of(t.shape, 3).values == (1, 4)
        assert fidelity((4, 3, 1), t, 1).value == F(3, 4)

    def test_fallback(self):
        t = SemistandardTableau.from_rows([[1, 1], [2, 2]], 2)
        value = fidelity((2, 2), t, 1)
        assert value.value == F(1, 2)
        assert value.fallback_used
        assert fidelity((2, 2), t, 2).value == F(1, 4)

    def test_shape_mismatch(self):
        t = SemistandardTableau.from_rows([[1, 2]], 2)
        with pytest.raises(InconsistentInputError):
            fidelity((1, 1), t, 1)

    def test_value_range_enforced(self):
        with pytest.raises(AssertionError):
            FidelityValue(F(3, 2), fallback_used=False)

    def test_float_mode_matches_exact(self):
        for lam, t in small_tableaux(max_n=7):
            mu = t.restrict_below(t.d).shape
            for k in (1, 2, 3):
                exact = fidelity_from_shapes(lam, mu, k, t.d).value
                approx = fidelity_from_shapes(lam, mu, k, t.d, exact=False).value
                assert approx == pytest.approx(float(exact), rel=1e-10, abs=1e-15)

    def test_range_and_unit_value(self):
        for lam, t in small_tableaux():
            b = overhangs_of(lam, t)
            for k in range(1, lam.row(1) - lam.row(2) + 1):
                value = fidelity(lam, t, k).value
                assert 0 <= value <= 1
                assert (value == 1) == (b.total == 0)

    def test_nonincreasing_in_k(self):
        for lam, t in small_tableaux():
            gap = lam.row(1) - lam.row(2)
            values = [fidelity(lam, t, k).value for k in range(1, gap + 1)]
            assert values == sorted(values, reverse=True)

    def test_dimension_check(self):
        with pytest.raises(DomainError):
            fidelity_from_shapes((3,), (), 1, 1)


class TestLowerBounds:
    def test_zero_overhangs(self):
        assert fidelity_lower_bound((5, 1), Overhangs((0,)), 2) == 1

    def test_tight_example(self):
        t = SemistandardTableau.from_rows([[1, 1, 2], [2]], 2)
        bound = fidelity_lower_bound((3, 1), Overhangs((1,)), 1)
        assert bound == F(1, 2)
        assert bound == fidelity((3, 1), t, 1).value

    def test_vacuous(self):
        assert fidelity_lower_bound((2, 1), Overhangs((1,)), 1) <= 0

    def test_needs_gap(self):
        with pytest.raises(DomainError):
            fidelity_lower_bound((2, 2), Overhangs((0,)), 1)

    def test_bound_holds_exhaustively(self):
        for lam, t in small_tableaux():
            b = overhangs_of(lam, t)
            for k in range(1, lam.row(1) - lam.row(2) + 1):
                assert fidelity(lam, t, k).value >= fidelity_lower_bound(lam, b, k)

    def test_event_bound_holds_on_event(self):
        g, n = F(3, 4), 8
        for lam, t in small_tableaux(max_n=n, dims=(2, 3)):
            if lam.n != n or lam.row(1) - lam.row(2) < g * n / 2:
                continue
            b = overhangs_of(lam, t)
            for k in (1,):
                assert g * n / 2 >= 2 * k
                assert fidelity(lam, t, k).value >= event_fidelity_lower_bound(b, k, g, n)


class TestWeylDimension:
    @pytest.mark.parametrize("nu,d,expected", [((1, 0), 2, 2), ((2, 1, 0), 3, 8), ((6, 0), 2, 7)])
    def test_values(self, nu, d, expected):
        assert weyl_dim(nu, d) == expected

    def test_non_monotone(self):
        with pytest.raises(DomainError):
            weyl_dim((1, 2), 2)

    def test_matches_ssyt_count(self):
        for d in (2, 3, 4):
            for n in range(7):
                for lam in partitions_of(n, max_parts=d):
                    assert weyl_dim(lam, d) == len(enumerate_ssyt(lam, d))


class TestClebschGordan:
    def test_single_coefficient(self):
        assert cg_coeff_sq((3, 1), (2,), 2) == F(1, 3)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_single_row(self, n):
        assert cg_coeff_sq((n,), (), 2) == F(n, n + 1)

    def test_rows_past_alphabet_ignored(self):
        assert cg_coeff_sq((3, 1), (2, 1), 2) == F(1, 3)
        assert cg_coeff_sq((3, 1), (2, 1), 2) == cg_coeff_sq((3, 1), (2,), 2)

    def test_lambda_too_long(self):
        with pytest.raises(InconsistentInputError):
            cg_coeff_sq((3, 1, 1), (2,), 2)

    def test_vanishing(self):
        assert cg_coeff_sq((3, 1), (3,), 2) == 0

    def test_via_cg_examples(self):
        t = SemistandardTableau.from_rows([[1, 1, 2], [2]], 2)
        assert weyl_dim(Partition.of(3, 1), 2) == 3
        assert weyl_dim(Partition.of(2, 1), 2) == 2
        assert fidelity_via_cg((3, 1), t, 1) == F(1, 2)
        assert fidelity_via_cg((3, 1), t, 2) == 0
        assert fidelity_via_cg((4,), SemistandardTableau.from_rows([[2, 2, 2, 2]], 2), 3) == 1

    def test_via_cg_needs_gap(self):
        t = SemistandardTableau.from_rows([[1, 1], [2, 2]], 2)
        with pytest.raises(DomainError):
            fidelity_via_cg((2, 2), t, 1)

    def test_telescoping_identity(self):
        cases = 0
        for lam, t in small_tableaux():
            for k in range(1, lam.row(1) - lam.row(2) + 1):
                assert fidelity(lam, t, k).value == fidelity_via_cg(lam, t, k)
                cases += 1
        assert cases > 500
