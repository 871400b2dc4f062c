"""
tests/test_oracle.py — Exact expectations under the RSK distribution.
"""
from fractions import Fraction
from itertools import product

import pytest

from purity_sim.config import settings
from purity_sim.core.errors import DomainError, GapError, ResourceLimitError, VerificationError
from purity_sim.oracle import (
    exact_event_breakdown,
    exact_event_probability,
    exact_expected_fidelity,
    exact_overhang_mean,
    exact_row_moments,
    exact_rsk_distribution,
    pair_sum_expected_fidelity,
    run_oracle_checks,
    word_sum_expected_fidelity,
)
from purity_sim.oracle import exact as exact_module
from purity_sim.spectrum import (
    Spectrum,
    concentration_bound,
    depolarizing,
    event_threshold,
    first_row_bound,
    overhang_mean_bound,
    second_row_bound,
)
from purity_sim.tableaux import Partition, SemistandardTableau, Word, overhangs, rsk

F = Fraction

QUBIT_GRID = [
    Spectrum.of([F(1, 10), F(9, 10)]),
    Spectrum.of([F(3, 10), F(7, 10)]),
    Spectrum.of([F(1, 2), F(1, 2)]),
]
QUTRIT_GRID = [depolarizing(3, F(1, 10)), depolarizing(3, F(3, 10))]


class TestRskDistribution:
    def test_pure_state(self):
        dist = exact_rsk_distribution(Spectrum.of([0, 1]), 3)
        support = {t: mass for t, mass in dist.masses.items() if mass}
        assert support == {SemistandardTableau.from_rows([[2, 2, 2]], 2): 1}

    def test_two_letters_two_copies(self):
        dist = exact_rsk_distribution(Spectrum.of([F(1, 2), F(1, 2)]), 2)
        marginal = dist.shape_marginal()
        assert marginal[Partition.of(1, 1)] == F(1, 4)
        assert marginal[Partition.of(2)] == F(3, 4)
        assert [mass for lam, _, mass in dist.items() if lam == Partition.of(2)] == [F(1, 4)] * 3

    @pytest.mark.parametrize("p", QUBIT_GRID + QUTRIT_GRID)
    def test_total_mass(self, p):
        for n in (1, 4, 7):
            assert exact_rsk_distribution(p, n).total() == 1

    def test_needs_exact_spectrum(self):
        with pytest.raises(DomainError):
            exact_rsk_distribution(Spectrum.of([0.1, 0.9]), 3)

    def test_caps(self):
        p = Spectrum.of([F(1, 10), F(9, 10)])
        with pytest.raises(ResourceLimitError):
            exact_rsk_distribution(p, 11)
        with pytest.raises(ResourceLimitError):
            exact_rsk_distribution(p, 5, cap=4)
        with pytest.raises(ResourceLimitError):
            exact_rsk_distribution(Spectrum.of([F(1, 5)] * 5), 2)


class TestExpectedFidelity:
    def test_pure_state(self):
        p = Spectrum.of([0, 1])
        for k in (1, 2):
            assert exact_expected_fidelity(p, 4, k) == 1

    def test_four_word_enumeration(self):
        # words 11, 12, 21, 22 give F = 0, 1/2, 1/2 (fallback), 1
        assert exact_expected_fidelity(Spectrum.of([F(1, 2), F(1, 2)]), 2, 1) == F(1, 2)

    def test_increases_with_top_eigenvalue(self):
        values = [
            exact_expected_fidelity(Spectrum.of([1 - top, top]), 4, 1)
            for top in (F(6, 10), F(7, 10), F(8, 10), F(9, 10))
        ]
        assert values == sorted(set(values))

    @pytest.mark.parametrize("p", QUBIT_GRID + QUTRIT_GRID)
    def test_word_sum_equals_pair_sum(self, p):
        for n in range(1, 9):
            for k in (1, 2):
                assert word_sum_expected_fidelity(p, n, k) == pair_sum_expected_fidelity(p, n, k)

    def test_word_sum_parallel(self):
        p = depolarizing(3, F(3, 10))
        assert word_sum_expected_fidelity(p, 5, 1, workers=2) == word_sum_expected_fidelity(p, 5, 1, workers=1)

    def test_word_sum_cap(self, monkeypatch):
        monkeypatch.setattr(settings, "word_sum_max_words", 10)
        with pytest.raises(ResourceLimitError):
            word_sum_expected_fidelity(Spectrum.of([F(1, 2), F(1, 2)]), 4, 1)

    def test_mismatch_raises(self, monkeypatch):
        monkeypatch.setattr(exact_module, "pair_sum_expected_fidelity", lambda *args, **kwargs: F(0))
        with pytest.raises(VerificationError):
            exact_expected_fidelity(Spectrum.of([F(1, 10), F(9, 10)]), 3, 1)


class TestRowMoments:
    def test_pure_state(self):
        assert exact_row_moments(Spectrum.of([0, 1]), 5) == (5, 0)

    def test_lemma_bounds_at_ten_copies(self):
        p = Spectrum.of([F(3, 10), F(7, 10)])
        first, second = exact_row_moments(p, 10)
        assert first <= F(31, 4) == first_row_bound(p, 10)
        assert second <= 84 * F(3, 10) * 10 + 42 * F(3, 10) * 10 == second_row_bound(p, 10)

    @pytest.mark.parametrize("p", QUBIT_GRID[:2] + QUTRIT_GRID)
    def test_overhang_mean(self, p):
        for n in (3, 6):
            mean_lambda1, _ = exact_row_moments(p, n)
            overhang_mean = exact_overhang_mean(p, n)
            assert overhang_mean == mean_lambda1 - p.p_max * n
            assert overhang_mean <= overhang_mean_bound(p) <= (1 - p.p_max) / p.gap

    def test_sum_of_overhangs_per_word(self):
        d = 3
        for n in range(1, 7):
            for letters in product(range(1, d + 1), repeat=n):
                result = rsk(Word(letters, d))
                mu = result.insertion.restrict_below(d).shape
                b = overhangs(result.shape, mu, d)
                assert b.total == mu.n - n + result.shape.row(1)
                assert mu.n == sum(1 for x in letters if x < d)


class TestEventProbability:
    def test_pure_state(self):
        assert exact_event_probability(Spectrum.of([0, 1]), 5) == 1

    def test_threshold(self):
        p = Spectrum.of([F(1, 4), F(3, 4)])
        assert event_threshold(p, 8) == 2
        marginal = exact_rsk_distribution(p, 8).shape_marginal()
        expected = sum(mass for lam, mass in marginal.items() if lam.row(1) - lam.row(2) >= 2)
        assert exact_event_probability(p, 8) == expected

    @pytest.mark.parametrize("p", QUBIT_GRID[:2] + QUTRIT_GRID)
    def test_concentration(self, p):
        for n in (4, 8):
            breakdown = exact_event_breakdown(p, n)
            assert breakdown.event_failure == 1 - exact_event_probability(p, n)
            assert breakdown.event_failure <= concentration_bound(p, n)
            assert breakdown.event_failure <= breakdown.first_row_low + breakdown.second_row_high

    def test_needs_gap(self):
        with pytest.raises(GapError):
            exact_event_probability(Spectrum.of([F(1, 2), F(1, 2)]), 4)


class TestOracleChecks:
    def test_report_passes(self):
        report = run_oracle_checks(Spectrum.of([F(3, 10), F(7, 10)]), 6, 2)
        assert report.passed
        assert {check.name for check in report.checks} >= {
            "total_mass",
            "word_sum_equals_pair_sum",
            "first_row_mean",
            "second_row_moment",
            "overhang_identity",
            "event_failure",
        }

    def test_gapless_spectrum_skips_gap_checks(self):
        report = run_oracle_checks(Spectrum.of([F(1, 2), F(1, 2)]), 4, 1)
        assert report.passed
        assert [check.name for check in report.checks] == [
            "total_mass",
            "word_sum_equals_pair_sum",
            "second_row_moment",
        ]

    def test_pure_state(self):
        report = run_oracle_checks(Spectrum.of([0, 1]), 4, 1)
        assert report.passed
        assert report.parameters["expected_fidelity"] == "1"
