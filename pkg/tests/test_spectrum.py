"""
tests/test_spectrum.py — Spectra, sampling and the sample-complexity formulas.
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st
from pydantic import ValidationError

from purity_sim.core.errors import DomainError, GapError, SpectrumError
from purity_sim.core.streams import trial_stream
from purity_sim.spectrum import (
    RunParameters,
    Spectrum,
    concentration_bound,
    depolarizing,
    event_threshold,
    fine_grained_rate,
    first_row_bound,
    first_row_tail_bound,
    gap_rate,
    guaranteed_fidelity,
    meets_event_margin,
    overhang_mean_bound,
    parse_spectrum,
    qubit_asymptotic_infidelity,
    required_samples,
    sample_word,
    second_row_bound,
    second_row_tail_bound,
)
from purity_sim.spectrum.bounds import (
    CONCENTRATION_CONSTANT,
    FIRST_ROW_TAIL_CONSTANT,
    SECOND_ROW_TAIL_CONSTANT,
)

F = Fraction


@st.composite
def gapped_spectra(draw):
    weights = draw(st.lists(st.integers(min_value=0, max_value=100), min_size=2, max_size=5))
    total = sum(weights)
    assume(total > 0)
    p = Spectrum.of(F(w, total) for w in weights)
    assume(p.gap > 0)
    return p


class TestSpectrum:
    def test_sorted_ascending(self):
        p = Spectrum.of([F(9, 10), F(1, 10)])
        assert p.p == (F(1, 10), F(9, 10))
        assert p.d == 2
        assert p.exact
        assert p.gap == F(4, 5)

    def test_float_mode(self):
        p = Spectrum.of([0.1, 0.2, 0.7])
        assert not p.exact
        assert p.p_max == pytest.approx(0.7)

    def test_mixed_input_collapses_to_float(self):
        assert not Spectrum.of([F(1, 2), 0.5]).exact

    @pytest.mark.parametrize(
        "values",
        [[F(1, 2), F(1, 3)], [F(3, 2), F(-1, 2)], [F(1)], [0.5, 0.6]],
    )
    def test_invalid(self, values):
        with pytest.raises(SpectrumError):
            Spectrum.of(values)

    def test_zero_gap(self):
        with pytest.raises(GapError):
            Spectrum.of([F(1, 2), F(1, 2)]).require_gap()

    def test_to_float(self):
        assert Spectrum.of([F(1, 4), F(3, 4)]).to_float().p == (0.25, 0.75)


class TestRunParameters:
    def test_valid(self):
        params = RunParameters(n=10, k=2, delta=0.1)
        assert params.n == 10

    @pytest.mark.parametrize("kwargs", [{"n": 0, "k": 1}, {"n": 1, "k": 0}, {"n": 1, "k": 1, "delta": 0.0}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            RunParameters(**kwargs)


class TestDepolarizing:
    def test_float(self):
        p = depolarizing(3, 0.3)
        assert p.as_floats() == pytest.approx((0.1, 0.1, 0.8))

    def test_exact(self):
        assert depolarizing(3, F(3, 10)).p == (F(1, 10), F(1, 10), F(4, 5))

    def test_noiseless(self):
        assert depolarizing(2, 0).p == (F(0), F(1))

    def test_fully_mixed_has_no_gap(self):
        p = depolarizing(2, 1)
        assert p.p == (F(1, 2), F(1, 2))
        with pytest.raises(GapError):
            required_samples(p, 1, 0.1)

    @pytest.mark.parametrize("d,eta", [(3, 1.5), (3, -0.1), (1, 0.2)])
    def test_domain(self, d, eta):
        with pytest.raises(DomainError):
            depolarizing(d, eta)


class TestSampling:
    def test_degenerate_spectrum(self):
        word = sample_word(Spectrum.of([0.0, 1.0]), 5, trial_stream(0, 0))
        assert word.letters == (2, 2, 2, 2, 2)

    def test_frequency(self):
        n = 10_000
        word = sample_word(Spectrum.of([0.5, 0.5]), n, trial_stream(3, 0))
        freq = word.histogram[1] / n
        assert abs(freq - 0.5) < 4 * np.sqrt(0.25 / n)

    def test_replay(self):
        p = depolarizing(3, 0.3)
        assert sample_word(p, 100, trial_stream(7, 4)) == sample_word(p, 100, trial_stream(7, 4))
        assert sample_word(p, 100, trial_stream(7, 4)) != sample_word(p, 100, trial_stream(7, 5))

    def test_chunked_draws_match_single_draw(self):
        p = depolarizing(3, 0.3)
        whole = sample_word(p, 50, trial_stream(1, 0)).letters
        stream = trial_stream(1, 0)
        parts = sample_word(p, 20, stream).letters + sample_word(p, 30, stream).letters
        assert whole == parts


class TestRequiredSamples:
    def test_worked_example(self):
        assert required_samples(Spectrum.of([F(1, 10), F(9, 10)]), 1, F(1, 10)) == 3194
        assert required_samples(Spectrum.of([0.1, 0.9]), 1, 0.1) == 3194

    def test_float_spectrum_rounds_like_exact(self):
        # 12 + 20360 · 15/8 is an integer, so float error alone would move the ceiling
        exact = required_samples(Spectrum.of([F(3, 10), F(7, 10)]), 1, F(1, 10))
        assert exact == 38187
        assert required_samples(Spectrum.of([0.3, 0.7]), 1, 0.1) == exact
        assert required_samples(Spectrum.of([0.3, 0.7]), 1, 0.1) == required_samples(Spectrum.of([0.3, 0.7]), 1, F(1, 10))

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_pure_state(self, k):
        assert required_samples(Spectrum.of([0, 1]), k, 0.05) == 12 * k

    def test_monotone_in_k_and_delta(self):
        p = depolarizing(3, F(3, 10))
        by_k = [required_samples(p, k, F(1, 10)) for k in (1, 2, 4, 8)]
        assert by_k == sorted(set(by_k))
        by_delta = [required_samples(p, 1, delta) for delta in (F(1, 100), F(1, 10), F(1, 2), F(1))]
        assert by_delta == sorted(by_delta, reverse=True)

    def test_monotone_in_top_eigenvalue(self):
        values = []
        for top in (F(6, 10), F(7, 10), F(8, 10), F(9, 10)):
            rest = 1 - top
            values.append(required_samples(Spectrum.of([rest / 3, 2 * rest / 3, top]), 1, F(1, 10)))
        assert values == sorted(values, reverse=True)

    def test_delta_domain(self):
        with pytest.raises(DomainError):
            required_samples(Spectrum.of([0.1, 0.9]), 1, 1.5)

    @given(gapped_spectra(), st.integers(min_value=1, max_value=4), st.sampled_from([F(1, 2), F(1, 10), F(1, 50)]))
    @hypothesis_settings(max_examples=100, deadline=None)
    def test_guarantee_at_required_n(self, p, k, delta):
        n = required_samples(p, k, delta)
        assert guaranteed_fidelity(p, n, k) >= 1 - delta
        assert meets_event_margin(p, n, k)


class TestRates:
    def test_fine_grained_examples(self):
        assert fine_grained_rate(Spectrum.of([F(1, 10), F(9, 10)])) == F(5, 32)
        assert fine_grained_rate(Spectrum.of([0, 1])) == 0
        assert fine_grained_rate(depolarizing(3, F(3, 10))) == 2 * F(1, 10) / F(49, 100)

    @given(gapped_spectra())
    @hypothesis_settings(max_examples=300, deadline=None)
    def test_fine_grained_below_gap_rate(self, p):
        assert fine_grained_rate(p) <= gap_rate(p)
        assert overhang_mean_bound(p) <= (1 - p.p_max) / p.gap

    def test_qubit_reference(self):
        p = Spectrum.of([F(1, 10), F(9, 10)])
        assert qubit_asymptotic_infidelity(p, 1000) == F(5, 32000)
        assert qubit_asymptotic_infidelity(p, 2000) == qubit_asymptotic_infidelity(p, 1000) / 2
        assert qubit_asymptotic_infidelity(Spectrum.of([0, 1]), 10) == 0

    def test_qubit_reference_needs_qubits(self):
        with pytest.raises(DomainError):
            qubit_asymptotic_infidelity(depolarizing(3, F(3, 10)), 100)


class TestConcentration:
    def test_constants(self):
        assert FIRST_ROW_TAIL_CONSTANT + SECOND_ROW_TAIL_CONSTANT == CONCENTRATION_CONSTANT == 2032

    def test_capped_at_one(self):
        p = Spectrum.of([F(3, 10), F(7, 10)])
        assert concentration_bound(p, 10) == 1
        assert first_row_tail_bound(p, 10) == 1

    def test_large_n(self):
        p = Spectrum.of([F(1, 10), F(9, 10)])
        n = 100_000
        assert first_row_tail_bound(p, n) == 16 * F(5, 32) / n
        assert second_row_tail_bound(p, n) == 2016 * F(5, 32) / n
        assert concentration_bound(p, n) == first_row_tail_bound(p, n) + second_row_tail_bound(p, n)

    def test_row_bounds(self):
        p = Spectrum.of([F(3, 10), F(7, 10)])
        assert first_row_bound(p, 10) == F(31, 4)
        assert second_row_bound(p, 10) == 84 * F(3, 10) * 10 + 42 * F(3, 10) * 10

    def test_event_threshold(self):
        p = Spectrum.of([F(1, 4), F(3, 4)])
        assert event_threshold(p, 8) == 2


class TestParseSpectrum:
    def test_fractions(self):
        assert parse_spectrum("1/10,9/10", exact=True).p == (F(1, 10), F(9, 10))

    def test_decimals_exact(self):
        assert parse_spectrum("0.3, 0.7", exact=True).p == (F(3, 10), F(7, 10))

    def test_floats(self):
        p = parse_spectrum("0.9,0.1")
        assert not p.exact
        assert p.as_floats() == pytest.approx((0.1, 0.9))

    def test_depolarizing(self):
        assert parse_spectrum("depolarizing:d=3,eta=0.3", exact=True).p == (F(1, 10), F(1, 10), F(4, 5))

    @pytest.mark.parametrize("text", ["", "0.1,abc", "depolarizing:d=3", "depolarizing:d=x,eta=0.1"])
    def test_malformed(self, text):
        with pytest.raises(DomainError):
            parse_spectrum(text)

    def test_bad_sum(self):
        with pytest.raises(SpectrumError):
            parse_spectrum("0.2,0.2")
