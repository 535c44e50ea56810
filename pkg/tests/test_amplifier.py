"""Quadratic squaring algebra, bias sweeps and the linearity metric.

The master oracle throughout: rendering the expanded spectrum must equal
pointwise squaring of the rendered input-plus-bias.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from consonoscope import (
    AmplifierConfig,
    ModelConfig,
    bias_sweep,
    default_triad_input,
    linearity_metric,
    render_expanded,
    square_expand,
    synthesize,
    tone_output_spectra,
)

TRIAD = default_triad_input(261.6256)


def _squared_reference(tones, bias, duration, rate):
    freqs = [f for f, _ in tones]
    amps = [a for _, a in tones]
    clean = synthesize(freqs, amps, [0.0] * len(freqs), duration, rate)
    return (clean + bias) ** 2


class TestSquareExpand:
    def test_single_tone_cosine_square_identity(self):
        s = square_expand([(440.0, 1.0)], 0.0)
        assert s.dc == 0.5
        assert len(s.partials) == 1
        assert s.partials[0].frequency == 880.0
        assert s.partials[0].magnitude == 0.5

    def test_two_unit_tones_inventory(self):
        s = square_expand([(300.0, 1.0), (470.0, 1.0)], 0.0)
        assert s.dc == 1.0
        table = {p.frequency: p.magnitude for p in s.partials}
        assert table == {
            600.0: 0.5,
            940.0: 0.5,
            770.0: 1.0,
            170.0: 1.0,
        }

    def test_bias_adds_linear_terms_and_dc(self):
        s = square_expand([(300.0, 2.0)], 1.5)
        table = {p.frequency: p.magnitude for p in s.partials}
        assert s.dc == 1.5**2 + 2.0**2 / 2.0
        assert table[300.0] == 2 * 1.5 * 2.0
        assert table[600.0] == 2.0

    def test_zero_bias_has_no_energy_at_input_frequencies(self):
        tones = [(211.0, 1.0), (337.0, 0.7), (503.0, 0.4)]
        s = square_expand(tones, 0.0)
        for f, _ in tones:
            assert all(abs(p.frequency - f) > 1.0 for p in s.partials)

    def test_generic_term_count(self):
        """n tones with incommensurable frequencies and bias > 0 produce
        n(n-1) + 2n cosines plus dc."""
        for n, tones in (
            (2, [(199.1, 1.0), (315.7, 0.5)]),
            (3, [(199.1, 1.0), (315.7, 0.5), (501.3, 0.25)]),
            (4, [(199.1, 1.0), (315.7, 0.5), (501.3, 0.25), (777.7, 0.125)]),
        ):
            s = square_expand(tones, 1.0)
            assert len(s.partials) == n * (n - 1) + 2 * n

    def test_octave_input_merges_coincident_products(self):
        """With f and 2f the difference tone lands on f and the doubled low
        tone lands on 2f, so the component list collapses."""
        a = 1.5
        s = square_expand([(100.0, 1.0), (200.0, 1.0)], a)
        table = {p.frequency: p.magnitude for p in s.partials}
        assert set(table) == {100.0, 200.0, 300.0, 400.0}
        assert table[100.0] == pytest.approx(2 * a * 1.0 + 1.0)  # linear + difference
        assert table[200.0] == pytest.approx(2 * a * 1.0 + 0.5)  # linear + double of 100
        assert table[300.0] == pytest.approx(1.0)
        assert table[400.0] == pytest.approx(0.5)

    def test_degenerate_difference_folds_into_dc(self):
        # near-coincident pair is rejected as duplicate input instead
        with pytest.raises(ValueError):
            square_expand([(500.0, 1.0), (500.0, 0.5)], 0.0)

    def test_negative_bias_rejected(self):
        with pytest.raises(ValueError):
            square_expand([(440.0, 1.0)], -0.1)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            square_expand([], 1.0)

    def test_partials_ascending(self):
        s = square_expand(TRIAD, 2.5)
        freqs = [p.frequency for p in s.partials]
        assert freqs == sorted(freqs)

    @given(
        bias=st.floats(min_value=0.0, max_value=10.0),
        f2=st.floats(min_value=150.0, max_value=900.0),
        a2=st.floats(min_value=0.1, max_value=2.0),
    )
    @settings(max_examples=25, deadline=None)
    def test_squaring_oracle_two_tones(self, bias, f2, a2):
        tones = [(100.0, 1.0), (f2, a2)]
        s = square_expand(tones, bias)
        got = render_expanded(s, 0.05, 8000)
        want = _squared_reference(tones, bias, 0.05, 8000)
        scale = np.max(np.abs(want)) or 1.0
        assert np.max(np.abs(got - want)) / scale < 1e-9

    def test_parseval_with_integer_frequencies(self):
        """Full-period sampling: mean squared output = dc^2 + sum(A^2)/2."""
        tones = [(100.0, 1.0), (150.0, 0.5)]
        s = square_expand(tones, 1.0)
        wave = render_expanded(s, 1.0, 8000)
        expected = s.dc**2 + sum(p.magnitude**2 for p in s.partials) / 2.0
        assert np.mean(wave**2) == pytest.approx(expected, rel=1e-6)


class TestToneOutputSpectra:
    def test_products_attributed_to_lower_parent(self):
        spectra = tone_output_spectra([(400.0, 1.0), (650.0, 0.5)], 0.0)
        low, high = spectra
        low_freqs = {p.frequency for p in low.partials}
        assert low_freqs == {800.0, 250.0, 1050.0}  # own double + both products
        high_freqs = {p.frequency for p in high.partials}
        assert high_freqs == {1300.0}  # only its own double

    def test_inaudible_group_maps_to_none(self):
        spectra = tone_output_spectra([(15000.0, 1.0), (400.0, 1.0)], 0.0)
        assert spectra[0] is None  # its only term (30 kHz) is out of band
        assert spectra[1] is not None
        freqs = {p.frequency for p in spectra[1].partials}
        assert freqs == {800.0, 14600.0, 15400.0}

    def test_bias_restores_linear_component(self):
        spectra = tone_output_spectra([(15000.0, 1.0), (400.0, 1.0)], 2.0)
        assert spectra[0] is not None
        assert {p.frequency for p in spectra[0].partials} == {15000.0}


class TestBiasSweep:
    def test_default_sweep_order_and_length(self):
        entries = bias_sweep(TRIAD)
        assert [e.bias for e in entries] == [0.0, 1.0, 2.5, 4.0, 10.0, 50.0]

    def test_entries_carry_assessments_and_graph(self):
        entries = bias_sweep(TRIAD, AmplifierConfig(biases_sweep=(0.0, 1.0)))
        for e in entries:
            assert len(e.tone_spectra) == 3
            assert len(e.assessments) == 3  # all three pairs audible
            assert e.graph.kind.value == "consonance"
            assert len(e.graph.nodes) == 3

    def test_large_bias_dominated_by_linear_terms(self):
        entries = bias_sweep(TRIAD, AmplifierConfig(biases_sweep=(50.0,)))
        s = entries[0].expanded
        amps = [a for _, a in TRIAD]
        linear = [2 * 50.0 * a for a in amps]
        cross = [amps[i] * amps[j] for i in range(3) for j in range(i + 1, 3)]
        assert max(cross) / min(linear) < 0.02
        # and the spectrum actually contains those linear amplitudes
        table = {p.frequency: p.magnitude for p in s.partials}
        for f, a in TRIAD:
            assert table[f] >= 2 * 50.0 * a  # linear term, possibly + a product

    def test_invalid_sweeps_rejected(self):
        with pytest.raises(ValueError):
            AmplifierConfig(biases_sweep=(1.0, 1.0))
        with pytest.raises(ValueError):
            AmplifierConfig(biases_sweep=(2.0, 1.0))
        with pytest.raises(ValueError):
            AmplifierConfig(biases_sweep=(-1.0, 2.0))
        with pytest.raises(ValueError):
            AmplifierConfig(bias=-0.5)

    def test_linearity_improves_along_default_sweep(self):
        tones = TRIAD
        freqs = [f for f, _ in tones]
        amps = [a for _, a in tones]
        clean = synthesize(freqs, amps, [0.0] * 3, 0.25, 8000)
        metrics = []
        for e in bias_sweep(tones):
            out = render_expanded(e.expanded, 0.25, 8000)
            metrics.append(linearity_metric(clean, out))
        assert metrics == sorted(metrics)
        assert metrics[-1] > 0.999


class TestLinearityMetric:
    def test_affine_invariance(self):
        x = np.sin(np.linspace(0.0, 20.0, 500))
        assert linearity_metric(x, 3.0 * x + 7.0) == pytest.approx(1.0, abs=1e-12)

    def test_sign_flip(self):
        x = np.sin(np.linspace(0.0, 20.0, 500))
        assert linearity_metric(x, -x) == pytest.approx(-1.0, abs=1e-12)

    def test_constant_waveform_rejected(self):
        x = np.sin(np.linspace(0.0, 20.0, 500))
        with pytest.raises(ValueError):
            linearity_metric(x, np.full(500, 2.0))
        with pytest.raises(ValueError):
            linearity_metric(np.zeros(500), x)

    def test_mismatched_shapes_rejected(self):
        with pytest.raises(ValueError):
            linearity_metric(np.zeros(10), np.zeros(11))

    def test_result_clamped_to_unit_interval(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            x = rng.normal(size=256)
            y = rng.normal(size=256)
            assert -1.0 <= linearity_metric(x, y) <= 1.0


class TestDefaultTriadInput:
    def test_just_major_ratios_and_amplitudes(self):
        tones = default_triad_input(200.0)
        assert tones == ((200.0, 1.0), (250.0, 1.0 / 3.0), (300.0, 1.0 / 5.0))

    def test_rejects_nonpositive_base(self):
        with pytest.raises(ValueError):
            default_triad_input(0.0)
