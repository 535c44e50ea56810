"""Nearest-partial matching and interval scoring, cross-checked against the
naive reference implementation in oracles.py."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from consonoscope import (
    MatchBand,
    ModelConfig,
    Partial,
    Spectrum,
    WeightingMode,
    assess_interval,
    harmonic_spectrum,
    match_partials,
)

from oracles import naive_scores, naive_spectrum

PROX = ModelConfig()
LIT = ModelConfig(weighting_mode=WeightingMode.LITERAL)


def _make(f0, cfg=PROX):
    return harmonic_spectrum(f0, cfg)


class TestMatching:
    def test_reference_is_lower_fundamental(self):
        lo, hi = _make(200.0), _make(300.0)
        assert match_partials(lo, hi).reference == 0
        assert match_partials(hi, lo).reference == 1

    def test_tie_on_equal_fundamentals_goes_to_first(self):
        a, b = _make(440.0), _make(440.0)
        assert match_partials(a, b).reference == 0

    def test_identical_spectra_all_consonant_zero_gap(self):
        a = _make(440.0)
        result = match_partials(a, a)
        assert len(result.matches) == len(a.partials)
        for m in result.matches:
            assert m.delta_f == 0.0
            assert m.band is MatchBand.CONSONANT

    def test_exact_octave_pattern(self):
        """2:1 — even reference partials align exactly, odd ones sit a full
        fundamental away from the nearest partner."""
        lo, hi = _make(261.6256), _make(523.2512)
        for m in match_partials(lo, hi).matches:
            if m.ref_index % 2 == 0:
                assert m.delta_f == pytest.approx(0.0, abs=1e-9)
                assert m.band is MatchBand.CONSONANT
            else:
                assert m.delta_f == pytest.approx(261.6256, abs=1e-6)
                assert m.band is MatchBand.NEUTRAL

    def test_440_vs_445_gap_arithmetic(self):
        """Reference partial i lands 5i Hz from comparison partial i — except
        the 45th, whose counterpart (445*45 = 20025 Hz) falls past the hearing
        band and leaves partial 44 as nearest, 220 Hz below."""
        matches = match_partials(_make(440.0), _make(445.0)).matches
        assert len(matches) == 45
        for m in matches:
            i = m.ref_index
            if i == 45:
                assert m.other_index == 44
                assert m.delta_f == pytest.approx(220.0, abs=1e-9)
                assert m.band is MatchBand.NEUTRAL
                continue
            assert m.other_index == i
            assert m.delta_f == pytest.approx(5.0 * i, abs=1e-9)
            if i == 1:
                assert m.band is MatchBand.CONSONANT
            elif i <= 11:
                assert m.band is MatchBand.DISSONANT
            else:
                assert m.band is MatchBand.NEUTRAL

    def test_one_match_per_reference_partial(self):
        lo, hi = _make(150.0), _make(847.0)
        result = match_partials(lo, hi)
        assert len(result.matches) == len(lo.partials)
        counts = {band: 0 for band in MatchBand}
        for m in result.matches:
            counts[m.band] += 1
        assert sum(counts.values()) == len(lo.partials)

    def test_equidistant_tie_takes_lower_frequency(self):
        # a reference partial at 100 Hz sits exactly 40 Hz from both partners
        ref = Spectrum(50.0, (Partial(100.0, 1.0, 2),))
        other = Spectrum(60.0, (Partial(60.0, 1.0, 1), Partial(140.0, 1.0, 2)))
        (match,) = match_partials(ref, other).matches
        assert match.other_index == 1  # the 60 Hz partner wins the tie
        assert match.delta_f == pytest.approx(40.0)


class TestScoring:
    def test_symmetry_field_for_field(self):
        a, b = _make(220.0), _make(330.0)
        r1 = assess_interval(a, b)
        r2 = assess_interval(b, a)
        assert r1 == r2

    def test_unison_proximity_closed_form(self):
        a = _make(440.0)
        r = assess_interval(a, a)
        expected = sum(math.exp(-0.16 * (i - 1)) for i in range(1, 46))
        assert r.consonance == pytest.approx(expected, abs=1e-9)
        assert r.dissonance == 0.0
        assert r.is_consonant

    def test_unison_literal_scores_zero(self):
        a = _make(440.0, LIT)
        r = assess_interval(a, a, LIT)
        assert r.consonance == 0.0
        assert r.dissonance == 0.0

    def test_445_literal_dissonance_closed_form(self):
        r = assess_interval(_make(440.0, LIT), _make(445.0, LIT), LIT)
        expected = sum(math.exp(-0.16 * (i - 1)) * 5.0 * i for i in range(2, 12))
        assert r.dissonance == pytest.approx(expected, rel=1e-12)

    def test_flags_track_thresholds(self):
        cfg = ModelConfig(consonance_threshold=1.0, dissonance_threshold=0.1)
        r = assess_interval(_make(440.0, cfg), _make(445.0, cfg), cfg)
        assert r.is_consonant == (r.consonance >= 1.0)
        assert r.is_dissonant == (r.dissonance >= 0.1)

    def test_both_flags_can_hold(self):
        cfg = ModelConfig(consonance_threshold=0.1, dissonance_threshold=0.1)
        r = assess_interval(_make(440.0, cfg), _make(445.0, cfg), cfg)
        assert r.is_consonant and r.is_dissonant

    def test_magnitude_scaling_is_quadratic(self):
        """Scaling all magnitudes of both spectra by alpha scales scores by alpha^2."""
        alpha = 3.0
        a, b = _make(300.0), _make(452.0)

        def scaled(s):
            return Spectrum(
                s.fundamental,
                tuple(Partial(p.frequency, alpha * p.magnitude, p.index) for p in s.partials),
            )

        r = assess_interval(a, b)
        rs = assess_interval(scaled(a), scaled(b))
        assert rs.consonance == pytest.approx(alpha**2 * r.consonance, rel=1e-12)
        assert rs.dissonance == pytest.approx(alpha**2 * r.dissonance, rel=1e-12)

    def test_proximity_weight_vanishes_at_band_edges(self):
        """A gap just inside f_c contributes ~0 consonance; just inside f_d
        contributes ~0 dissonance."""
        cfg = ModelConfig()
        ref = Spectrum(100.0, (Partial(100.0, 1.0, 1),))
        for gap, field in ((cfg.f_c - 1e-7, "consonance"), (cfg.f_d - 1e-7, "dissonance")):
            other = Spectrum(100.0 + gap, (Partial(100.0 + gap, 1.0, 1),))
            r = assess_interval(ref, other, cfg)
            assert getattr(r, field) == pytest.approx(0.0, abs=1e-6)
            assert getattr(r, field) > 0.0

    def test_neutral_band_contributes_nothing(self):
        ref = Spectrum(100.0, (Partial(100.0, 1.0, 1),))
        other = Spectrum(200.0, (Partial(200.0, 1.0, 1),))
        r = assess_interval(ref, other)
        assert r.consonance == 0.0
        assert r.dissonance == 0.0

    @given(
        f1=st.floats(min_value=100.0, max_value=2000.0),
        f2=st.floats(min_value=100.0, max_value=2000.0),
        literal=st.booleans(),
    )
    @settings(max_examples=40, deadline=None)
    def test_matches_naive_oracle(self, f1, f2, literal):
        cfg = LIT if literal else PROX
        r = assess_interval(_make(f1, cfg), _make(f2, cfg), cfg)
        cons, diss = naive_scores(
            f1, naive_spectrum(f1), f2, naive_spectrum(f2), literal=literal
        )
        assert r.consonance == pytest.approx(cons, rel=1e-12, abs=1e-15)
        assert r.dissonance == pytest.approx(diss, rel=1e-12, abs=1e-15)

    def test_scores_nonnegative(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            f1, f2 = rng.uniform(50.0, 5000.0, size=2)
            r = assess_interval(_make(f1), _make(f2))
            assert r.consonance >= 0.0
            assert r.dissonance >= 0.0
