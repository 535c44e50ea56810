"""Closest-partial matching between two spectra and the consonance and
dissonance scores derived from the matches.

The spectrum with the lower fundamental acts as the reference. Every
reference partial is matched to the nearest partial of the other spectrum
(ties go to the lower-frequency candidate) and the frequency gap sorts the
pair into a consonant (< f_c), dissonant (f_c..f_d) or neutral band. Scores
accumulate magnitude-weighted contributions over the consonant and dissonant
matches; how the gap itself is weighted is selected by the configured
WeightingMode.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import ModelConfig, WeightingMode
from .spectral import Spectrum


class MatchBand(Enum):
    CONSONANT = "consonant"
    DISSONANT = "dissonant"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class PartialMatch:
    """One reference partial paired with its nearest counterpart."""

    ref_index: int
    other_index: int
    delta_f: float
    band: MatchBand


@dataclass(frozen=True)
class MatchResult:
    """Matches of every reference partial; ``reference`` tells which argument
    (0 = first, 1 = second) supplied the reference spectrum."""

    reference: int
    matches: tuple[PartialMatch, ...]


@dataclass(frozen=True)
class IntervalAssessment:
    """Consonance and dissonance of a tone pair, with threshold flags.

    Both flags can hold at once: an interval has intrinsic levels of both
    qualities and the thresholds are independent.
    """

    consonance: float
    dissonance: float
    is_consonant: bool
    is_dissonant: bool
    matches: tuple[PartialMatch, ...]


@dataclass(frozen=True)
class _Pairing:
    reference: Spectrum
    other: Spectrum
    ref_arg: int
    nearest: np.ndarray  # position into other.partials, one per reference partial
    delta: np.ndarray


def _pair(a: Spectrum, b: Spectrum) -> _Pairing:
    """Nearest-partial pairing with the lower fundamental as reference.

    Equidistant neighbors resolve to the lower-frequency candidate, which is
    the stronger (less decayed) partial in a harmonic spectrum.
    """
    if a.fundamental <= b.fundamental:
        reference, other, ref_arg = a, b, 0
    else:
        reference, other, ref_arg = b, a, 1
    ref_freqs = reference.frequencies
    other_freqs = other.frequencies
    pos = np.searchsorted(other_freqs, ref_freqs)
    left = np.clip(pos - 1, 0, len(other_freqs) - 1)
    right = np.clip(pos, 0, len(other_freqs) - 1)
    d_left = np.abs(ref_freqs - other_freqs[left])
    d_right = np.abs(other_freqs[right] - ref_freqs)
    take_left = d_left <= d_right
    nearest = np.where(take_left, left, right)
    delta = np.where(take_left, d_left, d_right)
    return _Pairing(reference, other, ref_arg, nearest, delta)


def _band(gap: float, config: ModelConfig) -> MatchBand:
    if gap < config.f_c:
        return MatchBand.CONSONANT
    if gap < config.f_d:
        return MatchBand.DISSONANT
    return MatchBand.NEUTRAL


def _matches(pairing: _Pairing, config: ModelConfig) -> tuple[PartialMatch, ...]:
    return tuple(
        PartialMatch(
            ref_index=pairing.reference.partials[i].index,
            other_index=pairing.other.partials[int(j)].index,
            delta_f=float(d),
            band=_band(float(d), config),
        )
        for i, (j, d) in enumerate(zip(pairing.nearest, pairing.delta))
    )


def match_partials(a: Spectrum, b: Spectrum, config: ModelConfig | None = None) -> MatchResult:
    """Match every partial of the lower-fundamental spectrum to the nearest
    partial of the other spectrum and classify each gap."""
    if config is None:
        config = ModelConfig()
    pairing = _pair(a, b)
    return MatchResult(reference=pairing.ref_arg, matches=_matches(pairing, config))


def assess_interval(a: Spectrum, b: Spectrum, config: ModelConfig | None = None) -> IntervalAssessment:
    """Score the consonance and dissonance of a tone pair.

    Symmetric in its arguments: the reference is chosen by fundamental, not
    by argument order.
    """
    if config is None:
        config = ModelConfig()
    pairing = _pair(a, b)
    delta = pairing.delta
    pair_mag = pairing.reference.magnitudes * pairing.other.magnitudes[pairing.nearest]

    consonant = delta < config.f_c
    dissonant = (delta >= config.f_c) & (delta < config.f_d)
    if config.weighting_mode is WeightingMode.LITERAL:
        cons_w = delta
        diss_w = delta
    else:
        cons_w = (config.f_c - delta) / config.f_c
        diss_w = (config.f_d - delta) / (config.f_d - config.f_c)
    consonance = float(np.sum(pair_mag[consonant] * cons_w[consonant]))
    dissonance = float(np.sum(pair_mag[dissonant] * diss_w[dissonant]))

    return IntervalAssessment(
        consonance=consonance,
        dissonance=dissonance,
        is_consonant=consonance >= config.consonance_threshold,
        is_dissonant=dissonance >= config.dissonance_threshold,
        matches=_matches(pairing, config),
    )
