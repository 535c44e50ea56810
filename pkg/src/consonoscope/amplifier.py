"""Quadratic amplifier model: exact spectral expansion of a squared
cosine-sum-plus-bias signal, bias sweeps with consonance re-analysis of the
distorted tones, and a linearity metric.

Squaring sum(a_i cos(w_i t)) + a yields dc = a^2 + sum(a_i^2)/2, a linear
term 2*a*a_i at each w_i, a double a_i^2/2 at each 2*w_i, and pair products
a_i*a_j at w_i + w_j and |w_i - w_j|. All components are zero-phase cosines,
so coincident product frequencies merge by plain amplitude addition. The
expansion is exact: rendering it reproduces the pointwise square of the
rendered input plus bias.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import ModelConfig
from .consonance import IntervalAssessment, assess_interval
from .graphs import GraphKind, WeightedGraph
from .spectral import Partial, Spectrum, synthesize

# Coincidence tolerance for merging product frequencies, relative to the
# frequency itself; also the input-distinctness limit.
_MERGE_REL_TOL = 1e-9

DEFAULT_BIAS_SWEEP = (0.0, 1.0, 2.5, 4.0, 10.0, 50.0)


@dataclass(frozen=True)
class AmplifierConfig:
    """Bias point and the list of biases a sweep walks through."""

    bias: float = 0.0
    biases_sweep: tuple[float, ...] = DEFAULT_BIAS_SWEEP

    def __post_init__(self) -> None:
        if self.bias < 0:
            raise ValueError("bias must be nonnegative")
        if any(b < 0 for b in self.biases_sweep):
            raise ValueError("sweep biases must be nonnegative")
        if any(b2 <= b1 for b1, b2 in zip(self.biases_sweep, self.biases_sweep[1:])):
            raise ValueError("sweep biases must be strictly ascending")


@dataclass(frozen=True)
class ExpandedSpectrum:
    """Squaring output: a dc level plus deduplicated cosine components."""

    dc: float
    partials: tuple[Partial, ...]

    def __post_init__(self) -> None:
        if self.dc < 0:
            raise ValueError("dc must be nonnegative")
        freqs = [p.frequency for p in self.partials]
        if any(b <= a for a, b in zip(freqs, freqs[1:])):
            raise ValueError("partials must be strictly ascending in frequency")


@dataclass(frozen=True)
class _Term:
    frequency: float
    amplitude: float
    parent: int  # index of the input tone the term is attributed to


def _checked_tones(tones: Sequence[tuple[float, float]]) -> list[tuple[float, float]]:
    if not tones:
        raise ValueError("at least one input tone is required")
    for freq, amp in tones:
        if freq <= 0:
            raise ValueError("tone frequencies must be positive")
        if amp <= 0:
            raise ValueError("tone amplitudes must be positive")
    by_freq = sorted(f for f, _ in tones)
    for f1, f2 in zip(by_freq, by_freq[1:]):
        if f2 - f1 <= _MERGE_REL_TOL * f2:
            raise ValueError(f"duplicate tone frequency {f2}; merge coincident tones upstream")
    return list(tones)


def _product_terms(tones: Sequence[tuple[float, float]], bias: float) -> tuple[float, list[_Term]]:
    """All cosine components of the square, each attributed to the
    lower-frequency tone it stems from, plus the dc level."""
    dc = bias * bias + sum(amp * amp for _, amp in tones) / 2.0
    terms: list[_Term] = []
    for i, (freq, amp) in enumerate(tones):
        if bias > 0:
            terms.append(_Term(freq, 2.0 * bias * amp, i))
        terms.append(_Term(2.0 * freq, amp * amp / 2.0, i))
    for i in range(len(tones)):
        for j in range(i + 1, len(tones)):
            (fi, ai), (fj, aj) = tones[i], tones[j]
            parent = i if fi <= fj else j
            high, low = max(fi, fj), min(fi, fj)
            terms.append(_Term(fi + fj, ai * aj, parent))
            if high - low <= _MERGE_REL_TOL * high:
                dc += ai * aj
            else:
                terms.append(_Term(high - low, ai * aj, parent))
    return dc, terms


def _merge(terms: list[_Term]) -> list[tuple[float, float]]:
    """Sum amplitudes of coincident frequencies; each group keeps its lowest
    frequency as representative."""
    merged: list[tuple[float, float]] = []
    for term in sorted(terms, key=lambda t: t.frequency):
        if merged and term.frequency - merged[-1][0] <= _MERGE_REL_TOL * merged[-1][0]:
            merged[-1] = (merged[-1][0], merged[-1][1] + term.amplitude)
        else:
            merged.append((term.frequency, term.amplitude))
    return merged


def square_expand(tones: Sequence[tuple[float, float]], bias: float) -> ExpandedSpectrum:
    """Exact spectrum of (sum of cosines + bias) squared.

    Input tones must have positive, pairwise distinct frequencies; a
    difference frequency that degenerates to zero folds into dc.
    """
    if bias < 0:
        raise ValueError("bias must be nonnegative")
    checked = _checked_tones(tones)
    dc, terms = _product_terms(checked, bias)
    partials = tuple(
        Partial(frequency=f, magnitude=a, index=k)
        for k, (f, a) in enumerate(_merge(terms), start=1)
    )
    return ExpandedSpectrum(dc=dc, partials=partials)


def render_expanded(expanded: ExpandedSpectrum, duration: float, sample_rate: float) -> np.ndarray:
    """Time-domain waveform of an expanded spectrum (zero-phase cosines)."""
    freqs = [p.frequency for p in expanded.partials]
    mags = [p.magnitude for p in expanded.partials]
    return synthesize(freqs, mags, [0.0] * len(freqs), duration, sample_rate, dc_offset=expanded.dc)


def tone_output_spectra(
    tones: Sequence[tuple[float, float]],
    bias: float,
    config: ModelConfig | None = None,
) -> tuple[Spectrum | None, ...]:
    """Split the squaring output into one spectrum per input tone.

    Every product is attributed to its lower-frequency parent tone, so a tone's
    spectrum holds its own linear and doubled components plus the sum and
    difference products it dominates. Components outside the audible band are
    dropped; a tone whose group empties maps to None.
    """
    if config is None:
        config = ModelConfig()
    checked = _checked_tones(tones)
    _, terms = _product_terms(checked, bias)
    spectra: list[Spectrum | None] = []
    for i, (freq, _) in enumerate(checked):
        mine = [t for t in terms if t.parent == i]
        audible = [
            (f, a)
            for f, a in _merge(mine)
            if config.hearing_min <= f <= config.hearing_max
        ]
        if not audible:
            spectra.append(None)
            continue
        partials = tuple(
            Partial(frequency=f, magnitude=a, index=k)
            for k, (f, a) in enumerate(audible, start=1)
        )
        spectra.append(Spectrum(fundamental=freq, partials=partials))
    return tuple(spectra)


@dataclass(frozen=True)
class SweepEntry:
    """One bias point: expansion, per-tone spectra, pairwise assessments and
    the consonance graph over the input tones (labeled by frequency)."""

    bias: float
    expanded: ExpandedSpectrum
    tone_spectra: tuple[Spectrum | None, ...]
    assessments: tuple[tuple[int, int, IntervalAssessment], ...]
    graph: WeightedGraph


def _sweep_entry(
    tones: Sequence[tuple[float, float]],
    bias: float,
    config: ModelConfig,
) -> SweepEntry:
    expanded = square_expand(tones, bias)
    spectra = tone_output_spectra(tones, bias, config)
    assessments = []
    edges = []
    labels = tuple("%.6f" % f for f, _ in tones)
    for i in range(len(spectra)):
        for j in range(i + 1, len(spectra)):
            if spectra[i] is None or spectra[j] is None:
                continue
            a = assess_interval(spectra[i], spectra[j], config)
            assessments.append((i, j, a))
            if a.is_consonant:
                edges.append((labels[i], labels[j], a.consonance))
    graph = WeightedGraph(nodes=labels, edges=tuple(edges), kind=GraphKind.CONSONANCE)
    return SweepEntry(bias, expanded, spectra, tuple(assessments), graph)


def bias_sweep(
    tones: Sequence[tuple[float, float]],
    amp_config: AmplifierConfig | None = None,
    model_config: ModelConfig | None = None,
) -> tuple[SweepEntry, ...]:
    """Expand and re-assess the input at every bias of the sweep, in order."""
    if amp_config is None:
        amp_config = AmplifierConfig()
    if model_config is None:
        model_config = ModelConfig()
    return tuple(_sweep_entry(tones, bias, model_config) for bias in amp_config.biases_sweep)


def linearity_metric(input_waveform: Sequence[float], output_waveform: Sequence[float]) -> float:
    """Mean-removed normalized cross-correlation at zero lag, in [-1, 1].

    Invariant under affine rescaling of either signal, so a perfectly linear
    amplifier scores exactly 1 regardless of gain or offset.
    """
    x = np.asarray(input_waveform, dtype=np.float64)
    y = np.asarray(output_waveform, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("waveforms must be one-dimensional and equally long")
    x = x - x.mean()
    y = y - y.mean()
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx == 0.0 or ny == 0.0:
        raise ValueError("correlation is undefined for a constant waveform")
    r = float(np.dot(x, y) / (nx * ny))
    return min(1.0, max(-1.0, r))


def default_triad_input(base_frequency: float) -> tuple[tuple[float, float], ...]:
    """Canonical distortion test signal: a just-major root, third and fifth
    with amplitudes 1, 1/3 and 1/5."""
    if base_frequency <= 0:
        raise ValueError("base frequency must be positive")
    return (
        (base_frequency, 1.0),
        (base_frequency * 5.0 / 4.0, 1.0 / 3.0),
        (base_frequency * 3.0 / 2.0, 1.0 / 5.0),
    )
