"""Signal fundamentals: cents, phasor addition, beat-gap classification,
harmonic spectrum synthesis with exponential magnitude decay, and rendering.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .config import ModelConfig

# A phasor sum whose magnitude falls below this fraction of the total input
# amplitude is treated as full cancellation (amplitude 0, phase 0).
_CANCELLATION_EPS = 1e-12


class EmptySpectrumError(ValueError):
    """No partial of the requested spectrum falls inside the audible band."""


class PerceptualClass(Enum):
    """How a frequency gap between two near tones is heard."""

    TUNED = "tuned"
    SLOW_BEAT = "slow_beat"
    ROUGH = "rough"
    SEPARATE_TONES = "separate_tones"


def wrap_phase(phase: float) -> float:
    """Normalize an angle in radians into (-pi, pi]."""
    r = math.remainder(phase, math.tau)
    return r if r > -math.pi else math.pi


@dataclass(frozen=True)
class PhasorComponent:
    """Amplitude and phase of one cosine at a shared frequency."""

    amplitude: float
    phase: float

    def __post_init__(self) -> None:
        if self.amplitude < 0:
            raise ValueError("phasor amplitude must be nonnegative")
        object.__setattr__(self, "phase", wrap_phase(self.phase))


@dataclass(frozen=True)
class Partial:
    """One spectral component: frequency, linear magnitude, 1-based index."""

    frequency: float
    magnitude: float
    index: int

    def __post_init__(self) -> None:
        if self.frequency <= 0:
            raise ValueError("partial frequency must be positive")
        if self.magnitude < 0:
            raise ValueError("partial magnitude must be nonnegative")
        if self.index < 1:
            raise ValueError("partial index is 1-based")


@dataclass(frozen=True)
class Spectrum:
    """An ordered set of partials over a fundamental; the unit of comparison."""

    fundamental: float
    partials: tuple[Partial, ...]

    def __post_init__(self) -> None:
        if self.fundamental <= 0:
            raise ValueError("fundamental must be positive")
        if not self.partials:
            raise ValueError("spectrum must contain at least one partial")
        freqs = [p.frequency for p in self.partials]
        if any(b <= a for a, b in zip(freqs, freqs[1:])):
            raise ValueError("partials must be strictly ascending in frequency")

    @property
    def frequencies(self) -> np.ndarray:
        return np.array([p.frequency for p in self.partials])

    @property
    def magnitudes(self) -> np.ndarray:
        return np.array([p.magnitude for p in self.partials])


def cents(f_low: float, f_high: float) -> float:
    """Interval size in cents; 1200 per octave, antisymmetric under swap."""
    if f_low <= 0 or f_high <= 0:
        raise ValueError("frequencies must be positive")
    return 1200.0 * math.log2(f_high / f_low)


def phasor_sum(components: Sequence[PhasorComponent]) -> PhasorComponent:
    """Combine same-frequency cosines into the single equivalent cosine.

    The components are added as vectors in the complex plane; the result
    satisfies sum(a_i*cos(w*t + p_i)) == a*cos(w*t + p) for all t. A fully
    cancelled sum reports amplitude 0 with phase 0 by convention.
    """
    if not components:
        raise ValueError("phasor_sum requires at least one component")
    x = sum(c.amplitude * math.cos(c.phase) for c in components)
    y = sum(c.amplitude * math.sin(c.phase) for c in components)
    amplitude = math.hypot(x, y)
    scale = sum(c.amplitude for c in components)
    if amplitude <= _CANCELLATION_EPS * scale:
        return PhasorComponent(0.0, 0.0)
    return PhasorComponent(amplitude, math.atan2(y, x))


def classify_gap(delta_f: float) -> PerceptualClass:
    """Perceptual class of a nonnegative frequency gap in Hz.

    Bands are half-open: [0, 2) tuned, [2, 10) slow beating, [10, 60) rough,
    and 60 Hz upward is heard as two separate tones.
    """
    if delta_f < 0:
        raise ValueError("frequency gap must be nonnegative")
    if delta_f < 2.0:
        return PerceptualClass.TUNED
    if delta_f < 10.0:
        return PerceptualClass.SLOW_BEAT
    if delta_f < 60.0:
        return PerceptualClass.ROUGH
    return PerceptualClass.SEPARATE_TONES


def partial_magnitude(index: int, config: ModelConfig) -> float:
    """Magnitude of harmonic ``index``: exp(-decay_rate*(index-1)), so the
    fundamental always has unit magnitude."""
    return math.exp(-config.decay_rate * (index - 1))


def harmonic_spectrum(f0: float, config: ModelConfig | None = None) -> Spectrum:
    """Harmonic spectrum of a fundamental with exponentially decaying partials.

    Partials sit at exact integer multiples of the fundamental; those outside
    the configured audible band are dropped after generation, without
    rescaling the survivors.
    """
    if config is None:
        config = ModelConfig()
    if f0 <= 0:
        raise ValueError("fundamental must be positive")
    partials = []
    for i in range(1, config.max_partials + 1):
        freq = i * f0
        if config.hearing_min <= freq <= config.hearing_max:
            partials.append(Partial(frequency=freq, magnitude=partial_magnitude(i, config), index=i))
    if not partials:
        raise EmptySpectrumError(
            f"no harmonic of {f0} Hz falls within [{config.hearing_min}, {config.hearing_max}] Hz"
        )
    return Spectrum(fundamental=f0, partials=tuple(partials))


def synthesize(
    frequencies: Sequence[float],
    magnitudes: Sequence[float],
    phases: Sequence[float],
    duration: float,
    sample_rate: float,
    dc_offset: float = 0.0,
) -> np.ndarray:
    """Sum of cosines sampled on a uniform grid.

    sample[k] = dc_offset + sum_i m_i * cos(2*pi*f_i*(k/sample_rate) + p_i)
    """
    if duration <= 0:
        raise ValueError("duration must be positive")
    if sample_rate <= 0:
        raise ValueError("sample rate must be positive")
    freqs = np.asarray(frequencies, dtype=np.float64)
    mags = np.asarray(magnitudes, dtype=np.float64)
    phs = np.asarray(phases, dtype=np.float64)
    if not (freqs.shape == mags.shape == phs.shape):
        raise ValueError("frequencies, magnitudes and phases must have equal lengths")
    if freqs.size and sample_rate <= 2.0 * float(freqs.max()):
        warnings.warn(
            f"sample rate {sample_rate} Hz is at or below twice the highest "
            f"partial ({float(freqs.max())} Hz); rendering will alias",
            stacklevel=2,
        )
    n = int(round(duration * sample_rate))
    t = np.arange(n, dtype=np.float64) / sample_rate
    out = np.full(n, float(dc_offset), dtype=np.float64)
    for f, m, p in zip(freqs, mags, phs):
        out += m * np.cos(2.0 * math.pi * f * t + p)
    return out


def render_waveform(
    spectra: Iterable["Spectrum | tuple[Spectrum, float | Sequence[float]]"],
    duration: float,
    sample_rate: float,
    dc_offset: float = 0.0,
) -> np.ndarray:
    """Render spectra (optionally with phase offsets) to a sample buffer.

    Each item is a Spectrum or a (Spectrum, phase) pair, where phase is a
    scalar applied to every partial or a per-partial sequence.
    """
    freqs: list[float] = []
    mags: list[float] = []
    phases: list[float] = []
    for item in spectra:
        if isinstance(item, Spectrum):
            spectrum, phase = item, 0.0
        else:
            spectrum, phase = item
        ps = spectrum.partials
        if np.isscalar(phase):
            per_partial = [float(phase)] * len(ps)
        else:
            per_partial = [float(p) for p in phase]  # type: ignore[union-attr]
            if len(per_partial) != len(ps):
                raise ValueError("per-partial phase list must match the partial count")
        for p, ph in zip(ps, per_partial):
            freqs.append(p.frequency)
            mags.append(p.magnitude)
            phases.append(ph)
    return synthesize(freqs, mags, phases, duration, sample_rate, dc_offset)
