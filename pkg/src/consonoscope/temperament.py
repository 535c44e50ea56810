"""Tuning systems: the five supported temperaments and the classical interval table.

Each temperament assigns 13 pitches (C through the C one octave up) as exact
ratio tables over a configurable base frequency. All five systems close the
octave at ratio 2.

Ratio tables
------------
equal         2^(k/12) for k = 0..12
pythagorean   3-limit chromatic scale with the 729/512 tritone
just-major    5-limit major scale with 9/5 minor seventh
mean-tone     quarter-comma meantone: fifths of 5^(1/4), chain Eb..G#
              (the leftover wolf fifth falls on G#-Eb)
werckmeister  Werckmeister III: the fifths C-G, G-D, D-A and B-F# are each
              narrowed by a quarter of the Pythagorean comma, the rest pure
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class ScaleKind(Enum):
    EQUAL = "equal"
    PYTHAGOREAN = "pythagorean"
    JUST_MAJOR = "just-major"
    MEAN_TONE = "mean-tone"
    WERCKMEISTER = "werckmeister"


PITCH_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B", "C2")

PYTHAGOREAN_RATIOS = (
    Fraction(1),
    Fraction(256, 243),
    Fraction(9, 8),
    Fraction(32, 27),
    Fraction(81, 64),
    Fraction(4, 3),
    Fraction(729, 512),
    Fraction(3, 2),
    Fraction(128, 81),
    Fraction(27, 16),
    Fraction(16, 9),
    Fraction(243, 128),
    Fraction(2),
)

JUST_MAJOR_RATIOS = (
    Fraction(1),
    Fraction(16, 15),
    Fraction(9, 8),
    Fraction(6, 5),
    Fraction(5, 4),
    Fraction(4, 3),
    Fraction(45, 32),
    Fraction(3, 2),
    Fraction(8, 5),
    Fraction(5, 3),
    Fraction(9, 5),
    Fraction(15, 8),
    Fraction(2),
)


def _fold_octave(x: float) -> float:
    while x >= 2.0:
        x /= 2.0
    while x < 1.0:
        x *= 2.0
    return x


def _mean_tone_ratios() -> tuple[float, ...]:
    # Chromatic positions as fifths up (+) or down (-) from C; folding the
    # 5^(1/4) fifth into one octave yields the standard quarter-comma table.
    fifth = 5.0 ** 0.25
    chain = {0: 0, 1: 7, 2: 2, 3: -3, 4: 4, 5: -1, 6: 6, 7: 1, 8: 8, 9: 3, 10: -2, 11: 5}
    ratios = [_fold_octave(fifth ** chain[k]) for k in range(12)]
    return tuple(ratios) + (2.0,)


def _werckmeister_ratios() -> tuple[float, ...]:
    r2 = 2.0 ** 0.5
    r4 = 2.0 ** 0.25
    r34 = 2.0 ** 0.75
    return (
        1.0,
        256.0 / 243.0,
        64.0 * r2 / 81.0,
        32.0 / 27.0,
        256.0 * r4 / 243.0,
        4.0 / 3.0,
        1024.0 / 729.0,
        8.0 * r34 / 9.0,
        128.0 / 81.0,
        1024.0 * r4 / 729.0,
        16.0 / 9.0,
        128.0 * r4 / 81.0,
        2.0,
    )


_RATIO_TABLES: dict[ScaleKind, tuple[float, ...]] = {
    ScaleKind.EQUAL: tuple(2.0 ** (k / 12.0) for k in range(12)) + (2.0,),
    ScaleKind.PYTHAGOREAN: tuple(float(r) for r in PYTHAGOREAN_RATIOS),
    ScaleKind.JUST_MAJOR: tuple(float(r) for r in JUST_MAJOR_RATIOS),
    ScaleKind.MEAN_TONE: _mean_tone_ratios(),
    ScaleKind.WERCKMEISTER: _werckmeister_ratios(),
}


@dataclass(frozen=True)
class Scale:
    """A named temperament realized over one octave: 13 pitches, C to C2."""

    kind: ScaleKind
    base_frequency: float
    pitch_names: tuple[str, ...]
    frequencies: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.base_frequency <= 0:
            raise ValueError("base frequency must be positive")
        if len(self.pitch_names) != 13 or len(self.frequencies) != 13:
            raise ValueError("a scale has exactly 13 pitches")
        if any(b <= a for a, b in zip(self.frequencies, self.frequencies[1:])):
            raise ValueError("scale frequencies must be strictly ascending")


def scale_ratios(kind: ScaleKind) -> tuple[float, ...]:
    """The 13 pitch ratios of a temperament relative to its base."""
    return _RATIO_TABLES[kind]


def build_scale(kind: ScaleKind, base_frequency: float) -> Scale:
    """Realize a temperament at a base frequency (the pitch of C)."""
    if not isinstance(kind, ScaleKind):
        raise ValueError(f"unknown scale kind: {kind!r}")
    if base_frequency <= 0:
        raise ValueError("base frequency must be positive")
    freqs = tuple(base_frequency * r for r in _RATIO_TABLES[kind])
    return Scale(kind=kind, base_frequency=base_frequency, pitch_names=PITCH_NAMES, frequencies=freqs)


def pitch_frequency(scale: Scale, index: int, octave_shift: int = 0) -> float:
    """Frequency of pitch ``index`` (0..12) shifted by whole octaves."""
    if not 0 <= index <= 12:
        raise ValueError(f"pitch index out of range: {index}")
    return scale.frequencies[index] * 2.0 ** octave_shift


class ConsonanceClass(Enum):
    ABSOLUTE = "absolute"
    PERFECT = "perfect"
    MEDIUM = "medium"
    IMPERFECT = "imperfect"
    DISSONANT = "dissonant"


@dataclass(frozen=True)
class ReferenceInterval:
    """A classical interval with its just ratio (ascending form) and class."""

    name: str
    just_ratio: Fraction
    consonance_class: ConsonanceClass


_REFERENCE_INTERVALS = (
    ReferenceInterval("unison", Fraction(1, 1), ConsonanceClass.ABSOLUTE),
    ReferenceInterval("perfect octave", Fraction(2, 1), ConsonanceClass.ABSOLUTE),
    ReferenceInterval("fifth", Fraction(3, 2), ConsonanceClass.PERFECT),
    ReferenceInterval("fourth", Fraction(4, 3), ConsonanceClass.MEDIUM),
    ReferenceInterval("major sixth", Fraction(5, 3), ConsonanceClass.MEDIUM),
    ReferenceInterval("major third", Fraction(5, 4), ConsonanceClass.MEDIUM),
    ReferenceInterval("minor third", Fraction(6, 5), ConsonanceClass.IMPERFECT),
    ReferenceInterval("minor sixth", Fraction(8, 5), ConsonanceClass.IMPERFECT),
    ReferenceInterval("major second", Fraction(9, 8), ConsonanceClass.DISSONANT),
    ReferenceInterval("major seventh", Fraction(15, 8), ConsonanceClass.DISSONANT),
    ReferenceInterval("minor seventh", Fraction(16, 9), ConsonanceClass.DISSONANT),
    ReferenceInterval("minor second", Fraction(16, 15), ConsonanceClass.DISSONANT),
    ReferenceInterval("tritone", Fraction(45, 32), ConsonanceClass.DISSONANT),
)


def reference_intervals() -> tuple[ReferenceInterval, ...]:
    """The classical interval table used for sanity checks and documentation."""
    return _REFERENCE_INTERVALS


def interval_cents(interval: ReferenceInterval) -> float:
    """Cents of a reference interval, recomputed from its ratio."""
    return 1200.0 * math.log2(float(interval.just_ratio))
