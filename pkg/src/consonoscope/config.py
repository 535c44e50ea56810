"""Model parameters and run configuration, including the key=value config file format."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

from .temperament import ScaleKind


class WeightingMode(Enum):
    """How a matched partial pair is weighted when accumulating scores.

    LITERAL weights each pair by its frequency gap, so a perfectly aligned
    pair contributes nothing. PROXIMITY weights by closeness to perfect
    alignment (1 at zero gap, falling to 0 at the band edge), which makes
    aligned spectra score highest and is the default.
    """

    LITERAL = "literal"
    PROXIMITY = "proximity"


class ConfigError(ValueError):
    """Invalid configuration value; message names the offending key."""


@dataclass(frozen=True)
class ModelConfig:
    """Parameters of the consonance/dissonance model."""

    max_partials: int = 50
    decay_rate: float = 0.08
    f_c: float = 10.0
    f_d: float = 60.0
    hearing_min: float = 20.0
    hearing_max: float = 20000.0
    consonance_threshold: float = 5.0
    dissonance_threshold: float = 4.0
    weighting_mode: WeightingMode = WeightingMode.PROXIMITY

    def __post_init__(self) -> None:
        if self.max_partials < 1:
            raise ConfigError("partials: must be at least 1")
        if self.decay_rate <= 0:
            raise ConfigError("decay: must be positive")
        if self.f_c <= 0:
            raise ConfigError("fc: must be positive")
        if self.f_d <= self.f_c:
            raise ConfigError("fd: must exceed fc")
        if self.hearing_min < 0:
            raise ConfigError("hearing_min: must be nonnegative")
        if self.hearing_max <= self.hearing_min:
            raise ConfigError("hearing_max: must exceed hearing_min")


OUTPUT_FORMATS = ("csv", "json", "dot", "svg", "wav-pcm")
DEFAULT_FORMATS = ("csv", "json", "dot", "svg")
DEFAULT_BASE_FREQUENCY = 261.6256  # central C derived from A440 equal temperament

OUT_DIR_ENV_VAR = "CONSONOSCOPE_OUT"


@dataclass(frozen=True)
class RunConfig:
    """Effective configuration of one CLI or service run."""

    model: ModelConfig = field(default_factory=ModelConfig)
    scale_kind: ScaleKind | None = None
    base_frequency: float = DEFAULT_BASE_FREQUENCY
    out_dir: str = ""
    formats: tuple[str, ...] = DEFAULT_FORMATS

    def __post_init__(self) -> None:
        if self.base_frequency <= 0:
            raise ConfigError("base_freq: must be positive")
        if not self.formats:
            raise ConfigError("format: at least one output format is required")
        for f in self.formats:
            if f not in OUTPUT_FORMATS:
                raise ConfigError(
                    f"format: unknown format {f!r} (expected one of {', '.join(OUTPUT_FORMATS)})"
                )

    def resolve_out_dir(self) -> str:
        """Output directory with the environment fallback applied."""
        if self.out_dir:
            return self.out_dir
        return os.environ.get(OUT_DIR_ENV_VAR, "") or "out"


# Keys accepted in config files, mapped to RunConfig/ModelConfig fields.
_MODEL_KEYS = {
    "partials": ("max_partials", int),
    "decay": ("decay_rate", float),
    "fc": ("f_c", float),
    "fd": ("f_d", float),
    "hearing_min": ("hearing_min", float),
    "hearing_max": ("hearing_max", float),
    "cons_threshold": ("consonance_threshold", float),
    "diss_threshold": ("dissonance_threshold", float),
}


def _parse_mode(value: str, key: str) -> WeightingMode:
    try:
        return WeightingMode(value.strip().lower())
    except ValueError:
        raise ConfigError(f"{key}: expected 'literal' or 'proximity', got {value!r}") from None


def _parse_scale_kind(value: str, key: str) -> ScaleKind:
    token = value.strip().lower().replace("_", "-")
    try:
        return ScaleKind(token)
    except ValueError:
        choices = ", ".join(k.value for k in ScaleKind)
        raise ConfigError(f"{key}: unknown scale kind {value!r} (expected one of {choices})") from None


def parse_formats(value: str, key: str = "format") -> tuple[str, ...]:
    formats = tuple(tok.strip() for tok in value.split(",") if tok.strip())
    if not formats:
        raise ConfigError(f"{key}: at least one output format is required")
    for f in formats:
        if f not in OUTPUT_FORMATS:
            raise ConfigError(
                f"{key}: unknown format {f!r} (expected one of {', '.join(OUTPUT_FORMATS)})"
            )
    return formats


def parse_config_text(text: str, source: str = "<config>") -> RunConfig:
    """Parse the ``key = value`` config format into a RunConfig over defaults.

    Lines are ``key = value``; blank lines and ``#`` comments are ignored.
    Unknown keys are rejected.
    """
    model_kwargs: dict[str, object] = {}
    run_kwargs: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        value = value.strip()
        if key in _MODEL_KEYS:
            fieldname, cast = _MODEL_KEYS[key]
            try:
                model_kwargs[fieldname] = cast(value)
            except ValueError:
                raise ConfigError(f"{key}: invalid value {value!r}") from None
        elif key == "mode":
            model_kwargs["weighting_mode"] = _parse_mode(value, key)
        elif key == "base_freq":
            try:
                run_kwargs["base_frequency"] = float(value)
            except ValueError:
                raise ConfigError(f"{key}: invalid value {value!r}") from None
        elif key == "out":
            run_kwargs["out_dir"] = value
        elif key == "format":
            run_kwargs["formats"] = parse_formats(value, key)
        elif key == "scale":
            run_kwargs["scale_kind"] = _parse_scale_kind(value, key)
        else:
            raise ConfigError(f"{key}: unknown configuration key")
    model = ModelConfig(**model_kwargs)  # type: ignore[arg-type]
    return RunConfig(model=model, **run_kwargs)  # type: ignore[arg-type]


def load_config(path: str | Path) -> RunConfig:
    """Read a config file and return the resulting RunConfig."""
    return parse_config_text(Path(path).read_text(encoding="utf-8"), source=str(path))


def apply_overrides(base: RunConfig, **overrides: object) -> RunConfig:
    """Overlay non-None override values (flag level) onto an existing RunConfig.

    Model field overrides use the ModelConfig field names; run-level overrides
    use RunConfig field names. Values must already be typed.
    """
    model_fields = {f: v for f, v in overrides.items() if f in ModelConfig.__dataclass_fields__}
    run_fields = {f: v for f, v in overrides.items() if f in RunConfig.__dataclass_fields__}
    unknown = set(overrides) - set(model_fields) - set(run_fields)
    if unknown:
        raise ConfigError(f"unknown override keys: {sorted(unknown)}")
    model = replace(base.model, **{k: v for k, v in model_fields.items() if v is not None})
    run = replace(base, model=model, **{k: v for k, v in run_fields.items() if v is not None})
    return run
