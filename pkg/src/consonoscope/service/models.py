"""Request and response schemas of the analysis service.

Every response carries the computed summary plus a list of deterministic
file artifacts; clients that only want files can write them out verbatim.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import DEFAULT_BASE_FREQUENCY, DEFAULT_FORMATS, ModelConfig, WeightingMode

ScaleName = Literal["equal", "pythagorean", "just-major", "mean-tone", "werckmeister"]
FormatName = Literal["csv", "json", "dot", "svg", "wav-pcm"]

MEDIA_TYPES = {
    "csv": "text/csv",
    "json": "application/json",
    "dot": "text/vnd.graphviz",
    "svg": "image/svg+xml",
    "wav": "audio/wav",
}


class ConfigOverrides(BaseModel):
    """Optional model-parameter overrides; unset fields keep the defaults."""

    model_config = ConfigDict(extra="forbid")

    partials: int | None = None
    decay: float | None = None
    fc: float | None = None
    fd: float | None = None
    hearing_min: float | None = None
    hearing_max: float | None = None
    cons_threshold: float | None = None
    diss_threshold: float | None = None
    mode: Literal["literal", "proximity"] | None = None

    def resolve(self) -> ModelConfig:
        """Build the effective ModelConfig; invalid combinations raise
        ConfigError naming the offending key."""
        kwargs: dict[str, object] = {}
        for key, fieldname in (
            ("partials", "max_partials"),
            ("decay", "decay_rate"),
            ("fc", "f_c"),
            ("fd", "f_d"),
            ("hearing_min", "hearing_min"),
            ("hearing_max", "hearing_max"),
            ("cons_threshold", "consonance_threshold"),
            ("diss_threshold", "dissonance_threshold"),
        ):
            value = getattr(self, key)
            if value is not None:
                kwargs[fieldname] = value
        if self.mode is not None:
            kwargs["weighting_mode"] = WeightingMode(self.mode)
        return ModelConfig(**kwargs)  # type: ignore[arg-type]


class FileArtifact(BaseModel):
    """One output file: text content or base64-encoded binary content."""

    name: str
    media_type: str
    text: str | None = None
    base64: str | None = None

    @model_validator(mode="after")
    def _exactly_one_body(self) -> "FileArtifact":
        if (self.text is None) == (self.base64 is None):
            raise ValueError("exactly one of text or base64 must be set")
        return self


class IntervalRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f1: float = Field(gt=0)
    f2: float = Field(gt=0)
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class IntervalResponse(BaseModel):
    f1: float
    f2: float
    cents: float
    consonance: float
    dissonance: float
    is_consonant: bool
    is_dissonant: bool
    files: list[FileArtifact]


class ScaleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: ScaleName = "equal"
    base_frequency: float = Field(default=DEFAULT_BASE_FREQUENCY, gt=0)
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class ScaleResponse(BaseModel):
    kind: str
    base_frequency: float
    consonant_pairs: int
    dissonant_pairs: int
    files: list[FileArtifact]


class GraphsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: ScaleName = "equal"
    base_frequency: float = Field(default=DEFAULT_BASE_FREQUENCY, gt=0)
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class GraphsResponse(BaseModel):
    kind: str
    base_frequency: float
    consonance_edges: int
    dissonance_edges: int
    consonance_weight: float
    dissonance_weight: float
    files: list[FileArtifact]


class TriadsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    base_frequency: float = Field(default=DEFAULT_BASE_FREQUENCY, gt=0)
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class TriadsResponse(BaseModel):
    base_frequency: float
    triad_count: int
    files: list[FileArtifact]


class BeatsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f1: float = Field(gt=0)
    f2: float = Field(gt=0)
    duration: float = Field(default=1.0, gt=0, le=30)
    sample_rate: int = Field(default=44100, ge=1000, le=192000)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class BeatsResponse(BaseModel):
    f1: float
    f2: float
    beat_frequency: float
    perceptual_class: str
    files: list[FileArtifact]


class AmpRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    base_frequency: float = Field(default=DEFAULT_BASE_FREQUENCY, gt=0)
    biases: tuple[float, ...] | None = None
    duration: float = Field(default=1.0, gt=0, le=30)
    sample_rate: int = Field(default=44100, ge=1000, le=192000)
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class AmpResponse(BaseModel):
    base_frequency: float
    biases: list[float]
    linearity: list[float]
    files: list[FileArtifact]


class DecayRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    formats: tuple[FormatName, ...] = DEFAULT_FORMATS


class DecayResponse(BaseModel):
    partials: int
    decay_rate: float
    files: list[FileArtifact]
