"""Consonance and dissonance analysis of harmonic tone pairs, musical
temperaments and quadratically distorted signals."""

from .amplifier import (
    AmplifierConfig,
    ExpandedSpectrum,
    SweepEntry,
    bias_sweep,
    default_triad_input,
    linearity_metric,
    render_expanded,
    square_expand,
    tone_output_spectra,
)
from .config import (
    ConfigError,
    ModelConfig,
    RunConfig,
    WeightingMode,
    apply_overrides,
    load_config,
    parse_config_text,
)
from .consonance import (
    IntervalAssessment,
    MatchBand,
    MatchResult,
    PartialMatch,
    assess_interval,
    match_partials,
)
from .graphs import (
    GraphKind,
    ScaleAnalysis,
    TemperamentEntry,
    TemperamentReport,
    TriadAssessment,
    TriadQuality,
    WeightedGraph,
    build_graph,
    export_graph,
    export_matrix_csv,
    parse_graph_dot,
    parse_graph_json,
    parse_matrix_csv,
    scale_matrix,
    temperament_report,
    total_edge_weight,
    triad_assessment,
    triad_report_csv,
    triad_report_json,
)
from .pcm import wav_bytes
from .spectral import (
    EmptySpectrumError,
    Partial,
    PerceptualClass,
    PhasorComponent,
    Spectrum,
    cents,
    classify_gap,
    harmonic_spectrum,
    partial_magnitude,
    phasor_sum,
    render_waveform,
    synthesize,
    wrap_phase,
)
from .temperament import (
    ConsonanceClass,
    ReferenceInterval,
    Scale,
    ScaleKind,
    build_scale,
    interval_cents,
    pitch_frequency,
    reference_intervals,
    scale_ratios,
)

__all__ = [
    "AmplifierConfig",
    "ConfigError",
    "ConsonanceClass",
    "EmptySpectrumError",
    "ExpandedSpectrum",
    "GraphKind",
    "IntervalAssessment",
    "MatchBand",
    "MatchResult",
    "ModelConfig",
    "Partial",
    "PartialMatch",
    "PerceptualClass",
    "PhasorComponent",
    "ReferenceInterval",
    "RunConfig",
    "Scale",
    "ScaleAnalysis",
    "ScaleKind",
    "Spectrum",
    "SweepEntry",
    "TemperamentEntry",
    "TemperamentReport",
    "TriadAssessment",
    "TriadQuality",
    "WeightedGraph",
    "WeightingMode",
    "apply_overrides",
    "assess_interval",
    "bias_sweep",
    "build_graph",
    "build_scale",
    "cents",
    "classify_gap",
    "default_triad_input",
    "export_graph",
    "export_matrix_csv",
    "harmonic_spectrum",
    "interval_cents",
    "linearity_metric",
    "load_config",
    "match_partials",
    "parse_config_text",
    "parse_graph_dot",
    "parse_graph_json",
    "parse_matrix_csv",
    "partial_magnitude",
    "phasor_sum",
    "pitch_frequency",
    "reference_intervals",
    "render_expanded",
    "render_waveform",
    "scale_matrix",
    "scale_ratios",
    "square_expand",
    "synthesize",
    "temperament_report",
    "tone_output_spectra",
    "total_edge_weight",
    "triad_assessment",
    "triad_report_csv",
    "triad_report_json",
    "wav_bytes",
    "wrap_phase",
]
