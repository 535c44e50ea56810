"""Pure request-to-response handlers; every endpoint and CLI subcommand
funnels through these.

Handlers compute with the core library and package the results as
deterministic file artifacts. They raise ConfigError for unusable parameter
combinations and plain ValueError for computation failures, and never touch
the filesystem or network.
"""

from __future__ import annotations

import base64 as b64
import json

import numpy as np

from ..amplifier import AmplifierConfig, bias_sweep, default_triad_input, linearity_metric, render_expanded
from ..config import ConfigError, ModelConfig
from ..consonance import MatchBand, assess_interval
from ..graphs import (
    GraphKind,
    ScaleAnalysis,
    build_graph,
    export_graph,
    export_matrix_csv,
    scale_matrix,
    temperament_report,
    total_edge_weight,
    triad_report_csv,
    triad_report_json,
)
from ..pcm import wav_bytes
from ..spectral import cents, classify_gap, harmonic_spectrum, partial_magnitude, synthesize
from ..svgplot import bipartite_panel, line_plot
from ..temperament import ScaleKind, build_scale
from .models import (
    MEDIA_TYPES,
    AmpRequest,
    AmpResponse,
    BeatsRequest,
    BeatsResponse,
    DecayRequest,
    DecayResponse,
    FileArtifact,
    GraphsRequest,
    GraphsResponse,
    IntervalRequest,
    IntervalResponse,
    ScaleRequest,
    ScaleResponse,
    TriadsRequest,
    TriadsResponse,
)

# Plot window for distorted-waveform artifacts; long enough for several
# periods of a low fundamental, short enough to keep SVGs readable.
_AMP_PLOT_SECONDS = 0.05

# Polyline plots decimate to roughly this many points.
_MAX_PLOT_POINTS = 4000


def _fmt(value: float) -> str:
    return "%.6f" % (value + 0.0)


def _jbool(value: bool) -> str:
    return "true" if value else "false"


def _text_file(name: str, kind: str, content: str) -> FileArtifact:
    return FileArtifact(name=name, media_type=MEDIA_TYPES[kind], text=content)


def _wav_file(name: str, data: bytes) -> FileArtifact:
    return FileArtifact(name=name, media_type=MEDIA_TYPES["wav"], base64=b64.b64encode(data).decode("ascii"))


def _require_files(files: list[FileArtifact], command: str, formats: tuple[str, ...]) -> list[FileArtifact]:
    if not files:
        raise ConfigError(
            f"format: none of {', '.join(formats)} applies to '{command}' "
            "(it would emit no files)"
        )
    return files


def _waveform_csv(samples: np.ndarray, sample_rate: int) -> str:
    lines = ["time_s,amplitude"]
    for i, v in enumerate(samples):
        lines.append(f"{_fmt(i / sample_rate)},{_fmt(float(v))}")
    return "\n".join(lines) + "\n"


def _waveform_svg(samples: np.ndarray, sample_rate: int, title: str) -> str:
    stride = max(1, len(samples) // _MAX_PLOT_POINTS)
    xs = [i / sample_rate for i in range(0, len(samples), stride)]
    ys = [float(samples[i]) for i in range(0, len(samples), stride)]
    return line_plot(xs, ys, title, "time [s]", "amplitude")


def handle_interval(req: IntervalRequest) -> IntervalResponse:
    """Assess one tone pair and emit the assessment as a JSON artifact."""
    config = req.overrides.resolve()
    a = harmonic_spectrum(req.f1, config)
    b = harmonic_spectrum(req.f2, config)
    assessment = assess_interval(a, b, config)
    low, high = sorted((req.f1, req.f2))
    interval_cents = cents(low, high)
    counts = {band: 0 for band in MatchBand}
    for m in assessment.matches:
        counts[m.band] += 1
    files: list[FileArtifact] = []
    if "json" in req.formats:
        text = (
            '{"cents":%s,"consonance":%s,"dissonance":%s,"f1":%s,"f2":%s,'
            '"is_consonant":%s,"is_dissonant":%s,'
            '"matches":{"consonant":%d,"dissonant":%d,"neutral":%d},"mode":%s}\n'
            % (
                _fmt(interval_cents),
                _fmt(assessment.consonance),
                _fmt(assessment.dissonance),
                _fmt(req.f1),
                _fmt(req.f2),
                _jbool(assessment.is_consonant),
                _jbool(assessment.is_dissonant),
                counts[MatchBand.CONSONANT],
                counts[MatchBand.DISSONANT],
                counts[MatchBand.NEUTRAL],
                json.dumps(config.weighting_mode.value),
            )
        )
        files.append(_text_file("interval.json", "json", text))
    return IntervalResponse(
        f1=req.f1,
        f2=req.f2,
        cents=interval_cents,
        consonance=assessment.consonance,
        dissonance=assessment.dissonance,
        is_consonant=assessment.is_consonant,
        is_dissonant=assessment.is_dissonant,
        files=_require_files(files, "interval", req.formats),
    )


def _flagged_pairs(analysis: ScaleAnalysis, kind: GraphKind) -> list[tuple[int, int, float]]:
    if kind is GraphKind.CONSONANCE:
        matrix, flags = analysis.consonance_matrix, analysis.consonant_flags
    else:
        matrix, flags = analysis.dissonance_matrix, analysis.dissonant_flags
    n = len(analysis.scale.pitch_names)
    return [
        (i, j, float(matrix[i, j]))
        for i in range(n)
        for j in range(i + 1, n)
        if flags[i, j]
    ]


def handle_scale(req: ScaleRequest) -> ScaleResponse:
    """Full pairwise analysis of one scale: matrices, bipartite panel, graphs."""
    config = req.overrides.resolve()
    kind = ScaleKind(req.kind)
    scale = build_scale(kind, req.base_frequency)
    analysis = scale_matrix(scale, config)
    stem = f"scale_{kind.value.replace('-', '_')}"
    cons_pairs = _flagged_pairs(analysis, GraphKind.CONSONANCE)
    diss_pairs = _flagged_pairs(analysis, GraphKind.DISSONANCE)

    files: list[FileArtifact] = []
    if "csv" in req.formats:
        files.append(_text_file(f"{stem}_matrix.csv", "csv", export_matrix_csv(analysis)))
    if "svg" in req.formats:
        panel = bipartite_panel(
            scale.pitch_names,
            cons_pairs,
            diss_pairs,
            f"{kind.value} temperament at {_fmt(req.base_frequency)} Hz",
        )
        files.append(_text_file(f"{stem}_bipartite.svg", "svg", panel))
    for graph_kind in (GraphKind.CONSONANCE, GraphKind.DISSONANCE):
        graph = build_graph(analysis, graph_kind)
        if "dot" in req.formats:
            files.append(_text_file(f"{stem}_{graph_kind.value}.dot", "dot", export_graph(graph, "dot")))
        if "json" in req.formats:
            files.append(_text_file(f"{stem}_{graph_kind.value}.json", "json", export_graph(graph, "json")))
    return ScaleResponse(
        kind=kind.value,
        base_frequency=req.base_frequency,
        consonant_pairs=len(cons_pairs),
        dissonant_pairs=len(diss_pairs),
        files=_require_files(files, "scale", req.formats),
    )


def handle_graphs(req: GraphsRequest) -> GraphsResponse:
    """Consonance and dissonance graphs of one scale as DOT/JSON."""
    config = req.overrides.resolve()
    kind = ScaleKind(req.kind)
    analysis = scale_matrix(build_scale(kind, req.base_frequency), config)
    cons_graph = build_graph(analysis, GraphKind.CONSONANCE)
    diss_graph = build_graph(analysis, GraphKind.DISSONANCE)
    stem = f"graph_{kind.value.replace('-', '_')}"
    files: list[FileArtifact] = []
    for graph in (cons_graph, diss_graph):
        if "dot" in req.formats:
            files.append(_text_file(f"{stem}_{graph.kind.value}.dot", "dot", export_graph(graph, "dot")))
        if "json" in req.formats:
            files.append(_text_file(f"{stem}_{graph.kind.value}.json", "json", export_graph(graph, "json")))
    return GraphsResponse(
        kind=kind.value,
        base_frequency=req.base_frequency,
        consonance_edges=len(cons_graph.edges),
        dissonance_edges=len(diss_graph.edges),
        consonance_weight=total_edge_weight(cons_graph),
        dissonance_weight=total_edge_weight(diss_graph),
        files=_require_files(files, "graphs", req.formats),
    )


def handle_triads(req: TriadsRequest) -> TriadsResponse:
    """Minor and major triads on all roots across the five temperaments."""
    config = req.overrides.resolve()
    report = temperament_report(req.base_frequency, config)
    files: list[FileArtifact] = []
    if "csv" in req.formats:
        files.append(_text_file("triads.csv", "csv", triad_report_csv(report)))
    if "json" in req.formats:
        files.append(_text_file("triads.json", "json", triad_report_json(report)))
    count = sum(len(entry.triads) for entry in report.entries)
    return TriadsResponse(
        base_frequency=req.base_frequency,
        triad_count=count,
        files=_require_files(files, "triads", req.formats),
    )


def handle_beats(req: BeatsRequest) -> BeatsResponse:
    """Render the superposition of two unit pure tones and classify the gap."""
    wave = synthesize([req.f1, req.f2], [1.0, 1.0], [0.0, 0.0], req.duration, req.sample_rate)
    gap = abs(req.f2 - req.f1)
    perceptual = classify_gap(gap)
    files: list[FileArtifact] = []
    if "csv" in req.formats:
        files.append(_text_file("beats.csv", "csv", _waveform_csv(wave, req.sample_rate)))
    if "svg" in req.formats:
        title = f"{_fmt(req.f1)} Hz + {_fmt(req.f2)} Hz"
        files.append(_text_file("beats.svg", "svg", _waveform_svg(wave, req.sample_rate, title)))
    if "wav-pcm" in req.formats:
        files.append(_wav_file("beats.wav", wav_bytes(wave, req.sample_rate)))
    return BeatsResponse(
        f1=req.f1,
        f2=req.f2,
        beat_frequency=gap,
        perceptual_class=perceptual.value,
        files=_require_files(files, "beats", req.formats),
    )


def _spectrum_json(bias: float, expanded) -> str:
    partials = ",".join(
        '{"amplitude":%s,"frequency":%s}' % (_fmt(p.magnitude), _fmt(p.frequency))
        for p in expanded.partials
    )
    return '{"bias":%s,"dc":%s,"partials":[%s]}\n' % (_fmt(bias), _fmt(expanded.dc), partials)


def handle_amp(req: AmpRequest) -> AmpResponse:
    """Sweep the quadratic amplifier over its bias list and package per-bias
    spectra, consonance graphs, waveforms and a linearity summary."""
    config = req.overrides.resolve()
    try:
        amp_config = AmplifierConfig() if req.biases is None else AmplifierConfig(biases_sweep=req.biases)
    except ValueError as exc:
        raise ConfigError(f"biases: {exc}") from None
    tones = default_triad_input(req.base_frequency)
    entries = bias_sweep(tones, amp_config, config)

    freqs = [f for f, _ in tones]
    amps = [a for _, a in tones]
    clean = synthesize(freqs, amps, [0.0] * len(freqs), req.duration, req.sample_rate)

    linearity: list[float] = []
    files: list[FileArtifact] = []
    summary_rows = []
    plot_samples = max(2, int(round(_AMP_PLOT_SECONDS * req.sample_rate)))
    for entry in entries:
        out = render_expanded(entry.expanded, req.duration, req.sample_rate)
        metric = linearity_metric(clean, out)
        linearity.append(metric)
        total_cons = sum(a.consonance for _, _, a in entry.assessments)
        total_diss = sum(a.dissonance for _, _, a in entry.assessments)
        summary_rows.append(
            ",".join(
                (
                    _fmt(entry.bias),
                    _fmt(entry.expanded.dc),
                    str(len(entry.expanded.partials)),
                    _fmt(metric),
                    _fmt(total_cons),
                    _fmt(total_diss),
                )
            )
        )
        label = "%g" % entry.bias
        window = out[:plot_samples]
        if "json" in req.formats:
            files.append(
                _text_file(f"amp_bias_{label}_spectrum.json", "json", _spectrum_json(entry.bias, entry.expanded))
            )
            files.append(
                _text_file(f"amp_bias_{label}_consonance.json", "json", export_graph(entry.graph, "json"))
            )
        if "dot" in req.formats:
            files.append(
                _text_file(f"amp_bias_{label}_consonance.dot", "dot", export_graph(entry.graph, "dot"))
            )
        if "csv" in req.formats:
            files.append(
                _text_file(f"amp_bias_{label}_waveform.csv", "csv", _waveform_csv(window, req.sample_rate))
            )
        if "svg" in req.formats:
            files.append(
                _text_file(
                    f"amp_bias_{label}_waveform.svg",
                    "svg",
                    _waveform_svg(window, req.sample_rate, f"quadratic output, bias {label}"),
                )
            )
        if "wav-pcm" in req.formats:
            files.append(_wav_file(f"amp_bias_{label}.wav", wav_bytes(out, req.sample_rate)))
    if "csv" in req.formats:
        summary = "bias,dc,components,linearity,total_consonance,total_dissonance\n"
        summary += "\n".join(summary_rows) + "\n"
        files.insert(0, _text_file("amp_summary.csv", "csv", summary))
    return AmpResponse(
        base_frequency=req.base_frequency,
        biases=[entry.bias for entry in entries],
        linearity=linearity,
        files=_require_files(files, "amp", req.formats),
    )


def handle_decay(req: DecayRequest) -> DecayResponse:
    """Partial-magnitude decay curve of the configured spectrum model."""
    config = req.overrides.resolve()
    indices = list(range(1, config.max_partials + 1))
    magnitudes = [partial_magnitude(i, config) for i in indices]
    files: list[FileArtifact] = []
    if "csv" in req.formats:
        lines = ["index,magnitude"]
        lines.extend(f"{i},{_fmt(m)}" for i, m in zip(indices, magnitudes))
        files.append(_text_file("decay.csv", "csv", "\n".join(lines) + "\n"))
    if "json" in req.formats:
        text = '{"decay_rate":%s,"magnitudes":[%s],"partials":%d}\n' % (
            _fmt(config.decay_rate),
            ",".join(_fmt(m) for m in magnitudes),
            config.max_partials,
        )
        files.append(_text_file("decay.json", "json", text))
    if "svg" in req.formats:
        plot = line_plot(
            [float(i) for i in indices],
            magnitudes,
            f"partial magnitude decay, rate {_fmt(config.decay_rate)}",
            "partial index",
            "magnitude",
        )
        files.append(_text_file("decay.svg", "svg", plot))
    return DecayResponse(
        partials=config.max_partials,
        decay_rate=config.decay_rate,
        files=_require_files(files, "decay", req.formats),
    )


def defaults_payload() -> dict:
    """Effective defaults advertised by the service."""
    config = ModelConfig()
    return {
        "partials": config.max_partials,
        "decay": config.decay_rate,
        "fc": config.f_c,
        "fd": config.f_d,
        "hearing_min": config.hearing_min,
        "hearing_max": config.hearing_max,
        "cons_threshold": config.consonance_threshold,
        "diss_threshold": config.dissonance_threshold,
        "mode": config.weighting_mode.value,
        "scales": [kind.value for kind in ScaleKind],
    }
