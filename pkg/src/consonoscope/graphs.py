"""Scale-wide pairwise analysis, triad assessment, and the weighted-graph,
CSV and JSON renderings of the results.

A ScaleAnalysis holds the full 13x13 consonance and dissonance matrices of a
scale. Graphs keep an edge exactly where the corresponding threshold flag is
set; the unison diagonal is computed but never becomes a self-loop. All text
exports are byte-deterministic with numbers fixed at six decimal places.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import ModelConfig
from .consonance import IntervalAssessment, assess_interval
from .spectral import Spectrum, harmonic_spectrum
from .temperament import Scale, ScaleKind, build_scale, pitch_frequency


class GraphKind(Enum):
    CONSONANCE = "consonance"
    DISSONANCE = "dissonance"


class TriadQuality(Enum):
    MINOR = "minor"
    MAJOR = "major"


def _fmt(value: float) -> str:
    # + 0.0 folds negative zero so exports never print "-0.000000"
    return "%.6f" % (value + 0.0)


@dataclass(frozen=True, eq=False)
class ScaleAnalysis:
    """Pairwise consonance and dissonance of all pitches of one scale.

    Matrices are symmetric and computed under a single shared config; the
    diagonal holds the unison self-assessment, whose dissonance is zero.
    """

    scale: Scale
    consonance_matrix: np.ndarray
    dissonance_matrix: np.ndarray
    consonant_flags: np.ndarray
    dissonant_flags: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.scale.pitch_names)
        for name in ("consonance_matrix", "dissonance_matrix", "consonant_flags", "dissonant_flags"):
            got = getattr(self, name).shape
            if got != (n, n):
                raise ValueError(f"{name}: expected shape {(n, n)}, got {got}")


def scale_matrix(scale: Scale, config: ModelConfig | None = None) -> ScaleAnalysis:
    """Assess every unordered pitch pair of the scale, unison included."""
    if config is None:
        config = ModelConfig()
    spectra = [harmonic_spectrum(f, config) for f in scale.frequencies]
    n = len(spectra)
    cons = np.zeros((n, n))
    diss = np.zeros((n, n))
    cons_flags = np.zeros((n, n), dtype=bool)
    diss_flags = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i, n):
            a = assess_interval(spectra[i], spectra[j], config)
            cons[i, j] = cons[j, i] = a.consonance
            diss[i, j] = diss[j, i] = a.dissonance
            cons_flags[i, j] = cons_flags[j, i] = a.is_consonant
            diss_flags[i, j] = diss_flags[j, i] = a.is_dissonant
    return ScaleAnalysis(scale, cons, diss, cons_flags, diss_flags)


@dataclass(frozen=True)
class TriadAssessment:
    """Three pairwise scores of a triad plus their totals.

    Thirds and fifths are taken as scale positions above the root (minor
    third +3, major third +4, fifth +7); positions past the octave reuse the
    wrapped pitch one octave up.
    """

    root_index: int
    quality: TriadQuality
    root_name: str
    third_name: str
    fifth_name: str
    root_third: IntervalAssessment
    root_fifth: IntervalAssessment
    third_fifth: IntervalAssessment
    total_consonance: float
    total_dissonance: float


def _triad_pitch(scale: Scale, position: int) -> tuple[str, float]:
    if position > 12:
        index, shift = position - 12, 1
    else:
        index, shift = position, 0
    return scale.pitch_names[index], pitch_frequency(scale, index, octave_shift=shift)


def triad_assessment(
    scale: Scale,
    quality: TriadQuality,
    root_index: int,
    config: ModelConfig | None = None,
) -> TriadAssessment:
    """Assess the three intervals of the triad rooted at a chromatic pitch."""
    if config is None:
        config = ModelConfig()
    if not 0 <= root_index <= 11:
        raise ValueError(f"root_index: expected 0..11, got {root_index}")
    third_step = 3 if quality is TriadQuality.MINOR else 4
    root_name = scale.pitch_names[root_index]
    root_freq = pitch_frequency(scale, root_index)
    third_name, third_freq = _triad_pitch(scale, root_index + third_step)
    fifth_name, fifth_freq = _triad_pitch(scale, root_index + 7)

    root_s = harmonic_spectrum(root_freq, config)
    third_s = harmonic_spectrum(third_freq, config)
    fifth_s = harmonic_spectrum(fifth_freq, config)
    root_third = assess_interval(root_s, third_s, config)
    root_fifth = assess_interval(root_s, fifth_s, config)
    third_fifth = assess_interval(third_s, fifth_s, config)

    return TriadAssessment(
        root_index=root_index,
        quality=quality,
        root_name=root_name,
        third_name=third_name,
        fifth_name=fifth_name,
        root_third=root_third,
        root_fifth=root_fifth,
        third_fifth=third_fifth,
        total_consonance=root_third.consonance + root_fifth.consonance + third_fifth.consonance,
        total_dissonance=root_third.dissonance + root_fifth.dissonance + third_fifth.dissonance,
    )


@dataclass(frozen=True)
class TemperamentEntry:
    """One temperament's scale analysis and its 24 triads (12 minor, 12 major)."""

    kind: ScaleKind
    scale: Scale
    analysis: ScaleAnalysis
    triads: tuple[TriadAssessment, ...]


@dataclass(frozen=True)
class TemperamentReport:
    """All five temperaments analysed at a common base frequency."""

    base_frequency: float
    entries: tuple[TemperamentEntry, ...]


def temperament_report(base_frequency: float, config: ModelConfig | None = None) -> TemperamentReport:
    """Analyse every temperament: full pairwise matrices plus minor and major
    triads on all twelve chromatic roots."""
    if config is None:
        config = ModelConfig()
    entries = []
    for kind in ScaleKind:
        scale = build_scale(kind, base_frequency)
        analysis = scale_matrix(scale, config)
        triads = tuple(
            triad_assessment(scale, quality, root, config)
            for quality in (TriadQuality.MINOR, TriadQuality.MAJOR)
            for root in range(12)
        )
        entries.append(TemperamentEntry(kind, scale, analysis, triads))
    return TemperamentReport(base_frequency, tuple(entries))


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph over the scale's pitches; weights are the scores of
    the pairs whose threshold flag is set."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]
    kind: GraphKind


def build_graph(analysis: ScaleAnalysis, kind: GraphKind) -> WeightedGraph:
    if kind is GraphKind.CONSONANCE:
        matrix, flags = analysis.consonance_matrix, analysis.consonant_flags
    else:
        matrix, flags = analysis.dissonance_matrix, analysis.dissonant_flags
    nodes = analysis.scale.pitch_names
    n = len(nodes)
    edges = tuple(
        (nodes[i], nodes[j], float(matrix[i, j]))
        for i in range(n)
        for j in range(i + 1, n)
        if flags[i, j]
    )
    return WeightedGraph(nodes=nodes, edges=edges, kind=kind)


def total_edge_weight(graph: WeightedGraph) -> float:
    return sum(weight for _, _, weight in graph.edges)


_MAX_PENWIDTH = 4.0


def export_graph(graph: WeightedGraph, format: str) -> str:
    """Render a graph as DOT or JSON text.

    DOT encodes the score both in the weight attribute and in a penwidth
    scaled against the heaviest edge; JSON sorts keys so equal graphs always
    serialize to equal bytes.
    """
    if format == "dot":
        lines = [f"graph {graph.kind.value} {{"]
        for node in graph.nodes:
            lines.append(f'  "{node}";')
        wmax = max((w for _, _, w in graph.edges), default=0.0)
        for a, b, w in graph.edges:
            pen = _MAX_PENWIDTH * w / wmax if wmax > 0 else 0.0
            lines.append(f'  "{a}" -- "{b}" [weight="{_fmt(w)}", penwidth={_fmt(pen)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        edges = ",".join(
            '{"a":%s,"b":%s,"weight":%s}' % (json.dumps(a), json.dumps(b), _fmt(w))
            for a, b, w in graph.edges
        )
        nodes = ",".join(json.dumps(node) for node in graph.nodes)
        return '{"edges":[%s],"kind":%s,"nodes":[%s]}\n' % (edges, json.dumps(graph.kind.value), nodes)
    raise ValueError(f"format: expected 'dot' or 'json', got {format!r}")


_DOT_HEADER = re.compile(r"^graph\s+(\w+)\s*\{")
_DOT_NODE = re.compile(r'^\s*"([^"]+)";$')
_DOT_EDGE = re.compile(r'^\s*"([^"]+)"\s*--\s*"([^"]+)"\s*\[weight="([^"]+)"')


def parse_graph_dot(text: str) -> WeightedGraph:
    kind: GraphKind | None = None
    nodes: list[str] = []
    edges: list[tuple[str, str, float]] = []
    for line in text.splitlines():
        header = _DOT_HEADER.match(line)
        if header:
            kind = GraphKind(header.group(1))
            continue
        edge = _DOT_EDGE.match(line)
        if edge:
            edges.append((edge.group(1), edge.group(2), float(edge.group(3))))
            continue
        node = _DOT_NODE.match(line)
        if node:
            nodes.append(node.group(1))
    if kind is None:
        raise ValueError("not a graph: missing 'graph <kind> {' header")
    return WeightedGraph(nodes=tuple(nodes), edges=tuple(edges), kind=kind)


def parse_graph_json(text: str) -> WeightedGraph:
    data = json.loads(text)
    edges = tuple((e["a"], e["b"], float(e["weight"])) for e in data["edges"])
    return WeightedGraph(nodes=tuple(data["nodes"]), edges=edges, kind=GraphKind(data["kind"]))


def export_matrix_csv(analysis: ScaleAnalysis) -> str:
    """Both matrices as two CSV blocks, each a labeled header plus 13 rows."""
    labels = analysis.scale.pitch_names
    lines = []
    for title, matrix in (
        ("consonance", analysis.consonance_matrix),
        ("dissonance", analysis.dissonance_matrix),
    ):
        lines.append(",".join((title,) + labels))
        for label, row in zip(labels, matrix):
            lines.append(",".join((label,) + tuple(_fmt(v) for v in row)))
    return "\n".join(lines) + "\n"


def parse_matrix_csv(text: str) -> tuple[tuple[str, ...], np.ndarray, np.ndarray]:
    """Inverse of export_matrix_csv: (labels, consonance, dissonance)."""
    lines = text.splitlines()
    labels = tuple(lines[0].split(",")[1:])
    n = len(labels)
    if len(lines) != 2 * (n + 1):
        raise ValueError(f"matrix csv: expected {2 * (n + 1)} lines, got {len(lines)}")
    blocks = []
    for start in (1, n + 2):
        rows = [[float(v) for v in line.split(",")[1:]] for line in lines[start : start + n]]
        blocks.append(np.array(rows))
    return labels, blocks[0], blocks[1]


_TRIAD_CSV_HEADER = (
    "temperament,quality,root,"
    "consonance_root_third,consonance_root_fifth,consonance_third_fifth,consonance_total,"
    "dissonance_root_third,dissonance_root_fifth,dissonance_third_fifth,dissonance_total"
)


def triad_report_csv(report: TemperamentReport) -> str:
    """All 120 triads as CSV: five temperaments, minor rows then major rows."""
    lines = [_TRIAD_CSV_HEADER]
    for entry in report.entries:
        for t in entry.triads:
            scores = (
                t.root_third.consonance,
                t.root_fifth.consonance,
                t.third_fifth.consonance,
                t.total_consonance,
                t.root_third.dissonance,
                t.root_fifth.dissonance,
                t.third_fifth.dissonance,
                t.total_dissonance,
            )
            lines.append(
                ",".join((entry.kind.value, t.quality.value, t.root_name) + tuple(_fmt(v) for v in scores))
            )
    return "\n".join(lines) + "\n"


def triad_report_json(report: TemperamentReport) -> str:
    """Triad report as JSON with the same values as the CSV form."""
    parts = []
    for entry in report.entries:
        triads = ",".join(
            (
                '{"fifth":%s,"quality":%s,"root":%s,"third":%s,'
                '"total_consonance":%s,"total_dissonance":%s}'
            )
            % (
                json.dumps(t.fifth_name),
                json.dumps(t.quality.value),
                json.dumps(t.root_name),
                json.dumps(t.third_name),
                _fmt(t.total_consonance),
                _fmt(t.total_dissonance),
            )
            for t in entry.triads
        )
        parts.append('{"temperament":%s,"triads":[%s]}' % (json.dumps(entry.kind.value), triads))
    return '{"base_frequency":%s,"temperaments":[%s]}\n' % (_fmt(report.base_frequency), ",".join(parts))
