"""Command-line front end: every analysis as deterministic file emission.

Subcommands call the service handlers in-process by default; pass --server
to send the same request to a running HTTP instance instead. Flag values
override config-file values, which override the built-in defaults. Exit
codes: 0 success, 2 usage error, 1 computation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .config import (
    DEFAULT_FORMATS,
    OUT_DIR_ENV_VAR,
    ConfigError,
    RunConfig,
    WeightingMode,
    apply_overrides,
    load_config,
    parse_formats,
)
from .service import handlers
from .service.models import (
    AmpRequest,
    AmpResponse,
    BeatsRequest,
    BeatsResponse,
    ConfigOverrides,
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
from .temperament import ScaleKind

_SCALE_CHOICES = tuple(kind.value for kind in ScaleKind)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("model and output options")
    group.add_argument("--config", metavar="PATH", help="key = value configuration file")
    group.add_argument("--base-freq", type=float, metavar="HZ", help="scale base frequency")
    group.add_argument("--decay", type=float, metavar="R", help="partial magnitude decay rate")
    group.add_argument("--partials", type=int, metavar="N", help="maximum partials per spectrum")
    group.add_argument("--fc", type=float, metavar="HZ", help="consonant-band frequency limit")
    group.add_argument("--fd", type=float, metavar="HZ", help="dissonant-band frequency limit")
    group.add_argument("--cons-threshold", type=float, metavar="X", help="consonance flag threshold")
    group.add_argument("--diss-threshold", type=float, metavar="X", help="dissonance flag threshold")
    group.add_argument("--mode", choices=("literal", "proximity"), help="gap weighting mode")
    group.add_argument("--out", metavar="DIR", help=f"output directory (or ${OUT_DIR_ENV_VAR})")
    group.add_argument(
        "--format",
        metavar="LIST",
        help=f"comma-separated output formats (default {','.join(DEFAULT_FORMATS)})",
    )
    group.add_argument("--server", metavar="URL", help="send the request to a running service")

    parser = argparse.ArgumentParser(
        prog="consonoscope",
        description="Consonance and dissonance analysis of harmonic tone pairs, "
        "temperaments and quadratically distorted signals.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("interval", parents=[common], help="assess one tone pair")
    p.add_argument("f1", type=float, help="first frequency in Hz")
    p.add_argument("f2", type=float, help="second frequency in Hz")

    p = sub.add_parser("scale", parents=[common], help="matrices, bipartite panel and graphs of a scale")
    p.add_argument("kind", nargs="?", help=f"scale kind ({', '.join(_SCALE_CHOICES)})")

    p = sub.add_parser("graphs", parents=[common], help="consonance and dissonance graphs of a scale")
    p.add_argument("kind", nargs="?", help=f"scale kind ({', '.join(_SCALE_CHOICES)})")

    sub.add_parser("triads", parents=[common], help="triad table across the five temperaments")

    p = sub.add_parser("beats", parents=[common], help="superpose two pure tones")
    p.add_argument("f1", type=float, help="first frequency in Hz")
    p.add_argument("f2", type=float, help="second frequency in Hz")
    p.add_argument("--duration", type=float, default=1.0, metavar="S", help="render length in seconds")
    p.add_argument("--sample-rate", type=int, default=44100, metavar="HZ", help="render sample rate")

    p = sub.add_parser("amp", parents=[common], help="quadratic amplifier bias sweep")
    p.add_argument("--biases", metavar="LIST", help="comma-separated bias values, ascending")
    p.add_argument("--duration", type=float, default=1.0, metavar="S", help="render length in seconds")
    p.add_argument("--sample-rate", type=int, default=44100, metavar="HZ", help="render sample rate")

    sub.add_parser("decay", parents=[common], help="partial magnitude decay table")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1", help="bind address")
    p.add_argument("--port", type=int, default=8000, help="bind port")

    return parser


def _scale_kind_arg(value: str) -> ScaleKind:
    token = value.strip().lower().replace("_", "-")
    try:
        return ScaleKind(token)
    except ValueError:
        raise ConfigError(
            f"kind: unknown scale kind {value!r} (expected one of {', '.join(_SCALE_CHOICES)})"
        ) from None


def _run_config(ns: argparse.Namespace) -> RunConfig:
    base = load_config(ns.config) if ns.config else RunConfig()
    overrides: dict[str, object] = {
        "max_partials": ns.partials,
        "decay_rate": ns.decay,
        "f_c": ns.fc,
        "f_d": ns.fd,
        "consonance_threshold": ns.cons_threshold,
        "dissonance_threshold": ns.diss_threshold,
        "weighting_mode": WeightingMode(ns.mode) if ns.mode else None,
        "base_frequency": ns.base_freq,
        "out_dir": ns.out,
        "formats": parse_formats(ns.format) if ns.format else None,
    }
    kind = getattr(ns, "kind", None)
    if kind:
        overrides["scale_kind"] = _scale_kind_arg(kind)
    return apply_overrides(base, **overrides)


def _overrides_payload(run: RunConfig) -> ConfigOverrides:
    model = run.model
    return ConfigOverrides(
        partials=model.max_partials,
        decay=model.decay_rate,
        fc=model.f_c,
        fd=model.f_d,
        hearing_min=model.hearing_min,
        hearing_max=model.hearing_max,
        cons_threshold=model.consonance_threshold,
        diss_threshold=model.dissonance_threshold,
        mode=model.weighting_mode.value,
    )


def _parse_biases(value: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok.strip()) for tok in value.split(",") if tok.strip())
    except ValueError:
        raise ConfigError(f"biases: invalid value {value!r}") from None


_ENDPOINTS = {
    IntervalRequest: ("/interval", IntervalResponse),
    ScaleRequest: ("/scale", ScaleResponse),
    GraphsRequest: ("/graphs", GraphsResponse),
    TriadsRequest: ("/triads", TriadsResponse),
    BeatsRequest: ("/beats", BeatsResponse),
    AmpRequest: ("/amp", AmpResponse),
    DecayRequest: ("/decay", DecayResponse),
}

_HANDLERS = {
    IntervalRequest: handlers.handle_interval,
    ScaleRequest: handlers.handle_scale,
    GraphsRequest: handlers.handle_graphs,
    TriadsRequest: handlers.handle_triads,
    BeatsRequest: handlers.handle_beats,
    AmpRequest: handlers.handle_amp,
    DecayRequest: handlers.handle_decay,
}


def _dispatch(request, server: str | None):
    """Run the request in-process, or POST it to a service instance."""
    if server is None:
        return _HANDLERS[type(request)](request)
    import httpx

    path, response_model = _ENDPOINTS[type(request)]
    reply = httpx.post(server.rstrip("/") + path, json=request.model_dump(mode="json"), timeout=120.0)
    if reply.status_code == 422:
        detail = reply.json().get("detail", reply.text)
        raise ConfigError(f"server rejected request: {detail}")
    reply.raise_for_status()
    return response_model.model_validate(reply.json())


def _write_files(files: Sequence[FileArtifact], out_dir: str) -> list[Path]:
    import base64

    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for artifact in files:
        path = target / artifact.name
        if artifact.text is not None:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(artifact.text)
        else:
            path.write_bytes(base64.b64decode(artifact.base64 or ""))
        written.append(path)
    return written


def _make_request(ns: argparse.Namespace, run: RunConfig):
    overrides = _overrides_payload(run)
    command = ns.command
    if command == "interval":
        return IntervalRequest(f1=ns.f1, f2=ns.f2, overrides=overrides, formats=run.formats)
    if command == "scale":
        kind = run.scale_kind or ScaleKind.EQUAL
        return ScaleRequest(
            kind=kind.value,
            base_frequency=run.base_frequency,
            overrides=overrides,
            formats=run.formats,
        )
    if command == "graphs":
        kind = run.scale_kind or ScaleKind.EQUAL
        return GraphsRequest(
            kind=kind.value,
            base_frequency=run.base_frequency,
            overrides=overrides,
            formats=run.formats,
        )
    if command == "triads":
        return TriadsRequest(base_frequency=run.base_frequency, overrides=overrides, formats=run.formats)
    if command == "beats":
        return BeatsRequest(
            f1=ns.f1,
            f2=ns.f2,
            duration=ns.duration,
            sample_rate=ns.sample_rate,
            formats=run.formats,
        )
    if command == "amp":
        return AmpRequest(
            base_frequency=run.base_frequency,
            biases=_parse_biases(ns.biases) if ns.biases else None,
            duration=ns.duration,
            sample_rate=ns.sample_rate,
            overrides=overrides,
            formats=run.formats,
        )
    if command == "decay":
        return DecayRequest(overrides=overrides, formats=run.formats)
    raise ConfigError(f"unknown command {command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(list(argv) if argv is not None else None)
    try:
        run = _run_config(ns)
        if ns.command == "serve":
            import uvicorn

            from .service.app import create_app

            uvicorn.run(create_app(), host=ns.host, port=ns.port)
            return 0
        request = _make_request(ns, run)
        response = _dispatch(request, ns.server)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - boundary: computation failures exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in _write_files(response.files, run.resolve_out_dir()):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
