"""Service layer: pydantic schemas, pure handlers and the FastAPI app."""

from .app import create_app
from .handlers import (
    defaults_payload,
    handle_amp,
    handle_beats,
    handle_decay,
    handle_graphs,
    handle_interval,
    handle_scale,
    handle_triads,
)
from .models import FileArtifact

__all__ = [
    "FileArtifact",
    "create_app",
    "defaults_payload",
    "handle_amp",
    "handle_beats",
    "handle_decay",
    "handle_graphs",
    "handle_interval",
    "handle_scale",
    "handle_triads",
]
