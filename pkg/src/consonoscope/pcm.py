"""Mono 16-bit PCM WAV encoding of floating-point waveforms."""

from __future__ import annotations

import io
import wave
from typing import Sequence

import numpy as np


def wav_bytes(samples: Sequence[float], sample_rate: int, peak: float = 0.9) -> bytes:
    """Encode a waveform as a mono PCM16 WAV file.

    The signal is normalized so its largest magnitude lands at ``peak`` of
    full scale; an all-zero signal stays silent. Output bytes depend only on
    the inputs.
    """
    if sample_rate <= 0:
        raise ValueError("sample rate must be positive")
    if not 0 < peak <= 1:
        raise ValueError("peak must lie in (0, 1]")
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("samples must be a non-empty one-dimensional sequence")
    top = float(np.max(np.abs(x)))
    if top > 0:
        x = x * (peak / top)
    pcm = np.clip(np.rint(x * 32767.0), -32768, 32767).astype("<i2")
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(int(sample_rate))
        w.writeframes(pcm.tobytes())
    return buf.getvalue()
