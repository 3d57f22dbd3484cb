"""Homological windows: how far resolutions and Ext families are computed."""

from typing import Optional

from extscope.config import Settings
from extscope.errors import UsageError
from extscope.poly.ring import RingSpec


def homological_window(ring: RingSpec, window: Optional[int] = None) -> int:
    """Explicit window, else EXTSCOPE_WINDOW, else dim R + 1."""

    if window is None:
        window = Settings().window
    if window is None:
        window = ring.dimension + 1
    if window < 0:
        raise UsageError(f"window must be non-negative, got {window}")
    return window
