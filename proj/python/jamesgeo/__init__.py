"""Interlaced graphs, James-type norms and branch embeddings."""

from ._jamesgeo import *  # noqa: F401,F403
from ._jamesgeo import (
    Error,
    InvalidInput,
    PreconditionError,
    ResourceError,
    UnsupportedInstance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
