"""Exact verification tools for hook length identities, hook walks and label bijections."""

__version__ = "0.1.0"

from .diagram import Cell, Partition, corners, hook_length  # noqa: E402
from .poly import MultiPoly, WeightAssignment  # noqa: E402

__all__ = ["Cell", "MultiPoly", "Partition", "WeightAssignment", "__version__", "corners", "hook_length"]
