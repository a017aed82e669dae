"""Exact characteristic polynomials, graph energy and extremal checks for
conjugated unicyclic graphs with maximum degree at most 3."""

__version__ = "0.1.0"

from .errors import UnienergyError  # noqa: E402
from .graph import LabeledGraph  # noqa: E402

__all__ = ["LabeledGraph", "UnienergyError", "__version__"]
