"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class UnienergyError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(UnienergyError, ValueError):
    pass


class Disconnected(UnienergyError, ValueError):
    pass


class MultipleCycles(UnienergyError, ValueError):
    pass


class SizeLimit(UnienergyError, ValueError):
    pass


class UnsupportedStructure(UnienergyError, ValueError):
    pass


class OutOfClass(UnienergyError, ValueError):
    """The graph is outside the class for which |a_i| gives the Coulson form."""


class NotAForest(UnienergyError, ValueError):
    pass


class NotATree(UnienergyError, ValueError):
    pass


class PendantEdge(UnienergyError, ValueError):
    pass


class PreconditionViolated(UnienergyError, ValueError):
    pass


class InvalidOrder(UnienergyError, ValueError):
    pass


class LengthMismatch(UnienergyError, ValueError):
    pass


class MismatchedOrder(UnienergyError, ValueError):
    pass


class DomainError(UnienergyError, ValueError):
    pass


class NonConvergent(UnienergyError, RuntimeError):
    """Quadrature did not reach the requested tolerance within its budget."""
