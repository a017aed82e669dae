"""The quasi-order on b-sequences.

G1 dominates G2 when b_i(G1) >= b_i(G2) for every i >= 2; strict dominance
adds at least one strict inequality. Indices 0 and 1 are the same for every
simple graph (1 and 0), so they are checked but never decide a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .energy import EnergyValue
from .errors import LengthMismatch
from .polynomial import CoefficientSequence

# strict dominance must show up as an energy gap larger than this
ENERGY_TOL = 1e-9


class Relation(str, Enum):
    EQUAL = "Equal"
    DOMINATES_STRICTLY = "DominatesStrictly"
    DOMINATES_WEAKLY = "DominatesWeakly"
    DOMINATED_STRICTLY = "DominatedStrictly"
    DOMINATED_WEAKLY = "DominatedWeakly"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OrderVerdict:
    relation: Relation
    witness_index: int | None = None
    # for Incomparable: an index where the second sequence is strictly larger
    second_index: int | None = None

    @property
    def strict(self) -> bool:
        return self.relation in (Relation.DOMINATES_STRICTLY, Relation.DOMINATED_STRICTLY)

    def flipped(self) -> OrderVerdict:
        swap = {
            Relation.DOMINATES_STRICTLY: Relation.DOMINATED_STRICTLY,
            Relation.DOMINATED_STRICTLY: Relation.DOMINATES_STRICTLY,
            Relation.DOMINATES_WEAKLY: Relation.DOMINATED_WEAKLY,
            Relation.DOMINATED_WEAKLY: Relation.DOMINATES_WEAKLY,
        }
        if self.relation is Relation.INCOMPARABLE:
            return OrderVerdict(self.relation, self.second_index, self.witness_index)
        return OrderVerdict(swap.get(self.relation, self.relation), self.witness_index)


def _values(s: CoefficientSequence | Sequence[int]) -> tuple[int, ...]:
    return tuple(s.b) if isinstance(s, CoefficientSequence) else tuple(s)


def compare(s1: CoefficientSequence | Sequence[int], s2: CoefficientSequence | Sequence[int]) -> OrderVerdict:
    b1, b2 = _values(s1), _values(s2)
    if len(b1) != len(b2):
        raise LengthMismatch(f"sequences of length {len(b1)} and {len(b2)} compare graphs of different order")
    head = min(2, len(b1))
    if b1[:head] != b2[:head]:
        raise ValueError(f"b_0 and b_1 must agree, got {b1[:head]} vs {b2[:head]}")
    first_up = first_down = None
    for i in range(2, len(b1)):
        if b1[i] > b2[i] and first_up is None:
            first_up = i
        elif b1[i] < b2[i] and first_down is None:
            first_down = i
    if first_up is None and first_down is None:
        return OrderVerdict(Relation.EQUAL)
    if first_down is None:
        return OrderVerdict(Relation.DOMINATES_STRICTLY, first_up)
    if first_up is None:
        return OrderVerdict(Relation.DOMINATED_STRICTLY, first_down)
    return OrderVerdict(Relation.INCOMPARABLE, first_up, first_down)


def order_implies_energy(verdict: OrderVerdict, e1: EnergyValue, e2: EnergyValue, *, tol: float = ENERGY_TOL) -> bool:
    """Is the energy pair consistent with the verdict?

    Strict dominance needs a gap beyond the combined error plus ``tol``;
    Equal needs agreement within that slack; Incomparable allows anything.
    """
    slack = e1.err_estimate + e2.err_estimate + tol
    gap = e1.value - e2.value
    rel = verdict.relation
    if rel is Relation.EQUAL:
        return abs(gap) <= slack
    if rel is Relation.DOMINATES_STRICTLY:
        return gap > slack
    if rel is Relation.DOMINATED_STRICTLY:
        return -gap > slack
    if rel is Relation.DOMINATES_WEAKLY:
        return gap >= -slack
    if rel is Relation.DOMINATED_WEAKLY:
        return gap <= slack
    return True
