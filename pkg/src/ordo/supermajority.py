"""Supermajority relations and the finite ladder of distinct ones.

``R_alpha`` only changes when ``alpha`` crosses a strength value, so the
"for every alpha in [1/2, 1)" quantifiers reduce to a loop over one
representative per constancy interval: 1/2 and every strength value in
(1/2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ordo.ballots import HALF, StrengthMatrix
from ordo.relation import BinaryRelation, is_p_acyclic

ONE = Fraction(1)


@dataclass(frozen=True)
class ThresholdLadder:
    thresholds: tuple[Fraction, ...]
    representatives: tuple[Fraction, ...]

    def interval(self, k: int) -> tuple[Fraction, Fraction]:
        """Half-open interval ``[lo, hi)`` on which representative ``k`` stands."""
        lo = self.representatives[k]
        hi = self.representatives[k + 1] if k + 1 < len(self.representatives) else ONE
        return lo, hi

    def representative_for(self, alpha: Fraction) -> Fraction:
        _check_alpha(alpha)
        return max(r for r in self.representatives if r <= alpha)


@dataclass(frozen=True)
class AlphaStar:
    value: Fraction | None

    @property
    def exists(self) -> bool:
        return self.value is not None


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if not HALF <= alpha < ONE:
        raise ValueError(f"alpha must lie in [1/2, 1), got {alpha}")
    return alpha


def r_alpha(phi: StrengthMatrix, alpha) -> BinaryRelation:
    """Pairs whose strength strictly exceeds ``alpha``."""
    alpha = _check_alpha(alpha)
    return BinaryRelation.from_index_pairs(phi.universe, ((i, j) for i, j, v in phi.off_diagonal() if v > alpha))


def critical_thresholds(phi: StrengthMatrix) -> ThresholdLadder:
    values = sorted({v for _, _, v in phi.off_diagonal() if v > HALF})
    reps = (HALF,) + tuple(v for v in values if v < ONE)
    return ThresholdLadder(tuple(values), reps)


def ladder_relations(phi: StrengthMatrix, ladder: ThresholdLadder | None = None) -> list[tuple[Fraction, BinaryRelation]]:
    """``(representative, R_representative)`` for every distinct ``R_alpha``."""
    ladder = ladder or critical_thresholds(phi)
    return [(alpha, r_alpha(phi, alpha)) for alpha in ladder.representatives]


def alpha_star(phi: StrengthMatrix, ladder: ThresholdLadder | None = None) -> AlphaStar:
    """Least alpha whose ``R_alpha`` is P-acyclic, if any is.

    P-acyclicity is upward closed in alpha, so the first hit in ascending
    order is the minimum.
    """
    for alpha, rel in ladder_relations(phi, ladder):
        if is_p_acyclic(rel):
            return AlphaStar(alpha)
    return AlphaStar(None)
