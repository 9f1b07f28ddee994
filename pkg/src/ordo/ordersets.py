"""S- and T-constraints, their order sets, and the widest-path machinery.

Each constraint has two routes: a closed form over widest paths and a
definitional oracle that unions closure asymmetric parts over the threshold
ladder. Both are public; tests assert they agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from ordo import _kernels
from ordo.ballots import HALF, StrengthMatrix
from ordo.relation import (
    DEFAULT_CAP,
    AlternativeSet,
    BinaryRelation,
    Enumeration,
    LinearOrder,
    asymmetric_part,
    count_respecting_orders,
    enumerate_respecting_orders,
    is_p_acyclic,
    iter_respecting_orders,
    respects,
    suzumura_closure,
    transitive_closure,
)
from ordo.supermajority import alpha_star, critical_thresholds, ladder_relations, r_alpha

ZERO = Fraction(0)


@dataclass(frozen=True)
class WidestPathMatrix:
    """``b[i][j]``: strongest path strength from ``i`` to ``j`` in ``R_1/2`` (0 if none)."""

    universe: AlternativeSet
    b: tuple[tuple[Fraction | None, ...], ...]

    def __getitem__(self, pair) -> Fraction:
        a, c = pair
        return self.b[self.universe.index(a)][self.universe.index(c)]


def widest_paths(phi: StrengthMatrix) -> WidestPathMatrix:
    """Max-min path strengths over the majority graph.

    Strengths are replaced by their rank among the distinct edge strengths so
    the relaxation runs on integers; ranks map back to the exact values.
    """
    n = len(phi.universe)
    values = sorted({v for _, _, v in phi.off_diagonal() if v > HALF})
    rank = {v: k + 1 for k, v in enumerate(values)}
    weights = [0] * (n * n)
    for i, j, v in phi.off_diagonal():
        if v > HALF:
            weights[i * n + j] = rank[v]
    out = _kernels.widest_paths(weights, n)
    decode = [ZERO] + values
    b = tuple(tuple(None if i == j else decode[out[i * n + j]] for j in range(n)) for i in range(n))
    return WidestPathMatrix(phi.universe, b)


def schulze_relation(w: WidestPathMatrix) -> BinaryRelation:
    n = len(w.universe)
    b = w.b
    return BinaryRelation.from_index_pairs(
        w.universe, ((i, j) for i in range(n) for j in range(n) if i != j and b[i][j] > b[j][i])
    )


def s_constraint(phi: StrengthMatrix, w: WidestPathMatrix | None = None) -> BinaryRelation:
    """Pairs with ``phi[a,b] > max(1/2, B[b,a])``."""
    w = w or widest_paths(phi)
    return BinaryRelation.from_index_pairs(
        phi.universe, ((i, j) for i, j, v in phi.off_diagonal() if v > HALF and v > w.b[j][i])
    )


def t_constraint(phi: StrengthMatrix, w: WidestPathMatrix | None = None) -> BinaryRelation:
    return schulze_relation(w or widest_paths(phi))


class ConstraintUnions(NamedTuple):
    s_union: BinaryRelation
    t_union: BinaryRelation


@dataclass(frozen=True)
class LadderStep:
    alpha: Fraction
    relation: BinaryRelation
    s_closure: BinaryRelation
    t_closure: BinaryRelation


def ladder_closures(phi: StrengthMatrix) -> list[LadderStep]:
    """``R_alpha``, ``S(R_alpha)`` and ``T(R_alpha)`` at every representative."""
    return [
        LadderStep(alpha, rel, suzumura_closure(rel), transitive_closure(rel))
        for alpha, rel in ladder_relations(phi, critical_thresholds(phi))
    ]


def constraint_oracle(phi: StrengthMatrix) -> ConstraintUnions:
    """Union of ``P(S(R_alpha))`` and of ``P(T(R_alpha))`` over the ladder."""
    s = t = BinaryRelation.empty(phi.universe)
    for step in ladder_closures(phi):
        s = s | asymmetric_part(step.s_closure)
        t = t | asymmetric_part(step.t_closure)
    return ConstraintUnions(s, t)


class OrderKind(enum.Enum):
    S = "S"
    T = "T"
    CORE = "acyclic-core"


@dataclass(frozen=True)
class OrderSet:
    """Linear orders respecting ``constraint``, enumerated on demand."""

    constraint: BinaryRelation
    kind: OrderKind
    cap: int | None = DEFAULT_CAP

    def __post_init__(self):
        if not is_p_acyclic(self.constraint):
            raise ValueError("order-set constraint must be P-acyclic")

    def __iter__(self) -> Iterator[LinearOrder]:
        return iter_respecting_orders(self.constraint)

    def __contains__(self, order: LinearOrder) -> bool:
        return respects(order, self.constraint).ok

    def members(self, cap: int | None = ...) -> Enumeration:
        return enumerate_respecting_orders(self.constraint, self.cap if cap is ... else cap)

    def count(self) -> int | None:
        return count_respecting_orders(self.constraint)


def order_set(constraint: BinaryRelation, kind: OrderKind, cap: int | None = DEFAULT_CAP) -> OrderSet:
    return OrderSet(constraint, kind, cap)


def s_order_set(phi: StrengthMatrix, cap: int | None = DEFAULT_CAP) -> OrderSet:
    return OrderSet(s_constraint(phi), OrderKind.S, cap)


def t_order_set(phi: StrengthMatrix, cap: int | None = DEFAULT_CAP) -> OrderSet:
    return OrderSet(t_constraint(phi), OrderKind.T, cap)


def core_order_set(phi: StrengthMatrix, cap: int | None = DEFAULT_CAP) -> OrderSet | None:
    """Orders respecting ``R_alpha*``; None when no ``R_alpha`` is P-acyclic."""
    star = alpha_star(phi)
    if not star.exists:
        return None
    return OrderSet(r_alpha(phi, star.value), OrderKind.CORE, cap)
