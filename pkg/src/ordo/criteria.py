"""Extended Condorcet criterion, Pareto principle, Condorcet winner/loser."""

from __future__ import annotations

from dataclasses import dataclass

from ordo.ballots import Profile, TallyMatrix, tally
from ordo.errors import GuardError
from ordo.relation import LinearOrder

ECC_LIMIT = 20


@dataclass(frozen=True)
class CriterionVerdict:
    """``witness`` is present exactly when the check failed.

    For the extended Condorcet criterion the witness holds the dominating
    block ``split`` and a ``pair`` (x, y) with x in the block ranked below y
    outside it. For Pareto it holds the unanimously supported ``pair``.
    """

    passed: bool
    witness: dict | None = None

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a verdict carries a witness iff it failed")

    def __bool__(self):
        return self.passed


def extended_condorcet_check(order: LinearOrder, t: TallyMatrix) -> CriterionVerdict:
    """Every block that majority-beats its complement pointwise must be ranked on top.

    Checking two-block splits is equivalent to checking every ordered
    partition in which earlier blocks beat later ones: each such partition
    yields the splits "first k blocks vs the rest", and a two-block split is
    itself such a partition.
    """
    u = t.universe
    n = len(u)
    if n > ECC_LIMIT:
        raise GuardError(f"extended Condorcet check is limited to {ECC_LIMIT} alternatives, got {n}")
    beats = t.majority().rows
    full = u.full_mask
    pos = order.positions()
    for x_mask in range(1, full):
        rest = full & ~x_mask
        if any(beats[x] & rest != rest for x in range(n) if x_mask >> x & 1):
            continue
        inside = [x for x in range(n) if x_mask >> x & 1]
        outside = [y for y in range(n) if rest >> y & 1]
        lowest_in = max(inside, key=lambda x: pos[x])
        highest_out = min(outside, key=lambda y: pos[y])
        if pos[highest_out] < pos[lowest_in]:
            return CriterionVerdict(
                False,
                {
                    "split": u.sorted_labels(u.labels[x] for x in inside),
                    "pair": (u.labels[lowest_in], u.labels[highest_out]),
                },
            )
    return CriterionVerdict(True)


def pareto_pairs(p: Profile) -> list[tuple[str, str]]:
    """Pairs (a, b) nobody strictly opposes and somebody strictly supports."""
    t = tally(p)
    n = len(p.universe)
    labels = p.universe.labels
    return [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(n)
        if i != j and t.counts[i][j] > 0 and t.counts[j][i] == 0
    ]


def pareto_check(order: LinearOrder, p: Profile) -> CriterionVerdict:
    for a, b in pareto_pairs(p):
        if not order.prefers(a, b):
            return CriterionVerdict(False, {"pair": (a, b)})
    return CriterionVerdict(True)


def condorcet_winner_loser(t: TallyMatrix) -> tuple[str | None, str | None]:
    u = t.universe
    beats = t.majority()
    others = [u.full_mask & ~(1 << i) for i in range(len(u))]
    beaten_by = beats.converse().rows
    winner = next((u.labels[i] for i, row in enumerate(beats.rows) if row == others[i]), None)
    loser = next((u.labels[i] for i, row in enumerate(beaten_by) if row == others[i]), None)
    return winner, loser
