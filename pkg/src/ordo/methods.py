"""Ranked pairs, Kemeny-Young, Borda and Simpson-Kramer, plus winner sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ordo import _kernels
from ordo.ballots import StrengthMatrix, TallyMatrix
from ordo.errors import AgendaError, ConsistencyError, GuardError
from ordo.ordersets import ladder_closures, s_constraint, schulze_relation, widest_paths
from ordo.relation import DEFAULT_CAP, AlternativeSet, LinearOrder, maximal_set
from ordo.supermajority import ThresholdLadder, critical_thresholds, ladder_relations

KEMENY_LIMIT = 10
RANKED_PAIRS_BUDGET = 100_000


@dataclass(frozen=True)
class PairAgenda:
    """Processing order of ordered pairs (index pairs); diagonal pairs allowed."""

    universe: AlternativeSet
    sequence: tuple[tuple[int, int], ...]

    @classmethod
    def from_labels(cls, universe: AlternativeSet, pairs: Iterable[tuple[str, str]]) -> "PairAgenda":
        return cls(universe, tuple((universe.index(a), universe.index(b)) for a, b in pairs))


def default_agenda(phi: StrengthMatrix) -> PairAgenda:
    """Descending strength, ties broken by universe order, diagonal last."""
    n = len(phi.universe)
    off = sorted(((i, j) for i, j, _ in phi.off_diagonal()), key=lambda p: (-phi.phi[p[0]][p[1]], p))
    return PairAgenda(phi.universe, tuple(off) + tuple((i, i) for i in range(n)))


def _validate_agenda(phi: StrengthMatrix, agenda: PairAgenda) -> list[tuple[int, int]]:
    n = len(phi.universe)
    if agenda.universe != phi.universe:
        raise AgendaError("agenda is over a different universe")
    off = [(i, j) for i, j in agenda.sequence if i != j]
    if any(not (0 <= i < n and 0 <= j < n) for i, j in agenda.sequence):
        raise AgendaError("agenda names an alternative outside the universe")
    if len(off) != n * (n - 1) or len(set(off)) != len(off):
        raise AgendaError("agenda must list every ordered pair exactly once")
    strengths = [phi.phi[i][j] for i, j in off]
    for k in range(1, len(strengths)):
        if strengths[k] > strengths[k - 1]:
            i, j = off[k]
            raise AgendaError(f"agenda is not strength-descending at pair {phi.universe.labels[i]},{phi.universe.labels[j]}")
    return off


def _lock(reach: list[int], a: int, b: int) -> bool:
    """Process pair ``(a, b)``; returns whether it was locked in."""
    if a == b or reach[b] >> a & 1:
        return False
    gained = (1 << b) | reach[b]
    bit_a = 1 << a
    for x in range(len(reach)):
        if x == a or reach[x] & bit_a:
            reach[x] |= gained
    return True


def _order_from_reach(universe: AlternativeSet, reach: Sequence[int]) -> LinearOrder:
    n = len(universe)
    ranked = sorted(range(n), key=lambda i: -bin(reach[i]).count("1"))
    if [bin(reach[i]).count("1") for i in ranked] != list(range(n - 1, -1, -1)):
        raise ConsistencyError("ranked pairs did not produce a linear order")
    return LinearOrder(universe, tuple(ranked))


def ranked_pairs(phi: StrengthMatrix, agenda: PairAgenda | None = None) -> LinearOrder:
    """Lock pairs in agenda order unless a reverse path already exists."""
    if agenda is None:
        agenda = default_agenda(phi)
    _validate_agenda(phi, agenda)
    reach = [0] * len(phi.universe)
    for a, b in agenda.sequence:
        _lock(reach, a, b)
    return _order_from_reach(phi.universe, reach)


@dataclass(frozen=True)
class RankedPairsOutcomes:
    orders: list[LinearOrder]
    truncated: bool

    @property
    def winners(self) -> frozenset[str]:
        return frozenset(o.top for o in self.orders)


def _strength_blocks(phi: StrengthMatrix) -> list[list[tuple[int, int]]]:
    blocks: dict[Fraction, list[tuple[int, int]]] = {}
    for i, j, v in phi.off_diagonal():
        blocks.setdefault(v, []).append((i, j))
    return [blocks[v] for v in sorted(blocks, reverse=True)]


def _undecided(state: Sequence[int], block) -> list[tuple[int, int]]:
    return [(a, b) for a, b in block if not (state[a] >> b & 1 or state[b] >> a & 1)]


def ranked_pairs_outcomes(phi: StrengthMatrix, cap: int = RANKED_PAIRS_BUDGET) -> RankedPairsOutcomes:
    """Distinct ranked-pairs results over tie-breaks inside equal-strength blocks.

    A processed pair is decided for good: locked, already implied, or
    blocked by a reverse path. So which pairs of a block remain open depends
    only on the reachability state, and every permutation of the block
    amounts to locking open pairs one at a time. The search walks distinct
    states instead of permutations.

    When the blocks admit at most ``cap`` permutations in total the search is
    exhaustive. Otherwise at most ``cap`` transitions are explored; past that
    each state is completed in agenda order and ``truncated`` is set. Every
    returned order is a genuine ranked-pairs result either way.
    """
    n = len(phi.universe)
    blocks = _strength_blocks(phi)
    permutations = 1
    for block in blocks:
        permutations *= math.factorial(len(block))
    budget = None if permutations <= cap else cap
    truncated = False
    states = {(0,) * n}
    for block in blocks:
        done = set()
        frontier, seen = states, set(states)
        while frontier:
            nxt = set()
            for state in sorted(frontier):
                open_pairs = _undecided(state, block)
                if not open_pairs:
                    done.add(state)
                    continue
                if budget is not None and budget < len(open_pairs):
                    truncated = True
                    reach = list(state)
                    for a, b in open_pairs:
                        _lock(reach, a, b)
                    done.add(tuple(reach))
                    continue
                if budget is not None:
                    budget -= len(open_pairs)
                for a, b in open_pairs:
                    reach = list(state)
                    _lock(reach, a, b)
                    key = tuple(reach)
                    if key not in seen:
                        seen.add(key)
                        nxt.add(key)
            frontier = nxt
        states = done
    orders = sorted({_order_from_reach(phi.universe, s) for s in states}, key=lambda o: o.sequence)
    return RankedPairsOutcomes(orders, truncated)


@dataclass(frozen=True)
class KemenyResult:
    orders: list[LinearOrder]
    score: int
    total: int
    truncated: bool


def kemeny_orders(t: TallyMatrix, cap: int | None = DEFAULT_CAP) -> KemenyResult:
    """All orders maximising the summed pairwise support ``N[a,b]`` for a above b.

    Exact subset dynamic programme; refuses universes above ``KEMENY_LIMIT``.
    """
    u = t.universe
    n = len(u)
    if n > KEMENY_LIMIT:
        raise GuardError(f"Kemeny search is limited to {KEMENY_LIMIT} alternatives, got {n}")
    flat = [t.counts[i][j] for i in range(n) for j in range(n)]
    table = _kernels.kemeny_table(flat, n)
    full = u.full_mask

    def gain(x, rest):
        row = t.counts[x]
        return sum(row[y] for y in range(n) if rest >> y & 1)

    def choices(s):
        for x in range(n):
            if s >> x & 1:
                rest = s & ~(1 << x)
                if gain(x, rest) + table[rest] == table[s]:
                    yield x, rest

    counts = {0: 1}

    def count(s):
        if s not in counts:
            counts[s] = sum(count(rest) for _, rest in choices(s))
        return counts[s]

    orders: list[LinearOrder] = []
    prefix: list[int] = []

    def walk(s):
        if cap is not None and len(orders) >= cap:
            return
        if s == 0:
            orders.append(LinearOrder(u, tuple(prefix)))
            return
        for x, rest in choices(s):
            prefix.append(x)
            walk(rest)
            prefix.pop()

    walk(full)
    total = count(full)
    return KemenyResult(orders, int(table[full]), total, len(orders) < total)


@dataclass(frozen=True)
class BordaResult:
    scores: dict[str, int]
    orders: list[LinearOrder]
    truncated: bool


def borda_ranking(t: TallyMatrix, cap: int | None = DEFAULT_CAP) -> BordaResult:
    """Score ``x`` by ``sum_y N[x,y]``; every order sorted by descending score."""
    u = t.universe
    n = len(u)
    score = [sum(t.counts[i]) for i in range(n)]
    levels = sorted(set(score), reverse=True)
    groups = [[i for i in range(n) if score[i] == s] for s in levels]
    orders = []
    truncated = False
    for combo in itertools.product(*(itertools.permutations(g) for g in groups)):
        if cap is not None and len(orders) >= cap:
            truncated = True
            break
        orders.append(LinearOrder(u, tuple(x for part in combo for x in part)))
    return BordaResult({u.labels[i]: score[i] for i in range(n)}, orders, truncated)


def _max_incoming(phi: StrengthMatrix) -> list[Fraction]:
    n = len(phi.universe)
    return [max(phi.phi[b][a] for b in range(n) if b != a) for a in range(n)]


def simpson_kramer(phi: StrengthMatrix, ladder: ThresholdLadder | None = None) -> frozenset[str]:
    """Min-max winners, cross-checked against the nonempty maximal-set intersection."""
    u = phi.universe
    worst = _max_incoming(phi)
    best = min(worst)
    direct = frozenset(u.labels[a] for a in range(len(u)) if worst[a] == best)
    via_sets = frozenset(u.labels)
    for _, rel in ladder_relations(phi, ladder or critical_thresholds(phi)):
        m = maximal_set(u.labels, rel)
        if m:
            via_sets &= m
    if direct != via_sets:
        raise ConsistencyError(f"min-max winners {sorted(direct)} differ from maximal-set intersection {sorted(via_sets)}")
    return direct


@dataclass(frozen=True)
class WinnerReport:
    """Winner sets side by side.

    ``ladder_meet`` intersects, over the threshold ladder, the maximal set of
    ``R_alpha`` where it is nonempty and that of ``S(R_alpha)`` otherwise. It
    can be empty.
    """

    sk: frozenset[str]
    schulze: frozenset[str]
    ranked_pairs: frozenset[str]
    s_maximal: frozenset[str]
    ladder_meet: frozenset[str]
    ranked_pairs_truncated: bool = False


def winner_report(phi: StrengthMatrix, ladder: ThresholdLadder | None = None, cap: int = RANKED_PAIRS_BUDGET) -> WinnerReport:
    u = phi.universe
    ladder = ladder or critical_thresholds(phi)
    w = widest_paths(phi)
    everyone = frozenset(u.labels)
    schulze = maximal_set(u.labels, schulze_relation(w))
    rp = ranked_pairs_outcomes(phi, cap)
    s_max = maximal_set(u.labels, s_constraint(phi, w))

    t_meet = s_meet = ladder_meet = everyone
    for step in ladder_closures(phi):
        t_meet &= maximal_set(u.labels, step.t_closure)
        s_meet &= maximal_set(u.labels, step.s_closure)
        m = maximal_set(u.labels, step.relation)
        ladder_meet &= m if m else maximal_set(u.labels, step.s_closure)

    if schulze != t_meet:
        raise ConsistencyError("Schulze winners differ from the intersection of maximal sets of T(R_alpha)")
    if s_max != s_meet:
        raise ConsistencyError("S-constraint maximal set differs from the intersection over S(R_alpha)")
    if not (schulze | rp.winners) <= s_max:
        raise ConsistencyError("Schulze or ranked-pairs winners fall outside the S-constraint maximal set")
    return WinnerReport(
        sk=simpson_kramer(phi, ladder),
        schulze=schulze,
        ranked_pairs=rp.winners,
        s_maximal=s_max,
        ladder_meet=ladder_meet,
        ranked_pairs_truncated=rp.truncated,
    )
