"""Irreflexive binary relations on a finite set of alternatives.

Relations are stored as one integer bitmask per row: bit ``j`` of
``rows[i]`` is set iff ``(i, j)`` is in the relation. The diagonal bit is
never set, so every relation is irreflexive by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from ordo import _kernels

#: Largest universe for which the exact number of respecting orders is counted.
COUNT_LIMIT = 16
DEFAULT_CAP = 10_000


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class AlternativeSet:
    """Ordered set of at least three distinct alternative labels."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 3:
            raise ValueError("at least 3 alternatives are required")
        if any(not isinstance(x, str) or not x for x in labels):
            raise ValueError("alternative labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            raise ValueError("alternative labels must be distinct")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(labels)})

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown alternative {label!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask_of(self, labels: Iterable[str]) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in _bits(mask))

    def sorted_labels(self, labels: Iterable[str]) -> list[str]:
        """Labels sorted by their position in the universe."""
        return sorted(labels, key=self.index)


@dataclass(frozen=True)
class BinaryRelation:
    """An irreflexive relation; ``rows[i]`` is the bitmask of successors of ``i``."""

    universe: AlternativeSet
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(self.universe)
        if len(rows) != n:
            raise ValueError("row count does not match the universe")
        full = self.universe.full_mask
        for i, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError("row mask outside the universe")
            if row >> i & 1:
                raise ValueError("the diagonal is not representable")

    @classmethod
    def empty(cls, universe: AlternativeSet) -> "BinaryRelation":
        return cls(universe, (0,) * len(universe))

    @classmethod
    def from_pairs(cls, universe: AlternativeSet, pairs: Iterable[tuple[str, str]]) -> "BinaryRelation":
        rows = [0] * len(universe)
        for a, b in pairs:
            i, j = universe.index(a), universe.index(b)
            if i == j:
                raise ValueError(f"reflexive pair ({a},{a}) is not allowed")
            rows[i] |= 1 << j
        return cls(universe, tuple(rows))

    @classmethod
    def from_index_pairs(cls, universe: AlternativeSet, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        rows = [0] * len(universe)
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(universe, tuple(rows))

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def __contains__(self, pair):
        a, b = pair
        return self.has(self.universe.index(a), self.universe.index(b))

    def index_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j in _bits(row)]

    def pairs(self) -> list[tuple[str, str]]:
        labels = self.universe.labels
        return [(labels[i], labels[j]) for i, j in self.index_pairs()]

    def __len__(self):
        return sum(bin(row).count("1") for row in self.rows)

    def __bool__(self):
        return any(self.rows)

    def _check(self, other):
        if other.universe != self.universe:
            raise ValueError("relations are over different universes")

    def __or__(self, other):
        self._check(other)
        return BinaryRelation(self.universe, tuple(x | y for x, y in zip(self.rows, other.rows)))

    def __and__(self, other):
        self._check(other)
        return BinaryRelation(self.universe, tuple(x & y for x, y in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other)
        return BinaryRelation(self.universe, tuple(x & ~y for x, y in zip(self.rows, other.rows)))

    def __le__(self, other):
        self._check(other)
        return all(x & ~y == 0 for x, y in zip(self.rows, other.rows))

    def __ge__(self, other):
        return other <= self

    def converse(self) -> "BinaryRelation":
        n = len(self.universe)
        cols = [0] * n
        for i, j in self.index_pairs():
            cols[j] |= 1 << i
        return BinaryRelation(self.universe, tuple(cols))

    def __str__(self):
        return "{" + ", ".join(f"({a},{b})" for a, b in self.pairs()) + "}"


@dataclass(frozen=True)
class RelationProperties:
    complete: bool
    transitive: bool
    negatively_transitive: bool
    suzumura_consistent: bool
    p_acyclic: bool
    asymmetric: bool


@dataclass(frozen=True)
class LinearOrder:
    """A strict ranking; ``sequence[0]`` is the top alternative (indices)."""

    universe: AlternativeSet
    sequence: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.sequence)
        object.__setattr__(self, "sequence", seq)
        if sorted(seq) != list(range(len(self.universe))):
            raise ValueError("a linear order must list every alternative exactly once")

    @classmethod
    def from_labels(cls, universe: AlternativeSet, labels: Sequence[str]) -> "LinearOrder":
        return cls(universe, tuple(universe.index(x) for x in labels))

    @classmethod
    def parse(cls, universe: AlternativeSet, text: str) -> "LinearOrder":
        """Parse ``"e,a,c,b,d"`` (commas and/or whitespace)."""
        return cls.from_labels(universe, text.replace(",", " ").split())

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[i] for i in self.sequence)

    @property
    def top(self) -> str:
        return self.universe.labels[self.sequence[0]]

    def positions(self) -> list[int]:
        pos = [0] * len(self.sequence)
        for rank, i in enumerate(self.sequence):
            pos[i] = rank
        return pos

    def prefers(self, a: str, b: str) -> bool:
        pos = self.positions()
        return pos[self.universe.index(a)] < pos[self.universe.index(b)]

    def as_relation(self) -> BinaryRelation:
        rows = [0] * len(self.sequence)
        below = 0
        for i in reversed(self.sequence):
            rows[i] = below
            below |= 1 << i
        return BinaryRelation(self.universe, tuple(rows))

    def __str__(self):
        return ",".join(self.labels)


@dataclass(frozen=True)
class RespectCheck:
    ok: bool
    witness: tuple[str, str] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Enumeration:
    """Result of enumerating respecting orders.

    ``total`` is exact when ``exact`` is true, otherwise a lower bound.
    """

    orders: list[LinearOrder]
    total: int
    truncated: bool
    exact: bool


def asymmetric_part(r: BinaryRelation) -> BinaryRelation:
    conv = r.converse().rows
    return BinaryRelation(r.universe, tuple(x & ~y for x, y in zip(r.rows, conv)))


def transitive_closure(r: BinaryRelation) -> BinaryRelation:
    """Pairs joined by a path of distinct alternatives in ``r``."""
    return BinaryRelation(r.universe, tuple(_kernels.closure(list(r.rows), len(r.universe))))


def suzumura_closure(r: BinaryRelation) -> BinaryRelation:
    """``r`` plus every pair of ``T(r)`` whose converse is already in ``r``."""
    t = transitive_closure(r)
    return r | (t & r.converse())


def _is_transitive(rows: Sequence[int]) -> bool:
    # Only triples of distinct alternatives are constrained: the diagonal
    # does not exist, so (a,b),(b,a) never demands (a,a).
    for i, row in enumerate(rows):
        for j in _bits(row):
            if rows[j] & ~row & ~(1 << i):
                return False
    return True


def relation_properties(r: BinaryRelation) -> RelationProperties:
    n = len(r.universe)
    full = r.universe.full_mask
    conv = r.converse().rows
    asym = all(row & c == 0 for row, c in zip(r.rows, conv))
    complete = all((row | c) | (1 << i) == full for i, (row, c) in enumerate(zip(r.rows, conv)))
    complement = [full & ~row & ~(1 << i) for i, row in enumerate(r.rows)]
    p = asymmetric_part(r)
    t = _kernels.closure(list(r.rows), n)
    p_conv = p.converse().rows
    suzumura = all(t[i] & p_conv[i] == 0 for i in range(n))
    tp = _kernels.closure(list(p.rows), n)
    p_acyclic = _no_mutual(tp)
    return RelationProperties(
        complete=complete,
        transitive=_is_transitive(r.rows),
        negatively_transitive=_is_transitive(complement),
        suzumura_consistent=suzumura,
        p_acyclic=p_acyclic,
        asymmetric=asym,
    )


def _no_mutual(rows: Sequence[int]) -> bool:
    for i, row in enumerate(rows):
        for j in _bits(row):
            if rows[j] >> i & 1:
                return False
    return True


def is_p_acyclic(r: BinaryRelation) -> bool:
    p = asymmetric_part(r)
    return _no_mutual(_kernels.closure(list(p.rows), len(r.universe)))


def maximal_set(subset: Iterable[str], r: BinaryRelation) -> frozenset[str]:
    """Members of ``subset`` not strictly beaten by another member."""
    u = r.universe
    mask = u.mask_of(subset)
    if not mask:
        raise ValueError("maximal_set needs a nonempty subset")
    return u.labels_of(_maximal_mask(mask, _strict_predecessors(r)))


def _strict_predecessors(r: BinaryRelation) -> list[int]:
    """``preds[i]``: bitmask of ``j`` with ``(j, i)`` in P(r)."""
    return list(asymmetric_part(r).converse().rows)


def _maximal_mask(mask: int, preds: Sequence[int]) -> int:
    out = 0
    for i in _bits(mask):
        if preds[i] & mask == 0:
            out |= 1 << i
    return out


def iter_respecting_orders(r: BinaryRelation) -> Iterator[LinearOrder]:
    """Every branch of sequential maximal ordering, lexicographically.

    Yields nothing when ``r`` has a P-cycle.
    """
    u = r.universe
    if not is_p_acyclic(r):
        return
    preds = _strict_predecessors(r)
    n = len(u)
    full = u.full_mask
    prefix: list[int] = []

    def walk(placed):
        if placed == full:
            yield LinearOrder(u, tuple(prefix))
            return
        for i in range(n):
            if not placed >> i & 1 and preds[i] & ~placed == 0:
                prefix.append(i)
                yield from walk(placed | 1 << i)
                prefix.pop()

    yield from walk(0)


def count_respecting_orders(r: BinaryRelation) -> int | None:
    """Exact number of respecting orders, or None above ``COUNT_LIMIT``."""
    n = len(r.universe)
    if not is_p_acyclic(r):
        return 0
    if n > COUNT_LIMIT:
        return None
    return int(_kernels.count_extensions(_strict_predecessors(r), n))


def enumerate_respecting_orders(r: BinaryRelation, cap: int | None = DEFAULT_CAP) -> Enumeration:
    if cap is not None and cap < 1:
        raise ValueError("cap must be a positive count")
    orders = []
    truncated = False
    for order in iter_respecting_orders(r):
        if cap is not None and len(orders) == cap:
            truncated = True
            break
        orders.append(order)
    counted = count_respecting_orders(r)
    if counted is not None:
        return Enumeration(orders, counted, truncated, True)
    return Enumeration(orders, len(orders), truncated, not truncated)


def respects(order: LinearOrder, r: BinaryRelation) -> RespectCheck:
    """Whether every strict pair of ``r`` is ranked the same way by ``order``."""
    if order.universe != r.universe:
        raise ValueError("order and relation are over different universes")
    pos = order.positions()
    labels = r.universe.labels
    for i, j in asymmetric_part(r).index_pairs():
        if pos[i] > pos[j]:
            return RespectCheck(False, (labels[i], labels[j]))
    return RespectCheck(True)
