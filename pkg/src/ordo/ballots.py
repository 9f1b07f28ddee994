"""Ballot files, profiles, pairwise tallies and strength matrices.

Ballot file grammar (UTF-8, line oriented, ``#`` starts a comment)::

    alternatives: a b c d e
    5: a > c > b > e > d          # linear ballot
    1: [a d] > b > c              # weak ballot, a and d tied
    2: rel (a,b) (b,c)            # explicit relation, strict part derived

All strengths are :class:`fractions.Fraction`; no floating point is used.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ordo.errors import BallotParseError
from ordo.relation import AlternativeSet, BinaryRelation, asymmetric_part, relation_properties

HALF = Fraction(1, 2)

_LABEL = re.compile(r"[^\s\[\]>(),:#]+\Z")
_LINE = re.compile(r"\s*(\d+)\s*:(.*)\Z")
_PAIR = re.compile(r"\s*\(\s*([^\s\[\]>(),:#]+)\s*,\s*([^\s\[\]>(),:#]+)\s*\)")


class PreferenceKind(enum.Enum):
    LINEAR = "linear"
    WEAK = "weak"
    GENERAL = "general"


@dataclass(frozen=True)
class VoterPreference:
    kind: PreferenceKind
    relation: BinaryRelation
    strict: BinaryRelation

    @classmethod
    def weak(cls, universe: AlternativeSet, groups: Sequence[Sequence[str]]) -> "VoterPreference":
        """Ranking of tie groups, best first. Tied members relate both ways."""
        seen = [x for g in groups for x in g]
        if sorted(universe.index(x) for x in seen) != list(range(len(universe))):
            raise ValueError("a weak ballot must list every alternative exactly once")
        rows = [0] * len(universe)
        below = 0
        for group in reversed(groups):
            gmask = universe.mask_of(group)
            for x in group:
                i = universe.index(x)
                rows[i] = below | (gmask & ~(1 << i))
            below |= gmask
        relation = BinaryRelation(universe, tuple(rows))
        kind = PreferenceKind.LINEAR if all(len(g) == 1 for g in groups) else PreferenceKind.WEAK
        return cls(kind, relation, asymmetric_part(relation))

    @classmethod
    def linear(cls, universe: AlternativeSet, order: Sequence[str]) -> "VoterPreference":
        return cls.weak(universe, [[x] for x in order])

    @classmethod
    def general(cls, universe: AlternativeSet, pairs: Iterable[tuple[str, str]]) -> "VoterPreference":
        relation = BinaryRelation.from_pairs(universe, pairs)
        return cls(PreferenceKind.GENERAL, relation, asymmetric_part(relation))

    def __post_init__(self):
        if self.kind is PreferenceKind.LINEAR:
            props = relation_properties(self.relation)
            if not (props.complete and props.asymmetric and props.transitive):
                raise ValueError("linear preference must be complete, asymmetric and transitive")


@dataclass(frozen=True)
class Profile:
    universe: AlternativeSet
    entries: tuple[tuple[int, VoterPreference], ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for count, pref in entries:
            if count < 1:
                raise ValueError("multiplicities must be positive")
            if pref.relation.universe != self.universe:
                raise ValueError("preference over a different universe")
        if self.voters < 3:
            raise ValueError("at least 3 voters are required")

    @property
    def voters(self) -> int:
        return sum(count for count, _ in self.entries)

    def kinds(self) -> set[PreferenceKind]:
        return {pref.kind for _, pref in self.entries}

    @classmethod
    def aggregate(cls, universe: AlternativeSet, entries: Iterable[tuple[int, VoterPreference]]) -> "Profile":
        """Build a profile, merging identical preferences into one entry."""
        merged: dict[VoterPreference, int] = {}
        for count, pref in entries:
            merged[pref] = merged.get(pref, 0) + count
        return cls(universe, tuple((c, p) for p, c in merged.items()))

    @classmethod
    def from_orders(cls, labels: Sequence[str], ballots: Iterable[tuple[int, Sequence[str]]]) -> "Profile":
        """Convenience constructor for linear-order profiles."""
        universe = AlternativeSet(tuple(labels))
        return cls.aggregate(universe, ((n, VoterPreference.linear(universe, o)) for n, o in ballots))


def _label(token: str, universe: AlternativeSet, lineno: int) -> str:
    if token not in universe:
        raise BallotParseError(f"unknown alternative {token!r}", lineno)
    return token


def _parse_weak(body: str, universe: AlternativeSet, lineno: int) -> VoterPreference:
    groups = []
    for raw in body.split(">"):
        raw = raw.strip()
        if not raw:
            raise BallotParseError("empty group in ballot", lineno)
        if raw.startswith("["):
            if not raw.endswith("]"):
                raise BallotParseError(f"unterminated tie group {raw!r}", lineno)
            tokens = raw[1:-1].replace(",", " ").split()
            if not tokens:
                raise BallotParseError("empty tie group", lineno)
        else:
            tokens = raw.split()
            if len(tokens) != 1:
                raise BallotParseError(f"expected '>' between {' and '.join(tokens)}", lineno)
        for t in tokens:
            if not _LABEL.match(t):
                raise BallotParseError(f"malformed label {t!r}", lineno)
        groups.append([_label(t, universe, lineno) for t in tokens])
    if len(groups) < 2:
        raise BallotParseError("a ranked ballot needs at least two groups", lineno)
    flat = [x for g in groups for x in g]
    dupes = sorted({x for x in flat if flat.count(x) > 1}, key=universe.index)
    if dupes:
        raise BallotParseError(f"duplicate alternative {dupes[0]!r} in ballot", lineno)
    missing = [x for x in universe.labels if x not in flat]
    if missing:
        raise BallotParseError(f"ballot does not rank {', '.join(missing)}", lineno)
    return VoterPreference.weak(universe, groups)


def _parse_rel(body: str, universe: AlternativeSet, lineno: int) -> VoterPreference:
    pairs = []
    pos = 0
    while pos < len(body):
        if not body[pos:].strip():
            break
        m = _PAIR.match(body, pos)
        if not m:
            raise BallotParseError(f"malformed pair near {body[pos:].strip()!r}", lineno)
        a = _label(m.group(1), universe, lineno)
        b = _label(m.group(2), universe, lineno)
        if a == b:
            raise BallotParseError(f"reflexive pair ({a},{b})", lineno)
        pairs.append((a, b))
        pos = m.end()
    if not pairs:
        raise BallotParseError("'rel' ballot needs at least one pair", lineno)
    return VoterPreference.general(universe, pairs)


def parse_profile(text: str) -> Profile:
    """Parse ballot file contents into a :class:`Profile`.

    Raises :class:`BallotParseError` carrying the offending line number.
    """
    universe = None
    entries = []
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if universe is None:
            if not line.startswith("alternatives:"):
                raise BallotParseError("expected 'alternatives:' header", lineno)
            labels = line[len("alternatives:"):].replace(",", " ").split()
            for t in labels:
                if not _LABEL.match(t):
                    raise BallotParseError(f"malformed label {t!r}", lineno)
            if len(set(labels)) != len(labels):
                raise BallotParseError("duplicate alternative in header", lineno)
            if len(labels) < 3:
                raise BallotParseError("at least 3 alternatives are required", lineno)
            universe = AlternativeSet(tuple(labels))
            continue
        m = _LINE.match(line)
        if not m:
            raise BallotParseError("expected '<count>: <ballot>'", lineno)
        count = int(m.group(1))
        if count < 1:
            raise BallotParseError("count must be positive", lineno)
        body = m.group(2).strip()
        if re.match(r"rel(\s|\(|\Z)", body):
            pref = _parse_rel(body[3:], universe, lineno)
        else:
            pref = _parse_weak(body, universe, lineno)
        entries.append((count, pref))
    if universe is None:
        raise BallotParseError("missing 'alternatives:' header", last_line or 1)
    voters = sum(c for c, _ in entries)
    if voters < 3:
        raise BallotParseError(f"at least 3 voters are required, found {voters}", last_line)
    return Profile.aggregate(universe, entries)


def read_profile(path) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


@dataclass(frozen=True)
class TallyMatrix:
    """``counts[i][j]``: voters strictly preferring ``i`` to ``j``."""

    universe: AlternativeSet
    counts: tuple[tuple[int, ...], ...]
    voters: int

    def __getitem__(self, pair) -> int:
        a, b = pair
        return self.counts[self.universe.index(a)][self.universe.index(b)]

    def majority(self) -> BinaryRelation:
        """Pairs with ``N[a,b] > N[b,a]``."""
        n = len(self.universe)
        c = self.counts
        return BinaryRelation.from_index_pairs(
            self.universe, ((i, j) for i in range(n) for j in range(n) if i != j and c[i][j] > c[j][i])
        )


def tally(p: Profile) -> TallyMatrix:
    n = len(p.universe)
    counts = [[0] * n for _ in range(n)]
    for mult, pref in p.entries:
        for i, j in pref.strict.index_pairs():
            counts[i][j] += mult
    return TallyMatrix(p.universe, tuple(map(tuple, counts)), p.voters)


class StrengthRule(enum.Enum):
    """``RATIO``: n/(n+m), 1/2 when n=m=0.  ``MARGIN``: (|I|+n-m)/(2|I|)."""

    RATIO = "ratio"
    MARGIN = "margin"

    def f(self, n: int, m: int, voters: int) -> Fraction:
        if self is StrengthRule.RATIO:
            return Fraction(n, n + m) if n + m else HALF
        return Fraction(voters + n - m, 2 * voters)


@dataclass(frozen=True)
class StrengthMatrix:
    """Exact pairwise strengths; the diagonal holds ``None``."""

    universe: AlternativeSet
    phi: tuple[tuple[Fraction | None, ...], ...]
    rule: StrengthRule | None = None

    def __getitem__(self, pair) -> Fraction:
        a, b = pair
        return self.phi[self.universe.index(a)][self.universe.index(b)]

    def off_diagonal(self):
        """Yield ``(i, j, strength)`` for every ordered pair ``i != j``."""
        for i, row in enumerate(self.phi):
            for j, v in enumerate(row):
                if i != j:
                    yield i, j, v


def strength_matrix(t: TallyMatrix, rule: StrengthRule = StrengthRule.RATIO) -> StrengthMatrix:
    n = len(t.universe)
    c = t.counts
    phi = tuple(
        tuple(None if i == j else rule.f(c[i][j], c[j][i], t.voters) for j in range(n)) for i in range(n)
    )
    return StrengthMatrix(t.universe, phi, rule)
