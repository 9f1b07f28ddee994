"""Brute-force oracles and random profile generation shared by the tests.

The oracles work on plain label sets and dicts and never call into the
library's algorithms, so agreement with them is independent evidence.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

from ordo import AlternativeSet, Profile, StrengthRule, VoterPreference, read_profile, strength_matrix, tally

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
HALF = Fraction(1, 2)
KINDS = ("linear", "weak", "general")


def fixture(name: str) -> Path:
    return FIXTURES / name


# ---------------------------------------------------------------- profiles


def random_preference(rng: random.Random, universe: AlternativeSet, kind: str) -> VoterPreference:
    labels = list(universe.labels)
    if kind == "linear":
        rng.shuffle(labels)
        return VoterPreference.linear(universe, labels)
    if kind == "weak":
        rng.shuffle(labels)
        cuts = sorted(rng.sample(range(1, len(labels)), rng.randint(1, len(labels) - 1)))
        groups = [labels[i:j] for i, j in zip([0] + cuts, cuts + [len(labels)])]
        return VoterPreference.weak(universe, groups)
    density = rng.choice((0.15, 0.3, 0.5))
    pairs = [(a, b) for a in labels for b in labels if a != b and rng.random() < density]
    return VoterPreference.general(universe, pairs)


def random_profile(rng: random.Random, kind: str, n_alts: int, n_voters: int) -> Profile:
    universe = AlternativeSet(tuple("abcdefghij"[:n_alts]))
    prefs = [random_preference(rng, universe, kind) for _ in range(n_voters)]
    return Profile.aggregate(universe, [(1, p) for p in prefs])


def profile_corpus(seed: int, count: int, alts=(3, 6), voters=(3, 15)):
    """``count`` profiles cycling through the three ballot kinds."""
    rng = random.Random(seed)
    for k in range(count):
        kind = KINDS[k % 3]
        yield kind, random_profile(rng, kind, rng.randint(*alts), rng.randint(*voters))


# ---------------------------------------------------------------- oracles


def reachable_pairs(pairs, labels):
    """Pairs (a, b), a != b, joined by a path of distinct alternatives."""
    succ = {x: {b for a, b in pairs if a == x} for x in labels}
    out = set()
    for a in labels:
        seen, stack = set(), [a]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out |= {(a, b) for b in seen if b != a}
    return out


def strict(pairs):
    pairs = set(pairs)
    return {(a, b) for a, b in pairs if (b, a) not in pairs}


def suzumura_oracle(pairs, labels):
    """Smallest Suzumura-consistent superset, by repeatedly repairing violations."""
    rel = set(pairs)
    while True:
        reach = reachable_pairs(rel, labels)
        bad = {(a, b) for a, b in reach if (b, a) in strict(rel)}
        if not bad:
            return rel
        rel |= bad


def has_p_cycle(pairs, labels):
    p = strict(pairs)
    return any((b, a) in reachable_pairs(p, labels) for a, b in p)


def respecting_by_filter(pairs, labels):
    p = strict(pairs)
    return [
        perm
        for perm in itertools.permutations(labels)
        if all(perm.index(a) < perm.index(b) for a, b in p)
    ]


def widest_by_paths(phi, labels):
    """Max over simple majority paths of the minimum edge strength; 0 if none."""
    edges = {(a, b): v for (a, b), v in phi.items() if v > HALF}
    best = {}
    for a in labels:
        def walk(x, visited, bottleneck):
            for (u, v), w in edges.items():
                if u == x and v not in visited:
                    s = min(bottleneck, w)
                    if s > best.get((a, v), 0):
                        best[(a, v)] = s
                    walk(v, visited | {v}, s)
        walk(a, {a}, Fraction(2))
    return {(a, b): best.get((a, b), Fraction(0)) for a in labels for b in labels if a != b}


def phi_dict(sm):
    labels = sm.universe.labels
    return {(labels[i], labels[j]): v for i, j, v in sm.off_diagonal()}


def counts_dict(t):
    labels = t.universe.labels
    return {(a, b): t.counts[i][j] for i, a in enumerate(labels) for j, b in enumerate(labels) if i != j}


def ladder_oracle(phi):
    """Every distinct R_alpha, found by sweeping alpha over all strength values."""
    alphas = sorted({HALF} | {v for v in phi.values() if HALF < v < 1})
    return [(al, {p for p, v in phi.items() if v > al}) for al in alphas]


def s_and_t_unions(phi, labels):
    s_union, t_union = set(), set()
    for _, rel in ladder_oracle(phi):
        s_union |= strict(suzumura_oracle(rel, labels))
        t_union |= strict(rel | reachable_pairs(rel, labels))
    return s_union, t_union


def kemeny_by_permutations(counts, labels):
    best, winners = None, []
    for perm in itertools.permutations(labels):
        score = sum(counts[(perm[i], perm[j])] for i in range(len(perm)) for j in range(i + 1, len(perm)))
        if best is None or score > best:
            best, winners = score, [perm]
        elif score == best:
            winners.append(perm)
    return best, winners


def ranked_pairs_by_agendas(phi, labels, limit=50_000):
    """Outcomes over every strength-descending agenda (None if too many)."""
    blocks = {}
    for p, v in phi.items():
        blocks.setdefault(v, []).append(p)
    ordered = [blocks[v] for v in sorted(blocks, reverse=True)]
    total = 1
    for b in ordered:
        for k in range(2, len(b) + 1):
            total *= k
    if total > limit:
        return None
    outcomes = set()
    for combo in itertools.product(*(itertools.permutations(b) for b in ordered)):
        locked = set()
        for a, b in itertools.chain.from_iterable(combo):
            if (b, a) not in reachable_pairs(locked, labels):
                locked.add((a, b))
        closure = reachable_pairs(locked, labels)
        order = tuple(sorted(labels, key=lambda x: -sum(1 for y in labels if (x, y) in closure)))
        outcomes.add(order)
    return outcomes


def ordered_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    for k in range(1, len(items) + 1):
        for first in itertools.combinations(items, k):
            rest = [x for x in items if x not in first]
            for tail in ordered_partitions(rest):
                yield [set(first)] + tail


def ecc_by_partitions(order, counts, labels):
    """The criterion in its all-partitions form."""
    pos = {x: i for i, x in enumerate(order)}
    for part in ordered_partitions(labels):
        if len(part) < 2:
            continue
        dominated = all(
            counts[(x, y)] > counts[(y, x)]
            for i in range(len(part))
            for j in range(i + 1, len(part))
            for x in part[i]
            for y in part[j]
        )
        if dominated and any(
            pos[x] > pos[y] for i in range(len(part)) for j in range(i + 1, len(part)) for x in part[i] for y in part[j]
        ):
            return False
    return True


def maximal_by_definition(subset, pairs):
    p = strict(pairs)
    return {a for a in subset if not any((b, a) in p for b in subset if b != a)}


def load(name: str, rule: str = "ratio"):
    """(profile, tally, strengths) for a fixture file."""
    p = read_profile(fixture(name))
    t = tally(p)
    return p, t, strength_matrix(t, StrengthRule(rule))
