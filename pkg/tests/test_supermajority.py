import random
from fractions import Fraction as F

import pytest

from ordo import (
    BinaryRelation,
    Profile,
    StrengthRule,
    alpha_star,
    critical_thresholds,
    parse_profile,
    r_alpha,
    relation_properties,
    strength_matrix,
    tally,
)
from ordo.supermajority import ladder_relations
from support import KINDS, ladder_oracle, load, phi_dict, random_profile


def pairs(*ps):
    return sorted(ps)


def all_tie_profile():
    return Profile.from_orders("abc", [(1, "abc"), (1, "cba"), (1, "bac"), (1, "cab"), (1, "acb"), (1, "bca")])


class TestRAlpha:
    def test_nine_voter_relations(self):
        _, _, phi = load("nine_voter.ballots")
        assert r_alpha(phi, F(3, 5)).pairs() == pairs(
            ("a", "b"), ("e", "b"), ("b", "c"), ("c", "a"), ("c", "e"), ("a", "e"))
        assert r_alpha(phi, F(2, 3)).pairs() == [("a", "e")]
        assert r_alpha(phi, F(99, 100)).pairs() == [("a", "e")]

    def test_all_ties_give_empty_relations(self):
        phi = strength_matrix(tally(all_tie_profile()))
        for alpha in (F(1, 2), F(2, 3), F(9, 10)):
            assert not r_alpha(phi, alpha)
        assert critical_thresholds(phi).thresholds == ()

    @pytest.mark.parametrize("alpha", [F(49, 100), F(1), 2])
    def test_alpha_outside_range(self, alpha):
        _, _, phi = load("nine_voter.ballots")
        with pytest.raises(ValueError):
            r_alpha(phi, alpha)

    def test_threshold_is_strict(self):
        _, _, phi = load("nine_voter.ballots")
        assert ("a", "b") in r_alpha(phi, F(2, 3) - F(1, 1000))
        assert ("a", "b") not in r_alpha(phi, F(2, 3))


class TestLadder:
    def test_forty_seven_thresholds(self):
        for rule in ("ratio", "margin"):
            _, _, phi = load("forty_seven.ballots", rule)
            ladder = critical_thresholds(phi)
            assert ladder.thresholds == tuple(F(k, 47) for k in (24, 26, 27, 29, 30, 31, 34))
            assert ladder.representatives == (F(1, 2),) + ladder.thresholds

    def test_nine_voter_thresholds(self):
        _, _, phi = load("nine_voter.ballots")
        ladder = critical_thresholds(phi)
        assert ladder.thresholds == (F(5, 9), F(2, 3), F(1))
        assert ladder.representatives == (F(1, 2), F(5, 9), F(2, 3))
        assert ladder.interval(2) == (F(2, 3), F(1))
        assert ladder.representative_for(F(3, 5)) == F(5, 9)

    def test_unanimous_single_pair(self):
        phi = strength_matrix(tally(parse_profile("alternatives: a b c\n3: rel (a,b)\n")))
        ladder = critical_thresholds(phi)
        assert ladder.thresholds == (F(1),) and ladder.representatives == (F(1, 2),)

    def test_ladder_matches_sweep_oracle(self):
        rng = random.Random(21)
        for k in range(60):
            t = tally(random_profile(rng, KINDS[k % 3], rng.randint(3, 6), rng.randint(3, 15)))
            phi_m = strength_matrix(t, StrengthRule.RATIO if k % 2 else StrengthRule.MARGIN)
            expected = ladder_oracle(phi_dict(phi_m))
            got = ladder_relations(phi_m)
            assert [a for a, _ in got] == [a for a, _ in expected]
            for (_, rel), (_, exp) in zip(got, expected):
                assert set(rel.pairs()) == exp

    def test_random_alpha_matches_its_representative(self):
        rng = random.Random(22)
        _, _, phi = load("forty_seven.ballots")
        ladder = critical_thresholds(phi)
        for _ in range(200):
            alpha = F(rng.randint(500, 999), 1000)
            assert r_alpha(phi, alpha) == r_alpha(phi, ladder.representative_for(alpha))


class TestAlphaStar:
    def test_nine_voter(self):
        _, _, phi = load("nine_voter.ballots")
        assert alpha_star(phi).value == F(2, 3)

    @pytest.mark.parametrize("rule", ["ratio", "margin"])
    def test_forty_seven(self, rule):
        _, _, phi = load("forty_seven.ballots", rule)
        star = alpha_star(phi)
        assert star.exists and star.value == F(29, 47)
        below = r_alpha(phi, F(27, 47))
        assert not relation_properties(below).p_acyclic

    def test_empty_majority_gives_one_half(self):
        assert alpha_star(strength_matrix(tally(all_tie_profile()))).value == F(1, 2)

    def test_three_voter_general_cycle(self):
        # every cycle edge has strength 1 under the ratio rule, so R_alpha never loses the cycle
        _, _, phi = load("general_cycle.ballots", "ratio")
        assert not alpha_star(phi).exists
        assert r_alpha(phi, F(99, 100)).pairs() == [("a", "b"), ("b", "c"), ("c", "a")]
        _, _, phi = load("general_cycle.ballots", "margin")
        assert alpha_star(phi).value == F(2, 3)
        assert not r_alpha(phi, F(2, 3))


def test_majority_relation_is_rule_independent():
    rng = random.Random(23)
    for k in range(60):
        t = tally(random_profile(rng, KINDS[k % 3], rng.randint(3, 6), rng.randint(3, 15)))
        expected = BinaryRelation.from_index_pairs(
            t.universe, [(i, j) for i in range(len(t.universe)) for j in range(len(t.universe))
                         if i != j and t.counts[i][j] > t.counts[j][i]])
        for rule in StrengthRule:
            assert r_alpha(strength_matrix(t, rule), F(1, 2)) == expected
