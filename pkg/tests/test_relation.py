import itertools

import pytest

from ordo import (
    AlternativeSet,
    BinaryRelation,
    LinearOrder,
    asymmetric_part,
    enumerate_respecting_orders,
    maximal_set,
    relation_properties,
    respects,
    suzumura_closure,
    transitive_closure,
)
from ordo.relation import COUNT_LIMIT, count_respecting_orders, iter_respecting_orders

ABC = AlternativeSet(("a", "b", "c"))
ABCD = AlternativeSet(("a", "b", "c", "d"))
ABCDE = AlternativeSet(("a", "b", "c", "d", "e"))

# majority relation of the eight-voter example: cycle a>b>c>a, a and b beat d
CYCLE_ABCD = BinaryRelation.from_pairs(ABCD, [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("b", "d")])
# nine-voter example at the lowest threshold
NINE_VOTER_LOW = BinaryRelation.from_pairs(
    ABCDE,
    [("a", "b"), ("e", "b"), ("b", "c"), ("c", "a"), ("c", "e"), ("a", "e"),
     ("a", "d"), ("b", "d"), ("c", "d"), ("e", "d")],
)


def rel(u, *pairs):
    return BinaryRelation.from_pairs(u, pairs)


class TestAlternativeSet:
    def test_needs_three_distinct_labels(self):
        with pytest.raises(ValueError):
            AlternativeSet(("a", "b"))
        with pytest.raises(ValueError):
            AlternativeSet(("a", "b", "a"))
        with pytest.raises(ValueError):
            AlternativeSet(("a", "b", ""))

    def test_index_and_masks(self):
        assert ABCD.index("c") == 2
        assert ABCD.full_mask == 0b1111
        assert ABCD.labels_of(ABCD.mask_of(["d", "a"])) == {"a", "d"}
        with pytest.raises(KeyError):
            ABCD.index("z")


class TestBinaryRelation:
    def test_diagonal_is_unrepresentable(self):
        with pytest.raises(ValueError):
            rel(ABC, ("a", "a"))
        with pytest.raises(ValueError):
            BinaryRelation(ABC, (0b001, 0, 0))

    def test_set_algebra(self):
        r = rel(ABC, ("a", "b"))
        s = rel(ABC, ("b", "c"))
        assert (r | s).pairs() == [("a", "b"), ("b", "c")]
        assert not (r & s)
        assert r <= r | s and (r | s) >= s
        assert (r | s) - s == r
        assert r.converse() == rel(ABC, ("b", "a"))
        assert ("a", "b") in r and ("b", "a") not in r
        assert str(r | s) == "{(a,b), (b,c)}"

    def test_mixing_universes_is_rejected(self):
        with pytest.raises(ValueError):
            rel(ABC, ("a", "b")) | rel(ABCD, ("a", "b"))


class TestAsymmetricPart:
    def test_transitive_closure_of_low_threshold_keeps_only_d_pairs(self):
        t = transitive_closure(NINE_VOTER_LOW)
        assert asymmetric_part(t) == rel(ABCDE, ("a", "d"), ("b", "d"), ("c", "d"), ("e", "d"))

    def test_symmetric_relation_has_empty_strict_part(self):
        assert not asymmetric_part(rel(ABC, ("a", "b"), ("b", "a")))

    def test_suzumura_closure_of_cycle_example(self):
        assert asymmetric_part(suzumura_closure(CYCLE_ABCD)) == rel(ABCD, ("a", "d"), ("b", "d"))


class TestProperties:
    def test_three_cycle_is_not_p_acyclic(self):
        props = relation_properties(rel(ABC, ("a", "b"), ("b", "c"), ("c", "a")))
        assert not props.p_acyclic
        assert not props.suzumura_consistent
        assert props.asymmetric

    def test_empty_relation(self):
        props = relation_properties(BinaryRelation.empty(ABC))
        assert props.transitive and props.suzumura_consistent and props.p_acyclic
        assert not props.complete
        assert props.negatively_transitive

    def test_cycle_example_is_not_suzumura_consistent(self):
        assert not relation_properties(CYCLE_ABCD).suzumura_consistent

    def test_linear_order_has_every_property(self):
        props = relation_properties(LinearOrder.parse(ABCD, "c,a,d,b").as_relation())
        assert all([props.complete, props.transitive, props.negatively_transitive,
                    props.suzumura_consistent, props.p_acyclic, props.asymmetric])

    def test_symmetric_cycle_is_p_acyclic_but_not_transitive(self):
        r = rel(ABC, ("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"))
        props = relation_properties(r)
        assert props.p_acyclic and props.suzumura_consistent
        assert not props.transitive  # (a,c) missing


class TestClosures:
    def test_transitive_closure_of_cycle_example(self):
        expected = CYCLE_ABCD | rel(ABCD, ("b", "a"), ("c", "b"), ("a", "c"), ("c", "d"))
        assert transitive_closure(CYCLE_ABCD) == expected

    def test_suzumura_closure_of_cycle_example_omits_c_d(self):
        expected = CYCLE_ABCD | rel(ABCD, ("b", "a"), ("c", "b"), ("a", "c"))
        s = suzumura_closure(CYCLE_ABCD)
        assert s == expected
        assert ("c", "d") not in s and ("d", "c") not in s

    def test_chain(self):
        assert transitive_closure(rel(ABC, ("a", "b"), ("b", "c"))) == rel(ABC, ("a", "b"), ("b", "c"), ("a", "c"))

    def test_empty(self):
        assert not transitive_closure(BinaryRelation.empty(ABC))
        assert not suzumura_closure(BinaryRelation.empty(ABC))

    def test_asymmetric_acyclic_relation_is_a_suzumura_fixed_point(self):
        r = rel(ABCD, ("a", "b"), ("c", "d"), ("a", "d"))
        assert suzumura_closure(r) == r

    def test_both_closures_agree_on_low_threshold(self):
        assert suzumura_closure(NINE_VOTER_LOW) == transitive_closure(NINE_VOTER_LOW)

    def test_closure_never_contains_diagonal(self):
        t = transitive_closure(rel(ABC, ("a", "b"), ("b", "a")))
        assert t == rel(ABC, ("a", "b"), ("b", "a"))


class TestMaximalSet:
    def test_middle_threshold_of_nine_voter_example(self):
        r = rel(ABCDE, ("a", "b"), ("e", "b"), ("b", "c"), ("c", "a"), ("c", "e"), ("a", "e"))
        assert maximal_set(ABCDE.labels, r) == {"d"}

    def test_lowest_threshold_of_nine_voter_example(self):
        assert maximal_set(ABCDE.labels, NINE_VOTER_LOW) == set()

    def test_empty_relation_keeps_subset(self):
        assert maximal_set(["a", "c"], BinaryRelation.empty(ABC)) == {"a", "c"}

    def test_empty_subset_rejected(self):
        with pytest.raises(ValueError):
            maximal_set([], BinaryRelation.empty(ABC))


class TestEnumeration:
    def test_cycle_example_transitive_closure_has_six_orders_with_d_last(self):
        res = enumerate_respecting_orders(transitive_closure(CYCLE_ABCD))
        assert res.total == 6 and res.exact and not res.truncated
        assert all(o.labels[-1] == "d" for o in res.orders)

    def test_empty_relation_gives_every_order(self):
        res = enumerate_respecting_orders(BinaryRelation.empty(ABC))
        assert [str(o) for o in res.orders] == [",".join(p) for p in itertools.permutations("abc")]

    def test_p_cyclic_input_gives_nothing(self):
        res = enumerate_respecting_orders(rel(ABC, ("a", "b"), ("b", "c"), ("c", "a")))
        assert res.orders == [] and res.total == 0 and res.exact
        assert list(iter_respecting_orders(rel(ABC, ("a", "b"), ("b", "c"), ("c", "a")))) == []

    def test_cap_truncates_but_counts_everything(self):
        res = enumerate_respecting_orders(BinaryRelation.empty(ABCDE), cap=7)
        assert len(res.orders) == 7 and res.truncated and res.total == 120

    def test_lexicographic_order(self):
        res = enumerate_respecting_orders(rel(ABCD, ("d", "a")))
        seqs = [o.sequence for o in res.orders]
        assert seqs == sorted(seqs)

    def test_count_beyond_limit_is_a_lower_bound(self):
        big = AlternativeSet(tuple(f"x{i}" for i in range(COUNT_LIMIT + 1)))
        chain = BinaryRelation.from_index_pairs(big, [(i, i + 1) for i in range(COUNT_LIMIT)])
        assert count_respecting_orders(chain) is None
        # a finished enumeration knows its size exactly
        res = enumerate_respecting_orders(chain, cap=3)
        assert len(res.orders) == 1 and res.total == 1 and res.exact
        free = BinaryRelation.empty(big)
        res = enumerate_respecting_orders(free, cap=3)
        assert len(res.orders) == 3 and res.truncated and not res.exact and res.total >= 3


class TestRespects:
    def test_vacuous(self):
        assert respects(LinearOrder.parse(ABC, "c,b,a"), BinaryRelation.empty(ABC))

    def test_witness_is_reported(self):
        chk = respects(LinearOrder.parse(ABCD, "b,a,d,c"), transitive_closure(CYCLE_ABCD))
        assert not chk and chk.witness == ("c", "d")

    def test_symmetric_pairs_impose_nothing(self):
        r = rel(ABC, ("a", "b"), ("b", "a"))
        assert respects(LinearOrder.parse(ABC, "b,a,c"), r)
        assert respects(LinearOrder.parse(ABC, "a,b,c"), r)


class TestLinearOrder:
    def test_parse_and_roundtrip(self):
        o = LinearOrder.parse(ABCDE, "e,a,c,b,d")
        assert o.labels == ("e", "a", "c", "b", "d") and o.top == "e"
        assert str(o) == "e,a,c,b,d"
        assert o.prefers("a", "d") and not o.prefers("d", "a")
        assert len(o.as_relation()) == 10

    def test_must_be_a_permutation(self):
        with pytest.raises(ValueError):
            LinearOrder.parse(ABC, "a,b")
        with pytest.raises(ValueError):
            LinearOrder.parse(ABC, "a,b,b")
        with pytest.raises(KeyError):
            LinearOrder.parse(ABC, "a,b,z")
