import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phylogalois import (
    BoundExceededError,
    CircularOrder,
    InputError,
    PosetRelation,
    Split,
    SplitSystem,
    all_circular_orders,
    canonical_split,
    compatible,
    consistent_orders,
    count_split_systems,
    enumerate_split_systems,
    is_contiguous,
    poset_compare,
)
from phylogalois.splits import nontrivial_splits, separates, trivial_split


def sys4(*blocks):
    return SplitSystem.from_blocks(4, blocks)


class TestSplit:
    def test_canonical_block_excludes_last_taxon(self):
        assert canonical_split({1, 2}, 4).block == (1, 2)
        assert canonical_split({3, 4}, 4).block == (1, 2)
        assert canonical_split({3, 4}, 4) == canonical_split({1, 2}, 4)

    def test_singleton_of_last_taxon(self):
        s = canonical_split({4}, 4)
        assert s.block == (1, 2, 3)
        assert s.trivial

    @pytest.mark.parametrize("block", [set(), {1, 2, 3, 4}, {0, 1}, {5}])
    def test_rejects_bad_blocks(self, block):
        with pytest.raises(InputError):
            canonical_split(block, 4)

    def test_rejects_small_n(self):
        with pytest.raises(InputError):
            canonical_split({1}, 2)

    def test_str(self):
        assert str(canonical_split({1, 2}, 4)) == "1,2|3,4"

    def test_separates(self):
        s = canonical_split({1, 2}, 4)
        assert separates(s, 1, 3)
        assert not separates(s, 1, 2)
        assert not separates(s, 3, 4)
        with pytest.raises(InputError):
            separates(s, 2, 2)

    def test_compatible(self):
        assert not compatible(canonical_split({1, 2}, 4), canonical_split({1, 3}, 4))
        assert compatible(canonical_split({1, 2}, 5), canonical_split({4, 5}, 5))
        for x in nontrivial_splits(5):
            assert compatible(trivial_split(1, 5), x)


class TestCircularOrder:
    def test_canonical_form(self):
        assert CircularOrder((3, 4, 1, 2)).sequence == (1, 2, 3, 4)
        assert CircularOrder((1, 4, 3, 2)).sequence == (1, 2, 3, 4)
        assert CircularOrder((2, 1, 3, 4)) == CircularOrder((1, 3, 4, 2))

    def test_rejects_non_permutation(self):
        with pytest.raises(InputError):
            CircularOrder((1, 2, 2, 4))

    @pytest.mark.parametrize("n", range(4, 9))
    def test_order_count(self, n):
        assert len(all_circular_orders(n)) == math.factorial(n - 1) // 2

    def test_contiguity(self):
        c = CircularOrder((1, 2, 3, 4))
        assert not is_contiguous(canonical_split({1, 3}, 4), c)
        assert is_contiguous(canonical_split({1, 2}, 4), c)
        assert all(is_contiguous(trivial_split(2, 5), o) for o in all_circular_orders(5))

    def test_contiguity_mismatched_n(self):
        with pytest.raises(InputError):
            is_contiguous(canonical_split({1, 2}, 5), CircularOrder((1, 2, 3, 4)))


class TestSplitSystem:
    def test_trivial_added(self):
        s = sys4()
        assert len(s) == 4 and s.includes_trivial

    def test_consistent_orders(self):
        assert len(consistent_orders(sys4())) == 3
        assert consistent_orders(sys4((1, 2))) == [CircularOrder((1, 2, 3, 4)), CircularOrder((1, 2, 4, 3))]
        # any two nontrivial splits on 4 taxa share an order; all three do not
        assert consistent_orders(sys4((1, 2), (1, 3))) == [CircularOrder((1, 2, 4, 3))]
        assert consistent_orders(sys4((1, 2), (1, 3), (1, 4))) == []

    def test_order_scan_bound(self):
        with pytest.raises(BoundExceededError):
            consistent_orders(SplitSystem(11, []))

    def test_poset_compare(self):
        assert poset_compare(sys4(), sys4((1, 2))) is PosetRelation.LESS_THAN
        assert poset_compare(sys4((1, 2)), sys4()) is PosetRelation.GREATER_THAN
        assert poset_compare(sys4((1, 2)), sys4((1, 3))) is PosetRelation.INCOMPARABLE
        assert poset_compare(sys4((1, 2)), sys4((1, 2))) is PosetRelation.EQUAL

    @pytest.mark.parametrize("n,count", [(3, 1), (4, 8), (5, 1024)])
    def test_enumeration_counts(self, n, count):
        assert count_split_systems(n) == count
        systems = list(enumerate_split_systems(n))
        assert len(systems) == count
        assert len(set(systems)) == count
        assert all(s.includes_trivial for s in systems)

    def test_bits_round_trip(self):
        for s in enumerate_split_systems(5):
            assert SplitSystem.from_bits(5, s.nontrivial_bits) == s

    def test_tree_systems_are_circular(self):
        # pairwise compatible systems always have a consistent order
        for s in enumerate_split_systems(5):
            if all(compatible(a, b) for a, b in itertools.combinations(s.splits, 2)):
                assert consistent_orders(s)


splits5 = st.sampled_from(nontrivial_splits(5) + tuple(trivial_split(t, 5) for t in range(1, 6)))
orders5 = st.sampled_from(all_circular_orders(5))


@given(splits5, orders5)
def test_contiguity_symmetric_in_sides(x, c):
    assert is_contiguous(x, c) == is_contiguous(canonical_split(x.complement, 5), c)


@given(splits5, splits5)
def test_compatibility_symmetric(a, b):
    assert compatible(a, b) == compatible(b, a)


@settings(max_examples=60)
@given(st.sets(st.sampled_from(nontrivial_splits(5))), st.sets(st.sampled_from(nontrivial_splits(5))))
def test_refinement_shrinks_orders(extra, base):
    small = SplitSystem(5, base)
    big = SplitSystem(5, base | extra)
    assert set(consistent_orders(big)) <= set(consistent_orders(small))
