import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phylogalois import (
    CircularOrder,
    DistanceVector,
    InputError,
    KalmansonError,
    PosetRelation,
    SplitSystem,
    WeightedNetwork,
    WeightedSplitSystem,
    circular_decompose,
    distance_from_network,
    distance_from_splits,
    find_kalmanson_orders,
    from_pc_tree,
    is_additive,
    is_kalmanson,
    l_w,
    s_w,
    total_weight,
    weighted_poset_compare,
)
from phylogalois.metrics import as_rational, bridge_weights, random_weighted_network
from phylogalois.oracle import oracle_decompose
from phylogalois.splits import canonical_split, trivial_split

QUARTET = DistanceVector(4, [2, 3, 3, 3, 3, 2])
CYCLE4 = DistanceVector(4, [3, 4, 3, 3, 4, 3])


def ws(n, blocks_weights, unit_trivial=True):
    w = {trivial_split(t, n): 1 for t in range(1, n + 1)} if unit_trivial else {}
    w.update({canonical_split(b, n): x for b, x in blocks_weights})
    return WeightedSplitSystem(n, w)


def test_rationals():
    assert as_rational("21.5") == Fraction(43, 2)
    assert as_rational(0.5) == Fraction(1, 2)
    assert as_rational("3/2") == Fraction(3, 2)
    with pytest.raises(InputError):
        as_rational("x")


def test_negative_weight_rejected():
    with pytest.raises(InputError):
        WeightedSplitSystem(4, {canonical_split((1, 2), 4): -1})


def test_zero_weight_dropped():
    s = WeightedSplitSystem(4, {canonical_split((1, 2), 4): 0})
    assert not s.weights


class TestDistances:
    def test_single_split(self):
        d = distance_from_splits(WeightedSplitSystem(4, {canonical_split((1, 2), 4): 5}))
        assert d(1, 3) == 5 and d(1, 2) == 0

    def test_empty(self):
        assert distance_from_splits(WeightedSplitSystem(4, {})) == DistanceVector.zero(4)

    def test_quartet_system(self):
        assert distance_from_splits(ws(4, [((1, 2), 1)])) == QUARTET

    def test_networks(self, quartet, four_cycle):
        assert distance_from_network(quartet) == QUARTET
        assert distance_from_network(four_cycle) == CYCLE4

    def test_zero_weights(self, four_cycle):
        wn = WeightedNetwork(four_cycle.network, {e: 0 for e in four_cycle.network.edges})
        assert distance_from_network(wn) == DistanceVector.zero(4)

    def test_missing_edge_weight(self, quartet):
        with pytest.raises(InputError):
            WeightedNetwork(quartet.network, {})


class TestConditions:
    def test_additive(self):
        assert is_additive(QUARTET)
        assert not is_additive(CYCLE4)
        assert is_additive(DistanceVector.zero(5))

    def test_kalmanson(self):
        assert is_kalmanson(CYCLE4, CircularOrder((1, 2, 3, 4)))
        assert not is_kalmanson(CYCLE4, CircularOrder((1, 3, 2, 4)))
        assert find_kalmanson_orders(CYCLE4) == [CircularOrder((1, 2, 3, 4))]
        assert len(find_kalmanson_orders(DistanceVector.zero(5))) == 12

    def test_no_kalmanson_order(self):
        # on 4 taxa some order is always Kalmanson; this 5-taxon vector fails all 12
        d = DistanceVector(5, [4, 1, 3, 4, 3, 2, 4, 4, 3, 1])
        assert find_kalmanson_orders(d) == []
        with pytest.raises(KalmansonError) as info:
            circular_decompose(d, CircularOrder((1, 2, 3, 4, 5)))
        assert info.value.quadruple is not None


class TestDecompose:
    def test_quartet(self):
        got = circular_decompose(QUARTET, CircularOrder((1, 2, 3, 4)))
        assert got == ws(4, [((1, 2), 1)])

    def test_four_cycle(self):
        got = circular_decompose(CYCLE4, CircularOrder((1, 2, 3, 4)))
        assert got == ws(4, [((1, 2), 1), ((1, 4), 1)])

    def test_zero(self):
        assert not circular_decompose(DistanceVector.zero(5), CircularOrder((1, 2, 3, 4, 5))).weights

    def test_matches_linear_solve(self):
        for d in (QUARTET, CYCLE4):
            c = find_kalmanson_orders(d)[0]
            assert circular_decompose(d, c) == oracle_decompose(d, c)


class TestAdjoints:
    def test_tree_identity(self, quartet):
        s = s_w(quartet)
        assert s == ws(4, [((1, 2), 1)])
        assert distance_from_network(l_w(s)) == distance_from_network(quartet)

    def test_five_cycle(self, five_cycle):
        s = s_w(five_cycle)
        assert s == ws(5, [((i, i % 5 + 1), Fraction(1, 2)) for i in range(1, 6)])
        assert total_weight(s) == Fraction(15, 2)
        back = l_w(s)
        assert set(back.weights.values()) == {1}
        assert s_w(back) == s

    def test_four_cycle_lw(self):
        back = l_w(ws(4, [((1, 2), 1), ((1, 4), 1)]))
        assert set(back.weights.values()) == {1}
        assert len(back.network.edges) == 8

    def test_quartet_lw(self):
        back = l_w(ws(4, [((1, 2), 1)]))
        assert len(back.network.edges) == 5
        assert set(back.weights.values()) == {1}

    def test_weighted_poset(self, quartet, four_cycle):
        assert weighted_poset_compare(quartet, four_cycle) is PosetRelation.INCOMPARABLE
        assert weighted_poset_compare(l_w(s_w(four_cycle)), four_cycle) is PosetRelation.EQUAL

    def test_lw_rejects_non_circular(self):
        with pytest.raises(InputError):
            l_w(ws(4, [((1, 2), 1), ((1, 3), 1), ((1, 4), 1)]))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9), st.integers(5, 7), st.booleans(), st.sampled_from([0.0, 0.5]))
def test_weighted_round_trip(seed, n, binary, contract):
    wn = random_weighted_network(n, random.Random(seed), binary=binary, contract=contract)
    dn = distance_from_network(wn)
    s = s_w(wn)
    assert distance_from_splits(s) == dn
    back = l_w(s)
    assert distance_from_network(back) == dn
    assert s_w(back) == s
    for x, w in bridge_weights(wn).items():
        assert s.weights[x] >= w
