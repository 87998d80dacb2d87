import random

import pytest

from phylogalois import (
    InvalidNetworkError,
    NotOneNestedError,
    PCTree,
    PosetRelation,
    classify,
    consistent_orders_network,
    displayed_splits,
    enumerate_pc_trees,
    from_pc_tree,
    network_poset_compare,
    to_pc_tree,
    validate_network,
)
from phylogalois.networks import contract_bridge, random_one_nested_network
from phylogalois.oracle import oracle_displayed_splits


def star(n):
    return validate_network([(f"l{i}", "c") for i in range(1, n + 1)], {i: f"l{i}" for i in range(1, n + 1)})


def net(key):
    return from_pc_tree(PCTree.parse(key))


class TestValidation:
    def test_star_is_valid(self):
        assert star(4).n == 4

    def test_degree_two_node(self):
        edges = [("a", "m"), ("m", "b"), ("b", "x"), ("b", "y"), ("a", "z"), ("a", "w")]
        with pytest.raises(InvalidNetworkError, match="degree 2"):
            validate_network(edges, {1: "x", 2: "y", 3: "z", 4: "w"})

    def test_disconnected(self):
        with pytest.raises(InvalidNetworkError, match="disconnected"):
            validate_network([("a", "b"), ("c", "d"), ("e", "f")], {1: "a", 2: "b", 3: "c", 4: "d", 5: "e", 6: "f"})

    def test_multi_edge(self):
        with pytest.raises(InvalidNetworkError, match="multi-edge"):
            validate_network([("a", "c"), ("b", "c"), ("c", "a"), ("c", "d")], {1: "a", 2: "b", 3: "d"})

    def test_labeled_internal_node(self):
        with pytest.raises(InvalidNetworkError):
            validate_network([("a", "b"), ("a", "c"), ("a", "d")], {1: "a", 2: "b", 3: "c"})


class TestClassify:
    def test_four_cycle(self):
        st = classify(net("1:C(2,3,4)"))
        assert len(st.bridges) == 4 and not st.nontrivial_bridges
        assert [len(c) for c in st.cycles] == [4]
        assert st.is_one_nested

    def test_triangle_is_not_one_nested(self):
        edges = [("a", "b"), ("b", "c"), ("c", "a"), ("a", "x"), ("b", "y"), ("c", "z")]
        N = validate_network(edges, {1: "x", 2: "y", 3: "z"})
        assert not classify(N).is_one_nested
        with pytest.raises(NotOneNestedError):
            displayed_splits(N)

    def test_quartet(self):
        st = classify(net("1:P(2,P(3,4))"))
        assert len(st.bridges) == 5 and len(st.nontrivial_bridges) == 1
        assert st.is_one_nested and st.is_binary


class TestSigma:
    def test_quartet(self):
        assert [str(x) for x in displayed_splits(net("1:P(2,P(3,4))")).nontrivial] == ["1,2|3,4"]

    def test_four_cycle(self):
        got = {str(x) for x in displayed_splits(net("1:C(2,3,4)")).nontrivial}
        assert got == {"1,2|3,4", "2,3|1,4"}

    def test_star(self):
        assert not displayed_splits(star(6)).nontrivial

    def test_consistent_orders(self):
        assert len(consistent_orders_network(star(4))) == 3
        assert len(consistent_orders_network(net("1:P(2,P(3,4))"))) == 2
        assert [str(c) for c in consistent_orders_network(net("1:C(2,3,4)"))] == ["(1,2,3,4)"]

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_round_trip_and_splits(self, n):
        for t in enumerate_pc_trees(n):
            N = from_pc_tree(t)
            assert to_pc_tree(N) == t
            assert displayed_splits(N) == t.splits()

    def test_agrees_with_cut_scan_exhaustive(self):
        for t in enumerate_pc_trees(5):
            N = from_pc_tree(t)
            assert displayed_splits(N) == oracle_displayed_splits(N)

    @pytest.mark.parametrize("n", [7, 8])
    def test_agrees_with_cut_scan_random(self, n):
        rng = random.Random(n)
        for _ in range(4):
            N = random_one_nested_network(n, rng, contract=0.5)
            assert displayed_splits(N) == oracle_displayed_splits(N, max_cut=2)


class TestPCTree:
    def test_examples(self):
        assert to_pc_tree(net("1:C(2,3,4)")).key == "1:C(2,3,4)"
        assert to_pc_tree(star(5)).key == "1:P(2,3,4,5)"
        assert to_pc_tree(net("1:P(2,P(3,4))")).key == "1:P(2,P(3,4))"

    def test_shared_node_cycles_collapse_to_pc_tree(self):
        # two 4-cycles joined by a bridge, then the bridge contracted: the
        # cycles share a node but the class is unchanged
        N = net("1:C(2,3,C(4,5,6))")
        st = classify(N)
        (bridge,) = st.nontrivial_bridges
        M = contract_bridge(N, bridge)
        assert len(classify(M).cut_point_nodes) == 1
        assert displayed_splits(M) == displayed_splits(N)
        assert to_pc_tree(M) == to_pc_tree(N)

    def test_random_contractions_keep_splits(self):
        rng = random.Random(1)
        for _ in range(30):
            t_seed = rng.randrange(10**6)
            N = random_one_nested_network(6, random.Random(t_seed))
            M = random_one_nested_network(6, random.Random(t_seed), contract=1.0)
            assert displayed_splits(M) == displayed_splits(N)
            assert to_pc_tree(M) == to_pc_tree(N)

    def test_theorem_class_equality_iff_splits_equal(self):
        trees = enumerate_pc_trees(5)
        by_splits = {t.splits(): t for t in trees}
        assert len(by_splits) == len(trees)


class TestPoset:
    def test_examples(self):
        assert network_poset_compare(star(4), net("1:P(2,P(3,4))")) is PosetRelation.LESS_THAN
        assert network_poset_compare(net("1:P(2,P(3,4))"), net("1:P(3,P(2,4))")) is PosetRelation.INCOMPARABLE
        assert network_poset_compare(net("1:C(2,3,4)"), net("1:P(2,P(3,4))")) is PosetRelation.GREATER_THAN
