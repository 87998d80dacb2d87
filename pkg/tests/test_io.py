from fractions import Fraction

import pytest

from phylogalois import InputError, InvalidNetworkError, PCTree, SplitSystem, from_pc_tree
from phylogalois import io as pio


def test_split_file_round_trip():
    text = "n=5\nsplit: 1 2\nsplit: 5 4   # same as 1 2 3\n"
    sf = pio.parse_splits(text)
    assert sf.weights is None
    assert [str(x) for x in sf.splits.nontrivial] == ["1,2|3,4,5", "1,2,3|4,5"]
    assert pio.parse_splits(pio.format_splits(sf.splits)).splits == sf.splits


def test_trivial_absent():
    sf = pio.parse_splits("n=4 trivial=absent\nsplit: 1 2\n")
    assert len(sf.splits) == 1 and not sf.splits.includes_trivial
    assert pio.format_splits(sf.splits).startswith("n=4 trivial=absent")


def test_weighted_splits():
    sf = pio.parse_splits("n=5\nsplit: 1 : 1\nsplit: 1 2 : 3/2\nsplit: 3 4 2 : 21.5\n")
    assert sf.weights.weights[SplitSystem.from_blocks(5, [(1, 2)]).nontrivial[0]] == Fraction(3, 2)
    assert Fraction(43, 2) in sf.weights.weights.values()
    again = pio.parse_splits(pio.format_splits(sf.splits, sf.weights))
    assert again.weights == sf.weights


@pytest.mark.parametrize(
    "text",
    [
        "",
        "split: 1 2\n",
        "n=4\nsplit: 1 9\n",
        "n=4\nsplit: 1 2 3 4\n",
        "n=4\nsplit: 1 2\nsplit: 3 4\n",
        "n=4\nsplit: 1 2 : 1\nsplit: 1 3\n",
        "n=4\nfoo: 1\n",
        "n=4 colour=red\n",
    ],
)
def test_bad_split_files(text):
    with pytest.raises(InputError):
        pio.parse_splits(text)


def test_network_round_trip():
    N = from_pc_tree(PCTree.parse("1:P(2,C(3,4,5,6))"))
    nf = pio.parse_network(pio.format_network(N))
    assert nf.network == N and nf.weights is None


def test_weighted_network():
    text = "n=3\nnode c\nleaf a 1\nleaf b 2\nleaf d 3\nedge a c : 1/2\nedge b c : 2\nedge d c : 0\n"
    nf = pio.parse_network(text)
    assert nf.weights.weight("c", "a") == Fraction(1, 2)
    assert pio.parse_network(pio.format_network(nf.network, nf.weights)).weights == nf.weights


@pytest.mark.parametrize(
    "text,error",
    [
        ("n=3\nleaf a 1\nleaf b 2\nleaf d 3\nedge a b\nedge b d\n", InvalidNetworkError),
        ("n=3\nnode c\nleaf a 1\nleaf b 2\nleaf d 3\nedge a c\nedge b c\nedge d x\n", InputError),
        ("n=3\nnode c\nleaf a 1\nleaf b 2\nleaf d 3\nedge a c : 1\nedge b c\nedge d c\n", InputError),
        ("n=3\nbogus line\n", InputError),
    ],
)
def test_bad_network_files(text, error):
    with pytest.raises(error):
        pio.parse_network(text)


def test_metric_round_trip():
    d = pio.parse_metric("n=4\n3\n4 3\n3 4 3\n")
    assert d.entries == (3, 4, 3, 3, 4, 3)
    assert pio.parse_metric(pio.format_metric(d)) == d


@pytest.mark.parametrize("text", ["n=4\n3\n4 3\n", "n=4\n3\n4\n3 4 3\n", "n=4\n3\n4 x\n3 4 3\n", "n=3\n1\n-1 1\n"])
def test_bad_metrics(text):
    with pytest.raises(InputError):
        pio.parse_metric(text)


def test_dot_is_deterministic(four_cycle):
    a = pio.to_dot(four_cycle.network, four_cycle)
    b = pio.to_dot(four_cycle.network, four_cycle)
    assert a == b
    assert a.count("style=bold") == 4
    assert a.count("shape=box") == 4
