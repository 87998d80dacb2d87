import sys

import pytest

from phylogalois import PCTree, WeightedNetwork, from_pc_tree


def unit_network(key):
    """Expanded network of a PC-tree with every edge weight 1."""
    N = from_pc_tree(PCTree.parse(key))
    return WeightedNetwork(N, {e: 1 for e in N.edges})


@pytest.fixture
def quartet():
    return unit_network("1:P(2,P(3,4))")


@pytest.fixture
def four_cycle():
    return unit_network("1:C(2,3,4)")


@pytest.fixture
def five_cycle():
    return unit_network("1:C(2,3,4,5)")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
