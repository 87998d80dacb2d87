"""1-nested networks, their displayed splits and PC-tree normal forms."""

from phylogalois import (
    PCTree,
    classify,
    count_one_nested_classes,
    displayed_splits,
    from_pc_tree,
    to_pc_tree,
    validate_network,
)
from phylogalois.io import format_network

# A 4-cycle with a pendant leaf on each cycle node.
edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
edges += [("a", "x1"), ("b", "x2"), ("c", "x3"), ("d", "x4")]
N = validate_network(edges, {1: "x1", 2: "x2", 3: "x3", 4: "x4"})
print("\n".join(classify(N).summary_lines()))
print("displayed splits:", [str(x) for x in displayed_splits(N).nontrivial])

# The cycle collapses to a C-node; equal PC-trees mean equal split sets.
t = to_pc_tree(N)
print("PC-tree:", t.key)

# A bigger class: a 5-cycle hanging off a cherry.
t = PCTree.parse("1:P(2,C(3,4,5,6,7))")
M = from_pc_tree(t)
print(format_network(M))
print("round trip:", to_pc_tree(M) == t, "| splits:", len(displayed_splits(M)))

print("1-nested classes for n=4,5,6:", [count_one_nested_classes(n) for n in (4, 5, 6)])
