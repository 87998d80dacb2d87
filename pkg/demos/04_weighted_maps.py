"""Weighted networks, distance vectors, S_w and L_w."""

from phylogalois import (
    PCTree,
    WeightedNetwork,
    distance_from_network,
    from_pc_tree,
    is_additive,
    find_kalmanson_orders,
    l_w,
    s_w,
    total_weight,
)
from phylogalois.io import format_metric, format_network, format_splits

# Unit weights on a 5-cycle with pendant leaves.
N = from_pc_tree(PCTree.parse("1:C(2,3,4,5)"))
wn = WeightedNetwork(N, {e: 1 for e in N.edges})
d = distance_from_network(wn)
print(format_metric(d))
print("tree-like:", is_additive(d), "| Kalmanson orders:", [str(c) for c in find_kalmanson_orders(d)])

# S_w: the unique weighted circular system with the same distances.
ws = s_w(wn)
print(format_splits(ws.split_system, ws))
print("W =", total_weight(ws))

# L_w spreads each split's weight back onto the exterior network.
back = l_w(ws)
print(format_network(back.network, back))
print("distances kept:", distance_from_network(back) == d)
