"""Splits, circular orders and which split systems are circular."""

from phylogalois import (
    SplitSystem,
    all_circular_orders,
    canonical_split,
    compatible,
    consistent_orders,
    count_circular_systems,
    count_split_systems,
)

# A split is stored by the side without the last taxon, so both names agree.
a = canonical_split({1, 2}, 5)
b = canonical_split({3, 4, 5}, 5)
print("same split:", a == b, str(a))

# 12|345 and 45|123 can sit in one tree; 12|34 and 13|24 cannot.
print("compatible:", compatible(a, canonical_split({4, 5}, 5)))
print("compatible:", compatible(canonical_split({1, 2}, 4), canonical_split({1, 3}, 4)))

# There are (n-1)!/2 circular orders.  A split system is circular when every
# split is an arc of one of them.
print("orders on 5 taxa:", len(all_circular_orders(5)))
s = SplitSystem.from_blocks(5, [(1, 2), (2, 3), (3, 4)])
print("orders keeping 12, 23, 34 contiguous:", [str(c) for c in consistent_orders(s)])

# The counts 1, 8, 1024 and 1, 7, 218, 20816.
print("split systems:", [count_split_systems(n) for n in (3, 4, 5)])
print("circular systems:", [count_circular_systems(n) for n in (3, 4, 5, 6)])
