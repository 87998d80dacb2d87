"""The unweighted Galois connection between L and Sigma."""

from phylogalois import SplitSystem, closure, ell, is_outer_path
from phylogalois.oracle import oracle_galois_check

# L of a circular system is the least class displaying it.  Its splits are
# the closure: splits contiguous in every order the system allows.
s = SplitSystem.from_blocks(6, [(i, i % 6 + 1) for i in range(1, 7)])
print("six 2-arcs:", len(s.nontrivial), "nontrivial splits")
print("closure adds:", [str(x) for x in closure(s).nontrivial if x not in s])
print("L(s):", ell(s).key)

# L is not injective: the closure has the same image.
print("same image:", ell(closure(s)) == ell(s))

# Exterior shortest paths miss some separations here: 1 to 4 crosses extra arcs.
print("outer-path:", is_outer_path(s))

# The biconditional L(s) <= N iff s <= Sigma(N), checked on every pair at n=5.
print(oracle_galois_check(5).summary())
