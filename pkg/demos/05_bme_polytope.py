"""Minimising over the level-1 BME polytopes."""

import random

from phylogalois import bme_vertices, distance_from_network, minimize, predicted_minimizers, s_w, total_weight
from phylogalois.metrics import fmt_rational, random_weighted_network
from phylogalois.oracle import polytope_suite

# Vertices of BME(4, 1): the three quartet trees.
for t, x in bme_vertices(4, 1):
    print(t.key, x)

# A random weighted binary network on 6 taxa.
rng = random.Random(7)
wn = random_weighted_network(6, rng, binary=True)
d = distance_from_network(wn)
W = total_weight(s_w(wn))
print("W(S_w(N)) =", fmt_rational(W))

# For each k the minimisers are the binary k-bridge classes refining S_w(N),
# at value 2^(k+1) W; with none available the minimum is larger.
for k in range(4):
    argmin, value = minimize(d, 6, k)
    pred = predicted_minimizers(wn, k)
    print(f"k={k}: value {fmt_rational(value)}, 2^(k+1)W = {fmt_rational(2 ** (k + 1) * W)},"
          f" {len(argmin)} minimisers, predicted {len(pred)}")

print(polytope_suite(20, seed=1).summary())
