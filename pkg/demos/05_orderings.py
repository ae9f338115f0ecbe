"""Monotone subsequences and betweenness-consistent triples of orderings."""

import numpy as np

from posetramsey import common_undirected_subsequence, consistent_triple

rng = np.random.default_rng(3)
s = tuple(rng.permutation(10).tolist())
t = tuple(rng.permutation(10).tolist())
u = common_undirected_subsequence(s, t)
print(f"{s}\n{t}\nshare {u} (read forwards or backwards), length {len(u)} >= ceil(sqrt(10))")

# three orderings of 17 elements always agree on some betweenness
orders = [tuple(rng.permutation(17).tolist()) for _ in range(3)]
tr, steps = consistent_triple(orders, return_steps=True)
print("survivors per step:", [len(st) for st in steps])
print("triple", tr)
for o in orders:
    pos = [o.index(a) for a in tr]
    print("  positions", pos)
