"""Symmetric chain decompositions and Dilworth's theorem on blue sets."""

from math import comb

from posetramsey import (max_antichain, min_chain_cover, random_coloring,
                         symmetric_chain_decomposition)
from posetramsey.lattice import elements

d = symmetric_chain_decomposition(4)
print(f"Q_4 splits into {len(d.chains)} = C(4,2) symmetric chains:")
for ch in d.chains:
    print("  " + " < ".join(str(elements(v)) for v in ch))

# width of a random blue set equals its minimum chain count
for seed in range(3):
    c = random_coloring(6, seed, 0.4)
    blues = c.blue_vertices()
    cover = min_chain_cover(blues)
    anti = max_antichain(blues)
    print(f"seed {seed}: {len(blues)} blue, {len(cover)} chains, antichain of size {len(anti)}")

print("Sperner: the width of Q_8 is", comb(8, 4), "=", len(max_antichain(range(256))))
