"""Extracting a red Q_n from a coloring of Q_{n+3} whose blue part is two chains.

The blue vertices lie on two chains, so there is no blue antichain of size
three.  Extending the chains to full chains gives two orderings of the ground
set; three elements x, y, z with y between x and z in both orderings exist
once the ground set has five elements.  A blue set containing x and z then
always contains y, which rules out the blue branch of the chain-or-cube step.
"""

from posetramsey import random_chain_coloring, theorem2_pipeline
from posetramsey.lattice import elements

n = 4
c = random_chain_coloring(n + 3, chains=2, seed=7)
tr = theorem2_pipeline(c, t=3)

print(f"{len(c.blue_vertices())} blue vertices of Q_{c.n}, covered by {len(tr.chain_cover)} chains")
for o in tr.orderings:
    print("  ordering", o)
x, y, z = tr.triple
print(f"triple x={x}, y={y}, z={z}")
print(f"red Q_{n} over ground {elements(tr.x_ground)}:")
for sub in sorted(tr.result.tail, key=lambda v: (bin(v).count('1'), v))[:6]:
    print(f"  {elements(sub)} -> {elements(tr.result.image(sub))}")
print(f"  ... {len(tr.result.tail)} images, all red")
