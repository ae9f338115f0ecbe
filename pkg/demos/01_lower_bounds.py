"""Lower-bound colorings and how their claims are certified.

Each construction colors a Boolean lattice so that the blue vertices are
covered by few chains (no large blue antichain) while the red vertices are
too short, or too sparse, to hold a copy of Q_n.
"""

from math import comb

from posetramsey import (construct_a2_lower, construct_a3_lower, construct_layered_lower,
                         layered_cover, verify_no_blue_antichain, verify_no_red_cube)
from posetramsey.cli import render_lattice


def report(name, c, t, n, cover=None):
    blue = verify_no_blue_antichain(c, t, cover=cover)
    red = verify_no_red_cube(c, n)
    print(f"{name}: Q_{c.n}, {len(c.blue_vertices())} blue vertices")
    print(f"  no blue A_{t}: covered by {len(blue.cover)} chains")
    print(f"  no red Q_{n}: {red.kind} (longest red chain has {red.red_height} vertices)")


c = construct_a2_lower(2)
print(render_lattice(c))
report("bottom and top blue", c, 2, 2)

# two blue chains meeting at the ends; the red part is too tangled for Q_n
c = construct_a3_lower(2)
print(render_lattice(c))
report("prefix/suffix chains", c, 3, 2)

# outer layers blue: their width is C(N, r), the middle n layers are red
n, r = 2, 2
c = construct_layered_lower(n, r)
N = n + 2 * r + 1
report(f"layered r={r}", c, comb(N, r) + 1, n, cover=layered_cover(n, r))
chk = verify_no_blue_antichain(c, comb(N, r))
print(f"  but a blue antichain of size {comb(N, r)} exists: layer {r} ({len(chk.antichain)} sets)")
