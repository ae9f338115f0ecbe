"""Small Ramsey numbers R(A_t, Q_n) by exhaustive search.

For each N the search either returns a coloring of Q_N with no blue A_t and
no red Q_n, or proves none exists.  The smallest N without such a coloring
is the Ramsey number.
"""

from posetramsey import ramsey_bounds, ramsey_exact
from posetramsey.cli import render_lattice

for t, n in [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2)]:
    res = ramsey_exact(t, n, n_max=5)
    rep = ramsey_bounds(n, t)
    nodes = sum(w.nodes for w in res.runs)
    print(f"R(A_{t}, Q_{n}) = {res.value}   bounds {rep.lower}..{rep.upper}, {nodes} search nodes")

res = ramsey_exact(3, 2, n_max=5)
print("\nan extremal coloring of Q_4 (orbit representative):")
print(render_lattice(res.witness.coloring))
