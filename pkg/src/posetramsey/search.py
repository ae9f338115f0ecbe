"""Exhaustive search for colorings of Q_N with no blue A_t and no red Q_n.

Colors are assigned depth-first, one vertex at a time.  Both failure modes
are monotone (more blue vertices only add blue antichains, more red only add
red cubes), so a branch is cut as soon as the decided part already contains
either pattern.  The first block of vertices is closed under ground
permutations and complementation; once it is decided, only assignments that
are lexicographically least in their orbit are expanded.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import ceil

import numpy as np

from .constructions import verify_no_blue_antichain, verify_no_red_cube
from .embeddings import all_cube_copies
from .lattice import LatticeColoring, comparable, popcount, vertex_permutation

SYMMETRY_MAX_DIM = 5
SEARCH_MAX_DIM = 6
DEFAULT_BUDGET = 10**9

ESCAPING = "escaping-coloring"
EXHAUSTIVE = "exhaustiveness"


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the search reached a verdict."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"node budget {budget} exhausted after {nodes} nodes")
        self.nodes = nodes
        self.budget = budget


@dataclass(frozen=True)
class RamseyWitness:
    kind: str
    N: int
    t: int
    n: int
    coloring: LatticeColoring | None = None
    nodes: int = 0
    classes: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def escapes(self) -> bool:
        return self.kind == ESCAPING


def _orbit_perms(N: int) -> list[np.ndarray]:
    """``new.blue = old.blue[src]`` index arrays for every ground permutation
    and every permutation followed by complementation."""
    out = []
    for perm in permutations(range(N)):
        for comp in (False, True):
            out.append(vertex_permutation(N, perm, comp))
    return out


def _key(blue: np.ndarray) -> bytes:
    # vertex 0 most significant; red (False) sorts first
    return np.packbits(blue, bitorder="big").tobytes()


def canonical_under_symmetry(c: LatticeColoring) -> LatticeColoring:
    """Lexicographically least coloring (by vertex mask order, red < blue) in
    the orbit of ``c`` under ground permutations and complementation."""
    if c.n > SYMMETRY_MAX_DIM:
        raise ValueError(f"orbit canonicalization capped at N <= {SYMMETRY_MAX_DIM}")
    best = None
    for src in _cached_orbit(c.n):
        img = c.blue[src]
        k = _key(img)
        if best is None or k < best[0]:
            best = (k, img)
    return LatticeColoring(c.n, best[1])


@lru_cache(maxsize=None)
def _cached_orbit(N: int) -> tuple[np.ndarray, ...]:
    return tuple(_orbit_perms(N))


def _root_layers(N: int) -> list[int]:
    """Outer layers, paired with their complements, until at least ``ceil(2^N/4)`` vertices."""
    target = ceil((1 << N) / 4)
    picked: list[int] = []
    count = 0
    lo, hi = 0, N
    while count < target and lo <= hi:
        for i in sorted({lo, hi}):
            picked.append(i)
            count += sum(1 for v in range(1 << N) if popcount(v) == i)
        lo += 1
        hi -= 1
    return picked


class _Space:
    """Precomputed tables for one (N, t, n)."""

    def __init__(self, N: int, t: int, n: int, symmetry: bool):
        self.N, self.t, self.n = N, t, n
        size = 1 << N
        self.symmetry = symmetry and N <= SYMMETRY_MAX_DIM
        if self.symmetry:
            layers = _root_layers(N)
            root = [v for v in range(size) if popcount(v) in layers]
        else:
            root = []
        rest = [v for v in range(size) if v not in set(root)]
        self.order = root + rest
        self.root_len = len(root)
        pos = {v: i for i, v in enumerate(self.order)}
        self.inc = [0] * size
        for a in range(size):
            m = 0
            for b in range(size):
                if not comparable(a, b):
                    m |= 1 << b
            self.inc[a] = m
        # each copy of Q_n is checked once, at its last vertex in DFS order
        self.copies_at = [[] for _ in range(size)]
        for fam in all_cube_copies(N, n):
            m = 0
            last = -1
            for v in fam:
                m |= 1 << v
                last = max(last, pos[v])
            self.copies_at[self.order[last]].append(m)
        self.root_maps = []
        if self.symmetry:
            rpos = {v: i for i, v in enumerate(root)}
            for src in _cached_orbit(N):
                # image assignment at root position p reads the old value at root[src-position]
                self.root_maps.append([rpos[int(src[v])] for v in root])

    def blue_ok(self, blue: int, v: int) -> bool:
        """No blue antichain of size t through the new blue vertex ``v``."""
        need = self.t - 1
        if need == 0:
            return False
        return not self._antichain(blue & self.inc[v], need)

    def _antichain(self, cand: int, k: int) -> bool:
        if k == 0:
            return True
        if popcount(cand) < k:
            return False
        inc = self.inc
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            if self._antichain(cand & inc[u], k - 1):
                return True
        return False

    def red_ok(self, red: int, v: int) -> bool:
        return all(m & ~red for m in self.copies_at[v])

    def root_canonical(self, blue: int) -> bool:
        """Is the root-block assignment least in its orbit (first vertex most significant)?"""
        root = self.order[:self.root_len]
        vals = [blue >> v & 1 for v in root]
        for mp in self.root_maps:
            for p, q in enumerate(mp):
                a, b = vals[q], vals[p]
                if a != b:
                    if a < b:
                        return False
                    break
        return True


def _dfs(space: _Space, start_depth: int, blue: int, red: int, budget: int, stop_at_root: bool):
    """Depth-first search from a partial assignment.

    Returns ``(found_blue_bits | None, nodes, classes, roots)`` where ``roots``
    lists canonical root assignments when ``stop_at_root`` is set.
    """
    order = space.order
    total = len(order)
    nodes = 0
    classes = 0
    roots = []
    stack = [(start_depth, blue, red)]
    while stack:
        depth, b, r = stack.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes, budget)
        if space.symmetry and depth == space.root_len and depth > 0:
            if not space.root_canonical(b):
                continue
            classes += 1
            if stop_at_root:
                roots.append((b, r))
                continue
        if depth == total:
            return b, nodes, classes, roots
        v = order[depth]
        bit = 1 << v
        # red branch popped first: it is the lexicographically smaller one
        children = []
        if space.red_ok(r | bit, v):
            children.append((depth + 1, b, r | bit))
        if space.blue_ok(b | bit, v):
            children.append((depth + 1, b | bit, r))
        stack.extend(reversed(children))
    return None, nodes, classes, roots


def _subtree(args):
    N, t, n, symmetry, blue, red, budget = args
    space = _space(N, t, n, symmetry)
    try:
        found, nodes, _, _ = _dfs(space, space.root_len, blue, red, budget, False)
    except BudgetExhausted as exc:
        return None, exc.nodes, True
    return found, nodes, False


@lru_cache(maxsize=16)
def _space(N: int, t: int, n: int, symmetry: bool) -> _Space:
    return _Space(N, t, n, symmetry)


def _coloring_from_bits(N: int, bits: int) -> LatticeColoring:
    return LatticeColoring.from_int(N, bits)


def _verify_escape(c: LatticeColoring, t: int, n: int) -> None:
    if not verify_no_blue_antichain(c, t).certified:
        raise AssertionError("search returned a coloring with a blue antichain")
    if not verify_no_red_cube(c, n).certified:
        raise AssertionError("search returned a coloring with a red cube")


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("POSET_RAMSEY_THREADS", "1")))
    except ValueError:
        return 1


def has_escaping_coloring(N: int, t: int, n: int, budget: int = DEFAULT_BUDGET,
                          symmetry: bool = True, workers: int = 1) -> RamseyWitness:
    """Search ``Q_N`` for a coloring with no blue ``A_t`` and no red ``Q_n``.

    Returns an ``"escaping-coloring"`` witness (orbit-canonical when
    ``N <= 5``) or an ``"exhaustiveness"`` witness when every coloring was
    ruled out.  Raises ``BudgetExhausted`` when ``budget`` nodes were not
    enough.  With several workers the subtrees below the root block run in
    parallel; the reported witness is the same as for a single worker.
    """
    if not 0 <= N <= SEARCH_MAX_DIM:
        raise ValueError(f"search supports 0 <= N <= {SEARCH_MAX_DIM}")
    if t < 1 or not 0 <= n:
        raise ValueError("need t >= 1 and n >= 0")
    t0 = time.perf_counter()
    if n > N:
        # no copy of Q_n fits; all-red has no blue vertex at all
        c = LatticeColoring.all_red(N)
        return RamseyWitness(ESCAPING, N, t, n, c, 0, 0, time.perf_counter() - t0)
    space = _space(N, t, n, symmetry)
    if workers <= 1 or not space.symmetry:
        found, nodes, classes, _ = _dfs(space, 0, 0, 0, budget, False)
    else:
        found = None
        _, nodes, classes, roots = _dfs(space, 0, 0, 0, budget, True)
        jobs = [(N, t, n, symmetry, b, r, budget - nodes) for b, r in roots]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree, jobs))
        exhausted = False
        for res_found, res_nodes, res_exhausted in results:
            nodes += res_nodes
            exhausted = exhausted or res_exhausted
            if found is None and res_found is not None:
                found = res_found
        if found is None and (exhausted or nodes > budget):
            raise BudgetExhausted(nodes, budget)
    elapsed = time.perf_counter() - t0
    if found is None:
        return RamseyWitness(EXHAUSTIVE, N, t, n, None, nodes, classes, elapsed)
    c = _coloring_from_bits(N, found)
    if N <= SYMMETRY_MAX_DIM:
        c = canonical_under_symmetry(c)
    _verify_escape(c, t, n)
    return RamseyWitness(ESCAPING, N, t, n, c, nodes, classes, elapsed)


def brute_force_escapes(N: int, t: int, n: int) -> list[int]:
    """Blue bit patterns of all escaping colorings, by direct enumeration (N <= 4)."""
    if N > 4:
        raise ValueError("brute force capped at N <= 4")
    copies = []
    for fam in all_cube_copies(N, n):
        m = 0
        for v in fam:
            m |= 1 << v
        copies.append(m)
    size = 1 << N
    inc = [sum(1 << b for b in range(size) if not comparable(a, b)) for a in range(size)]
    out = []
    everything = (1 << size) - 1
    for blue in range(1 << size):
        red = everything & ~blue
        if any(m & ~red == 0 for m in copies):
            continue
        if _has_antichain_plain(blue, inc, t):
            continue
        out.append(blue)
    return out


def _has_antichain_plain(cand: int, inc: list[int], k: int) -> bool:
    if k == 0:
        return True
    while cand:
        low = cand & -cand
        u = low.bit_length() - 1
        cand ^= low
        if _has_antichain_plain(cand & inc[u], inc, k - 1):
            return True
    return False


@dataclass(frozen=True)
class RamseyResult:
    """``value`` is R(A_t, Q_n) when found, else None with ``lower`` = N_max + 1."""

    t: int
    n: int
    value: int | None
    lower: int
    witness: RamseyWitness | None
    runs: tuple[RamseyWitness, ...]

    @property
    def bounded(self) -> bool:
        return self.value is None


def ramsey_exact(t: int, n: int, n_max: int, budget: int = DEFAULT_BUDGET,
                 symmetry: bool = True, workers: int = 1) -> RamseyResult:
    """Smallest ``N <= n_max`` where no escaping coloring exists.

    Dimensions below ``n`` are skipped: the all-red ``Q_{N}`` escapes there.
    ``BudgetExhausted`` propagates unchanged.
    """
    if t < 2 or n < 1:
        raise ValueError("need t >= 2 and n >= 1")
    runs = []
    last = None
    for N in range(n, n_max + 1):
        w = has_escaping_coloring(N, t, n, budget=budget, symmetry=symmetry, workers=workers)
        runs.append(w)
        if not w.escapes:
            return RamseyResult(t, n, N, N, last, tuple(runs))
        last = w
    return RamseyResult(t, n, None, max(n_max + 1, n), last, tuple(runs))
