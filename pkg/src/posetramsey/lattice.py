"""Boolean lattices over bitmask vertex sets, and blue/red colorings of them.

A vertex of ``Q_N`` is a plain ``int`` whose set bits are the element
indices ``0..N-1``.  Within a layer, vertices are listed in colex order,
which for bitmasks coincides with increasing numeric value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_DIM = 24

BLUE = "blue"
RED = "red"


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def elements(mask: int) -> list[int]:
    """Element indices of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def comparable(a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` are related by inclusion (either way)."""
    return a & ~b == 0 or b & ~a == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def check_dim(n: int, cap: int = MAX_DIM) -> None:
    if not 0 <= n <= cap:
        raise ValueError(f"dimension {n} outside 0..{cap}")


def layer(n: int, i: int) -> list[int]:
    """All ``i``-element vertices of ``Q_n`` in colex order."""
    check_dim(n)
    if not 0 <= i <= n:
        raise ValueError(f"layer {i} outside 0..{n}")
    if i == 0:
        return [0]
    out = []
    v = (1 << i) - 1
    limit = 1 << n
    while v < limit:
        out.append(v)
        # Gosper's hack: next mask with the same popcount
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
    return out


def sizes_array(n: int) -> np.ndarray:
    """``sizes[v] = |v|`` for every vertex of ``Q_n``."""
    sizes = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        sizes[1 << b:2 << b] = sizes[:1 << b] + 1
    return sizes


@dataclass(frozen=True, eq=False)
class LatticeColoring:
    """A blue/red coloring of ``Q_n``; ``blue[v]`` is True for blue vertices.

    The array is stored read-only so instances can be shared freely.
    """

    n: int
    blue: np.ndarray

    def __post_init__(self):
        check_dim(self.n)
        arr = np.ascontiguousarray(self.blue, dtype=bool)
        if arr.shape != (1 << self.n,):
            raise ValueError(
                f"coloring of Q_{self.n} needs {1 << self.n} entries, got {arr.shape}")
        if arr is self.blue:
            arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "blue", arr)

    @classmethod
    def from_blue(cls, n: int, blue_vertices: Iterable[int]) -> "LatticeColoring":
        arr = np.zeros(1 << n, dtype=bool)
        for v in blue_vertices:
            if not 0 <= v < 1 << n:
                raise ValueError(f"vertex {v} not in Q_{n}")
            arr[v] = True
        return cls(n, arr)

    @classmethod
    def all_red(cls, n: int) -> "LatticeColoring":
        return cls(n, np.zeros(1 << n, dtype=bool))

    @classmethod
    def all_blue(cls, n: int) -> "LatticeColoring":
        return cls(n, np.ones(1 << n, dtype=bool))

    @classmethod
    def from_int(cls, n: int, bits: int) -> "LatticeColoring":
        """Coloring whose blue set is the set bits of ``bits`` (bit ``v`` = vertex ``v``)."""
        size = 1 << n
        if bits >> size:
            raise ValueError("bit pattern longer than 2^n")
        raw = bits.to_bytes((size + 7) // 8, "little")
        arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
        return cls(n, arr.astype(bool))

    def to_int(self) -> int:
        packed = np.packbits(self.blue, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def is_blue(self, v: int) -> bool:
        return bool(self.blue[v])

    def color(self, v: int) -> str:
        return BLUE if self.blue[v] else RED

    def has_color(self, v: int, color: str) -> bool:
        return bool(self.blue[v]) == (color == BLUE)

    def vertices(self, color: str) -> list[int]:
        _check_color(color)
        sel = self.blue if color == BLUE else ~self.blue
        return np.flatnonzero(sel).tolist()

    def blue_vertices(self) -> list[int]:
        return self.vertices(BLUE)

    def red_vertices(self) -> list[int]:
        return self.vertices(RED)

    def relabel(self, perm: Sequence[int], complement: bool = False) -> "LatticeColoring":
        """Image of this coloring under the ground permutation ``i -> perm[i]``,
        optionally followed by global complementation ``X -> [N] \\ X``."""
        return LatticeColoring(self.n, self.blue[vertex_permutation(self.n, perm, complement)])

    def __eq__(self, other):
        if not isinstance(other, LatticeColoring):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.blue, other.blue))

    def __hash__(self):
        return hash((self.n, self.blue.tobytes()))

    def __repr__(self):
        return f"LatticeColoring(n={self.n}, blue={self.blue_vertices() if self.n <= 5 else '...'})"


def vertex_permutation(n: int, perm: Sequence[int], complement: bool = False) -> np.ndarray:
    """Index array ``src`` with ``new.blue = old.blue[src]``.

    The new coloring gives vertex ``sigma(v)`` the old color of ``v``, where
    ``sigma`` maps element ``i`` to ``perm[i]`` and then complements if asked.
    """
    verts = np.arange(1 << n, dtype=np.int64)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the ground set")
    src_of = verts ^ full_mask(n) if complement else verts
    # new vertex w came from the vertex whose bit i is bit perm[i] of w
    src = np.zeros_like(verts)
    for j in range(n):
        src |= ((src_of >> j) & 1) << inv[j]
    return src


def _check_color(color: str) -> None:
    if color not in (BLUE, RED):
        raise ValueError(f"color must be {BLUE!r} or {RED!r}, got {color!r}")


def mono_height(c: LatticeColoring, color: str) -> int:
    """Number of vertices in a longest chain all of whose vertices have ``color``.

    DP over the cover relation, layer by layer: ``h[v]`` is the longest
    ``color`` chain among subsets of ``v``, so chains may skip layers.
    """
    _check_color(color)
    sel = c.blue if color == BLUE else ~c.blue
    h = np.zeros(1 << c.n, dtype=np.int32)
    h[0] = 1 if sel[0] else 0
    for i in range(1, c.n + 1):
        verts = np.array(layer(c.n, i), dtype=np.int64)
        best = np.zeros(len(verts), dtype=np.int32)
        for b in range(c.n):
            bit = 1 << b
            has = (verts & bit) != 0
            below = h[verts[has] ^ bit]
            best[has] = np.maximum(best[has], below)
        h[verts] = best + sel[verts]
    return int(h.max(initial=0))


def random_coloring(n: int, seed: int, blue_density: float | Fraction = Fraction(1, 2)) -> LatticeColoring:
    """Each vertex is blue independently with probability ``blue_density``.

    Uses ``numpy.random.default_rng(seed)`` (PCG64): vertex ``v`` is blue iff
    the ``v``-th draw of ``rng.random(2**n)`` is below the density.
    """
    check_dim(n)
    density = float(blue_density)
    if not 0.0 <= density <= 1.0:
        raise ValueError("blue_density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    draws = rng.random(1 << n)
    return LatticeColoring(n, draws < density)


def is_chain(vertices: Sequence[int]) -> bool:
    """True iff the sequence is strictly increasing under inclusion."""
    return all(a != b and is_subset(a, b) for a, b in zip(vertices, vertices[1:]))


def is_antichain(vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    return not any(comparable(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])
