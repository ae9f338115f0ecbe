"""Monochromatic Boolean-lattice copies in canonical form.

Any copy of ``Q_n`` inside ``Q_N`` can be written over some ``n``-element
ground subset ``G`` as ``X -> X | tail[X]`` for ``X`` ranging over subsets of
``G``, where ``tail`` maps into the complement of ``G`` and is monotone.
Searching copies therefore reduces to choosing monotone tails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .lattice import (BLUE, RED, LatticeColoring, elements, full_mask, is_subset,
                      layer, mono_height, popcount, submasks)


@dataclass(frozen=True)
class CanonicalEmbedding:
    """``X -> X | tail[X]`` for every subset ``X`` of ``ground``."""

    ground: int
    tail: Mapping[int, int] = field(hash=False)

    @property
    def dim(self) -> int:
        return popcount(self.ground)

    def image(self, x: int) -> int:
        return x | self.tail[x]

    def images(self) -> list[int]:
        return [x | self.tail[x] for x in submasks(self.ground)]


@dataclass(frozen=True)
class BlueChainWitness:
    """Blue chain ``x_parts[i] | {first i elements of y_order}``, ``i = 0..k``."""

    x_parts: tuple[int, ...]
    y_order: tuple[int, ...]

    def vertices(self) -> list[int]:
        out = []
        y = 0
        for i, x in enumerate(self.x_parts):
            if i:
                y |= 1 << self.y_order[i - 1]
            out.append(x | y)
        return out


def verify_embedding(e: CanonicalEmbedding, c: LatticeColoring, color: str) -> bool:
    """Monotone tail avoiding the ground, and every image vertex of ``color``."""
    top = c.full
    g = e.ground
    if g & ~top:
        return False
    subs = list(submasks(g))
    if set(e.tail) != set(subs):
        return False
    bits = [1 << i for i in elements(g)]
    for x in subs:
        t = e.tail[x]
        if t & ~top or t & g:
            return False
        if not c.has_color(x | t, color):
            return False
        for b in bits:
            if not x & b and t & ~e.tail[x | b]:
                return False
    return True


def _level_order(ground: int) -> list[int]:
    return sorted(submasks(ground), key=lambda x: (popcount(x), x))


def _tail_search(is_ok, ground: int, others: int):
    """Backtracking search for a monotone tail ``g: 2^ground -> 2^others``.

    ``is_ok(vertex)`` says whether an image vertex is admissible.  Subsets are
    assigned in increasing size; each tail must contain the union of the tails
    of the subsets it covers, and candidates are tried in increasing order.
    Domains are pruned to arc consistency along cover edges before searching.
    """
    order = _level_order(ground)
    bits = [1 << i for i in elements(ground)]
    cand_all = list(submasks(others))
    dom = {x: [t for t in cand_all if is_ok(x | t)] for x in order}
    if any(not dom[x] for x in order):
        return None

    # arc consistency: a tail needs a subset tail below and a superset tail above
    changed = True
    while changed:
        changed = False
        for x in order:
            keep = []
            for t in dom[x]:
                ok = True
                for b in bits:
                    if x & b:
                        if not any(is_subset(s, t) for s in dom[x ^ b]):
                            ok = False
                            break
                    elif not any(is_subset(t, s) for s in dom[x | b]):
                        ok = False
                        break
                if ok:
                    keep.append(t)
            if len(keep) != len(dom[x]):
                if not keep:
                    return None
                dom[x] = keep
                changed = True

    tail: dict[int, int] = {}

    def assign(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        lower = 0
        for b in bits:
            if x & b:
                lower |= tail[x ^ b]
        for t in dom[x]:
            if lower & ~t:
                continue
            # forward check: every cover above must keep a superset tail
            if all(x & b or any(is_subset(t, s) for s in dom[x | b]) for b in bits):
                tail[x] = t
                if assign(k + 1):
                    return True
        tail.pop(x, None)
        return False

    return tail if assign(0) else None


def find_cube(c: LatticeColoring, n: int, color: str = RED) -> CanonicalEmbedding | None:
    """First monochromatic copy of ``Q_n`` by ground-subset mask, or ``None``."""
    if not 0 <= n <= c.n:
        raise ValueError(f"cannot place Q_{n} in Q_{c.n}")
    if mono_height(c, color) < n + 1:
        return None
    top = c.full
    sel = c.blue if color == BLUE else ~c.blue
    is_ok = sel.__getitem__
    for g in layer(c.n, n):
        tail = _tail_search(is_ok, g, top & ~g)
        if tail is not None:
            e = CanonicalEmbedding(g, tail)
            if not verify_embedding(e, c, color):
                raise AssertionError("tail search produced an invalid embedding")
            return e
    return None


def find_red_cube(c: LatticeColoring, n: int) -> CanonicalEmbedding | None:
    """A red copy of ``Q_n`` in canonical form, or ``None`` if there is none."""
    return find_cube(c, n, RED)


def canonicalize_copy(family: Iterable[int], n_dim: int) -> CanonicalEmbedding:
    """Rewrite a copy of ``Q_n`` inside ``Q_{n_dim}`` as a canonical embedding.

    Raises ``ValueError`` when the family is not a copy of a Boolean lattice.
    """
    fam = set(family)
    size = len(fam)
    n = size.bit_length() - 1
    if size == 0 or size != 1 << n:
        raise ValueError(f"a copy of Q_n has 2^n vertices, got {size}")
    top_all = full_mask(n_dim)
    if any(v & ~top_all for v in fam):
        raise ValueError(f"family leaves Q_{n_dim}")
    bottom = top_all
    top = 0
    for v in fam:
        bottom &= v
        top |= v
    if bottom not in fam or top not in fam:
        raise ValueError("family has no least or no greatest vertex")
    spread = top & ~bottom
    if popcount(spread) < n:
        raise ValueError("family is not a copy of a Boolean lattice")
    for g in layer(n_dim, n):
        if g & ~spread:
            continue
        tail = {}
        for v in fam:
            x = v & g
            if x in tail:
                break
            tail[x] = v & ~g
        else:
            e = CanonicalEmbedding(g, tail)
            if _monotone(e):
                return e
    raise ValueError("family is not a copy of a Boolean lattice")


def _monotone(e: CanonicalEmbedding) -> bool:
    bits = [1 << i for i in elements(e.ground)]
    return all(x & b or is_subset(e.tail[x], e.tail[x | b])
               for x in e.tail for b in bits)


def is_cube_copy(family: Iterable[int], n_dim: int) -> bool:
    try:
        canonicalize_copy(family, n_dim)
    except ValueError:
        return False
    return True


def chain_or_cube(c: LatticeColoring, x_ground: int, y_order: Sequence[int]):
    """Either a red canonical ``Q_n`` over ``x_ground`` or a blue chain witness.

    Let ``Y(i)`` be the first ``i`` elements of ``y_order``.  For each subset
    ``X`` the DP records which ``i`` admit a blue chain
    ``X_0|Y(0) <= ... <= X_i|Y(i)`` with nested ``X_j`` ending exactly at ``X``;
    ``h(X)`` is the largest such ``i`` over all subsets of ``X``.  If
    ``h(x_ground) = k`` the chain is rebuilt, otherwise
    ``X -> X | Y(h(X) + 1)`` is red and monotone.
    """
    top = c.full
    y_mask = 0
    for y in y_order:
        y_mask |= 1 << y
    k = len(y_order)
    if (len(set(y_order)) != k or x_ground & y_mask or (x_ground | y_mask) != top):
        raise ValueError("x_ground and y_order must partition the ground set")
    prefixes = [0]
    for y in y_order:
        prefixes.append(prefixes[-1] | 1 << y)
    blue = c.blue
    bits = [1 << i for i in elements(x_ground)]
    ends: dict[int, int] = {}
    below: dict[int, int] = {}
    for x in _level_order(x_ground):
        acc = 0
        for b in bits:
            if x & b:
                acc |= below[x ^ b]
        e = 0
        for i in range(k + 1):
            if blue[x | prefixes[i]] and (i == 0 or acc >> (i - 1) & 1):
                e |= 1 << i
                acc |= 1 << i
        ends[x] = e
        below[x] = acc

    if below[x_ground] >> k & 1:
        parts = [0] * (k + 1)
        cur = min(x for x in ends if ends[x] >> k & 1)
        parts[k] = cur
        for i in range(k - 1, -1, -1):
            cur = next(x for x in submasks(cur) if ends[x] >> i & 1)
            parts[i] = cur
        w = BlueChainWitness(tuple(parts), tuple(y_order))
        if not verify_blue_chain(w, c):
            raise AssertionError("chain reconstruction produced a non-blue chain")
        return w

    tail = {x: prefixes[below[x].bit_length()] for x in below}
    emb = CanonicalEmbedding(x_ground, tail)
    if not verify_embedding(emb, c, RED):
        raise AssertionError("DP produced an invalid red embedding")
    return emb


def verify_blue_chain(w: BlueChainWitness, c: LatticeColoring) -> bool:
    """Nested x-parts, x-parts disjoint from the y elements, all vertices blue."""
    y_mask = 0
    for y in w.y_order:
        y_mask |= 1 << y
    if len(w.x_parts) != len(w.y_order) + 1:
        return False
    if any(x & y_mask for x in w.x_parts):
        return False
    if any(not is_subset(a, b) for a, b in zip(w.x_parts, w.x_parts[1:])):
        return False
    return all(0 <= v <= c.full and c.is_blue(v) for v in w.vertices())


ORACLE_MAX_DIM = 4


def all_red_cubes_oracle(c: LatticeColoring, n: int) -> int:
    """Count distinct red copies of ``Q_n`` by brute-force injective search.

    Maps the vertices of ``Q_n`` one by one to red vertices, keeping only maps
    that preserve and reflect inclusion on every assigned pair; the distinct
    image sets are counted.
    """
    if c.n > ORACLE_MAX_DIM:
        raise ValueError(f"oracle capped at N <= {ORACLE_MAX_DIM}")
    if not 0 <= n <= c.n:
        raise ValueError(f"cannot place Q_{n} in Q_{c.n}")
    reds = c.red_vertices()
    src = list(range(1 << n))
    images: set[frozenset[int]] = set()
    chosen: list[int] = []

    def extend(k: int) -> None:
        if k == len(src):
            images.add(frozenset(chosen))
            return
        a = src[k]
        for v in reds:
            if v in chosen:
                continue
            ok = True
            for j in range(k):
                b, w = src[j], chosen[j]
                if is_subset(a, b) != is_subset(v, w) or is_subset(b, a) != is_subset(w, v):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                extend(k + 1)
                chosen.pop()

    extend(0)
    return len(images)


def all_cube_copies(n_dim: int, n: int) -> list[frozenset[int]]:
    """Every copy of ``Q_n`` in ``Q_{n_dim}``, from canonical forms.

    Enumerates all monotone tails over every ground subset and removes
    duplicate images.  Meant for small dimensions only.
    """
    top = full_mask(n_dim)
    seen: set[frozenset[int]] = set()
    out = []
    for g in layer(n_dim, n):
        for tail in _all_monotone_tails(g, top & ~g):
            fam = frozenset(x | tail[x] for x in tail)
            if fam not in seen:
                seen.add(fam)
                out.append(fam)
    return out


def _all_monotone_tails(ground: int, others: int):
    order = _level_order(ground)
    bits = [1 << i for i in elements(ground)]
    cands = list(submasks(others))
    tail: dict[int, int] = {}

    def rec(k):
        if k == len(order):
            yield dict(tail)
            return
        x = order[k]
        lower = 0
        for b in bits:
            if x & b:
                lower |= tail[x ^ b]
        for t in cands:
            if not lower & ~t:
                tail[x] = t
                yield from rec(k + 1)
        tail.pop(x, None)

    yield from rec(0)
