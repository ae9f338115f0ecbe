"""Chain and antichain structure of Boolean lattices.

Symmetric chain decompositions use the parenthesis-matching construction;
minimum chain covers and maximum antichains come from one maximum matching
on the strict-inclusion relation (Dilworth via Konig).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .lattice import check_dim, full_mask, is_chain, popcount

SCD_MAX_DIM = 20


@dataclass(frozen=True)
class ChainDecomposition:
    n: int
    chains: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.chains)


@dataclass(frozen=True)
class ChainCover:
    elements: frozenset[int]
    chains: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.chains)

    def is_valid(self) -> bool:
        covered = set()
        for ch in self.chains:
            if not ch or not is_chain(ch):
                return False
            covered.update(ch)
        return covered == set(self.elements)


def _bracket_start(mask: int, n: int) -> tuple[int, list[int]]:
    """Match each 1 (a closing bracket) with the nearest unmatched 0 to its left.

    Returns the chain's bottom vertex (all unmatched positions cleared) and the
    unmatched positions in increasing order.
    """
    open_zeros: list[int] = []
    unmatched: list[int] = []
    for i in range(n):
        if mask >> i & 1:
            if open_zeros:
                open_zeros.pop()
            else:
                unmatched.append(i)
        else:
            open_zeros.append(i)
    unmatched.extend(open_zeros)
    unmatched.sort()
    bottom = mask
    for i in unmatched:
        bottom &= ~(1 << i)
    return bottom, unmatched


def symmetric_chain_decomposition(n: int) -> ChainDecomposition:
    """Partition ``Q_n`` into symmetric chains, ordered by bottom vertex.

    Each chain starts at a vertex whose unmatched positions are all 0 and sets
    the unmatched positions one at a time in increasing index order.
    """
    check_dim(n, SCD_MAX_DIM)
    chains = []
    for v in range(1 << n):
        bottom, free = _bracket_start(v, n)
        if bottom != v:
            continue
        ch = [v]
        for i in free:
            v |= 1 << i
            ch.append(v)
        chains.append(tuple(ch))
    return ChainDecomposition(n, tuple(chains))


def chains_through_layer(d: ChainDecomposition, r: int) -> list[tuple[int, ...]]:
    """Chains of ``d`` that contain a vertex of size exactly ``r``."""
    if not 0 <= r <= d.n // 2:
        raise ValueError(f"r={r} outside 0..{d.n // 2}")
    return [ch for ch in d.chains if popcount(ch[0]) <= r <= popcount(ch[-1])]


def _comparability_matching(elems: list[int]) -> tuple[np.ndarray, csr_matrix]:
    """Maximum matching of the bipartite graph ``a_left -> b_right`` for ``a < b``.

    ``elems`` must be sorted ascending, so every strict superset sits to the right.
    """
    arr = np.asarray(elems, dtype=np.int64)
    m = len(arr)
    if m == 0:
        return np.zeros(0, dtype=np.int64), csr_matrix((0, 0), dtype=np.int8)
    rows, cols = [], []
    # chunked to keep the m x m boolean block bounded
    step = max(1, 4_000_000 // max(m, 1))
    for start in range(0, m, step):
        block = arr[start:start + step, None]
        rel = ((block & ~arr[None, :]) == 0) & (block != arr[None, :])
        r, c = np.nonzero(rel)
        rows.append(r + start)
        cols.append(c)
    rows_a = np.concatenate(rows)
    cols_a = np.concatenate(cols)
    graph = csr_matrix((np.ones(len(rows_a), dtype=np.int8), (rows_a, cols_a)), shape=(m, m))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return match, graph


def _cover_from_matching(elems: list[int], match: np.ndarray) -> list[tuple[int, ...]]:
    m = len(elems)
    succ = [-1] * m
    has_pred = [False] * m
    for i in range(m):
        j = int(match[i])
        if j >= 0:
            succ[i] = j
            has_pred[j] = True
    chains = []
    for i in range(m):
        if has_pred[i]:
            continue
        ch = []
        k = i
        while k >= 0:
            ch.append(elems[k])
            k = succ[k]
        chains.append(tuple(ch))
    return chains


def min_chain_cover(elements: Iterable[int]) -> ChainCover:
    """Cover ``elements`` by as few chains as possible (chains are disjoint).

    Chain count equals ``|elements|`` minus a maximum matching of the strict
    inclusion relation; chains are listed by their lowest vertex.
    """
    elems = sorted(set(elements))
    match, _ = _comparability_matching(elems)
    chains = _cover_from_matching(elems, match)
    return ChainCover(frozenset(elems), tuple(chains))


def max_antichain(elements: Iterable[int]) -> frozenset[int]:
    """A maximum antichain of ``elements``, read off the Konig vertex cover.

    The cover is taken in the reversed order, which pushes the antichain
    towards low vertices: when a whole low layer is a maximum antichain,
    that layer comes back.
    """
    given = set(elements)
    if not given:
        return frozenset()
    top = 0
    for v in given:
        top |= v
    # v -> top ^ v reverses inclusion on subsets of top
    return frozenset(top ^ v for v in _konig_antichain(sorted(top ^ v for v in given)))


def _konig_antichain(elems: list[int]) -> frozenset[int]:
    m = len(elems)
    match, graph = _comparability_matching(elems)
    right_to_left = [-1] * m
    for i in range(m):
        if match[i] >= 0:
            right_to_left[int(match[i])] = i
    indptr, indices = graph.indptr, graph.indices
    seen_left = [False] * m
    seen_right = [False] * m
    stack = [i for i in range(m) if match[i] < 0]
    for i in stack:
        seen_left[i] = True
    while stack:
        i = stack.pop()
        for j in indices[indptr[i]:indptr[i + 1]]:
            if seen_right[j]:
                continue
            seen_right[j] = True
            k = right_to_left[j]
            if k >= 0 and not seen_left[k]:
                seen_left[k] = True
                stack.append(k)
    # vertex cover = unreached left + reached right; antichain = its complement
    anti = frozenset(elems[i] for i in range(m) if seen_left[i] and not seen_right[i])
    return anti


def extend_to_full_chain(ch: Sequence[int], n: int) -> tuple[int, ...]:
    """Refine ``ch`` to a maximal chain from the empty set to ``[n]``.

    Gaps are filled by adding the missing elements in increasing index order.
    """
    if not is_chain(ch):
        raise ValueError("input is not a strictly increasing chain")
    top = full_mask(n)
    if any(v & ~top for v in ch):
        raise ValueError(f"chain leaves Q_{n}")
    out = [0]
    cur = 0
    for target in list(ch) + [top]:
        missing = target & ~cur
        i = 0
        while missing:
            if missing & 1:
                cur |= 1 << i
                out.append(cur)
            missing >>= 1
            i += 1
    return tuple(out)


def full_chain_to_ordering(ch: Sequence[int]) -> tuple[int, ...]:
    """The linear ordering ``(a_1, ..., a_N)`` read off a full chain."""
    if not ch or ch[0] != 0:
        raise ValueError("a full chain starts at the empty set")
    order = []
    for a, b in zip(ch, ch[1:]):
        diff = b & ~a
        if a & ~b or popcount(diff) != 1:
            raise ValueError("consecutive vertices must differ by one added element")
        order.append(diff.bit_length() - 1)
    if ch[-1] != full_mask(len(order)):
        raise ValueError("a full chain ends at the full ground set")
    return tuple(order)


def scd_chain_count(n: int) -> int:
    return comb(n, n // 2)


def is_symmetric_chain(ch: Sequence[int], n: int) -> bool:
    sizes = [popcount(v) for v in ch]
    return (is_chain(ch) and sizes == list(range(sizes[0], sizes[0] + len(sizes)))
            and sizes[0] + sizes[-1] == n)


def covers(chains: Iterable[Sequence[int]], vertices: Iterable[int]) -> bool:
    covered = set()
    for ch in chains:
        covered.update(ch)
    return all(v in covered for v in vertices)


__all__ = [
    "ChainCover", "ChainDecomposition", "chains_through_layer", "covers",
    "extend_to_full_chain", "full_chain_to_ordering", "is_symmetric_chain",
    "max_antichain", "min_chain_cover", "scd_chain_count", "symmetric_chain_decomposition",
]
