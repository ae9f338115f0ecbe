"""Monotone and common undirected subsequences of permutation sequences.

A linear ordering of a ground set is passed around as the tuple of its
elements from least to greatest, i.e. the same shape as a permutation
sequence.  ``ranks`` turns it into the element -> position map.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from typing import Hashable, Sequence


class TripleNotFound(RuntimeError):
    """The iterated common-subsequence extraction ended with fewer than 3 items."""


class TriplePreconditionWarning(UserWarning):
    pass


def ranks(order: Sequence[Hashable]) -> dict:
    r = {a: i for i, a in enumerate(order)}
    if len(r) != len(order):
        raise ValueError("ordering has repeated elements")
    return r


def _longest_from(values: Sequence[int]) -> list[int]:
    """``out[i]`` = length of the longest increasing run of ``values`` starting at i."""
    # longest increasing from i == longest decreasing ending at i in the reversal;
    # negate so that bisect works on an increasing tails list
    tails: list[int] = []
    out = [0] * len(values)
    for i in range(len(values) - 1, -1, -1):
        x = -values[i]
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
        out[i] = pos + 1
    return out


def _lex_first_increasing(values: Sequence[int]) -> list[int]:
    """Index list of the lexicographically smallest longest increasing subsequence."""
    if not values:
        return []
    best = _longest_from(values)
    need = max(best)
    picked: list[int] = []
    last = None
    for i, v in enumerate(values):
        if best[i] == need and (last is None or v > last):
            picked.append(i)
            last = v
            need -= 1
            if need == 0:
                break
    return picked


def longest_monotone_subsequence(s: Sequence[Hashable], pi: Sequence[Hashable]) -> tuple:
    """Longest subsequence of ``s`` that is increasing or decreasing under ``pi``.

    Ties go to the increasing direction, then to the lexicographically
    smallest list of positions in ``s``.
    """
    r = ranks(pi)
    try:
        vals = [r[a] for a in s]
    except KeyError as exc:
        raise ValueError(f"element {exc.args[0]!r} is not ranked by the ordering") from None
    inc = _lex_first_increasing(vals)
    dec = _lex_first_increasing([-v for v in vals])
    pick = inc if len(inc) >= len(dec) else dec
    return tuple(s[i] for i in pick)


def is_subsequence(sub: Sequence, s: Sequence) -> bool:
    it = iter(s)
    return all(any(a == b for b in it) for a in sub)


def is_undirected_subsequence(sub: Sequence, s: Sequence) -> bool:
    """True iff ``sub`` or its reversal is a subsequence of ``s``."""
    return is_subsequence(sub, s) or is_subsequence(list(reversed(sub)), s)


def common_undirected_subsequence(s: Sequence[Hashable], t: Sequence[Hashable]) -> tuple:
    """A longest sequence that is an undirected subsequence of both ``s`` and ``t``.

    Read in ``s``-order, such a sequence is exactly a monotone subsequence of
    ``s`` under the ordering ``t``.
    """
    if len(set(s)) != len(s) or len(set(t)) != len(t):
        raise ValueError("permutation sequences cannot repeat elements")
    if set(s) != set(t):
        raise ValueError("sequences are on different element sets")
    out = longest_monotone_subsequence(s, t)
    if not (is_undirected_subsequence(out, s) and is_undirected_subsequence(out, t)):
        raise AssertionError("common subsequence failed self-check")
    return out


def is_consistent_triple(triple: Sequence[Hashable], orderings: Sequence[Sequence[Hashable]]) -> bool:
    """True iff for every ordering, ``x < y < z`` or ``z < y < x``."""
    x, y, z = triple
    if len({x, y, z}) != 3:
        return False
    for order in orderings:
        r = ranks(order)
        if not (r[x] < r[y] < r[z] or r[z] < r[y] < r[x]):
            return False
    return True


def triple_lemma_holds(d: int, size: int) -> bool:
    """Whether ``size`` elements meet the ``2^(2^(d-1)) + 1`` bound for ``d`` orderings."""
    if d <= 0:
        return size >= 3
    return size >= 2 ** (2 ** (d - 1)) + 1


def consistent_triple(orderings: Sequence[Sequence[Hashable]], return_steps: bool = False):
    """Three elements lying in the same betweenness pattern in every ordering.

    Starts from the first ordering and repeatedly intersects it with the next
    ordering (restricted to the surviving elements) through a longest common
    undirected subsequence; the first three survivors are returned.

    If the size bound fails a ``TriplePreconditionWarning`` is issued and the
    iteration still runs; ``TripleNotFound`` is raised if it comes up short.
    With ``return_steps`` the surviving sequence after each step is returned too.
    """
    if not orderings:
        raise ValueError("need at least one ordering")
    base = set(orderings[0])
    if any(set(o) != base or len(o) != len(base) for o in orderings):
        raise ValueError("orderings must be permutations of one ground set")
    d = len(orderings)
    size = len(base)
    guaranteed = triple_lemma_holds(d, size)
    if not guaranteed:
        warnings.warn(f"{size} elements below the bound for {d} orderings; "
                      "the triple may not exist", TriplePreconditionWarning, stacklevel=2)
    survivor = tuple(orderings[0])
    steps = [survivor]
    for i in range(1, d):
        keep = set(survivor)
        restricted = [a for a in orderings[i] if a in keep]
        survivor = common_undirected_subsequence(survivor, restricted)
        steps.append(survivor)
        if guaranteed:
            bound = 2 ** (2 ** (d - 1 - i)) + 1
            assert len(survivor) >= bound, (i, len(survivor), bound)
    if len(survivor) < 3:
        raise TripleNotFound(f"only {len(survivor)} common elements survived")
    triple = tuple(survivor[:3])
    if not is_consistent_triple(triple, orderings):
        raise AssertionError(f"triple {triple} fails the directional check")
    return (triple, steps) if return_steps else triple
