import warnings
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from posetramsey.sequences import (TripleNotFound, TriplePreconditionWarning,
                                   common_undirected_subsequence, consistent_triple,
                                   is_consistent_triple, is_subsequence,
                                   is_undirected_subsequence, longest_monotone_subsequence,
                                   triple_lemma_holds)


def brute_lcus_length(s, t):
    for k in range(len(s), 0, -1):
        for idx in combinations(range(len(s)), k):
            if is_undirected_subsequence([s[i] for i in idx], t):
                return k
    return 0


def brute_triple_exists(orderings):
    return any(is_consistent_triple(tr, orderings)
               for tr in permutations(orderings[0], 3))


def test_monotone_examples():
    ident = (1, 2, 3, 4, 5)
    assert longest_monotone_subsequence((2, 1, 4, 3, 5), ident) == (2, 4, 5)
    assert longest_monotone_subsequence((5, 4, 3, 2, 1), ident) == (5, 4, 3, 2, 1)
    assert longest_monotone_subsequence((), ()) == ()


def test_monotone_rejects_unranked():
    with pytest.raises(ValueError):
        longest_monotone_subsequence((1, 9), (1, 2))


def test_subsequence_helpers():
    assert is_subsequence((1, 3), (1, 2, 3))
    assert not is_subsequence((3, 1), (1, 2, 3))
    assert is_undirected_subsequence((3, 1), (1, 2, 3))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_erdos_szekeres_guarantee(m):
    rng = np.random.default_rng(m)
    L = m * m + 1
    ident = tuple(range(L))
    for _ in range(500):
        s = tuple(int(x) for x in rng.permutation(L))
        assert len(longest_monotone_subsequence(s, ident)) >= m + 1


@pytest.mark.parametrize("L", range(1, 6))
def test_common_subsequence_against_brute_force(L):
    perms = list(permutations(range(L)))
    for s in perms:
        for t in perms[:: max(1, len(perms) // 20)]:
            out = common_undirected_subsequence(s, t)
            assert is_undirected_subsequence(out, s) and is_undirected_subsequence(out, t)
            assert len(out) == brute_lcus_length(s, t)


def test_common_subsequence_guarantee():
    # any two orderings of L elements share an undirected subsequence of length ceil(sqrt(L))
    rng = np.random.default_rng(1)
    for L in range(1, 30):
        for _ in range(20):
            s, t = rng.permutation(L).tolist(), rng.permutation(L).tolist()
            k = len(common_undirected_subsequence(s, t))
            assert k * k >= L


def test_common_subsequence_validation():
    with pytest.raises(ValueError):
        common_undirected_subsequence((1, 1), (1, 2))
    with pytest.raises(ValueError):
        common_undirected_subsequence((1, 2), (1, 3))


def test_triple_examples():
    assert consistent_triple([(1, 2, 3, 4, 5)]) == (1, 2, 3)
    tr = consistent_triple([(1, 2, 3, 4, 5), (5, 4, 3, 2, 1)])
    assert is_consistent_triple(tr, [(1, 2, 3, 4, 5), (5, 4, 3, 2, 1)])


def test_triple_precondition_warns_or_fails():
    orders = [(0, 1, 2, 3), (1, 3, 0, 2)]
    # no betweenness-consistent triple exists here at all
    assert not brute_triple_exists(orders)
    with pytest.warns(TriplePreconditionWarning):
        with pytest.raises(TripleNotFound):
            consistent_triple(orders)


def test_triple_lemma_bound():
    assert triple_lemma_holds(1, 3)
    assert not triple_lemma_holds(2, 4)
    assert triple_lemma_holds(2, 5)
    assert triple_lemma_holds(3, 17)
    assert not triple_lemma_holds(3, 16)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_triple_random_instances(d):
    rng = np.random.default_rng(10 + d)
    size = 2 ** (2 ** (d - 1)) + 1
    for _ in range(200):
        orders = [tuple(rng.permutation(size).tolist()) for _ in range(d)]
        tr, steps = consistent_triple(orders, return_steps=True)
        assert is_consistent_triple(tr, orders)
        assert len(steps) == d


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(lambda L: st.lists(st.permutations(list(range(L))),
                                                    min_size=1, max_size=3)))
def test_triple_is_consistent_when_returned(orders):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TriplePreconditionWarning)
        try:
            tr = consistent_triple(orders)
        except TripleNotFound:
            return
    assert is_consistent_triple(tr, orders)
