from itertools import combinations, product
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from posetramsey.constructions import construct_a2_lower, construct_layered_lower
from posetramsey.lattice import (BLUE, RED, LatticeColoring, comparable, is_subset, layer,
                                 mono_height, random_coloring)

from conftest import S


def brute_height(c, color):
    """Longest monochromatic chain by enumerating all vertex subsets (tiny N only)."""
    verts = c.vertices(color)
    best = 0
    for k in range(len(verts), 0, -1):
        for sub in combinations(sorted(verts, key=lambda v: (bin(v).count("1"), v)), k):
            if all(is_subset(a, b) and a != b for a, b in zip(sub, sub[1:])):
                return k
    return best


def test_comparable_examples():
    assert comparable(S(1), S(1, 2))
    assert not comparable(S(1), S(2))
    assert comparable(S(1, 3), S(1, 3))


def test_order_axioms_exhaustive():
    for n in range(5):
        vs = range(1 << n)
        for a in vs:
            assert comparable(a, a)
        for a, b, c in product(vs, repeat=3):
            if is_subset(a, b) and is_subset(b, c):
                assert is_subset(a, c)


def test_layer_examples():
    assert layer(3, 0) == [0]
    assert layer(3, 1) == [S(1), S(2), S(3)]
    two = layer(4, 2)
    assert len(two) == 6
    assert two == sorted(v for v in range(16) if bin(v).count("1") == 2)


def test_layer_out_of_range():
    with pytest.raises(ValueError):
        layer(3, 4)
    with pytest.raises(ValueError):
        layer(3, -1)


@pytest.mark.parametrize("n", range(0, 17))
def test_layers_partition(n):
    sizes = [len(layer(n, i)) for i in range(n + 1)]
    assert sizes == [comb(n, i) for i in range(n + 1)]
    assert sum(sizes) == 2 ** n


@pytest.mark.parametrize("n", range(0, 9))
def test_all_red_height(n):
    assert mono_height(LatticeColoring.all_red(n), RED) == n + 1
    assert mono_height(LatticeColoring.all_red(n), BLUE) == 0


def test_height_examples():
    assert mono_height(LatticeColoring.all_red(3), RED) == 4
    for n in range(1, 8):
        assert mono_height(construct_a2_lower(n), RED) == n
    assert mono_height(construct_layered_lower(1, 1), RED) == 1


def test_height_skips_layers():
    # red bottom and top only: the chain jumps over the blue middle
    c = LatticeColoring.from_blue(2, [S(1), S(2)])
    assert mono_height(c, RED) == 2


@given(st.integers(0, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (2 ** n) - 1))))
def test_height_matches_brute_force(arg):
    n, bits = arg
    c = LatticeColoring.from_int(n, bits)
    for color in (RED, BLUE):
        assert mono_height(c, color) == brute_height(c, color)


def test_random_coloring_extremes_and_fixture():
    assert random_coloring(3, 7, 0).blue_vertices() == []
    assert random_coloring(3, 7, 1).blue_vertices() == list(range(8))
    # frozen reference for seed 42, density 1/2 (numpy default_rng / PCG64)
    assert random_coloring(3, 42, 0.5).blue_vertices() == [1, 4]
    assert random_coloring(5, 3, 0.3) == random_coloring(5, 3, 0.3)


def test_coloring_int_roundtrip():
    rng = np.random.default_rng(0)
    for n in range(0, 9):
        c = LatticeColoring(n, rng.random(1 << n) < 0.5)
        assert LatticeColoring.from_int(n, c.to_int()) == c


def test_coloring_rejects_bad_length():
    with pytest.raises(ValueError):
        LatticeColoring(3, np.zeros(7, dtype=bool))
    with pytest.raises(ValueError):
        LatticeColoring.from_blue(2, [4])


def test_coloring_is_read_only():
    c = LatticeColoring.all_red(2)
    with pytest.raises(ValueError):
        c.blue[0] = True


def test_relabel_moves_colors():
    c = LatticeColoring.from_blue(3, [S(1)])
    # element 0 -> 2
    assert c.relabel([2, 0, 1]).blue_vertices() == [S(3)]
    assert c.relabel([0, 1, 2], complement=True).blue_vertices() == [S(2, 3)]
