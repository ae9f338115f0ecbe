from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from posetramsey.embeddings import (BlueChainWitness, CanonicalEmbedding, all_cube_copies,
                                    all_red_cubes_oracle, canonicalize_copy, chain_or_cube,
                                    find_cube, find_red_cube, is_cube_copy, verify_blue_chain,
                                    verify_embedding)
from posetramsey.lattice import BLUE, RED, LatticeColoring, comparable, is_subset

from conftest import S


def test_identity_embedding():
    c = LatticeColoring.all_red(2)
    e = CanonicalEmbedding(S(1, 2), {0: 0, S(1): 0, S(2): 0, S(1, 2): 0})
    assert verify_embedding(e, c, RED)
    assert sorted(e.images()) == [0, 1, 2, 3]


def test_embedding_rejects_non_monotone_tail():
    c = LatticeColoring.all_red(3)
    e = CanonicalEmbedding(S(1), {0: S(3), S(1): 0})
    assert not verify_embedding(e, c, RED)


def test_embedding_rejects_tail_meeting_ground():
    c = LatticeColoring.all_red(3)
    e = CanonicalEmbedding(S(1), {0: S(1), S(1): 0})
    assert not verify_embedding(e, c, RED)


def test_embedding_rejects_wrong_color():
    c = LatticeColoring.from_blue(2, [S(1, 2)])
    e = CanonicalEmbedding(S(1, 2), {x: 0 for x in range(4)})
    assert not verify_embedding(e, c, RED)


def test_find_cube_basic():
    assert find_red_cube(LatticeColoring.all_red(3), 3) is not None
    assert find_red_cube(LatticeColoring.all_blue(3), 1) is None
    assert find_red_cube(LatticeColoring.all_blue(3), 0) is None
    e = find_cube(LatticeColoring.all_blue(3), 2, BLUE)
    assert e is not None and verify_embedding(e, LatticeColoring.all_blue(3), BLUE)


def test_red_cube_needs_tail():
    # red = {∅, {1}, {3}, {1,3}} shifted by {2}: Q_2 only via a nonzero tail
    c = LatticeColoring.from_blue(3, [v for v in range(8) if not v & S(2)])
    e = find_red_cube(c, 2)
    assert e is not None and verify_embedding(e, c, RED)
    assert any(e.tail.values())


def test_red_diagonal_copy_of_q1():
    # the only red vertices are ∅ and {1,2}: a Q_1 copy, no Q_2
    c = LatticeColoring.from_blue(2, [S(1), S(2)])
    assert find_red_cube(c, 1) is not None
    assert find_red_cube(c, 2) is None


@pytest.mark.parametrize("N,counts", [
    (1, [2, 1]), (2, [4, 5, 1]), (3, [8, 19, 15, 1]), (4, [16, 65, 151, 74, 1])])
def test_cube_copy_counts(N, counts):
    assert [len(all_cube_copies(N, n)) for n in range(N + 1)] == counts
    assert [all_red_cubes_oracle(LatticeColoring.all_red(N), n) for n in range(N + 1)] == counts


def test_q1_copy_count_is_comparable_pairs():
    for N in range(1, 6):
        pairs = sum(1 for a, b in combinations(range(1 << N), 2) if comparable(a, b))
        assert len(all_cube_copies(N, 1)) == pairs


def test_canonicalize_copy():
    fam = [S(3), S(1, 3), S(2, 3), S(1, 2, 3, 4)]
    e = canonicalize_copy(fam, 4)
    assert sorted(e.images()) == sorted(fam)
    assert is_cube_copy(fam, 4)
    assert not is_cube_copy([S(1), S(2)], 2)
    assert not is_cube_copy([0, S(1), S(2)], 2)
    with pytest.raises(ValueError):
        canonicalize_copy([0, S(1), S(2), S(1)], 2)


def test_every_copy_canonicalizes():
    for n in range(4):
        for fam in all_cube_copies(4, n):
            e = canonicalize_copy(fam, 4)
            assert set(e.images()) == set(fam)
            assert verify_embedding(e, LatticeColoring.all_red(4), RED)


colorings = st.integers(0, 4).flatmap(
    lambda N: st.tuples(st.just(N), st.integers(0, 2 ** (2 ** N) - 1), st.integers(0, N)))


@settings(max_examples=120, deadline=None)
@given(colorings)
def test_find_red_cube_matches_oracle(arg):
    N, bits, n = arg
    c = LatticeColoring.from_int(N, bits)
    e = find_red_cube(c, n)
    assert (e is not None) == (all_red_cubes_oracle(c, n) > 0)
    if e is not None:
        assert verify_embedding(e, c, RED) and e.dim == n


def test_chain_or_cube_examples():
    all_red = LatticeColoring.all_red(3)
    out = chain_or_cube(all_red, S(1, 2), (2,))
    assert isinstance(out, CanonicalEmbedding)
    assert out.tail == {x: 0 for x in range(4)}

    all_blue = LatticeColoring.all_blue(3)
    out = chain_or_cube(all_blue, S(1, 2), (2,))
    assert isinstance(out, BlueChainWitness)
    assert verify_blue_chain(out, all_blue)


def test_chain_or_cube_rejects_bad_partition():
    c = LatticeColoring.all_red(3)
    with pytest.raises(ValueError):
        chain_or_cube(c, S(1), (2,))
    with pytest.raises(ValueError):
        chain_or_cube(c, S(1, 2), (1, 2))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 16 - 1), st.permutations([0, 1, 2, 3]), st.integers(1, 3))
def test_chain_or_cube_always_returns_a_verified_branch(bits, perm, k):
    c = LatticeColoring.from_int(4, bits)
    y_order = tuple(perm[:k])
    x_ground = 15 & ~sum(1 << y for y in y_order)
    out = chain_or_cube(c, x_ground, y_order)
    if isinstance(out, CanonicalEmbedding):
        assert verify_embedding(out, c, RED) and out.ground == x_ground
        assert all(is_subset(out.tail[x], sum(1 << y for y in y_order)) for x in out.tail)
    else:
        assert verify_blue_chain(out, c)
        assert len(out.vertices()) == k + 1


def test_blue_chain_verifier_rejects_red_vertex():
    c = LatticeColoring.from_blue(2, [0])
    w = BlueChainWitness((0, 0), (1,))
    assert not verify_blue_chain(w, c)
