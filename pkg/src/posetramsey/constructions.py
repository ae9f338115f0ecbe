"""Lower-bound colorings for R(A_t, Q_n), their certificates, and bound arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .chains import (chains_through_layer, max_antichain, min_chain_cover,
                     symmetric_chain_decomposition)
from .embeddings import CanonicalEmbedding, find_red_cube, verify_embedding
from .lattice import (MAX_DIM, RED, LatticeColoring, is_antichain, is_chain,
                      mono_height, sizes_array)

EPS = 1e-9
EXHAUSTIVE_MAX_DIM = 8
EXHAUSTIVE_MAX_CODIM = 3


def _cap(n_dim: int) -> None:
    if n_dim > MAX_DIM:
        raise ValueError(f"construction needs Q_{n_dim}, above the cap of {MAX_DIM}")


def construct_a2_lower(n: int) -> LatticeColoring:
    """``Q_{n+1}`` with only the bottom and the top vertex blue."""
    if n < 1:
        raise ValueError("n must be at least 1")
    N = n + 1
    _cap(N)
    return LatticeColoring.from_blue(N, [0, (1 << N) - 1])


def construct_a3_lower(n: int) -> LatticeColoring:
    """``Q_{n+2}`` with ``[i]`` and ``[N] \\ [i]`` blue for ``i = 1..N``.

    Prefixes are low-index prefixes; the suffix family includes the empty set
    (``i = N``) but not the full set, which is already the prefix ``[N]``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    N = n + 2
    _cap(N)
    full = (1 << N) - 1
    prefixes = [(1 << i) - 1 for i in range(1, N + 1)]
    suffixes = [full & ~((1 << i) - 1) for i in range(1, N + 1)]
    return LatticeColoring.from_blue(N, prefixes + suffixes)


def construct_layered_lower(n: int, r: int) -> LatticeColoring:
    """``Q_{n+2r+1}``: blue iff size at most ``r`` or at least ``n+r+1``."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    N = n + 2 * r + 1
    _cap(N)
    sizes = sizes_array(N)
    return LatticeColoring(N, (sizes <= r) | (sizes >= n + r + 1))


@dataclass(frozen=True)
class AntichainCheck:
    """Outcome of testing a coloring for a blue ``A_t``.

    ``certified`` means the blue vertices are covered by ``len(cover)`` <= t-1
    chains; otherwise ``antichain`` holds ``t`` pairwise incomparable blues.
    """

    t: int
    certified: bool
    cover: tuple[tuple[int, ...], ...] = ()
    antichain: frozenset[int] = frozenset()

    @property
    def width(self) -> int | None:
        return len(self.cover) if self.certified else None


def verify_no_blue_antichain(c: LatticeColoring, t: int,
                             cover: Sequence[Sequence[int]] | None = None) -> AntichainCheck:
    """Certify or refute "no blue antichain of size ``t``".

    A supplied ``cover`` is checked and used when it has at most ``t-1``
    chains; otherwise the minimum chain cover and its dual antichain are
    computed.
    """
    if t < 1:
        raise ValueError("t must be positive")
    blues = c.blue_vertices()
    if cover is not None:
        restricted = _restrict_cover(cover, set(blues))
        if restricted is not None and len(restricted) <= t - 1:
            return AntichainCheck(t, True, restricted)
    mcc = min_chain_cover(blues)
    if len(mcc) <= t - 1:
        return AntichainCheck(t, True, mcc.chains)
    anti = sorted(max_antichain(blues))
    assert len(anti) == len(mcc)
    witness = frozenset(anti[:t])
    assert is_antichain(witness)
    return AntichainCheck(t, False, antichain=witness)


def _restrict_cover(cover, blues: set[int]):
    chains = []
    covered = set()
    for ch in cover:
        kept = tuple(v for v in ch if v in blues)
        if not is_chain(list(ch)):
            return None
        if kept:
            chains.append(kept)
            covered.update(kept)
    if covered != blues:
        return None
    return tuple(chains)


def layered_cover(n: int, r: int) -> list[tuple[int, ...]]:
    """The symmetric chains of ``Q_{n+2r+1}`` through layer ``r``; they cover every blue vertex."""
    d = symmetric_chain_decomposition(n + 2 * r + 1)
    return chains_through_layer(d, r)


@dataclass(frozen=True)
class CubeCheck:
    """Outcome of testing a coloring for a red ``Q_n``.

    ``kind`` is ``"height"`` (red height below n+1), ``"exhaustive"`` (the
    canonical search found nothing) or ``"refuted"`` with ``embedding`` set.
    """

    n: int
    kind: str
    red_height: int
    embedding: CanonicalEmbedding | None = field(default=None, compare=False)

    @property
    def certified(self) -> bool:
        return self.kind != "refuted"


def verify_no_red_cube(c: LatticeColoring, n: int) -> CubeCheck:
    """Certify or refute "no red copy of ``Q_n``".

    The height argument is tried first; the exhaustive canonical search is
    allowed only for ``N <= 8`` or ``N - n <= 3``.
    """
    if not 0 <= n <= c.n:
        raise ValueError(f"n={n} outside 0..{c.n}")
    h = mono_height(c, RED)
    if h < n + 1:
        return CubeCheck(n, "height", h)
    if c.n > EXHAUSTIVE_MAX_DIM and c.n - n > EXHAUSTIVE_MAX_CODIM:
        raise ValueError(
            f"red height {h} >= {n + 1} and Q_{c.n} is too large for the exhaustive search")
    e = find_red_cube(c, n)
    if e is None:
        return CubeCheck(n, "exhaustive", h)
    assert verify_embedding(e, c, RED)
    return CubeCheck(n, "refuted", h, e)


def central_binomial(N: int) -> int:
    return comb(N, N // 2)


def sperner_number(t: int) -> int:
    """Least ``N`` with ``C(N, floor(N/2)) >= t``."""
    if t < 1:
        raise ValueError("t must be positive")
    N = 0
    while central_binomial(N) < t:
        N += 1
    return N


def habib_window(t: int) -> tuple[int, int]:
    """The two candidate values ``floor(log t + log log t / 2) + {1, 2}``, for ``t >= 2``."""
    if t < 2:
        raise ValueError("window defined for t >= 2")
    lt = math.log2(t)
    base = math.floor(lt + math.log2(lt) / 2 + EPS)
    return base + 1, base + 2


def best_layered_r(n: int, t: int) -> int:
    """Largest ``r >= 0`` with ``t > C(n+2r+1, r)``; -1 if even ``r = 0`` fails."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if t <= 1:
        return -1
    r = 0
    # C(n+2r+1, r) is increasing in r
    while t > comb(n + 2 * (r + 1) + 1, r + 1):
        r += 1
    return r


def thm_precondition(n: int, t: int) -> bool:
    """``n >= 2^(2^(t-2)) - 2``, the range where R(A_t, Q_n) = n + 3 is proved."""
    if t < 3:
        return True
    e = t - 2
    # avoid building a huge power: 2^(2^e) exceeds n + 2 once 2^e > bit length
    if 2 ** e > (n + 2).bit_length():
        return False
    return n >= 2 ** (2 ** e) - 2


@dataclass(frozen=True)
class BoundReport:
    n: int
    t: int
    lower: int
    lower_certificate: str
    upper: int
    corollary_lower: int | None
    exact: int | None

    def as_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "lower": self.lower,
                "lower_certificate": self.lower_certificate, "upper": self.upper,
                "corollary_lower": self.corollary_lower, "exact": self.exact}


def corollary_lower(n: int, t: int) -> int | None:
    """``ceil(n + 2 log t / (5 + log n))`` for ``n >= 3``, ``t >= 2``; else None."""
    if n < 3 or t < 2:
        return None
    val = n + 2 * math.log2(t) / (5 + math.log2(n))
    return math.ceil(val - EPS)


def ramsey_bounds(n: int, t: int) -> BoundReport:
    """Bounds on R(A_t, Q_n) from the constructions and the Sperner upper bound."""
    if n < 1 or t < 2:
        raise ValueError("need n >= 1 and t >= 2")
    upper = n + sperner_number(t)
    candidates = [(n + 2, "a2")]
    if t >= 3:
        # R(A_t, Q_n) is nondecreasing in t, so the A_3 coloring also escapes A_t
        candidates.append((n + 3, "a3"))
    r = best_layered_r(n, t)
    if r >= 1:
        candidates.append((n + 2 * r + 2, f"layered:r={r}"))
    lower, cert = max(candidates, key=lambda p: p[0])
    exact = None
    if lower == upper:
        exact = lower
    elif t >= 3 and thm_precondition(n, t):
        exact = n + 3
    if exact is not None and not lower <= exact <= upper:
        raise AssertionError(f"inconsistent bounds for n={n}, t={t}")
    if lower > upper:
        raise AssertionError(f"lower {lower} exceeds upper {upper} for n={n}, t={t}")
    return BoundReport(n, t, lower, cert, upper, corollary_lower(n, t), exact)


def blue_layer(c: LatticeColoring, i: int) -> list[int]:
    sizes = sizes_array(c.n)
    return np.flatnonzero(c.blue & (sizes == i)).tolist()


def antichain_is_blue(c: LatticeColoring, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return is_antichain(vs) and all(c.is_blue(v) for v in vs)
