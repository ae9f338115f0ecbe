"""Constructive extraction of a red Q_n from a blue-A_t-free coloring of Q_{n+3}.

Stages: cover the blue vertices by at most t-1 chains, extend each chain to
a full chain and read off its linear ordering, find three elements x, y, z
with y between x and z in every ordering, then run the chain-or-cube
dichotomy with the remaining elements as ground and y-order (x, z, y).  A
blue vertex containing x and z must contain y, so the blue branch cannot
occur and a red copy comes out.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .chains import extend_to_full_chain, full_chain_to_ordering
from .constructions import verify_no_blue_antichain
from .embeddings import BlueChainWitness, CanonicalEmbedding, chain_or_cube, verify_embedding
from .lattice import RED, LatticeColoring, full_mask
from .sequences import TriplePreconditionWarning, consistent_triple


class PipelineError(RuntimeError):
    pass


class BlueAntichainPresent(PipelineError):
    def __init__(self, antichain):
        super().__init__(f"coloring contains a blue antichain: {sorted(antichain)}")
        self.antichain = frozenset(antichain)


class PreconditionUnmet(PipelineError):
    pass


class PipelineContradiction(PipelineError):
    """The blue-chain branch fired; some stage is wrong, not the theorem."""

    def __init__(self, vertex: int, witness: BlueChainWitness):
        super().__init__(f"blue vertex {vertex} contains x and z but not y")
        self.vertex = vertex
        self.witness = witness


def min_dimension_for(t: int) -> int:
    """``2^(2^(t-2)) + 1``: ground size the triple extraction needs for t-1 orderings."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return 2 ** (2 ** (t - 2)) + 1


@dataclass(frozen=True)
class PipelineTrace:
    t: int
    n: int
    chain_cover: tuple[tuple[int, ...], ...]
    full_chains: tuple[tuple[int, ...], ...]
    orderings: tuple[tuple[int, ...], ...]
    triple: tuple[int, int, int]
    x_ground: int
    y_order: tuple[int, int, int]
    result: CanonicalEmbedding
    precondition_met: bool = True


def theorem2_pipeline(c: LatticeColoring, t: int, allow_small: bool = False) -> PipelineTrace:
    """Run every stage on ``c`` (a coloring of ``Q_{n+3}``) and return the trace.

    Raises ``BlueAntichainPresent`` if ``c`` has a blue ``A_t``, and
    ``PreconditionUnmet`` if ``n + 3 < 2^(2^(t-2)) + 1`` unless
    ``allow_small``; then the run proceeds and may fail in the triple stage.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    N = c.n
    n = N - 3
    if n < 0:
        raise ValueError("coloring must live on Q_{n+3} with n >= 0")
    met = N >= min_dimension_for(t)
    if not met and not allow_small:
        raise PreconditionUnmet(
            f"Q_{N} is below the 2^(2^(t-2)) + 1 = {min_dimension_for(t)} elements needed for t={t}")

    # the cover is always rederived here, never taken from the caller
    check = verify_no_blue_antichain(c, t)
    if not check.certified:
        raise BlueAntichainPresent(check.antichain)
    cover = tuple(check.cover)

    full_chains = tuple(extend_to_full_chain(ch, N) for ch in cover)
    orderings = tuple(full_chain_to_ordering(ch) for ch in full_chains)
    if orderings:
        with warnings.catch_warnings():
            if met:
                warnings.simplefilter("error", TriplePreconditionWarning)
            else:
                warnings.simplefilter("ignore", TriplePreconditionWarning)
            triple = consistent_triple(orderings)
    else:
        triple = (0, 1, 2)
    x, y, z = triple

    y_order = (x, z, y)
    x_ground = full_mask(N) & ~((1 << x) | (1 << y) | (1 << z))
    out = chain_or_cube(c, x_ground, y_order)
    if isinstance(out, BlueChainWitness):
        raise PipelineContradiction(out.vertices()[2], out)
    if not verify_embedding(out, c, RED):
        raise AssertionError("pipeline produced an unverified embedding")
    return PipelineTrace(t, n, cover, full_chains, orderings, triple, x_ground,
                         y_order, out, met)


def random_chain_coloring(N: int, chains: int, seed: int, density: float = 0.5) -> LatticeColoring:
    """Blue vertices drawn from ``chains`` random full chains of ``Q_N``.

    Each chain is a uniformly random ordering of the ground set; each of its
    vertices is blue independently with probability ``density``.  Seeded with
    ``numpy.random.default_rng(seed)``.
    """
    rng = np.random.default_rng(seed)
    blue = set()
    for _ in range(chains):
        order = rng.permutation(N)
        keep = rng.random(N + 1) < density
        v = 0
        if keep[0]:
            blue.add(v)
        for i, a in enumerate(order, start=1):
            v |= 1 << int(a)
            if keep[i]:
                blue.add(v)
    return LatticeColoring.from_blue(N, blue)
