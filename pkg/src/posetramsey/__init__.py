"""Poset Ramsey numbers of antichains versus Boolean lattices, R(A_t, Q_n).

Bitmask Boolean lattices and colorings, chain decompositions and Dilworth
covers, monotone-subsequence tools, canonical cube embeddings, the explicit
lower-bound colorings, exhaustive small-case search, and the constructive
red-cube extraction for blue-antichain-free colorings of Q_{n+3}.
"""

from .chains import (ChainCover, ChainDecomposition, chains_through_layer, extend_to_full_chain,
                     full_chain_to_ordering, max_antichain, min_chain_cover,
                     symmetric_chain_decomposition)
from .constructions import (BoundReport, best_layered_r, construct_a2_lower, construct_a3_lower,
                            construct_layered_lower, layered_cover, ramsey_bounds, sperner_number,
                            verify_no_blue_antichain, verify_no_red_cube)
from .embeddings import (BlueChainWitness, CanonicalEmbedding, all_red_cubes_oracle,
                         canonicalize_copy, chain_or_cube, find_red_cube, verify_embedding)
from .lattice import BLUE, RED, LatticeColoring, comparable, layer, mono_height, random_coloring
from .pipeline import PipelineTrace, random_chain_coloring, theorem2_pipeline
from .search import (BudgetExhausted, RamseyWitness, canonical_under_symmetry,
                     has_escaping_coloring, ramsey_exact)
from .sequences import (common_undirected_subsequence, consistent_triple,
                        is_undirected_subsequence, longest_monotone_subsequence)

__version__ = "0.1.0"
