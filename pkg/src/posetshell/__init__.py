"""Rook posets, partial involutions and machine checks of their shellability,
Eulerian layers and embeddings into symmetric groups."""

from __future__ import annotations

from .covers import CoverMove, Rise, classify_cover, covers_of, ct, is_cover_oracle, suitable_rises
from .embeddings import (
    PosetIsomorphismReport, eulerian_counterexample, phi, psi, transport_labeling,
    verify_isomorphism,
)
from .families import (
    involution_poset, partial_involution_poset, partial_involution_union_poset,
    permutation_poset, rook_poset, rook_union_poset,
)
from .labeling import decreasing_chain_mobius, jordan_holder, label, verify_el
from .poset import (
    FinitePoset, Interval, PosetError, build, interval, is_eulerian, is_graded,
    maximal_chains, mobius, order_complex_facets, verify_shelling,
)
from .rank import (
    RankControlMatrix, bruhat_perm_oracle, d_invariant, leq_containment, leq_entrywise,
    leq_partial_involutions, leq_perms, leq_rooks, rank_control, sort_desc,
)
from .rooks import (
    IndexPartition, PartialInvolution, Rook, enumerate_partial_involutions, enumerate_rooks,
    from_matrix, involution_count, parse_word,
)

__version__ = "0.1.0"
