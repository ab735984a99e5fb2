"""Ready-made posets: ``R_n``, ``P_n``, their rank-``k`` layers, ``S_n``, ``I_n``
and the two unions of the top layers.

Builders are cached; the returned posets are immutable and shared.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .poset import FinitePoset, build, build_from_keys
from .rank import _rank_array, bruhat_relation, truncation_key
from .rooks import (
    enumerate_all_partial_involutions, enumerate_all_rooks, enumerate_involutions,
    enumerate_partial_involutions, enumerate_rooks,
)

__all__ = [
    "rook_poset", "partial_involution_poset", "permutation_poset", "involution_poset",
    "rook_union_poset", "partial_involution_union_poset",
]


def _pinv_keys(elems) -> np.ndarray:
    # x <= y iff R(y) <= R(x), so negate
    return np.array([-_rank_array(x).ravel() for x in elems]).reshape(len(elems), -1)


def _rook_keys(elems) -> np.ndarray:
    return np.array([truncation_key(x) for x in elems], dtype=np.int64).reshape(len(elems), -1)


@lru_cache(maxsize=None)
def rook_poset(n: int, k: int | None = None) -> FinitePoset:
    """``R_n`` (or ``R_{n,k}``) under the rook order, zero rook at the bottom."""
    elems = enumerate_all_rooks(n) if k is None else enumerate_rooks(n, k)
    name = f"R_{n}" if k is None else f"R_{n},{k}"
    return build_from_keys(elems, _rook_keys(elems), name=name)


@lru_cache(maxsize=None)
def partial_involution_poset(n: int, k: int | None = None) -> FinitePoset:
    """``P_n`` (or ``P_{n,k}``), identity at the bottom."""
    elems = enumerate_all_partial_involutions(n) if k is None else enumerate_partial_involutions(n, k)
    name = f"P_{n}" if k is None else f"P_{n},{k}"
    return build_from_keys(elems, _pinv_keys(elems), name=name)


def _bruhat_matrix(n: int) -> tuple[tuple, np.ndarray]:
    perms, _, up = bruhat_relation(n)
    m = len(perms)
    rel = np.array([[bool(up[i] >> j & 1) for j in range(m)] for i in range(m)], dtype=bool)
    return perms, rel.reshape(m, m)


@lru_cache(maxsize=None)
def permutation_poset(n: int) -> FinitePoset:
    """``S_n`` in Bruhat order from the transposition-cover oracle."""
    perms, rel = _bruhat_matrix(n)
    return build(perms, relation=rel, name=f"S_{n}")


@lru_cache(maxsize=None)
def involution_poset(n: int) -> FinitePoset:
    """Involutions of ``S_n`` with the Bruhat order restricted from ``S_n``."""
    return permutation_poset(n).subposet(enumerate_involutions(n), name=f"I_{n}")


@lru_cache(maxsize=None)
def rook_union_poset(n: int) -> FinitePoset:
    """``R_{n,n-1} u R_{n,n}`` with the rook order."""
    elems = sorted(enumerate_rooks(n, n - 1) + enumerate_rooks(n, n))
    return build_from_keys(elems, _rook_keys(elems), name=f"R_{n},{n - 1}+R_{n},{n}")


@lru_cache(maxsize=None)
def partial_involution_union_poset(n: int) -> FinitePoset:
    """``P_{n,n-1} u P_{n,n}`` with the partial involution order."""
    elems = sorted(enumerate_partial_involutions(n, n - 1) + enumerate_partial_involutions(n, n))
    return build_from_keys(elems, _pinv_keys(elems), name=f"P_{n},{n - 1}+P_{n},{n}")
