"""Rank-control matrices and the order relations on rooks.

Two direction conventions are in use and each comparator names its own:

* rooks ``R_n``: Bruhat-Chevalley-Renner order, zero rook at the bottom
  (:func:`leq_rooks`, :func:`leq_perms`);
* partial involutions ``P_n``: the opposite of the closure order, identity at
  the bottom and zero rook at the top (:func:`leq_partial_involutions`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .rooks import Rook, enumerate_permutations

__all__ = [
    "RankControlMatrix", "rank_control", "leq_entrywise", "d_invariant",
    "sort_desc", "leq_containment", "truncation_key", "leq_rooks", "leq_perms",
    "leq_partial_involutions", "inversions", "bruhat_perm_oracle",
    "bruhat_relation", "compare_orders_on_partial_involutions",
]

BRUHAT_ORACLE_MAX_N = 6


@dataclass(frozen=True)
class RankControlMatrix:
    """``r[k][l]`` = rank of the upper-left ``k x l`` block, ``0 <= k, l <= n``.

    Row 0 and column 0 hold the zero border explicitly.
    """

    bordered: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.bordered) - 1

    def __getitem__(self, kl: tuple[int, int]) -> int:
        k, l = kl
        return self.bordered[k][l]

    def rows(self) -> list[list[int]]:
        """The ``n x n`` matrix without the border."""
        return [list(row[1:]) for row in self.bordered[1:]]

    def to_json(self) -> list[list[int]]:
        return self.rows()

    def __str__(self) -> str:
        rows = self.rows()
        if not rows:
            return "()"
        width = max(len(str(v)) for row in rows for v in row)
        lines = [" ".join(str(v).rjust(width) for v in row) for row in rows]
        if len(lines) == 1:
            return f"( {lines[0]} )"
        out = []
        for i, line in enumerate(lines):
            left, right = ("/", "\\") if i == 0 else ("\\", "/") if i == len(lines) - 1 else ("|", "|")
            out.append(f"{left} {line} {right}")
        return "\n".join(out)


def _rank_array(x: Sequence[int]) -> np.ndarray:
    n = len(x)
    m = np.zeros((n + 1, n + 1), dtype=np.int64)
    for j, a in enumerate(x, 1):
        if a:
            m[a, j] = 1
    return m.cumsum(axis=0).cumsum(axis=1)


def rank_control(x: Sequence[int]) -> RankControlMatrix:
    """Count of 1s of ``x`` in each upper-left block; exact integer arithmetic."""
    arr = _rank_array(Rook(x))
    return RankControlMatrix(tuple(tuple(int(v) for v in row) for row in arr))


def leq_entrywise(a: RankControlMatrix, b: RankControlMatrix) -> bool:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return all(u <= v for ra, rb in zip(a.bordered, b.bordered) for u, v in zip(ra, rb))


def d_invariant(x: Sequence[int]) -> int:
    """``#{(i, j) : 1 <= i <= j <= n, r_ij = r_{i-1, j-1}}``."""
    r = rank_control(x)
    n = r.n
    return sum(1 for i in range(1, n + 1) for j in range(i, n + 1) if r[i, j] == r[i - 1, j - 1])


def sort_desc(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(a, reverse=True))


def leq_containment(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise comparison after sorting both sequences non-increasingly."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(u <= v for u, v in zip(sort_desc(a), sort_desc(b)))


def truncation_key(x: Sequence[int], upto: int | None = None) -> tuple[int, ...]:
    """Concatenated sorted truncations ``x(1)~, ..., x(upto)~``.

    ``leq_rooks(x, y)`` holds exactly when ``truncation_key(x)`` is
    componentwise below ``truncation_key(y)``; poset builders use this to
    vectorize the comparison.
    """
    upto = len(x) if upto is None else upto
    return tuple(itertools.chain.from_iterable(sort_desc(x[:k]) for k in range(1, upto + 1)))


def leq_rooks(x: Sequence[int], y: Sequence[int]) -> bool:
    """Bruhat-Chevalley-Renner order on ``R_n`` (zero rook is the minimum)."""
    if len(x) != len(y):
        raise ValueError("rooks of different sizes")
    return all(leq_containment(x[:k], y[:k]) for k in range(1, len(x) + 1))


def leq_perms(x: Sequence[int], y: Sequence[int]) -> bool:
    """Bruhat order on ``S_n`` by truncations ``k = 1, ..., n - 1`` only."""
    x, y = Rook(x), Rook(y)
    if len(x) != len(y):
        raise ValueError("permutations of different sizes")
    if not (x.is_permutation() and y.is_permutation()):
        raise ValueError("leq_perms needs two permutations")
    return all(leq_containment(x[:k], y[:k]) for k in range(1, len(x)))


def leq_partial_involutions(x: Sequence[int], y: Sequence[int]) -> bool:
    """Order on ``P_n`` with the identity at the bottom.

    ``x <= y`` iff ``R(y) <= R(x)`` entrywise, so larger elements have
    smaller rank-control matrices.
    """
    if len(x) != len(y):
        raise ValueError("partial involutions of different sizes")
    return bool(np.all(_rank_array(y) <= _rank_array(x)))


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


@lru_cache(maxsize=None)
def bruhat_relation(n: int) -> tuple[tuple[Rook, ...], dict[Rook, int], tuple[int, ...]]:
    """Bruhat order on ``S_n`` as the transitive closure of transposition covers.

    A cover ``w < wt`` is a transposition of two positions that raises the
    inversion count by exactly one.  Returns ``(perms, index, up)`` where
    ``up[i]`` is a bitset of everything above ``perms[i]`` (itself included).
    """
    if not 0 <= n <= BRUHAT_ORACLE_MAX_N:
        raise ValueError(f"Bruhat oracle is limited to n <= {BRUHAT_ORACLE_MAX_N}")
    perms = tuple(enumerate_permutations(n))
    index = {w: i for i, w in enumerate(perms)}
    length = [inversions(w) for w in perms]
    covers: list[list[int]] = [[] for _ in perms]
    for i, w in enumerate(perms):
        for a, b in itertools.combinations(range(n), 2):
            v = list(w)
            v[a], v[b] = v[b], v[a]
            t = index[Rook(v)]
            if length[t] == length[i] + 1:
                covers[i].append(t)
    up = [0] * len(perms)
    for i in sorted(range(len(perms)), key=lambda i: -length[i]):
        mask = 1 << i
        for t in covers[i]:
            mask |= up[t]
        up[i] = mask
    return perms, index, tuple(up)


def bruhat_perm_oracle(x: Sequence[int], y: Sequence[int]) -> bool:
    """Classical Bruhat comparison ``x <= y`` on ``S_n``, ``n <= 6``."""
    if len(x) != len(y):
        raise ValueError("permutations of different sizes")
    _, index, up = bruhat_relation(len(x))
    return bool(up[index[Rook(x)]] >> index[Rook(y)] & 1)


def compare_orders_on_partial_involutions(n: int) -> dict:
    """Tally how ``leq_rooks`` and ``leq_partial_involutions`` relate on ``P_n``.

    Informational only; no relationship between the two orders is asserted.
    """
    from .rooks import enumerate_all_partial_involutions

    elems = enumerate_all_partial_involutions(n)
    tally = {"both": 0, "rooks_only": 0, "pinv_only": 0, "reversed": 0, "neither": 0}
    for x, y in itertools.permutations(elems, 2):
        a, b = leq_rooks(x, y), leq_partial_involutions(x, y)
        if a and b:
            tally["both"] += 1
        elif a and leq_partial_involutions(y, x):
            tally["reversed"] += 1
        elif a:
            tally["rooks_only"] += 1
        elif b:
            tally["pinv_only"] += 1
        else:
            tally["neither"] += 1
    return {"n": n, "ordered_pairs": len(elems) * (len(elems) - 1), **tally}
