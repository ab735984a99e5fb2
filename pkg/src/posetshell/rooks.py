"""Rooks and partial involutions in one-line notation.

A rook of size ``n`` is an ``n x n`` 0/1 matrix with at most one 1 in each row
and column.  It is stored as the word ``(a_1, ..., a_n)`` where ``a_j`` is the
row of the 1 in column ``j``, or 0 when column ``j`` is empty.  Rows and
columns are 1-based throughout the package.

>>> x = Rook.parse("(3,0,4,0)")
>>> x.rank, x.is_partial_involution()
(2, False)
>>> from_matrix(x.to_matrix()) == x
True
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Rook", "PartialInvolution", "IndexPartition",
    "from_matrix", "parse_word", "format_word",
    "enumerate_rooks", "enumerate_all_rooks",
    "enumerate_partial_involutions", "enumerate_all_partial_involutions",
    "enumerate_permutations", "enumerate_involutions",
    "rook_count_formula", "involution_count", "recurrence_report",
    "union_cardinalities", "index_partition",
]

_WORD_RE = re.compile(r"^\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*,?\s*\)?\s*$")


class Rook(tuple):
    """A partial permutation matrix in one-line notation (immutable)."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(a) for a in word)
        n = len(word)
        seen = set()
        for a in word:
            if not 0 <= a <= n:
                raise ValueError(f"entry {a} out of range for a rook of size {n}")
            if a and a in seen:
                raise ValueError(f"row {a} used twice in {format_word(word)}")
            seen.add(a)
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> "Rook":
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def rank(self) -> int:
        """Number of nonzero entries (the ``k`` of ``R_{n,k}``)."""
        return sum(1 for a in self if a)

    @property
    def support(self) -> tuple[int, ...]:
        """Columns holding a 1, in increasing order."""
        return tuple(j for j, a in enumerate(self, 1) if a)

    def is_permutation(self) -> bool:
        return self.rank == len(self)

    def is_partial_involution(self) -> bool:
        return all(self[a - 1] == j for j, a in enumerate(self, 1) if a)

    def to_matrix(self) -> list[list[int]]:
        n = len(self)
        m = [[0] * n for _ in range(n)]
        for j, a in enumerate(self, 1):
            if a:
                m[a - 1][j - 1] = 1
        return m

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{format_word(self)}"


class PartialInvolution(Rook):
    """A symmetric rook: ``a_i = j != 0`` implies ``a_j = i``."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        self = super().__new__(cls, word)
        if not self.is_partial_involution():
            raise ValueError(f"{format_word(self)} is not symmetric")
        return self


@dataclass(frozen=True)
class IndexPartition:
    fixed: frozenset[int]
    exceedance: frozenset[int]
    defect: frozenset[int]


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"(3,0,4,0)"``; whitespace and the parentheses are optional."""
    m = _WORD_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse one-line word {text!r}")
    body = m.group(1)
    if body is None:
        return ()
    return tuple(int(tok) for tok in body.split(","))


def format_word(word: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in word) + ")"


def from_matrix(m: Sequence[Sequence[int]]) -> Rook:
    """One-line word of a square 0/1 matrix; rejects non-rook matrices."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    word = [0] * n
    for i, row in enumerate(m, 1):
        ones = [j for j, v in enumerate(row, 1) if v]
        if any(v not in (0, 1) for v in row):
            raise ValueError(f"row {i} has entries other than 0/1")
        if len(ones) > 1:
            raise ValueError(f"row {i} has more than one 1")
        for j in ones:
            if word[j - 1]:
                raise ValueError(f"column {j} has more than one 1")
            word[j - 1] = i
    return Rook(word)


@lru_cache(maxsize=None)
def _rooks(n: int, k: int) -> tuple[Rook, ...]:
    out = []
    for cols in itertools.combinations(range(n), k):
        for rows in itertools.permutations(range(1, n + 1), k):
            word = [0] * n
            for c, r in zip(cols, rows):
                word[c] = r
            out.append(Rook(word))
    return tuple(sorted(out))


def enumerate_rooks(n: int, k: int) -> list[Rook]:
    """All rooks of size ``n`` with ``k`` ones, in lexicographic word order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return list(_rooks(n, k))


def enumerate_all_rooks(n: int) -> list[Rook]:
    return sorted(x for k in range(n + 1) for x in _rooks(n, k))


def enumerate_partial_involutions(n: int, k: int) -> list[PartialInvolution]:
    return [PartialInvolution(x) for x in enumerate_rooks(n, k) if x.is_partial_involution()]


def enumerate_all_partial_involutions(n: int) -> list[PartialInvolution]:
    return sorted(x for k in range(n + 1) for x in enumerate_partial_involutions(n, k))


def enumerate_permutations(n: int) -> list[Rook]:
    return enumerate_rooks(n, n)


def enumerate_involutions(n: int) -> list[PartialInvolution]:
    return enumerate_partial_involutions(n, n)


def rook_count_formula(n: int, k: int) -> int:
    """``k! * C(n, k)^2``."""
    return math.factorial(k) * math.comb(n, k) ** 2


def involution_count(n: int) -> int:
    """Number of involutions in ``S_n`` by enumeration; 1 for ``n = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return len(enumerate_involutions(n))


def recurrence_report(max_n: int) -> dict:
    """Check ``t(n+1) = t(n) + c(n) t(n-1)`` for ``c(n) = n`` and ``c(n) = n - 1``.

    Counts come from enumeration.  The ``n - 1`` coefficient is the variant
    that appears in print; it is checked and reported, never relied on.
    """
    counts = [involution_count(m) for m in range(max_n + 2)]
    rows = []
    for n in range(1, max_n + 1):
        rows.append({
            "n": n,
            "t_next": counts[n + 1],
            "coef_n": counts[n] + n * counts[n - 1],
            "coef_n_minus_1": counts[n] + (n - 1) * counts[n - 1],
        })
    return {
        "counts": counts,
        "rows": rows,
        "coef_n_holds": all(r["coef_n"] == r["t_next"] for r in rows),
        "coef_n_minus_1_failures": [r["n"] for r in rows if r["coef_n_minus_1"] != r["t_next"]],
    }


def union_cardinalities(n: int) -> tuple[int, int]:
    """``(|R_{n,n-1} u R_{n,n}|, |P_{n,n-1} u P_{n,n}|)`` by enumeration."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rooks = len(enumerate_rooks(n, n - 1)) + len(enumerate_rooks(n, n))
    pinvs = len(enumerate_partial_involutions(n, n - 1)) + len(enumerate_partial_involutions(n, n))
    return rooks, pinvs


def index_partition(sigma: Sequence[int]) -> IndexPartition:
    sigma = Rook(sigma)
    if not sigma.is_permutation():
        raise ValueError(f"{sigma} is not a permutation")
    fixed, exc, dfc = set(), set(), set()
    for i, a in enumerate(sigma, 1):
        (fixed if a == i else exc if a > i else dfc).add(i)
    return IndexPartition(frozenset(fixed), frozenset(exc), frozenset(dfc))
