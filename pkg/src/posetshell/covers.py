"""Covering relations of partial involutions under ``leq_partial_involutions``.

Three kinds of moves produce every cover ``x < y`` of ``P_n``:

* ``c``: ``x`` and ``y`` share their zero rows/columns and the compressed
  involutions differ by a covering transformation at a suitable rise;
* ``d``: a diagonal 1 at ``(i, i)`` slides down the diagonal to the first
  empty diagonal position, or leaves the matrix;
* ``r``: a symmetric off-diagonal pair is pushed right/down, down/right, or
  collapsed onto the diagonal.

``d`` and ``r`` moves that destroy a suitable rise of ``x`` are not covers.
The rank-control/D-invariant test :func:`is_cover_oracle` is independent of
all of this and is the reference the move generator is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rank import d_invariant, leq_partial_involutions
from .rooks import PartialInvolution, Rook, format_word

__all__ = [
    "RISE_TYPES", "SUITABLE_TYPES", "Rise", "CoverMove", "AmbiguousCoverError",
    "rises", "suitable_rises", "ct", "compress", "expand",
    "c_moves", "d_moves", "r_moves", "all_moves", "covers_of",
    "is_cover_oracle", "classify_cover",
]

RISE_TYPES = ("ff", "fe", "ef", "ee_crossing", "ee_noncrossing",
              "ed", "fd", "df", "dd", "de")
SUITABLE_TYPES = frozenset({"ff", "fe", "ef", "ee_crossing", "ee_noncrossing", "ed"})


class AmbiguousCoverError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Rise:
    i: int
    j: int
    type: str
    free: bool

    @property
    def suitable(self) -> bool:
        return self.free and self.type in SUITABLE_TYPES


@dataclass(frozen=True)
class CoverMove:
    """How ``y`` arises from ``x`` for a cover ``x < y``.

    ``label`` is the edge label; ``variant`` is the rise type for ``c``
    moves, ``"slide"``/``"push-out"`` for ``d`` moves, and one of
    ``"right-down"``, ``"down-right"``, ``"collapse-to-diagonal"``,
    ``"push-out"`` for ``r`` moves.  ``target`` is the diagonal index a
    ``d`` move lands on (``None`` if pushed out).
    """

    kind: str
    label: tuple[int, int]
    variant: str
    target: int | None = None

    def to_json(self) -> dict:
        i, j = self.label
        if self.kind == "c":
            params = {"i": i, "j": j, "type": self.variant}
        elif self.kind == "d":
            params = {"i": i, "target": self.target}
        else:
            params = {"source_col": i, "target_col": j, "variant": self.variant}
        return {"kind": self.kind, "params": params}


def _kind(sigma: Sequence[int], i: int) -> str:
    a = sigma[i - 1]
    return "f" if a == i else "e" if a > i else "d"


def rises(sigma: Sequence[int]) -> list[Rise]:
    """All rises ``(i, j)`` among nonzero positions, sorted lexicographically."""
    supp = [i for i, a in enumerate(sigma, 1) if a]
    out = []
    for p, i in enumerate(supp):
        for j in supp[p + 1:]:
            si, sj = sigma[i - 1], sigma[j - 1]
            if si >= sj:
                continue
            free = not any(si < sigma[k - 1] < sj for k in range(i + 1, j) if sigma[k - 1])
            t = _kind(sigma, i) + _kind(sigma, j)
            if t == "ee":
                t = "ee_crossing" if si < j else "ee_noncrossing"
            out.append(Rise(i, j, t, free))
    return out


def suitable_rises(sigma: Sequence[int]) -> list[Rise]:
    """Free rises of type ff, fe, ef, ee or ed, in lexicographic order.

    Accepts partial involutions too; zero positions are skipped, which is the
    same as working on the compressed involution with original indices.
    """
    if not Rook(sigma).is_partial_involution():
        raise ValueError(f"{format_word(sigma)} is not an involution")
    return [r for r in rises(sigma) if r.suitable]


def ct(sigma: Sequence[int], rise: Rise | tuple[int, int]) -> PartialInvolution:
    """Covering transformation of an involution at a suitable rise.

    In arc language (``a -- b`` is a 2-cycle):

    * ff: ``i -- j``
    * fe: ``i -- s(j)``, ``j`` fixed
    * ef: ``i -- j``, ``s(i)`` fixed
    * ee non-crossing (``i < j < s(i) < s(j)``): ``i -- s(j)``, ``j -- s(i)``
    * ee crossing (``i < s(i) < j < s(j)``): ``i -- s(j)``, ``s(i)`` and ``j`` fixed
    * ed (``i < s(i) < s(j) < j``): ``i -- s(j)``, ``s(i) -- j``
    """
    i, j = (rise.i, rise.j) if isinstance(rise, Rise) else rise
    found = {(r.i, r.j): r for r in suitable_rises(sigma)}
    if (i, j) not in found:
        raise ValueError(f"({i},{j}) is not a suitable rise of {format_word(sigma)}")
    t = found[i, j].type
    s = list(sigma)
    out = list(sigma)

    def pair(a: int, b: int):
        out[a - 1], out[b - 1] = b, a

    def fix(a: int):
        out[a - 1] = a

    si, sj = s[i - 1], s[j - 1]
    if t == "ff":
        pair(i, j)
    elif t == "fe":
        pair(i, sj)
        fix(j)
    elif t == "ef":
        pair(i, j)
        fix(si)
    elif t == "ee_noncrossing":
        pair(i, sj)
        pair(j, si)
    elif t == "ee_crossing":
        pair(i, sj)
        fix(si)
        fix(j)
    else:  # ed
        pair(i, sj)
        pair(si, j)
    return PartialInvolution(out)


def compress(x: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Delete the zero rows/columns; returns ``(involution, support)``."""
    supp = tuple(i for i, a in enumerate(x, 1) if a)
    pos = {p: k for k, p in enumerate(supp, 1)}
    return tuple(pos[x[p - 1]] for p in supp), supp


def expand(sigma: Sequence[int], support: Sequence[int], n: int) -> PartialInvolution:
    out = [0] * n
    for k, p in enumerate(support):
        out[p - 1] = support[sigma[k] - 1]
    return PartialInvolution(out)


def c_moves(x: Sequence[int]) -> list[tuple[CoverMove, PartialInvolution]]:
    """Covers of ``x`` with the same zero rows, via the compressed involution.

    Labels use the original (uncompressed) indices.
    """
    sigma, supp = compress(x)
    out = []
    for r in suitable_rises(sigma):
        y = expand(ct(sigma, r), supp, len(x))
        out.append((CoverMove("c", (supp[r.i - 1], supp[r.j - 1]), r.type), y))
    return out


def _first_empty(x: Sequence[int], after: int) -> int | None:
    """Smallest ``k > after`` whose row and column are empty in ``x``."""
    return next((k for k in range(after + 1, len(x) + 1) if not x[k - 1]), None)


def d_moves(x: Sequence[int]) -> list[tuple[CoverMove, PartialInvolution]]:
    x = PartialInvolution(x)
    suitable = suitable_rises(x)
    out = []
    for i in range(1, len(x) + 1):
        if x[i - 1] != i:
            continue
        k = _first_empty(x, i)
        limit = k if k is not None else len(x) + 1
        # sliding past a suitable rise (i, m) destroys it
        if any(r.i == i and r.j < limit for r in suitable):
            continue
        y = list(x)
        y[i - 1] = 0
        if k is not None:
            y[k - 1] = k
        out.append((CoverMove("d", (i, i), "slide" if k else "push-out", k), PartialInvolution(y)))
    return out


def r_moves(x: Sequence[int]) -> list[tuple[CoverMove, PartialInvolution]]:
    """Moves of a symmetric pair ``{i, j}``, ``i < j`` (1s at ``(i, j)`` and ``(j, i)``).

    * right-down: ``j`` moves to the first empty ``k > j``; label ``(j, k)``;
    * down-right: ``i`` moves to the first empty ``k``, ``i < k < j``; label ``(i, k)``;
    * collapse (only when no empty index lies between ``i`` and ``j``): the
      pair becomes the diagonal 1 at ``(j, j)`` plus one at the first empty
      diagonal position below, or that second 1 is pushed out; label ``(i, j)``.
    """
    x = PartialInvolution(x)
    n = len(x)
    suitable = suitable_rises(x)
    out = []
    for i in range(1, n + 1):
        j = x[i - 1]
        if j <= i:
            continue
        k = _first_empty(x, j)
        if k is not None:
            blocked = any(r.i == j and r.j < k for r in suitable) or any(
                r.i == i and j < x[r.j - 1] < k for r in suitable)
            if not blocked:
                y = list(x)
                y[j - 1], y[i - 1], y[k - 1] = 0, k, i
                out.append((CoverMove("r", (j, k), "right-down"), PartialInvolution(y)))
        k2 = _first_empty(x, i)
        if k2 is not None and k2 < j:
            if not any(r.i == i and r.j < k2 for r in suitable):
                y = list(x)
                y[i - 1], y[k2 - 1], y[j - 1] = 0, j, k2
                out.append((CoverMove("r", (i, k2), "down-right"), PartialInvolution(y)))
        else:
            limit = k if k is not None else n + 1
            if not any(r.i == i and r.j < limit for r in suitable):
                y = list(x)
                y[i - 1], y[j - 1] = 0, j
                if k is not None:
                    y[k - 1] = k
                variant = "collapse-to-diagonal" if k is not None else "push-out"
                out.append((CoverMove("r", (i, j), variant), PartialInvolution(y)))
    return out


def all_moves(x: Sequence[int]) -> list[tuple[CoverMove, PartialInvolution]]:
    return c_moves(x) + d_moves(x) + r_moves(x)


def covers_of(x: Sequence[int]) -> set[PartialInvolution]:
    """Everything covering ``x`` in ``(P_n, leq_partial_involutions)``."""
    return {y for _, y in all_moves(x)}


def is_cover_oracle(x: Sequence[int], y: Sequence[int]) -> bool:
    """``y`` covers ``x``: ``R(y) <= R(x)`` entrywise and ``D(y) = D(x) + 1``."""
    if len(x) != len(y):
        raise ValueError("partial involutions of different sizes")
    return leq_partial_involutions(x, y) and d_invariant(y) == d_invariant(x) + 1


def classify_cover(x: Sequence[int], y: Sequence[int]) -> CoverMove:
    """The unique move taking ``x`` to its cover ``y``."""
    y = Rook(y)
    found = [m for m, z in all_moves(x) if z == y]
    if not found:
        raise ValueError(f"{format_word(y)} does not cover {format_word(x)}")
    if len(found) > 1:
        raise AmbiguousCoverError(f"{format_word(x)} -> {format_word(y)}: {found}")
    return found[0]
