"""Edge labels on covers of ``P_n``, label words of chains, and an exhaustive
EL-shellability checker for arbitrary labeled finite posets.

Labels are pairs ``(i, j)`` compared lexicographically (plain tuple order).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .covers import classify_cover, is_cover_oracle
from .poset import FinitePoset, PosetError, _bits, _chains_idx, _fmt
from .rooks import format_word

__all__ = [
    "Label", "label", "jordan_holder", "IntervalRecord", "ELReport",
    "edge_labels", "verify_el", "decreasing_chain_mobius",
]

Label = tuple[int, int]
Labeling = Callable[[Any, Any], Any]


def label(x: Sequence[int], y: Sequence[int]) -> Label:
    """Label of the cover ``x < y`` of ``P_n``.

    c-covers carry their rise ``(i, j)`` in uncompressed indices, d-covers
    ``(i, i)``, r-covers ``(i, j)`` where ``i`` is the column of the first 1
    pushed right and ``j`` is where it lands.
    """
    if not is_cover_oracle(x, y):
        raise ValueError(f"{format_word(y)} does not cover {format_word(x)}")
    return classify_cover(x, y).label


def jordan_holder(chain: Sequence, labeling: Labeling = label) -> tuple:
    """Label word of a saturated chain; ``labeling`` rejects non-covers."""
    return tuple(labeling(a, b) for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class IntervalRecord:
    bottom: Any
    top: Any
    increasing_count: int  # capped at 2
    lex_first_increasing: bool

    @property
    def ok(self) -> bool:
        return self.increasing_count == 1 and self.lex_first_increasing

    def to_json(self) -> dict:
        return {"bottom": _fmt(self.bottom), "top": _fmt(self.top),
                "increasing_count": self.increasing_count,
                "lex_first_increasing": self.lex_first_increasing}


@dataclass(frozen=True)
class ELReport:
    intervals: int
    records: tuple[IntervalRecord, ...] = field(repr=False)

    @property
    def violations(self) -> tuple[IntervalRecord, ...]:
        return tuple(r for r in self.records if not r.ok)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def edge_labels(p: FinitePoset, labeling: Labeling) -> dict[tuple[int, int], Any]:
    """Label of every Hasse edge, keyed by index pair."""
    return {(i, j): labeling(p.elements[i], p.elements[j]) for i, j in p.hasse_edges}


def _check_bottom(p: FinitePoset, labels: dict, i: int) -> list[tuple[int, int, int, bool]]:
    out = []
    for j in _bits(p.up[i]):
        if j == i:
            continue
        inside = p.interval_mask(i, j)
        # lexicographically least word from each element up to j
        best: dict[int, tuple] = {j: ()}

        def least(k: int) -> tuple:
            if k not in best:
                best[k] = min((labels[k, t],) + least(t)
                              for t in p.upper_covers[k] if inside >> t & 1)
            return best[k]

        lexmin = least(i)
        count, found = 0, None
        stack = [(i, None, ())]
        while stack and count < 2:
            k, last, word = stack.pop()
            if k == j:
                count += 1
                found = word
                continue
            for t in p.upper_covers[k]:
                if inside >> t & 1:
                    lab = labels[k, t]
                    if last is None or last <= lab:
                        stack.append((t, lab, word + (lab,)))
        out.append((i, j, count, count >= 1 and found == lexmin))
    return out


def _worker(args):
    p, labels, bottoms = args
    return [rec for i in bottoms for rec in _check_bottom(p, labels, i)]


def verify_el(p: FinitePoset, labeling: Labeling = label, *, jobs: int = 1) -> ELReport:
    """Check every interval ``[x, y]``, ``x < y``, for a unique weakly
    increasing maximal chain whose word is the lexicographic minimum.

    Increasing chains are counted up to 2.  Records come back sorted by
    ``(bottom index, top index)`` whatever ``jobs`` is.
    """
    labels = edge_labels(p, labeling)
    bottoms = list(range(len(p)))
    if jobs <= 1:
        raw = _worker((p, labels, bottoms))
    else:
        chunks = [bottoms[s::jobs] for s in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = [rec for part in pool.map(_worker, [(p, labels, c) for c in chunks]) for rec in part]
    raw.sort(key=lambda r: (r[0], r[1]))
    records = tuple(IntervalRecord(p.elements[i], p.elements[j], c, lf) for i, j, c, lf in raw)
    return ELReport(len(records), records)


def decreasing_chain_mobius(p: FinitePoset, labeling: Labeling, x, y) -> int:
    """``(-1)^length`` times the number of maximal chains of ``[x, y]`` whose
    label word is strictly decreasing."""
    i, j = p.index[x], p.index[y]
    if not p.relation[i, j]:
        raise PosetError(f"{_fmt(x)} is not below {_fmt(y)}", (x, y))
    count, length = 0, 0
    for chain in _chains_idx(p, i, j):
        length = len(chain) - 1
        word = [labeling(p.elements[a], p.elements[b]) for a, b in zip(chain, chain[1:])]
        if all(a > b for a, b in zip(word, word[1:])):
            count += 1
    return (-1) ** length * count
