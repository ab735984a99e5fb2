"""Finite posets: Hasse diagrams, grading, chains, Mobius function, Eulerian
test, order complexes and shelling verification.

Elements are stored in a list and addressed by index.  Up- and down-sets are
kept as Python int bitsets (bit ``j`` of ``up[i]`` set iff ``i <= j``), which
keeps interval membership and parity counts cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "PosetError", "FinitePoset", "Interval", "GradedResult", "EulerianReport",
    "build", "build_from_keys", "is_graded", "interval", "maximal_chains",
    "mobius", "is_eulerian", "order_complex_facets", "verify_shelling",
]


class PosetError(ValueError):
    """The relation handed to :func:`build` is not a partial order."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GradedResult:
    graded: bool
    rank: dict[Any, int] | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.graded


@dataclass(frozen=True)
class EulerianReport:
    eulerian: bool
    parity_test: bool
    mobius_test: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.eulerian


@dataclass(frozen=True)
class Interval:
    bottom: Any
    top: Any
    members: tuple

    def __len__(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class FinitePoset:
    """An immutable finite poset built from an order relation.

    ``relation[i, j]`` is True iff ``elements[i] <= elements[j]``.
    """

    elements: tuple
    relation: np.ndarray
    name: str = ""
    _mobius_memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.relation.setflags(write=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(_row_bits(row) for row in self.relation)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(_row_bits(col) for col in self.relation.T)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        strict = self.relation.copy()
        np.fill_diagonal(strict, False)
        s = strict.astype(np.float32)
        covers = strict & ~((s @ s) > 0)
        covers.setflags(write=False)
        return covers

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in self.cover_matrix)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(j) for j in np.flatnonzero(col)) for col in self.cover_matrix.T)

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(i, j)`` (``j`` covers ``i``), sorted."""
        return tuple((i, j) for i, row in enumerate(self.upper_covers) for j in row)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        # number of elements below is strictly monotone along the order
        below = self.relation.sum(axis=0)
        return tuple(int(i) for i in np.lexsort((np.arange(len(self)), below)))

    @cached_property
    def graded(self) -> GradedResult:
        return is_graded(self)

    @property
    def rank(self) -> dict[Any, int] | None:
        return self.graded.rank

    @cached_property
    def rank_list(self) -> list[int]:
        if not self.graded:
            raise PosetError(f"{self.name or 'poset'} is not graded", self.graded.witness or ())
        return [self.graded.rank[x] for x in self.elements]

    def leq(self, x, y) -> bool:
        return bool(self.relation[self.index[x], self.index[y]])

    def minimal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if self.up[i] == 1 << i]

    def bottom(self):
        mins = self.minimal()
        if len(mins) != 1:
            raise PosetError("poset has no unique minimum", tuple(mins))
        return mins[0]

    def top(self):
        maxs = self.maximal()
        if len(maxs) != 1:
            raise PosetError("poset has no unique maximum", tuple(maxs))
        return maxs[0]

    def interval_mask(self, i: int, j: int) -> int:
        return self.up[i] & self.down[j]

    def comparable_pairs(self, strict: bool = True) -> Iterator[tuple[int, int]]:
        for i in range(len(self)):
            for j in _bits(self.up[i]):
                if not strict or i != j:
                    yield i, j

    def subposet(self, elements: Iterable, name: str = "") -> "FinitePoset":
        """Induced subposet; the Hasse diagram is recomputed, not inherited."""
        idx = sorted(self.index[x] for x in elements)
        rel = self.relation[np.ix_(idx, idx)].copy()
        return FinitePoset(tuple(self.elements[i] for i in idx), rel, name=name)

    def mobius_row(self, i: int) -> dict[int, int]:
        """``mu(x_i, y)`` for every ``y >= x_i``, memoized per bottom."""
        memo = self._mobius_memo
        if i not in memo:
            strict = self.strict_int
            mu = np.zeros(len(self), dtype=np.int64)
            mu[i] = 1
            above = self.up[i]
            for j in self.topological_order:
                if j != i and above >> j & 1:
                    mu[j] = -int(mu @ strict[:, j])
            memo[i] = {j: int(mu[j]) for j in _bits(above)}
        return memo[i]

    @cached_property
    def strict_int(self) -> np.ndarray:
        strict = self.relation.astype(np.int64)
        np.fill_diagonal(strict, 0)
        return strict

    def to_json(self, labels: Callable[[Any, Any], Any] | None = None, *,
                schema: bool = True, extra: dict | None = None) -> dict:
        doc: dict[str, Any] = {}
        if schema:
            doc["schema"] = "poset-shell/1"
        doc["name"] = self.name
        doc["elements"] = [_fmt(x) for x in self.elements]
        doc["edges"] = [[i, j] for i, j in self.hasse_edges]
        doc["ranks"] = self.rank_list if self.graded else None
        if labels is not None:
            doc["labels"] = [list(labels(self.elements[i], self.elements[j])) for i, j in self.hasse_edges]
        if extra:
            doc.update(extra)
        return doc

    def to_dot(self, labels: Callable[[Any, Any], Any] | None = None,
               highlight: Iterable | None = None) -> str:
        """Graphviz source; ranks become ``rank=same`` groups, bottom first.

        ``highlight`` is a set of elements; edges with both ends inside are
        drawn thick blue.
        """
        hl = {self.index[x] for x in highlight} if highlight is not None else set()
        lines = [f'digraph "{self.name or "poset"}" {{',
                 "  rankdir=BT;",
                 '  node [shape=plaintext, fontname="Helvetica"];',
                 "  edge [arrowhead=none];"]
        for i, x in enumerate(self.elements):
            lines.append(f'  n{i} [label="{_fmt(x)}"];')
        if self.graded:
            groups: dict[int, list[int]] = {}
            for i, r in enumerate(self.rank_list):
                groups.setdefault(r, []).append(i)
            for r in sorted(groups):
                members = "; ".join(f"n{i}" for i in groups[r])
                lines.append(f"  {{ rank=same; {members}; }}")
        for i, j in self.hasse_edges:
            attrs = []
            if labels is not None:
                lab = labels(self.elements[i], self.elements[j])
                attrs.append(f'label="{_fmt(lab)}"')
                attrs.append("fontcolor=red")
            if i in hl and j in hl:
                attrs.append("color=blue")
                attrs.append("penwidth=3")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  n{i} -> n{j}{suffix};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps_json(self, **kwargs) -> str:
        return json.dumps(self.to_json(**kwargs), indent=2)


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(str(a) for a in x) + ")"
    return str(x)


def _row_bits(row: np.ndarray) -> int:
    packed = np.packbits(row.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def build(elements: Iterable, leq: Callable[[Any, Any], bool] | None = None, *,
          relation: np.ndarray | None = None, name: str = "", check: bool = True) -> FinitePoset:
    """Build a poset from ``leq`` (called on all ordered pairs) or a boolean matrix.

    With ``check`` the relation is verified to be reflexive, antisymmetric and
    transitive; a violation raises :class:`PosetError` carrying a witness.
    """
    elems = tuple(elements)
    if len(set(elems)) != len(elems):
        raise PosetError("duplicate elements")
    if relation is None:
        if leq is None:
            raise TypeError("need leq or relation")
        relation = np.array([[bool(leq(x, y)) for y in elems] for x in elems], dtype=bool)
        relation = relation.reshape(len(elems), len(elems))
    else:
        relation = np.array(relation, dtype=bool)
        if relation.shape != (len(elems), len(elems)):
            raise ValueError("relation shape does not match elements")
    if check:
        _check_partial_order(elems, relation)
    return FinitePoset(elems, relation, name=name)


def build_from_keys(elements: Sequence, keys: np.ndarray | Sequence[Sequence[int]], *,
                    name: str = "", check: bool = True) -> FinitePoset:
    """Poset where ``x <= y`` iff ``keys[x] <= keys[y]`` componentwise."""
    k = np.asarray(keys, dtype=np.int64)
    if k.ndim == 1:
        k = k[:, None]
    relation = np.all(k[:, None, :] <= k[None, :, :], axis=2)
    return build(elements, relation=relation, name=name, check=check)


def _check_partial_order(elems: tuple, rel: np.ndarray) -> None:
    diag = np.flatnonzero(~np.diag(rel))
    if diag.size:
        x = elems[diag[0]]
        raise PosetError(f"not reflexive at {_fmt(x)}", (x,))
    both = rel & rel.T
    np.fill_diagonal(both, False)
    bad = np.argwhere(both)
    if bad.size:
        i, j = bad[0]
        raise PosetError(f"not antisymmetric: {_fmt(elems[i])} and {_fmt(elems[j])}", (elems[i], elems[j]))
    r = rel.astype(np.float32)
    closure = (r @ r) > 0
    bad = np.argwhere(closure & ~rel)
    if bad.size:
        i, k = bad[0]
        j = int(np.flatnonzero(rel[i] & rel[:, k])[0])
        raise PosetError(
            f"not transitive: {_fmt(elems[i])} <= {_fmt(elems[j])} <= {_fmt(elems[k])}",
            (elems[i], elems[j], elems[k]),
        )


def is_graded(p: FinitePoset) -> GradedResult:
    """Check for a rank function with minimal elements at 0 and covers adding 1.

    The rank of ``y`` is the length of the longest chain from a minimal
    element up to ``y``.  A cover ``x < y`` with ``rank(y) != rank(x) + 1``
    means two saturated chains of different length end at ``y``; the witness
    is ``(x, y, rank(x), rank(y))``.
    """
    rank = [0] * len(p)
    for j in p.topological_order:
        below = p.lower_covers[j]
        rank[j] = max((rank[i] + 1 for i in below), default=0)
    for i, j in p.hasse_edges:
        if rank[j] != rank[i] + 1:
            return GradedResult(False, None, (p.elements[i], p.elements[j], rank[i], rank[j]))
    return GradedResult(True, {x: rank[i] for i, x in enumerate(p.elements)})


def interval(p: FinitePoset, x, y) -> Interval:
    i, j = p.index[x], p.index[y]
    if not p.relation[i, j]:
        raise PosetError(f"{_fmt(x)} is not below {_fmt(y)}", (x, y))
    return Interval(x, y, tuple(p.elements[k] for k in _bits(p.interval_mask(i, j))))


def _chains_idx(p: FinitePoset, i: int, j: int) -> Iterator[tuple[int, ...]]:
    inside = p.interval_mask(i, j)

    def walk(k: int, path: list[int]):
        if k == j:
            yield tuple(path)
            return
        for t in p.upper_covers[k]:
            if inside >> t & 1:
                path.append(t)
                yield from walk(t, path)
                path.pop()

    yield from walk(i, [i])


def maximal_chains(p: FinitePoset, x, y) -> list[tuple]:
    """All saturated chains ``x = z_0 < ... < z_m = y``, in depth-first order
    following the element order of ``p``.  ``[x, x]`` has the single chain ``(x,)``."""
    i, j = p.index[x], p.index[y]
    if not p.relation[i, j]:
        raise PosetError(f"{_fmt(x)} is not below {_fmt(y)}", (x, y))
    return [tuple(p.elements[k] for k in c) for c in _chains_idx(p, i, j)]


def mobius(p: FinitePoset, x, y) -> int:
    i, j = p.index[x], p.index[y]
    if not p.relation[i, j]:
        raise PosetError(f"mobius needs {_fmt(x)} <= {_fmt(y)}", (x, y))
    return p.mobius_row(i)[j]


def is_eulerian(p: FinitePoset) -> EulerianReport:
    """Run the parity-count test and the ``mu = (-1)^length`` test on every
    interval ``[x, y]`` with ``x < y``.  The two verdicts must agree."""
    graded = p.graded
    if not graded:
        raise PosetError("Eulerian test needs a graded poset", graded.witness or ())
    ranks = p.rank_list
    odd = sum(1 << i for i, r in enumerate(ranks) if r % 2)
    parity_witness = None
    for i, j in p.comparable_pairs():
        mask = p.interval_mask(i, j)
        n_odd = (mask & odd).bit_count()
        if 2 * n_odd != mask.bit_count():
            parity_witness = (p.elements[i], p.elements[j])
            break
    mobius_witness = None
    for i in range(len(p)):
        row = p.mobius_row(i)
        for j, m in row.items():
            if m != (-1) ** (ranks[j] - ranks[i]):
                mobius_witness = (p.elements[i], p.elements[j])
                break
        if mobius_witness:
            break
    parity_ok, mobius_ok = parity_witness is None, mobius_witness is None
    if parity_ok != mobius_ok:
        raise AssertionError(
            f"Eulerian tests disagree on {p.name or 'poset'}: parity={parity_ok}, mobius={mobius_ok}")
    return EulerianReport(parity_ok, parity_ok, mobius_ok, parity_witness or mobius_witness)


def order_complex_facets(p: FinitePoset, x, y,
                         labels: Callable[[Any, Any], Any] | None = None) -> list[tuple]:
    """Facets of the order complex of the open interval ``(x, y)``.

    Each facet is a maximal chain with its endpoints removed.  With ``labels``
    the facets are sorted by the label word of the closed chain; ties keep
    enumeration order.
    """
    i, j = p.index[x], p.index[y]
    if not p.relation[i, j] or i == j:
        raise PosetError("order complex needs x < y", (x, y))
    chains = maximal_chains(p, x, y)
    if len(chains[0]) < 3:
        raise PosetError("open interval is empty", (x, y))
    if labels is not None:
        chains.sort(key=lambda c: tuple(labels(a, b) for a, b in zip(c, c[1:])))
    return [c[1:-1] for c in chains]


def verify_shelling(facets: Sequence[Iterable]) -> tuple[bool, int | None]:
    """Check that ``facets`` (in the given order) form a shelling.

    For each ``j >= 1`` (0-based) the faces ``F_j & F_i``, ``i < j``, generate
    the intersection of ``F_j`` with the earlier facets; it must be pure of
    dimension ``dim F_j - 1``, i.e. every maximal such face has ``|F_j| - 1``
    vertices.  Returns ``(ok, first failing index)``.
    """
    sets = [frozenset(f) for f in facets]
    if not sets:
        return True, None
    size = len(sets[0])
    if any(len(s) != size for s in sets):
        raise ValueError("facets must all have the same dimension")
    for j in range(1, len(sets)):
        meets = {sets[j] & sets[i] for i in range(j)}
        maximal = [m for m in meets if not any(m < other for other in meets)]
        if any(len(m) != size - 1 for m in maximal):
            return False, j
    return True, None
