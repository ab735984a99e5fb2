"""Maps from the top two layers of ``R_n`` and ``P_n`` into ``S_{n+1}`` and
``I_{n+1}``, an isomorphism checker, the three-element intervals that keep
lower layers from being Eulerian, and labelings pulled back along ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .families import partial_involution_poset, rook_poset
from .labeling import Label, label
from .poset import FinitePoset, _fmt, interval
from .rooks import PartialInvolution, Rook, format_word

__all__ = [
    "psi", "phi", "phi_inverse", "PosetIsomorphismReport", "verify_isomorphism",
    "CounterexampleReport", "counterexample_triple", "eulerian_counterexample",
    "TransportedLabeling", "transport_labeling",
]


def _check_rank(x: Rook) -> None:
    n = len(x)
    if x.rank not in (n, n - 1):
        raise ValueError(f"{x} has rank {x.rank}; need {n - 1} or {n}")


def psi(x: Sequence[int]) -> Rook:
    """``(a_1 + 1, ..., a_n + 1, m)`` with ``m`` the value of ``[n+1]`` left over."""
    x = Rook(x)
    _check_rank(x)
    head = [a + 1 for a in x]
    missing = set(range(1, len(x) + 2)) - set(head)
    return Rook(head + [missing.pop()])


def phi(x: Sequence[int]) -> PartialInvolution:
    """Send the empty row/column of ``x`` to row/column ``n + 1``.

    A zero at position ``i`` becomes ``n + 1`` and the new last entry is the
    index of the empty row; a full involution just gains the fixed point
    ``n + 1``.
    """
    x = PartialInvolution(x)
    _check_rank(x)
    n = len(x)
    out = [a if a else n + 1 for a in x]
    zeros = [i for i, a in enumerate(x, 1) if not a]
    out.append(zeros[0] if zeros else n + 1)
    return PartialInvolution(out)


def phi_inverse(u: Sequence[int]) -> PartialInvolution:
    """Inverse of :func:`phi` on involutions of ``S_{n+1}``."""
    u = PartialInvolution(u)
    if not u.is_permutation():
        raise ValueError(f"{u} is not an involution of S_{len(u)}")
    m = len(u)
    return PartialInvolution(0 if a == m else a for a in u[:-1])


@dataclass(frozen=True)
class PosetIsomorphismReport:
    bijective: bool
    order_preserving_forward: bool
    order_preserving_backward: bool
    witness: tuple | None = None

    @property
    def isomorphism(self) -> bool:
        return self.bijective and self.order_preserving_forward and self.order_preserving_backward

    def __bool__(self) -> bool:
        return self.isomorphism

    def to_json(self) -> dict:
        return {
            "isomorphism": self.isomorphism,
            "bijective": self.bijective,
            "order_preserving_forward": self.order_preserving_forward,
            "order_preserving_backward": self.order_preserving_backward,
            "witness": None if self.witness is None else [_fmt(w) for w in self.witness],
        }


def verify_isomorphism(fn: Callable[[Any], Any], domain: FinitePoset,
                       codomain: FinitePoset) -> PosetIsomorphismReport:
    """Check that ``fn`` is a bijection with ``x <= y`` iff ``fn(x) <= fn(y)``.

    The witness is the first offending element or pair found.
    """
    images = [fn(x) for x in domain.elements]
    seen: dict = {}
    for x, fx in zip(domain.elements, images):
        if fx not in codomain:
            return PosetIsomorphismReport(False, False, False, (x, fx))
        if fx in seen:
            return PosetIsomorphismReport(False, False, False, (seen[fx], x))
        seen[fx] = x
    if len(seen) != len(codomain):
        missed = next(u for u in codomain.elements if u not in seen)
        return PosetIsomorphismReport(False, False, False, (missed,))
    perm = [codomain.index[fx] for fx in images]
    pulled = codomain.relation[np.ix_(perm, perm)]
    rel = domain.relation
    fwd = np.argwhere(rel & ~pulled)
    bwd = np.argwhere(pulled & ~rel)
    witness = None
    if fwd.size:
        witness = (domain.elements[fwd[0][0]], domain.elements[fwd[0][1]])
    elif bwd.size:
        witness = (domain.elements[bwd[0][0]], domain.elements[bwd[0][1]])
    return PosetIsomorphismReport(True, not fwd.size, not bwd.size, witness)


@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    k: int
    side: str
    triple: tuple[Rook, Rook, Rook]
    members: tuple[Rook, ...]

    @property
    def ok(self) -> bool:
        return len(self.members) == 3 and set(self.members) == set(self.triple)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "side": self.side,
                "triple": [format_word(x) for x in self.triple],
                "interval": [format_word(x) for x in self.members], "ok": self.ok}


def counterexample_triple(n: int, k: int, side: str) -> tuple[Rook, Rook, Rook]:
    """The three words of the small interval in ``R_{n,k}`` (``side="rooks"``)
    or ``P_{n,k}`` (``side="involutions"``)."""
    if not 1 <= k <= n - 2:
        raise ValueError(f"need 1 <= k <= n - 2, got n={n}, k={k}")
    if side == "rooks":
        tail = list(range(2, k + 1))
        pad = n - k - 2
        return (Rook([0] * (pad + 2) + [1] + tail),
                Rook([0] * (pad + 1) + [1, 0] + tail),
                Rook([0] * pad + [1, 0, 0] + tail))
    if side == "involutions":
        head = list(range(1, k))

        def word(pos: int) -> PartialInvolution:
            w = head + [0] * (n - k + 1)
            w[pos - 1] = pos
            return PartialInvolution(w)

        return word(k), word(k + 1), word(k + 2)
    raise ValueError(f"unknown side {side!r}")


def eulerian_counterexample(n: int, k: int, side: str = "rooks") -> CounterexampleReport:
    """Build the triple and read off the closed interval it spans in the layer."""
    triple = counterexample_triple(n, k, side)
    p = rook_poset(n, k) if side == "rooks" else partial_involution_poset(n, k)
    members = interval(p, triple[0], triple[2]).members
    return CounterexampleReport(n, k, side, triple, tuple(members))


class TransportedLabeling:
    """Labels covers of ``I_{n+1}`` by pulling them back to ``P_n`` along ``phi``."""

    def __init__(self, base: Callable[[Any, Any], Label] = label):
        self.base = base

    def __call__(self, u, v) -> Label:
        return self.base(phi_inverse(u), phi_inverse(v))


def transport_labeling(n: int, base: Callable[[Any, Any], Label] = label) -> TransportedLabeling:
    """Labeling of ``I_{n+1}`` induced by ``phi``; refuses unless ``phi`` is an
    isomorphism at this ``n``."""
    from .families import involution_poset, partial_involution_union_poset

    report = verify_isomorphism(phi, partial_involution_union_poset(n), involution_poset(n + 1))
    if not report:
        raise ValueError(f"phi is not an isomorphism at n={n}: {report}")
    return TransportedLabeling(base)
