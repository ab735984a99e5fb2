from __future__ import annotations

import math

import pytest
from hypothesis import given

from posetshell.embeddings import (
    counterexample_triple, eulerian_counterexample, phi, phi_inverse, psi,
    transport_labeling, verify_isomorphism,
)
from posetshell.families import (
    involution_poset, partial_involution_poset, partial_involution_union_poset,
    permutation_poset, rook_poset, rook_union_poset,
)
from posetshell.labeling import label, verify_el
from posetshell.poset import build, interval, is_eulerian
from posetshell.rooks import (
    enumerate_partial_involutions, enumerate_rooks, involution_count,
)

import oracles
from strategies import partial_involutions


def test_psi_examples():
    assert psi((0, 1, 2)) == (1, 2, 3, 4)
    assert psi((3, 2, 1)) == (4, 3, 2, 1)
    assert psi((2, 0, 1)) == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        psi((0, 0, 1))


def test_phi_examples():
    assert phi((2, 1, 0, 4)) == (2, 1, 5, 4, 3)
    assert phi((1, 2, 3)) == (1, 2, 3, 4)
    assert phi((0, 3, 2)) == (4, 3, 2, 1)
    with pytest.raises(ValueError):
        phi((1, 0, 0))


@given(partial_involutions(min_n=1, max_n=7))
def test_phi_round_trip(x):
    if x.count(0) > 1:
        with pytest.raises(ValueError):
            phi(x)
        return
    u = phi(x)
    assert u.is_permutation() and u.is_partial_involution()
    assert phi_inverse(u) == x


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_is_bijective_onto_s_n_plus_1(n):
    dom = enumerate_rooks(n, n - 1) + enumerate_rooks(n, n)
    images = {psi(x) for x in dom}
    assert len(images) == len(dom) == math.factorial(n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_is_bijective_onto_i_n_plus_1(n):
    dom = enumerate_partial_involutions(n, n - 1) + enumerate_partial_involutions(n, n)
    images = {phi(x) for x in dom}
    assert len(images) == len(dom) == involution_count(n + 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_isomorphism(n):
    rep = verify_isomorphism(psi, rook_union_poset(n), permutation_poset(n + 1))
    assert rep.isomorphism, rep


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_isomorphism(n):
    rep = verify_isomorphism(phi, partial_involution_union_poset(n), involution_poset(n + 1))
    assert rep.isomorphism, rep


def test_psi_isomorphism_against_naive_bruhat():
    up = oracles.bruhat_up(4)
    dom = enumerate_rooks(3, 2) + enumerate_rooks(3, 3)
    for x in dom:
        for y in dom:
            assert oracles.rook_leq(x, y) == (tuple(psi(y)) in up[tuple(psi(x))])


def test_isomorphism_failure_witness():
    two_chain = build([0, 1], lambda a, b: a <= b)
    antichain = build([0, 1], lambda a, b: a == b)
    rep = verify_isomorphism(lambda x: x, two_chain, antichain)
    assert rep.bijective and not rep.order_preserving_forward
    assert rep.witness == (0, 1) and not rep
    rep = verify_isomorphism(lambda x: 0, two_chain, antichain)
    assert not rep.bijective


def test_rook_union_is_an_interval():
    # u is the length-n word (0,1,...,n-1)
    for n in range(1, 5):
        p = rook_poset(n)
        u, w = tuple(range(n)), tuple(range(n, 0, -1))
        assert set(interval(p, u, w).members) == set(rook_union_poset(n).elements)


def test_pinv_union_is_an_interval():
    for n in range(1, 6):
        p = partial_involution_poset(n)
        iota = tuple(range(1, n + 1))
        u = (0,) + tuple(range(n, 1, -1))
        assert set(interval(p, iota, u).members) == set(partial_involution_union_poset(n).elements)


def test_counterexample_examples():
    rep = eulerian_counterexample(4, 2, "rooks")
    assert rep.triple == ((0, 0, 1, 2), (0, 1, 0, 2), (1, 0, 0, 2))
    assert set(rep.members) == set(rep.triple) and rep.ok
    rep = eulerian_counterexample(4, 2, "involutions")
    assert rep.triple == ((1, 2, 0, 0), (1, 0, 3, 0), (1, 0, 0, 4))
    assert rep.ok
    assert eulerian_counterexample(3, 1, "rooks").ok
    with pytest.raises(ValueError):
        counterexample_triple(4, 3, "rooks")
    with pytest.raises(ValueError):
        counterexample_triple(4, 1, "other")


@pytest.mark.parametrize("n", range(3, 7))
def test_counterexamples_for_all_k(n):
    for k in range(1, n - 1):
        for side in ("rooks", "involutions"):
            assert eulerian_counterexample(n, k, side).ok, (n, k, side)


@pytest.mark.parametrize("n", range(1, 6))
def test_eulerian_layers(n):
    for k in range(1, n + 1):
        expected = k in (n - 1, n)
        assert is_eulerian(rook_poset(n, k)).eulerian == expected
        assert is_eulerian(partial_involution_poset(n, k)).eulerian == expected


def test_transported_examples():
    lab = transport_labeling(3)
    assert lab((1, 2, 3, 4), (2, 1, 3, 4)) == label((1, 2, 3), (2, 1, 3)) == (1, 2)
    i4 = involution_poset(4)
    bottom = i4.bottom()
    got = {i4.elements[j]: lab(bottom, i4.elements[j]) for j in i4.upper_covers[i4.index[bottom]]}
    assert got == {(2, 1, 3, 4): (1, 2), (1, 3, 2, 4): (2, 3), (1, 2, 4, 3): (3, 3)}


def test_transported_labeling_is_el():
    rep = verify_el(involution_poset(4), transport_labeling(3))
    assert rep.ok and rep.intervals == 35


def test_blue_subdiagrams():
    p = rook_poset(3)
    blue = set(rook_union_poset(3).elements)
    edges = [(i, j) for i, j in p.hasse_edges if p.elements[i] in blue and p.elements[j] in blue]
    assert (len(blue), len(edges)) == (24, 58)
    p = partial_involution_poset(3)
    blue = set(partial_involution_union_poset(3).elements)
    edges = [(i, j) for i, j in p.hasse_edges if p.elements[i] in blue and p.elements[j] in blue]
    assert (len(blue), len(edges)) == (10, 17)
