"""Basis generation: completeness properties and pinned memberships."""

import pytest

from circlegc.graphs import (ODD, EVEN, DecoratedGraph, canonical_form,
                             degree, is_canonical, order, validate)
from circlegc.enumeration import basis, framed_basis, trivalent_basis

CROSSING = DecoratedGraph(ODD, 4, 0, ((1, 3), (2, 4)))
TRIPOD = DecoratedGraph(ODD, 3, 1, ((1, 4), (2, 4), (3, 4)))


def test_even_order1_degree0_empty():
    assert basis(EVEN, 1, 0) == []


def test_odd_order1_degree0_single_chord():
    b = basis(ODD, 1, 0)
    assert len(b) == 1
    assert b[0].v_int == 0 and len(b[0].edges) == 1


def test_odd_order2_degree0_membership():
    canon = {canonical_form(g)[0] for g in (CROSSING, TRIPOD)}
    assert canon <= set(basis(ODD, 2, 0))


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_basis_graphs_are_valid_canonical_distinct(parity):
    for k in (1, 2, 3):
        for m in (0, 1, 2, 3):
            b = basis(parity, k, m)
            assert len(set(b)) == len(b)
            for g in b:
                assert validate(g) == []
                assert is_canonical(g)
                assert order(g) == k
                assert degree(g) == m


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_trivalent_basis_valences(parity):
    for k in (2, 3):
        for g in trivalent_basis(parity, k):
            val = g.valences()
            for v in range(1, g.v_ext + 1):
                assert val[v] == 1
            for v in range(g.v_ext + 1, g.v_ext + g.v_int + 1):
                assert val[v] == 3
            assert 2 * g.num_edges == g.v_ext + 3 * g.v_int


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_chord_diagrams_have_2k_externals(parity):
    for k in (1, 2, 3):
        for g in trivalent_basis(parity, k):
            if g.v_int == 0:
                assert g.v_ext == 2 * k


def test_even_order3_contains_cocycle_shapes():
    shapes = {(g.v_ext, g.v_int) for g in trivalent_basis(EVEN, 3)}
    assert {(4, 2), (6, 0), (5, 1), (3, 3), (2, 4)} <= shapes


def test_framed_basis_gradings():
    for k in (1, 2, 3):
        for m in (0, 1, 2):
            for g in framed_basis(k, m):
                assert g.parity == ODD
                assert order(g) == k
                assert degree(g) == m
                assert order(g) == g.num_edges - g.v_int + g.num_crosses


def test_framed_basis_contains_bare_crossed_vertex():
    b = framed_basis(1, 0)
    assert any(g.num_crosses == 1 and not g.edges and not g.loops
               for g in b)
