"""Contraction signs, gradings, and well-definedness of the coboundary."""

import random

import pytest

from circlegc.graphs import (ODD, EVEN, WITH_CIRCLE, WITH_ORDER,
                             DecoratedGraph, canonical_form, degree, order)
from circlegc.coboundary import (ContractionSite, contract_raw,
                                 contraction_sites, delta, delta_vector,
                                 _sigma)
from circlegc.enumeration import basis

from conftest import decorated_variant

TRIPOD = DecoratedGraph(ODD, 3, 1, ((1, 4), (2, 4), (3, 4)))
CROSSING = DecoratedGraph(ODD, 4, 0, ((1, 3), (2, 4)))


def test_sigma_values():
    assert _sigma(1, 4) == 1          # (-1)^j for j > i
    assert _sigma(4, 1) == -1         # (-1)^(i+1) for j < i
    assert _sigma(2, 3) == -1
    assert _sigma(1, 2) == 1


def test_contract_tripod_edge():
    sign, raw = contract_raw(TRIPOD, ContractionSite("edge", 0))
    assert sign == 1                  # edge 1 -> 4, j = 4 > i = 1
    assert raw.v_ext == 3 and raw.v_int == 0
    assert sorted(tuple(sorted(e)) for e in raw.edges) == [(1, 2), (1, 3)]


def test_even_edge_contraction_sign():
    g = DecoratedGraph(EVEN, 3, 1, ((1, 4), (2, 4), (3, 4)))
    sign, _ = contract_raw(g, ContractionSite("edge", 0))
    assert sign == (-1) ** (1 + 1 + 3) == -1


def test_crossing_arc_contraction_nonzero():
    sign, raw = contract_raw(CROSSING, ContractionSite("arc", 1))
    assert raw.v_ext == 3 and raw.v_int == 0
    # both chords now leave the merged vertex 1
    assert sorted(tuple(sorted(e)) for e in raw.edges) == [(1, 2), (1, 3)]
    assert canonical_form(raw) is not None


def test_short_chord_arc_becomes_small_loop():
    g = DecoratedGraph(ODD, 2, 0, ((1, 2),))
    _, raw = contract_raw(g, ContractionSite("arc", 1))
    assert raw.edges == ()
    assert raw.loops == ((1, WITH_CIRCLE, WITH_ORDER),)


def test_contraction_sites_exclude_chords_and_loops():
    sites = contraction_sites(CROSSING)
    assert all(s.kind == "arc" for s in sites)
    g = DecoratedGraph(ODD, 1, 0, (), ((1, WITH_CIRCLE, WITH_ORDER),))
    assert contraction_sites(g) == []


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_delta_grading(parity):
    for k in (1, 2, 3):
        for m in (0, 1, 2):
            for g in basis(parity, k, m):
                for _, h in delta(g).terms:
                    assert order(h) == order(g)
                    assert degree(h) == degree(g) + 1


def test_delta_of_loops_graph_vanishes():
    for parity in (ODD, EVEN):
        for k in (1, 2, 3):
            if parity == ODD:
                g = DecoratedGraph(
                    parity, k, 0, (),
                    tuple((v, WITH_CIRCLE, WITH_ORDER)
                          for v in range(1, k + 1)))
            else:
                g = DecoratedGraph(parity, k, 0,
                                   tuple((v, v) for v in range(1, k + 1)))
            if canonical_form(g) is None:
                continue
            assert delta(g).is_zero()


def test_single_chord_not_closed():
    g = DecoratedGraph(ODD, 2, 0, ((1, 2),))
    assert not delta(g).is_zero()


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_delta_well_defined_on_classes(parity):
    rng = random.Random(8240824)
    for k in (1, 2, 3):
        for m in (0, 1):
            for g in basis(parity, k, m):
                base = delta(g)
                for _ in range(3):
                    h, sign = decorated_variant(g, rng)
                    assert delta(h) == base.scaled(sign)


def test_dsquared_spot_checks():
    for parity in (ODD, EVEN):
        for k in (1, 2, 3):
            for g in basis(parity, k, 0):
                assert delta_vector(delta(g)).is_zero()
