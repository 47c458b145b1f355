"""The crossed complex, the short-chord-free coboundary, and the chain
map between them."""

import random
from fractions import Fraction

import pytest

from circlegc.graphs import (ODD, WITH_CIRCLE, WITH_ORDER, DecoratedGraph,
                             GraphVector, degree, order)
from circlegc.coboundary import delta
from circlegc.enumeration import basis, framed_basis
from circlegc.homology import _rank, cohomology, delta_matrix
from circlegc.framed import (delete_cross, delta_framed,
                             delta_framed_vector, delta_underline,
                             delta_underline_vector,
                             short_chord_substitution,
                             short_chord_substitution_vector)

from conftest import decorated_variant


def _degrees(k):
    out = []
    m = 0
    while True:
        if basis(ODD, k, m):
            out.append(m)
        elif m > 2 * k:
            break
        m += 1
    return out


def test_bare_cross_maps_to_loop_graph():
    g = DecoratedGraph(ODD, 1, 0, (), (), (1,))
    v = delta_framed(g)
    assert len(v.terms) == 1
    coeff, h = v.terms[0]
    assert abs(coeff) == 1
    assert h.loops == ((1, WITH_CIRCLE, WITH_ORDER),)
    assert not h.crosses


def test_cross_deletion_grading():
    for k in (1, 2, 3):
        for m in (0, 1):
            for g in framed_basis(k, m):
                for _, h in delta_framed(g).terms:
                    assert order(h) == order(g)
                    assert degree(h) == degree(g) + 1


def test_cross_deletion_sign():
    g = DecoratedGraph(ODD, 2, 0, ((1, 2),), (), (1,))
    sign, raw = delete_cross(g, 1)
    assert sign == (-1) ** (degree(g) + 1)
    assert raw.loops[-1] == (1, WITH_CIRCLE, WITH_ORDER)


def test_framed_delta_squares_to_zero():
    for k in (1, 2, 3):
        m = 0
        while True:
            fb = framed_basis(k, m)
            if not fb and m > 2 * k:
                break
            for g in fb:
                assert delta_framed_vector(delta_framed(g)).is_zero()
            m += 1


def test_underline_equals_delta_without_short_chords():
    for k in (1, 2, 3):
        for m in _degrees(k):
            for g in basis(ODD, k, m):
                if not g.short_chords():
                    assert delta_underline(g) == delta(g)


def test_underline_on_single_chord():
    # with two external vertices both arcs join the chord's endpoints
    # and produce the same signed term; one copy is kept
    g = DecoratedGraph(ODD, 2, 0, ((1, 2),))
    v = delta_underline(g)
    assert len(v.terms) == 1
    coeff, h = v.terms[0]
    assert abs(coeff) == 1
    assert h.loops and not h.edges


def test_underline_squares_to_zero():
    for k in (1, 2, 3):
        for m in _degrees(k):
            for g in basis(ODD, k, m):
                assert delta_underline_vector(
                    delta_underline(g)).is_zero()


def test_substitution_fixes_chord_free_graphs():
    for k in (1, 2, 3):
        for g in basis(ODD, k, 0):
            if g.short_chords():
                continue
            v = short_chord_substitution(g)
            assert len(v.terms) == 1
            assert v.terms[0][1] == g


def test_chain_map():
    for k in (1, 2, 3):
        for m in _degrees(k):
            for g in basis(ODD, k, m):
                lhs = short_chord_substitution_vector(delta_underline(g))
                rhs = delta_framed_vector(short_chord_substitution(g))
                assert lhs == rhs, g


def test_substitution_order_independence():
    for k in (2, 3):
        for m in _degrees(k):
            for g in basis(ODD, k, m):
                chords = g.short_chords()
                if len(chords) < 2:
                    continue
                ref = short_chord_substitution(g)
                assert short_chord_substitution(
                    g, chord_order=list(reversed(chords))) == ref


def test_framed_delta_respects_decoration_classes():
    rng = random.Random(624)
    for k in (1, 2, 3):
        for m in (0, 1):
            for g in framed_basis(k, m):
                base = delta_framed(g)
                for _ in range(3):
                    h, sign = decorated_variant(g, rng)
                    assert delta_framed(h) == base.scaled(sign)


def test_cocycles_embed_into_crossed_cohomology():
    # degree-0 delta cocycles map to independent crossed cocycles
    for k in (2, 3):
        mat = delta_matrix(ODD, k, 0)
        fb = framed_basis(k, 0)
        index = {g.sort_key(): i for i, g in enumerate(fb)}
        rows = []
        for vec in mat.kernel():
            v = GraphVector(parity=ODD)
            for c, g in zip(vec, mat.col_basis):
                if c:
                    v.add_graph(g, c)
            img = short_chord_substitution_vector(v)
            assert delta_framed_vector(img).is_zero()
            row = [Fraction(0)] * len(fb)
            for c, g in img.terms:
                row[index[g.sort_key()]] = c
            rows.append(row)
        assert _rank(rows, len(fb)) == len(rows)


def test_framed_cohomology_dimensions():
    dims = [cohomology(ODD, k, 0, op=delta_framed,
                       basis_fn=lambda parity, k2, m: framed_basis(k2, m)
                       ).dim_H for k in (1, 2, 3)]
    assert dims == [1, 2, 3]


def test_underline_cohomology_dimensions():
    dims = [cohomology(ODD, k, 0, op=delta_underline).dim_H
            for k in (1, 2, 3)]
    assert dims == [0, 2, 3]
