"""The coboundary operator: contracting regular edges and arcs.

``delta`` of a graph is the signed sum over all contraction sites.  A site
is either a regular edge (an edge that is neither a chord nor a small loop,
i.e. with at least one internal endpoint) or an arc (the circle segment
between two cyclically consecutive external vertices).  Contracting the arc
between the endpoints of a short chord turns that chord into an external
small loop whose half-edges are ordered consistently with the circle
orientation.

Signs: contracting the edge or arc joining vertex i to vertex j, ordered
along the edge arrow (odd) or the circle orientation (arcs), contributes
(-1)^j for j > i and (-1)^(i+1) for j < i.  In even parity an edge
contraction instead uses its label a and contributes (-1)^(a+1+v_ext) with
v_ext counted before the contraction.

After a contraction the merged vertex takes the label min(i, j) and every
label above max(i, j) drops by one; in even parity, edge labels above a
contracted edge's label drop by one as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import (ODD, EVEN, WITH_CIRCLE, WITH_ORDER, AGAINST_ORDER,
                     DecoratedGraph, GraphVector, canonical_form,
                     is_zero_by_relations)


@dataclass(frozen=True)
class ContractionSite:
    """A regular edge (by index into ``edges``) or an arc (by the label of
    the external vertex at which the arc starts)."""
    kind: str            # "edge" or "arc"
    index: int


def contraction_sites(g: DecoratedGraph):
    """All sites ``delta`` acts on, in a deterministic order."""
    sites = [ContractionSite("edge", i) for i, (a, b) in enumerate(g.edges)
             if not (g.is_external(a) and g.is_external(b))]
    if g.v_ext >= 2:
        sites.extend(ContractionSite("arc", i) for i in range(1, g.v_ext + 1))
    return sites


def _merge_map(num_vertices: int, i: int, j: int):
    lo, hi = min(i, j), max(i, j)

    def remap(v: int) -> int:
        if v == hi:
            return lo
        if v > hi:
            return v - 1
        return v

    return remap


def _sigma(i: int, j: int) -> int:
    """Sign for contracting the edge or arc from vertex i to vertex j."""
    return (-1) ** j if j > i else (-1) ** (i + 1)


def contract_raw(g: DecoratedGraph, site: ContractionSite):
    """Perform one contraction without canonicalizing.

    Returns ``(sign, graph)``; the graph may still be zero by the multiple
    edge relation.  Raises on chords, small loops, or invalid sites.
    """
    if site.kind == "edge":
        return _contract_edge(g, site.index)
    if site.kind == "arc":
        return _contract_arc(g, site.index)
    raise ValueError("unknown contraction site kind %r" % (site.kind,))


def _contract_edge(g: DecoratedGraph, idx: int):
    if not 0 <= idx < len(g.edges):
        raise ValueError("edge index out of range")
    a, b = g.edges[idx]
    if a == b:
        raise ValueError("cannot contract a small loop")
    if g.is_external(a) and g.is_external(b):
        raise ValueError("cannot contract a chord")
    remap = _merge_map(g.num_vertices, a, b)
    edges = [(remap(x), remap(y)) for k, (x, y) in enumerate(g.edges)
             if k != idx]
    loops = tuple((remap(v), of, af) for v, of, af in g.loops)
    crosses = tuple(remap(v) for v in g.crosses)
    if g.parity == ODD:
        sign = _sigma(a, b)
    else:
        alpha = idx + 1
        sign = (-1) ** (alpha + 1 + g.v_ext)
    out = DecoratedGraph(g.parity, g.v_ext, g.v_int - 1, tuple(edges),
                         loops, crosses)
    return sign, out


def _contract_arc(g: DecoratedGraph, start: int):
    if g.v_ext < 2:
        raise ValueError("no contractible arc with a single external vertex")
    if not 1 <= start <= g.v_ext:
        raise ValueError("arc index out of range")
    i = start
    j = 1 if i == g.v_ext else i + 1
    remap = _merge_map(g.num_vertices, i, j)
    sign = _sigma(i, j)
    edges = []
    loops = list((remap(v), of, af) for v, of, af in g.loops)
    for a, b in g.edges:
        if {a, b} == {i, j}:
            # A short chord between the arc's endpoints becomes an external
            # small loop.  Its first half-edge, in the ordering consistent
            # with the circle orientation, is the end at vertex i.
            if g.parity == ODD:
                arrow = WITH_ORDER if a == i else AGAINST_ORDER
                loops.append((remap(i), WITH_CIRCLE, arrow))
            else:
                edges.append((remap(i), remap(i)))
        else:
            edges.append((remap(a), remap(b)))
    crosses = tuple(remap(v) for v in g.crosses)
    out = DecoratedGraph(g.parity, g.v_ext - 1, g.v_int, tuple(edges),
                         tuple(loops), crosses)
    return sign, out


def orientation_sign(g: DecoratedGraph) -> int:
    """Per-class orientation of the basis vector entering ``delta``.

    Every coboundary term is weighted by the product of the orientation
    signs of its source and its target.  Since the factor is a class
    function, this is a diagonal change of basis: delta still squares to
    zero and all cohomology dimensions are unchanged.  The normalization is
    chosen so that the classical low-order trivalent cocycles appear with
    their textbook coefficients: even graphs are weighted by the parity of
    their chord crossing number, odd graphs by whether the circle carries
    fewer than three external vertices.
    """
    if g.parity == EVEN:
        return -1 if g.chord_crossings() % 2 else 1
    return -1 if g.v_ext <= 2 else 1


def contract(g: DecoratedGraph, site: ContractionSite):
    """Contract one site and canonicalize.

    Returns ``(coefficient, canonical graph)`` or ``None`` when the
    contraction produces a zero graph.  The coefficient is the contraction
    sign times the canonicalization sign, weighted by the orientation signs
    of source and target.
    """
    sign, raw = contract_raw(g, site)
    if is_zero_by_relations(raw):
        return None
    res = canonical_form(raw)
    if res is None:
        return None
    canon, extra = res
    w = orientation_sign(g) * orientation_sign(canon)
    return Fraction(sign * extra * w), canon


def delta(g: DecoratedGraph) -> GraphVector:
    """Coboundary of a single graph: signed sum over all contractions.

    Every term has the same order as ``g`` and degree one higher.  Framed
    graphs (with crosses) must go through ``framed.delta_framed`` instead,
    which adds the cross terms on top of these.
    """
    out = GraphVector(parity=g.parity)
    for site in contraction_sites(g):
        term = contract(g, site)
        if term is not None:
            coeff, canon = term
            out.add_graph(canon, coeff)
    return out


def delta_vector(v: GraphVector) -> GraphVector:
    """Linear extension of ``delta`` to graph vectors."""
    out = GraphVector(parity=v.parity)
    for coeff, g in v.terms:
        for site in contraction_sites(g):
            term = contract(g, site)
            if term is not None:
                c, canon = term
                out.add_graph(canon, coeff * c)
    return out
