"""Decorated graphs on an oriented circle, and their signed canonical forms.

A graph lives on a distinguished oriented circle.  External vertices sit on
the circle and are labelled 1..v_ext in cyclic order; internal vertices sit
off the circle and must be at least trivalent.  Edges never belong to the
circle.  The decoration depends on the parity:

* odd parity: internal vertices carry labels v_ext+1..v_ext+v_int, every
  edge carries an orientation (arrow), and every external small loop carries
  an ordering of its two half-edges (recorded relative to the circle
  orientation) plus the arrow position relative to that ordering;
* even parity: internal vertices are anonymous, edges carry labels 1..e
  (their position in the ``edges`` tuple) and are unoriented.

Two graphs that differ only by decoration are identified up to a sign:
internal relabellings (odd, signed by the permutation parity), cyclic
relabellings of the external vertices (signed), arrow reversals (odd, one
sign each), half-edge order swaps on small loops (odd, one sign each), edge
relabellings (even, signed), anonymous internal renamings (even, unsigned),
and cross renumberings (framed graphs, signed).  Graphs with a repeated
(unordered) endpoint pair, or with an internal small loop, are zero.

``canonical_form`` picks the lexicographically least representative of the
decoration orbit and accumulates the sign; it returns ``None`` when the
orbit identifies the graph with minus itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

ODD = "odd"
EVEN = "even"

# Small-loop decoration flags (odd parity only).  Flag value 0 is the
# canonical state; each flip of a flag costs one sign.
WITH_CIRCLE = 0      # half-edge order agrees with the circle orientation
AGAINST_CIRCLE = 1
WITH_ORDER = 0       # arrow goes from the first half-edge to the second
AGAINST_ORDER = 1


@dataclass(frozen=True)
class DecoratedGraph:
    """One decorated graph of odd or even type.

    ``edges``:
      odd  -- tuple of oriented pairs ``(tail, head)`` between *distinct*
              vertices; small loops are kept in ``loops`` instead;
      even -- tuple of unordered pairs ``(u, v)`` with ``u <= v`` in edge
              label order (position i holds the edge labelled i+1); small
              loops appear here as ``(a, a)``.

    ``loops``: odd parity only; tuple of ``(vertex, order_flag, arrow_flag)``
    for each external small loop.

    ``crosses``: framed decoration (odd parity only); tuple of vertex labels
    in cross label order (position a-1 holds the vertex of the cross
    labelled a).
    """

    parity: str
    v_ext: int
    v_int: int
    edges: tuple = ()
    loops: tuple = ()
    crosses: tuple = ()

    # -- basic counts ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges) + len(self.loops)

    @property
    def num_crosses(self) -> int:
        return len(self.crosses)

    @property
    def num_vertices(self) -> int:
        return self.v_ext + self.v_int

    def is_external(self, label: int) -> bool:
        return 1 <= label <= self.v_ext

    def sort_key(self):
        return (self.parity, self.v_ext, self.v_int, self.edges,
                self.loops, self.crosses)

    # -- derived structure ----------------------------------------------

    def endpoint_pairs(self):
        """All unordered endpoint pairs, small loops included."""
        pairs = []
        for a, b in self.edges:
            pairs.append((min(a, b), max(a, b)))
        for entry in self.loops:
            pairs.append((entry[0], entry[0]))
        return pairs

    def valences(self):
        """Edge-end count per vertex label (a small loop counts twice)."""
        val = {v: 0 for v in range(1, self.num_vertices + 1)}
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        for entry in self.loops:
            val[entry[0]] += 2
        return val

    def chords(self):
        """Indices into ``edges`` of chords (both endpoints external)."""
        return [i for i, (a, b) in enumerate(self.edges)
                if self.is_external(a) and self.is_external(b) and a != b]

    def is_short_chord(self, a: int, b: int) -> bool:
        """True if external vertices a, b are cyclically consecutive."""
        if self.v_ext < 2:
            return False
        lo, hi = min(a, b), max(a, b)
        return hi - lo == 1 or (lo == 1 and hi == self.v_ext)

    def short_chords(self):
        return [i for i in self.chords()
                if self.is_short_chord(*self.edges[i])]

    def is_chord_diagram(self) -> bool:
        return self.v_int == 0 and not self.loops and not self.crosses

    def chord_crossings(self) -> int:
        """Number of interleaving chord pairs, read around the circle."""
        ch = [tuple(sorted(self.edges[i])) for i in self.chords()]
        count = 0
        for i, (a, b) in enumerate(ch):
            for c, d in ch[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    count += 1
        return count


def order(g: DecoratedGraph) -> int:
    """e - v_int (+ number of crosses in the framed case)."""
    return g.num_edges - g.v_int + g.num_crosses


def degree(g: DecoratedGraph) -> int:
    """2e - 3 v_int - v_ext (+ number of crosses in the framed case)."""
    return 2 * g.num_edges - 3 * g.v_int - g.v_ext + g.num_crosses


# ----------------------------------------------------------------------
# validation


def validate(g: DecoratedGraph) -> list:
    """Return a list of violation strings; empty means the graph is usable.

    Violations 'multiple edge' and 'internal small loop' mean the graph is
    zero in the quotient; the others mean it is malformed.
    """
    bad = []
    if g.parity not in (ODD, EVEN):
        bad.append("unknown parity %r" % (g.parity,))
        return bad
    if g.v_ext < 1:
        bad.append("need at least one external vertex")
    if g.v_int < 0:
        bad.append("negative internal vertex count")
    n = g.num_vertices
    for a, b in g.edges:
        if not (1 <= a <= n and 1 <= b <= n):
            bad.append("edge (%d,%d) endpoint out of range" % (a, b))
        elif a == b:
            if g.parity == ODD:
                bad.append("odd-parity loop (%d,%d) belongs in loops" % (a, b))
            elif not g.is_external(a):
                bad.append("internal small loop at %d" % a)
    if g.parity == EVEN and (g.loops or g.crosses):
        bad.append("even parity carries no loop decorations or crosses")
    for entry in g.loops:
        v, of, af = entry
        if not 1 <= v <= n:
            bad.append("small loop vertex %d out of range" % v)
        elif not g.is_external(v):
            bad.append("internal small loop at %d" % v)
        if of not in (0, 1) or af not in (0, 1):
            bad.append("bad small-loop decoration at %d" % v)
    seen = {}
    for pair in g.endpoint_pairs():
        seen[pair] = seen.get(pair, 0) + 1
    for pair, cnt in seen.items():
        if cnt > 1:
            bad.append("multiple edge between %d and %d" % pair)
    cross_vertices = list(g.crosses)
    for v in cross_vertices:
        if not g.is_external(v):
            bad.append("cross on non-external vertex %d" % v)
    if len(set(cross_vertices)) != len(cross_vertices):
        bad.append("more than one cross on a vertex")
    if g.crosses and any(v in g.crosses for v, _, _ in g.loops):
        bad.append("small loop on a crossed vertex")
    val = g.valences()
    for v in range(g.v_ext + 1, n + 1):
        if val[v] < 3:
            bad.append("internal vertex %d has valence %d < 3" % (v, val[v]))
    for v in range(1, g.v_ext + 1):
        if val[v] == 0 and v not in cross_vertices:
            bad.append("external vertex %d carries no edge end" % v)
    if not _connected(g):
        bad.append("graph is disconnected from the circle")
    return bad


def _connected(g: DecoratedGraph) -> bool:
    # The circle ties all external vertices together.
    n = g.num_vertices
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for v in range(2, g.v_ext + 1):
        union(v, 1)
    for a, b in g.edges:
        if 1 <= a <= n and 1 <= b <= n:
            union(a, b)
    roots = {find(v) for v in range(1, n + 1)}
    return len(roots) <= 1


def is_zero_by_relations(g: DecoratedGraph) -> bool:
    """True if the graph is zero because of a multiple edge, an internal
    small loop, or a small loop on a crossed vertex (without looking at the
    decoration orbit)."""
    pairs = g.endpoint_pairs()
    if len(set(pairs)) != len(pairs):
        return True
    for a, b in g.edges:
        if a == b and not g.is_external(a):
            return True
    if g.crosses and any(v in g.crosses for v, _, _ in g.loops):
        return True
    return False


# ----------------------------------------------------------------------
# canonical forms


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _orbit_maps(v_ext: int, v_int: int, signed_internal: bool):
    """All allowed vertex relabellings as an array of label maps.

    Returns ``(maps, signs)`` where ``maps[m][old] = new`` (index 0 unused)
    and ``signs[m]`` is the sign of the rotation times, when
    ``signed_internal``, the sign of the internal permutation.
    """
    n = v_ext + v_int
    rot_maps = []
    rot_signs = []
    for r in range(v_ext):
        perm0 = [((i + r) % v_ext) for i in range(v_ext)]
        rot_signs.append(_perm_sign(perm0))
        rot_maps.append([0] + [p + 1 for p in perm0])
    int_maps = []
    int_signs = []
    base = list(range(v_int))
    for p in itertools.permutations(base):
        int_maps.append([v_ext + 1 + x for x in p])
        int_signs.append(_perm_sign(p) if signed_internal else 1)
    maps = np.empty((v_ext * len(int_maps), n + 1), dtype=np.int64)
    signs = np.empty(v_ext * len(int_maps), dtype=np.int64)
    m = 0
    for rmap, rsign in zip(rot_maps, rot_signs):
        for imap, isign in zip(int_maps, int_signs):
            maps[m, :v_ext + 1] = rmap
            maps[m, v_ext + 1:] = imap
            signs[m] = rsign * isign
            m += 1
    return maps, signs


def _row_inversion_signs(rows: np.ndarray) -> np.ndarray:
    """Sign of the permutation sorting each row (entries assumed distinct)."""
    m, n = rows.shape
    if n < 2:
        return np.ones(m, dtype=np.int64)
    i, j = np.triu_indices(n, 1)
    inv = (rows[:, i] > rows[:, j]).sum(axis=1)
    return np.where(inv % 2 == 0, 1, -1).astype(np.int64)


def _select_minimum(rows: np.ndarray, signs: np.ndarray):
    """Index of the lexicographically least row, or None on a sign clash."""
    if rows.shape[1] == 0:
        if signs.min() != signs.max():
            return None
        return 0
    idx = np.lexsort(rows.T[::-1])
    best = idx[0]
    eq = np.all(rows == rows[best], axis=1)
    chosen = signs[eq]
    if chosen.min() != chosen.max():
        return None
    return int(best)


def _canonical_odd(g: DecoratedGraph):
    maps, base_signs = _orbit_maps(g.v_ext, g.v_int, True)
    m = maps.shape[0]
    nv = g.num_vertices
    sign0 = 1
    for _, order_flag, arrow_flag in g.loops:
        sign0 *= (-1) ** (order_flag + arrow_flag)

    blocks = []
    signs = base_signs * sign0
    if g.edges:
        tails = np.array([e[0] for e in g.edges])
        heads = np.array([e[1] for e in g.edges])
        t = maps[:, tails]
        h = maps[:, heads]
        flips = (t > h).sum(axis=1)
        signs = signs * np.where(flips % 2 == 0, 1, -1)
        codes = np.minimum(t, h) * (nv + 2) + np.maximum(t, h)
        codes = np.sort(codes, axis=1)
        blocks.append(codes)
    if g.loops:
        lv = np.array([entry[0] for entry in g.loops])
        loops = np.sort(maps[:, lv], axis=1)
        blocks.append(loops)
    if g.crosses:
        cv = np.array(list(g.crosses))
        cvm = maps[:, cv]
        signs = signs * _row_inversion_signs(cvm)
        blocks.append(np.sort(cvm, axis=1))
    rows = np.concatenate(blocks, axis=1) if blocks else np.zeros((m, 0), int)
    best = _select_minimum(rows, signs)
    if best is None:
        return None
    mapping = maps[best]
    edges = tuple(sorted(
        (min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
        for a, b in g.edges))
    loops = tuple(sorted((int(mapping[entry[0]]), 0, 0) for entry in g.loops))
    crosses = tuple(sorted(int(mapping[v]) for v in g.crosses))
    canon = DecoratedGraph(ODD, g.v_ext, g.v_int,
                           tuple((int(a), int(b)) for a, b in edges),
                           loops, crosses)
    return canon, int(signs[best])


def _canonical_even(g: DecoratedGraph):
    maps, base_signs = _orbit_maps(g.v_ext, g.v_int, False)
    m = maps.shape[0]
    nv = g.num_vertices
    if g.edges:
        us = np.array([min(e) for e in g.edges])
        vs = np.array([max(e) for e in g.edges])
        u = maps[:, us]
        v = maps[:, vs]
        codes = np.minimum(u, v) * (nv + 2) + np.maximum(u, v)
        signs = base_signs * _row_inversion_signs(codes)
        rows = np.sort(codes, axis=1)
    else:
        signs = base_signs
        rows = np.zeros((m, 0), int)
    best = _select_minimum(rows, signs)
    if best is None:
        return None
    mapping = maps[best]
    relabeled = [(min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
                 for a, b in g.edges]
    edges = tuple((int(a), int(b)) for a, b in sorted(relabeled))
    canon = DecoratedGraph(EVEN, g.v_ext, g.v_int, edges)
    return canon, int(signs[best])


@lru_cache(maxsize=1 << 18)
def canonical_form(g: DecoratedGraph):
    """Canonical representative of the decoration orbit of ``g``.

    Returns ``(canonical, sign)`` with ``[g] = sign * [canonical]`` in the
    quotient space, or ``None`` when the graph is zero (multiple edge,
    internal small loop, or a decoration change identifying it with minus
    itself).
    """
    bad = validate(g)
    if bad:
        if is_zero_by_relations(g):
            return None
        raise ValueError("invalid graph: %s" % "; ".join(bad))
    if g.parity == ODD:
        return _canonical_odd(g)
    return _canonical_even(g)


def is_canonical(g: DecoratedGraph) -> bool:
    res = canonical_form(g)
    return res is not None and res[0] == g and res[1] == 1


# ----------------------------------------------------------------------
# linear combinations


class GraphVector:
    """Formal linear combination of canonical graphs with exact rational
    coefficients.  All terms share a parity; the empty vector is neutral."""

    __slots__ = ("_terms", "parity")

    def __init__(self, terms=(), parity=None):
        self._terms = {}
        self.parity = parity
        for coeff, graph in terms:
            self.add_graph(graph, coeff)

    def add_graph(self, graph: DecoratedGraph, coeff) -> None:
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        res = canonical_form(graph)
        if res is None:
            return
        canon, sign = res
        if self.parity is None:
            self.parity = canon.parity
        elif self.parity != canon.parity:
            raise ValueError("parity mismatch in GraphVector")
        new = self._terms.get(canon, Fraction(0)) + coeff * sign
        if new == 0:
            self._terms.pop(canon, None)
        else:
            self._terms[canon] = new

    @property
    def terms(self):
        """Sorted list of ``(coefficient, canonical graph)`` pairs."""
        return [(self._terms[g], g)
                for g in sorted(self._terms, key=DecoratedGraph.sort_key)]

    def coefficient(self, graph: DecoratedGraph) -> Fraction:
        res = canonical_form(graph)
        if res is None:
            return Fraction(0)
        canon, sign = res
        return self._terms.get(canon, Fraction(0)) * sign

    def is_zero(self) -> bool:
        return not self._terms

    def graphs(self):
        return sorted(self._terms, key=DecoratedGraph.sort_key)

    def scaled(self, factor) -> "GraphVector":
        factor = Fraction(factor)
        out = GraphVector(parity=self.parity)
        if factor != 0:
            out._terms = {g: c * factor for g, c in self._terms.items()}
        return out

    def __add__(self, other: "GraphVector") -> "GraphVector":
        return combine(self, other, 1, 1)

    def __sub__(self, other: "GraphVector") -> "GraphVector":
        return combine(self, other, 1, -1)

    def __eq__(self, other) -> bool:
        return isinstance(other, GraphVector) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        if not self._terms:
            return "GraphVector()"
        bits = ["%s * %s edges=%s" % (c, g.parity, g.edges)
                for c, g in self.terms[:4]]
        more = "" if len(self._terms) <= 4 else " ..."
        return "GraphVector(%s%s)" % ("; ".join(bits), more)


def combine(a: GraphVector, b: GraphVector, lam=1, mu=1) -> GraphVector:
    """lam * a + mu * b over the canonical basis."""
    if a.parity is not None and b.parity is not None and a.parity != b.parity:
        raise ValueError("parity mismatch: %s vs %s" % (a.parity, b.parity))
    out = GraphVector(parity=a.parity or b.parity)
    lam = Fraction(lam)
    mu = Fraction(mu)
    for g, c in a._terms.items():
        out._terms[g] = c * lam
    for g, c in b._terms.items():
        new = out._terms.get(g, Fraction(0)) + c * mu
        if new == 0:
            out._terms.pop(g, None)
        else:
            out._terms[g] = new
    if lam == 0:
        for g in [g for g, c in out._terms.items() if c == 0]:
            del out._terms[g]
    return out
