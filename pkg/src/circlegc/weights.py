"""Uni-trivalent graphs on a circle, STU reduction, and gl(N) weights.

A BN graph is an oriented circle with univalent endpoints plus trivalent
inner vertices, each inner vertex carrying a cyclic orientation of its
three half-edges; reversing the orientation at one vertex multiplies the
graph by -1.  The STU rewrite resolves an inner vertex with a leg on the
circle into the difference of the two ways of sliding its remaining
half-edges onto the circle, and repeating it turns every BN graph into a
combination of chord diagrams.  The gl(N) weight of a chord diagram is
N^c where c counts the closed curves obtained by traversing the circle
and jumping along chords; it extends linearly and, composed with the STU
reduction, gives a well defined functional on the quotient algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np


# ----------------------------------------------------------------------
# chord diagrams


@dataclass(frozen=True)
class ChordDiagram:
    """A circle with 2k points joined in pairs by chords.

    ``chords`` lists position pairs (a, b) with 1 <= a < b <= 2k; the
    positions 1..2k sit on the circle in cyclic order.  ``mark`` is the
    index of the arc carrying the marked point (arc t runs from point t to
    its successor), or None.
    """
    chords: tuple
    mark: int = None

    @property
    def num_points(self) -> int:
        return 2 * len(self.chords)

    def validate(self):
        seen = sorted(p for pair in self.chords for p in pair)
        if seen != list(range(1, self.num_points + 1)):
            raise ValueError("chord endpoints must hit 1..2k exactly once")
        if self.mark is not None and self.chords and \
                not 1 <= self.mark <= self.num_points:
            raise ValueError("mark out of range")

    def rotated(self, r: int) -> "ChordDiagram":
        n = self.num_points
        if n == 0:
            return self

        def m(p):
            return (p - 1 + r) % n + 1

        chords = tuple(sorted(tuple(sorted((m(a), m(b))))
                              for a, b in self.chords))
        mark = None if self.mark is None else m(self.mark)
        return ChordDiagram(chords, mark)

    def canonical(self) -> "ChordDiagram":
        """Least representative over all rotations of the circle."""
        n = self.num_points
        if n == 0:
            return ChordDiagram(())
        reps = [self.rotated(r) for r in range(n)]
        return min(reps, key=lambda d: (d.chords, -1 if d.mark is None
                                        else d.mark))

    def symmetries(self):
        """Rotations mapping the (unmarked) chord set to itself."""
        base = ChordDiagram(self.chords).rotated(0).chords
        out = []
        for r in range(self.num_points or 1):
            if ChordDiagram(self.chords).rotated(r).chords == base:
                out.append(r)
        return out


def forget_mark(d: ChordDiagram) -> ChordDiagram:
    """Drop the marked point."""
    return ChordDiagram(d.chords)


def marked_average(d: ChordDiagram):
    """Uniform average over the inequivalent markings of a diagram.

    Puts one marked point on each arc, identifies markings related by a
    rotational symmetry of the diagram, and averages the classes; the
    composition with ``forget_mark`` gives back the diagram.
    Returns a list of (coefficient, marked ChordDiagram) pairs.
    """
    if d.mark is not None:
        raise ValueError("diagram is already marked")
    n = d.num_points
    if n == 0:
        return [(Fraction(1), d)]
    classes = {}
    for t in range(1, n + 1):
        m = ChordDiagram(d.chords, t).canonical()
        classes.setdefault((m.chords, m.mark), m)
    reps = sorted(classes.values(), key=lambda x: (x.chords, x.mark))
    w = Fraction(1, len(reps))
    return [(w, m) for m in reps]


# ----------------------------------------------------------------------
# weight polynomials


class WeightPolynomial:
    """Integer polynomial in the rank indeterminate N."""

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for power, c in dict(coeffs or {}).items():
            if c:
                self.coeffs[int(power)] = c

    @classmethod
    def monomial(cls, power, coeff=1):
        return cls({power: coeff})

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return WeightPolynomial(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) - c
        return WeightPolynomial(out)

    def scaled(self, f):
        return WeightPolynomial({p: c * f for p, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, WeightPolynomial) and \
            self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, n):
        return sum(c * n ** p for p, c in self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for p in sorted(self.coeffs, reverse=True):
            c = self.coeffs[p]
            term = "N^%d" % p if p > 1 else ("N" if p == 1 else "1")
            if c == 1 and p:
                bits.append(term)
            elif c == -1 and p:
                bits.append("-" + term)
            else:
                bits.append("%s*%s" % (c, term) if p else str(c))
        return " + ".join(bits).replace("+ -", "- ")


def gl_weight(d: ChordDiagram) -> WeightPolynomial:
    """gl(N) weight of a chord diagram in the defining representation.

    Each chord inserts the Casimir sum E_ij (x) E_ji at its endpoints;
    tracing around the circle the Kronecker deltas close up into loops:
    follow an arc to a chord endpoint, jump to the other endpoint, and
    continue along the circle.  The result is N to the number of loops.
    """
    n = d.num_points
    if n == 0:
        return WeightPolynomial.monomial(1)
    partner = {}
    for a, b in d.chords:
        partner[a] = b
        partner[b] = a
    seen = set()
    cycles = 0
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycles += 1
        t = start
        while t not in seen:
            seen.add(t)
            end = t % n + 1
            t = partner[end]
    return WeightPolynomial.monomial(cycles)


def gl_weight_by_traces(d: ChordDiagram, N: int) -> int:
    """Evaluate the gl(N) weight by literal matrix traces.

    Each chord sums E_ij at one endpoint against E_ji at the other; the
    circle multiplies the inserted matrices in cyclic order and takes
    the trace.  Brute force over all index assignments, as a slow
    independent check of ``gl_weight``.
    """
    n = d.num_points
    if n == 0:
        return N          # trace of the identity: the bare circle
    first = {}
    second = {}
    for c, (a, b) in enumerate(d.chords):
        first[a] = c
        second[b] = c
    units = np.zeros((N, N, N, N), dtype=np.int64)
    for i in range(N):
        for j in range(N):
            units[i, j, i, j] = 1
    total = 0
    for assign in itertools.product(range(N), repeat=2 * len(d.chords)):
        mat = np.eye(N, dtype=np.int64)
        for p in range(1, n + 1):
            if p in first:
                i, j = assign[2 * first[p]], assign[2 * first[p] + 1]
            else:
                j, i = assign[2 * second[p]], assign[2 * second[p] + 1]
            mat = mat @ units[i, j]
        total += int(np.trace(mat))
    return total


# ----------------------------------------------------------------------
# BN graphs and the STU rewrite

CIRCLE = "c"
INNER = "v"


@dataclass(frozen=True)
class BNGraph:
    """Circle with univalent points 1..n_circle plus trivalent inner
    vertices 1..n_inner.

    Each edge joins two ends; an end is ("c", point) or ("v", vertex,
    slot) with slot in {0, 1, 2}.  The slot numbers give the cyclic
    orientation at the vertex; swapping two slots is the same graph with
    the opposite sign, which callers account for themselves.
    """
    n_circle: int
    n_inner: int
    edges: tuple

    def validate(self):
        used_c = []
        used_v = []
        for x, y in self.edges:
            for end in (x, y):
                if end[0] == CIRCLE:
                    if not 1 <= end[1] <= self.n_circle:
                        raise ValueError("circle point out of range")
                    used_c.append(end[1])
                elif end[0] == INNER:
                    v, s = end[1], end[2]
                    if not (1 <= v <= self.n_inner and s in (0, 1, 2)):
                        raise ValueError("bad inner end %r" % (end,))
                    used_v.append((v, s))
                else:
                    raise ValueError("unknown end %r" % (end,))
        if sorted(used_c) != list(range(1, self.n_circle + 1)):
            raise ValueError("each circle point must be used exactly once")
        want = [(v, s) for v in range(1, self.n_inner + 1) for s in (0, 1, 2)]
        if sorted(used_v) != want:
            raise ValueError("each inner vertex needs its three slots used")

    def degree(self) -> int:
        return len(self.edges) - self.n_inner


def chord_diagram_of(g: BNGraph) -> ChordDiagram:
    if g.n_inner:
        raise ValueError("graph still has inner vertices")
    chords = tuple(sorted(tuple(sorted((x[1], y[1])))
                          for x, y in g.edges))
    return ChordDiagram(chords)


def bn_of_chords(d: ChordDiagram) -> BNGraph:
    edges = tuple(((CIRCLE, a), (CIRCLE, b)) for a, b in d.chords)
    return BNGraph(d.num_points, 0, edges)


def _resolve_once(g: BNGraph, vertex: int, slot: int):
    """One STU step at the given circle-attached slot.

    The leg at ``slot`` ends on circle point p.  The point splits in two;
    reading the vertex orientation onward from the leg, the last half-edge
    lands first (at p) and the next lands second (at the new point after
    p) in the positive term, and the other way around in the negative one.
    The convention makes the tripod resolve to N^3 - N under the gl(N)
    weight, matching the structure constant contraction.
    Returns [(+1, graph), (-1, graph)].
    """
    leg = None
    others = {}
    rest = []
    for x, y in g.edges:
        ends = (x, y)
        hit = [e for e in ends if e[0] == INNER and e[1] == vertex]
        if not hit:
            rest.append((x, y))
            continue
        if len(hit) == 2:
            raise ValueError("self-loop at an inner vertex")
        other = ends[0] if ends[1] in hit else ends[1]
        s = hit[0][2]
        if s == slot:
            if other[0] != CIRCLE:
                raise ValueError("slot does not lead to the circle")
            leg = other[1]
        else:
            others[s] = other
    if leg is None:
        raise ValueError("no circle leg at that slot")
    first = others[(slot + 1) % 3]
    second = others[(slot + 2) % 3]

    def rebuild(end_at_p, end_at_q, p, q):
        def shift(end):
            if end[0] == CIRCLE and end[1] > leg:
                return (CIRCLE, end[1] + 1)
            return end

        def renumber(end):
            if end[0] == INNER:
                v, s = end[1], end[2]
                if v > vertex:
                    return (INNER, v - 1, s)
            return end

        edges = [(renumber(shift(x)), renumber(shift(y))) for x, y in rest]
        edges.append((renumber(shift(end_at_p)), (CIRCLE, p)))
        edges.append((renumber(shift(end_at_q)), (CIRCLE, q)))
        return BNGraph(g.n_circle + 1, g.n_inner - 1, tuple(edges))

    p, q = leg, leg + 1
    return [(1, rebuild(second, first, p, q)),
            (-1, rebuild(first, second, p, q))]


def stu_resolve(g: BNGraph, chooser=None):
    """Rewrite a BN graph into chord diagrams by repeated STU steps.

    Returns a list of (coefficient, ChordDiagram) pairs with canonical
    diagrams, merged and sorted.  ``chooser`` maps a graph to a (vertex,
    slot) pair with a circle leg and exists so tests can confirm the
    gl(N) weight does not depend on the resolution order; the default
    picks the first such pair.
    """
    g.validate()

    def default_chooser(h):
        for x, y in sorted(h.edges):
            for a, b in ((x, y), (y, x)):
                if a[0] == INNER and b[0] == CIRCLE:
                    return a[1], a[2]
        raise ValueError("no inner vertex touches the circle")

    pick = chooser or default_chooser
    acc = {}

    def walk(coeff, h):
        if h.n_inner == 0:
            d = chord_diagram_of(h).canonical()
            acc[d.chords] = acc.get(d.chords, 0) + coeff
            return
        vertex, slot = pick(h)
        for s, h2 in _resolve_once(h, vertex, slot):
            walk(coeff * s, h2)

    walk(Fraction(1), g)
    return [(c, ChordDiagram(ch)) for ch, c in sorted(acc.items()) if c]


def weight_of_bn(g: BNGraph, chooser=None) -> WeightPolynomial:
    """gl(N) weight of a BN graph: resolve by STU, then weigh."""
    out = WeightPolynomial()
    for coeff, d in stu_resolve(g, chooser=chooser):
        out = out + gl_weight(d).scaled(coeff)
    return out


# ----------------------------------------------------------------------
# the algebra of chord diagrams modulo STU


def _matchings(points):
    """Perfect matchings of an ordered point list, as pair tuples."""
    if not points:
        yield ()
        return
    a, rest = points[0], points[1:]
    for i, b in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield ((a, b),) + tail


@lru_cache(maxsize=None)
def chord_diagram_basis(k: int):
    """Canonical k-chord diagrams up to rotation, sorted."""
    found = {}
    for m in _matchings(tuple(range(1, 2 * k + 1))):
        d = ChordDiagram(tuple(sorted(tuple(sorted(p)) for p in m)))
        c = d.canonical()
        found[c.chords] = c
    return [found[key] for key in sorted(found)]


def _one_vertex_graphs(k: int):
    """Degree-k BN graphs with a single inner vertex, all legs on the
    circle, up to nothing (duplicates are harmless for rank purposes)."""
    n = 2 * k - 1
    out = []
    for legs in itertools.combinations(range(1, n + 1), 3):
        others = [p for p in range(1, n + 1) if p not in legs]
        for m in _matchings(tuple(others)):
            edges = tuple(((INNER, 1, s), (CIRCLE, p))
                          for s, p in enumerate(legs))
            edges += tuple(((CIRCLE, a), (CIRCLE, b)) for a, b in m)
            out.append(BNGraph(n, 1, edges))
    return out


@lru_cache(maxsize=None)
def a_space_dim(k: int) -> int:
    """Dimension of the degree-k chord diagram space modulo STU.

    Brute force: span the canonical k-chord diagrams, generate every
    relation obtained by resolving a one-vertex graph through two
    different circle legs, and subtract the rank of the relation matrix.
    """
    if k < 0:
        raise ValueError("negative degree")
    basis = chord_diagram_basis(k)
    index = {d.chords: i for i, d in enumerate(basis)}
    rows = []
    for g in _one_vertex_graphs(k):
        expansions = []
        for slot in (0, 1, 2):
            vec = [Fraction(0)] * len(basis)
            for s, h in _resolve_once(g, 1, slot):
                d = chord_diagram_of(h).canonical()
                vec[index[d.chords]] += s
            expansions.append(vec)
        for i in range(3):
            for j in range(i + 1, 3):
                row = [a - b for a, b in zip(expansions[i], expansions[j])]
                if any(row):
                    rows.append(row)
    from .homology import _rank
    rank = _rank(rows, len(basis)) if rows else 0
    return len(basis) - rank
