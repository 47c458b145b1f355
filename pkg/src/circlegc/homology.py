"""Exact linear algebra over the rationals for the graph complexes.

Matrices of the coboundary between enumerated bases, kernels and ranks by
dense Gaussian elimination on Fractions, and cohomology dimensions
dim H = dim ker - rank of the incoming map.  Everything is deterministic:
bases are sorted by canonical encoding and pivots are chosen first-come.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import DecoratedGraph, GraphVector, degree, order
from .coboundary import delta, delta_vector
from .enumeration import basis


class SparseRationalMatrix:
    """Column-sparse exact matrix indexed by canonical basis lists.

    Entry (i, j) is the coefficient of row basis graph i in the image of
    column basis graph j.
    """

    def __init__(self, row_basis, col_basis):
        self.row_basis = list(row_basis)
        self.col_basis = list(col_basis)
        self.row_index = {g.sort_key(): i
                          for i, g in enumerate(self.row_basis)}
        self.columns = [dict() for _ in self.col_basis]

    @property
    def shape(self):
        return (len(self.row_basis), len(self.col_basis))

    def set_entry(self, i: int, j: int, value: Fraction):
        if value:
            self.columns[j][i] = value
        else:
            self.columns[j].pop(i, None)

    def entry(self, i: int, j: int) -> Fraction:
        return self.columns[j].get(i, Fraction(0))

    def column(self, j: int) -> dict:
        return dict(self.columns[j])

    def triplets(self):
        """Deterministic (row, col, value) listing."""
        out = []
        for j, col in enumerate(self.columns):
            for i in sorted(col):
                out.append((i, j, col[i]))
        return out

    def dense_rows(self):
        nr, nc = self.shape
        rows = [[Fraction(0)] * nc for _ in range(nr)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def compose(self, other: "SparseRationalMatrix") -> "SparseRationalMatrix":
        """self @ other; other's row basis must be self's column basis."""
        if [g.sort_key() for g in other.row_basis] != \
                [g.sort_key() for g in self.col_basis]:
            raise ValueError("basis mismatch in composition")
        out = SparseRationalMatrix(self.row_basis, other.col_basis)
        for j, col in enumerate(other.columns):
            acc = {}
            for mid, v in col.items():
                for i, w in self.columns[mid].items():
                    acc[i] = acc.get(i, Fraction(0)) + v * w
            for i, v in acc.items():
                if v:
                    out.columns[j][i] = v
        return out

    def is_zero(self) -> bool:
        return all(not col for col in self.columns)

    def rank(self) -> int:
        return _rank(self.dense_rows(), len(self.col_basis))

    def kernel(self):
        """Kernel basis as coefficient lists over col_basis, normalized so
        the first nonzero coefficient of each vector is +1."""
        return _kernel(self.dense_rows(), len(self.col_basis))


def _rank(rows, ncols) -> int:
    rank = 0
    col = 0
    nrows = len(rows)
    while rank < nrows and col < ncols:
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(nrows):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv
                row = rows[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        rank += 1
        col += 1
    return rank


def _kernel(rows, ncols):
    nrows = len(rows)
    pivots = []       # (row, col) of each pivot
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for c in range(col, ncols):
            prow[c] *= inv
        for r in range(nrows):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                row = rows[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        pivots.append((rank, col))
        rank += 1
        col += 1
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    out = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, c in pivots:
            vec[c] = -rows[r][fc]
        lead = next(v for v in vec if v)
        if lead != 1:
            vec = [v / lead for v in vec]
        out.append(vec)
    return out


@dataclass
class CohomologyReport:
    parity: str
    k: int
    m: int
    dim_kernel: int
    rank_previous: int
    dim_H: int
    cocycle_basis: list = field(default_factory=list)


def delta_matrix(parity: str, k: int, m: int,
                 op=delta, basis_fn=basis) -> SparseRationalMatrix:
    """Matrix of the coboundary from degree m to degree m + 1."""
    src = basis_fn(parity, k, m)
    tgt = basis_fn(parity, k, m + 1)
    mat = SparseRationalMatrix(tgt, src)
    for j, g in enumerate(src):
        for coeff, h in op(g).terms:
            i = mat.row_index[h.sort_key()]
            mat.columns[j][i] = mat.columns[j].get(i, Fraction(0)) + coeff
        mat.columns[j] = {i: v for i, v in mat.columns[j].items() if v}
    return mat


def cohomology(parity: str, k: int, m: int,
               op=delta, basis_fn=basis) -> CohomologyReport:
    """Exact cohomology at bidegree (k, m) for the chosen coboundary."""
    out_mat = delta_matrix(parity, k, m, op=op, basis_fn=basis_fn)
    ker = out_mat.kernel()
    if m - 1 >= 0 or basis_fn(parity, k, m - 1):
        rank_prev = delta_matrix(parity, k, m - 1,
                                 op=op, basis_fn=basis_fn).rank()
    else:
        rank_prev = 0
    src = out_mat.col_basis
    cocycles = []
    for vec in ker:
        v = GraphVector(parity=parity)
        for c, g in zip(vec, src):
            if c:
                v.add_graph(g, c)
        cocycles.append(v)
    return CohomologyReport(parity, k, m, len(ker), rank_prev,
                            len(ker) - rank_prev, cocycles)


def verify_cocycle(v: GraphVector, op=delta_vector) -> bool:
    """True iff the vector is homogeneous and exactly closed."""
    grading = {(order(g), degree(g)) for _, g in v.terms}
    if len(grading) > 1:
        raise ValueError("inhomogeneous graph vector")
    return op(v).is_zero()


def chord_part(v: GraphVector) -> GraphVector:
    """Restriction to the terms with no internal vertices."""
    out = GraphVector(parity=v.parity)
    for coeff, g in v.terms:
        if g.v_int == 0:
            out.add_graph(g, coeff)
    return out
