"""Gaussian elimination over the exact scalar field.

Everything here works on nested lists/tuples of ExactScalar.  Pivoting is by
first nonzero entry; the field is exact, so no magnitude considerations
apply.  Used for basis inversion, derivation extension, and the nullspace of
the derivation constraint system.
"""
from __future__ import annotations

from typing import List, Sequence

from .octonion import ExactScalar

Matrix = List[List[ExactScalar]]

__all__ = ["to_matrix", "rref", "rank", "nullspace", "solve", "inverse", "matmul"]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[ExactScalar.coerce(v) for v in row] for row in rows]


def rref(mat: Sequence[Sequence[ExactScalar]]):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = [list(row) for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for rr in range(r, nrows):
            if not m[rr][c].is_zero():
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for rr in range(nrows):
            if rr != r and not m[rr][c].is_zero():
                f = m[rr][c]
                m[rr] = [a - f * b for a, b in zip(m[rr], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: Sequence[Sequence[ExactScalar]]) -> int:
    return len(rref(mat)[1])


def nullspace(mat: Sequence[Sequence[ExactScalar]]) -> List[List[ExactScalar]]:
    """Basis of the right nullspace, one vector per free column."""
    red, pivots = rref(mat)
    ncols = len(mat[0]) if mat else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = ExactScalar.zero()
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = ExactScalar.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve(mat: Sequence[Sequence[ExactScalar]],
          rhs: Sequence[ExactScalar]) -> List[ExactScalar]:
    """One solution of mat x = rhs; raises ValueError if inconsistent."""
    aug = [list(row) + [ExactScalar.coerce(b)] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug)
    ncols = len(mat[0])
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    zero = ExactScalar.zero()
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def inverse(mat: Sequence[Sequence[ExactScalar]]) -> Matrix:
    n = len(mat)
    one = ExactScalar.one()
    zero = ExactScalar.zero()
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence[ExactScalar]],
           b: Sequence[Sequence[ExactScalar]]) -> Matrix:
    zero = ExactScalar.zero()
    n, k, m = len(a), len(b), len(b[0])
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            v = ai[t]
            if v.is_zero():
                continue
            bt = b[t]
            row = out[i]
            for j in range(m):
                if not bt[j].is_zero():
                    row[j] = row[j] + v * bt[j]
    return out


def sparse_nullspace(rows, ncols: int):
    """Right nullspace of a system given as sparse rows {col: ExactScalar}.

    Suited to large, very sparse constraint systems.  Returns (rank, basis)
    with basis vectors as dense ExactScalar lists.
    """
    reduced = {}  # pivot col -> normalized row dict
    for row in rows:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while row:
            c = min(row)
            if c in reduced:
                f = row.pop(c)
                for cc, vv in reduced[c].items():
                    if cc == c:
                        continue
                    nv = row.get(cc, None)
                    nv = (nv - f * vv) if nv is not None else -f * vv
                    if nv.is_zero():
                        row.pop(cc, None)
                    else:
                        row[cc] = nv
            else:
                inv = row[c].inverse()
                row = {cc: vv * inv for cc, vv in row.items()}
                # back-substitute into earlier pivot rows
                for pc, prow in reduced.items():
                    if c in prow:
                        f = prow.pop(c)
                        for cc, vv in row.items():
                            if cc == c:
                                continue
                            nv = prow.get(cc, None)
                            nv = (nv - f * vv) if nv is not None else -f * vv
                            if nv.is_zero():
                                prow.pop(cc, None)
                            else:
                                prow[cc] = nv
                reduced[c] = row
                break
    pivots = sorted(reduced)
    free = [c for c in range(ncols) if c not in reduced]
    zero = ExactScalar.zero()
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = ExactScalar.one()
        for pc in pivots:
            coef = reduced[pc].get(fc)
            if coef is not None:
                vec[pc] = -coef
        basis.append(vec)
    return len(pivots), basis
