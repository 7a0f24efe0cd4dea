"""The 14-dimensional Lie algebra of cross-product derivations.

A derivation is a linear map D on Im O' with
D(u x v) = Du x v + u x Dv.  The module provides the Leibniz constraint
system and its nullspace (dimension 14), extension of a derivation from its
values on a spanning triple, root vectors and the Cartan subalgebra in the
weight basis, the five nilpotent conjugacy classes relevant to sl2 embeddings,
and the rational regularity invariant I = 54 C / A^3 built from the
characteristic polynomial X^7 - A X^5 + B X^3 - C X.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from . import exactlinalg as ela
from .bases import NullTriple
from .octonion import (
    ExactScalar,
    ImOct,
    IUNIT,
    SQRT2,
    cross,
    qform,
    triple_product,
    _BASIS_VECTORS,
    _CROSS,
)

__all__ = [
    "Derivation",
    "CartanVector",
    "Sl2Class",
    "derivation_defect",
    "extend_derivation",
    "cartan_projection",
    "regularity_invariant",
    "sl2_nilpotent",
    "root_vector",
    "cartan_element",
    "char_family",
    "leibniz_nullspace",
    "g2_dimension",
    "char_poly_coefficients",
]

ROOT_NAMES = ("alpha", "-alpha", "beta", "-beta", "delta", "-delta")

_Z = ExactScalar.zero()
_ONE = ExactScalar.one()


def _zeros():
    return [[_Z] * 7 for _ in range(7)]


class Derivation:
    """Linear map on Im O' stored as an exact 7x7 matrix in a tagged basis."""

    __slots__ = ("matrix", "basis")

    def __init__(self, matrix: Sequence[Sequence], basis: str = "c"):
        rows = tuple(tuple(ExactScalar.coerce(v) for v in row) for row in matrix)
        if len(rows) != 7 or any(len(r) != 7 for r in rows):
            raise ValueError("Derivation matrix must be 7x7")
        self.matrix = rows
        self.basis = basis

    @classmethod
    def from_entries(cls, entries: dict, basis: str = "c") -> "Derivation":
        m = _zeros()
        for (i, j), v in entries.items():
            m[i][j] = ExactScalar.coerce(v)
        return cls(m, basis)

    def apply(self, x: ImOct) -> ImOct:
        xx = x.convert(self.basis)
        out = [sum((self.matrix[i][j] * xx.coords[j] for j in range(7)), _Z)
               for i in range(7)]
        return ImOct(out, self.basis)

    __call__ = apply

    def convert(self, basis: str) -> "Derivation":
        if basis == self.basis:
            return self
        p_src = _change_matrix(self.basis)   # src coords -> m coords
        p_dst = _change_matrix(basis)        # dst coords -> m coords
        fwd = ela.matmul(ela.inverse(p_dst), p_src)   # src -> dst
        back = ela.matmul(ela.inverse(p_src), p_dst)  # dst -> src
        m = ela.matmul(fwd, ela.matmul(list(map(list, self.matrix)), back))
        return Derivation(m, basis)

    def __add__(self, other: "Derivation") -> "Derivation":
        o = other.convert(self.basis)
        return Derivation([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.matrix, o.matrix)], self.basis)

    def __sub__(self, other: "Derivation") -> "Derivation":
        o = other.convert(self.basis)
        return Derivation([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.matrix, o.matrix)], self.basis)

    def __neg__(self) -> "Derivation":
        return Derivation([[-a for a in r] for r in self.matrix], self.basis)

    def __mul__(self, scalar) -> "Derivation":
        s = ExactScalar.coerce(scalar)
        return Derivation([[a * s for a in r] for r in self.matrix], self.basis)

    __rmul__ = __mul__

    def compose(self, other: "Derivation") -> "Derivation":
        o = other.convert(self.basis)
        return Derivation(ela.matmul(list(map(list, self.matrix)),
                                     list(map(list, o.matrix))), self.basis)

    def bracket(self, other: "Derivation") -> "Derivation":
        return self.compose(other) - other.compose(self)

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.matrix for v in row)

    def __eq__(self, other):
        if isinstance(other, Derivation):
            return (self - other).is_zero()
        return NotImplemented

    def to_floats(self) -> np.ndarray:
        return np.array([[complex(v) for v in row] for row in self.matrix])

    def __repr__(self):
        nz = sum(0 if v.is_zero() else 1 for row in self.matrix for v in row)
        return f"Derivation(basis={self.basis!r}, nonzeros={nz})"


def _change_matrix(basis: str):
    """Columns are the m-coordinates of the tagged basis vectors."""
    vecs = _BASIS_VECTORS[basis]
    return [[vecs[j].coords[1 + i] for j in range(7)] for i in range(7)]


@dataclass(frozen=True)
class CartanVector:
    """Coordinates (r, s) on the Cartan subalgebra
    diag(r+s, r, s, 0, -s, -r, -r-s) in the weight basis."""

    r: complex
    s: complex


class Sl2Class(enum.Enum):
    """The five nilpotent classes arising from sl2 embeddings.

    The value triple flags which of the three distinguished root vectors
    (e_-alpha, e_-beta, e_delta) enter the nilpotent representative; the
    Jordan type of the representative on the 7-dimensional module is noted.
    """

    PRINCIPAL = ("principal", (1, 1, 0), (7,))
    SHORT_BETA = ("short_beta", (0, 1, 0), (3, 2, 2))
    LONG_ALPHA = ("long_alpha", (1, 0, 0), (2, 2, 1, 1, 1))
    CLASS4 = ("class4", (0, 1, 1), (3, 3, 1))
    CLASS5 = ("class5", (1, 0, 1), (3, 3, 1))

    def __init__(self, label, higgs, jordan):
        self.label = label
        self.higgs_triple = higgs
        self.jordan_type = jordan

    @classmethod
    def from_label(cls, label: str) -> "Sl2Class":
        for member in cls:
            if member.label == label:
                return member
        raise ValueError(f"unknown sl2 class {label!r}")


_I_SQRT2 = IUNIT * SQRT2

_ROOT_ENTRIES = {
    "alpha": {(1, 2): _ONE, (4, 5): _ONE},
    "-alpha": {(2, 1): _ONE, (5, 4): _ONE},
    "beta": {(0, 1): _ONE, (2, 3): _I_SQRT2, (3, 4): _I_SQRT2, (5, 6): _ONE},
    "-beta": {(1, 0): _ONE, (3, 2): -_I_SQRT2, (4, 3): -_I_SQRT2, (6, 5): _ONE},
    "delta": {(0, 5): _ONE, (1, 6): _ONE},
    "-delta": {(5, 0): _ONE, (6, 1): _ONE},
}


def root_vector(name: str) -> Derivation:
    """Root vector in the weight basis; names alpha, -alpha, beta, -beta,
    delta, -delta."""
    try:
        entries = _ROOT_ENTRIES[name]
    except KeyError:
        raise ValueError(f"unknown root {name!r}; use one of {ROOT_NAMES}")
    return Derivation.from_entries(entries, "c")


def cartan_element(r, s) -> Derivation:
    r = ExactScalar.coerce(r)
    s = ExactScalar.coerce(s)
    diag = (r + s, r, s, _Z, -s, -r, -r - s)
    return Derivation.from_entries({(k, k): diag[k] for k in range(7)}, "c")


def char_family(a, b) -> Derivation:
    """conj(a) e_alpha + a e_-alpha + conj(b) e_beta + b e_-beta.

    The two-parameter family whose characteristic polynomial is
    X^7 - A X^5 + (A^2/4) X^3 - C X with A = 2|a|^2 + 6|b|^2 and
    C = 4|a|^2|b|^4 + 4|b|^6.
    """
    a = ExactScalar.coerce(a)
    b = ExactScalar.coerce(b)
    ac, bc = a.conjugate(), b.conjugate()
    return (root_vector("alpha") * ac + root_vector("-alpha") * a
            + root_vector("beta") * bc + root_vector("-beta") * b)


def sl2_nilpotent(cls: "Sl2Class | str") -> Derivation:
    """Nilpotent representative of the given sl2 class."""
    if isinstance(cls, str):
        cls = Sl2Class.from_label(cls)
    na, nb, nd = cls.higgs_triple
    out = Derivation(_zeros(), "c")
    if na:
        out = out + root_vector("-alpha")
    if nb:
        out = out + root_vector("-beta")
    if nd:
        out = out + root_vector("delta")
    return out


# ---------------------------------------------------------------------------
# Leibniz constraint system
# ---------------------------------------------------------------------------
def derivation_defect(d: Derivation) -> float:
    """Largest coordinate magnitude of D(va x vb) - Dva x vb - va x Dvb
    over all basis pairs; exactly 0.0 for a derivation."""
    basis = d.basis
    vecs = [ImOct.basis_vector(basis, p) for p in range(7)]
    images = [d.apply(v) for v in vecs]
    worst = 0.0
    exact_zero = True
    for a in range(7):
        for b in range(7):
            lhs = d.apply(_structure_vector(basis, a, b))
            rhs = cross(images[a], vecs[b]) + cross(vecs[a], images[b])
            diff = lhs - rhs
            if not diff.is_zero():
                exact_zero = False
                worst = max(worst, float(np.max(np.abs(diff.to_floats()))))
    return 0.0 if exact_zero else worst


def _structure_vector(basis: str, a: int, b: int) -> ImOct:
    coords = [_Z] * 7
    for c, coef in _CROSS[basis][a][b]:
        coords[c] = coef
    return ImOct(coords, basis)


def leibniz_nullspace(basis: str = "r"):
    """Basis of the space of derivations, as exact 7x7 matrices.

    Builds the 343-equation constraint system on the 49 matrix unknowns in
    the chosen basis and returns its nullspace; the span has dimension 14.
    """
    tensor = _CROSS[basis]
    g = [[{c: coef for c, coef in tensor[a][b]} for b in range(7)]
         for a in range(7)]
    rows = []
    for a in range(7):
        for b in range(7):
            gab = g[a][b]
            for c in range(7):
                row = {}

                def _acc(col, val):
                    cur = row.get(col)
                    row[col] = val if cur is None else cur + val

                for t, coef in gab.items():
                    _acc(c * 7 + t, coef)            # D[c][t] G[a][b][t]
                for t in range(7):
                    coef = g[t][b].get(c)
                    if coef is not None:
                        _acc(t * 7 + a, -coef)       # -D[t][a] G[t][b][c]
                    coef = g[a][t].get(c)
                    if coef is not None:
                        _acc(t * 7 + b, -coef)       # -D[t][b] G[a][t][c]
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    rows.append(row)
    rank, null = ela.sparse_nullspace(rows, 49)
    mats = []
    for vec in null:
        mats.append(Derivation([[vec[i * 7 + j] for j in range(7)]
                                for i in range(7)], basis))
    return mats


def g2_dimension(basis: str = "r") -> int:
    return len(leibniz_nullspace(basis))


# ---------------------------------------------------------------------------
# extension from a spanning triple
# ---------------------------------------------------------------------------
def extend_derivation(triple, images) -> Derivation:
    """Unique derivation with the given values on a spanning triple.

    `triple` is a NullTriple or any three imaginary octonions (u, v, w) with
    Omega(u, v, w) != 0; `images` are the prescribed (Du, Dv, Dw).  The
    prescription must satisfy the six orthogonality constraints
    q(Dx, y) + q(x, Dy) = 0 and the cyclic constraint
    Omega(Du,v,w) + Omega(u,Dv,w) + Omega(u,v,Dw) = 0; a ValueError is
    raised otherwise.  The result is returned in the real basis tag "m".
    """
    if isinstance(triple, NullTriple):
        u, v, w = triple.vectors
    else:
        u, v, w = triple
    u, v, w = u.convert("m"), v.convert("m"), w.convert("m")
    if triple_product(u, v, w).is_zero():
        raise ValueError("triple is degenerate: Omega(u, v, w) = 0")
    du, dv, dw = (x.convert("m") for x in images)

    pairs = (("u", u, du), ("v", v, dv), ("w", w, dw))
    for (n1, x, dx) in pairs:
        if not qform(dx, x).is_zero():
            raise ValueError(f"q(D{n1}, {n1}) must vanish")
    for (n1, x, dx), (n2, y, dy) in ((pairs[0], pairs[1]),
                                     (pairs[0], pairs[2]),
                                     (pairs[1], pairs[2])):
        if not (qform(dx, y) + qform(x, dy)).is_zero():
            raise ValueError(f"q(D{n1}, {n2}) + q({n1}, D{n2}) must vanish")
    cyc = (triple_product(du, v, w) + triple_product(u, dv, w)
           + triple_product(u, v, dw))
    if not cyc.is_zero():
        raise ValueError("cyclic Omega constraint violated")

    uv = cross(u, v)
    d_uv = cross(du, v) + cross(u, dv)
    frame = [uv, u, v, cross(uv, w), cross(u, w), cross(v, w), w]
    d_frame = [
        d_uv,
        du,
        dv,
        cross(d_uv, w) + cross(uv, dw),
        cross(du, w) + cross(u, dw),
        cross(dv, w) + cross(v, dw),
        dw,
    ]
    fmat = [[frame[j].coords[i] for j in range(7)] for i in range(7)]
    dmat = [[d_frame[j].coords[i] for j in range(7)] for i in range(7)]
    return Derivation(ela.matmul(dmat, ela.inverse(fmat)), "m")


# ---------------------------------------------------------------------------
# Cartan projection and the regularity invariant
# ---------------------------------------------------------------------------
def cartan_projection(d: Derivation, tol: float = 1e-9) -> CartanVector:
    """Component of d in the Cartan subalgebra, read off the diagonal.

    Root vectors are strictly off-diagonal in the weight basis, so the
    diagonal of any derivation matches diag(r+s, r, s, 0, -s, -r, -r-s);
    the overdetermined fit must be consistent to `tol`.
    """
    m = d.convert("c").to_floats()
    diag = np.diagonal(m)
    design = np.array([[1, 1], [1, 0], [0, 1], [0, 0],
                       [0, -1], [-1, 0], [-1, -1]], dtype=float)
    sol, *_ = np.linalg.lstsq(design, diag, rcond=None)
    resid = np.max(np.abs(design @ sol - diag))
    if resid > tol:
        raise ValueError(f"diagonal is not a Cartan pattern (residual {resid:.3e})")
    r, s = sol
    r = r.real if abs(r.imag) <= tol else r
    s = s.real if abs(s.imag) <= tol else s
    return CartanVector(r, s)


def char_poly_coefficients(d: Derivation):
    """(A, B, C) with char(X) = X^7 - A X^5 + B X^3 - C X, exact.

    The odd-power coefficients and the X^6, X^2, X^0 ones vanish for any
    derivation; they are not checked here.
    """
    m = [list(row) for row in d.matrix]
    n = 7
    ident = [[_ONE if i == j else _Z for j in range(7)] for i in range(7)]
    coeffs = [_ONE]
    mk = [row[:] for row in ident]
    for k in range(1, n + 1):
        mk = ela.matmul(m, mk)
        tr = sum((mk[i][i] for i in range(7)), _Z)
        ck = -tr / k
        coeffs.append(ck)
        for i in range(7):
            mk[i][i] = mk[i][i] + ck
    # char = X^7 + c1 X^6 + ... + c7
    a = -coeffs[2]
    b = coeffs[4]
    c = -coeffs[6]
    return a, b, c


def regularity_invariant(d: Derivation):
    """54 C / A^3 as an exact scalar; rational for the standard families.

    Raises ValueError when the X^5 coefficient A vanishes (the invariant is
    then undefined, e.g. for nilpotent elements).
    """
    a, _, c = char_poly_coefficients(d)
    if a.is_zero():
        raise ValueError("regularity invariant undefined: X^5 coefficient is zero")
    val = (c * 54) / (a * a * a)
    return val.as_fraction() if val.is_rational() else val
