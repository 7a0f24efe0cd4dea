"""Cross-product bases of Im O' and transport between them.

A cross-product basis is seven imaginary octonions together with the table
of structure constants of the cross product in that basis.  Two bases with
identical constants differ by an algebra automorphism, and `transporter`
returns that automorphism as an exact matrix.

Frames are built from two kinds of distinguished triples:

  * a null triple (u, v, w): three isotropic, pairwise orthogonal vectors
    normalized by Omega(u, v, w) = sqrt2, giving the frame
    (u x v, u, v, (u x v) x w, u x w, v x w, w) graded by weights 3..-3;
  * a (+,+,-) triple (u, v, w): q(u) = q(v) = 1, q(w) = -1, pairwise
    orthogonal with Omega(u, v, w) = 0, giving
    (u, v, u x v, w, w x u, w x v, w x (u x v)),
    which reproduces (i, j, k, l, li, lj, lk) from (i, j, l).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import exactlinalg as ela
from .octonion import (
    ExactScalar,
    ImOct,
    SQRT2,
    WEIGHT_INDEX,
    cross,
    qform,
    triple_product,
)

__all__ = [
    "CrossBasis",
    "NullTriple",
    "PqrTriple",
    "model_c_basis",
    "model_r_basis",
    "model_null_triple",
    "model_pqr_triple",
    "basis_from_null_triple",
    "basis_from_pqr_triple",
    "transporter",
    "Transporter",
    "verify_cross_basis",
]

ConstantsTable = Tuple[Tuple[Tuple[Tuple[int, ExactScalar], ...], ...], ...]


def _m_coords(v: ImOct) -> List[ExactScalar]:
    return list(v.convert("m").coords)


def _coordinate_matrix(vectors: Sequence[ImOct]):
    """Columns are the m-basis coordinates of the vectors."""
    cols = [_m_coords(v) for v in vectors]
    return [[cols[j][i] for j in range(len(vectors))] for i in range(7)]


@dataclass(frozen=True)
class CrossBasis:
    vectors: Tuple[ImOct, ...]
    constants: ConstantsTable

    @classmethod
    def from_vectors(cls, vectors: Sequence[ImOct]) -> "CrossBasis":
        vecs = tuple(vectors)
        if len(vecs) != 7:
            raise ValueError("a cross-product basis has 7 vectors")
        vmat = _coordinate_matrix(vecs)
        vinv = ela.inverse(vmat)  # raises if dependent
        table = []
        for a in range(7):
            row = []
            for b in range(7):
                prod = _m_coords(cross(vecs[a].convert("m"), vecs[b].convert("m")))
                coeffs = [sum((vinv[i][t] * prod[t] for t in range(7)),
                              ExactScalar.zero()) for i in range(7)]
                row.append(tuple((i, c) for i, c in enumerate(coeffs)
                                 if not c.is_zero()))
            table.append(tuple(row))
        return cls(vecs, tuple(table))

    def graded_constants(self):
        """Structure constants as a 7x7 grid, assuming weight grading.

        Position p carries weight WEIGHT_INDEX[p]; the product of positions
        (a, b) must be supported on the single position of weight
        w_a + w_b (empty when that exceeds 3 in absolute value).
        Raises ValueError for a non-graded basis.
        """
        zero = ExactScalar.zero()
        grid = [[zero] * 7 for _ in range(7)]
        for a in range(7):
            for b in range(7):
                target_w = WEIGHT_INDEX[a] + WEIGHT_INDEX[b]
                entries = self.constants[a][b]
                if not entries:
                    continue
                if abs(target_w) > 3 or len(entries) > 1:
                    raise ValueError(f"product ({a},{b}) is not weight graded")
                idx, coef = entries[0]
                if idx != WEIGHT_INDEX.index(target_w):
                    raise ValueError(f"product ({a},{b}) off the graded target")
                grid[a][b] = coef
        return tuple(tuple(r) for r in grid)

    def gram(self):
        return tuple(tuple(qform(self.vectors[a], self.vectors[b])
                           for b in range(7)) for a in range(7))


@dataclass(frozen=True)
class NullTriple:
    """Isotropic, pairwise orthogonal (u, v, w) with Omega(u,v,w) = sqrt2."""

    u: ImOct
    v: ImOct
    w: ImOct

    def __post_init__(self):
        u, v, w = self.u, self.v, self.w
        for name, x in (("u", u), ("v", v), ("w", w)):
            if not qform(x, x).is_zero():
                raise ValueError(f"{name} is not isotropic")
        for pair, val in ((("u", "v"), qform(u, v)), (("u", "w"), qform(u, w)),
                          (("v", "w"), qform(v, w))):
            if not val.is_zero():
                raise ValueError(f"{pair[0]} and {pair[1]} are not orthogonal")
        if triple_product(u, v, w) != SQRT2:
            raise ValueError("Omega(u, v, w) must equal sqrt2")

    @property
    def vectors(self):
        return (self.u, self.v, self.w)


@dataclass(frozen=True)
class PqrTriple:
    """Orthogonal (u, v, w) with q(u) = q(v) = 1, q(w) = -1, Omega = 0."""

    u: ImOct
    v: ImOct
    w: ImOct

    def __post_init__(self):
        u, v, w = self.u, self.v, self.w
        if qform(u, u) != 1 or qform(v, v) != 1:
            raise ValueError("u and v must have q = 1")
        if qform(w, w) != -1:
            raise ValueError("w must have q = -1")
        for pair, val in ((("u", "v"), qform(u, v)), (("u", "w"), qform(u, w)),
                          (("v", "w"), qform(v, w))):
            if not val.is_zero():
                raise ValueError(f"{pair[0]} and {pair[1]} are not orthogonal")
        if not triple_product(u, v, w).is_zero():
            raise ValueError("Omega(u, v, w) must vanish")

    @property
    def vectors(self):
        return (self.u, self.v, self.w)


def model_c_basis() -> CrossBasis:
    return CrossBasis.from_vectors(
        [ImOct.basis_vector("c", p) for p in range(7)])


def model_r_basis() -> CrossBasis:
    return CrossBasis.from_vectors(
        [ImOct.basis_vector("r", p) for p in range(7)])


def model_null_triple() -> NullTriple:
    return NullTriple(ImOct.weight_vector("c", 1),
                      ImOct.weight_vector("c", 2),
                      ImOct.weight_vector("c", -3))


def model_pqr_triple() -> PqrTriple:
    return PqrTriple(ImOct.basis_vector("m", 0),   # i
                     ImOct.basis_vector("m", 1),   # j
                     ImOct.basis_vector("m", 3))   # l


def basis_from_null_triple(triple: NullTriple) -> CrossBasis:
    u, v, w = triple.vectors
    uv = cross(u, v)
    return CrossBasis.from_vectors(
        [uv, u, v, cross(uv, w), cross(u, w), cross(v, w), w])


def basis_from_pqr_triple(triple: PqrTriple) -> CrossBasis:
    u, v, w = triple.vectors
    uv = cross(u, v)
    return CrossBasis.from_vectors(
        [u, v, uv, w, cross(w, u), cross(w, v), cross(w, uv)])


class Transporter:
    """Exact linear map on Im O' sending one basis onto another."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(row) for row in matrix)

    def __call__(self, x: ImOct) -> ImOct:
        coords = _m_coords(x)
        out = [sum((self.matrix[i][j] * coords[j] for j in range(7)),
                   ExactScalar.zero()) for i in range(7)]
        return ImOct(out, "m")


def transporter(src: CrossBasis, dst: CrossBasis) -> Transporter:
    """The map with T(src.vectors[k]) = dst.vectors[k] for all k.

    When the two bases share their structure constants this is an
    automorphism of the cross product (and an isometry of q).
    """
    vs = _coordinate_matrix(src.vectors)
    vd = _coordinate_matrix(dst.vectors)
    return Transporter(ela.matmul(vd, ela.inverse(vs)))


def verify_cross_basis(basis: CrossBasis) -> dict:
    """Recompute the structure constants and compare with the stored table."""
    report = {"independent": True, "constants_match": True}
    try:
        fresh = CrossBasis.from_vectors(basis.vectors)
    except ValueError:
        report["independent"] = False
        report["constants_match"] = False
        report["ok"] = False
        return report
    for a in range(7):
        for b in range(7):
            stored = {i: c for i, c in basis.constants[a][b]}
            new = {i: c for i, c in fresh.constants[a][b]}
            keys = set(stored) | set(new)
            zero = ExactScalar.zero()
            if any(stored.get(k, zero) != new.get(k, zero) for k in keys):
                report["constants_match"] = False
    report["ok"] = report["independent"] and report["constants_match"]
    return report
