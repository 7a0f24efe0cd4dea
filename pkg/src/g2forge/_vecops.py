"""Dual-mode vector helpers for the geometry modules.

Flag-manifold and pencil code accepts imaginary octonions either exactly
(ImOct over Q(i, sqrt2)) or as real float 7-vectors in the (i, j, k, l, li,
lj, lk) coordinates.  Exact inputs stay exact through every rational
operation; a mixed or float computation falls through to numpy with the
documented tolerances.  Square roots that land outside the field degrade an
exact computation to floats.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .octonion import (
    ExactScalar,
    ImOct,
    Oct,
    TABLE1,
    cross,
    cross_tensor,
    mul,
    qform,
)

Vec = Union[ImOct, np.ndarray]

TOL = 1e-10

# float structure tensors in the real m-basis ------------------------------
_CROSS_M_F = np.real(cross_tensor("m"))
_GRAM_M_F = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])

_MUL8_F = np.zeros((8, 8, 8))
for _a in range(8):
    for _b in range(8):
        _idx, _sgn = TABLE1[_a][_b]
        _MUL8_F[_a, _b, _idx] = float(_sgn)


def is_exact(x: Vec) -> bool:
    return isinstance(x, ImOct)


def as_vec(x) -> Vec:
    """Normalize input: exact ImOct in m-coordinates, or float array."""
    if isinstance(x, ImOct):
        return x.convert("m")
    arr = np.asarray(x, dtype=float)
    if arr.shape != (7,):
        raise ValueError("a vector needs 7 real coordinates")
    return arr


def to_float(x: Vec) -> np.ndarray:
    if isinstance(x, ImOct):
        return np.real(x.convert("m").to_floats())
    return x


def same_mode(vecs: Sequence[Vec]) -> List[Vec]:
    vs = [as_vec(v) for v in vecs]
    if all(isinstance(v, ImOct) for v in vs):
        return vs
    return [to_float(v) for v in vs]


def vq(x: Vec, y: Vec):
    x, y = same_mode([x, y])
    if isinstance(x, ImOct):
        return qform(x, y)
    return float(x @ _GRAM_M_F @ y)


def vcross(x: Vec, y: Vec) -> Vec:
    x, y = same_mode([x, y])
    if isinstance(x, ImOct):
        return cross(x, y)
    return np.einsum("a,b,abc->c", x, y, _CROSS_M_F)


def vmul_im(x: Vec, y: Vec) -> Vec:
    """Imaginary part of the full octonion product x*y."""
    x, y = same_mode([x, y])
    if isinstance(x, ImOct):
        return mul(x, y).imaginary()
    x8 = np.concatenate(([0.0], x))
    y8 = np.concatenate(([0.0], y))
    return np.einsum("a,b,abc->c", x8, y8, _MUL8_F)[1:]


def vtriple_im(z: Vec, u: Vec, f: Vec) -> Vec:
    """Im(z (u f)) with both octonion products taken in full, real parts
    carried through the inner factor."""
    z, u, f = same_mode([z, u, f])
    if isinstance(z, ImOct):
        return mul(z, mul(u, f)).imaginary()
    z8 = np.concatenate(([0.0], z))
    u8 = np.concatenate(([0.0], u))
    f8 = np.concatenate(([0.0], f))
    uf = np.einsum("a,b,abc->c", u8, f8, _MUL8_F)
    return np.einsum("a,b,abc->c", z8, uf, _MUL8_F)[1:]


def vadd(x: Vec, y: Vec) -> Vec:
    x, y = same_mode([x, y])
    return x + y


def vsub(x: Vec, y: Vec) -> Vec:
    x, y = same_mode([x, y])
    return x - y


def vscale(x: Vec, s) -> Vec:
    if isinstance(x, ImOct) and isinstance(s, (int, Fraction, ExactScalar)):
        return x * ExactScalar.coerce(s)
    return to_float(x) * float(s)


def vzero(exact: bool) -> Vec:
    return ImOct([0] * 7, "m") if exact else np.zeros(7)


def vis_zero(x: Vec, tol: float = TOL) -> bool:
    if isinstance(x, ImOct):
        return x.is_zero()
    return bool(np.max(np.abs(x)) <= tol)


def sis_zero(s, tol: float = TOL) -> bool:
    if isinstance(s, ExactScalar):
        return s.is_zero()
    return abs(s) <= tol


def sfloat(s) -> float:
    if isinstance(s, ExactScalar):
        return complex(s).real
    return float(s)


def ssign(s, tol: float = TOL) -> int:
    """Sign of a real scalar, exact for ExactScalar inputs."""
    if isinstance(s, ExactScalar):
        if not s.is_real():
            raise ValueError("sign of a non-real scalar")
        p, q = s.re_rat, s.re_sqrt2
        if p == 0 and q == 0:
            return 0
        if q == 0:
            return 1 if p > 0 else -1
        if p == 0:
            return 1 if q > 0 else -1
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: compare p^2 with 2 q^2
        big_p = p * p > 2 * q * q
        if p > 0:
            return 1 if big_p else (-1 if p * p != 2 * q * q else 0)
        return -1 if big_p else (1 if p * p != 2 * q * q else 0)
    v = float(s)
    if abs(v) <= tol:
        return 0
    return 1 if v > 0 else -1


def _frac_sqrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    if f == 0:
        return Fraction(0)
    n, d = f.numerator, f.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_sqrt(s: ExactScalar) -> Optional[ExactScalar]:
    """Square root of a nonnegative real element of Q(sqrt2), if it exists
    in the field; None otherwise."""
    if not s.is_real():
        return None
    if ssign(s) < 0:
        return None
    p, q = s.re_rat, s.re_sqrt2
    if q == 0:
        # sqrt(p): rational c, or d*sqrt2 with 2 d^2 = p
        c = _frac_sqrt(p)
        if c is not None:
            return ExactScalar(c)
        d = _frac_sqrt(p / 2)
        if d is not None:
            return ExactScalar(0, d)
        return None
    # (c + d sqrt2)^2 = c^2 + 2 d^2 + 2 c d sqrt2
    disc = _frac_sqrt(p * p - 2 * q * q)
    if disc is None:
        return None
    for c2 in ((p + disc) / 2, (p - disc) / 2):
        c = _frac_sqrt(c2)
        if c is not None and c != 0:
            d = q / (2 * c)
            cand = ExactScalar(c, d)
            if ssign(cand) >= 0:
                return cand
            return -cand
    return None


def vnormalize(x: Vec, target: int):
    """Scale x so q(x) = target (+1 or -1); exact when the needed square
    root lives in the field, float otherwise.  Returns the scaled vector."""
    qx = vq(x, x)
    if isinstance(x, ImOct):
        s = qx if target > 0 else -qx
        if ssign(s) <= 0:
            raise ValueError("vector has the wrong causal type for this normalization")
        r = exact_sqrt(s)
        if r is not None:
            return vscale(x, r.inverse())
        x = to_float(x)
        qx = sfloat(qx)
    s = qx if target > 0 else -qx
    if s <= TOL:
        raise ValueError("vector has the wrong causal type for this normalization")
    return x / math.sqrt(s)


def gram_matrix_of(vecs: Sequence[Vec]):
    vs = same_mode(vecs)
    n = len(vs)
    return [[vq(vs[a], vs[b]) for b in range(n)] for a in range(n)], vs


def float_rank(mat: np.ndarray, tol: float = TOL) -> int:
    if mat.size == 0:
        return 0
    sv = np.linalg.svd(np.asarray(mat, dtype=float), compute_uv=False)
    scale = sv[0] if sv.size and sv[0] > 0 else 1.0
    return int(np.sum(sv > tol * max(1.0, scale)))


def span_rank(vecs: Sequence[Vec], tol: float = TOL) -> int:
    vs = same_mode(vecs)
    if vs and isinstance(vs[0], ImOct):
        from . import exactlinalg as ela
        return ela.rank([list(v.coords) for v in vs])
    return float_rank(np.array([to_float(v) for v in vs]), tol)


def signature_of(gram, tol: float = TOL) -> Tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric real matrix given as nested
    scalars (exact or float)."""
    if gram and isinstance(gram[0][0], ExactScalar):
        return _exact_signature([list(r) for r in gram])
    m = np.array([[sfloat(v) for v in row] for row in gram])
    ev = np.linalg.eigvalsh(m)
    scale = max(1.0, float(np.max(np.abs(ev))) if ev.size else 1.0)
    pos = int(np.sum(ev > tol * scale))
    neg = int(np.sum(ev < -tol * scale))
    return pos, neg, len(ev) - pos - neg


def _exact_signature(m: List[List[ExactScalar]]) -> Tuple[int, int, int]:
    n = len(m)
    if n == 0:
        return (0, 0, 0)
    # find a nonzero diagonal pivot, or build one from an off-diagonal pair
    pivot = next((i for i in range(n) if not m[i][i].is_zero()), None)
    if pivot is None:
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n)
                     if not m[i][j].is_zero()), None)
        if pair is None:
            return (0, 0, n)
        i, j = pair
        # row/col op: e_i <- e_i + e_j makes the (i,i) entry 2 m[i][j]
        for k in range(n):
            m[i][k] = m[i][k] + m[j][k]
        for k in range(n):
            m[k][i] = m[k][i] + m[k][j]
        pivot = i
    d = m[pivot][pivot]
    idx = [k for k in range(n) if k != pivot]
    rest = [[m[a][b] - m[a][pivot] * m[pivot][b] / d for b in idx] for a in idx]
    p, q, z = _exact_signature(rest)
    return (p + 1, q, z) if ssign(d) > 0 else (p, q + 1, z)
