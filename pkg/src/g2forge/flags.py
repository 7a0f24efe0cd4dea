"""Flag geometry of the split-octonion cross product.

Three homogeneous spaces appear here, all inside the imaginary split
octonions Im O' with its (3,4) form q and cross product:

* the symmetric space of spacelike 3-planes closed under the cross product
  (SpacePoint),
* the space of null lines, the projectivized null cone (NullLine),
* the space of annihilator photons: isotropic 2-planes on which the cross
  product vanishes identically (Photon).

Tangent vectors to the symmetric space at P are maps P -> P-perp
(TangentVector); the automorphism-group orbit directions sit inside the
full isometry-group directions as the complement of the four "cross with a
normal vector" maps, and project_to_g2 is the orthogonal projection onto
that subspace.

Everything accepts exact ImOct vectors or float 7-vectors in the
(i, j, k, l, li, lj, lk) coordinates; exact inputs keep exact arithmetic
wherever no irrational normalization is forced (tolerance 1e-10 otherwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi, sin
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import exactlinalg as ela
from ._vecops import (
    TOL,
    Vec,
    as_vec,
    exact_sqrt,
    is_exact,
    same_mode,
    sfloat,
    signature_of,
    sis_zero,
    span_rank,
    ssign,
    to_float,
    vadd,
    vcross,
    vis_zero,
    vmul_im,
    vnormalize,
    vq,
    vscale,
    vsub,
    vtriple_im,
    vzero,
)
from .octonion import ExactScalar, ImOct


def _unit(name: str) -> ImOct:
    order = ("i", "j", "k", "l", "li", "lj", "lk")
    return ImOct.basis_vector("m", order.index(name))


def _exact_mode(vecs: Sequence[Vec]) -> bool:
    return all(isinstance(v, ImOct) for v in vecs)


def _coords_rows(vecs: Sequence[Vec]):
    """Stack vectors as rows, exact or float."""
    vs = same_mode(vecs)
    if vs and isinstance(vs[0], ImOct):
        return [list(v.coords) for v in vs], True
    return np.array([to_float(v) for v in vs]), False


class SpacePoint:
    """A point of the symmetric space: a spacelike cross-closed 3-plane,
    carried as an oriented orthonormal frame (u, v, u x v)."""

    def __init__(self, frame: Sequence, tol: float = TOL):
        u, v, w = same_mode([as_vec(x) for x in frame])
        for a, name in ((u, "u"), (v, "v")):
            if not sis_zero(vq(a, a) - (ExactScalar.one() if is_exact(a) else 1.0), tol):
                raise ValueError(f"frame vector {name} is not a unit spacelike vector")
        if not sis_zero(vq(u, v), tol):
            raise ValueError("frame vectors u, v are not orthogonal")
        if not vis_zero(vsub(w, vcross(u, v)), tol):
            raise ValueError("third frame vector must equal u x v")
        self.frame: Tuple[Vec, Vec, Vec] = (u, v, w)
        self.tol = tol
        self._normal_cache: Optional[List[Vec]] = None

    @classmethod
    def from_pair(cls, u, v, tol: float = TOL) -> "SpacePoint":
        u, v = same_mode([as_vec(u), as_vec(v)])
        return cls((u, v, vcross(u, v)), tol)

    @classmethod
    def model(cls) -> "SpacePoint":
        return cls((_unit("i"), _unit("j"), _unit("k")))

    @property
    def exact(self) -> bool:
        return _exact_mode(self.frame)

    def tangential_part(self, x: Vec) -> Vec:
        x = as_vec(x)
        u, v, w = self.frame
        if is_exact(x) != self.exact:
            u, v, w, x = same_mode([u, v, w, x])
        out = vscale(u, vq(x, u))
        out = vadd(out, vscale(v, vq(x, v)))
        return vadd(out, vscale(w, vq(x, w)))

    def normal_part(self, x: Vec) -> Vec:
        x = as_vec(x)
        if is_exact(x) != self.exact:
            x, _ = same_mode([x, self.frame[0]])
        return vsub(x, self.tangential_part(x))

    def normal_basis(self) -> List[Vec]:
        """A q-orthogonal basis of the negative-definite 4-plane P-perp.

        The frame never changes after construction, so the basis is computed
        once and cached."""
        if self._normal_cache is not None:
            return list(self._normal_cache)
        rows, exact = _coords_rows(self.frame)
        if exact:
            sys_rows = []
            for f in self.frame:
                sys_rows.append([vq(ImOct.basis_vector("m", c), f) for c in range(7)])
            basis = [ImOct(vec, "m") for vec in ela.nullspace(sys_rows)]
        else:
            g = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])
            m = rows @ g
            _, _, vt = np.linalg.svd(m)
            basis = [vt[i] for i in range(3, 7)]
        # q-Gram-Schmidt; q is negative definite on P-perp, so no division
        # by an isotropic norm can occur
        ortho: List[Vec] = []
        for b in basis:
            for o in ortho:
                b = vsub(b, vscale(o, vq(b, o) / vq(o, o)))
            ortho.append(b)
        self._normal_cache = ortho
        return list(ortho)

    def same_point(self, other: "SpacePoint", tol: float = TOL) -> bool:
        if other is self:
            return True
        return span_rank(list(self.frame) + list(other.frame), tol) == 3

    def __repr__(self) -> str:
        kind = "exact" if self.exact else "float"
        return f"SpacePoint({kind})"


class NullLine:
    """A point of the null-cone projectivization: a null line [x]."""

    def __init__(self, rep, tol: float = TOL):
        rep = as_vec(rep)
        if vis_zero(rep, tol):
            raise ValueError("a null line needs a nonzero representative")
        qx = vq(rep, rep)
        if not sis_zero(qx, tol * 10):
            raise ValueError(f"representative is not null: q = {sfloat(qx)}")
        self.rep = rep
        self.tol = tol

    @property
    def exact(self) -> bool:
        return is_exact(self.rep)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NullLine):
            return NotImplemented
        return span_rank([self.rep, other.rep], max(self.tol, other.tol)) == 1

    def __hash__(self):
        raise TypeError("null lines are compared up to scale; not hashable")

    def __repr__(self) -> str:
        return f"NullLine({np.round(to_float(self.rep), 6)})"


class Photon:
    """An annihilator photon: an isotropic 2-plane omega with
    cross(omega, omega) = 0, stored by a spanning pair."""

    def __init__(self, w1, w2, tol: float = TOL):
        w1, w2 = same_mode([as_vec(w1), as_vec(w2)])
        if span_rank([w1, w2], tol) != 2:
            raise ValueError("photon basis is degenerate")
        for a, b, label in ((w1, w1, "q(w1)"), (w2, w2, "q(w2)"),
                            (w1, w2, "q(w1,w2)")):
            if not sis_zero(vq(a, b), tol * 10):
                raise ValueError(f"photon plane is not isotropic: {label} != 0")
        if not vis_zero(vcross(w1, w2), tol * 10):
            raise ValueError("cross product does not vanish on the plane")
        self.basis: Tuple[Vec, Vec] = (w1, w2)
        self.tol = tol

    @property
    def exact(self) -> bool:
        return _exact_mode(self.basis)

    def contains(self, line: NullLine, tol: float = TOL) -> bool:
        return span_rank([self.basis[0], self.basis[1], line.rep], tol) == 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Photon):
            return NotImplemented
        tol = max(self.tol, other.tol)
        return span_rank(list(self.basis) + list(other.basis), tol) == 2

    def __hash__(self):
        raise TypeError("photons are compared as planes; not hashable")

    def __repr__(self) -> str:
        w1, w2 = (np.round(to_float(w), 6) for w in self.basis)
        return f"Photon({w1}, {w2})"


class TangentVector:
    """A tangent vector of the symmetric space at base P: a linear map
    P -> P-perp recorded by its images on the base frame.  The flag records
    whether the vector is known to lie in the automorphism-group directions
    ("g2") or only in the full isometry directions ("so34")."""

    def __init__(self, base: SpacePoint, images: Sequence, flag: str = "so34",
                 tol: float = TOL):
        if flag not in ("so34", "g2"):
            raise ValueError("flag must be 'so34' or 'g2'")
        imgs = same_mode([as_vec(z) for z in images])
        if len(imgs) != 3:
            raise ValueError("a tangent vector needs images on the 3-frame")
        if _exact_mode(imgs) != base.exact:
            imgs = [to_float(z) for z in imgs]
        for z in imgs:
            for f in base.frame:
                if not sis_zero(vq(z, f), tol * 10):
                    raise ValueError("images must lie in the normal 4-plane")
        self.base = base
        self.images: Tuple[Vec, Vec, Vec] = tuple(imgs)
        self.flag = flag
        self.tol = tol

    @property
    def exact(self) -> bool:
        return _exact_mode(self.images)

    def __call__(self, x: Vec) -> Vec:
        x = as_vec(x)
        u, v, w = self.base.frame
        if is_exact(x) != self.exact:
            x, u, v, w = same_mode([x, u, v, w])
        out = vscale(self.images[0], vq(x, u))
        out = vadd(out, vscale(self.images[1], vq(x, v)))
        return vadd(out, vscale(self.images[2], vq(x, w)))

    def rank(self, tol: float = TOL) -> int:
        return span_rank(list(self.images), tol)

    def __add__(self, other: "TangentVector") -> "TangentVector":
        if not self.base.same_point(other.base):
            raise ValueError("tangent vectors live at different base points")
        flag = "g2" if self.flag == other.flag == "g2" else "so34"
        imgs = [vadd(a, b) for a, b in zip(self.images, other.images)]
        return TangentVector(self.base, imgs, flag, max(self.tol, other.tol))

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        return self + other.scale(-1)

    def scale(self, s) -> "TangentVector":
        return TangentVector(self.base, [vscale(z, s) for z in self.images],
                             self.flag, self.tol)

    def skew_extension(self):
        """The q-skew endomorphism of Im O' equal to the map on P and to
        minus its q-adjoint on P-perp, as a 7x7 matrix in the real
        m-coordinates (exact entries when the vector is exact)."""
        u, v, w = self.base.frame
        frame = (u, v, w)
        exact = self.exact
        cols = []
        for c in range(7):
            e = ImOct.basis_vector("m", c) if exact else np.eye(7)[c]
            e_p = self.base.tangential_part(e)
            e_n = vsub(as_vec(e) if not exact else e, e_p)
            out = self(e_p)
            # adjoint on the normal part: phi*(z) = sum q(z, phi(f_i)) f_i
            for f, img in zip(frame, self.images):
                out = vsub(out, vscale(f, vq(e_n, img)))
            cols.append(out)
        if exact:
            return [[cols[c].coords[r] for c in range(7)] for r in range(7)]
        return np.array([[cols[c][r] for c in range(7)] for r in range(7)])


# --------------------------------------------------------------------------
# operations


def model_space_point() -> SpacePoint:
    return SpacePoint.model()


def annihilator(x: NullLine, base: Optional[SpacePoint] = None) -> List[Vec]:
    """Basis of Ann(x) = ker(x cross .), an isotropic 3-plane, returned as
    the graph of v -> -z(uv)/q(u) over a spacelike 3-plane transverse
    decomposition x = u + z."""
    if base is None:
        base = SpacePoint.model()
    rep, _ = same_mode([x.rep, base.frame[0]])
    u = base.tangential_part(rep)
    z = vsub(rep, u)
    qu = vq(u, u)
    if sis_zero(qu, base.tol):
        raise ValueError("null line is not transverse to the normal 4-plane")
    inv = -qu.inverse() if isinstance(qu, ExactScalar) else -1.0 / qu
    out = []
    for f in base.frame:
        out.append(vadd(f, vscale(vtriple_im(z, u, f), inv)))
    return out


def tangent_metric(phi: TangentVector, psi: TangentVector):
    """Riemannian pairing g(phi, psi) = -sum_i q(phi(f_i), psi(f_i)) over an
    orthonormal base frame; positive definite."""
    if not phi.base.same_point(psi.base):
        raise ValueError("tangent vectors live at different base points")
    imgs_p, imgs_q = phi.images, psi.images
    if phi.exact != psi.exact:
        imgs_p = [to_float(z) for z in imgs_p]
        imgs_q = [to_float(z) for z in imgs_q]
    total = None
    for a, b in zip(imgs_p, imgs_q):
        t = vq(a, b)
        total = t if total is None else total + t
    return -total


def cross_tangent(base: SpacePoint, zeta: Vec) -> TangentVector:
    """The isometry-direction tangent C_zeta : x -> zeta x x for a normal
    vector zeta; these span the complement of the automorphism directions."""
    zeta = as_vec(zeta)
    return TangentVector(base, [vcross(zeta, f) for f in base.frame], "so34")


def pointing_vector_ein(base: SpacePoint, line: NullLine) -> TangentVector:
    """Rank-one isometry-direction tangent at P pointing to a null line
    [u + z]: the map x -> q(x, u) z / q(u)."""
    rep, _ = same_mode([line.rep, base.frame[0]])
    u = base.tangential_part(rep)
    qu = vq(u, u)
    if sis_zero(qu, base.tol):
        raise ValueError("null line is not transverse to the normal 4-plane")
    z = vsub(rep, u)
    inv = qu.inverse() if isinstance(qu, ExactScalar) else 1.0 / qu
    imgs = [vscale(z, vq(f, u) * inv) for f in base.frame]
    return TangentVector(base, imgs, "so34")


def project_to_g2(phi: TangentVector) -> TangentVector:
    """Orthogonal projection of an isometry-direction tangent onto the
    automorphism directions.  On the rank-one vector pointing to [u + z]
    this equals phi - (1/3) C_Z with Z = -zu/q(u), and it fixes every
    automorphism-direction tangent."""
    base = phi.base
    out = phi
    for zeta in base.normal_basis():
        if not out.exact:
            zeta = to_float(zeta)
        c = cross_tangent(base, zeta)
        coeff = tangent_metric(out, c)
        norm = tangent_metric(c, c)
        inv = norm.inverse() if isinstance(norm, ExactScalar) else 1.0 / norm
        out = out - c.scale(coeff * inv)
    return TangentVector(base, out.images, "g2", phi.tol)


def pointing_vector_pho(base: SpacePoint, omega: Photon) -> TangentVector:
    """Rank-two automorphism-direction tangent at P pointing to an
    annihilator photon: the unique phi with graph {p + phi(p)} recovering
    omega over its 2-plane of tangential parts and phi = 0 on the
    q-complement line."""
    w1, w2, _ = same_mode([omega.basis[0], omega.basis[1], base.frame[0]])
    p1 = base.tangential_part(w1)
    p2 = base.tangential_part(w2)
    if span_rank([p1, p2], base.tol) != 2:
        raise ValueError("photon projects degenerately to the base 3-plane")
    z1 = vsub(w1, p1)
    z2 = vsub(w2, p2)
    p3 = vcross(p1, p2)
    # solve phi(p1) = z1, phi(p2) = z2, phi(p1 x p2) = 0 for the frame images
    u, v, w = base.frame
    coeff = [[vq(p, f) for f in (u, v, w)] for p in (p1, p2, p3)]
    if is_exact(w1):
        rhs = [list(z1.coords), list(z2.coords), list(vzero(True).coords)]
        sol = ela.matmul(ela.inverse(coeff), rhs)
        imgs = [ImOct(row, "m") for row in sol]
    else:
        a = np.array([[sfloat(x) for x in row] for row in coeff])
        rhs = np.array([to_float(z1), to_float(z2), np.zeros(7)])
        sol = np.linalg.solve(a, rhs)
        imgs = [sol[i] for i in range(3)]
    return TangentVector(base, imgs, "g2", base.tol)


def photon_of_tangent(phi: TangentVector) -> Photon:
    """Inverse of pointing_vector_pho: the graph photon of a rank-two
    automorphism tangent over the complement of its kernel line."""
    # kernel of phi inside P: coefficients c with sum c_i images_i = 0
    if phi.exact:
        cols = [list(col) for col in zip(*[list(z.coords) for z in phi.images])]
        k = ela.nullspace(cols)
        if len(k) != 1:
            raise ValueError("tangent vector is not rank two")
        c = k[0]
    else:
        m = np.array([to_float(z) for z in phi.images]).T
        _, s, vt = np.linalg.svd(m)
        scale = max(1.0, s[0])
        if s[1] <= TOL * scale or s[2] > TOL * scale:
            raise ValueError("tangent vector is not rank two")
        c = vt[2]
    frame = phi.base.frame
    kdir = None
    for ci, f in zip(c, frame):
        t = vscale(f, ci)
        kdir = t if kdir is None else vadd(kdir, t)
    # two directions of P orthogonal to the kernel line
    cands = []
    for f in frame:
        p = vsub(f, vscale(kdir, vq(f, kdir) / vq(kdir, kdir)))
        if not vis_zero(p, TOL):
            cands.append(p)
    for idx in range(1, len(cands)):
        if span_rank([cands[0], cands[idx]], TOL) == 2:
            p1, p2 = cands[0], cands[idx]
            break
    else:
        raise ValueError("degenerate kernel complement")
    return Photon(vadd(p1, phi(p1)), vadd(p2, phi(p2)))


def iso3_orbit(triple: Sequence) -> str:
    """Orbit of an isotropic 3-plane: 'O0' for annihilator planes (the
    alternating form Omega restricts to zero), 'O1' otherwise."""
    t1, t2, t3 = same_mode([as_vec(t) for t in triple])
    if span_rank([t1, t2, t3]) != 3:
        raise ValueError("vectors do not span a 3-plane")
    for a in (t1, t2, t3):
        for b in (t1, t2, t3):
            if not sis_zero(vq(a, b), TOL * 10):
                raise ValueError("3-plane is not isotropic")
    omega = vq(vcross(t1, t2), t3)
    return "O0" if sis_zero(omega, TOL * 10) else "O1"


def iso3_generator(triple: Sequence) -> NullLine:
    """For an annihilator 3-plane T = Ann(x), recover the null line [x] as
    the unique direction in T crossing T to zero."""
    if iso3_orbit(triple) != "O0":
        raise ValueError("3-plane is not an annihilator plane")
    ts = same_mode([as_vec(t) for t in triple])
    exact = _exact_mode(ts)
    # rows: for unknown coefficients (a1, a2, a3), each cross with t_j gives
    # 7 scalar equations sum_i a_i (t_i x t_j) = 0
    crosses = [[vcross(ti, tj) for ti in ts] for tj in ts]
    if exact:
        rows = []
        for j in range(3):
            for c in range(7):
                rows.append([crosses[j][i].coords[c] for i in range(3)])
        basis = ela.nullspace(rows)
        if len(basis) != 1:
            raise ValueError("generator is not unique; plane is degenerate")
        coeffs = basis[0]
    else:
        m = np.zeros((21, 3))
        for j in range(3):
            for i in range(3):
                m[7 * j:7 * j + 7, i] = to_float(crosses[j][i])
        _, s, vt = np.linalg.svd(m)
        if s[1] <= TOL * max(1.0, s[0]):
            raise ValueError("generator is not unique; plane is degenerate")
        coeffs = vt[2]
    gen = None
    for ci, t in zip(coeffs, ts):
        term = vscale(t, ci)
        gen = term if gen is None else vadd(gen, term)
    return NullLine(gen)


def photon_pair_orbit(omega: Photon, omega2: Photon) -> Tuple[int, str]:
    """Relative position of two photons: the orbit index k in {0,1,2,3}
    with Tits angle k*pi/3, decided by the span dimension and, in the
    4-dimensional case, the signature of q on the span."""
    vecs = list(omega.basis) + list(omega2.basis)
    dim = span_rank(vecs)
    if dim == 2:
        return 0, "0*pi/3"
    if dim == 3:
        return 1, "1*pi/3"
    gram = [[vq(a, b) for b in vecs] for a in vecs]
    pos, neg, zero = signature_of(gram)
    if (pos, neg, zero) == (1, 1, 2):
        return 2, "2*pi/3"
    if (pos, neg, zero) == (2, 2, 0):
        return 3, "3*pi/3"
    raise ValueError(f"unexpected span signature {(pos, neg, zero)} for a photon pair")


def in_thickening(omega_limit: Photon, omega: Photon) -> bool:
    """Whether omega lies in the closed thickening of omega_limit, i.e. the
    two planes are q-orthogonal (equivalently the Tits angle is at most
    pi/2, which quantizes to k <= 1 or the orthogonal k = 2 position)."""
    for a in omega_limit.basis:
        for b in omega.basis:
            if not sis_zero(vq(a, b), TOL * 10):
                return False
    return True


def _circle_values(n_samples: int, exact: bool):
    """cos/sin samples of theta = pi k / n over [0, pi).  Exact mode uses
    the rational parametrization cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2)
    with t a rational approximation of tan(theta/2): every sample lies
    exactly on the circle, at a near-uniform angle."""
    out = []
    for k in range(n_samples):
        theta = pi * k / n_samples
        if exact:
            t = Fraction(np.tan(theta / 2)).limit_denominator(10 ** 6)
            den = 1 + t * t
            c = ExactScalar((1 - t * t) / den)
            s = ExactScalar(2 * t / den)
        else:
            c, s = cos(theta), sin(theta)
        out.append((c, s))
    return out


def duality_circle(obj: Union[NullLine, Photon], n_samples: int):
    """Duality between null lines and photons: the photons through a null
    line x form a circle (the planes through x inside Ann(x)), and the null
    lines on a photon form a circle.  Returns n_samples points of the
    corresponding circle."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    if isinstance(obj, NullLine):
        ann = annihilator(obj)
        rows, exact = _coords_rows([obj.rep] + ann)
        # complete [x] to a basis of Ann(x)
        if exact:
            picked = []
            for cand in ann:
                if span_rank([obj.rep] + picked + [cand]) == 2 + len(picked):
                    picked.append(cand)
                if len(picked) == 2:
                    break
        else:
            picked = []
            for cand in ann:
                trial = [obj.rep] + picked + [cand]
                if span_rank(trial) == len(trial):
                    picked.append(cand)
                if len(picked) == 2:
                    break
        if len(picked) != 2:
            raise ValueError("annihilator basis extraction failed")
        b1, b2 = same_mode(picked)
        use_exact = exact and _exact_mode([b1, b2]) and is_exact(obj.rep)
        out = []
        for c, s in _circle_values(n_samples, use_exact):
            second = vadd(vscale(b1, c), vscale(b2, s))
            out.append(Photon(obj.rep, second))
        return out
    if isinstance(obj, Photon):
        w1, w2 = obj.basis
        out = []
        for c, s in _circle_values(n_samples, obj.exact):
            out.append(NullLine(vadd(vscale(w1, c), vscale(w2, s))))
        return out
    raise TypeError("duality_circle takes a NullLine or a Photon")
