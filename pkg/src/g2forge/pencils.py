"""Pencils of tangent vectors and the bases of the two fiber families.

A pencil is a 2-plane of automorphism-direction tangent vectors at a point
of the symmetric space.  Following geodesics orthogonal to a pencil out to
the visual boundary sweeps a subset of a flag manifold, the pencil's base:
null lines for the short-root family (the beta side), annihilator photons
for the long-root family (the alpha side).  This module carries the two
standard pencils, membership tests for both bases, the Frenet splitting
(L, T, N, B) that organizes the fibers, the R-space of a pointed 2-plane,
and the two fiber parametrizations.

Exact inputs stay exact as long as the normalizations stay inside
Q(i, sqrt2); otherwise computation degrades to floats at tolerance 1e-10
(1e-12 for the graph lift in pho_fiber_point).
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

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
    vnormalize,
    vq,
    vscale,
    vsub,
)
from .flags import (
    NullLine,
    Photon,
    SpacePoint,
    TangentVector,
    model_space_point,
    pointing_vector_pho,
    tangent_metric,
)
from .lie import Derivation, char_family, derivation_defect
from .octonion import ExactScalar, ImOct


class Pencil:
    """A 2-plane of automorphism tangents at a base point, spanned by two
    independent derivation-restriction tangent vectors."""

    def __init__(self, base: SpacePoint, span: Sequence[TangentVector],
                 family: str = "custom", tol: float = TOL):
        if len(span) != 2:
            raise ValueError("a pencil is spanned by two tangent vectors")
        psi1, psi2 = span
        for psi in (psi1, psi2):
            if not psi.base.same_point(base):
                raise ValueError("pencil span must live at the pencil base")
        flat = []
        for psi in (psi1, psi2):
            flat.append(np.concatenate([to_float(z) for z in psi.images]))
        if np.linalg.matrix_rank(np.array(flat), tol=1e-8) != 2:
            raise ValueError("pencil span is degenerate")
        for psi in (psi1, psi2):
            d = derivation_defect(Derivation(psi.skew_extension(), "m"))
            if d > 1e-8:
                raise ValueError("pencil span is not made of automorphism tangents")
        self.base = base
        self.span: Tuple[TangentVector, TangentVector] = (psi1, psi2)
        self.family = family
        self.tol = tol

    def __repr__(self) -> str:
        return f"Pencil({self.family})"


class FrenetSplitting:
    """Frenet-type splitting of Im O' along a superminimal direction: a
    spacelike line L, planes N (signature (2,0)), T and B (signature
    (0,2)), mutually orthogonal with L + N + T + B = Im O', each plane
    closed under cross product with L.  x -> x cross l is a complex
    structure on each of T, N, B for unit l in L."""

    def __init__(self, l_vec, t_pair, n_pair, b_pair, tol: float = TOL):
        vecs = same_mode([as_vec(l_vec)]
                         + [as_vec(x) for x in t_pair]
                         + [as_vec(x) for x in n_pair]
                         + [as_vec(x) for x in b_pair])
        l_vec, t1, t2, n1, n2, b1, b2 = vecs
        one = ExactScalar.one() if is_exact(l_vec) else 1.0
        if not sis_zero(vq(l_vec, l_vec) - one, tol):
            raise ValueError("L must be spanned by a unit spacelike vector")
        groups = {"T": (t1, t2), "N": (n1, n2), "B": (b1, b2)}
        sigs = {"T": (0, 2, 0), "N": (2, 0, 0), "B": (0, 2, 0)}
        for name, (a, b) in groups.items():
            gram = [[vq(a, a), vq(a, b)], [vq(b, a), vq(b, b)]]
            if signature_of(gram) != sigs[name]:
                raise ValueError(f"plane {name} has the wrong signature")
        allv = [l_vec, t1, t2, n1, n2, b1, b2]
        if span_rank(allv) != 7:
            raise ValueError("splitting does not span Im O'")
        for i, a in enumerate(allv):
            for j, b in enumerate(allv):
                same_t = i in (1, 2) and j in (1, 2)
                same_n = i in (3, 4) and j in (3, 4)
                same_b = i in (5, 6) and j in (5, 6)
                if i != j and not (same_t or same_n or same_b):
                    if not sis_zero(vq(a, b), tol):
                        raise ValueError("splitting planes are not mutually orthogonal")
        for name, (a, b) in groups.items():
            for x in (a, b):
                if span_rank([a, b, vcross(l_vec, x)], tol) != 2:
                    raise ValueError(f"plane {name} is not closed under cross with L")
        self.l_vec = l_vec
        # store each pair q-orthogonalized so coefficient extraction along
        # the pair is a plain projection
        self.t_pair = _orthogonalize(t1, t2)
        self.n_pair = _orthogonalize(n1, n2)
        self.b_pair = _orthogonalize(b1, b2)
        self.tol = tol

    @classmethod
    def model(cls) -> "FrenetSplitting":
        i_, j_, k_, l_ = (ImOct.basis_vector("m", t) for t in range(4))
        li_, lj_, lk_ = (ImOct.basis_vector("m", t) for t in range(4, 7))
        return cls(i_, (l_, vcross(i_, l_)), (j_, k_), (lj_, vcross(i_, lj_)))

    @property
    def exact(self) -> bool:
        return is_exact(self.l_vec)

    def base_point(self) -> SpacePoint:
        """The symmetric-space point L + N."""
        n1 = vnormalize(self.n_pair[0], 1)
        return SpacePoint.from_pair(self.l_vec, n1)

    def __repr__(self) -> str:
        return f"FrenetSplitting({'exact' if self.exact else 'float'})"


def _orthogonalize(a: Vec, b: Vec) -> Tuple[Vec, Vec]:
    return a, vsub(b, vscale(a, vq(b, a) / vq(a, a)))


class RSpace:
    """The R-space of a pointed spacelike 2-plane (W, [u]): the 2-plane of
    normal directions annihilated by the pencil's second fundamental
    pairing, recorded with the graph map gamma: B -> T when the projection
    to B is invertible (gamma is None exactly in the L-line case)."""

    def __init__(self, w_plane, u_class, plane, gamma, b_basis, t_basis):
        self.w_plane = w_plane
        self.u_class = u_class
        self.plane = plane
        self.gamma = gamma
        self.b_basis = b_basis
        self.t_basis = t_basis

    def gamma_apply(self, y: Vec) -> Vec:
        """Apply the graph map to y in B."""
        if self.gamma is None:
            raise ValueError("graph map is undefined: the plane equals T")
        y2, b1, b2, t1, t2 = same_mode([y, *self.b_basis, *self.t_basis])
        g = self.gamma
        if not is_exact(y2) and isinstance(g[0][0], ExactScalar):
            g = [[sfloat(x) for x in row] for row in g]
        c1 = vq(y2, b1) / vq(b1, b1)
        c2 = vq(y2, b2) / vq(b2, b2)
        out = vscale(t1, g[0][0] * c1 + g[0][1] * c2)
        return vadd(out, vscale(t2, g[1][0] * c1 + g[1][1] * c2))

    def __repr__(self) -> str:
        return "RSpace(gamma=None)" if self.gamma is None else "RSpace"


# --------------------------------------------------------------------------
# standard pencils


def _restrict_to_base(d: Derivation, base: SpacePoint) -> TangentVector:
    dm = d.convert("m")
    imgs = []
    for f in base.frame:
        if not isinstance(f, ImOct):
            raise ValueError("standard pencils need an exact base")
        imgs.append(dm(f))
    return TangentVector(base, imgs, "g2")


def standard_beta_pencil() -> Pencil:
    """The model short-root pencil at P0 = <i, j, k>: restrictions of the
    +-beta root combinations at coefficients 1 and i."""
    base = model_space_point()
    zero = ExactScalar.zero()
    span = [_restrict_to_base(char_family(zero, b), base)
            for b in (ExactScalar.one(), ExactScalar.i())]
    return Pencil(base, span, family="beta")


def standard_alpha_pencil() -> Pencil:
    """The model long-root pencil at P0 = <i, j, k>: restrictions of the
    +-alpha root combinations at coefficients 1 and i; equivalently the
    complex-linear maps N -> T (the second spanning map is C_i after the
    first)."""
    base = model_space_point()
    zero = ExactScalar.zero()
    span = [_restrict_to_base(char_family(a, zero), base)
            for a in (ExactScalar.one(), ExactScalar.i())]
    return Pencil(base, span, family="alpha")


# --------------------------------------------------------------------------
# base membership


def beta_base_membership(pencil: Pencil, line: NullLine) -> bool:
    """Whether a null line lies in the beta-base of the pencil: with
    [u + z] split along the base 3-plane, the difference form
    h(Z, psi Z) = -2 q(z, psi(u)) must vanish for both spanning psi."""
    base = pencil.base
    rep, _ = same_mode([line.rep, base.frame[0]])
    u = base.tangential_part(rep)
    z = vsub(rep, u)
    for psi in pencil.span:
        if not sis_zero(vq(z, psi(u)), max(pencil.tol, line.tol)):
            return False
    return True


def pho_base_membership(pencil: Pencil, omega: Photon) -> bool:
    """Whether an annihilator photon lies in the alpha-base of the pencil:
    the trace pairing of each spanning psi against the photon's pointing
    tangent must vanish.  The pointing tangent absorbs the Gram-Schmidt
    bookkeeping when the photon basis does not project orthonormally."""
    tv = pointing_vector_pho(pencil.base, omega)
    for psi in pencil.span:
        if not sis_zero(tangent_metric(psi, tv), max(pencil.tol, omega.tol)):
            return False
    return True


# --------------------------------------------------------------------------
# fiber parametrizations


def _component(x: Vec, span: Sequence[Vec]) -> Vec:
    """q-orthogonal projection of x onto an anisotropic span."""
    unified = same_mode([x] + list(span))
    x, span = unified[0], unified[1:]
    out = None
    for s in span:
        term = vscale(s, vq(x, s) / vq(s, s))
        out = term if out is None else vadd(out, term)
    return out


def _in_span(x: Vec, span: Sequence[Vec], tol: float) -> bool:
    return span_rank(list(span) + [x], tol) == len(span)


def ein_fiber_point(fr: FrenetSplitting, u, v) -> NullLine:
    """The null line over (u, v) in the Einstein-universe fiber
    parametrization: [u + (2 u_L x v - u_N x v) / sqrt(4|u_L|^2 + |u_N|^2)]
    for unit spacelike u in L + N and unit timelike v in B."""
    u, v = same_mode([as_vec(u), as_vec(v)])
    one = ExactScalar.one() if is_exact(u) else 1.0
    if not sis_zero(vq(u, u) - one, fr.tol):
        raise ValueError("u must be a unit vector of L + N")
    if not sis_zero(vq(v, v) + one, fr.tol):
        raise ValueError("v must be a unit timelike vector of B")
    if not _in_span(u, [fr.l_vec] + list(fr.n_pair), fr.tol):
        raise ValueError("u must lie in L + N")
    if not _in_span(v, list(fr.b_pair), fr.tol):
        raise ValueError("v must lie in B")
    u_l = _component(u, [fr.l_vec])
    u_n = vsub(u, u_l)
    w = vcross(vsub(vscale(u_l, 2), u_n), v)
    d = 4 * sfloat(vq(u_l, u_l)) + sfloat(vq(u_n, u_n))
    if is_exact(u):
        d_exact = ExactScalar.coerce(4) * vq(u_l, u_l) + vq(u_n, u_n)
        root = exact_sqrt(d_exact)
        if root is not None:
            return NullLine(vadd(vscale(u, root), w))
        u, w = to_float(u), to_float(w)
    return NullLine(u + w / np.sqrt(d))


def r_space(fr: FrenetSplitting, pencil: Pencil, w_plane: Sequence,
            u_class) -> RSpace:
    """The R-space over a pointed spacelike 2-plane (W, [u]) in P: the
    2-plane of normal vectors z solving
    q(psi(u'), z) + q(psi(v'), (u'v') z) = 0 for both spanning psi, with
    (u', v') an orthonormal basis of W starting along [u].  The result
    carries the graph map gamma: B -> T (None in the L-line case)."""
    w1, w2 = same_mode([as_vec(w) for w in w_plane])
    u0 = as_vec(u_class)
    base = pencil.base
    for w in (w1, w2):
        if not vis_zero(base.normal_part(w), fr.tol):
            raise ValueError("W must lie in the base 3-plane")
    if span_rank([w1, w2], fr.tol) != 2:
        raise ValueError("W is degenerate")
    if not _in_span(u0, [w1, w2], fr.tol):
        raise ValueError("the marked line must lie in W")
    if ssign(vq(u0, u0)) <= 0:
        raise ValueError("the marked line must be spacelike")
    up = vnormalize(u0, 1)
    w_for_v = w1 if span_rank([up, w1], fr.tol) == 2 else w2
    up2, w_for_v = same_mode([up, w_for_v])
    v0 = vsub(w_for_v, vscale(up2, vq(w_for_v, up2)))
    vp = vnormalize(v0, 1)
    # solve the 2x4 linear system over the normal basis
    unified = same_mode([up, vp] + base.normal_basis())
    up, vp, zetas = unified[0], unified[1], unified[2:]
    rows = _pairing_rows(pencil.span, up, vp, zetas)
    if is_exact(up):
        sols = ela.nullspace(rows)
    else:
        m = np.array([[sfloat(x) for x in row] for row in rows])
        _, s, vt = np.linalg.svd(m)
        nrank = int(np.sum(s > TOL * max(1.0, s[0])))
        sols = [vt[t] for t in range(nrank, 4)]
    if len(sols) != 2:
        raise ValueError("R-space is not 2-dimensional")
    plane = []
    for coeffs in sols:
        vec = None
        for c, zt in zip(coeffs, zetas):
            term = vscale(zt, c)
            vec = term if vec is None else vadd(vec, term)
        plane.append(vec)
    gamma = _graph_map(plane, fr, up)
    bpair = same_mode([plane[0], *fr.b_pair])[1:]
    tpair = same_mode([plane[0], *fr.t_pair])[1:]
    return RSpace((up, vp), up, tuple(plane), gamma, tuple(bpair), tuple(tpair))


def _pairing_rows(psis, up, vp, zetas):
    """Rows of the R-space system: q(psi(u'), z) + q(psi(v'), (u'v') z)."""
    x = vcross(up, vp)
    rows = []
    for psi in psis:
        pu, pv = psi(up), psi(vp)
        row = []
        for zt in zetas:
            xz = _full_product(x, zt)
            row.append(vq(pu, zt) + vq(pv, xz))
        rows.append(row)
    return rows


def _full_product(x: Vec, z: Vec) -> Vec:
    """Octonion product x z for q-orthogonal imaginary x, z (imaginary)."""
    return vcross(x, z)


def _graph_map(plane, fr: FrenetSplitting, up):
    """2x2 matrix of gamma: B -> T over the splitting's bases, or None when
    the plane projects degenerately (the plane = T case)."""
    b1, b2 = same_mode(list(fr.b_pair))
    t1, t2 = same_mode(list(fr.t_pair))
    vecs = same_mode(list(plane) + [b1, b2, t1, t2])
    z1, z2, b1, b2, t1, t2 = vecs
    def coeffs(z, e1, e2):
        return [vq(z, e1) / vq(e1, e1), vq(z, e2) / vq(e2, e2)]
    bc = [coeffs(z1, b1, b2), coeffs(z2, b1, b2)]
    tc = [coeffs(z1, t1, t2), coeffs(z2, t1, t2)]
    if is_exact(z1):
        det = bc[0][0] * bc[1][1] - bc[0][1] * bc[1][0]
        if det.is_zero():
            return None
        inv = [[bc[1][1] / det, -bc[0][1] / det], [-bc[1][0] / det, bc[0][0] / det]]
    else:
        det = bc[0][0] * bc[1][1] - bc[0][1] * bc[1][0]
        if abs(det) <= TOL:
            return None
        inv = [[bc[1][1] / det, -bc[0][1] / det], [-bc[1][0] / det, bc[0][0] / det]]
    # gamma(column of B-coeffs) = column of T-coeffs: gamma = tc^T . inv^T
    g = [[None, None], [None, None]]
    for a in range(2):
        for b in range(2):
            g[a][b] = tc[0][a] * inv[0][b] + tc[1][a] * inv[1][b]
    return g


def pho_fiber_point(fr: FrenetSplitting, w_plane: Sequence, l_map,
                    pencil: Optional[Pencil] = None,
                    u_choice: Optional[Vec] = None) -> Photon:
    """The annihilator photon over (W, L_map) in the photon-space fiber
    parametrization: with u a unit vector of N cap W, v completing it in W,
    x = u x v, and s the graph lift of the R-space over (W, [u]), the
    photon span{u + z, x ( u + z )} with z the normalization of
    s(L_map(u)).  l_map is the map itself, a callable taking u to a unit
    timelike vector of B and linear on the line it is evaluated on (so the
    photon does not depend on the sign of u).  When W = N the result is the
    graph of the complex-linear extension of l_map.  u_choice overrides the
    internal choice of marked vector; it must lie in N cap W."""
    w1, w2 = same_mode([as_vec(w) for w in w_plane])
    if u_choice is not None:
        u = as_vec(u_choice)
        if not (_in_span(u, [w1, w2], fr.tol)
                and _in_span(u, list(fr.n_pair), fr.tol)):
            raise ValueError("u_choice must lie in N cap W")
    else:
        # u spans N cap W
        n1, n2 = same_mode(list(fr.n_pair))
        rows, exact = _stack_rows([w1, w2, n1, n2])
        if exact:
            null = ela.nullspace(rows)
        else:
            _, s, vt = np.linalg.svd(rows)
            nrank = int(np.sum(s > TOL * max(1.0, s[0])))
            null = [vt[t] for t in range(nrank, 4)]
        if len(null) == 0:
            raise ValueError("W does not meet N")
        c = null[0]
        u = vadd(vscale(w1, c[0]), vscale(w2, c[1]))
        if vis_zero(u, fr.tol):
            raise ValueError("W does not meet N in a line")
    u = vnormalize(u, 1)
    y = as_vec(l_map(u))
    one = ExactScalar.one() if is_exact(y) else 1.0
    if not _in_span(y, list(fr.b_pair), fr.tol):
        raise ValueError("L_map must take values in B")
    if not sis_zero(vq(y, y) + one, fr.tol):
        raise ValueError("L_map must be a unit map")
    # v completes u in W
    w_for_v = w1 if span_rank([u, w1], fr.tol) == 2 else w2
    u2, w_for_v = same_mode([u, w_for_v])
    v = vnormalize(vsub(w_for_v, vscale(u2, vq(w_for_v, u2))), 1)
    u, v = same_mode([u, v])
    x = vcross(u, v)
    # graph lift through the R-space of (W, [u])
    if pencil is None:
        pencil = standard_alpha_pencil()
    rs = r_space(fr, pencil, (u, v), u)
    y2, _ = same_mode([y, rs.plane[0]])
    if rs.gamma is None:
        raise ValueError("R-space is the T-plane; the graph lift is undefined")
    sigma = vadd(y2, rs.gamma_apply(y2))
    qs = vq(sigma, sigma)
    if abs(sfloat(qs)) < 1e-12:
        raise ValueError("graph lift is null; cannot normalize")
    z = vnormalize(sigma, -1)
    w_first = vadd(u, z) if is_exact(u) == is_exact(z) else vadd(*same_mode([u, z]))
    xx, wf = same_mode([x, w_first])
    w_second = vcross(xx, wf)
    return Photon(wf, w_second)


def _stack_rows(vecs: Sequence[Vec]):
    """Rows expressing linear dependence: nullspace of [v1 v2 -n1 -n2]
    stacked as columns; returns (rows, exact)."""
    vs = same_mode(vecs)
    if vs and is_exact(vs[0]):
        cols = [list(vs[0].coords), list(vs[1].coords),
                [-c for c in vs[2].coords], [-c for c in vs[3].coords]]
        rows = [[cols[j][r] for j in range(4)] for r in range(7)]
        return rows, True
    m = np.array([to_float(vs[0]), to_float(vs[1]),
                  -to_float(vs[2]), -to_float(vs[3])]).T
    return m, False
