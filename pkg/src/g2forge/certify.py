"""Machine verification of the developing-map positivity certificates.

Each immersion quantity is computed by two independent routes: a closed
polynomial-trigonometric expression in fiber coordinates, and a brute
force pairing assembled from the 7x7 weight-basis matrices.  The three
comparison polynomials get exact Sturm certificates over the rationals,
and two small eigenproblems cover the Hitchin-case span positivity and
the annihilator-photon transversality sweep.

Conventions for the weight basis (e_3, ..., e_-3): the Hermitian pairing
is <x, y> = sum_k x_k conj(y_k), and the split quadratic form pairs e_k
with e_-k with sign (-1)^k, matching the gram matrix of the complex
cross-product basis in :mod:`.bases`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

__all__ = [
    "ALPHA0_BOUND",
    "BETA0_BOUND",
    "DELTA_MARGIN",
    "SPAN_BOUND",
    "AlphaSample",
    "BetaSample",
    "RationalPoly",
    "alpha_immersion_quantity",
    "alpha_immersion_value",
    "alpha_matrix_oracle",
    "alpha_positivity_sweep",
    "annihilator_eigenvectors",
    "beta_immersion_quantity",
    "beta_immersion_value",
    "beta_matrix_oracle",
    "beta_positivity_sweep",
    "beta_value_floor",
    "certify_polynomial_positive",
    "count_real_roots",
    "cross_basis_bilinear",
    "cross_basis_gram",
    "fuchsian_pho_transversality",
    "hitchin_span_matrix",
    "hitchin_span_positivity",
    "hitchin_span_report",
    "pho_sturm_polynomials",
    "span_eigenvectors",
    "span_top_eigenvalues",
    "transversality_certificate",
    "weight_matrix",
]

_SQRT2 = math.sqrt(2.0)
_TOL = 1e-9

#: norm-ratio ceilings from the maximum principles
ALPHA0_BOUND = math.sqrt(2.0)
BETA0_BOUND = math.sqrt(3.0 / 5.0)
#: default exclusion margin at the strictness boundary |delta0| = 1
DELTA_MARGIN = 1e-3
#: the interpolation parameter of the Hitchin-case span check lives in
#: [0, SPAN_BOUND]
SPAN_BOUND = math.sqrt(5.0 / 3.0)


# ---------------------------------------------------------------------------
# weight-basis matrices
# ---------------------------------------------------------------------------
def weight_matrix(alpha: complex = 0j, beta: complex = 0j,
                  delta: complex = 0j) -> np.ndarray:
    """Float 7x7 matrix conj(a) e_alpha + a e_-alpha + conj(b) e_beta +
    b e_-beta + d e_delta + conj(d) e_-delta in the weight basis.

    This is the float twin of ``lie.char_family`` extended by the delta
    root directions; it is Hermitian for any complex coefficients.
    """
    a, b, d = complex(alpha), complex(beta), complex(delta)
    m = np.zeros((7, 7), dtype=complex)
    m[1, 2] = m[4, 5] = a.conjugate()
    m[2, 1] = m[5, 4] = a
    m[0, 1] = m[5, 6] = b.conjugate()
    m[2, 3] = m[3, 4] = 1j * _SQRT2 * b.conjugate()
    m[1, 0] = m[6, 5] = b
    m[3, 2] = m[4, 3] = -1j * _SQRT2 * b
    m[0, 5] = m[1, 6] = d
    m[5, 0] = m[6, 1] = d.conjugate()
    return m


def cross_basis_gram() -> np.ndarray:
    """Gram matrix of the split form in the weight basis: e_k pairs with
    e_-k with sign (-1)^k."""
    return np.fliplr(np.diag([-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0]))


def cross_basis_bilinear(x: np.ndarray, y: np.ndarray) -> complex:
    """Complex-bilinear extension of the split form in the weight basis."""
    return complex(np.asarray(x) @ cross_basis_gram() @ np.asarray(y))


def _hermitian_pairing(x: np.ndarray, y: np.ndarray) -> complex:
    # <x, y> = sum x_i conj(y_i); np.vdot conjugates its first argument
    return complex(np.vdot(y, x))


# ---------------------------------------------------------------------------
# null-cone fiber quantity
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class BetaSample:
    """Fiber coordinates for the null-line developing-map quantity.

    Invariants: x0^2 + 2|z2|^2 = 1, |z|^2 = 1/2, |alpha0| <= sqrt(2),
    and |delta0| <= 1 - delta_margin.  The margin keeps samples strictly
    inside the boundary |delta0| = 1 where positivity genuinely fails.
    """

    x0: float
    z2: complex
    z: complex
    alpha0: complex = 0j
    delta0: complex = 0j
    delta_margin: float = DELTA_MARGIN

    def __post_init__(self):
        if not 0.0 <= self.delta_margin < 1.0:
            raise ValueError("delta_margin must lie in [0, 1)")
        if abs(self.x0 ** 2 + 2.0 * abs(self.z2) ** 2 - 1.0) > _TOL:
            raise ValueError("sample violates x0^2 + 2|z2|^2 = 1")
        if abs(abs(self.z) ** 2 - 0.5) > _TOL:
            raise ValueError("sample violates |z|^2 = 1/2")
        if abs(self.alpha0) > ALPHA0_BOUND + _TOL:
            raise ValueError("sample violates |alpha0| <= sqrt(2)")
        if abs(self.delta0) > 1.0 - self.delta_margin + _TOL:
            raise ValueError("sample violates |delta0| <= 1 - margin")

    @classmethod
    def random(cls, rng: np.random.Generator,
               delta_margin: float = DELTA_MARGIN) -> "BetaSample":
        """Uniform direction on the (x0, z2)-sphere, uniform phases, and
        radii uniform in the allowed disks."""
        g = rng.standard_normal(3)
        r = float(np.linalg.norm(g))
        while r < 1e-8:
            g = rng.standard_normal(3)
            r = float(np.linalg.norm(g))
        x0 = float(g[0]) / r
        z2 = complex(g[1], g[2]) / (r * _SQRT2)
        z = np.exp(2j * np.pi * rng.uniform()) / _SQRT2
        alpha0 = (ALPHA0_BOUND * math.sqrt(rng.uniform())
                  * np.exp(2j * np.pi * rng.uniform()))
        delta0 = ((1.0 - delta_margin) * math.sqrt(rng.uniform())
                  * np.exp(2j * np.pi * rng.uniform()))
        return cls(x0, z2, complex(z), complex(alpha0), complex(delta0),
                   delta_margin)


def beta_immersion_value(x0, z2, z, alpha0=0j, delta0=0j):
    """Closed form of the null-line quantity A' in fiber coordinates.

    Pure arithmetic in the inputs (scalars or numpy arrays), with
    lambda^2 = 2 x0^2 + |z2|^2; sample invariants are not enforced here.
    """
    lam2 = 2.0 * x0 ** 2 + np.abs(z2) ** 2
    zbar2 = np.conj(z) ** 2
    return (4.0 * x0 ** 2
            + 4.0 * lam2 * np.abs(z2) ** 2
            + 4.0 * np.abs(z2) ** 2
            + 8.0 * lam2 * x0 ** 2
            - 8.0 * np.real(z2 ** 2 * zbar2)
            - 2.0 * _SQRT2 * x0 * (2.0 * lam2 - 1.0) * np.real(1j * alpha0 * z2)
            + np.real(4.0 * delta0 * (-2.0 * x0 ** 2 * zbar2
                                      + lam2 * np.conj(z2) ** 2)))


def beta_immersion_quantity(s: BetaSample) -> float:
    """A' for a validated sample."""
    return float(beta_immersion_value(s.x0, s.z2, s.z, s.alpha0, s.delta0))


def beta_matrix_oracle(s: BetaSample) -> float:
    """Independent route: <(psi psi0 + psi0 psi) Z, Z> from the full 7x7
    matrices and the fiber vector Z."""
    psi0 = weight_matrix(beta=1.0)
    psi = weight_matrix(alpha=s.alpha0, beta=1.0, delta=s.delta0)
    m = psi @ psi0 + psi0 @ psi
    lam = math.sqrt(2.0 * s.x0 ** 2 + abs(s.z2) ** 2)
    zc, z2c = np.conj(s.z), np.conj(s.z2)
    vec = np.array([_SQRT2 * 1j * s.x0 * s.z, lam * s.z2, z2c * s.z,
                    lam * s.x0, s.z2 * zc, lam * z2c,
                    -_SQRT2 * 1j * s.x0 * zc])
    return _hermitian_pairing(m @ vec, vec).real


def beta_value_floor(x0) -> float:
    """Strict lower bound x(12x + 4 - 6 sqrt(2) sqrt(x(1-x))), x = x0^2,
    valid for every sample with |delta0| < 1."""
    x = np.asarray(x0) ** 2
    return x * (12.0 * x + 4.0 - 6.0 * _SQRT2 * np.sqrt(x * (1.0 - x)))


def beta_positivity_sweep(n_samples: int, seed: int = 0,
                          delta_margin: float = DELTA_MARGIN) -> dict:
    """Vectorized positivity campaign over random valid samples."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((3, n_samples))
    r = np.linalg.norm(g, axis=0)
    x0 = g[0] / r
    z2 = (g[1] + 1j * g[2]) / (r * _SQRT2)
    z = np.exp(2j * np.pi * rng.uniform(size=n_samples)) / _SQRT2
    alpha0 = (ALPHA0_BOUND * np.sqrt(rng.uniform(size=n_samples))
              * np.exp(2j * np.pi * rng.uniform(size=n_samples)))
    delta0 = ((1.0 - delta_margin) * np.sqrt(rng.uniform(size=n_samples))
              * np.exp(2j * np.pi * rng.uniform(size=n_samples)))
    vals = beta_immersion_value(x0, z2, z, alpha0, delta0)
    k = int(np.argmin(vals))
    return {
        "name": "beta-immersion",
        "verdict": "positive" if vals[k] > 0.0 else "counterexample",
        "min_value": float(vals[k]),
        "samples": int(n_samples),
        "witness": {
            "x0": float(x0[k]),
            "z2": [float(z2[k].real), float(z2[k].imag)],
            "z": [float(z[k].real), float(z[k].imag)],
            "alpha0": [float(alpha0[k].real), float(alpha0[k].imag)],
            "delta0": [float(delta0[k].real), float(delta0[k].imag)],
        },
    }


# ---------------------------------------------------------------------------
# photon fiber quantity
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class AlphaSample:
    """Fiber coordinates for the photon developing-map quantity.

    ``beta0`` carries the phase product beta0 * conj(z) * w, the only
    combination in which the norm-ratio coefficient enters the value;
    its modulus is capped by the maximum principle at sqrt(3/5).
    Invariants: a^2 + b^2 = 1 and x^2 + y^2 = 1.
    """

    a: float
    b: float
    x: float
    y: float
    beta0: complex = 0j

    def __post_init__(self):
        if abs(self.a ** 2 + self.b ** 2 - 1.0) > _TOL:
            raise ValueError("sample violates a^2 + b^2 = 1")
        if abs(self.x ** 2 + self.y ** 2 - 1.0) > _TOL:
            raise ValueError("sample violates x^2 + y^2 = 1")
        if abs(self.beta0) > BETA0_BOUND + _TOL:
            raise ValueError("sample violates |beta0| <= sqrt(3/5)")

    @classmethod
    def random(cls, rng: np.random.Generator) -> "AlphaSample":
        phi = 2.0 * math.pi * rng.uniform()
        chi = 2.0 * math.pi * rng.uniform()
        beta0 = (BETA0_BOUND * math.sqrt(rng.uniform())
                 * np.exp(2j * np.pi * rng.uniform()))
        return cls(math.cos(phi), math.sin(phi), math.cos(chi),
                   math.sin(chi), complex(beta0))


def alpha_immersion_value(a, b, x, y, beta0=0j):
    """Closed form of the photon quantity 2 lambda^-2 A.

    Evaluates A1 - x^2 A2 - y^2 A3 - x Re(beta0) A4 - y Re(i beta0) A5
    with the five coefficient polynomials in b; accepts scalars or
    numpy arrays.
    """
    b2 = np.asarray(b) ** 2
    a1 = 4.0 + 16.0 * b2 + 4.0 * b2 ** 2 - 8.0 * b2 ** 3
    a2_ = 8.0 * b2 + 8.0 * b2 ** 2 - 16.0 * b2 ** 4
    a3 = 2.0 + 2.0 * b2 - 2.0 * b2 ** 2 - 2.0 * b2 ** 3
    ab6 = 6.0 * np.asarray(a) * np.asarray(b)
    a4 = ab6 * (1.0 + 3.0 * b2 - 8.0 * b2 ** 3)
    a5 = ab6 * (2.0 + 3.0 * b2 - b2 ** 2)
    return (a1 - x ** 2 * a2_ - y ** 2 * a3
            - x * np.real(beta0) * a4 - y * np.real(1j * beta0) * a5)


def alpha_immersion_quantity(s: AlphaSample) -> float:
    """2 lambda^-2 A for a validated sample."""
    return float(alpha_immersion_value(s.a, s.b, s.x, s.y, s.beta0))


def alpha_matrix_oracle(s: AlphaSample) -> float:
    """Independent route: the ten-term Hermitian pairing built from the
    7x7 matrices and the photon frame (u0, v0, z0, w0).

    Reconstructs the phases with w = 1 and z^2 = x - i y, so that the
    stored phase product becomes the bare coefficient beta0 * z.
    """
    a, b = s.a, s.b
    w = 1.0 + 0j
    z = complex(np.sqrt(complex(s.x, -s.y)))
    beta0 = s.beta0 * z
    lam = 1.0 / math.sqrt(a * a + 4.0 * b * b)
    zc, wc = np.conj(z), np.conj(w)

    u0 = np.array([0, z / _SQRT2, 0, 0, 0, zc / _SQRT2, 0])
    v0 = np.array([0, 1j * b * z / _SQRT2, 0, a, 0, -1j * b * zc / _SQRT2, 0])
    c1, c2, c3 = a * a + 2.0 * b * b, a * b, 3.0 * a * b * b + a ** 3
    z0 = (lam / _SQRT2) * np.array([c1 * w, 0, c2 * w * zc, 0,
                                    c2 * wc * z, 0, c1 * wc])
    w0 = (lam / _SQRT2) * np.array([-2j * b ** 3 * w, 0, 1j * c3 * w * zc, 0,
                                    -1j * c3 * wc * z, 0, 2j * b ** 3 * wc])

    psi = weight_matrix(alpha=1.0, beta=beta0)
    psi0 = weight_matrix(alpha=1.0)
    prod = psi0 @ psi
    hp = _hermitian_pairing
    total = (hp(prod @ u0, u0) + hp(prod @ v0, v0)
             + hp(prod @ z0, z0) + hp(prod @ w0, w0)
             - 2.0 * hp(psi0 @ u0, z0) * hp(psi @ u0, z0)
             - 2.0 * hp(psi0 @ v0, w0) * hp(psi @ v0, w0)
             - hp(psi0 @ u0, w0) * hp(psi @ u0, w0)
             - hp(psi0 @ u0, w0) * hp(psi @ v0, z0)
             - hp(psi0 @ v0, z0) * hp(psi @ u0, w0)
             - hp(psi0 @ v0, z0) * hp(psi @ v0, z0))
    return 2.0 * total.real / lam ** 2


def alpha_positivity_sweep(n_samples: int, seed: int = 0) -> dict:
    """Vectorized positivity campaign over random valid samples."""
    rng = np.random.default_rng(seed)
    phi = 2.0 * np.pi * rng.uniform(size=n_samples)
    chi = 2.0 * np.pi * rng.uniform(size=n_samples)
    a, b = np.cos(phi), np.sin(phi)
    x, y = np.cos(chi), np.sin(chi)
    beta0 = (BETA0_BOUND * np.sqrt(rng.uniform(size=n_samples))
             * np.exp(2j * np.pi * rng.uniform(size=n_samples)))
    vals = alpha_immersion_value(a, b, x, y, beta0)
    k = int(np.argmin(vals))
    return {
        "name": "alpha-immersion",
        "verdict": "positive" if vals[k] > 0.0 else "counterexample",
        "min_value": float(vals[k]),
        "samples": int(n_samples),
        "witness": {
            "a": float(a[k]),
            "b": float(b[k]),
            "x": float(x[k]),
            "y": float(y[k]),
            "beta0": [float(beta0[k].real), float(beta0[k].imag)],
        },
    }


# ---------------------------------------------------------------------------
# exact polynomial certificates
# ---------------------------------------------------------------------------
class RationalPoly:
    """Univariate polynomial with exact rational coefficients, ascending
    degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Union[int, Fraction]]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("zero polynomial")
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        if self.degree == 0:
            raise ValueError("zero polynomial")
        return RationalPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RationalPoly([p + q for p, q in zip(a, b)])

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] += p * q
        return RationalPoly(out)

    def scale(self, c) -> "RationalPoly":
        return RationalPoly([Fraction(c) * v for v in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly(degree={self.degree})"


def _poly_rem(num: List[Fraction], den: List[Fraction]) -> List[Fraction]:
    num = list(num)
    while len(num) >= len(den) and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        f = num[-1] / den[-1]
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] -= f * d
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def _poly_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b)
    return a


def _sturm_chain(p: RationalPoly) -> List[List[Fraction]]:
    # divide out repeated roots so the chain is a genuine Sturm sequence
    cs = list(p.coeffs)
    if p.degree > 0:
        dcs = list(p.derivative().coeffs)
        g = _poly_gcd(cs, dcs)
        if len(g) > 1:
            div: List[Fraction] = []
            num = list(cs)
            while len(num) >= len(g):
                f = num[-1] / g[-1]
                div.insert(0, f)
                shift = len(num) - len(g)
                for i, d in enumerate(g):
                    num[shift + i] -= f * d
                num.pop()
            cs = div
    chain = [cs]
    if len(cs) > 1:
        chain.append([k * c for k, c in enumerate(cs)][1:])
        while len(chain[-1]) > 1:
            rem = _poly_rem(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])
    return chain


def _sign_changes(signs: List[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _chain_signs_at(chain: List[List[Fraction]], x: Fraction) -> List[int]:
    out = []
    for cs in chain:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * x + c
        out.append(0 if acc == 0 else (1 if acc > 0 else -1))
    return out


def _chain_signs_at_inf(chain: List[List[Fraction]], positive: bool) -> List[int]:
    out = []
    for cs in chain:
        lead = cs[-1]
        s = 1 if lead > 0 else -1
        if not positive and (len(cs) - 1) % 2 == 1:
            s = -s
        out.append(s)
    return out


def count_real_roots(p: RationalPoly, lo: Optional[Fraction] = None,
                     hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots of p in (lo, hi], the whole line
    when the bounds are omitted.  Exact Sturm count."""
    chain = _sturm_chain(p)
    va = (_sign_changes(_chain_signs_at_inf(chain, positive=False))
          if lo is None else _sign_changes(_chain_signs_at(chain, Fraction(lo))))
    vb = (_sign_changes(_chain_signs_at_inf(chain, positive=True))
          if hi is None else _sign_changes(_chain_signs_at(chain, Fraction(hi))))
    return va - vb


def _cauchy_bound(p: RationalPoly) -> Fraction:
    lead = abs(p.coeffs[-1])
    return 1 + max(abs(c) for c in p.coeffs) / lead


def _isolate_root(p: RationalPoly) -> Tuple[Fraction, Fraction]:
    bound = _cauchy_bound(p)
    lo, hi = -bound, bound
    while hi - lo > Fraction(1, 1024):
        mid = (lo + hi) / 2
        if count_real_roots(p, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


def certify_polynomial_positive(p: RationalPoly, name: str = "polynomial") -> dict:
    """Exact positivity certificate: positive iff the Sturm count of real
    roots is zero and p(0) > 0; otherwise a counterexample witness (an
    isolating interval for a real root, or the point 0)."""
    roots = count_real_roots(p)
    at_zero = p(0)
    cert = {
        "name": name,
        "real_roots": roots,
        "value_at_zero": str(at_zero),
    }
    if roots == 0 and at_zero > 0:
        cert["verdict"] = "positive"
        return cert
    cert["verdict"] = "counterexample"
    if roots > 0:
        lo, hi = _isolate_root(p)
        cert["witness"] = {"root_interval": [str(lo), str(hi)]}
    else:
        cert["witness"] = {"point": "0"}
    return cert


def pho_sturm_polynomials() -> Dict[str, RationalPoly]:
    """The three comparison polynomials C_XX, C_XY, C_YY in b, derived
    exactly from the five photon coefficient polynomials with
    a^2 = 1 - b^2."""
    a1 = RationalPoly([4, 0, 16, 0, 4, 0, -8])
    a2 = RationalPoly([0, 0, 8, 0, 8, 0, 0, 0, -16])
    a3 = RationalPoly([2, 0, 2, 0, -2, 0, -2])
    # A4^2 and A5^2 carry the single factor (ab) squared: 36 b^2 (1-b^2)
    asq_bsq = RationalPoly([0, 0, 36, 0, -36])
    p4 = RationalPoly([1, 0, 3, 0, 0, 0, -8])
    p5 = RationalPoly([2, 0, 3, 0, -1])
    a4sq = asq_bsq * p4 * p4
    a5sq = asq_bsq * p5 * p5
    d12, d13 = a1 - a2, a1 - a3
    k = Fraction(3, 5)
    return {
        "C_XX": d12 * d12 - a4sq.scale(k),
        "C_XY": (d12 * d13).scale(2) - a4sq.scale(k) - a5sq.scale(k),
        "C_YY": d13 * d13 - a5sq.scale(k),
    }


# ---------------------------------------------------------------------------
# Hitchin-case span positivity
# ---------------------------------------------------------------------------
def hitchin_span_matrix(a_t: float) -> np.ndarray:
    """Real symmetric tridiagonal matrix with off-diagonal
    (1, a_t, sqrt 2, sqrt 2, a_t, 1); at a_t = sqrt(5/3) this is the
    endpoint matrix whose top eigenvectors span the comparison plane."""
    off = [1.0, float(a_t), _SQRT2, _SQRT2, float(a_t), 1.0]
    m = np.zeros((7, 7))
    for k, v in enumerate(off):
        m[k, k + 1] = m[k + 1, k] = v
    return m


def span_eigenvectors() -> np.ndarray:
    """Rows: the eigenvectors of the endpoint matrix for its three
    positive eigenvalues sqrt(6), 2 sqrt(2/3), sqrt(2/3)."""
    s5, s6, s15 = math.sqrt(5.0), math.sqrt(6.0), math.sqrt(15.0)
    return np.array([
        [1.0, s6, s15, 2.0 * s5, s15, s6, 1.0],
        [-1.0, -2.0 * s6 / 3.0, -s15 / 3.0, 0.0, s15 / 3.0, 2.0 * s6 / 3.0, 1.0],
        [1.0, s6 / 3.0, -s15 / 15.0, -2.0 * s5 / 5.0, -s15 / 15.0, s6 / 3.0, 1.0],
    ])


def span_top_eigenvalues() -> Tuple[float, float, float]:
    """The three positive eigenvalues of the endpoint matrix."""
    return (math.sqrt(6.0), 2.0 * math.sqrt(2.0 / 3.0), math.sqrt(2.0 / 3.0))


def hitchin_span_report(a_t: float) -> dict:
    """Restriction of the interpolation matrix to the comparison span:
    gram matrix, leading minors, and both diagnostic pairings."""
    if not -1e-12 <= a_t <= SPAN_BOUND + 1e-12:
        raise ValueError("a_t must lie in [0, sqrt(5/3)]")
    m = hitchin_span_matrix(a_t)
    vecs = span_eigenvectors()
    img = vecs @ m  # row i is A_t v_i
    gram = img @ vecs.T
    minors = [float(np.linalg.det(gram[:k, :k])) for k in (1, 2, 3)]
    return {
        "a_t": float(a_t),
        "minors": minors,
        "form_values": [float(gram[i, i]) for i in range(3)],
        "image_norms": [float(img[i] @ img[i]) for i in range(3)],
        "positive": all(v > 0.0 for v in minors),
    }


def hitchin_span_positivity(a_t: float) -> bool:
    """Whether the interpolation matrix is positive definite on the span
    of the endpoint matrix's three positive-eigenvalue eigenvectors."""
    return hitchin_span_report(a_t)["positive"]


# ---------------------------------------------------------------------------
# annihilator-photon transversality
# ---------------------------------------------------------------------------
def annihilator_eigenvectors() -> Tuple[np.ndarray, np.ndarray, float, float]:
    """The two top eigenvectors spanning the limit annihilator photon,
    with their eigenvalues 3 sqrt(2/5) and 2 sqrt(2/5)."""
    s3, s5, s6, s15 = (math.sqrt(3.0), math.sqrt(5.0), math.sqrt(6.0),
                       math.sqrt(15.0))
    e1 = np.array([-1j, -s6 * 1j, -s15 * 1j, -2.0 * s5, s15 * 1j, s6 * 1j, 1j])
    e2 = np.array([s3, 2.0 * _SQRT2, s5, 0.0, s5, 2.0 * _SQRT2, s3],
                  dtype=complex)
    return e1, e2, 3.0 * math.sqrt(0.4), 2.0 * math.sqrt(0.4)


def fuchsian_pho_transversality(grid_n: int = 64) -> float:
    """Minimum over a phase-torus grid of |x . E1|^2 + |x . E2|^2, where
    x runs over the null circle-pairs of N + B and E1, E2 span the limit
    photon.  Strictly positive, so no null line of N + B is orthogonal
    to the limit photon.

    The eigendata is verified against the endpoint matrix to 1e-10
    before sweeping.
    """
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    e1, e2, lam1, lam2 = annihilator_eigenvectors()
    mat = weight_matrix(alpha=1.0, beta=math.sqrt(0.6))
    for vec, lam in ((e1, lam1), (e2, lam2)):
        res = float(np.max(np.abs(mat @ vec - lam * vec)))
        if res >= 1e-10:
            raise RuntimeError(f"eigenvector residual {res:.3e} too large")
    gram = cross_basis_gram()
    c1, c2 = gram @ e1, gram @ e2
    th = np.linspace(0.0, 2.0 * np.pi, grid_n, endpoint=False)
    et, ea = np.exp(1j * th)[:, None], np.exp(1j * th)[None, :]
    # x = (e^{i theta}, e^{i alpha}, 0, 0, 0, e^{-i alpha}, e^{-i theta})
    p1 = et * c1[0] + ea * c1[1] + np.conj(ea) * c1[5] + np.conj(et) * c1[6]
    p2 = et * c2[0] + ea * c2[1] + np.conj(ea) * c2[5] + np.conj(et) * c2[6]
    return float(np.min(np.abs(p1) ** 2 + np.abs(p2) ** 2))


def transversality_certificate(grid_n: int = 64) -> dict:
    """Certificate wrapper around the transversality sweep."""
    val = fuchsian_pho_transversality(grid_n)
    return {
        "name": "pho-transversality",
        "verdict": "positive" if val > 0.0 else "counterexample",
        "min_value": val,
        "samples": int(grid_n) ** 2,
    }
