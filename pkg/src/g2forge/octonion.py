"""Split-octonion arithmetic over the exact field Q(i, sqrt2).

The algebra O' is the quaternions doubled by an element l with l*l = +1.
Multiplication is defined by the 8x8 table on the real basis
(1, i, j, k, l, li, lj, lk); everything else in the package (cross products,
bilinear form, the three distinguished 7-bases of the imaginary part) is
derived from that table at import time.

Three bases of the imaginary part Im O' are supported:

  "m"  the real basis (i, j, k, l, li, lj, lk)
  "c"  the complex weight basis e3, e2, e1, e0, e-1, e-2, e-3 with
       e_{+-3} = (jl +- i kl)/sqrt2, e_{+-2} = (j +- i k)/sqrt2,
       e_{+-1} = (l +- i il)/sqrt2, e0 = i
  "r"  the real weight basis x3..x-3 with x3 = (i + li)/sqrt2,
       x2 = (j - lj)/sqrt2, x1 = (k - lk)/sqrt2, x0 = l,
       x-1 = (k + lk)/sqrt2, x-2 = (j + lj)/sqrt2, x-3 = (i - li)/sqrt2

The bilinear form is q(x) = x conj(x), polarized bilinearly (never
sesquilinearly, also over "c").  The cross product of imaginary elements is
u x v = Im(uv); on orthogonal arguments it equals uv.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rat = Union[int, Fraction]

__all__ = [
    "ExactScalar",
    "Oct",
    "ImOct",
    "mul",
    "qform",
    "cross",
    "associator",
    "triple_product",
    "BASIS_NAMES",
    "WEIGHT_INDEX",
    "cross_tensor",
    "gram_matrix",
]


class ExactScalar:
    """Element (re_rat + re_sqrt2*sqrt2) + i*(im_rat + im_sqrt2*sqrt2)."""

    __slots__ = ("re_rat", "re_sqrt2", "im_rat", "im_sqrt2")

    def __init__(self, re_rat: Rat = 0, re_sqrt2: Rat = 0,
                 im_rat: Rat = 0, im_sqrt2: Rat = 0):
        self.re_rat = Fraction(re_rat)
        self.re_sqrt2 = Fraction(re_sqrt2)
        self.im_rat = Fraction(im_rat)
        self.im_sqrt2 = Fraction(im_sqrt2)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "ExactScalar":
        return cls()

    @classmethod
    def one(cls) -> "ExactScalar":
        return cls(1)

    @classmethod
    def i(cls) -> "ExactScalar":
        return cls(0, 0, 1, 0)

    @classmethod
    def sqrt2(cls) -> "ExactScalar":
        return cls(0, 1, 0, 0)

    @classmethod
    def coerce(cls, v: "ExactScalar | Rat") -> "ExactScalar":
        if isinstance(v, ExactScalar):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to ExactScalar")

    # -- ring structure ----------------------------------------------------
    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, c: Fraction,
             d: Fraction) -> "ExactScalar":
        """Construct from components already known to be Fractions."""
        self = object.__new__(cls)
        self.re_rat = a
        self.re_sqrt2 = b
        self.im_rat = c
        self.im_sqrt2 = d
        return self

    def __add__(self, other):
        if type(other) is not ExactScalar:
            other = ExactScalar.coerce(other)
        return ExactScalar._raw(self.re_rat + other.re_rat,
                                self.re_sqrt2 + other.re_sqrt2,
                                self.im_rat + other.im_rat,
                                self.im_sqrt2 + other.im_sqrt2)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(-self.re_rat, -self.re_sqrt2,
                                -self.im_rat, -self.im_sqrt2)

    def __sub__(self, other):
        return self + (-ExactScalar.coerce(other))

    def __rsub__(self, other):
        return ExactScalar.coerce(other) + (-self)

    def __mul__(self, other):
        if type(other) is not ExactScalar:
            other = ExactScalar.coerce(other)
        a, b, c, d = self.re_rat, self.re_sqrt2, self.im_rat, self.im_sqrt2
        e, f, g, h = other.re_rat, other.re_sqrt2, other.im_rat, other.im_sqrt2
        # (a + b s + i(c + d s)) (e + f s + i(g + h s)), s*s = 2
        return ExactScalar._raw(
            a * e + 2 * b * f - c * g - 2 * d * h,
            a * f + b * e - c * h - d * g,
            a * g + 2 * b * h + c * e + 2 * d * f,
            a * h + b * g + c * f + d * e,
        )

    __rmul__ = __mul__

    def _real_inv(self):
        """Inverse of the real part pair (re_rat, re_sqrt2), as a pair."""
        a, b = self.re_rat, self.re_sqrt2
        n = a * a - 2 * b * b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return (a / n, -b / n)

    def inverse(self) -> "ExactScalar":
        # 1/z = conj(z) / |z|^2 with |z|^2 in Q(sqrt2)
        zc = self.conjugate()
        n = self * zc  # real: im parts vanish
        a, b = n.re_rat, n.re_sqrt2
        d = a * a - 2 * b * b
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        na, nb = a / d, -b / d
        return zc * ExactScalar(na, nb)

    def __truediv__(self, other):
        return self * ExactScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    # -- structure ---------------------------------------------------------
    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re_rat, self.re_sqrt2,
                           -self.im_rat, -self.im_sqrt2)

    def is_zero(self) -> bool:
        return (self.re_rat == 0 and self.re_sqrt2 == 0
                and self.im_rat == 0 and self.im_sqrt2 == 0)

    def is_real(self) -> bool:
        return self.im_rat == 0 and self.im_sqrt2 == 0

    def is_rational(self) -> bool:
        return self.is_real() and self.re_sqrt2 == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.re_rat

    def real(self) -> "ExactScalar":
        return ExactScalar(self.re_rat, self.re_sqrt2)

    def imag(self) -> "ExactScalar":
        return ExactScalar(self.im_rat, self.im_sqrt2)

    def __complex__(self) -> complex:
        s = 2.0 ** 0.5
        return complex(float(self.re_rat) + float(self.re_sqrt2) * s,
                       float(self.im_rat) + float(self.im_sqrt2) * s)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return (self - ExactScalar.coerce(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.re_rat, self.re_sqrt2, self.im_rat, self.im_sqrt2))

    def __repr__(self):
        parts = []
        for coef, unit in ((self.re_rat, ""), (self.re_sqrt2, "*sqrt2"),
                           (self.im_rat, "*I"), (self.im_sqrt2, "*I*sqrt2")):
            if coef:
                parts.append(f"{coef}{unit}")
        return "ExactScalar(0)" if not parts else f"ExactScalar({' + '.join(parts)})"


ZERO = ExactScalar.zero()
ONE = ExactScalar.one()
IUNIT = ExactScalar.i()
SQRT2 = ExactScalar.sqrt2()
HALF_SQRT2 = ExactScalar(0, Fraction(1, 2))  # 1/sqrt2

# ---------------------------------------------------------------------------
# multiplication table on (1, i, j, k, l, li, lj, lk): entry (index, sign)
# ---------------------------------------------------------------------------
OCT_NAMES = ("1", "i", "j", "k", "l", "li", "lj", "lk")

TABLE1 = (
    ((0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1), (5, -1), (4, 1), (7, -1), (6, 1)),
    ((2, 1), (3, -1), (0, -1), (1, 1), (6, -1), (7, 1), (4, 1), (5, -1)),
    ((3, 1), (2, 1), (1, -1), (0, -1), (7, -1), (6, -1), (5, 1), (4, 1)),
    ((4, 1), (5, 1), (6, 1), (7, 1), (0, 1), (1, 1), (2, 1), (3, 1)),
    ((5, 1), (4, -1), (7, -1), (6, 1), (1, -1), (0, 1), (3, 1), (2, -1)),
    ((6, 1), (7, 1), (4, -1), (5, -1), (2, -1), (3, -1), (0, 1), (1, 1)),
    ((7, 1), (6, -1), (5, 1), (4, -1), (3, -1), (2, 1), (1, -1), (0, 1)),
)


class Oct:
    """Split octonion with eight ExactScalar coordinates on (1,i,...,lk)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[ExactScalar | Rat]):
        cs = tuple(ExactScalar.coerce(c) for c in coords)
        if len(cs) != 8:
            raise ValueError("Oct needs 8 coordinates")
        self.coords = cs

    @classmethod
    def zero(cls) -> "Oct":
        return cls([0] * 8)

    @classmethod
    def unit(cls, name: str) -> "Oct":
        idx = OCT_NAMES.index(name)
        return cls([1 if t == idx else 0 for t in range(8)])

    @classmethod
    def scalar(cls, v: ExactScalar | Rat) -> "Oct":
        return cls([v] + [0] * 7)

    def __add__(self, other: "Oct") -> "Oct":
        return Oct(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Oct") -> "Oct":
        return Oct(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Oct":
        return Oct(-a for a in self.coords)

    def __mul__(self, other):
        if isinstance(other, Oct):
            return mul(self, other)
        s = ExactScalar.coerce(other)
        return Oct(a * s for a in self.coords)

    def __rmul__(self, other):
        s = ExactScalar.coerce(other)
        return Oct(s * a for a in self.coords)

    def conjugate(self) -> "Oct":
        return Oct([self.coords[0]] + [-c for c in self.coords[1:]])

    def real_part(self) -> ExactScalar:
        return self.coords[0]

    def imaginary(self) -> "ImOct":
        if not self.coords[0].is_zero():
            pass  # dropping the real part is the point
        return ImOct(self.coords[1:], "m")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, Oct):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = [f"{c!r}*{n}" for c, n in zip(self.coords, OCT_NAMES)
                 if not c.is_zero()]
        return "Oct(0)" if not terms else "Oct(" + " + ".join(terms) + ")"


def mul(x: "Oct | ImOct", y: "Oct | ImOct") -> Oct:
    """Octonion product from the multiplication table."""
    if isinstance(x, ImOct):
        x = x.to_oct()
    if isinstance(y, ImOct):
        y = y.to_oct()
    out = [ZERO] * 8
    for a, ca in enumerate(x.coords):
        if ca.is_zero():
            continue
        for b, cb in enumerate(y.coords):
            if cb.is_zero():
                continue
            idx, sgn = TABLE1[a][b]
            term = ca * cb
            out[idx] = out[idx] + (term if sgn > 0 else -term)
    return Oct(out)


# ---------------------------------------------------------------------------
# the three bases of Im O'
# ---------------------------------------------------------------------------
BASIS_NAMES = ("m", "c", "r")
WEIGHT_INDEX = (3, 2, 1, 0, -1, -2, -3)  # position 0..6 <-> weight


def _moct(*pairs) -> Oct:
    coords = [ZERO] * 8
    for idx, val in pairs:
        coords[idx] = ExactScalar.coerce(val) if not isinstance(val, ExactScalar) else val
    return Oct(coords)


_h = HALF_SQRT2            # 1/sqrt2
_ih = IUNIT * HALF_SQRT2   # i/sqrt2

# c-basis vectors in real coordinates; jl = -lj, kl = -lk, il = -li
_C_VECTORS = (
    _moct((6, -_h), (7, -_ih)),            # e3  = (jl + i kl)/sqrt2
    _moct((2, _h), (3, _ih)),               # e2  = (j + i k)/sqrt2
    _moct((4, _h), (5, -_ih)),              # e1  = (l + i il)/sqrt2
    _moct((1, ONE)),                          # e0  = i
    _moct((4, _h), (5, _ih)),               # e-1
    _moct((2, _h), (3, -_ih)),              # e-2
    _moct((6, -_h), (7, _ih)),              # e-3
)

_R_VECTORS = (
    _moct((1, _h), (5, _h)),                # x3  = (i + li)/sqrt2
    _moct((2, _h), (6, -_h)),               # x2  = (j - lj)/sqrt2
    _moct((3, _h), (7, -_h)),               # x1  = (k - lk)/sqrt2
    _moct((4, ONE)),                          # x0  = l
    _moct((3, _h), (7, _h)),                # x-1
    _moct((2, _h), (6, _h)),                # x-2
    _moct((1, _h), (5, -_h)),               # x-3
)

_M_VECTORS = tuple(Oct.unit(n) for n in OCT_NAMES[1:])

_BASIS_VECTORS = {"m": _M_VECTORS, "c": _C_VECTORS, "r": _R_VECTORS}


class ImOct:
    """Imaginary split octonion: seven coordinates in a tagged basis."""

    __slots__ = ("coords", "basis")

    def __init__(self, coords: Iterable[ExactScalar | Rat], basis: str = "m"):
        cs = tuple(ExactScalar.coerce(c) for c in coords)
        if len(cs) != 7:
            raise ValueError("ImOct needs 7 coordinates")
        if basis not in BASIS_NAMES:
            raise ValueError(f"unknown basis tag {basis!r}")
        self.coords = cs
        self.basis = basis

    @classmethod
    def basis_vector(cls, basis: str, position: int) -> "ImOct":
        return cls([1 if t == position else 0 for t in range(7)], basis)

    @classmethod
    def weight_vector(cls, basis: str, weight: int) -> "ImOct":
        """Basis vector by weight index (3..-3) for the c and r bases."""
        return cls.basis_vector(basis, WEIGHT_INDEX.index(weight))

    def to_oct(self) -> Oct:
        vecs = _BASIS_VECTORS[self.basis]
        out = Oct.zero()
        for c, v in zip(self.coords, vecs):
            if not c.is_zero():
                out = out + v * c
        return out

    def convert(self, basis: str) -> "ImOct":
        if basis == self.basis:
            return self
        m = self.to_oct()
        return _from_moct(m, basis)

    def __add__(self, other: "ImOct") -> "ImOct":
        self._check(other)
        return ImOct((a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "ImOct") -> "ImOct":
        self._check(other)
        return ImOct((a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "ImOct":
        return ImOct((-a for a in self.coords), self.basis)

    def __mul__(self, other):
        s = ExactScalar.coerce(other)
        return ImOct((a * s for a in self.coords), self.basis)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def _check(self, other: "ImOct"):
        if self.basis != other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis!r} vs {other.basis!r}; convert first")

    def to_floats(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coords])

    def __eq__(self, other):
        if isinstance(other, ImOct):
            if self.basis != other.basis:
                return self.to_oct() == other.to_oct()
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.coords, self.basis))

    def __repr__(self):
        return f"ImOct({list(self.coords)!r}, basis={self.basis!r})"


# inversion tables for reading an Oct back in the m/c/r bases ---------------
def _from_moct(x: Oct, basis: str) -> ImOct:
    if not x.coords[0].is_zero():
        raise ValueError("octonion has a real part; not an ImOct")
    if basis == "m":
        return ImOct(x.coords[1:], "m")
    # both weight bases decompose in 2x2 blocks; solve exactly via the
    # precomputed inverse coordinate forms
    if basis == "c":
        i_, j_, k_, l_, li_, lj_, lk_ = x.coords[1:]
        s = SQRT2
        # e3,e-3 span (lj, lk): lj = -(e3+e-3)/sqrt2, lk = i(e3-e-3)/sqrt2
        c3 = (-lj_ + IUNIT * lk_) * HALF_SQRT2
        cm3 = (-lj_ - IUNIT * lk_) * HALF_SQRT2
        c2 = (j_ - IUNIT * k_) * HALF_SQRT2
        cm2 = (j_ + IUNIT * k_) * HALF_SQRT2
        c1 = (l_ + IUNIT * li_) * HALF_SQRT2
        cm1 = (l_ - IUNIT * li_) * HALF_SQRT2
        return ImOct((c3, c2, c1, i_, cm1, cm2, cm3), "c")
    if basis == "r":
        i_, j_, k_, l_, li_, lj_, lk_ = x.coords[1:]
        r3 = (i_ + li_) * HALF_SQRT2
        rm3 = (i_ - li_) * HALF_SQRT2
        r2 = (j_ - lj_) * HALF_SQRT2
        rm2 = (j_ + lj_) * HALF_SQRT2
        r1 = (k_ - lk_) * HALF_SQRT2
        rm1 = (k_ + lk_) * HALF_SQRT2
        return ImOct((r3, r2, r1, l_, rm1, rm2, rm3), "r")
    raise ValueError(f"unknown basis tag {basis!r}")


# ---------------------------------------------------------------------------
# bilinear form, cross product, associator
# ---------------------------------------------------------------------------
def qform(x: "Oct | ImOct", y: "Oct | ImOct") -> ExactScalar:
    """Polarized bilinear form q(x, y) = (x conj(y) + y conj(x)) / 2."""
    if isinstance(x, ImOct) and isinstance(y, ImOct) and x.basis == y.basis:
        g = _GRAM[x.basis]
        acc = ZERO
        for a, ca in enumerate(x.coords):
            if ca.is_zero():
                continue
            for b, cb in enumerate(y.coords):
                if cb.is_zero() or g[a][b].is_zero():
                    continue
                acc = acc + ca * cb * g[a][b]
        return acc
    xo = x.to_oct() if isinstance(x, ImOct) else x
    yo = y.to_oct() if isinstance(y, ImOct) else y
    p = mul(xo, yo.conjugate())
    r = mul(yo, xo.conjugate())
    return (p.coords[0] + r.coords[0]) / 2


def qnorm(x: "Oct | ImOct") -> ExactScalar:
    return qform(x, x)


def cross(u: ImOct, v: ImOct) -> ImOct:
    """Cross product u x v = Im(uv), in the common basis of u and v."""
    if not isinstance(u, ImOct) or not isinstance(v, ImOct):
        raise TypeError("cross takes imaginary octonions")
    u._check(v)
    tensor = _CROSS[u.basis]
    out = [ZERO] * 7
    for a, ca in enumerate(u.coords):
        if ca.is_zero():
            continue
        row = tensor[a]
        for b, cb in enumerate(v.coords):
            if cb.is_zero():
                continue
            for c, coef in row[b]:
                out[c] = out[c] + ca * cb * coef
    return ImOct(out, u.basis)


def associator(x: Oct, y: Oct, z: Oct) -> Oct:
    """[x, y, z] = x(yz) - (xy)z."""
    return mul(x, mul(y, z)) - mul(mul(x, y), z)


def triple_product(u: ImOct, v: ImOct, w: ImOct) -> ExactScalar:
    """Omega(u, v, w) = q(u x v, w)."""
    return qform(cross(u, v), w)


# ---------------------------------------------------------------------------
# derived structure tensors (built once at import from the table)
# ---------------------------------------------------------------------------
def _build_tensors():
    grams = {}
    crosses = {}
    for tag, vecs in _BASIS_VECTORS.items():
        g = [[None] * 7 for _ in range(7)]
        im_vecs = [ImOct([1 if t == p else 0 for t in range(7)], "m")
                   for p in range(7)]
        for a in range(7):
            for b in range(7):
                xo, yo = vecs[a], vecs[b]
                p = mul(xo, yo.conjugate())
                r = mul(yo, xo.conjugate())
                g[a][b] = (p.coords[0] + r.coords[0]) / 2
        t = [[None] * 7 for _ in range(7)]
        for a in range(7):
            for b in range(7):
                prod = mul(vecs[a], vecs[b])
                impart = Oct([ZERO] + list(prod.coords[1:]))
                co = _from_moct(impart, tag)
                t[a][b] = tuple((c, coef) for c, coef in enumerate(co.coords)
                                if not coef.is_zero())
        grams[tag] = tuple(tuple(rw) for rw in g)
        crosses[tag] = tuple(tuple(rw) for rw in t)
    return grams, crosses


_GRAM, _CROSS = _build_tensors()


def gram_matrix(basis: str, float_mode: bool = False):
    """Gram matrix of q on the chosen basis (exact nested tuples or ndarray)."""
    g = _GRAM[basis]
    if not float_mode:
        return g
    return np.array([[complex(g[a][b]) for b in range(7)] for a in range(7)])


def cross_tensor(basis: str) -> np.ndarray:
    """Structure tensor T[a,b,c] with (u x v)_c = sum T[a,b,c] u_a v_b."""
    t = np.zeros((7, 7, 7), dtype=complex)
    for a in range(7):
        for b in range(7):
            for c, coef in _CROSS[basis][a][b]:
                t[a, b, c] = complex(coef)
    return t
