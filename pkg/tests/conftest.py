"""Shared fixtures: random exact octonions, the float Frenet splitting of
the model hyperbolic plane, and the standard pencils (built once; pencil
construction is exact and therefore not free)."""
import math
from fractions import Fraction

import numpy as np
import pytest

from g2forge import (
    ExactScalar,
    FrenetSplitting,
    ImOct,
    Oct,
    standard_alpha_pencil,
    standard_beta_pencil,
)
from g2forge._vecops import to_float, vnormalize


def random_fraction(rng: np.random.Generator, span: int = 6,
                    den: int = 4) -> Fraction:
    return Fraction(int(rng.integers(-span, span + 1)),
                    int(rng.integers(1, den + 1)))


def random_scalar(rng: np.random.Generator, parts: int = 4) -> ExactScalar:
    vals = [random_fraction(rng) for _ in range(4)]
    # zero out some components so sparse scalars appear too
    for t in range(4 - parts):
        vals[int(rng.integers(0, 4))] = Fraction(0)
    return ExactScalar(*vals)


def random_oct(rng: np.random.Generator) -> Oct:
    return Oct([random_fraction(rng) for _ in range(8)])


def random_im(rng: np.random.Generator, basis: str = "m") -> ImOct:
    if basis == "m":
        return ImOct([random_fraction(rng) for _ in range(7)], "m")
    return ImOct([random_scalar(rng) for _ in range(7)], basis)


@pytest.fixture(scope="session")
def rng_factory():
    return np.random.default_rng


@pytest.fixture(scope="session")
def alpha_pencil():
    return standard_alpha_pencil()


@pytest.fixture(scope="session")
def beta_pencil():
    return standard_beta_pencil()


@pytest.fixture(scope="session")
def float_frenet():
    fr = FrenetSplitting.model()
    return FrenetSplitting(to_float(fr.l_vec),
                           tuple(to_float(x) for x in fr.t_pair),
                           tuple(to_float(x) for x in fr.n_pair),
                           tuple(to_float(x) for x in fr.b_pair))


@pytest.fixture(scope="session")
def frenet_units(float_frenet):
    """Normalized fiber-sampling ingredients: (l, n1, n2, b1, b2)."""
    n1, n2 = (vnormalize(x, 1) for x in float_frenet.n_pair)
    b1, b2 = (vnormalize(x, -1) for x in float_frenet.b_pair)
    return float_frenet.l_vec, n1, n2, b1, b2


def ein_sample(fr, units, phi: float, psi: float, chi: float):
    """(u, v) arguments of the Einstein-universe fiber map at the angles."""
    ell, n1, n2, b1, b2 = units
    u = math.cos(phi) * ell + math.sin(phi) * (math.cos(psi) * n1
                                               + math.sin(psi) * n2)
    v = math.cos(chi) * b1 + math.sin(chi) * b2
    return u, v


def pho_sample(units, psi: float, phi: float, chi: float):
    """((u, w2), l_map) arguments of the photon fiber map at the angles."""
    ell, n1, n2, b1, b2 = units
    u = math.cos(psi) * n1 + math.sin(psi) * n2
    uperp = -math.sin(psi) * n1 + math.cos(psi) * n2
    w2 = math.cos(phi) * ell + math.sin(phi) * uperp
    y = math.cos(chi) * b1 + math.sin(chi) * b2
    return (u, w2), (lambda _u, yy=y: yy)
