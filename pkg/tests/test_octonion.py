"""Exact algebra layer: unit product table, composition identities, and
the weight bases, all checked against independently derived frozen data."""
import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2forge import (
    ExactScalar,
    ImOct,
    Oct,
    associator,
    cross,
    mul,
    qform,
    qnorm,
    triple_product,
)
from g2forge.octonion import OCT_NAMES, WEIGHT_INDEX, gram_matrix

from _frozen import C_GRAM_ANTIDIAG, Q_SIGNS_M, R_GRAM_ANTIDIAG, TABLE1
from conftest import random_im, random_oct


def unit(idx: int) -> Oct:
    return Oct.unit(OCT_NAMES[idx])


# ---------------------------------------------------------------------------
# frozen product table


def test_unit_products_match_frozen_table():
    start = time.monotonic()
    for r in range(8):
        for c in range(8):
            idx, sign = TABLE1[r][c]
            assert mul(unit(r), unit(c)) == unit(idx) * ExactScalar.coerce(sign)
    assert time.monotonic() - start < 1.0


def test_q_signature_on_units():
    assert qnorm(Oct.unit("1")) == ExactScalar.one()
    for pos, sign in enumerate(Q_SIGNS_M):
        u = ImOct.basis_vector("m", pos)
        assert qnorm(u) == ExactScalar.coerce(sign)
        # off-diagonal entries vanish
        for other in range(pos + 1, 7):
            assert qform(u, ImOct.basis_vector("m", other)).is_zero()


def test_gram_matrices_of_weight_bases():
    for basis, antidiag in (("c", C_GRAM_ANTIDIAG), ("r", R_GRAM_ANTIDIAG)):
        g = gram_matrix(basis)
        for a in range(7):
            for b in range(7):
                expect = antidiag[a] if a + b == 6 else 0
                assert g[a][b] == ExactScalar.coerce(expect), (basis, a, b)


# ---------------------------------------------------------------------------
# identity suite on random exact elements


def test_composition_property(rng_factory):
    rng = rng_factory(11)
    for _ in range(300):
        x, y = random_oct(rng), random_oct(rng)
        assert qnorm(mul(x, y)) == qnorm(x) * qnorm(y)


def test_double_cross_identity(rng_factory):
    rng = rng_factory(12)
    for _ in range(300):
        u, v = random_im(rng), random_im(rng)
        lhs = cross(u, cross(u, v))
        rhs = v * (-qnorm(u)) + u * qform(u, v)
        assert lhs == rhs


def test_associator_alternates(rng_factory):
    rng = rng_factory(13)
    for _ in range(200):
        x, y, z = random_oct(rng), random_oct(rng), random_oct(rng)
        a = associator(x, y, z)
        assert associator(y, x, z) == -a
        assert associator(x, z, y) == -a
        assert associator(x, x, z).is_zero()
        assert associator(x, y, y).is_zero()


def test_conjugation_antihomomorphism(rng_factory):
    rng = rng_factory(14)
    for _ in range(300):
        x, y = random_oct(rng), random_oct(rng)
        assert mul(x, y).conjugate() == mul(y.conjugate(), x.conjugate())


def test_cross_is_imaginary_part_of_product(rng_factory):
    rng = rng_factory(15)
    for _ in range(100):
        u, v = random_im(rng), random_im(rng)
        assert cross(u, v) == mul(u, v).imaginary()
        # real part of the product is -q(u, v)
        assert mul(u, v).real_part() == -qform(u, v)


def test_triple_product_antisymmetry(rng_factory):
    rng = rng_factory(16)
    for _ in range(60):
        u, v, w = (random_im(rng) for _ in range(3))
        om = triple_product(u, v, w)
        assert triple_product(v, u, w) == -om
        assert triple_product(u, w, v) == -om
        assert triple_product(w, u, v) == om


# ---------------------------------------------------------------------------
# hypothesis forms of the two core identities

small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=3)
oct_strategy = st.lists(small_fraction, min_size=8, max_size=8).map(Oct)
im_strategy = st.lists(small_fraction, min_size=7, max_size=7).map(
    lambda cs: ImOct(cs, "m"))


@settings(max_examples=60, deadline=None)
@given(oct_strategy, oct_strategy)
def test_composition_property_hypothesis(x, y):
    assert qnorm(mul(x, y)) == qnorm(x) * qnorm(y)


@settings(max_examples=60, deadline=None)
@given(im_strategy, im_strategy)
def test_double_cross_hypothesis(u, v):
    assert cross(u, cross(u, v)) == v * (-qnorm(u)) + u * qform(u, v)


@settings(max_examples=40, deadline=None)
@given(oct_strategy, oct_strategy, oct_strategy)
def test_flexible_law_hypothesis(x, y, z):
    # alternativity implies the associator vanishes whenever two slots agree
    assert associator(x, y, x).is_zero()
    del z


# ---------------------------------------------------------------------------
# basis plumbing


def test_basis_conversion_roundtrip(rng_factory):
    rng = rng_factory(17)
    for _ in range(40):
        x = random_im(rng)
        assert x.convert("c").convert("m") == x
        assert x.convert("r").convert("m") == x
        assert x.convert("c").convert("r").convert("m") == x


def test_cross_agrees_across_bases(rng_factory):
    rng = rng_factory(18)
    for _ in range(40):
        u, v = random_im(rng), random_im(rng)
        direct = cross(u, v)
        via_c = cross(u.convert("c"), v.convert("c")).convert("m")
        via_r = cross(u.convert("r"), v.convert("r")).convert("m")
        assert via_c == direct
        assert via_r == direct


def test_qform_agrees_across_bases(rng_factory):
    rng = rng_factory(19)
    for _ in range(40):
        u, v = random_im(rng), random_im(rng)
        assert qform(u.convert("c"), v.convert("c")) == qform(u, v)
        assert qform(u.convert("r"), v.convert("r")) == qform(u, v)


def test_weight_index_layout():
    assert WEIGHT_INDEX == (3, 2, 1, 0, -1, -2, -3)


# ---------------------------------------------------------------------------
# scalar field


def test_exact_scalar_field_ops():
    x = ExactScalar(Fraction(1, 2), 1, -2, Fraction(1, 3))
    one = ExactScalar.one()
    assert x * x.inverse() == one
    assert (x + (-x)).is_zero()
    s2 = ExactScalar.sqrt2()
    assert s2 * s2 == ExactScalar.coerce(2)
    i = ExactScalar.i()
    assert i * i == -one
    assert x.conjugate().conjugate() == x
    # conjugation is a ring homomorphism
    y = ExactScalar(0, Fraction(-3, 7), 5, 0)
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_exact_scalar_rationality():
    assert ExactScalar.coerce(Fraction(5, 3)).is_rational()
    assert ExactScalar.coerce(Fraction(5, 3)).as_fraction() == Fraction(5, 3)
    assert not ExactScalar.sqrt2().is_rational()
    with pytest.raises(ValueError):
        ExactScalar.sqrt2().as_fraction()
    assert complex(ExactScalar(1, 1, 1, 0)) == pytest.approx(
        1 + np.sqrt(2) + 1j)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ExactScalar.zero().inverse()


def test_mixed_basis_cross_raises():
    u = ImOct.basis_vector("m", 0)
    v = ImOct.basis_vector("c", 0)
    with pytest.raises(ValueError):
        cross(u, v)


def test_oct_needs_eight_coordinates():
    with pytest.raises(ValueError):
        Oct([1, 2, 3])
    with pytest.raises(ValueError):
        ImOct([1] * 8, "m")
