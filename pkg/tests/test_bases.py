"""Cross-product bases: graded structure constants against frozen tables,
the two triple constructions, and transport between bases."""
from fractions import Fraction

import pytest

from g2forge import ExactScalar, ImOct, cross, qform, triple_product
from g2forge.bases import (
    CrossBasis,
    NullTriple,
    PqrTriple,
    basis_from_null_triple,
    basis_from_pqr_triple,
    model_c_basis,
    model_null_triple,
    model_pqr_triple,
    model_r_basis,
    transporter,
    verify_cross_basis,
)
from g2forge.octonion import OCT_NAMES

from _frozen import (
    C_CROSS,
    C_GRAM_ANTIDIAG,
    NULL_FRAME,
    PQR_FRAME_NAMES,
    R_CROSS,
    R_GRAM_ANTIDIAG,
    parse_scalar,
)
from conftest import random_im


def assert_grid_matches(basis: CrossBasis, frozen) -> None:
    grid = basis.graded_constants()
    for a in range(7):
        for b in range(7):
            assert grid[a][b] == parse_scalar(frozen[a][b]), (a, b)


def assert_gram_antidiagonal(basis: CrossBasis, antidiag) -> None:
    gram = basis.gram()
    for a in range(7):
        for b in range(7):
            expect = antidiag[a] if a + b == 6 else 0
            assert gram[a][b] == ExactScalar.coerce(expect), (a, b)


# ---------------------------------------------------------------------------
# model bases against the frozen tables


def test_model_c_basis_constants():
    assert_grid_matches(model_c_basis(), C_CROSS)


def test_model_c_basis_gram():
    assert_gram_antidiagonal(model_c_basis(), C_GRAM_ANTIDIAG)


def test_model_r_basis_constants():
    assert_grid_matches(model_r_basis(), R_CROSS)


def test_model_r_basis_gram():
    assert_gram_antidiagonal(model_r_basis(), R_GRAM_ANTIDIAG)


def test_model_bases_verify():
    for basis in (model_c_basis(), model_r_basis()):
        report = verify_cross_basis(basis)
        assert report == {"independent": True, "constants_match": True,
                          "ok": True}


def test_r_basis_vectors_are_real():
    """The second weight basis consists of real octonions: every
    m-coordinate has vanishing imaginary part."""
    for vec in model_r_basis().vectors:
        for c in vec.convert("m").coords:
            assert c.imag().is_zero()


# ---------------------------------------------------------------------------
# null-triple frame


def test_model_null_triple_constants():
    frame = basis_from_null_triple(model_null_triple())
    assert_grid_matches(frame, NULL_FRAME)


def test_null_frame_invariance_under_signed_swap():
    """The triple (sigma e1, sigma e2, sigma e-3) for the signed swap
    sigma: e_k -> e_{-k}, e_0 -> -e_0 is again a null triple and grows a
    frame with identical structure constants."""
    e = {w: ImOct.basis_vector("c", p)
         for p, w in enumerate((3, 2, 1, 0, -1, -2, -3))}
    triple = NullTriple(e[-1], e[-2], e[3])
    assert_grid_matches(basis_from_null_triple(triple), NULL_FRAME)


def test_null_frame_invariance_under_torus_translation():
    """Scaling e_k by lam^j mu^m for the weight (j, m) of e_k, with lam, mu
    unit-modulus Gaussian rationals, preserves the triple axioms and the
    frame constants."""
    lam = ExactScalar(Fraction(3, 5), 0, Fraction(4, 5), 0)
    mu = ExactScalar(Fraction(5, 13), 0, Fraction(12, 13), 0)
    weights = {3: lam * mu, 2: lam, 1: mu, 0: ExactScalar.one(),
               -1: mu.inverse(), -2: lam.inverse(),
               -3: (lam * mu).inverse()}
    e = {w: ImOct.basis_vector("c", p) * weights[w]
         for p, w in enumerate((3, 2, 1, 0, -1, -2, -3))}
    triple = NullTriple(e[1], e[2], e[-3])
    assert_grid_matches(basis_from_null_triple(triple), NULL_FRAME)


def test_null_triple_validation():
    c = lambda p: ImOct.basis_vector("c", p)
    # positions (0..6) carry weights (3, 2, 1, 0, -1, -2, -3)
    with pytest.raises(ValueError, match="Omega"):
        NullTriple(c(1), c(2), c(6))  # swapped order: Omega = -sqrt2
    with pytest.raises(ValueError, match="isotropic"):
        NullTriple(c(3), c(1), c(6))  # e0 has q = 1
    with pytest.raises(ValueError, match="orthogonal"):
        NullTriple(c(2), c(4), c(6))  # q(e1, e-1) != 0


# ---------------------------------------------------------------------------
# pqr-triple frame


def test_model_pqr_frame_is_unit_basis():
    frame = basis_from_pqr_triple(model_pqr_triple())
    for vec, name in zip(frame.vectors, PQR_FRAME_NAMES):
        assert vec.convert("m") == ImOct.basis_vector(
            "m", OCT_NAMES.index(name) - 1)


def test_pqr_triple_validation():
    i = ImOct.basis_vector("m", 0)
    j = ImOct.basis_vector("m", 1)
    k = ImOct.basis_vector("m", 2)
    el = ImOct.basis_vector("m", 3)
    with pytest.raises(ValueError):
        PqrTriple(i, j, k)   # q(k) = +1, not -1
    with pytest.raises(ValueError):
        PqrTriple(i, i, el)  # not orthogonal
    # Omega(i, j, l) = 0 holds, so the model triple is accepted
    assert PqrTriple(i, j, el).vectors == (i, j, el)


# ---------------------------------------------------------------------------
# transport


def test_transporter_is_cross_automorphism(rng_factory):
    """Two frames grown from different null triples share their structure
    constants, so the frame-to-frame transport is an automorphism of the
    cross product (and hence an isometry of q)."""
    src = basis_from_null_triple(model_null_triple())
    e = {w: ImOct.basis_vector("c", p)
         for p, w in enumerate((3, 2, 1, 0, -1, -2, -3))}
    dst = basis_from_null_triple(NullTriple(e[-1], e[-2], e[3]))
    t = transporter(src, dst)
    for k in range(7):
        assert t(src.vectors[k].convert("m")) == dst.vectors[k].convert("m")
    rng = rng_factory(23)
    for _ in range(25):
        x, y = random_im(rng), random_im(rng)
        assert t(cross(x, y)) == cross(t(x), t(y))
        assert qform(t(x), t(y)) == qform(x, y)


def test_transporter_fixes_own_basis():
    basis = model_r_basis()
    t = transporter(basis, basis)
    x = ImOct([1, 2, 3, 4, 5, 6, 7], "m")
    assert t(x) == x


# ---------------------------------------------------------------------------
# failure modes


def test_from_vectors_rejects_dependent_sets():
    vecs = [ImOct.basis_vector("m", p) for p in range(6)]
    vecs.append(vecs[0] + vecs[1])
    with pytest.raises(ValueError):
        CrossBasis.from_vectors(vecs)


def test_graded_constants_reject_ungraded_basis():
    # the real unit basis is a fine cross basis but is not weight graded
    basis = CrossBasis.from_vectors(
        [ImOct.basis_vector("m", p) for p in range(7)])
    with pytest.raises(ValueError):
        basis.graded_constants()


def test_triple_product_of_model_triples():
    u, v, w = model_null_triple().vectors
    assert triple_product(u, v, w) == ExactScalar.sqrt2()
    p, q, r = model_pqr_triple().vectors
    assert triple_product(p, q, r).is_zero()
