from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from cplxgeom import exact as ex
from conftest import gaussians, nonzero_gaussians


@pytest.mark.parametrize("text,value", [
    ("3", ex.gq(3)),
    ("-1/2", ex.gq(Fraction(-1, 2))),
    ("2 i", ex.gq(0, 2)),
    ("i", ex.I),
    ("1/2-3/4 i", ex.gq(Fraction(1, 2), Fraction(-3, 4))),
    (7, ex.gq(7)),
])
def test_parse_scalar(text, value):
    assert ex.parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1.5", 1.5, None])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        ex.parse_scalar(bad)


@given(gaussians)
def test_format_roundtrip(z):
    assert ex.parse_scalar(ex.format_scalar(z)) == z


@given(gaussians, gaussians)
def test_conj_is_multiplicative(a, b):
    assert ex.conj(a * b) == ex.conj(a) * ex.conj(b)
    assert ex.mag2(a) == ex.re(a * ex.conj(a))


def test_ipow_and_sign_pow():
    assert [ex.ipow(k) for k in range(-1, 5)] == [-ex.I, ex.ONE, ex.I, -ex.ONE, -ex.I, ex.ONE]
    assert ex.sign_pow(3) == -ex.ONE and ex.sign_pow(-2) == ex.ONE


@given(nonzero_gaussians, nonzero_gaussians, gaussians)
def test_inverse_against_numpy(a, b, c):
    M = ex.matrix([[a, c], [0, b]])
    prod = M * ex.inv(M)
    assert ex.meq(prod, ex.eye(2))
    assert np.allclose(ex.to_numpy(ex.inv(M)), np.linalg.inv(ex.to_numpy(M)))


def test_kernel_is_normalized_and_annihilated():
    M = ex.matrix([[1, ex.I, 0], [0, 0, 1]])
    (v,) = ex.kernel(M)
    assert ex.vector_entries(v)[0] == ex.ONE
    assert ex.is_zero(M * v)


def test_scale_largest_entry_tie_breaks_row_major():
    M = ex.matrix([[0, 2], [-2, 1]])
    assert ex.entries(ex.scale_largest_entry(M))[0][1] == ex.ONE


def test_scalar_multiple():
    A = ex.matrix([[1, 2], [3, 4]])
    assert ex.scalar_multiple(A * ex.I, A) == ex.I
    assert ex.scalar_multiple(ex.matrix([[1, 0], [0, 2]]), ex.eye(2)) is None


def test_rational_sqrt():
    assert ex.rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert ex.rational_sqrt(Fraction(2)) is None
    assert ex.rational_sqrt(Fraction(-1)) is None


def test_parse_fraction_rejects_floats():
    assert ex.parse_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(ValueError):
        ex.parse_fraction(0.5)
