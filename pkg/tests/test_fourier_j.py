import numpy as np
import pytest

from cplxgeom import exact as ex
from cplxgeom.cstruct import RealQuadraticSpace, is_orthogonal, split_pm
from cplxgeom.exact import I
from cplxgeom.fourier_j import (
    audit,
    complex_structure,
    complex_structure_from_ops,
    derivative_matrix,
    sqrt_matrix,
    w_pm_action,
)


def _basis_function(j, x):
    k = j // 2 + 1
    return np.cos(k * x) if j % 2 == 0 else np.sin(k * x)


def test_derivative_n1():
    assert ex.meq(derivative_matrix(1), ex.matrix([[0, 1], [-1, 0]]))


@pytest.mark.parametrize("N", [1, 3, 5])
def test_derivative_acts_on_functions(N):
    """Columns of D against numerically differentiated basis functions."""
    D = ex.to_numpy(derivative_matrix(N)).real
    xs = np.linspace(0, 2 * np.pi, 17)
    h = 1e-6
    for j in range(2 * N):
        numeric = (_basis_function(j, xs + h) - _basis_function(j, xs - h)) / (2 * h)
        series = sum(D[i, j] * _basis_function(i, xs) for i in range(2 * N))
        assert np.allclose(numeric, series, atol=1e-6)


def test_derivative_properties_n16():
    D = derivative_matrix(16)
    assert ex.meq(D.transpose(), -D)
    D2 = D * D
    for i, row in enumerate(ex.entries(D2)):
        k = i // 2 + 1
        assert all(z == (ex.gq(-k * k) if j == i else ex.ZERO) for j, z in enumerate(row))


def test_sqrt_examples():
    assert ex.meq(sqrt_matrix(2), ex.matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]))
    X, D = sqrt_matrix(16), derivative_matrix(16)
    assert ex.is_zero(X * X + D * D)
    assert ex.is_zero(X * D - D * X)


def test_complex_structure():
    J = complex_structure_from_ops(64)
    assert ex.meq(J * J, -ex.eye(128))
    assert ex.meq(J, complex_structure(64))
    e = ex.column([1 if i == 4 else 0 for i in range(8)])  # cos 3x
    assert ex.vector_entries(complex_structure(4) * e)[5] == -ex.ONE  # -sin 3x
    assert is_orthogonal(J, RealQuadraticSpace(ex.eye(128)))


def test_w_plus_is_spanned_by_positive_exponentials():
    # e^{ikx} = cos kx + i sin kx, so its coefficient vector is (1, i) in each block
    wp, wm = split_pm(complex_structure(3))
    for v in wp:
        nz = [z for z in ex.vector_entries(v) if z]
        assert nz == [ex.ONE, I]
    for v in wm:
        nz = [z for z in ex.vector_entries(v) if z]
        assert nz == [ex.ONE, -I]


@pytest.mark.parametrize("N", [1, 8, 64])
def test_audit(N):
    report = audit(N)
    assert report.passed
    assert w_pm_action(N).passed


def test_rejects_zero_frequency():
    with pytest.raises(ValueError):
        derivative_matrix(0)
