import random

import pytest

from cplxgeom import exact as ex
from cplxgeom.cstruct import (
    ComplexStructureOp,
    RealQuadraticSpace,
    hermitian_form,
    is_orthogonal,
    split_pm,
    totally_null_check,
)
from cplxgeom.exact import I

ROT = ex.matrix([[0, -1], [1, 0]])


def test_split_of_quarter_turn():
    # J (1, -i) = (i, 1) = i (1, -i), worked out by hand
    (wp,), (wm,) = split_pm(ComplexStructureOp(ROT))
    assert ex.vector_entries(wp) == [ex.ONE, -I]
    assert ex.vector_entries(wm) == [ex.ONE, I]


def test_block_diagonal_split_dimensions():
    J = ex.matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    wp, wm = split_pm(J)
    assert len(wp) == len(wm) == 2


def test_orthogonality():
    assert is_orthogonal(ROT, RealQuadraticSpace.diagonal(1, 1))
    # J^T diag(1,-1) J = diag(-1, 1)
    assert not is_orthogonal(ROT, RealQuadraticSpace.diagonal(1, -1))


def test_rejects_non_complex_structures():
    with pytest.raises(ValueError):
        ComplexStructureOp(ROT * ex.gq(2))
    with pytest.raises(ValueError):
        ComplexStructureOp(ex.matrix([[0, -1, 0], [1, 0, 0], [0, 0, 1]]))


def test_rejects_bad_scalar_products():
    with pytest.raises(ValueError):
        RealQuadraticSpace(ex.matrix([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        RealQuadraticSpace(ex.matrix([[1, 2], [0, 1]]))
    with pytest.raises(ValueError):
        RealQuadraticSpace(ex.matrix([[1, 0], [0, I]]))


def test_totally_null():
    g = RealQuadraticSpace.diagonal(1, 1)
    wp, _ = split_pm(ROT)
    assert totally_null_check(wp, g)
    assert not totally_null_check([ex.column([1, 0])], g)
    assert totally_null_check([], g)


def test_hermitian_examples():
    g = RealQuadraticSpace.diagonal(1, 1)
    e1, e2 = ex.column([1, 0]), ex.column([0, 1])
    assert hermitian_form(g, ROT, e1, e1) == ex.ONE
    assert hermitian_form(g, ROT, e1, e2) == I


def _random_real_vector(rng, n):
    return ex.column([ex.gq(rng.randint(-4, 4), 0) for _ in range(n)])


@pytest.mark.parametrize("seed", range(100))
def test_hermitian_properties(seed):
    rng = random.Random(seed)
    J = ex.matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    g = RealQuadraticSpace.diagonal(1, 1, 1, 1)
    v, w = _random_real_vector(rng, 4), _random_real_vector(rng, 4)
    h = hermitian_form(g, J, v, w)
    assert h == ex.conj(hermitian_form(g, J, w, v))
    assert hermitian_form(g, J, v, v) == g(v, v)
    # complex-linear in the second slot for i acting as J
    assert hermitian_form(g, J, v, J * w) == I * h
