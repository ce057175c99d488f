import itertools

import pytest

from cplxgeom.clock import (
    MatrixAlgebraType,
    brauer_wall_add,
    classify,
    describe,
    even_subalgebra,
    hour,
    same_type,
)
from cplxgeom.clock_oracle import recursion_type, trace_form_type

SIGS = [(k, m - k) for m in range(9) for k in range(m + 1)]


def test_forty_five_signatures():
    assert len(SIGS) == 45


@pytest.mark.parametrize("k,l", SIGS)
def test_classify_matches_trace_form_oracle(k, l):
    assert classify(k, l) == trace_form_type(k, l)


@pytest.mark.parametrize("k,l", SIGS)
def test_classify_matches_recursion_oracle_where_defined(k, l):
    t = recursion_type(k, l)
    if t is not None:
        assert classify(k, l) == t


@pytest.mark.parametrize("k,l", SIGS)
def test_real_dimension(k, l):
    assert classify(k, l).real_dim == 2 ** (k + l)


@pytest.mark.parametrize("k,l", [s for s in SIGS if sum(s) >= 1])
def test_even_subalgebra_matches_oracle(k, l):
    assert even_subalgebra(k, l) == trace_form_type(k, l, even=True)
    assert even_subalgebra(k, l).real_dim == 2 ** (k + l - 1)


@pytest.mark.parametrize("k,l,name", [
    (3, 1, "R(4)"), (4, 2, "R(8)"), (7, 1, "H(8)"), (0, 0, "R(1)"),
    (1, 0, "2R(1)"), (0, 1, "C(1)"), (0, 2, "H(1)"),
])
def test_anchors(k, l, name):
    assert str(classify(k, l)) == name


def test_even_examples():
    assert even_subalgebra(7, 1) == classify(7, 0)
    assert even_subalgebra(0, 1) == MatrixAlgebraType("R", 1)


def test_same_type_examples():
    assert same_type(7, 1, 1, 3)
    for k, l in SIGS:
        assert same_type(k, l, k, l)
        assert same_type(k + 4, l, k, l + 4)


def test_same_type_is_an_equivalence():
    pairs = list(itertools.product(SIGS, SIGS))
    rel = {(a, b): same_type(*a, *b) for a, b in pairs}
    for a, b in pairs:
        assert rel[(a, b)] == rel[(b, a)]
    for a, b, c in itertools.product(SIGS[:20], repeat=3):
        if rel[(a, b)] and rel[(b, c)]:
            assert rel[(a, c)]


def test_same_type_implies_same_algebra_family():
    for a, b in itertools.product(SIGS, SIGS):
        if same_type(*a, *b):
            assert classify(*a).base == classify(*b).base


def test_brauer_wall_addition():
    assert brauer_wall_add(hour(0, 1), hour(0, 1)) == hour(0, 2) == 2
    for h in range(8):
        assert brauer_wall_add(h, hour(0, 0)) == h
    assert hour(1, 1) == 0
    for (k, l), (k2, l2) in itertools.product(SIGS, SIGS):
        if k + k2 + l + l2 <= 8:
            assert brauer_wall_add(hour(k, l), hour(k2, l2)) == hour(k + k2, l + l2)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        classify(-1, 0)
    with pytest.raises(ValueError):
        MatrixAlgebraType("O", 1)
    with pytest.raises(ValueError):
        MatrixAlgebraType("R", 3)


def test_describe():
    assert describe(7, 1).startswith("Cl(7,1) = H(8)")
