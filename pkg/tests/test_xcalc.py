import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cplxgeom import exact as ex
from cplxgeom.xcalc import (
    Poly,
    PolyForm,
    PolyVField,
    SymTensor2,
    contract,
    d,
    df,
    evaluate_form,
    form_from_json,
    form_to_json,
    lie_bracket,
    lie_derivative,
    membership_in_span,
    poly_from_json,
    poly_to_json,
    vfield_from_json,
    vfield_to_json,
    wedge,
    wirtinger,
)

C3 = ("x", "y", "z")
C4 = ("u", "x", "y", "r")


def P(text, coords=C4):
    return Poly.parse(coords, text)


def _rand_poly(rng, coords, degree=2, terms=3):
    out = {}
    for _ in range(terms):
        mon = [0] * len(coords)
        for _ in range(rng.randint(0, degree)):
            mon[rng.randrange(len(coords))] += 1
        out[tuple(mon)] = ex.gq(rng.randint(-3, 3), rng.randint(-2, 2))
    return Poly.from_terms(coords, out)


def _rand_form(rng, coords, degree):
    from itertools import combinations

    keys = list(combinations(range(len(coords)), degree))
    chosen = rng.sample(keys, min(len(keys), 2))
    return PolyForm(coords, degree, {k: _rand_poly(rng, coords) for k in chosen})


def _rand_field(rng, coords):
    return PolyVField(coords, [_rand_poly(rng, coords, terms=2) for _ in coords])


def _dx(name, coords=C3):
    return PolyForm.d_coord(coords, name)


def _to_sympy(f: Poly):
    syms = sympy.symbols(f.coords)
    return sum(
        sympy.Rational(ex.re(c).numerator, ex.re(c).denominator) * sympy.prod([s ** e for s, e in zip(syms, mon)])
        + sympy.I * sympy.Rational(ex.im(c).numerator, ex.im(c).denominator) * sympy.prod([s ** e for s, e in zip(syms, mon)])
        for mon, c in f.terms.items()
    )


# ------------------------------------------------------------------ Poly

def test_parse_and_arithmetic():
    f = P("u - I*z*zb")
    assert f == Poly.var(C4, "u") - (Poly.var(C4, "x") ** 2 + Poly.var(C4, "y") ** 2) * ex.I
    assert f.conj() == P("u + I*x**2 + I*y**2")
    assert not f.is_real() and f.real_part() == P("u")
    assert P("3").is_constant() and P("3").constant_term() == ex.gq(3)
    assert P("x**2*y + 1").degree() == 3


@pytest.mark.parametrize("text", ["sin(x)", "1/x", "q + 1", "x**(1/2)", "x +"])
def test_parse_rejections(text):
    with pytest.raises(ValueError):
        P(text)


@pytest.mark.parametrize("seed", range(30))
def test_diff_matches_sympy(seed):
    rng = random.Random(seed)
    f = _rand_poly(rng, C4, degree=3, terms=4)
    for name in C4:
        expected = sympy.expand(sympy.diff(_to_sympy(f), sympy.Symbol(name)))
        assert sympy.expand(_to_sympy(f.diff(name)) - expected) == 0


def test_exact_and_float_evaluation():
    f = P("x**2 + I*y - u/2")
    pt = {"u": 2, "x": Fraction(1, 3), "y": 1, "r": 0}
    assert f.at(pt) == ex.gq(Fraction(1, 9) - 1, 1)
    assert abs(f.evalf(pt) - complex(1 / 9 - 1, 1)) < 1e-15


def test_embed_and_substitute():
    f = Poly.parse(("x", "y"), "x*y")
    g = f.embed(C4)
    assert g == P("x*y")
    h = g.substitute({c: P(c) for c in C4} | {"x": P("u + 1")})
    assert h == P("u*y + y")


# ------------------------------------------------------------------ forms

def test_wedge_examples():
    assert _dx("x") ^ _dx("y") == -(_dx("y") ^ _dx("x"))
    alpha = _dx("y") * Poly.var(C3, "x")
    assert wedge(alpha, _dx("z")).coefficient("y", "z") == Poly.var(C3, "x")
    assert (alpha ^ alpha).is_zero()


def test_d_example():
    alpha = _dx("y") * Poly.var(C3, "x")
    assert d(alpha) == _dx("x") ^ _dx("y")


def test_contract_examples():
    X = PolyVField.partial(C3, "x")
    assert contract(X, _dx("x")) == PolyForm.function(Poly(C3, 1))
    assert contract(X, _dx("y") ^ _dx("z")).is_zero()


def test_bracket_examples():
    dx, dy = PolyVField.partial(C3, "x"), PolyVField.partial(C3, "y")
    assert lie_bracket(dx, dy).is_zero()
    x_dy = PolyVField.from_dict(C3, {"y": Poly.var(C3, "x")})
    assert lie_bracket(x_dy, dx) == -dy


@pytest.mark.parametrize("seed", range(200))
def test_form_identities(seed):
    rng = random.Random(seed)
    p, q = rng.randint(0, 2), rng.randint(0, 2)
    a, b = _rand_form(rng, C4, p), _rand_form(rng, C4, q)
    # nilpotency
    assert d(d(a)).is_zero()
    # Leibniz
    lhs = d(a ^ b)
    rhs = (d(a) ^ b) + (a ^ d(b)) * (-1) ** p
    assert lhs == rhs
    # graded commutativity
    assert (a ^ b) == (b ^ a) * (-1) ** (p * q)
    # anti-derivation of the interior product
    v = _rand_field(rng, C4)
    if p + q >= 1:
        lhs = contract(v, a ^ b)
        left = (contract(v, a) ^ b) if p else PolyForm(C4, p + q - 1)
        right = (a ^ contract(v, b)) * (-1) ** p if q else PolyForm(C4, p + q - 1)
        assert lhs == left + right


@pytest.mark.parametrize("seed", range(200))
def test_bracket_identities(seed):
    rng = random.Random(seed)
    X, Y, Z = (_rand_field(rng, C4) for _ in range(3))
    assert lie_bracket(X, Y) == -lie_bracket(Y, X)
    jac = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) + lie_bracket(Z, lie_bracket(X, Y))
    assert jac.is_zero()
    f = _rand_poly(rng, C4)
    # the bracket acts as the commutator of derivations
    assert lie_bracket(X, Y).apply(f) == X.apply(Y.apply(f)) - Y.apply(X.apply(f))


@pytest.mark.parametrize("seed", range(60))
def test_cartan_formula(seed):
    rng = random.Random(seed)
    p = rng.randint(0, 3)
    a = _rand_form(rng, C4, p)
    X = _rand_field(rng, C4)
    inner = contract(X, a) if p else PolyForm(C4, 0)
    rhs = (d(inner) if p else PolyForm(C4, 0)) + contract(X, d(a))
    assert lie_derivative(X, a) == rhs


@pytest.mark.parametrize("seed", range(40))
def test_d_against_invariant_formula(seed):
    """d alpha evaluated on fields against the bracket formula for a 1-form."""
    rng = random.Random(seed)
    a = _rand_form(rng, C4, 1)
    X, Y = _rand_field(rng, C4), _rand_field(rng, C4)
    lhs = evaluate_form(d(a), X, Y)
    rhs = X.apply(evaluate_form(a, Y)) - Y.apply(evaluate_form(a, X)) - evaluate_form(a, lie_bracket(X, Y))
    assert lhs == rhs


def test_degree_and_coordinate_errors():
    with pytest.raises(ValueError):
        PolyForm(C3, 4)
    with pytest.raises(ValueError):
        _dx("x") ^ PolyForm.d_coord(C4, "x")
    with pytest.raises(ValueError):
        contract(PolyVField.partial(C3, "x"), PolyForm.function(Poly(C3, 1)))
    assert d(_dx("x") ^ _dx("y") ^ _dx("z")).is_zero()


# ------------------------------------------------------------------ wirtinger

def test_wirtinger_examples():
    coords = ("x", "y")
    z, zb = Poly.parse(coords, "x + I*y"), Poly.parse(coords, "x - I*y")
    assert wirtinger(z)[1].is_zero()
    assert wirtinger(zb)[1] == Poly(coords, 1)
    assert wirtinger(z * z * zb)[1] == z * z
    assert wirtinger(z)[0] == Poly(coords, 1)


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(-3, 3), st.integers(-3, 3)), max_size=4))
def test_wirtinger_kills_holomorphic_polynomials(terms):
    coords = ("x", "y")
    z = Poly.parse(coords, "x + I*y")
    f = Poly(coords, 0)
    for power, a, b in terms:
        f = f + z ** power * ex.gq(a, b)
    assert wirtinger(f)[1].is_zero()


# ------------------------------------------------------------------ membership

def test_membership_examples():
    coords = ("u", "x", "y")
    X1 = PolyVField.from_dict(coords, {"x": 1, "y": Poly.var(coords, "u")})
    X2 = PolyVField.partial(coords, "u")
    v = X1 * Poly.var(coords, "x") + X2
    assert membership_in_span(v, [X1, X2])
    assert not membership_in_span(PolyVField.partial(coords, "u"),
                                  [PolyVField.partial(coords, "x"), PolyVField.partial(coords, "y")])
    # X1 = d_x + u d_y and d_u bracket to -d_y, outside the span
    assert not membership_in_span(lie_bracket(X1, X2), [X1, X2])
    # an involutive family: d_x and x d_y + d_u
    Y1 = PolyVField.partial(coords, "x")
    Y2 = PolyVField.from_dict(coords, {"u": 1, "x": Poly.var(coords, "y")})
    assert membership_in_span(lie_bracket(Y1, Y2), [Y1, Y2])


# ------------------------------------------------------------------ tensors and JSON

def test_sym_tensor():
    coords = ("u", "x")
    du, dx = PolyForm.d_coord(coords, "u"), PolyForm.d_coord(coords, "x")
    g = SymTensor2.sym(du, dx)
    U, X = PolyVField.partial(coords, "u"), PolyVField.partial(coords, "x")
    assert g(U, X) == Poly(coords, Fraction(1, 2)) and g(U, U).is_zero()
    assert g.det() == Poly(coords, Fraction(-1, 4))
    with pytest.raises(ValueError):
        SymTensor2(coords, [[1, 2], [0, 1]])


@pytest.mark.parametrize("seed", range(20))
def test_json_roundtrips(seed):
    rng = random.Random(seed)
    f = _rand_poly(rng, C4, degree=3)
    assert poly_from_json(C4, json.loads(json.dumps(poly_to_json(f)))) == f
    a = _rand_form(rng, C4, rng.randint(0, 3))
    assert form_from_json(json.loads(json.dumps(form_to_json(a)))) == a
    v = _rand_field(rng, C4)
    assert vfield_from_json(json.loads(json.dumps(vfield_to_json(v)))) == v


def test_json_rejections():
    with pytest.raises(ValueError):
        poly_from_json(C4, True)
    with pytest.raises(ValueError):
        poly_from_json(C4, [[[1.5, 0, 0, 0], "1"]])
    with pytest.raises(ValueError):
        form_from_json({"coords": list(C4), "degree": 1, "terms": [{"d": ["u", "x"], "coeff": 1}]})


def test_df_of_coordinate():
    assert df(Poly.var(C3, "y")) == _dx("y")
