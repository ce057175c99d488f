"""Exterior calculus with polynomial coefficients over named real coordinates.

Coefficients live in QQ(i)[x_1, ..., x_n]; the coordinates themselves are
real, so complex conjugation acts on coefficients only.  Forms are stored as
maps from strictly increasing index tuples to polynomials, which makes
antisymmetry implicit.  Contraction follows (v ⌟ w)(v2, ..., vp) = w(v, v2, ..., vp).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.rings import PolyElement, ring

from . import exact as ex
from .exact import ZERO

Coords = tuple


@lru_cache(maxsize=None)
def _ring(coords: Coords):
    if len(set(coords)) != len(coords) or not coords:
        raise ValueError(f"coordinate names must be distinct and nonempty: {coords}")
    return ring(",".join(coords), QQ_I)[0]


def _coords(coords) -> Coords:
    return tuple(coords)


# ------------------------------------------------------------------------ Poly

class Poly:
    """Polynomial with Gaussian-rational coefficients in named real coordinates."""

    __slots__ = ("coords", "el")

    def __init__(self, coords: Sequence[str], el=0):
        coords = _coords(coords)
        R = _ring(coords)
        if isinstance(el, PolyElement):
            if el.ring != R:
                raise ValueError("polynomial belongs to a different coordinate ring")
        else:
            el = R(ex.coerce(el))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "el", el)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # construction
    @classmethod
    def const(cls, coords, c) -> "Poly":
        return cls(coords, c)

    @classmethod
    def var(cls, coords, name: str) -> "Poly":
        coords = _coords(coords)
        return cls(coords, _ring(coords).gens[coords.index(name)])

    @classmethod
    def from_terms(cls, coords, terms: Mapping) -> "Poly":
        coords = _coords(coords)
        R = _ring(coords)
        clean = {}
        for mon, c in terms.items():
            mon = tuple(int(a) for a in mon)
            if len(mon) != len(coords) or min(mon, default=0) < 0:
                raise ValueError(f"bad exponent vector {mon} for {coords}")
            c = ex.coerce(c)
            if c:
                clean[mon] = clean.get(mon, ZERO) + c
        return cls(coords, R.from_dict(clean) if clean else R.zero)

    @classmethod
    def parse(cls, coords, text: str) -> "Poly":
        """Parse an expression such as ``u - I*z*zb``.

        ``I`` is the imaginary unit; when ``x`` and ``y`` are coordinates,
        ``z`` and ``zb`` abbreviate ``x + I*y`` and ``x - I*y``.
        """
        coords = _coords(coords)
        syms = {c: sympy.Symbol(c, real=True) for c in coords}
        local = dict(syms)
        local["I"] = sympy.I
        if "x" in syms and "y" in syms:
            local.setdefault("z", syms["x"] + sympy.I * syms["y"])
            local.setdefault("zb", syms["x"] - sympy.I * syms["y"])
        try:
            expr = sympy.sympify(text, locals=local, rational=True)
        except (sympy.SympifyError, SyntaxError, TypeError) as err:
            raise ValueError(f"cannot parse polynomial {text!r}: {err}") from None
        expr = sympy.expand(expr)
        extra = expr.free_symbols - set(syms.values())
        if extra:
            raise ValueError(f"unknown symbols {sorted(map(str, extra))} in {text!r}")
        plain = expr.xreplace({s: sympy.Symbol(n) for n, s in syms.items()})
        try:
            return cls(coords, _ring(coords).from_expr(plain))
        except (ValueError, TypeError, sympy.polys.polyerrors.PolynomialError) as err:
            raise ValueError(f"{text!r} is not a polynomial with Gaussian-rational coefficients") from err

    @property
    def terms(self) -> dict:
        return dict(self.el)

    # arithmetic
    def _lift(self, other) -> PolyElement:
        if isinstance(other, Poly):
            if other.coords != self.coords:
                raise ValueError(f"coordinate mismatch: {self.coords} vs {other.coords}")
            return other.el
        return self.el.ring(ex.coerce(other))

    def __add__(self, other):
        return Poly(self.coords, self.el + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Poly(self.coords, self.el - self._lift(other))

    def __rsub__(self, other):
        return Poly(self.coords, self._lift(other) - self.el)

    def __neg__(self):
        return Poly(self.coords, -self.el)

    def __mul__(self, other):
        if isinstance(other, (PolyForm, PolyVField)):
            return NotImplemented
        return Poly(self.coords, self.el * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return Poly(self.coords, self.el ** n)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coords == other.coords and self.el == other.el
        try:
            return self.el == self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.coords, self.el))

    def __bool__(self):
        return bool(self.el)

    def is_zero(self) -> bool:
        return not self.el

    # calculus and conjugation
    def diff(self, name: str) -> "Poly":
        R = self.el.ring
        return Poly(self.coords, self.el.diff(R.gens[self.coords.index(name)]))

    def conj(self) -> "Poly":
        R = self.el.ring
        return Poly(self.coords, R.from_dict({m: ex.conj(c) for m, c in self.el.items()}))

    def real_part(self) -> "Poly":
        return (self + self.conj()) * ex.gq(Fraction(1, 2))

    def is_real(self) -> bool:
        return all(ex.is_real(c) for c in self.el.values())

    def constant_term(self):
        return self.el.get((0,) * len(self.coords), ZERO)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.el)

    def degree(self) -> int:
        return max((sum(m) for m in self.el), default=-1)

    def at(self, point: Mapping) -> object:
        """Exact value at a point given as {name: scalar}."""
        vals = [ex.coerce(point[c]) for c in self.coords]
        if not self.el:
            return ZERO
        return ex.coerce(self.el(*vals)) if len(vals) > 1 else ex.coerce(self.el(vals[0]))

    def evalf(self, point: Mapping) -> complex:
        vals = [complex(point[c]) for c in self.coords]
        total = 0j
        for mon, c in self.el.items():
            t = ex.to_complex(c)
            for v, a in zip(vals, mon):
                t *= v ** a
            total += t
        return total

    def embed(self, coords) -> "Poly":
        """The same polynomial in a larger coordinate list (pullback along a projection)."""
        coords = _coords(coords)
        pos = [coords.index(c) for c in self.coords]
        terms = {}
        for mon, c in self.el.items():
            big = [0] * len(coords)
            for p, a in zip(pos, mon):
                big[p] = a
            terms[tuple(big)] = c
        return Poly.from_terms(coords, terms)

    def substitute(self, values: Mapping[str, "Poly"]) -> "Poly":
        """Compose: replace each coordinate by a polynomial (all in one target ring)."""
        vals = [values[c] for c in self.coords]
        target = vals[0].coords
        out = Poly(target, 0)
        powers: dict = {}
        for mon, c in self.el.items():
            term = Poly(target, c)
            for j, a in enumerate(mon):
                if a:
                    key = (j, a)
                    if key not in powers:
                        powers[key] = vals[j] ** a
                    term = term * powers[key]
            out = out + term
        return out

    def __repr__(self):
        return f"Poly({self.el.as_expr()})"


def variables(coords) -> list[Poly]:
    coords = _coords(coords)
    return [Poly.var(coords, c) for c in coords]


def wirtinger(f: Poly, pair=("x", "y")) -> tuple[Poly, Poly]:
    """(d/dz f, d/dzbar f) for z = x + i y."""
    x, y = pair
    fx, fy = f.diff(x), f.diff(y)
    half = ex.gq(Fraction(1, 2))
    return (fx - fy * ex.I) * half, (fx + fy * ex.I) * half


# -------------------------------------------------------------------- PolyForm

def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting idx, or 0 on a repeated index."""
    if len(set(idx)) != len(idx):
        return 0, ()
    idx = list(idx)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class PolyForm:
    """Differential p-form sum_I w_I dx^I with increasing multi-indices I."""

    __slots__ = ("coords", "degree", "coeffs")

    def __init__(self, coords, degree: int, coeffs: Mapping | None = None):
        coords = _coords(coords)
        _ring(coords)
        if not 0 <= degree <= len(coords):
            raise ValueError(f"degree {degree} out of range for {len(coords)} coordinates")
        clean: dict = {}
        for key, f in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree or list(key) != sorted(set(key)) or (key and (key[0] < 0 or key[-1] >= len(coords))):
                raise ValueError(f"bad multi-index {key}")
            f = f if isinstance(f, Poly) else Poly(coords, f)
            if f.coords != coords:
                raise ValueError("coefficient in a different coordinate ring")
            if f:
                clean[key] = f
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("PolyForm is immutable")

    @classmethod
    def zero(cls, coords, degree: int) -> "PolyForm":
        return cls(coords, degree)

    @classmethod
    def function(cls, f: Poly) -> "PolyForm":
        return cls(f.coords, 0, {(): f})

    @classmethod
    def d_coord(cls, coords, name: str) -> "PolyForm":
        coords = _coords(coords)
        return cls(coords, 1, {(coords.index(name),): 1})

    @classmethod
    def one_form(cls, coords, components: Mapping[str, object]) -> "PolyForm":
        coords = _coords(coords)
        return cls(coords, 1, {(coords.index(n),): f for n, f in components.items()})

    def coefficient(self, *names: str) -> Poly:
        sign, key = _sort_sign([self.coords.index(n) for n in names])
        f = self.coeffs.get(key, Poly(self.coords, 0))
        return f if sign >= 0 else -f

    def _check(self, other):
        if not isinstance(other, PolyForm):
            raise TypeError(f"expected PolyForm, got {type(other).__name__}")
        if other.coords != self.coords:
            raise ValueError(f"coordinate mismatch: {self.coords} vs {other.coords}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for k, f in other.coeffs.items():
            out[k] = out[k] + f if k in out else f
        return _form(self.coords, self.degree, out)

    def __neg__(self):
        return _form(self.coords, self.degree, {k: -f for k, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> "PolyForm":
        return _form(self.coords, self.degree, {k: c * f for k, c in self.coeffs.items()})

    def __mul__(self, f):
        if isinstance(f, PolyForm):
            return NotImplemented
        return self.scale(f)

    __rmul__ = __mul__

    def __xor__(self, other):
        return self.wedge(other)

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.coords, self.degree, self.coeffs) == (other.coords, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.coords, self.degree, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def wedge(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        q = self.degree + other.degree
        if q > len(self.coords):
            return _ZeroTop(self.coords, q)
        out: dict = {}
        for a, f in self.coeffs.items():
            for b, g in other.coeffs.items():
                sign, key = _sort_sign(a + b)
                if sign:
                    t = f * g if sign > 0 else -(f * g)
                    out[key] = out[key] + t if key in out else t
        return PolyForm(self.coords, q, out)

    def d(self) -> "PolyForm":
        if self.degree >= len(self.coords):
            return _ZeroTop(self.coords, self.degree + 1)
        out: dict = {}
        for key, f in self.coeffs.items():
            for i, name in enumerate(self.coords):
                if i in key:
                    continue
                df = f.diff(name)
                if not df:
                    continue
                sign, k2 = _sort_sign((i,) + key)
                t = df if sign > 0 else -df
                out[k2] = out[k2] + t if k2 in out else t
        return PolyForm(self.coords, self.degree + 1, out)

    def contract(self, v: "PolyVField") -> "PolyForm":
        return contract(v, self)

    def conj(self) -> "PolyForm":
        return _form(self.coords, self.degree, {k: f.conj() for k, f in self.coeffs.items()})

    def is_real(self) -> bool:
        return all(f.is_real() for f in self.coeffs.values())

    def embed(self, coords) -> "PolyForm":
        coords = _coords(coords)
        pos = [coords.index(c) for c in self.coords]
        out = {}
        for key, f in self.coeffs.items():
            out[tuple(pos[i] for i in key)] = f.embed(coords)
        # pos is increasing when the small list is a subsequence; re-sort otherwise
        fixed = {}
        for key, f in out.items():
            sign, k2 = _sort_sign(key)
            fixed[k2] = f if sign > 0 else -f
        return PolyForm(coords, self.degree, fixed)

    def at(self, point: Mapping) -> dict:
        """Exact constant coefficients at a point."""
        return {k: f.at(point) for k, f in self.coeffs.items()}

    def __repr__(self):
        if not self.coeffs:
            return f"PolyForm(0, degree={self.degree})"
        parts = []
        for key, f in sorted(self.coeffs.items()):
            basis = "^".join("d" + self.coords[i] for i in key) or "1"
            parts.append(f"({f.el.as_expr()}) {basis}")
        return "PolyForm(" + " + ".join(parts) + ")"


class _ZeroTop(PolyForm):
    """The zero form in a degree above the dimension (d of a top form, etc.)."""

    __slots__ = ()

    def __init__(self, coords, degree):
        object.__setattr__(self, "coords", _coords(coords))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", {})


def _form(coords, degree: int, coeffs) -> PolyForm:
    if degree > len(coords):
        return _ZeroTop(coords, degree)
    return PolyForm(coords, degree, coeffs)


def d(alpha: PolyForm) -> PolyForm:
    return alpha.d()


def wedge(alpha: PolyForm, beta: PolyForm) -> PolyForm:
    return alpha.wedge(beta)


def df(f: Poly) -> PolyForm:
    return PolyForm.function(f).d()


# ------------------------------------------------------------------ PolyVField

class PolyVField:
    """Vector field sum_i X^i d/dx_i with polynomial components."""

    __slots__ = ("coords", "components")

    def __init__(self, coords, components: Sequence):
        coords = _coords(coords)
        if len(components) != len(coords):
            raise ValueError("need one component per coordinate")
        comps = tuple(c if isinstance(c, Poly) else Poly(coords, c) for c in components)
        if any(c.coords != coords for c in comps):
            raise ValueError("component in a different coordinate ring")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "components", comps)

    def __setattr__(self, *_):
        raise AttributeError("PolyVField is immutable")

    @classmethod
    def partial(cls, coords, name: str) -> "PolyVField":
        coords = _coords(coords)
        return cls(coords, [1 if c == name else 0 for c in coords])

    @classmethod
    def from_dict(cls, coords, comps: Mapping[str, object]) -> "PolyVField":
        coords = _coords(coords)
        unknown = set(comps) - set(coords)
        if unknown:
            raise ValueError(f"unknown coordinates {sorted(unknown)}")
        return cls(coords, [comps.get(c, 0) for c in coords])

    def __getitem__(self, name: str) -> Poly:
        return self.components[self.coords.index(name)]

    def _check(self, other):
        if not isinstance(other, PolyVField):
            raise TypeError(f"expected PolyVField, got {type(other).__name__}")
        if other.coords != self.coords:
            raise ValueError(f"coordinate mismatch: {self.coords} vs {other.coords}")

    def __add__(self, other):
        self._check(other)
        return PolyVField(self.coords, [a + b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return PolyVField(self.coords, [-a for a in self.components])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> "PolyVField":
        return PolyVField(self.coords, [a * f for a in self.components])

    def __mul__(self, f):
        return self.scale(f)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyVField):
            return NotImplemented
        return self.coords == other.coords and self.components == other.components

    def __hash__(self):
        return hash((self.coords, self.components))

    def is_zero(self) -> bool:
        return not any(self.components)

    def apply(self, f: Poly) -> Poly:
        """Directional derivative X(f)."""
        out = Poly(self.coords, 0)
        for name, a in zip(self.coords, self.components):
            if a:
                out = out + a * f.diff(name)
        return out

    def __call__(self, f: Poly) -> Poly:
        return self.apply(f)

    def conj(self) -> "PolyVField":
        return PolyVField(self.coords, [a.conj() for a in self.components])

    def embed(self, coords) -> "PolyVField":
        coords = _coords(coords)
        return PolyVField.from_dict(coords, {c: a.embed(coords) for c, a in zip(self.coords, self.components)})

    def at(self, point: Mapping) -> list:
        return [a.at(point) for a in self.components]

    def __repr__(self):
        parts = [f"({a.el.as_expr()}) d/d{c}" for c, a in zip(self.coords, self.components) if a]
        return "PolyVField(" + (" + ".join(parts) or "0") + ")"


def contract(v: PolyVField, alpha: PolyForm) -> PolyForm:
    """Interior product v ⌟ alpha, inserting v into the first slot."""
    if v.coords != alpha.coords:
        raise ValueError(f"coordinate mismatch: {v.coords} vs {alpha.coords}")
    if alpha.degree == 0:
        raise ValueError("cannot contract a 0-form")
    out: dict = {}
    for key, f in alpha.coeffs.items():
        for pos, i in enumerate(key):
            a = v.components[i]
            if not a:
                continue
            t = a * f if pos % 2 == 0 else -(a * f)
            k2 = key[:pos] + key[pos + 1:]
            out[k2] = out[k2] + t if k2 in out else t
    return _form(alpha.coords, alpha.degree - 1, out)


def evaluate_form(alpha: PolyForm, *vectors: PolyVField) -> Poly:
    """alpha(v1, ..., vp) by repeated contraction."""
    if len(vectors) != alpha.degree:
        raise ValueError("need exactly degree-many vectors")
    out = alpha
    for v in vectors:
        out = contract(v, out)
    return out.coeffs.get((), Poly(alpha.coords, 0))


def lie_bracket(X: PolyVField, Y: PolyVField) -> PolyVField:
    """[X, Y]^i = X(Y^i) - Y(X^i)."""
    X._check(Y)
    return PolyVField(X.coords, [X.apply(b) - Y.apply(a) for a, b in zip(X.components, Y.components)])


def lie_derivative(X: PolyVField, alpha: PolyForm) -> PolyForm:
    """Coordinate formula: L_X(f dx^I) = X(f) dx^I + f sum_k dx^i1 ^ ... ^ d(X^ik) ^ ... ."""
    if X.coords != alpha.coords:
        raise ValueError("coordinate mismatch")
    coords = alpha.coords
    out = PolyForm(coords, alpha.degree)
    dX = [df(a) for a in X.components]
    for key, f in alpha.coeffs.items():
        out = out + PolyForm(coords, alpha.degree, {key: X.apply(f)})
        for pos in range(len(key)):
            piece = PolyForm.function(f)
            for q, i in enumerate(key):
                piece = piece.wedge(dX[i] if q == pos else PolyForm.d_coord(coords, coords[i]))
            out = out + piece
    return out


def _det(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    coords = rows[0][0].coords
    total = Poly(coords, 0)
    for perm in permutations(range(n)):
        sign, _ = _sort_sign(perm)
        term = Poly(coords, sign)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if not term:
                break
        total = total + term
    return total


def multivector_wedge(fields: Sequence[PolyVField]) -> dict:
    """Components of X_1 ^ ... ^ X_r on increasing coordinate subsets (nonzero ones only)."""
    r = len(fields)
    coords = fields[0].coords
    out = {}
    for cols in combinations(range(len(coords)), r):
        m = _det([[f.components[c] for c in cols] for f in fields])
        if m:
            out[cols] = m
    return out


def membership_in_span(v: PolyVField, span: Sequence[PolyVField]) -> bool:
    """Generic-point test: v ^ X_1 ^ ... ^ X_r vanishes identically.

    Points where the span itself drops rank are not analysed separately.
    """
    span = list(span)
    for X in span:
        v._check(X)
    if len(span) + 1 > len(v.coords):
        return True
    if not span:
        return v.is_zero()
    return not multivector_wedge(span + [v])


# -------------------------------------------------------------------- SymTensor2

class SymTensor2:
    """Symmetric 2-tensor g_ij with polynomial entries."""

    __slots__ = ("coords", "entries")

    def __init__(self, coords, entries: Sequence[Sequence]):
        coords = _coords(coords)
        n = len(coords)
        rows = [[e if isinstance(e, Poly) else Poly(coords, e) for e in row] for row in entries]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("entries must be an n x n array")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"entries not symmetric at ({i},{j})")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "entries", tuple(tuple(r) for r in rows))

    def __setattr__(self, *_):
        raise AttributeError("SymTensor2 is immutable")

    @classmethod
    def zero(cls, coords) -> "SymTensor2":
        n = len(coords)
        return cls(coords, [[0] * n for _ in range(n)])

    @classmethod
    def constant(cls, coords, matrix) -> "SymTensor2":
        return cls(coords, [[ex.coerce(c) for c in row] for row in matrix])

    @classmethod
    def sym(cls, alpha: PolyForm, beta: PolyForm) -> "SymTensor2":
        """alpha ⊗_sym beta = (alpha ⊗ beta + beta ⊗ alpha) / 2."""
        alpha._check(beta)
        if alpha.degree != 1 or beta.degree != 1:
            raise ValueError("symmetric product of 1-forms only")
        coords = alpha.coords
        n = len(coords)
        a = [alpha.coeffs.get((i,), Poly(coords, 0)) for i in range(n)]
        b = [beta.coeffs.get((i,), Poly(coords, 0)) for i in range(n)]
        half = ex.gq(Fraction(1, 2))
        return cls(coords, [[(a[i] * b[j] + b[i] * a[j]) * half for j in range(n)] for i in range(n)])

    def __add__(self, other: "SymTensor2") -> "SymTensor2":
        if other.coords != self.coords:
            raise ValueError("coordinate mismatch")
        n = len(self.coords)
        return SymTensor2(self.coords, [[self.entries[i][j] + other.entries[i][j] for j in range(n)] for i in range(n)])

    def scale(self, f) -> "SymTensor2":
        return SymTensor2(self.coords, [[e * f for e in row] for row in self.entries])

    def __mul__(self, f):
        return self.scale(f)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymTensor2):
            return NotImplemented
        return self.coords == other.coords and self.entries == other.entries

    def __hash__(self):
        return hash((self.coords, self.entries))

    def __call__(self, X: PolyVField, Y: PolyVField) -> Poly:
        n = len(self.coords)
        out = Poly(self.coords, 0)
        for i in range(n):
            if not X.components[i]:
                continue
            for j in range(n):
                if self.entries[i][j] and Y.components[j]:
                    out = out + X.components[i] * self.entries[i][j] * Y.components[j]
        return out

    def lower(self, X: PolyVField) -> PolyForm:
        """The 1-form g(X) = g(X, .)."""
        n = len(self.coords)
        comps = {}
        for j in range(n):
            s = Poly(self.coords, 0)
            for i in range(n):
                s = s + X.components[i] * self.entries[i][j]
            comps[(j,)] = s
        return PolyForm(self.coords, 1, comps)

    def det(self) -> Poly:
        return _det([list(r) for r in self.entries])

    def at(self, point: Mapping):
        return ex.matrix([[e.at(point) for e in row] for row in self.entries])

    def evalf(self, point: Mapping):
        import numpy as np

        return np.array([[e.evalf(point) for e in row] for row in self.entries])

    def is_real(self) -> bool:
        return all(e.is_real() for row in self.entries for e in row)


# ---------------------------------------------------------------------- JSON

def poly_to_json(f: Poly) -> list:
    return [[list(m), ex.format_scalar(c)] for m, c in sorted(f.el.items())]


def poly_from_json(coords, data) -> Poly:
    """Accepts a term list [[exponents, "a/b+c/d i"], ...], an expression string, or a number."""
    coords = _coords(coords)
    if isinstance(data, str):
        return Poly.parse(coords, data)
    if isinstance(data, bool):
        raise ValueError("booleans are not polynomials")
    if isinstance(data, int):
        return Poly(coords, data)
    if not isinstance(data, list):
        raise ValueError(f"cannot read a polynomial from {type(data).__name__}")
    terms: dict = {}
    for item in data:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
            raise ValueError(f"bad term {item!r}")
        mon = tuple(item[0])
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in mon):
            raise ValueError(f"exponents must be integers: {item[0]!r}")
        terms[mon] = terms.get(mon, ZERO) + ex.parse_scalar(item[1])
    return Poly.from_terms(coords, terms)


def form_to_json(alpha: PolyForm) -> dict:
    return {
        "coords": list(alpha.coords),
        "degree": alpha.degree,
        "terms": [{"d": [alpha.coords[i] for i in key], "coeff": poly_to_json(f)}
                  for key, f in sorted(alpha.coeffs.items())],
    }


def form_from_json(data: Mapping, coords=None) -> PolyForm:
    coords = _coords(data.get("coords", coords) or ())
    if not coords:
        raise ValueError("form needs a coordinate list")
    degree = data["degree"]
    out = PolyForm(coords, degree)
    for term in data.get("terms", []):
        names = term["d"]
        if len(names) != degree:
            raise ValueError(f"term {names} has the wrong degree")
        sign, key = _sort_sign([coords.index(n) for n in names])
        if not sign:
            continue
        f = poly_from_json(coords, term["coeff"])
        out = out + PolyForm(coords, degree, {key: f if sign > 0 else -f})
    return out


def vfield_to_json(v: PolyVField) -> dict:
    return {"coords": list(v.coords),
            "components": {c: poly_to_json(a) for c, a in zip(v.coords, v.components)}}


def vfield_from_json(data: Mapping, coords=None) -> PolyVField:
    coords = _coords(data.get("coords", coords) or ())
    comps = data["components"]
    if isinstance(comps, list):
        if len(comps) != len(coords):
            raise ValueError("need one component per coordinate")
        return PolyVField(coords, [poly_from_json(coords, c) for c in comps])
    return PolyVField.from_dict(coords, {c: poly_from_json(coords, a) for c, a in comps.items()})


def iter_coords(items: Iterable[Poly]) -> Coords:
    items = list(items)
    coords = {f.coords for f in items}
    if len(coords) != 1:
        raise ValueError("objects live in different coordinate rings")
    return coords.pop()
