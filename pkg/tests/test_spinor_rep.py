import numpy as np
import pytest

from cplxgeom import exact as ex
from cplxgeom.clifford_core import Signature, eta_square_sign
from cplxgeom.clock import classify
from cplxgeom.exact import I
from cplxgeom.spinor_rep import (
    SX,
    ISY,
    SY,
    SZ,
    GammaRep,
    Spinor,
    build_gamma,
    cc_sign_formula,
    charge_conjugate,
    check_clifford_relations,
    chirality,
    intertwiner_audit,
    intertwiners,
    majorana_basis,
    majorana_complex_structure,
    majorana_weyl_match,
    normalize_pair,
    preset8_C,
    solve_B,
    solve_C,
    weyl_split,
)

EVEN = [(k, m - k) for m in (2, 4, 6, 8) for k in range(m + 1)]


def _np_relations(gammas, k):
    """Clifford relations checked in floating point, independently of the exact checker."""
    gs = [ex.to_numpy(g) for g in gammas]
    d = gs[0].shape[0]
    for a, ga in enumerate(gs):
        for b, gb in enumerate(gs):
            target = (2 if a < k else -2) * np.eye(d) if a == b else np.zeros((d, d))
            if not np.allclose(ga @ gb + gb @ ga, target):
                return False
    return True


def test_two_dimensional_rep():
    rep = build_gamma(1, 1)
    assert ex.meq(rep.gammas[0], SX)
    assert ex.meq(rep.gammas[1], SY * I)
    assert ex.meq(SY * I, ISY)


@pytest.mark.parametrize("k,l", EVEN)
def test_relations_for_all_even_signatures(k, l):
    rep = build_gamma(k, l)
    assert rep.relations_hold()
    assert _np_relations(rep.gammas, k)
    allowed = {ex.ZERO, ex.ONE, -ex.ONE, I, -I}
    assert all(z in allowed for g in rep.gammas for r in ex.entries(g) for z in r)


def test_preset8_is_the_listed_matrices():
    rep = build_gamma(7, 1, preset="paper8")
    X, Y, Z, E = SX, SY, SZ, ex.eye(2)
    assert ex.meq(rep.gammas[0], ex.kron(X, E, E, E))
    assert ex.meq(rep.gammas[7], ex.kron(Y, Z, Y, Z) * I)
    assert rep.relations_hold() and _np_relations(rep.gammas, 7)
    C = preset8_C()
    assert all(ex.meq(C * g, ex.mconj(g) * C) for g in rep.gammas)
    assert ex.meq(ex.mconj(C) * C, -ex.eye(16))


@pytest.mark.parametrize("k,l,preset", [(3, 0, None), (2, 1, None), (0, 0, None), (3, 1, "paper8"),
                                        (7, 1, "other"), (-1, 3, None), (6, 4, None)])
def test_build_gamma_rejections(k, l, preset):
    with pytest.raises(ValueError):
        build_gamma(k, l, preset=preset)


def test_corrupted_rep_is_caught():
    rep = build_gamma(3, 1)
    bad = GammaRep(3, 1, (rep.gammas[0], rep.gammas[0], rep.gammas[2], rep.gammas[3]))
    assert not bad.relations_hold()
    # a reducible "rep" (doubled) has a 4-dimensional intertwiner space
    doubled = tuple(ex.kron(ex.eye(2), g) for g in build_gamma(1, 1).gammas)
    with pytest.raises(ValueError):
        solve_B(GammaRep(1, 1, doubled))


@pytest.mark.parametrize("k,l,iota,half", [(3, 1, I, 2), (1, 1, ex.ONE, 1), (7, 1, I, 8)])
def test_weyl_split(k, l, iota, half):
    rep = build_gamma(k, l, preset="paper8" if (k, l) == (7, 1) else None)
    assert rep.iota == iota
    plus, minus = weyl_split(rep)
    assert len(plus) == len(minus) == half
    assert all(chirality(rep, v) == "+" for v in plus)
    assert all(chirality(rep, v) == "-" for v in minus)


@pytest.mark.parametrize("k,l,sign", [(7, 1, 1), (1, 1, 1), (3, 1, -1)])
def test_B_symmetry(k, l, sign):
    rep = build_gamma(k, l, preset="paper8" if (k, l) == (7, 1) else None)
    B = solve_B(rep)
    assert ex.meq(B.transpose(), B * ex.gq(sign))
    assert all(ex.meq(B * g, g.transpose() * B) for g in rep.gammas)


@pytest.mark.parametrize("k,l,sign", [(7, 1, -1), (3, 1, 1), (1, 3, -1)])
def test_C_sign(k, l, sign):
    rep = build_gamma(k, l)
    C, exact_ok = solve_C(rep)
    assert exact_ok
    assert cc_sign_formula(k, l) == sign
    assert ex.meq(ex.mconj(C) * C, ex.eye(rep.size) * sign)


def test_preset_C_matches_solved_C_up_to_scale():
    rep = build_gamma(7, 1, preset="paper8")
    C, _ = solve_C(rep)
    assert ex.scalar_multiple(C, preset8_C()) is not None


@pytest.mark.parametrize("k,l", EVEN)
def test_intertwiner_identities(k, l):
    rep = build_gamma(k, l)
    tw = intertwiners(rep)
    assert tw.normalized
    report = intertwiner_audit(rep, tw.B, tw.C)
    assert report.passed, [name for name, ok in report.checks if not ok]


@pytest.mark.parametrize("k,l", [(7, 1), (1, 1), (3, 1), (2, 2)])
def test_B_times_i_breaks_the_pair_identity(k, l):
    rep = build_gamma(k, l)
    tw = intertwiners(rep)
    lhs = ex.mconj(tw.B * I) * tw.C
    rhs = ex.mconj(tw.C).transpose() * (tw.B * I).transpose()
    assert not ex.meq(lhs, rhs)
    B2, _ = normalize_pair(tw.B * I, tw.C)
    assert ex.meq(ex.mconj(B2) * tw.C, ex.mconj(tw.C).transpose() * B2.transpose())


def test_preset_and_recursive_reps_agree_on_invariants():
    preset = build_gamma(7, 1, preset="paper8")
    rec = build_gamma(7, 1)
    for rep in (preset, rec):
        tw = intertwiners(rep)
        assert intertwiner_audit(rep, tw.B, tw.C).passed
        assert ex.meq(tw.B.transpose(), tw.B)
        assert ex.meq(ex.mconj(tw.C) * tw.C, -ex.eye(16))


@pytest.mark.parametrize("k,l", [(1, 1), (3, 1), (2, 2), (4, 2)])
def test_charge_conjugation_involutive_when_real(k, l):
    rep = build_gamma(k, l)
    C = intertwiners(rep).C
    phi = ex.column([ex.gq(j + 1, (-1) ** j) for j in range(rep.size)])
    assert ex.meq(charge_conjugate(charge_conjugate(phi, C), C), phi)


@pytest.mark.parametrize("k,l", EVEN)
def test_chirality_rule(k, l):
    rep = build_gamma(k, l)
    C = intertwiners(rep).C
    flips = eta_square_sign(Signature(k, l)) == -1
    plus, minus = weyl_split(rep)
    for basis, sign in ((plus, "+"), (minus, "-")):
        for phi in basis:
            out = charge_conjugate(Spinor.of(rep, phi), C, rep)
            expected = {"+": "-", "-": "+"}[sign] if flips else sign
            assert out.chirality == expected


@pytest.mark.parametrize("k,l", EVEN)
def test_majorana_existence(k, l):
    rep = build_gamma(k, l)
    basis = majorana_basis(rep, intertwiners(rep).C)
    assert (basis is not None) == (cc_sign_formula(k, l) == 1)
    if basis is not None:
        C = intertwiners(rep).C
        assert len(basis) == rep.size
        assert all(ex.meq(charge_conjugate(b, C), b) for b in basis)
        assert np.linalg.matrix_rank(np.hstack([ex.to_numpy(b) for b in basis])) == rep.size


def test_majorana_examples():
    assert len(majorana_basis(build_gamma(3, 1), intertwiners(build_gamma(3, 1)).C)) == 4
    assert majorana_basis(build_gamma(7, 1), intertwiners(build_gamma(7, 1)).C) is None
    assert len(majorana_basis(build_gamma(1, 1), intertwiners(build_gamma(1, 1)).C)) == 2


@pytest.mark.parametrize("k,l,size", [(3, 1, 4), (4, 2, 8)])
def test_majorana_complex_structure(k, l, size):
    rep = build_gamma(k, l)
    ms = majorana_complex_structure(rep)
    assert ms.J.shape == (size, size)
    assert all(ex.is_real(z) for r in ex.entries(ms.J) for z in r)
    assert ex.meq(ms.J * ms.J, -ex.eye(size))
    assert majorana_weyl_match(rep, ms)


def test_majorana_complex_structure_rejects_other_signatures():
    with pytest.raises(ValueError):
        majorana_complex_structure(build_gamma(2, 2))


@pytest.mark.parametrize("k,l", EVEN)
def test_times_i_swaps_signature(k, l):
    rep = build_gamma(k, l).times_i()
    assert (rep.k, rep.l) == (l, k)
    assert check_clifford_relations(rep.gammas, rep.k, rep.l)


@pytest.mark.parametrize("k,l", EVEN)
def test_majorana_matches_real_matrix_algebra(k, l):
    # Majorana spinors exist exactly when the complexified rep has a real form:
    # the algebra is R(N) or the even part is, for the signatures swept here
    exists = cc_sign_formula(k, l) == 1
    base = classify(k, l).base
    if base == "H":
        assert not exists
    if base == "R":
        assert exists
