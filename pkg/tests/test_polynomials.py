import pytest

from koornwinder.exactring import LaurentPoly
from koornwinder.heckeops import is_invariant
from koornwinder.params import DEFAULT, SPECIALIZATIONS, ParamSet
from koornwinder.polynomials import (
    check_central_character,
    check_duality,
    check_duality_sym,
    check_eigen,
    check_expansions,
    check_gwcf,
    check_idempotents,
    check_intertwiner,
    check_spectral_action,
    check_Ti_action,
    compute_antisym,
    compute_ns,
    compute_sym,
    expansion_coefficient,
    in_downset,
    monomial_symmetric,
    normalize_E,
    normalize_Eplus,
    xi_eta,
)
from koornwinder.rootsys import is_dominant, orbit, weights_with_plus_sum
from koornwinder.spectrum import GenericityError, gamma, inverse_point, x0
from oracles import kernel_polynomial

BOX = weights_with_plus_sum(2, 2)
DOMINANT = [lam for lam in BOX if is_dominant(lam)]
DEGENERATE = ParamSet.make("1/2", "2", "2/3", "1", "1", "4/5")


def test_trivial_weight_gives_one():
    assert compute_ns((0, 0), DEFAULT).poly == LaurentPoly.const(2, 1)
    assert compute_sym((0, 0), DEFAULT).poly == LaurentPoly.const(2, 1)


@pytest.mark.parametrize("lam", [(1, 0), (0, -1), (1, 1)])
def test_solver_matches_dense_nullspace(lam):
    expected, dim = kernel_polynomial(lam, DEFAULT)
    assert dim == 1
    assert compute_ns(lam, DEFAULT).poly == expected


@pytest.mark.parametrize("lam", BOX)
def test_nonsymmetric_polynomials(lam):
    kp = compute_ns(lam, DEFAULT)
    assert kp.poly.coeff(lam) == 1
    assert in_downset(kp.poly, lam)
    assert check_eigen(kp)


def test_second_specialization_eigen():
    for lam in weights_with_plus_sum(2, 1):
        assert check_eigen(compute_ns(lam, SPECIALIZATIONS[1]))


def test_collision_is_reported():
    with pytest.raises(GenericityError, match="spectral collision"):
        compute_ns((1, 0), DEGENERATE)


@pytest.mark.parametrize("lam", DOMINANT)
def test_symmetric_polynomials(lam):
    kp = compute_sym(lam, DEFAULT, cross_check=True)
    assert is_invariant(kp.poly)
    assert kp.poly.coeff(lam) == 1
    assert kp.info["idempotent_route"] == "agrees"


def test_symmetric_rejects_non_dominant():
    with pytest.raises(ValueError):
        compute_sym((0, 1), DEFAULT)


def test_monomial_symmetric_basis():
    m = monomial_symmetric((1, 0))
    assert len(m) == 4 and is_invariant(m)


def test_antisymmetric_needs_regular_weight():
    with pytest.raises(ValueError):
        compute_antisym((1, 0), DEFAULT)
    kp = compute_antisym((2, 1), DEFAULT)
    assert kp.poly.coeff((2, 1)) == 1
    assert kp.info["expansion_route"] == "agrees"


@pytest.mark.parametrize("lam", DOMINANT)
def test_character_formula(lam):
    assert check_gwcf(lam, DEFAULT).passed


def test_normalisations():
    point = x0(DEFAULT, 2)
    for lam in [(1, 0), (0, 1), (-1, 1)]:
        assert normalize_E(lam, DEFAULT).poly.eval_at(inverse_point(point)) == 1
    assert normalize_Eplus((1, 1), DEFAULT).poly.eval_at(point) == 1


@pytest.mark.parametrize("lam", BOX)
def test_hecke_action_on_eigenpolynomials(lam):
    for i in (1, 2):
        assert check_Ti_action(lam, i, DEFAULT).passed
        assert check_intertwiner(lam, i, DEFAULT).passed
    for i in (0, 1, 2):
        assert check_spectral_action(lam, i, DEFAULT).passed
    assert check_central_character(lam, DEFAULT).passed


def test_stable_weight_acts_by_scalar():
    # lam orthogonal to a_1: T_1 fixes P_lam up to t
    xi, _ = xi_eta(1, (1, 1), DEFAULT)
    assert xi == DEFAULT.t


def test_eta_on_the_lower_side():
    _, eta = xi_eta(1, (0, 1), DEFAULT)
    assert eta == DEFAULT.dual().simple(2, 1)


@pytest.mark.parametrize("lam", DOMINANT)
def test_orbit_expansions(lam):
    assert all(c.passed for c in check_expansions(lam, DEFAULT))


def test_expansion_routes_agree():
    for lam in [(1, 0), (2, 1)]:
        for mu in orbit(lam):
            for sign in (1, -1):
                a = expansion_coefficient(lam, mu, sign, DEFAULT, route=1)
                b = expansion_coefficient(lam, mu, sign, DEFAULT, route=2)
                assert a == b


def test_idempotents_on_a_polynomial():
    f = LaurentPoly(2, {(1, 0): 2, (-1, 2): 1, (0, 0): -3})
    assert all(c.passed for c in check_idempotents(f, DEFAULT))


@pytest.mark.parametrize("p", SPECIALIZATIONS[:2], ids=["default", "second"])
def test_duality(p):
    lams = weights_with_plus_sum(2, 1)
    assert all(check_duality(a, b, p).passed for a in lams for b in lams)
    dom = [lam for lam in lams if is_dominant(lam)]
    assert all(check_duality_sym(a, b, p).passed for a in dom for b in dom)


def test_spectrum_examples():
    p = DEFAULT
    t0tn = p.t0 * p.tn
    assert gamma((0, 0), p) == (t0tn * p.t**2, t0tn)
    assert gamma((1, 0), p) == (t0tn * p.t**2 * p.q, t0tn)
    dual = p.dual()
    assert x0(p, 2) == gamma((0, 0), dual) == (p.tnv * p.tn * p.t**2, p.tnv * p.tn)
