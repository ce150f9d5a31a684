from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from koornwinder import closedforms as cf
from koornwinder.params import DEFAULT, QUADRATURE, SPECIALIZATIONS, ParamSet
from koornwinder.polynomials import compute_ns, compute_sym, xi_eta
from koornwinder.rootsys import AffineRoot, MultiplicityData, is_dominant, orbit, weights_with_plus_sum
from koornwinder.spectrum import gamma, inverse_point, v_eval, x0

BOX = weights_with_plus_sum(2, 2)
DOMINANT = [lam for lam in BOX if is_dominant(lam)]
SPEC_IDS = ["default", "second", "third"]
fractions = st.fractions(min_value=-3, max_value=3, max_denominator=9).filter(lambda v: v not in (0, 1, -1))


@given(fractions, fractions, st.integers(0, 5), st.integers(0, 5))
def test_pochhammer_splits(y, q, j, k):
    assert cf.qpoch(y, q, j + k) == cf.qpoch(y, q, j) * cf.qpoch(y * q**j, q, k)


def test_pochhammer_float_and_infinite():
    assert cf.qpoch(Fraction(1, 2), Fraction(1, 3), 0) == 1
    assert cf.qpoch(0.5, 0.25, 2) == pytest.approx(0.5 * 0.875)
    finite = cf.qpoch(0.3, 0.5, 60)
    assert abs(cf.qpoch_inf(0.3, 0.5, 60) - finite) < 1e-15
    with pytest.raises(ValueError):
        cf.qpoch_inf(0.3, 1.5, 10)


def test_v_factor_examples():
    p = DEFAULT
    g0 = gamma((0, 0), p)
    a1 = AffineRoot((1, -1))
    t2 = p.t**2
    assert v_eval(a1, g0, p.mult, p) == (1 - t2 * t2) / (1 - t2)
    trivial = ParamSet(p.qh, MultiplicityData(*(Fraction(1),) * 5))
    assert v_eval(AffineRoot((0, 2)), g0, trivial.mult, trivial) == 1
    assert cf.C_eval((Fraction(2, 3), Fraction(-7, 5)), trivial.mult, trivial) == 1


@pytest.mark.parametrize("p", SPECIALIZATIONS, ids=SPEC_IDS)
def test_nonsymmetric_evaluation(p):
    point = inverse_point(x0(p, 2))
    assert cf.eval_formula_ns((0, 0), p) == 1
    for lam in BOX:
        assert cf.eval_formula_ns(lam, p) == compute_ns(lam, p).poly.eval_at(point)


@pytest.mark.parametrize("p", SPECIALIZATIONS, ids=SPEC_IDS)
def test_symmetric_evaluation_routes(p):
    point = x0(p, 2)
    for lam in DOMINANT:
        solver = compute_sym(lam, p).poly.eval_at(point)
        assert cf.eval_sym_roots(lam, p) == solver
        assert cf.eval_sym_pochhammer(lam, p) == solver


@pytest.mark.parametrize("p", SPECIALIZATIONS, ids=SPEC_IDS)
def test_k_constant_routes(p):
    K = cf.K_const(p, 2)
    for lam in [(0, 0), (1, 0), (1, 1), (2, 1)]:
        assert cf.K_orbit_sum(lam, p) == K
    assert cf.weyl_average_C((Fraction(2, 7), Fraction(-5, 3)), p) == K


def test_norm_ratios():
    assert cf.norm_ratio_sym((0, 0), DEFAULT) == 1
    assert cf.norm_ratio_ns((0, 0), DEFAULT) == 1
    with pytest.raises(ValueError):
        cf.norm_ratio_sym((0, 1), DEFAULT)
    # the non-symmetric ratio at a dominant weight differs from the symmetric one by the c-function factor
    for lam in [(1, 0), (2, 1)]:
        dual = DEFAULT.mult.dual()
        ratio = cf.C_eval(inverse_point(gamma((0, 0), DEFAULT)), dual, DEFAULT) / cf.C_eval(
            inverse_point(gamma(lam, DEFAULT)), dual, DEFAULT
        )
        assert cf.norm_ratio_ns(lam, DEFAULT) == ratio * cf.norm_ratio_sym(lam, DEFAULT)


def test_hecke_coefficients_on_stable_side():
    # when s_i fixes lam, xi_i + eta_i collapses to the dual t_i
    p = DEFAULT
    for lam, i in [((1, 1), 1), ((1, 0), 2), ((0, 0), 1)]:
        xi, _ = xi_eta(1 if i == 1 else i, lam, p)
        assert xi == p.dual().simple(2, i)
    g = gamma((2, 1), p)
    xi, eta = cf.xi_eta_at(1, g, 1, p)
    assert (xi, eta) == xi_eta(1, (2, 1), p)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_norm_relations(lam):
    r = cf.norm_relation_check(lam, DEFAULT, tol_rel=1e-6)
    assert r.passed, r.rel_error


def test_norm_relation_needs_regular_weight():
    with pytest.raises(ValueError):
        cf.norm_relation_sides((1, 1), DEFAULT)


def test_constant_term_product():
    assert cf.gustafson_ct(QUADRATURE, 2) > 0
    assert abs(cf.gustafson_ct(DEFAULT, 2, M=40) - cf.gustafson_ct(DEFAULT, 2, M=60)) < 1e-12
    assert cf.t_sigma(DEFAULT, 2) == DEFAULT.t**2 * DEFAULT.tn**2


def test_orbit_sum_touches_every_orbit_point():
    assert len(orbit((1, 0))) == 4
