import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from koornwinder import torusquad as tq
from koornwinder.exactring import LaurentPoly
from koornwinder.params import DEFAULT, QUADRATURE, ParamSet
from koornwinder.rootsys import weyl_group
from koornwinder.spectrum import GenericityError

GRID = tq.GridSpec(64, 40)
P = QUADRATURE
TOL = dict(tol_abs=1e-8, tol_rel=1e-6)


def _all_pass(checks):
    failed = [c.to_json_obj() for c in checks if not c.passed]
    assert not failed, failed


def test_grid_validation():
    with pytest.raises(ValueError):
        tq.GridSpec(48, 40)
    with pytest.raises(ValueError):
        tq.GridSpec(8, 40)
    with pytest.raises(ValueError):
        tq.GridSpec(64, 10)


def test_auto_grid_tracks_pole_moduli():
    assert tq.auto_grid(P).N == 64
    assert tq.auto_grid(DEFAULT).N == 256
    assert tq.pole_modulus(DEFAULT) == pytest.approx(25 / 28)


@given(st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_trapezoid_integrates_monomials_exactly(e):
    pts = tq.torus_grid(2, 16)
    mean = np.mean(LaurentPoly.monomial(e).eval_numeric(pts))
    assert abs(mean - (1 if e == (0, 0) else 0)) < 1e-13


def test_symmetric_weight_is_positive_and_invariant():
    rng = np.random.default_rng(3)
    pts = np.exp(2j * np.pi * rng.random((20, 2)))
    base = tq.delta_plus(pts, P)
    assert np.all(base.real > 0) and np.max(np.abs(base.imag)) < 1e-12 * np.max(base.real)
    for w in weyl_group(2):
        moved = np.empty_like(pts)
        for i, (pos, s) in enumerate(zip(w.perm, w.signs)):
            moved[:, pos] = pts[:, i] ** s
        assert np.allclose(tq.delta_plus(moved, P), base, rtol=1e-12)


def test_weight_is_stable_in_truncation():
    pts = tq.torus_grid(2, 16)
    a = tq.delta(pts, P, M=40)
    b = tq.delta(pts, P, M=50)
    assert np.max(np.abs(a - b)) < 1e-14 * np.max(np.abs(b))


def test_pole_on_the_contour_is_reported():
    pts = np.array([[1.0 + 0j, 1.0 + 0j]])
    with pytest.raises(GenericityError):
        tq.eval_factors([tq.Factor(1.0, (1, 0), -1)], pts, float(P.q), 20)


def test_quadrature_rejects_large_parameters():
    with pytest.raises(ValueError):
        tq.Pairing(ParamSet.make("1/2", "3", "2/3", "1/2", "5/7", "4/5"), 2, GRID)


def test_biorthogonality():
    _all_pass(tq.biorthogonality_check([(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)], P, GRID, **TOL))


def test_orthogonality():
    _all_pass(tq.orthogonality_check([(0, 0), (1, 0), (1, 1), (2, 0)], P, GRID, **TOL))


def test_constant_term():
    assert tq.constant_term_check(P, 2, GRID, tol_rel=1e-8).passed


def test_symmetric_reduction_and_weight_identities():
    _all_pass(tq.weight_identity_check(P, 2, seed=1))
    _all_pass(tq.symmetric_reduction_check(P, 2, GRID, trials=3, seed=1, tol_rel=1e-10))


@pytest.mark.parametrize("i", [0, 1, 2])
def test_adjointness(i):
    assert tq.adjoint_check(i, P, 2, GRID, trials=2, seed=5, tol_abs=1e-8).passed


def test_convergence():
    assert tq.convergence_check(P, 2, [(0, 0), (1, 0)], GRID).passed


def test_residue_weights():
    _all_pass(tq.residue_check([(0, 0), (1, 0), (0, 1), (1, 1)], P, GRID, tol_rel=1e-6))
    assert tq.shifted_residue_check(P, 2, GRID, tol_rel=1e-6).passed


def test_transform_roundtrip():
    support = tq.roundtrip_support(2, (1, 0))
    assert set(support) == {(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)}
    _all_pass(tq.transform_roundtrip(support, P, GRID, tol_rel=1e-6))


def test_json_numbers():
    assert tq.as_json_number(2.5 + 0j) == 2.5
    assert tq.as_json_number(1 + 2j) == [1.0, 2.0]
