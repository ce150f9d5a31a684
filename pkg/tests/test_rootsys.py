from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from koornwinder.params import DEFAULT
from koornwinder.rootsys import (
    AffineRoot,
    AffineWeylElement,
    SignedPermutation,
    affine_inversion_set,
    classify_orbit,
    downset,
    inversion_set_finite,
    inversion_set_translation,
    is_dominant,
    kappa,
    orbit,
    preceq,
    reduced_word,
    rho_vectors,
    t_w,
    w_lambda,
    weyl_group,
    word_to_element,
)

weights2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
words2 = st.lists(st.integers(0, 2), max_size=8)


def test_orbit_classification():
    assert classify_orbit(AffineRoot((-2, 0), 2)) == "a0"
    assert classify_orbit(AffineRoot((0, 2), 0)) == "an"
    assert classify_orbit(AffineRoot((1, 0), 1)) == "a0v"
    assert classify_orbit(AffineRoot((1, 0), 0)) == "anv"
    assert classify_orbit(AffineRoot((1, -1), 4)) == "mid"
    with pytest.raises(ValueError):
        classify_orbit(AffineRoot((1, 1, 1), 0))


def test_lengths():
    assert AffineWeylElement.identity(2).length() == 0
    assert AffineWeylElement.translation((1, 0)).length() == 4
    assert AffineWeylElement.simple(2, 1).length() == 1


def test_translation_word_multiplies_back():
    tau = AffineWeylElement.translation((1, 0))
    word = reduced_word(tau)
    assert len(word) == 4
    assert word_to_element(2, word) == tau
    assert reduced_word(AffineWeylElement.identity(2)) == []


@given(words2)
def test_reduced_word_roundtrip(word):
    u = word_to_element(2, word)
    w = reduced_word(u)
    assert word_to_element(2, w) == u
    assert len(w) == u.length() <= len(word)


def test_shortest_coset_representatives():
    assert w_lambda((2, 1)).is_identity()
    assert w_lambda((0, 1)) == SignedPermutation.simple(2, 1)
    w = w_lambda((-1, 0))
    assert w.apply((1, 0)) == (-1, 0) and w.length() == 3


@given(weights2)
def test_w_lambda_is_shortest(lam):
    w = w_lambda(lam)
    lam_plus = tuple(sorted((abs(a) for a in lam), reverse=True))
    assert w.apply(lam_plus) == lam
    assert all(v.length() >= w.length() for v in weyl_group(2) if v.apply(lam_plus) == lam)


def test_rho_vectors():
    assert rho_vectors((3, 1)) == ((2, 0), (1, 1))
    assert rho_vectors((0, 0)) == ((2, 0), (1, 1))
    assert rho_vectors((0, 1)) == ((0, 2), (1, 1))


def test_order_examples():
    assert preceq((0, 1), (1, 0))
    assert preceq((1, 1), (2, 0))
    assert preceq((1, 0), (1, 0))
    assert not preceq((1, 0), (0, 1))


def test_downsets():
    assert set(downset((1, 0))) == {(0, 0), (-1, 0), (0, -1), (0, 1), (1, 0)}
    assert downset((0, 0)) == ((0, 0),)
    assert len(downset((1, 1))) == 9


@given(weights2)
def test_downset_contains_weight_and_is_closed(lam):
    ds = set(downset(lam))
    assert lam in ds
    assert all(preceq(mu, lam) for mu in ds)
    for mu in ds:
        assert set(downset(mu)) <= ds


def test_inversion_sets():
    assert inversion_set_finite(SignedPermutation.identity(2)) == set()
    assert inversion_set_finite(SignedPermutation.simple(2, 1)) == {AffineRoot((1, -1), 0)}
    assert inversion_set_translation((0, 0)) == set()
    assert len(inversion_set_translation((1, 0))) == 4


@given(weights2)
def test_translation_inversions_count_the_length(lam):
    lam = tuple(sorted((abs(a) for a in lam), reverse=True))
    assert len(inversion_set_translation(lam)) == AffineWeylElement.translation(lam).length()


@given(st.sampled_from(weyl_group(2)))
def test_finite_inversions_count_the_length(w):
    assert len(inversion_set_finite(w)) == w.length()


def test_multiplicity_products():
    m = DEFAULT.mult
    assert t_w(AffineWeylElement.identity(2), m) == 1
    assert t_w(word_to_element(2, [1, 2]), m) == DEFAULT.t * DEFAULT.tn


@given(words2)
def test_multiplicity_product_is_inversion_product(word):
    u = word_to_element(2, word)
    m = DEFAULT.mult
    prod = Fraction(1)
    for beta in affine_inversion_set(u):
        prod *= m.of_root(beta)
    assert t_w(u, m) == prod


def test_dual_is_an_involution():
    m = DEFAULT.mult
    assert m.dual().dual() == m
    assert m.dual().as_tuple() != m.as_tuple()


@given(weights2)
def test_orbit_has_one_dominant_member(lam):
    orb = orbit(lam)
    assert sum(is_dominant(mu) for mu in orb) == 1
    assert lam in orb


def test_kappa():
    assert kappa(2) == (2, 1)
    assert kappa(3) == (3, 2, 1)
