from itertools import product
from math import gcd

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgekit.elliptic import (
    LDO,
    FourierCoefficient,
    NotElliptic,
    OutOfScope,
    apply,
    compose,
    is_elliptic,
    laplace,
    parametrix,
    regularity_shadow,
    sobolev_identity_check,
    sobolev_norm_sq,
)
from hodgekit.gaussian import GaussianRational

small = st.integers(-3, 3)
gauss = st.builds(GaussianRational, small, small)


def trig_polys(n):
    modes = st.tuples(*[st.integers(-3, 3)] * n)
    return st.dictionaries(modes, gauss, min_size=1, max_size=5).map(lambda c: FourierCoefficient(n, c))


def brute_sobolev(f, s):
    """Oracle: direct (1 + |k|^2)^s weighting with Python integers."""
    total = mpq(0)
    for k, c in f.coeffs.items():
        total += (c.re ** 2 + c.im ** 2) * (1 + sum(x * x for x in k)) ** s
    return total


# -- ellipticity verdicts --------------------------------------------------------


@pytest.mark.parametrize("op,label,method", [
    (laplace(2), "elliptic", "binary-form-roots"),
    (laplace(3, shift=1), "elliptic", "sylvester"),
    (LDO(2, {(1, 0): 1, (0, 1): GaussianRational(0, 1)}), "elliptic", "rank"),
    (LDO(2, {(1, 0): 1}), "not-elliptic", "rank"),
    (LDO(2, {(2, 0): 1, (0, 2): -1}), "not-elliptic", "binary-form-roots"),
    (LDO(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -2}), "not-elliptic", "sylvester"),
    (LDO(2, {(4, 0): 1, (0, 4): 1}), "elliptic-on-samples", "integer-shell"),
    (LDO(2, {(3, 0): 1, (0, 3): 1}), "not-elliptic", "sampled-zero"),
])
def test_verdicts(op, label, method):
    v = is_elliptic(op)
    assert v.label == label
    assert v.method == method


def test_witness_is_a_zero():
    op = LDO(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -2})
    v = is_elliptic(op)
    assert op.principal_symbol(v.witness).is_zero()


def test_mixed_pencil_is_elliptic():
    # xi1^2 + xi2^2 + i (xi2^2 + xi3^2) has A, B semidefinite; A + B is definite
    op = LDO(3, {(2, 0, 0): 1, (0, 2, 0): GaussianRational(1, 1), (0, 0, 2): GaussianRational(0, 1)})
    v = is_elliptic(op)
    assert v.label == "elliptic" and v.method == "definite-pencil"


def test_sample_count_reported():
    v = is_elliptic(LDO(2, {(4, 0): 1, (0, 4): 1}), height=3)
    # primitive vectors in [-3, 3]^2
    expected = sum(1 for xi in product(range(-3, 4), repeat=2) if any(xi) and gcd(*xi) == 1)
    assert v.samples == expected


# -- Sobolev identity -------------------------------------------------------------


def test_unweighted_formula_witness():
    rep = sobolev_identity_check(FourierCoefficient.exp((1,)), 2)
    assert rep["norm_sq"] == "4"
    assert rep["unweighted_sum"] == "3"
    assert rep["weighted_ok"]


def test_negative_order_out_of_scope():
    with pytest.raises(OutOfScope):
        sobolev_norm_sq(FourierCoefficient.exp((1,)), -1)


@settings(max_examples=100)
@given(st.integers(1, 2).flatmap(trig_polys), st.integers(0, 3))
def test_weighted_identity(f, s):
    rep = sobolev_identity_check(f, s)
    assert rep["weighted_ok"]
    assert mpq(rep["norm_sq"]) == brute_sobolev(f, s)


# -- parametrix -----------------------------------------------------------------


def test_parametrix_of_laplacian():
    P = parametrix(laplace(2))
    rep = P.check(3)
    assert rep["ok"]
    assert rep["zero_set"] == [[0, 0]]


def test_parametrix_of_shifted_laplacian_is_inverse():
    P = parametrix(laplace(1, shift=1))
    assert P.check(4)["zero_set"] == []
    f = FourierCoefficient(1, {(2,): 5})
    assert P.apply(f) == FourierCoefficient(1, {(2,): 1})


def test_parametrix_refuses_non_elliptic():
    with pytest.raises(NotElliptic):
        parametrix(LDO(2, {(2, 0): 1, (0, 2): -1}))


@given(trig_polys(2))
def test_parametrix_identities(f):
    P = parametrix(laplace(2))
    expected = f - P.defect(f)
    assert P.apply(apply(laplace(2), f)) == expected
    assert apply(laplace(2), P.apply(f)) == expected
    assert P.defect(P.defect(f)) == P.defect(f)


def test_compose_multiplies_symbols():
    op = compose(laplace(2), laplace(2, shift=-1))
    assert op.order == 4
    for k in ((0, 0), (1, 2), (-3, 1)):
        assert op.symbol(k) == laplace(2).symbol(k) * laplace(2, shift=-1).symbol(k)


def test_regularity_shadow():
    f = FourierCoefficient(1, {(5,): 1, (0,): 3})
    rep = regularity_shadow(laplace(1), f, 2)
    assert rep["ok"] and rep["image_high_only"]


def test_json_round_trips():
    op = LDO(2, {(2, 0): GaussianRational(1, 2), (0, 1): -3})
    assert LDO.from_json(op.to_json()).terms == op.terms
    f = FourierCoefficient(2, {(1, -1): GaussianRational(mpq(1, 2), 3)})
    assert FourierCoefficient.from_json(f.to_json()) == f
