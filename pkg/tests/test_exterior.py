import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgekit.exterior import (
    COMPLEX,
    REAL,
    ComplexBasisWord,
    DimensionMismatch,
    Form,
    complex_words,
    conversion_sign_report,
    inner_product,
    permutation_sign,
    project_bidegree,
    real_words,
    to_complex,
    to_real,
    weight_J,
    weight_w,
)
from hodgekit.gaussian import ONE, GaussianRational, I

small = st.integers(-3, 3)


def random_form(n, rep):
    words = real_words(n) if rep == REAL else complex_words(n)
    return st.dictionaries(st.sampled_from(words), st.builds(GaussianRational, small, small), max_size=6).map(
        lambda t: Form(n, rep, t))


def test_basis_sizes():
    for n in (1, 2, 3):
        assert len(real_words(n)) == 4 ** n
        assert len(complex_words(n)) == 4 ** n


def test_dz_in_real_basis():
    # dz = dx + i dy, dzbar = dx - i dy, dz ^ dzbar = -2i dx ^ dy
    assert to_real(Form.z(1, 1)) == Form.x(1, 1) + Form.y(1, 1) * I
    assert to_real(Form.zbar(1, 1)) == Form.x(1, 1) - Form.y(1, 1) * I
    assert to_real(Form.w(1, 1)) == Form.real_word(1, ["x1", "y1"]) * GaussianRational(0, -2)


def test_w_is_z_wedge_zbar():
    assert Form.z(2, 3) ^ Form.zbar(2, 3) == Form.w(2, 3)
    assert Form.zbar(2, 3) ^ Form.z(2, 3) == -Form.w(2, 3)


def test_real_word_sign_and_repeat():
    assert Form.real_word(2, ["y1", "x1"]) == -Form.real_word(2, ["x1", "y1"])
    assert Form.real_word(2, ["x1", "x1"]).is_zero()


def test_word_validation():
    with pytest.raises(ValueError):
        Form.word(2, A=(1,), B=(1,))
    with pytest.raises(ValueError):
        Form.word(2, A=(3,))
    assert ComplexBasisWord((1,), (2,), (3,)).bidegree == (2, 2)
    assert str(ComplexBasisWord((1,), (2,), (3,))) == "z1^zb2^w3"


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Form.z(1, 1) + Form.z(1, 2)


def test_permutation_sign():
    assert permutation_sign([0, 1, 2]) == 1
    assert permutation_sign([1, 0, 2]) == -1
    assert permutation_sign([2, 0, 1]) == 1


def test_weights():
    phi = Form.z(1, 2) + Form.w(1, 2) + Form.word(2, A=(1,), B=(2,))
    assert weight_w(phi) == -Form.z(1, 2) + Form.w(1, 2) + Form.word(2, A=(1,), B=(2,))
    assert weight_J(phi) == Form.z(1, 2) * I + Form.w(1, 2) + Form.word(2, A=(1,), B=(2,))


def test_json_round_trip_both_bases():
    phi = Form.word(2, A=(1,), M=(2,), coeff=GaussianRational(1, -2))
    assert Form.from_json(phi.to_json()) == phi
    psi = Form.real_word(2, ["x1", "y2"], coeff=3)
    assert psi.to_json()["terms"][0]["word"] == ["x1", "y2"]
    assert Form.from_json(psi.to_json()) == psi


def test_complex_words_have_norm_power_of_two():
    for w in complex_words(2):
        phi = Form(2, COMPLEX, {w: ONE})
        assert inner_product(phi, phi) == 2 ** w.degree


def test_conversion_sign_closed_form_mismatches_reported():
    rep = conversion_sign_report(3)
    assert rep["pairs_checked"] == 64
    assert len(rep["mismatches"]) == 12
    assert {"I": [1], "K": [1, 2], "closed_form": -1, "brute_force": 1} in rep["mismatches"]


@given(random_form(2, COMPLEX), random_form(2, COMPLEX), random_form(2, COMPLEX))
def test_wedge_associative_and_bilinear(a, b, c):
    assert (a ^ b) ^ c == a ^ (b ^ c)
    assert a ^ (b + c) == (a ^ b) + (a ^ c)


@given(random_form(2, COMPLEX), random_form(2, COMPLEX))
def test_wedge_commutes_with_basis_change(a, b):
    assert to_real(a ^ b) == to_real(a) ^ to_real(b)


@given(random_form(2, COMPLEX))
def test_basis_round_trip(a):
    assert to_complex(to_real(a)) == a


@given(random_form(2, REAL))
def test_real_round_trip(a):
    assert to_real(to_complex(a)) == a


@given(random_form(2, COMPLEX))
def test_bidegree_projections_sum_to_identity(a):
    total = Form.zero(2)
    for p in range(3):
        for q in range(3):
            total = total + project_bidegree(a, p, q)
    assert total == a


@given(random_form(2, REAL), random_form(2, REAL))
def test_graded_commutativity_on_one_forms(a, b):
    from hodgekit.exterior import project_degree

    a1, b1 = project_degree(a, 1), project_degree(b, 1)
    assert (a1 ^ b1) == -(b1 ^ a1)
    assert (a1 ^ a1).is_zero()
