import time

import pytest

from hodgekit.exterior import COMPLEX, Form, complex_words
from hodgekit.gaussian import GaussianRational, ONE
from hodgekit.lefschetz import (
    B_matrix,
    L_op,
    L_wedge,
    Lstar_op,
    check_lstar_routes,
    check_sl2,
    fundamental_form,
    ladder_lengths,
)


def test_fundamental_form_standard():
    omega = fundamental_form([[1, 0], [0, 1]])
    half_i = GaussianRational(0, 1) / 2
    assert omega == (Form.w(1, 2) + Form.w(2, 2)) * half_i


def test_fundamental_form_rejects_non_hermitian():
    with pytest.raises(ValueError):
        fundamental_form([[1, 1], [0, 1]])


def test_L_of_one():
    half_i = GaussianRational(0, 1) / 2
    assert L_op(Form.one(2)) == (Form.w(1, 2) + Form.w(2, 2)) * half_i
    assert Lstar_op(Form.w(1, 2)) == Form.one(2) * GaussianRational(0, -2)


def test_L_closed_form_matches_wedge_nonstandard_routes():
    for n in (1, 2, 3):
        assert all(v == "ok" for v in check_lstar_routes(n)["routes"].values())


def test_L_wedge_with_general_metric():
    i = GaussianRational(0, 1)
    h = [[2, i], [-i, 3]]
    phi = Form.z(1, 2)
    half_i = i / 2
    omega = (Form.w(1, 2) * 2 + (Form.z(1, 2) ^ Form.zbar(2, 2)) * i
             - (Form.z(2, 2) ^ Form.zbar(1, 2)) * i + Form.w(2, 2) * 3) * half_i
    assert L_wedge(phi, h) == (omega ^ phi)
    # only the terms free of z1 survive
    assert L_wedge(phi, h) == ((Form.z(2, 2) ^ Form.zbar(1, 2)) * (-i * half_i) + Form.w(2, 2) * (3 * half_i)) ^ phi


def test_sl2_relations_up_to_n4():
    start = time.perf_counter()
    for n in (1, 2, 3, 4):
        rep = check_sl2(n)
        assert rep["dimension"] == 4 ** n
        assert rep["relations"] == {"BL": "ok", "BLstar": "ok", "LstarL": "ok"}
    assert time.perf_counter() - start < 10


def test_B_spectrum():
    b = B_matrix(2)
    values = sorted({int(v.re) for col in b.cols.values() for v in col.values()})
    assert values == [-2, -1, 1, 2]


def test_primitive_ladders():
    lengths = ladder_lengths(2)
    # L^(n-p+1) kills primitive p-forms; the constant 1 survives n applications
    assert lengths[complex_words(2)[0]] == 2
    for w, steps in lengths.items():
        assert steps <= 2 - len(w.A) - len(w.B) - len(w.M)
