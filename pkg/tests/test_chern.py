import time
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgekit.bundles import curvature, fubini_study_metric
from hodgekit.chern import (
    TWO_PI_I,
    bianchi_check,
    char_poly_coefficients,
    chern_forms,
    chern_number_p1,
    curvature_from_connection,
    frame_invariance_check,
    newton_b_from_c,
    newton_c_from_b,
    power_traces,
    trace_power_closedness,
)
from hodgekit.dolbeault import complex_coordinates
from hodgekit.exterior import Form

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def square(r):
    return st.lists(st.lists(rationals, min_size=r, max_size=r), min_size=r, max_size=r)


matrices = st.integers(1, 4).flatmap(square)


def test_newton_frozen():
    # A = diag(1, 2): b = (3, 5), det(tI - A) = t^2 - 3t + 2
    assert newton_c_from_b([3, 5]) == [-3, 2]
    assert newton_c_from_b([2, 2]) == [-2, 1]
    assert newton_b_from_c([-3, 2]) == [3, 5]


def test_char_poly_oracle_frozen():
    assert char_poly_coefficients([[1, 2], [3, 4]]) == [Fraction(-5), Fraction(-2)]


@settings(max_examples=50)
@given(matrices)
def test_newton_against_determinant(a):
    b = power_traces(a)
    assert newton_c_from_b(b) == char_poly_coefficients(a)
    assert newton_b_from_c(newton_c_from_b(b)) == b


def test_chern_number_p1():
    theta = curvature(fubini_study_metric(1)[0], 1)
    t = time.perf_counter()
    rep = chern_number_p1(theta)
    assert time.perf_counter() - t < 5
    assert abs(rep["value"] - 1) < 1e-6
    assert abs(rep["imag"]) < 1e-6


def test_chern_number_of_square():
    theta = curvature(fubini_study_metric(1, 2)[0], 1)
    assert abs(chern_number_p1(theta)["value"] - 2) < 1e-6


def test_chern_forms_line_bundle():
    theta = curvature(fubini_study_metric(1)[0], 1)
    c = chern_forms([[theta]])
    assert c[0] == Form.one(1)
    assert (c[1] - theta * TWO_PI_I).is_zero()


def test_chern_forms_split_bundle():
    zs, cs = complex_coordinates(2)
    t1 = Form.w(1, 2) * (1 + zs[0] * cs[0])
    t2 = Form.w(2, 2) * 3
    zero = Form.zero(2)
    c = chern_forms([[t1, zero], [zero, t2]], scale=1)
    assert (c[1] - (t1 + t2)).is_zero()
    assert (c[2] - (t1 ^ t2)).is_zero()


def test_chern_forms_reject_odd_entries():
    with pytest.raises(ValueError):
        chern_forms([[Form.z(1, 1)]])


def test_frame_invariance():
    zs, cs = complex_coordinates(2)
    theta = [[Form.w(1, 2) * zs[0], Form.z(1, 2) ^ Form.zbar(2, 2)],
             [Form.w(2, 2) * cs[1], Form.w(1, 2) + Form.w(2, 2)]]
    assert frame_invariance_check(theta, [[1, 2], [0, 3]])["ok"]
    with pytest.raises(ZeroDivisionError):
        frame_invariance_check(theta, [[1, 2], [2, 4]])


def connection():
    zs, cs = complex_coordinates(2)
    return [[Form.z(1, 2) * cs[0], Form.zbar(2, 2) * zs[0] * zs[1]],
            [Form.z(2, 2) * (1 + cs[1]), Form.zbar(1, 2) * zs[1] ** 2]]


def test_bianchi_residual_zero():
    assert bianchi_check(connection()) == {"ok": True, "residual_terms": 0}


def test_trace_powers_closed():
    assert trace_power_closedness(connection(), 2)["ok"]


def test_curvature_of_abelian_connection_is_d_theta():
    zs, cs = complex_coordinates(1)
    theta = Form.z(1, 1) * cs[0]
    curv = curvature_from_connection([[theta]])
    assert curv[0][0] == Form.zbar(1, 1) ^ Form.z(1, 1)
    assert sympy.simplify(TWO_PI_I * 2 * sympy.pi) == sympy.I
