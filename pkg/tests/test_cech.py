import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hodgekit.cech import (
    Nerve,
    PresentedSheaf,
    SheafValidationError,
    circle_nerve,
    coboundary,
    cohomology_dims,
    constant_sheaf,
    euler_check,
    examples,
    interval_nerve,
    torus_grid_nerve,
)
from hodgekit.linalg import is_zero_matrix, mat_mul


def strip(dims):
    dims = list(dims)
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    return dims


def sympy_dims(sheaf):
    """Oracle: ranks of the coboundary matrices computed by sympy."""
    top = sheaf.nerve.dim
    ranks = []
    sizes = []
    for k in range(top + 1):
        m = coboundary(sheaf, k)
        sizes.append(len(m[0]) if m else sum(sheaf.dims[s] for s in sheaf.nerve.simplices[k]))
        ranks.append(sympy.Matrix([[sympy.Rational(str(x)) for x in row] for row in m]).rank() if m else 0)
    return [sizes[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(top + 1)]


@pytest.mark.parametrize("name,expected", [
    ("circle3", [1, 1]),
    ("circle6", [1, 1]),
    ("interval2", [1]),
    ("interval4", [1]),
    ("point", [1]),
    ("torus3", [1, 2, 1]),
    ("torus4", [1, 2, 1]),
])
def test_constant_sheaf_cohomology(name, expected):
    sheaf = constant_sheaf(examples()[name])
    dims = cohomology_dims(sheaf)
    assert strip(dims) == expected
    assert dims == sympy_dims(sheaf)
    assert euler_check(sheaf)["ok"]


def test_interval_keeps_trailing_zero():
    assert cohomology_dims(constant_sheaf(interval_nerve(2))) == [1, 0]


def test_torus_nerve_shape():
    nerve = torus_grid_nerve(3)
    assert nerve.dim == 3
    assert nerve.count(0) == 9
    assert cohomology_dims(constant_sheaf(nerve)) == [1, 2, 1, 0]


def test_circle_coboundary_rank():
    m = coboundary(constant_sheaf(circle_nerve(3)), 0)
    assert sympy.Matrix([[int(x) for x in row] for row in m]).rank() == 2


@pytest.mark.parametrize("name", sorted(examples()))
def test_delta_squared_zero(name):
    sheaf = constant_sheaf(examples()[name], 2)
    for k in range(sheaf.nerve.dim - 1):
        assert is_zero_matrix(mat_mul(coboundary(sheaf, k + 1), coboundary(sheaf, k)))


def test_rank_two_constant_sheaf_doubles():
    assert cohomology_dims(constant_sheaf(circle_nerve(4), 2)) == [2, 2]


def test_twisted_circle_sheaf():
    # Mobius-type local system: one restriction flips sign, so H^0 = H^1 = 0
    nerve = circle_nerve(3)
    dims = {s: 1 for s in nerve.all_simplices()}
    res = {}
    for s in nerve.simplices[1]:
        for face in ((s[1],), (s[0],)):
            res[(face, s)] = [[1]]
    res[((2,), (0, 2))] = [[-1]]
    sheaf = PresentedSheaf(nerve, dims, res)
    assert cohomology_dims(sheaf) == [0, 0]


def test_nerve_must_be_closed():
    with pytest.raises(SheafValidationError):
        Nerve(3, [(0,), (1,), (2,), (0, 1, 2)])
    with pytest.raises(SheafValidationError):
        Nerve(2, [(0,)])
    with pytest.raises(SheafValidationError):
        Nerve(2, [(0,), (1,), (1, 0)])


def test_noncommuting_squares_rejected():
    nerve = Nerve.from_maximal(3, [(0, 1, 2)])
    dims = {s: 1 for s in nerve.all_simplices()}
    res = {}
    for s in nerve.all_simplices():
        if len(s) > 1:
            for j in range(len(s)):
                res[(s[:j] + s[j + 1:], s)] = [[1]]
    res[((0,), (0, 1))] = [[2]]
    with pytest.raises(SheafValidationError):
        PresentedSheaf(nerve, dims, res)


def test_wrong_restriction_shape_rejected():
    nerve = interval_nerve(2)
    dims = {(0,): 1, (1,): 1, (0, 1): 1}
    with pytest.raises(SheafValidationError):
        PresentedSheaf(nerve, dims, {((0,), (0, 1)): [[1, 0]], ((1,), (0, 1)): [[1]]})


def test_json_round_trip():
    sheaf = constant_sheaf(torus_grid_nerve(3))
    again = PresentedSheaf.from_json(sheaf.to_json())
    assert cohomology_dims(again) == [1, 2, 1, 0]


@given(st.integers(3, 9), st.integers(1, 3))
def test_circle_property(arcs, rank):
    sheaf = constant_sheaf(circle_nerve(arcs), rank)
    assert cohomology_dims(sheaf) == [rank, rank]


@given(st.integers(2, 8))
def test_interval_property(pieces):
    assert strip(cohomology_dims(constant_sheaf(interval_nerve(pieces)))) == [1]
