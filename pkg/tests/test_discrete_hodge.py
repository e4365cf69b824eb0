from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgekit.discrete_hodge import (
    NoSolution,
    SimplicialComplex,
    betti_numbers,
    boundary_matrix,
    build_hodge,
    coboundary_matrix,
    examples,
    hodge_decomposition,
    solve_poisson,
)
from hodgekit.linalg import is_zero_matrix, mat_add, mat_mul, mat_vec

EXAMPLES = examples()
NAMES = sorted(EXAMPLES)


def sympy_betti(K):
    """Rank-nullity oracle with sympy ranks of the boundary matrices."""
    ranks = {}
    for k in range(1, K.dim + 1):
        b = boundary_matrix(K, k)
        ranks[k] = sympy.Matrix([[int(x) for x in row] for row in b]).rank() if b else 0
    return [K.count(k) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(K.dim + 1)]


@pytest.mark.parametrize("name", NAMES)
def test_betti_against_oracles(name):
    K, expected = EXAMPLES[name]
    rep = betti_numbers(K)
    assert rep["harmonic"] == expected
    assert rep["rank_nullity"] == expected
    assert sympy_betti(K) == expected
    assert sum((-1) ** k * b for k, b in enumerate(expected)) == K.euler_characteristic()


def test_required_complexes_present():
    assert EXAMPLES["hollow_triangle"][1] == [1, 1]
    assert EXAMPLES["octahedron_sphere"][1] == [1, 0, 1]
    assert EXAMPLES["torus7"][1] == [1, 2, 1]
    assert len(EXAMPLES) >= 5


@pytest.mark.parametrize("name", NAMES)
def test_hodge_identities(name):
    ops = build_hodge(EXAMPLES[name][0])
    assert set(ops.identity_report().values()) == {"ok"}


def test_boundary_of_edge():
    K = SimplicialComplex(2, [(0, 1)])
    assert boundary_matrix(K, 1) == [[-1], [1]]


def test_boundary_squares_to_zero():
    K = EXAMPLES["torus7"][0]
    assert is_zero_matrix(mat_mul(boundary_matrix(K, 1), boundary_matrix(K, 2)))
    assert is_zero_matrix(mat_mul(coboundary_matrix(K, 1), coboundary_matrix(K, 0)))


def test_poisson_on_hollow_triangle():
    # graph Laplacian of the 3-cycle is 3I - J, so (1, -1, 0) / 3 solves it
    ops = build_hodge(EXAMPLES["hollow_triangle"][0])
    assert solve_poisson(ops, 0, [1, -1, 0]) == [mpq(1, 3), mpq(-1, 3), mpq(0)]


def test_poisson_on_path():
    # path 0 - 1 - 2: lap = [[1,-1,0],[-1,2,-1],[0,-1,1]] fixes (1, 0, -1)
    ops = build_hodge(SimplicialComplex(3, [(0, 1), (1, 2)]))
    assert solve_poisson(ops, 0, [1, 0, -1]) == [mpq(1), mpq(0), mpq(-1)]


def test_poisson_obstruction():
    ops = build_hodge(SimplicialComplex(3, [(0, 1), (1, 2)]))
    with pytest.raises(NoSolution):
        solve_poisson(ops, 0, [1, 0, 0])


def test_weights_do_not_change_betti():
    K = EXAMPLES["octahedron_sphere"][0]
    weights = {k: [Fraction(k + i + 1, 2) for i in range(K.count(k))] for k in range(K.dim + 1)}
    rep = betti_numbers(K, weights)
    assert rep["harmonic"] == [1, 0, 1]
    ops = build_hodge(K, weights)
    assert set(ops.identity_report().values()) == {"ok"}


def test_bad_weights_rejected():
    K = EXAMPLES["hollow_triangle"][0]
    with pytest.raises(ValueError):
        build_hodge(K, {0: [1, 1, 0]})
    with pytest.raises(ValueError):
        build_hodge(K, {0: [1, 1]})


def test_decomposition_projectors_sum_to_identity():
    ops = build_hodge(EXAMPLES["torus7"][0])
    parts = hodge_decomposition(ops, 1)
    total = mat_add(mat_add(parts["exact"], parts["coexact"]), parts["harmonic"])
    n = ops.size(1)
    assert all(total[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def test_json_round_trip():
    K = EXAMPLES["torus7"][0]
    K2 = SimplicialComplex.from_json(K.to_json())
    assert K2.simplices == K.simplices


OPS = {name: build_hodge(EXAMPLES[name][0]) for name in NAMES}
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@pytest.mark.parametrize("name", NAMES)
def test_poisson_random_cochains(name):
    ops = OPS[name]
    K = ops.complex

    @settings(max_examples=100)
    @given(st.data())
    def run(data):
        k = data.draw(st.integers(0, K.dim))
        eta = [mpq(x) for x in data.draw(st.lists(rationals, min_size=K.count(k), max_size=K.count(k)))]
        h_eta = mat_vec(ops.harmonic[k], eta)
        if any(h_eta):
            with pytest.raises(NoSolution):
                solve_poisson(ops, k, eta)
            eta = [a - b for a, b in zip(eta, h_eta)]
        phi = solve_poisson(ops, k, eta)
        assert mat_vec(ops.laplacian[k], phi) == eta
        assert not any(mat_vec(ops.harmonic[k], phi))

    run()
