"""Chern forms of a curvature matrix and Newton's identities.

A curvature matrix is a square list of lists of even-degree
:class:`~hodgekit.exterior.Form` objects.  Even forms commute, so the
determinant is expanded by the Leibniz formula with wedge as the product.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import cos, pi, sin

import sympy
from scipy import integrate

from .dolbeault import complex_coordinates, d
from .exterior import REAL, Form, permutation_sign, project_degree, to_real
from .gaussian import as_gaussian
from .linalg import identity, mat_mul

__all__ = [
    "bianchi_check",
    "char_poly_coefficients",
    "chern_forms",
    "chern_number_p1",
    "curvature_from_connection",
    "frame_invariance_check",
    "matrix_wedge",
    "newton_b_from_c",
    "newton_c_from_b",
    "power_traces",
    "trace_power_closedness",
]

TWO_PI_I = sympy.I / (2 * sympy.pi)


def _shape(theta) -> int:
    r = len(theta)
    if r == 0 or any(len(row) != r for row in theta):
        raise ValueError("curvature matrix must be square and nonempty")
    return r


def _determinant(m, n: int, rep: str) -> Form:
    """Leibniz expansion of a matrix of commuting (even) forms."""
    r = len(m)
    total = Form.zero(n, rep)
    for perm in permutations(range(r)):
        term = Form.one(n, rep)
        for i, j in enumerate(perm):
            term = term ^ m[i][j]
            if not term:
                break
        if term:
            total = total + (term if permutation_sign(perm) == 1 else -term)
    return total


def chern_forms(theta, scale=TWO_PI_I) -> list[Form]:
    """Graded pieces ``c_0..c_r`` of ``det(I + scale * theta)``."""
    r = _shape(theta)
    first = theta[0][0]
    n, rep = first.n, first.rep
    for row in theta:
        for entry in row:
            if any(len(w) % 2 if rep == REAL else w.degree % 2 for w in entry.terms):
                raise ValueError("curvature entries must be even forms")
    m = [[theta[i][j] * scale + (Form.one(n, rep) if i == j else Form.zero(n, rep)) for j in range(r)]
         for i in range(r)]
    det = _determinant(m, n, rep)
    return [project_degree(det, 2 * k) if 2 * k <= 2 * n else Form.zero(n, rep) for k in range(r + 1)]


def _div(x, k: int):
    if isinstance(x, Form):
        return x * Fraction(1, k)
    if isinstance(x, int):
        return Fraction(x, k)
    return x / k


def newton_c_from_b(b):
    """``k c_k + b_1 c_(k-1) + ... + b_(k-1) c_1 + b_k = 0`` with ``c_0 = 1``.

    ``b`` is ``(b_1, .., b_m)``; returns ``(c_1, .., c_m)``.  Works for any
    commutative ring elements with ``+``, ``*`` and division by integers.
    """
    b = list(b)
    c = []
    for k in range(1, len(b) + 1):
        acc = b[k - 1]
        for j in range(1, k):
            acc = acc + _mul(b[j - 1], c[k - j - 1])
        c.append(_div(-acc, k))
    return c


def newton_b_from_c(c):
    """Inverse recursion: ``b_k = -k c_k - sum_(j<k) b_j c_(k-j)``."""
    c = list(c)
    b = []
    for k in range(1, len(c) + 1):
        acc = c[k - 1] * k
        for j in range(1, k):
            acc = acc + _mul(b[j - 1], c[k - j - 1])
        b.append(-acc)
    return b


def _mul(x, y):
    if isinstance(x, Form) and isinstance(y, Form):
        return x ^ y
    return x * y


def power_traces(a, m: int | None = None) -> list:
    """``b_k = tr(A^k)`` for ``k = 1..m`` (default ``m = size``), exact."""
    r = len(a)
    m = r if m is None else m
    out = []
    p = identity(r)
    for _ in range(m):
        p = mat_mul(p, a)
        out.append(sum((p[i][i] for i in range(r)), 0))
    return out


def char_poly_coefficients(a) -> list:
    """``(c_1, .., c_r)`` with ``det(t I - A) = t^r + c_1 t^(r-1) + ... + c_r``.

    Computed by Leibniz expansion over polynomials in ``t``; independent of
    the Newton recursion and used as its oracle.
    """
    r = len(a)
    t = sympy.Symbol("t")
    m = [[(t if i == j else 0) - sympy.Rational(sympy.sympify(str(a[i][j]))) for j in range(r)] for i in range(r)]
    det = sympy.Integer(0)
    for perm in permutations(range(r)):
        term = sympy.Integer(permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= m[i][j]
        det += term
    poly = sympy.Poly(sympy.expand(det), t)
    coeffs = poly.all_coeffs()
    return [Fraction(int(x.p), int(x.q)) for x in coeffs[1:]]


def _scalar_matrix(a):
    return sympy.Matrix([[sympy.sympify(as_gaussian(x)) if not isinstance(x, sympy.Basic) else x for x in row]
                         for row in a])


def frame_invariance_check(theta, a) -> dict:
    """``chern_forms(A^-1 theta A) == chern_forms(theta)`` for an invertible ``A`` of 0-forms."""
    r = _shape(theta)
    am = _scalar_matrix(a)
    if am.shape != (r, r):
        raise ValueError("frame change must match the curvature matrix size")
    det = sympy.simplify(am.det())
    if det == 0:
        raise ZeroDivisionError("frame change matrix is singular")
    inv = am.inv()
    n, rep = theta[0][0].n, theta[0][0].rep
    conj = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = Form.zero(n, rep)
            for k in range(r):
                for l in range(r):
                    coeff = sympy.cancel(inv[i, k] * am[l, j])
                    if coeff != 0:
                        acc = acc + theta[k][l] * coeff
            row.append(acc)
        conj.append(row)
    before = chern_forms(theta)
    after = chern_forms(conj)
    residual = [(x - y) for x, y in zip(after, before)]
    return {"ok": all(r_.is_zero() for r_ in residual), "residual_terms": [len(r_.terms) for r_ in residual]}


def matrix_wedge(p, q):
    r = len(p)
    n, rep = p[0][0].n, p[0][0].rep
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = Form.zero(n, rep)
            for k in range(r):
                acc = acc + (p[i][k] ^ q[k][j])
            row.append(acc)
        out.append(row)
    return out


def _matrix_sub(p, q):
    return [[x - y for x, y in zip(rp, rq)] for rp, rq in zip(p, q)]


def curvature_from_connection(theta):
    """``Theta = d theta + theta ^ theta`` for a matrix of 1-forms."""
    dtheta = [[d(x) for x in row] for row in theta]
    sq = matrix_wedge(theta, theta)
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(dtheta, sq)]


def bianchi_check(theta) -> dict:
    """Residual of ``d Theta - [Theta, theta]`` for ``Theta = d theta + theta^2``."""
    _shape(theta)
    curv = curvature_from_connection(theta)
    lhs = [[d(x) for x in row] for row in curv]
    bracket = _matrix_sub(matrix_wedge(curv, theta), matrix_wedge(theta, curv))
    residual = _matrix_sub(lhs, bracket)
    terms = sum(len(x.terms) for row in residual for x in row)
    return {"ok": terms == 0, "residual_terms": terms}


def trace_power_closedness(theta, kmax: int = 3) -> dict:
    """``d tr(Theta^k) = 0`` for ``k = 1..kmax``."""
    curv = curvature_from_connection(theta)
    r = len(curv)
    p = curv
    out = {}
    for k in range(1, kmax + 1):
        tr = Form.zero(curv[0][0].n, curv[0][0].rep)
        for i in range(r):
            tr = tr + p[i][i]
        out[k] = "ok" if d(tr).is_zero() else "FAIL"
        p = matrix_wedge(p, curv)
    return {"closed": out, "ok": all(v == "ok" for v in out.values())}


def chern_number_p1(theta: Form, scale=TWO_PI_I) -> dict:
    """``scale * integral of theta`` over the chart ``C`` of ``P^1`` (its complement is a point).

    ``theta`` is a 2-form in the chart coordinate ``z1`` (conjugate ``c1``).
    Integrated numerically in polar coordinates with adaptive quadrature.
    """
    if theta.n != 1:
        raise ValueError("chern_number_p1 needs a form on a complex curve")
    zs, cs = complex_coordinates(1)
    x, y = sympy.symbols("x y", real=True)
    real = to_real(theta * scale)
    coeff = real.terms.get((0, 1), 0)
    coeff = sympy.sympify(coeff).xreplace({zs[0]: x + sympy.I * y, cs[0]: x - sympy.I * y})
    f = sympy.lambdify((x, y), coeff, "cmath")

    def polar(part):
        def g(r, t):
            return part(complex(f(r * cos(t), r * sin(t)))) * r
        return integrate.dblquad(g, 0, 2 * pi, 0, float("inf"), epsabs=1e-10, epsrel=1e-10)

    re_val, re_err = polar(lambda v: v.real)
    im_val, im_err = polar(lambda v: v.imag)
    return {"value": re_val, "imag": im_val, "error_estimate": re_err + im_err}
