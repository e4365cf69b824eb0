"""Lefschetz operators L, L* and the counting operator B on the exterior algebra.

Operators are realized as sparse matrices over the ``4**n`` complex basis words
(ordered as in :func:`hodgekit.exterior.complex_words`).
"""

from __future__ import annotations

from functools import lru_cache

from .exterior import (
    COMPLEX,
    ComplexBasisWord,
    Form,
    complex_words,
    wedge,
    weight_w,
)
from .gaussian import ONE, ZERO, GaussianRational, as_gaussian
from .hodge_star import star_complex
from .linalg import SparseMatrix, commutator
from .operators import adjoint_matrix as _adjoint_matrix
from .operators import basis
from .operators import operator_matrix as _operator_matrix

__all__ = [
    "B_matrix",
    "L_op",
    "L_wedge",
    "Lstar_op",
    "Lstar_via_star",
    "adjoint_matrix",
    "check_lstar_routes",
    "check_sl2",
    "fundamental_form",
    "ladder_lengths",
    "operator_matrix",
]

_HALF_I = GaussianRational(0, 1) / 2
_TWO_OVER_I = GaussianRational(0, -2)


def fundamental_form(h) -> Form:
    """``(i/2) * sum h[mu][nu] z_mu ^ zbar_nu`` for a Hermitian matrix ``h``."""
    n = len(h)
    h = [[as_gaussian(x) for x in row] for row in h]
    if any(len(row) != n for row in h):
        raise ValueError("metric matrix must be square")
    for mu in range(n):
        for nu in range(n):
            if h[mu][nu] != h[nu][mu].conjugate():
                raise ValueError(f"metric is not Hermitian at ({mu}, {nu})")
    out = Form.zero(n, COMPLEX)
    for mu in range(n):
        for nu in range(n):
            if h[mu][nu]:
                out = out + (Form.z(mu + 1, n) ^ Form.zbar(nu + 1, n)) * (_HALF_I * h[mu][nu])
    return out


def _standard_metric(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _omega(n: int) -> Form:
    return fundamental_form(_standard_metric(n))


def L_op(phi: Form) -> Form:
    """Closed form for the standard metric: add one ``w_mu`` for each free index."""
    n = phi.n
    terms: dict = {}
    for word, c in phi.terms.items():
        used = set(word.A) | set(word.B) | set(word.M)
        for mu in range(1, n + 1):
            if mu in used:
                continue
            target = ComplexBasisWord(word.A, word.B, tuple(sorted(word.M + (mu,))))
            terms[target] = terms.get(target, ZERO) + c * _HALF_I
    return Form(n, COMPLEX, terms)


def L_wedge(phi: Form, h=None) -> Form:
    """``Omega ^ phi`` for an arbitrary Hermitian metric (standard one by default)."""
    omega = _omega(phi.n) if h is None else fundamental_form(h)
    return wedge(omega, phi)


def Lstar_op(phi: Form) -> Form:
    """Closed form for the standard metric: remove one ``w_mu`` in all possible ways."""
    terms: dict = {}
    for word, c in phi.terms.items():
        for mu in word.M:
            target = ComplexBasisWord(word.A, word.B, tuple(m for m in word.M if m != mu))
            terms[target] = terms.get(target, ZERO) + c * _TWO_OVER_I
    return Form(phi.n, COMPLEX, terms)


def Lstar_via_star(phi: Form) -> Form:
    return weight_w(star_complex(L_op(star_complex(phi))))


# -- matrices ----------------------------------------------------------------


def operator_matrix(fn, n: int) -> SparseMatrix:
    return _operator_matrix(fn, n, COMPLEX)


def adjoint_matrix(m: SparseMatrix, n: int) -> SparseMatrix:
    return _adjoint_matrix(m, n, COMPLEX)


def B_matrix(n: int) -> SparseMatrix:
    """Counting operator ``sum_p (n - p) Pi_p``."""
    words, _ = basis(n)
    return SparseMatrix.diagonal(GaussianRational(n - w.degree) for w in words)


def check_sl2(n: int) -> dict:
    if not 1 <= n <= 4:
        raise ValueError("check_sl2 supports 1 <= n <= 4")
    L = operator_matrix(L_op, n)
    Ls = operator_matrix(Lstar_op, n)
    B = B_matrix(n)
    residuals = {
        "BL": commutator(B, L) + L.scale(2),
        "BLstar": commutator(B, Ls) - Ls.scale(2),
        "LstarL": commutator(Ls, L) - B,
    }
    return {
        "n": n,
        "dimension": L.nrows,
        "relations": {k: ("ok" if r.is_zero() else "FAIL") for k, r in residuals.items()},
        "residual_nnz": {k: r.nnz() for k, r in residuals.items()},
    }


def check_lstar_routes(n: int) -> dict:
    """Compare closed-form L*, the Hermitian adjoint of L, ``w*L*``, and ``Omega ^``."""
    L = operator_matrix(L_op, n)
    routes = {
        "adjoint": adjoint_matrix(L, n),
        "w_star_L_star": operator_matrix(Lstar_via_star, n),
    }
    Ls = operator_matrix(Lstar_op, n)
    out = {k: ("ok" if v == Ls else "FAIL") for k, v in routes.items()}
    out["L_closed_form_vs_wedge"] = "ok" if operator_matrix(L_wedge, n) == L else "FAIL"
    return {"n": n, "routes": out}


def ladder_lengths(n: int) -> dict:
    """For each word, number of L applications before reaching zero."""
    out = {}
    for word in complex_words(n):
        phi = Form(n, COMPLEX, {word: ONE})
        steps = 0
        while phi:
            phi = L_op(phi)
            steps += 1
            if steps > n + 1:
                raise AssertionError(f"L ladder from {word} did not terminate")
        out[word] = steps - 1
    return out
