"""Matrices of linear maps on the exterior algebra, in either basis."""

from __future__ import annotations

from functools import lru_cache

from .exterior import COMPLEX, REAL, Form, complex_words, inner_product, real_words
from .gaussian import ONE
from .linalg import SparseMatrix

__all__ = [
    "adjoint_matrix",
    "apply_matrix",
    "basis",
    "form_from_vector",
    "form_to_vector",
    "gram_diagonal",
    "operator_matrix",
]


@lru_cache(maxsize=None)
def basis(n: int, rep: str = COMPLEX):
    """``(words, index)`` for the chosen basis; words ordered by degree."""
    words = complex_words(n) if rep == COMPLEX else real_words(n)
    return tuple(words), {w: i for i, w in enumerate(words)}


def operator_matrix(fn, n: int, rep: str = COMPLEX) -> SparseMatrix:
    """Column ``j`` is the image of basis word ``j`` under ``fn``."""
    words, index = basis(n, rep)
    cols = {}
    for j, word in enumerate(words):
        image = fn(Form(n, rep, {word: ONE}))
        if image.rep != rep:
            raise ValueError(f"operator changed basis from {rep} to {image.rep}")
        cols[j] = {index[w]: c for w, c in image.terms.items()}
    return SparseMatrix(len(words), len(words), cols)


def form_to_vector(phi: Form) -> dict:
    _, index = basis(phi.n, phi.rep)
    return {index[w]: c for w, c in phi.terms.items()}


def form_from_vector(n: int, vec: dict, rep: str = COMPLEX) -> Form:
    words, _ = basis(n, rep)
    return Form(n, rep, {words[i]: c for i, c in vec.items()})


def apply_matrix(m: SparseMatrix, phi: Form) -> Form:
    out: dict = {}
    for j, c in form_to_vector(phi).items():
        for i, v in m.cols.get(j, {}).items():
            out[i] = out[i] + v * c if i in out else v * c
    return form_from_vector(phi.n, out, phi.rep)


@lru_cache(maxsize=None)
def gram_diagonal(n: int, rep: str = COMPLEX) -> tuple:
    """Squared norms of the basis words (both bases are orthogonal)."""
    words, _ = basis(n, rep)
    out = []
    for w in words:
        phi = Form(n, rep, {w: ONE})
        out.append(inner_product(phi, phi))
    return tuple(out)


def adjoint_matrix(m: SparseMatrix, n: int, rep: str = COMPLEX) -> SparseMatrix:
    """Hermitian adjoint ``G^-1 M^H G`` for the diagonal Gram matrix ``G``."""
    g = gram_diagonal(n, rep)
    out: dict = {}
    for j, col in m.cols.items():
        for i, v in col.items():
            # (M^H)[j][i] = conj(M[i][j]); scaled by g[i] / g[j]
            out.setdefault(i, {})[j] = v.conjugate() * g[i] / g[j]
    return SparseMatrix(m.ncols, m.nrows, out)
