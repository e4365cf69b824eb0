"""Hodge star on the exterior algebra of C^n with the standard metric.

``star_real`` is the definition: complement in the orthonormal real basis with
the sign of the shuffle permutation, volume form ``x1^y1^...^xn^yn``.
``star_complex`` applies the closed form on complex words
``*(z_A ^ zbar_B ^ w_M) = gamma * z_A ^ zbar_B ^ w_C`` with ``C`` the indices
not in ``A, B, M`` and
``gamma = i^(a-b) * (-1)^(p(p+1)/2 + m) * (-2i)^(p-n)``.
``check_star_agreement`` certifies the second against the first.
"""

from __future__ import annotations

from functools import lru_cache

from .exterior import (
    COMPLEX,
    REAL,
    ComplexBasisWord,
    Form,
    complex_words,
    permutation_sign,
    to_real,
)
from .gaussian import ONE, GaussianRational, I

__all__ = ["check_star_agreement", "gamma", "star", "star_complex", "star_real"]

_MINUS_2I = GaussianRational(0, -2)


@lru_cache(maxsize=None)
def _real_star_word(word: tuple, n: int):
    complement = tuple(i for i in range(2 * n) if i not in word)
    return complement, permutation_sign(word + complement)


def star_real(phi: Form) -> Form:
    if phi.rep != REAL:
        raise ValueError("star_real needs the real basis; use star_complex or to_real first")
    terms = {}
    for word, c in phi.terms.items():
        comp, sign = _real_star_word(word, phi.n)
        terms[comp] = c if sign == 1 else -c
    return Form(phi.n, REAL, terms)


def gamma(a: int, b: int, m: int, n: int) -> GaussianRational:
    p = a + b + 2 * m
    sign = -1 if (p * (p + 1) // 2 + m) % 2 else 1
    return (I ** (a - b)) * sign * (_MINUS_2I ** (p - n))


@lru_cache(maxsize=None)
def _complex_star_word(word: ComplexBasisWord, n: int):
    used = set(word.A) | set(word.B) | set(word.M)
    comp = tuple(mu for mu in range(1, n + 1) if mu not in used)
    return ComplexBasisWord(word.A, word.B, comp), gamma(len(word.A), len(word.B), len(word.M), n)


def star_complex(phi: Form) -> Form:
    if phi.rep != COMPLEX:
        raise ValueError("star_complex needs the complex basis")
    terms = {}
    for word, c in phi.terms.items():
        target, g = _complex_star_word(word, phi.n)
        terms[target] = terms.get(target, 0) + c * g
    return Form(phi.n, COMPLEX, terms)


def star(phi: Form) -> Form:
    return star_real(phi) if phi.rep == REAL else star_complex(phi)


def check_star_agreement(n: int) -> dict:
    """Compare ``to_real(star_complex(w))`` with ``star_real(to_real(w))`` on every word."""
    if not 1 <= n <= 3:
        raise ValueError("check_star_agreement supports 1 <= n <= 3")
    mismatches = []
    words = complex_words(n)
    for word in words:
        phi = Form(n, COMPLEX, {word: ONE})
        fast = to_real(star_complex(phi))
        slow = star_real(to_real(phi))
        if fast != slow:
            mismatches.append({"word": {"A": list(word.A), "B": list(word.B), "M": list(word.M)},
                               "closed_form": fast.to_json(), "brute_force": slow.to_json()})
    return {"n": n, "words_checked": len(words), "mismatches": mismatches}
