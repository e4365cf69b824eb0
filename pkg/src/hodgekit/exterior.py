"""Exterior algebra of the complexified cotangent space of C^n.

Two bases are supported. The *real* basis uses the ordered alphabet
``x1 < y1 < x2 < y2 < ... < xn < yn`` (letter ``2(j-1)`` is ``x_j`` and
``2(j-1)+1`` is ``y_j``); a real word is a strictly increasing tuple of
letters.  The *complex* basis uses words ``z_A ^ zbar_B ^ w_M`` with
``w_mu = z_mu ^ zbar_mu`` and ``A, B, M`` pairwise disjoint.

Coefficients are :class:`~hodgekit.gaussian.GaussianRational` for constant
forms, or sympy expressions for forms with function coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, NamedTuple

import sympy

from .gaussian import ONE, ZERO, GaussianRational, I, as_gaussian

__all__ = [
    "ComplexBasisWord",
    "DimensionMismatch",
    "Form",
    "bidegree",
    "complex_words",
    "conversion_sign_closed_form",
    "conversion_sign_report",
    "degree",
    "inner_product",
    "permutation_sign",
    "project_bidegree",
    "project_degree",
    "real_words",
    "to_complex",
    "to_real",
    "wedge",
    "weight_J",
    "weight_w",
]

REAL = "real"
COMPLEX = "complex"


class DimensionMismatch(ValueError):
    """Forms of different ambient dimension or basis were combined."""


class ComplexBasisWord(NamedTuple):
    A: tuple = ()
    B: tuple = ()
    M: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.A) + len(self.B) + 2 * len(self.M)

    @property
    def bidegree(self) -> tuple[int, int]:
        m = len(self.M)
        return (len(self.A) + m, len(self.B) + m)

    def letters(self) -> tuple[int, ...]:
        """Letter sequence in word order; ``z_j -> 2(j-1)``, ``zbar_j -> 2(j-1)+1``."""
        out = [2 * (a - 1) for a in self.A]
        out += [2 * (b - 1) + 1 for b in self.B]
        for mu in self.M:
            out += [2 * (mu - 1), 2 * (mu - 1) + 1]
        return tuple(out)

    def validate(self, n: int) -> "ComplexBasisWord":
        for name, idx in zip("ABM", self):
            if list(idx) != sorted(set(idx)):
                raise ValueError(f"index set {name}={idx} is not strictly increasing")
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"index set {name}={idx} outside 1..{n}")
        if set(self.A) & set(self.B) or set(self.A) & set(self.M) or set(self.B) & set(self.M):
            raise ValueError(f"index sets of {self} are not disjoint")
        return self

    def __str__(self):
        parts = [f"z{a}" for a in self.A] + [f"zb{b}" for b in self.B] + [f"w{m}" for m in self.M]
        return "^".join(parts) if parts else "1"


def permutation_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    seq = list(seq)
    inversions = sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _word_sign(word: ComplexBasisWord) -> int:
    return permutation_sign(word.letters())


def _word_from_sorted_letters(letters: tuple[int, ...]) -> ComplexBasisWord:
    zs = {l // 2 + 1 for l in letters if l % 2 == 0}
    zbs = {l // 2 + 1 for l in letters if l % 2 == 1}
    m = zs & zbs
    return ComplexBasisWord(tuple(sorted(zs - m)), tuple(sorted(zbs - m)), tuple(sorted(m)))


def _normalize_letters(seq, rep: str):
    """Canonical word and sign for a letter sequence, or ``(None, 0)`` on repeats."""
    if len(set(seq)) != len(seq):
        return None, 0
    sign = permutation_sign(seq)
    ordered = tuple(sorted(seq))
    if rep == REAL:
        return ordered, sign
    word = _word_from_sorted_letters(ordered)
    return word, sign * _word_sign(word)


def _letters(word, rep: str) -> tuple[int, ...]:
    return tuple(word) if rep == REAL else word.letters()


def degree(word) -> int:
    return word.degree if isinstance(word, ComplexBasisWord) else len(word)


def bidegree(word: ComplexBasisWord) -> tuple[int, int]:
    return word.bidegree


def _clean(c):
    """Normalize a coefficient; returns ``None`` for an exact zero."""
    if isinstance(c, GaussianRational):
        return None if c.is_zero() else c
    if isinstance(c, sympy.Basic):
        c = sympy.cancel(c) if c.free_symbols else sympy.expand(c)
        if c == 0:
            return None
        if not c.free_symbols:
            re, im = c.as_real_imag()
            if re.is_Rational and im.is_Rational:
                return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
        return c
    c = as_gaussian(c)
    return None if c.is_zero() else c


class Form:
    """Finite linear combination of basis words with exact coefficients.

    Forms are immutable values; arithmetic returns new forms. ``a ^ b`` is the
    wedge product.
    """

    __slots__ = ("n", "rep", "terms")

    def __init__(self, n: int, rep: str = COMPLEX, terms=None):
        if rep not in (REAL, COMPLEX):
            raise ValueError(f"unknown representation {rep!r}")
        self.n = n
        self.rep = rep
        clean = {}
        for word, c in (terms or {}).items():
            c = _clean(c)
            if c is not None:
                clean[word] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, n, rep, terms) -> "Form":
        self = object.__new__(cls)
        self.n, self.rep, self.terms = n, rep, terms
        return self

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, n: int, rep: str = COMPLEX) -> "Form":
        return cls._trusted(n, rep, {})

    @classmethod
    def one(cls, n: int, rep: str = COMPLEX, coeff=ONE) -> "Form":
        word = () if rep == REAL else ComplexBasisWord()
        return cls(n, rep, {word: coeff})

    @classmethod
    def word(cls, n: int, A=(), B=(), M=(), coeff=ONE) -> "Form":
        w = ComplexBasisWord(tuple(A), tuple(B), tuple(M)).validate(n)
        return cls(n, COMPLEX, {w: coeff})

    @classmethod
    def real_word(cls, n: int, letters, coeff=ONE) -> "Form":
        """Real-basis word from letter indices or names such as ``"x1"``/``"y2"``."""
        idx = [_parse_real_letter(l, n) for l in letters]
        word, sign = _normalize_letters(tuple(idx), REAL)
        if word is None:
            return cls.zero(n, REAL)
        return cls(n, REAL, {word: coeff if sign == 1 else -coeff})

    @classmethod
    def z(cls, j: int, n: int) -> "Form":
        return cls.word(n, A=(j,))

    @classmethod
    def zbar(cls, j: int, n: int) -> "Form":
        return cls.word(n, B=(j,))

    @classmethod
    def w(cls, j: int, n: int) -> "Form":
        return cls.word(n, M=(j,))

    @classmethod
    def x(cls, j: int, n: int) -> "Form":
        return cls.real_word(n, [2 * (j - 1)])

    @classmethod
    def y(cls, j: int, n: int) -> "Form":
        return cls.real_word(n, [2 * (j - 1) + 1])

    @classmethod
    def volume(cls, n: int) -> "Form":
        return cls(n, REAL, {tuple(range(2 * n)): ONE})

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Form"):
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if self.n != other.n or self.rep != other.rep:
            raise DimensionMismatch(
                f"cannot combine n={self.n}/{self.rep} with n={other.n}/{other.rep}")

    def __add__(self, other):
        if isinstance(other, (int, GaussianRational)) and other == 0:
            return self
        self._check(other)
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms[word] + c if word in terms else c
        return Form(self.n, self.rep, terms)

    __radd__ = __add__

    def __neg__(self):
        return Form._trusted(self.n, self.rep, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        return Form(self.n, self.rep, {w: c * scalar for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __truediv__(self, scalar):
        return self * (ONE / as_gaussian(scalar) if not isinstance(scalar, sympy.Basic) else 1 / scalar)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.rep == other.rep and (self - other).is_zero()

    def __hash__(self):
        return hash((self.n, self.rep, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, word):
        return self.terms.get(word, ZERO)

    def map_coefficients(self, fn) -> "Form":
        return Form(self.n, self.rep, {w: fn(c) for w, c in self.terms.items()})

    def degrees(self) -> set[int]:
        return {degree(w) for w in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for word, c in self.sorted_terms():
            if not isinstance(c, GaussianRational):
                raise TypeError("only constant (GaussianRational) forms serialize to JSON")
            entry = {"word": _word_to_json(word, self.rep)}
            entry.update(c.to_json())
            terms.append(entry)
        return {"n": self.n, "repr": self.rep, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "Form":
        n = int(obj["n"])
        rep = obj.get("repr", COMPLEX)
        out = cls.zero(n, rep)
        for t in obj.get("terms", []):
            c = GaussianRational.from_json(t)
            word = t["word"]
            if rep == REAL:
                out = out + cls.real_word(n, word, coeff=c)
            else:
                out = out + cls.word(n, word.get("A", ()), word.get("B", ()), word.get("M", ()), coeff=c)
        return out

    def __repr__(self):
        if not self.terms:
            return f"Form(n={self.n}, {self.rep}, 0)"
        body = " + ".join(f"{c}*{_word_str(w, self.rep)}" for w, c in self.sorted_terms())
        return f"Form(n={self.n}, {self.rep}, {body})"


def _sort_key(word):
    if isinstance(word, ComplexBasisWord):
        return (word.degree, word.bidegree, word)
    return (len(word), word)


def _parse_real_letter(letter, n: int) -> int:
    if isinstance(letter, int):
        idx = letter
    else:
        kind, j = letter[0], int(letter[1:])
        if kind not in "xy":
            raise ValueError(f"bad real letter {letter!r}")
        idx = 2 * (j - 1) + (kind == "y")
    if not 0 <= idx < 2 * n:
        raise ValueError(f"letter {letter!r} outside dimension n={n}")
    return idx


def _real_letter_name(idx: int) -> str:
    return f"{'xy'[idx % 2]}{idx // 2 + 1}"


def _word_str(word, rep: str) -> str:
    if rep == REAL:
        return "^".join(_real_letter_name(i) for i in word) or "1"
    return str(word)


def _word_to_json(word, rep: str):
    if rep == REAL:
        return [_real_letter_name(i) for i in word]
    return {"A": list(word.A), "B": list(word.B), "M": list(word.M)}


# -- enumeration -------------------------------------------------------------


def real_words(n: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(2 * n + 1):
        out.extend(combinations(range(2 * n), r))
    return out


def complex_words(n: int) -> list[ComplexBasisWord]:
    """All ``4**n`` complex basis words ordered by degree, bidegree, index sets."""
    words = []
    for choice in product(range(4), repeat=n):
        A = tuple(j + 1 for j, c in enumerate(choice) if c == 1)
        B = tuple(j + 1 for j, c in enumerate(choice) if c == 2)
        M = tuple(j + 1 for j, c in enumerate(choice) if c == 3)
        words.append(ComplexBasisWord(A, B, M))
    return sorted(words, key=_sort_key)


# -- products and gradings ---------------------------------------------------


def wedge(lhs: Form, rhs: Form) -> Form:
    lhs._check(rhs)
    rep = lhs.rep
    terms: dict = {}
    for u, a in lhs.terms.items():
        lu = _letters(u, rep)
        for v, b in rhs.terms.items():
            word, sign = _normalize_letters(lu + _letters(v, rep), rep)
            if word is None:
                continue
            c = a * b if sign == 1 else -(a * b)
            terms[word] = terms[word] + c if word in terms else c
    return Form(lhs.n, rep, terms)


def project_degree(phi: Form, r: int) -> Form:
    if not 0 <= r <= 2 * phi.n:
        raise ValueError(f"degree {r} outside 0..{2 * phi.n}")
    return Form._trusted(phi.n, phi.rep, {w: c for w, c in phi.terms.items() if degree(w) == r})


def project_bidegree(phi: Form, p: int, q: int) -> Form:
    if phi.rep != COMPLEX:
        raise ValueError("bidegree projection needs the complex basis")
    if not (0 <= p <= phi.n and 0 <= q <= phi.n):
        raise ValueError(f"bidegree ({p},{q}) outside 0..{phi.n}")
    return Form._trusted(phi.n, phi.rep, {w: c for w, c in phi.terms.items() if w.bidegree == (p, q)})


def weight_w(phi: Form) -> Form:
    """Multiply each degree-r component by (-1)^r."""
    return Form._trusted(phi.n, phi.rep,
                         {w: (-c if degree(w) % 2 else c) for w, c in phi.terms.items()})


_I_POWERS = (ONE, I, -ONE, -I)


def weight_J(phi: Form) -> Form:
    """Multiply each (p,q)-component by i^(p-q)."""
    if phi.rep != COMPLEX:
        raise ValueError("J needs the complex basis")
    terms = {}
    for w, c in phi.terms.items():
        p, q = w.bidegree
        terms[w] = c * _I_POWERS[(p - q) % 4]
    return Form._trusted(phi.n, phi.rep, terms)


# -- change of basis ---------------------------------------------------------

_HALF = GaussianRational(1, 0) / 2


@lru_cache(maxsize=None)
def _complex_word_to_real(word: ComplexBasisWord) -> tuple:
    # dz_j = dx_j + i dy_j, dzbar_j = dx_j - i dy_j
    factors = []
    for letter in word.letters():
        x, y = letter - letter % 2, letter - letter % 2 + 1
        factors.append(((x, ONE), (y, I if letter % 2 == 0 else -I)))
    terms: dict = {}
    for choice in product(*factors):
        seq = tuple(l for l, _ in choice)
        ordered, sign = _normalize_letters(seq, REAL)
        if ordered is None:
            continue
        c = ONE
        for _, f in choice:
            c = c * f
        c = c if sign == 1 else -c
        terms[ordered] = terms.get(ordered, ZERO) + c
    return tuple((w, c) for w, c in terms.items() if not c.is_zero())


@lru_cache(maxsize=None)
def _real_word_to_complex(word: tuple) -> tuple:
    # dx_j = (dz_j + dzbar_j)/2, dy_j = -(i/2)(dz_j - dzbar_j)
    factors = []
    for letter in word:
        z, zb = letter - letter % 2, letter - letter % 2 + 1
        if letter % 2 == 0:
            factors.append(((z, _HALF), (zb, _HALF)))
        else:
            factors.append(((z, -I * _HALF), (zb, I * _HALF)))
    terms: dict = {}
    for choice in product(*factors):
        seq = tuple(l for l, _ in choice)
        w, sign = _normalize_letters(seq, COMPLEX)
        if w is None:
            continue
        c = ONE
        for _, f in choice:
            c = c * f
        c = c if sign == 1 else -c
        terms[w] = terms.get(w, ZERO) + c
    return tuple((w, c) for w, c in terms.items() if not c.is_zero())


def _convert(phi: Form, table, rep: str) -> Form:
    terms: dict = {}
    for word, a in phi.terms.items():
        for w, c in table(word):
            v = a * c
            terms[w] = terms[w] + v if w in terms else v
    return Form(phi.n, rep, terms)


def to_real(phi: Form) -> Form:
    if phi.rep == REAL:
        return phi
    return _convert(phi, _complex_word_to_real, REAL)


def to_complex(phi: Form) -> Form:
    if phi.rep == COMPLEX:
        return phi
    return _convert(phi, _real_word_to_complex, COMPLEX)


def inner_product(alpha: Form, beta: Form) -> GaussianRational:
    """Hermitian product: real words orthonormal, conjugate-linear in ``beta``."""
    if alpha.n != beta.n:
        raise DimensionMismatch(f"n={alpha.n} vs n={beta.n}")
    a, b = to_real(alpha), to_real(beta)
    total = ZERO
    for w, c in a.terms.items():
        d = b.terms.get(w)
        if d is not None:
            total = total + c * d.conjugate()
    return total


# -- the z_I ^ zbar_K conversion sign ------------------------------------------


def conversion_sign_closed_form(I_: tuple, K: tuple) -> int:
    """Sign relating ``z_I ^ zbar_K`` to ``z_A ^ zbar_B ^ w_M`` by the rank formula.

    ``A = I - K``, ``B = K - I``, ``M = I & K``; the exponent is
    ``m(p+q) + floor(m/2) + sum over mu in M of (rank of mu in I + rank in K)``
    with ranks counted from 1.
    """
    M = sorted(set(I_) & set(K))
    m, p, q = len(M), len(I_), len(K)
    tau = sum(I_.index(mu) + 1 + K.index(mu) + 1 for mu in M)
    return -1 if (m * (p + q) + m // 2 + tau) % 2 else 1


def conversion_sign_brute(I_: tuple, K: tuple) -> int:
    seq = tuple(2 * (i - 1) for i in I_) + tuple(2 * (k - 1) + 1 for k in K)
    _, sign = _normalize_letters(seq, COMPLEX)
    return sign


def conversion_sign_report(n: int) -> dict:
    """Compare the rank formula against permutation signs for every (I, K)."""
    subsets = [s for r in range(n + 1) for s in combinations(range(1, n + 1), r)]
    mismatches = []
    checked = 0
    for I_ in subsets:
        for K in subsets:
            checked += 1
            closed, brute = conversion_sign_closed_form(I_, K), conversion_sign_brute(I_, K)
            if closed != brute:
                mismatches.append({"I": list(I_), "K": list(K), "closed_form": closed, "brute_force": brute})
    return {"n": n, "pairs_checked": checked, "mismatches": mismatches}
