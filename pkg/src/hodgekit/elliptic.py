"""Constant-coefficient differential operators on trigonometric polynomials.

A function on the torus ``T^n`` is a finite sum ``sum_k c_k exp(i k.x)``.
``D^alpha`` acts on the mode ``k`` as multiplication by ``k^alpha``, so an
operator ``sum a_alpha D^alpha`` is the Fourier multiplier
``sigma(k) = sum a_alpha k^alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial, gcd

import sympy
from gmpy2 import mpq

from .gaussian import ONE, ZERO, GaussianRational, as_gaussian
from .linalg import bareiss_rank

__all__ = [
    "EllipticityVerdict",
    "FourierCoefficient",
    "LDO",
    "NotElliptic",
    "OutOfScope",
    "Parametrix",
    "apply",
    "compose",
    "is_elliptic",
    "laplace",
    "parametrix",
    "regularity_shadow",
    "sobolev_identity_check",
    "sobolev_norm_sq",
]


class NotElliptic(ValueError):
    """A parametrix was requested for an operator that is not elliptic."""


class OutOfScope(ValueError):
    """Requested quantity is not implemented (e.g. negative Sobolev order)."""


def _monomial(k, alpha) -> int:
    out = 1
    for ki, ai in zip(k, alpha):
        if ai:
            out *= ki ** ai
    return out


class FourierCoefficient:
    """Finitely supported map from modes ``k`` in ``Z^n`` to Gaussian rationals."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for k, c in (coeffs or {}).items():
            k = tuple(int(x) for x in k)
            if len(k) != n:
                raise ValueError(f"mode {k} has length {len(k)}, expected {n}")
            c = as_gaussian(c)
            if not c.is_zero():
                clean[k] = clean[k] + c if k in clean else c
        self.coeffs = {k: c for k, c in clean.items() if not c.is_zero()}

    @classmethod
    def exp(cls, k, coeff=ONE) -> "FourierCoefficient":
        k = tuple(k)
        return cls(len(k), {k: coeff})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return FourierCoefficient(self.n, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        s = as_gaussian(scalar)
        return FourierCoefficient(self.n, {k: c * s for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FourierCoefficient) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list:
        return sorted(self.coeffs)

    def to_json(self) -> dict:
        return {"n": self.n, "modes": [{"freq": list(k), **self.coeffs[k].to_json()} for k in self.support()]}

    @classmethod
    def from_json(cls, obj: dict) -> "FourierCoefficient":
        try:
            n = int(obj["n"])
            return cls(n, {tuple(m["freq"]): GaussianRational.from_json(m) for m in obj["modes"]})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Fourier data: {exc}") from exc

    def __repr__(self):
        body = " + ".join(f"({c})e^{list(k)}" for k, c in sorted(self.coeffs.items()))
        return f"FourierCoefficient(n={self.n}, {body or '0'})"


class LDO:
    """``sum_alpha a_alpha D^alpha`` with Gaussian-rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms):
        self.n = n
        clean = {}
        for alpha, a in dict(terms).items():
            alpha = tuple(int(x) for x in alpha)
            if len(alpha) != n or any(x < 0 for x in alpha):
                raise ValueError(f"bad multi-index {alpha} for n={n}")
            a = as_gaussian(a)
            if not a.is_zero():
                clean[alpha] = clean[alpha] + a if alpha in clean else a
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}
        if not self.terms:
            raise ValueError("operator has no nonzero coefficient")

    @property
    def order(self) -> int:
        return max(sum(a) for a in self.terms)

    def principal(self) -> dict:
        m = self.order
        return {a: c for a, c in self.terms.items() if sum(a) == m}

    def symbol(self, k) -> GaussianRational:
        """Full multiplier ``sum a_alpha k^alpha``."""
        total = ZERO
        for alpha, a in self.terms.items():
            total = total + a * _monomial(k, alpha)
        return total

    def principal_symbol(self, xi) -> GaussianRational:
        total = ZERO
        for alpha, a in self.principal().items():
            total = total + a * _monomial(xi, alpha)
        return total

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"alpha": list(a), **self.terms[a].to_json()} for a in sorted(self.terms)]}

    @classmethod
    def from_json(cls, obj: dict) -> "LDO":
        try:
            n = int(obj["n"])
            return cls(n, {tuple(t["alpha"]): GaussianRational.from_json(t) for t in obj["terms"]})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed operator: {exc}") from exc

    def __repr__(self):
        return f"LDO(n={self.n}, order={self.order}, terms={len(self.terms)})"


def laplace(n: int, shift=0) -> LDO:
    """``shift + sum_j D_j^2``."""
    terms = {tuple(2 if i == j else 0 for i in range(n)): ONE for j in range(n)}
    if shift:
        terms[(0,) * n] = as_gaussian(shift)
    return LDO(n, terms)


def apply(op: LDO, f: FourierCoefficient) -> FourierCoefficient:
    if op.n != f.n:
        raise ValueError(f"operator on T^{op.n} applied to function on T^{f.n}")
    return FourierCoefficient(f.n, {k: c * op.symbol(k) for k, c in f.coeffs.items()})


def compose(op1: LDO, op2: LDO) -> LDO:
    """``op1 o op2``: multipliers multiply."""
    if op1.n != op2.n:
        raise ValueError("operators act on different tori")
    out: dict = {}
    for a, x in op1.terms.items():
        for b, y in op2.terms.items():
            key = tuple(i + j for i, j in zip(a, b))
            out[key] = out[key] + x * y if key in out else x * y
    return LDO(op1.n, out)


# -- ellipticity ---------------------------------------------------------------


@dataclass
class EllipticityVerdict:
    elliptic: bool
    exact: bool
    method: str
    witness: tuple | None = None
    samples: int = 0

    @property
    def label(self) -> str:
        if not self.elliptic:
            return "not-elliptic"
        return "elliptic" if self.exact else "elliptic-on-samples"

    def __bool__(self):
        return self.elliptic

    def to_json(self) -> dict:
        return {"verdict": self.label, "exact": self.exact, "method": self.method,
                "witness": list(self.witness) if self.witness is not None else None, "samples": self.samples}


def _real_imag_matrices(op: LDO):
    """Symmetric matrices ``A, B`` with ``sigma_2(xi) = xi^T (A + iB) xi``."""
    n = op.n
    a = [[mpq(0)] * n for _ in range(n)]
    b = [[mpq(0)] * n for _ in range(n)]
    for alpha, c in op.principal().items():
        idx = [i for i, e in enumerate(alpha) for _ in range(e)]
        i, j = idx
        if i == j:
            a[i][i] += c.re
            b[i][i] += c.im
        else:
            a[i][j] += c.re / 2
            a[j][i] += c.re / 2
            b[i][j] += c.im / 2
            b[j][i] += c.im / 2
    return a, b


def _definiteness(m) -> int:
    """``+1``/``-1`` if positive/negative definite by leading minors, else 0."""
    n = len(m)
    mat = sympy.Matrix(n, n, lambda i, j: sympy.Rational(int(m[i][j].numerator), int(m[i][j].denominator)))
    minors = [mat[:k, :k].det() for k in range(1, n + 1)]
    if all(x > 0 for x in minors):
        return 1
    if all((x < 0) if k % 2 == 0 else (x > 0) for k, x in enumerate(minors)):
        return -1
    return 0


def _proportional(a, b):
    """If ``A`` and ``B`` are linearly dependent, a nonzero one of them, else None."""
    flat_a = [x for row in a for x in row]
    flat_b = [x for row in b for x in row]
    if bareiss_rank([flat_a, flat_b]) <= 1:
        return a if any(flat_a) else b
    return None


def _binary_form_zero(op: LDO):
    """For ``n = 2``: exact search for a real zero of the principal symbol on ``xi != 0``."""
    t = sympy.Symbol("t", real=True)
    m = op.order
    # xi = (t, 1) covers every direction except (1, 0)
    if op.principal_symbol((1, 0)).is_zero():
        return (1, 0)
    poly_re = sympy.Integer(0)
    poly_im = sympy.Integer(0)
    for alpha, c in op.principal().items():
        mono = t ** alpha[0]
        poly_re += sympy.Rational(int(c.re.numerator), int(c.re.denominator)) * mono
        poly_im += sympy.Rational(int(c.im.numerator), int(c.im.denominator)) * mono
    g = sympy.gcd(sympy.Poly(poly_re, t), sympy.Poly(poly_im, t))
    if g.degree() <= 0:
        return None
    roots = sympy.real_roots(g)
    if not roots:
        return None
    return (roots[0], 1)


def _shell(n: int, height: int):
    for xi in product(range(-height, height + 1), repeat=n):
        if any(xi):
            g = 0
            for x in xi:
                g = gcd(g, x)
            if g == 1:
                yield xi


def is_elliptic(op: LDO, height: int = 10) -> EllipticityVerdict:
    """Is ``sigma_m(xi) != 0`` for every real ``xi != 0``?

    Exact for order ``m <= 2``; for ``m > 2`` the symbol is evaluated on the
    primitive integer vectors with entries up to ``height`` and a nonvanishing
    result is reported as ``elliptic-on-samples``.  A zero found on the samples
    is always an exact witness.
    """
    n, m = op.n, op.order
    if m == 0:
        return EllipticityVerdict(True, True, "order-0")
    if n == 1:
        return EllipticityVerdict(True, True, "one-variable")
    if m == 1:
        coeffs = [op.terms.get(tuple(1 if i == j else 0 for i in range(n)), ZERO) for j in range(n)]
        r = bareiss_rank([[c.re for c in coeffs], [c.im for c in coeffs]])
        if r == n:
            return EllipticityVerdict(True, True, "rank")
        kernel = _first_kernel_vector([[c.re for c in coeffs], [c.im for c in coeffs]], n)
        return EllipticityVerdict(False, True, "rank", kernel)
    if m == 2:
        if n == 2:
            w = _binary_form_zero(op)
            if w is None:
                return EllipticityVerdict(True, True, "binary-form-roots")
            return EllipticityVerdict(False, True, "binary-form-roots", tuple(str(x) for x in w))
        a, b = _real_imag_matrices(op)
        form = _proportional(a, b)
        if form is not None:
            if _definiteness(form):
                return EllipticityVerdict(True, True, "sylvester")
            witness, count = _sample_zero(op, height)
            return EllipticityVerdict(False, True, "sylvester", witness, count)
        for s, t in _pencil_directions():
            combo = [[s * x + t * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
            if _definiteness(combo):
                return EllipticityVerdict(True, True, "definite-pencil")
    witness, count = _sample_zero(op, height)
    if witness is not None:
        return EllipticityVerdict(False, True, "sampled-zero", witness, count)
    return EllipticityVerdict(True, False, "integer-shell", None, count)


def _pencil_directions():
    seen = set()
    for p in range(-6, 7):
        for q in range(-6, 7):
            if (p, q) == (0, 0) or gcd(p, q) != 1:
                continue
            if (p, q) not in seen:
                seen.add((p, q))
                yield mpq(p), mpq(q)


def _first_kernel_vector(rows, n):
    from .linalg import nullspace

    ker = nullspace(rows, n)
    return tuple(str(x) for x in ker[0]) if ker else None


def _sample_zero(op: LDO, height: int):
    count = 0
    for xi in _shell(op.n, height):
        count += 1
        if op.principal_symbol(xi).is_zero():
            return xi, count
    return None, count


# -- Sobolev norms -------------------------------------------------------------


def sobolev_norm_sq(f: FourierCoefficient, s: int) -> mpq:
    """``sum_k |c_k|^2 (1 + |k|^2)^s``."""
    if s < 0:
        raise OutOfScope("negative Sobolev orders are not implemented")
    total = mpq(0)
    for k, c in f.coeffs.items():
        total += c.norm() * (1 + sum(x * x for x in k)) ** s
    return total


def _multi_indices(n: int, maxdeg: int):
    for alpha in product(range(maxdeg + 1), repeat=n):
        if sum(alpha) <= maxdeg:
            yield alpha


def _multinomial(s: int, alpha) -> int:
    out = factorial(s) // factorial(s - sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


def sobolev_identity_check(f: FourierCoefficient, s: int) -> dict:
    """Compare ``||f||_s^2`` with ``sum_{|alpha|<=s} w_alpha ||D^alpha f||_0^2``.

    With multinomial weights ``w_alpha = s!/(alpha! (s-|alpha|)!)`` the two
    agree exactly; with ``w_alpha = 1`` they generally do not, and the
    deviation is reported.
    """
    if s < 0:
        raise OutOfScope("negative Sobolev orders are not implemented")
    norm = sobolev_norm_sq(f, s)
    weighted = mpq(0)
    unweighted = mpq(0)
    for alpha in _multi_indices(f.n, s):
        part = sum((c.norm() * _monomial(k, alpha) ** 2 for k, c in f.coeffs.items()), mpq(0))
        weighted += _multinomial(s, alpha) * part
        unweighted += part
    return {
        "s": s,
        "norm_sq": str(norm),
        "weighted_sum": str(weighted),
        "unweighted_sum": str(unweighted),
        "weighted_ok": weighted == norm,
        "unweighted_deviation": str(norm - unweighted),
    }


# -- parametrix ----------------------------------------------------------------


@dataclass
class Parametrix:
    """Mode multiplier ``P(k) = 1/sigma(k)`` off the zero set ``Z``, and 0 on it."""

    op: LDO
    verdict: EllipticityVerdict
    _zero_cache: dict = field(default_factory=dict, repr=False)

    def multiplier(self, k) -> GaussianRational:
        s = self.op.symbol(k)
        return ZERO if s.is_zero() else s.inverse()

    def apply(self, f: FourierCoefficient) -> FourierCoefficient:
        return FourierCoefficient(f.n, {k: c * self.multiplier(k) for k, c in f.coeffs.items()})

    def defect(self, f: FourierCoefficient) -> FourierCoefficient:
        """``S f``: projection onto the modes where the symbol vanishes."""
        return FourierCoefficient(f.n, {k: c for k, c in f.coeffs.items() if self.op.symbol(k).is_zero()})

    def zero_set(self, maxfreq: int) -> list:
        if maxfreq not in self._zero_cache:
            box = product(range(-maxfreq, maxfreq + 1), repeat=self.op.n)
            self._zero_cache[maxfreq] = [k for k in box if self.op.symbol(k).is_zero()]
        return self._zero_cache[maxfreq]

    def check(self, maxfreq: int) -> dict:
        """``P L = L P = I - S`` and ``S^2 = S`` on every mode with ``|k_i| <= maxfreq``."""
        bad = []
        for k in product(range(-maxfreq, maxfreq + 1), repeat=self.op.n):
            e = FourierCoefficient.exp(k)
            expected = e - self.defect(e)
            pl = self.apply(apply(self.op, e))
            lp = apply(self.op, self.apply(e))
            ss = self.defect(self.defect(e))
            if pl != expected or lp != expected or ss != self.defect(e):
                bad.append(list(k))
        return {
            "maxfreq": maxfreq,
            "modes": (2 * maxfreq + 1) ** self.op.n,
            "zero_set": [list(k) for k in self.zero_set(maxfreq)],
            "ok": not bad,
            "failing_modes": bad[:5],
        }


def parametrix(op: LDO) -> Parametrix:
    verdict = is_elliptic(op)
    if not verdict.elliptic:
        raise NotElliptic(f"principal symbol vanishes at {verdict.witness}")
    return Parametrix(op, verdict)


def regularity_shadow(op: LDO, f: FourierCoefficient, cutoff: int) -> dict:
    """If ``op f`` only has modes with ``max|k_i| > cutoff``, then so does ``f``
    outside the zero set of the symbol."""
    g = apply(op, f)
    high_only = all(max(abs(x) for x in k) > cutoff for k in g.coeffs)
    low_f = [k for k in f.coeffs if max(abs(x) for x in k) <= cutoff]
    stray = [list(k) for k in low_f if not op.symbol(k).is_zero()]
    return {"image_high_only": high_only, "low_modes_outside_zero_set": stray,
            "ok": (not high_only) or not stray}
