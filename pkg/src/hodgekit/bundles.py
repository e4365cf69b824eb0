"""Line bundles on projective space through their transition functions.

Chart ``a`` of ``P^n`` is ``{x_a != 0}`` with affine coordinates
``z1..zn = x_j / x_a`` for ``j != a`` in increasing order; ``c1..cn`` are the
conjugate coordinates, treated as independent symbols.  A transition
``g[a, b]`` is a rational function written in chart ``a`` coordinates, and
local sections obey ``s_b = g[b, a] * s_a``.  The hyperplane bundle has
``g[a, b] = x_b / x_a``.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .dolbeault import complex_coordinates, d, dol, dolbar
from .exterior import COMPLEX, ComplexBasisWord, Form

__all__ = [
    "LineBundle",
    "MalformedExpression",
    "ProjectiveCover",
    "ShapeError",
    "canonical_bundle",
    "canonical_connection",
    "canonical_vs_hyperplane",
    "coefficient_matrix",
    "conjugate",
    "curvature",
    "curvature_additivity_check",
    "curvature_chart_check",
    "dual",
    "fubini_study_form",
    "fubini_study_lift_check",
    "fubini_study_metric",
    "fubini_study_metric_matrix",
    "hyperplane_bundle",
    "is_positive",
    "kaehler_check",
    "metric_compatibility",
    "parse_rational_function",
    "power",
    "pullback",
    "sample_points",
    "sections_of_mH",
    "tensor",
    "trivial_bundle",
    "universal_bundle",
]


class ShapeError(ValueError):
    """Form has the wrong bidegree or a matrix has the wrong shape."""


class MalformedExpression(ValueError):
    """Rational-function string outside the accepted grammar."""


def conjugate(expr, n: int):
    """Swap ``z_j <-> c_j`` and conjugate the scalars."""
    zs, cs = complex_coordinates(n)
    table = {sympy.I: -sympy.I}
    table.update({z: c for z, c in zip(zs, cs)})
    table.update({c: z for z, c in zip(zs, cs)})
    return sympy.sympify(expr).xreplace(table)


def _is_zero(expr) -> bool:
    return sympy.cancel(sympy.together(expr)) == 0


# -- cover -------------------------------------------------------------------


class ProjectiveCover:
    """Standard affine charts ``0..n`` of ``P^n``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.charts = tuple(range(n + 1))

    def __eq__(self, other):
        return isinstance(other, ProjectiveCover) and other.n == self.n

    def __hash__(self):
        return hash(("P", self.n))

    def homogeneous(self, a: int, conj: bool = False) -> list:
        """Homogeneous coordinates ``x_0..x_n`` on chart ``a`` (``x_a = 1``)."""
        zs, cs = complex_coordinates(self.n)
        vs = iter(cs if conj else zs)
        return [sympy.Integer(1) if j == a else next(vs) for j in range(self.n + 1)]

    def substitution(self, src: int, dst: int) -> dict:
        """Write chart ``src`` coordinates as functions of chart ``dst`` coordinates."""
        zs, cs = complex_coordinates(self.n)
        out = {}
        for conj, syms in ((False, zs), (True, cs)):
            x = self.homogeneous(dst, conj)
            others = [j for j in range(self.n + 1) if j != src]
            for sym, j in zip(syms, others):
                out[sym] = x[j] / x[src]
        return out

    def to_chart(self, expr, src: int, dst: int):
        if src == dst:
            return sympy.sympify(expr)
        return sympy.sympify(expr).xreplace(self.substitution(src, dst))

    def jacobian(self, src: int, dst: int) -> sympy.Matrix:
        """``d(chart src coords)/d(chart dst coords)`` in chart ``dst`` coordinates."""
        zs, _ = complex_coordinates(self.n)
        sub = self.substitution(src, dst)
        return sympy.Matrix([[sympy.diff(sub[z], w) for w in zs] for z in zs])


@lru_cache(maxsize=None)
def sample_points(n: int, count: int = 10, seed: int = 0) -> tuple:
    """Rational points in chart-0 coordinates with every coordinate nonzero.

    Such points lie in every chart of ``P^n``.  Imaginary parts are included so
    that conjugates differ from the point itself.
    """
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        vals = []
        for _ in range(n):
            re_ = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            im_ = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            if re_ == 0 and im_ == 0:
                break
            vals.append(sympy.Rational(re_.numerator, re_.denominator)
                        + sympy.I * sympy.Rational(im_.numerator, im_.denominator))
        if len(vals) == n:
            pts.append(tuple(vals))
    return tuple(pts)


def _point_in_chart(cover: ProjectiveCover, point0, a: int) -> dict:
    """Substitution dict for chart ``a`` coordinates (and conjugates) at a chart-0 point."""
    zs, cs = complex_coordinates(cover.n)
    x = [sympy.Integer(1)] + list(point0)
    others = [j for j in range(cover.n + 1) if j != a]
    out = {}
    for z, c, j in zip(zs, cs, others):
        v = sympy.radsimp(sympy.expand(x[j] / x[a]))
        out[z] = v
        out[c] = sympy.conjugate(v)
    return out


def _evaluate(expr, subs: dict):
    val = sympy.sympify(expr).xreplace(subs)
    val = sympy.radsimp(sympy.cancel(val)) if val.free_symbols == set() else val
    return sympy.expand(val)


# -- rational function grammar ----------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>[zc])(?P<idx>[0-9]+)|(?P<num>[0-9]+)|(?P<op>[-+*/^()])|(?P<imag>I))")


def parse_rational_function(text: str, n: int):
    """Parse ``z1..zn``, ``c1..cn``, integers, ``I`` and ``+ - * / ^`` with parentheses."""
    if not isinstance(text, str):
        raise MalformedExpression(f"expected a string, got {type(text).__name__}")
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise MalformedExpression("empty expression")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise MalformedExpression(f"unexpected character at {pos} in {text!r}")
        if m.group("var") and not 1 <= int(m.group("idx")) <= n:
            raise MalformedExpression(f"variable {m.group(0).strip()} outside 1..{n}")
        pos = m.end()
    zs, cs = complex_coordinates(n)
    local = {str(s): s for s in zs + cs}
    local["I"] = sympy.I
    try:
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,),
                          evaluate=True)
    except (SyntaxError, TypeError, ZeroDivisionError) as exc:
        raise MalformedExpression(f"cannot parse {text!r}: {exc}") from exc
    if expr.has(sympy.zoo, sympy.nan, sympy.oo):
        raise MalformedExpression(f"{text!r} divides by zero")
    return sympy.cancel(expr)


# -- line bundles ------------------------------------------------------------


class LineBundle:
    """Transition functions ``g[(a, b)]`` on the standard cover of ``P^n``."""

    def __init__(self, cover: ProjectiveCover, transitions: dict, name: str = ""):
        self.cover = cover
        self.name = name
        g = {}
        for a in cover.charts:
            for b in cover.charts:
                if a == b:
                    g[(a, b)] = sympy.Integer(1)
                elif (a, b) in transitions:
                    g[(a, b)] = sympy.cancel(sympy.sympify(transitions[(a, b)]))
                elif (b, a) in transitions:
                    g[(a, b)] = sympy.cancel(1 / cover.to_chart(transitions[(b, a)], b, a))
                else:
                    raise ValueError(f"missing transition ({a},{b})")
        self.g = g

    @property
    def n(self) -> int:
        return self.cover.n

    def transition(self, a: int, b: int):
        return self.g[(a, b)]

    def check_cocycle(self, samples: int = 10, seed: int = 0) -> dict:
        """``g_aa = 1``, ``g_ab g_ba = 1`` and ``g_ab g_bc g_ca = 1`` on triple overlaps.

        Each identity is checked symbolically in chart ``a`` coordinates and at
        ``samples`` rational points.
        """
        cover = self.cover
        failures = []
        symbolic_ok = True
        pts = sample_points(self.n, samples, seed)
        charts = cover.charts
        for a in charts:
            if not _is_zero(self.g[(a, a)] - 1):
                failures.append({"triple": [a, a, a], "kind": "identity"})
            for b in charts:
                for c in charts:
                    prod = (self.g[(a, b)] * cover.to_chart(self.g[(b, c)], b, a)
                            * cover.to_chart(self.g[(c, a)], c, a))
                    if not _is_zero(prod - 1):
                        symbolic_ok = False
                        failures.append({"triple": [a, b, c], "kind": "symbolic"})
                    for p in pts:
                        vals = [
                            _evaluate(self.g[(a, b)], _point_in_chart(cover, p, a)),
                            _evaluate(self.g[(b, c)], _point_in_chart(cover, p, b)),
                            _evaluate(self.g[(c, a)], _point_in_chart(cover, p, c)),
                        ]
                        if sympy.expand(vals[0] * vals[1] * vals[2]) != 1:
                            failures.append({"triple": [a, b, c], "kind": "sample",
                                             "point": [str(v) for v in p]})
                            break
        triples = len(charts) ** 3
        return {
            "bundle": self.name,
            "n": self.n,
            "triples": triples,
            "samples_per_triple": len(pts),
            "symbolic": "ok" if symbolic_ok else "FAIL",
            "ok": not failures,
            "failures": failures[:5],
        }

    def is_trivial_cocycle(self) -> bool:
        return all(_is_zero(v - 1) for v in self.g.values())

    def to_json(self) -> dict:
        return {
            "charts": self.n,
            "transitions": {f"({a},{b})": str(v).replace("**", "^")
                            for (a, b), v in sorted(self.g.items()) if a != b},
        }

    @classmethod
    def from_json(cls, obj: dict, name: str = "") -> "LineBundle":
        """Read ``{"charts": N, "transitions": {"(a,b)": "..."}}`` on ``P^N``.

        With ``"convention": "swapped"`` the file's ``(a,b)`` entry ``e`` (in
        chart ``a`` coordinates) is read as ``s_b = e s_a``, i.e. our
        ``g[(b, a)]``; it is moved to chart ``b`` at this boundary.
        """
        try:
            n = int(obj["charts"])
            raw = obj["transitions"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedExpression(f"malformed bundle JSON: {exc}") from exc
        cover = ProjectiveCover(n)
        swapped = obj.get("convention", "section") == "swapped"
        trans = {}
        for key, text in raw.items():
            m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", key)
            if not m:
                raise MalformedExpression(f"bad transition key {key!r}")
            a, b = int(m.group(1)), int(m.group(2))
            if not (0 <= a <= n and 0 <= b <= n):
                raise MalformedExpression(f"chart index out of range in {key!r}")
            expr = parse_rational_function(text, n)
            if swapped:
                trans[(b, a)] = cover.to_chart(expr, a, b)
            else:
                trans[(a, b)] = expr
        return cls(cover, trans, name)

    def __repr__(self):
        return f"LineBundle({self.name or '?'}, P^{self.n})"


def _check_same_cover(l1: LineBundle, l2: LineBundle):
    if l1.cover != l2.cover:
        raise ValueError("line bundles live on different covers")


def tensor(l1: LineBundle, l2: LineBundle) -> LineBundle:
    _check_same_cover(l1, l2)
    return LineBundle(l1.cover, {k: l1.g[k] * l2.g[k] for k in l1.g}, f"{l1.name}*{l2.name}")


def dual(l: LineBundle) -> LineBundle:
    return LineBundle(l.cover, {k: 1 / v for k, v in l.g.items()}, f"{l.name}^-1")


def power(l: LineBundle, m: int) -> LineBundle:
    return LineBundle(l.cover, {k: v ** m for k, v in l.g.items()}, f"{l.name}^{m}")


def trivial_bundle(n: int) -> LineBundle:
    cover = ProjectiveCover(n)
    return LineBundle(cover, {(a, b): 1 for a in cover.charts for b in cover.charts}, "O")


def hyperplane_bundle(n: int) -> LineBundle:
    """``g[a, b] = x_b / x_a``."""
    cover = ProjectiveCover(n)
    g = {}
    for a in cover.charts:
        x = cover.homogeneous(a)
        for b in cover.charts:
            g[(a, b)] = x[b] / x[a]
    return LineBundle(cover, g, "H")


def universal_bundle(n: int) -> LineBundle:
    """``g[a, b] = x_a / x_b``."""
    cover = ProjectiveCover(n)
    g = {}
    for a in cover.charts:
        x = cover.homogeneous(a)
        for b in cover.charts:
            g[(a, b)] = x[a] / x[b]
    return LineBundle(cover, g, "U")


def canonical_bundle(n: int) -> LineBundle:
    """``g[a, b] = det d(chart b coords)/d(chart a coords)``, in chart ``a``.

    A top form ``s_a du = s_b dv`` gives ``s_b = s_a det(du/dv)``.
    """
    cover = ProjectiveCover(n)
    g = {}
    for a in cover.charts:
        for b in cover.charts:
            g[(a, b)] = sympy.cancel(cover.jacobian(b, a).det())
    return LineBundle(cover, g, "K")


def canonical_vs_hyperplane(n: int) -> dict:
    """Exhibit the 0-cochain ``lam`` with ``g_K[a,b] = lam_a g_{H^-(n+1)}[a,b] / lam_b``."""
    k = canonical_bundle(n)
    h = power(hyperplane_bundle(n), -(n + 1))
    lam = {0: sympy.Integer(1)}
    for a in k.cover.charts[1:]:
        lam[a] = sympy.cancel(k.g[(a, 0)] / h.g[(a, 0)])
    constant = all(not v.free_symbols for v in lam.values())
    ok = constant and all(
        _is_zero(k.g[(a, b)] - lam[a] * h.g[(a, b)] / lam[b]) for a in k.cover.charts for b in k.cover.charts
    )
    return {"n": n, "twist": -(n + 1), "lambda": [str(lam[a]) for a in sorted(lam)], "ok": ok}


# -- sections ----------------------------------------------------------------


def sections_of_mH(n: int, m: int) -> dict:
    """Monomial basis of sections of ``mH``, each with its local expressions.

    Returns ``{"dim", "basis": [{"monomial": exponents, "local": {a: s_a}}], "compatible"}``
    where ``s_a = F / x_a^m`` and compatibility ``s_b = g[b,a] s_a`` is checked
    symbolically for every basis element and chart pair.
    """
    if m < 0:
        return {"n": n, "m": m, "dim": 0, "basis": [], "compatible": True}
    cover = ProjectiveCover(n)
    bundle = power(hyperplane_bundle(n), m)
    basis = []
    compatible = True
    for combo in combinations_with_replacement(range(n + 1), m):
        exps = [combo.count(j) for j in range(n + 1)]
        local = {}
        for a in cover.charts:
            x = cover.homogeneous(a)
            local[a] = sympy.Mul(*[x[j] ** e for j, e in enumerate(exps)])
        for a in cover.charts:
            for b in cover.charts:
                lhs = local[b]
                rhs = bundle.g[(b, a)] * cover.to_chart(local[a], a, b)
                if not _is_zero(lhs - rhs):
                    compatible = False
        basis.append({"monomial": exps, "local": local})
    basis.sort(key=lambda e: e["monomial"], reverse=True)
    return {"n": n, "m": m, "dim": len(basis), "expected": comb(n + m, n), "basis": basis,
            "compatible": compatible}


# -- metrics, connection, curvature ------------------------------------------


def fubini_study_metric(n: int, m: int = 1) -> dict:
    """Weights ``h_a = (1 + sum |z_j|^2)^(-m)`` on ``mH``."""
    zs, cs = complex_coordinates(n)
    base = 1 + sum(z * c for z, c in zip(zs, cs))
    return {a: base ** (-m) for a in range(n + 1)}


def metric_compatibility(bundle: LineBundle, h: dict) -> dict:
    """``h_a = |g[b,a]|^2 h_b`` on every overlap, symbolically in chart ``a``."""
    cover = bundle.cover
    bad = []
    for a in cover.charts:
        for b in cover.charts:
            g_ba = cover.to_chart(bundle.g[(b, a)], b, a)
            rhs = g_ba * conjugate(g_ba, cover.n) * cover.to_chart(h[b], b, a)
            if not _is_zero(h[a] - rhs):
                bad.append([a, b])
    return {"ok": not bad, "failing_pairs": bad}


def canonical_connection(h, n: int) -> Form:
    """``theta = dol(h) / h`` as a (1,0)-form."""
    h = sympy.sympify(h)
    zs, _ = complex_coordinates(n)
    terms = {ComplexBasisWord((j + 1,), (), ()): sympy.cancel(sympy.diff(h, zs[j]) / h) for j in range(n)}
    return Form(n, COMPLEX, terms)


def curvature(h, n: int) -> Form:
    """``Theta = dolbar(dol(h) / h)``, which is ``dolbar dol log h``."""
    return dolbar(canonical_connection(h, n))


def pullback(phi: Form, subs: dict, n: int) -> Form:
    """Pull back ``phi`` along the holomorphic map ``z_j -> subs[z_j]``.

    ``subs`` maps each ``z_j`` (and ``c_j``) to an expression in the new
    coordinates, with the ``c_j`` entries the conjugates of the ``z_j`` ones.
    """
    zs, cs = complex_coordinates(n)
    dz = [Form.zero(n) for _ in range(n)]
    dzb = [Form.zero(n) for _ in range(n)]
    for j in range(n):
        for a in range(n):
            dz[j] = dz[j] + Form.z(a + 1, n) * sympy.diff(subs[zs[j]], zs[a])
            dzb[j] = dzb[j] + Form.zbar(a + 1, n) * sympy.diff(subs[cs[j]], cs[a])
    out = Form.zero(n)
    for word, c in phi.terms.items():
        img = Form.one(n) * sympy.sympify(c).xreplace(subs)
        for letter in word.letters():
            j = letter // 2
            img = img ^ (dz[j] if letter % 2 == 0 else dzb[j])
        out = out + img
    return out


def curvature_chart_check(bundle: LineBundle, h: dict) -> dict:
    """``Theta_a`` equals the pullback of ``Theta_b`` on each overlap."""
    cover = bundle.cover
    thetas = {a: curvature(h[a], cover.n) for a in cover.charts}
    bad = []
    for a in cover.charts:
        for b in cover.charts:
            if a == b:
                continue
            pulled = pullback(thetas[b], cover.substitution(b, a), cover.n)
            if not (pulled - thetas[a]).is_zero():
                bad.append([a, b])
    return {"ok": not bad, "failing_pairs": bad}


def curvature_additivity_check(h1, h2, n: int) -> dict:
    """``Theta(h1 h2) = Theta(h1) + Theta(h2)``."""
    lhs = curvature(sympy.sympify(h1) * h2, n)
    rhs = curvature(h1, n) + curvature(h2, n)
    return {"ok": (lhs - rhs).is_zero(), "product_curvature": lhs}


# -- Fubini-Study form and positivity -----------------------------------------


def fubini_study_form(n: int, chart: int = 0, lift=None) -> Form:
    """``(i/2pi) dol dolbar log ||Z||^2`` on chart ``chart``.

    ``Z`` is the lift ``(x_0, .., x_n)`` with ``x_chart = 1``; ``lift`` is an
    optional holomorphic factor ``f`` so that ``f Z`` is used instead.
    """
    if not 0 <= chart <= n:
        raise ValueError(f"chart must be in 0..{n}")
    cover = ProjectiveCover(n)
    x = cover.homogeneous(chart)
    xb = cover.homogeneous(chart, conj=True)
    norm = sum(a * b for a, b in zip(x, xb))
    if lift is not None:
        lift = sympy.sympify(lift)
        norm = norm * lift * conjugate(lift, n)
    # dolbar log N = (dolbar N) / N stays rational
    zs, cs = complex_coordinates(n)
    one_form = Form(n, COMPLEX, {ComplexBasisWord((), (j + 1,), ()): sympy.cancel(sympy.diff(norm, cs[j]) / norm)
                                 for j in range(n)})
    return dol(one_form) * (sympy.I / (2 * sympy.pi))


def coefficient_matrix(omega: Form, point: dict | None = None, factor=sympy.I) -> sympy.Matrix:
    """Matrix ``h`` with ``omega = factor * sum h[a][b] dz_a ^ dzbar_b``."""
    n = omega.n
    h = [[sympy.Integer(0)] * n for _ in range(n)]
    for word, c in omega.terms.items():
        if word.bidegree != (1, 1):
            raise ShapeError(f"term {word} is not of bidegree (1,1)")
        if word.M:
            a = b = word.M[0] - 1
        else:
            a, b = word.A[0] - 1, word.B[0] - 1
        c = sympy.sympify(c)
        if point is not None:
            c = c.xreplace(point)
        h[a][b] = sympy.cancel(c / factor)
    return sympy.Matrix(h)


def is_positive(omega: Form, samples=None, factor=sympy.I) -> dict:
    """Positive definiteness of the coefficient matrix at each sample point.

    Decided exactly by leading principal minors; a symbolic ``pi`` in the
    coefficients is kept as a positive symbol.
    """
    n = omega.n
    zs, cs = complex_coordinates(n)
    if samples is None:
        pts = [{}]
    else:
        pts = []
        for p in samples:
            sub = {}
            for z, c, v in zip(zs, cs, p):
                v = sympy.sympify(v)
                sub[z] = v
                sub[c] = sympy.conjugate(v)
            pts.append(sub)
    failures = []
    for sub in pts:
        h = coefficient_matrix(omega, sub, factor)
        if h.free_symbols - {sympy.pi}:
            raise ShapeError("coefficients still depend on coordinates; pass sample points")
        hermitian = all(sympy.expand(h[i, j] - sympy.conjugate(h[j, i])) == 0 for i in range(n) for j in range(n))
        minors = [sympy.simplify(h[:k, :k].det()) for k in range(1, n + 1)]
        positive = hermitian and all(sympy.im(m) == 0 and (m > 0) == sympy.true for m in minors)
        if not positive:
            failures.append({"point": {str(k): str(v) for k, v in sub.items()}, "minors": [str(m) for m in minors],
                             "hermitian": hermitian})
    return {"points": len(pts), "positive": not failures, "failures": failures[:3]}


def kaehler_check(h, n: int | None = None) -> dict:
    """Symmetry criterion ``d h[mu][nu]/dz_l = d h[l][nu]/dz_mu`` and ``d Omega = 0``."""
    h = [[sympy.sympify(x) for x in row] for row in h]
    n = n or len(h)
    if any(len(row) != n for row in h) or len(h) != n:
        raise ShapeError("metric matrix must be n x n")
    zs, _ = complex_coordinates(n)
    bad = []
    for mu in range(n):
        for nu in range(n):
            for lam in range(n):
                if not _is_zero(sympy.diff(h[mu][nu], zs[lam]) - sympy.diff(h[lam][nu], zs[mu])):
                    bad.append([mu + 1, nu + 1, lam + 1])
    omega = Form.zero(n)
    for mu in range(n):
        for nu in range(n):
            omega = omega + (Form.z(mu + 1, n) ^ Form.zbar(nu + 1, n)) * (sympy.I / 2 * h[mu][nu])
    closed = d(omega).is_zero()
    return {
        "n": n,
        "criterion": "ok" if not bad else "FAIL",
        "closed": "ok" if closed else "FAIL",
        "kaehler": not bad and closed,
        "vacuous": n == 1,
        "first_violation": bad[0] if bad else None,
    }


def fubini_study_metric_matrix(n: int):
    """``h[a][b] = d^2 log(1 + |z|^2) / dz_a dc_b`` on chart 0."""
    zs, cs = complex_coordinates(n)
    norm = 1 + sum(z * c for z, c in zip(zs, cs))
    return [[sympy.cancel(sympy.diff(sympy.diff(norm, cs[b]) / norm, zs[a])) for b in range(n)] for a in range(n)]


def fubini_study_lift_check(n: int, f=None) -> dict:
    """Replacing ``Z`` by ``f Z`` leaves the Fubini-Study form unchanged."""
    zs, _ = complex_coordinates(n)
    f = zs[0] + 1 if f is None else f
    same = (fubini_study_form(n, 0, lift=f) - fubini_study_form(n, 0)).is_zero()
    return {"n": n, "lift": str(f), "ok": same}

