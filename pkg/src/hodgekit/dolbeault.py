"""d, del, delbar and their adjoints on two coordinate models.

Symbolic model
    :class:`~hodgekit.exterior.Form` with sympy coefficients.  Complex words
    use coordinates ``z1..zn`` and independent conjugates ``c1..cn``; real
    words use ``x1, y1, ..., xn, yn``.  Only d, del, delbar and d_c exist here,
    there is no measure and hence no adjoint.

Flat torus model
    :class:`TorusForm`, a finite sum ``sum_k phi_k exp(i k.x)`` over frequency
    vectors ``k`` in ``Z^(2n)`` (ordered like the real alphabet) with constant
    forms ``phi_k``.  The L2 product has unit total mass, so the modes are
    orthonormal.  Every operator here preserves frequency, so it acts through a
    small exact matrix per mode and adjoints are Hermitian adjoints of those
    matrices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

import sympy

from .exterior import (
    COMPLEX,
    REAL,
    Form,
    to_complex,
    to_real,
)
from .gaussian import ONE, ZERO, GaussianRational, I
from .hodge_star import star_real
from .lefschetz import L_op, Lstar_op
from .linalg import SparseMatrix, anticommutator, commutator, rank
from .operators import adjoint_matrix, apply_matrix, basis, operator_matrix

__all__ = [
    "NoSolution",
    "TorusForm",
    "UnsupportedModel",
    "adjoint_d",
    "adjoint_dol",
    "adjoint_dolbar",
    "box",
    "boxbar",
    "check_dstar_global_formula",
    "check_kaehler_identities",
    "check_torus_hodge_identities",
    "complex_coordinates",
    "d",
    "d_c",
    "dc_adjoint_closed_form_check",
    "dol",
    "dolbar",
    "dstar_local",
    "green",
    "harmonic_projection",
    "hodge_decomposition_dims",
    "laplacian",
    "mode_operator",
    "real_coordinates",
    "solve_poisson",
    "symbolic_form_from_json",
    "symbolic_form_to_json",
]

_HALF = ONE / 2


class UnsupportedModel(TypeError):
    """Operation needs the torus inner product but got a symbolic form."""


class NoSolution(ValueError):
    """Poisson equation has a harmonic obstruction."""

    def __init__(self, obstruction):
        super().__init__("right-hand side has a nonzero harmonic part")
        self.obstruction = obstruction


# -- symbolic model ----------------------------------------------------------


@lru_cache(maxsize=None)
def complex_coordinates(n: int):
    zs = sympy.symbols(" ".join(f"z{j}" for j in range(1, n + 1)), seq=True)
    cs = sympy.symbols(" ".join(f"c{j}" for j in range(1, n + 1)), seq=True)
    return tuple(zs), tuple(cs)


@lru_cache(maxsize=None)
def real_coordinates(n: int):
    names = " ".join(f"x{j} y{j}" for j in range(1, n + 1))
    return tuple(sympy.symbols(names, seq=True))


def _diff(c, sym):
    if isinstance(c, GaussianRational):
        return ZERO
    return sympy.diff(c, sym)


def _symbolic_derivative(phi: Form, letters) -> Form:
    """``sum over (letter form, symbol) of d(coeff)/d(symbol) letter ^ word``."""
    out = Form.zero(phi.n, phi.rep)
    for letter, sym in letters:
        part = Form(phi.n, phi.rep, {w: _diff(c, sym) for w, c in phi.terms.items()})
        if part:
            out = out + (letter ^ part)
    return out


def _symbolic_dol(phi: Form) -> Form:
    if phi.rep != COMPLEX:
        raise ValueError("del needs the complex basis")
    zs, _ = complex_coordinates(phi.n)
    return _symbolic_derivative(phi, [(Form.z(j + 1, phi.n), zs[j]) for j in range(phi.n)])


def _symbolic_dolbar(phi: Form) -> Form:
    if phi.rep != COMPLEX:
        raise ValueError("delbar needs the complex basis")
    _, cs = complex_coordinates(phi.n)
    return _symbolic_derivative(phi, [(Form.zbar(j + 1, phi.n), cs[j]) for j in range(phi.n)])


def _symbolic_d(phi: Form) -> Form:
    if phi.rep == COMPLEX:
        return _symbolic_dol(phi) + _symbolic_dolbar(phi)
    xs = real_coordinates(phi.n)
    return _symbolic_derivative(phi, [(Form.real_word(phi.n, [l]), xs[l]) for l in range(2 * phi.n)])


# -- torus model -------------------------------------------------------------


def _as_freq(k, n: int) -> tuple:
    k = tuple(int(v) for v in k)
    if len(k) != 2 * n:
        raise ValueError(f"frequency {k} must have 2n = {2 * n} entries")
    return k


class TorusForm:
    """Trigonometric-polynomial form ``sum_k modes[k] * exp(i k.x)``."""

    __slots__ = ("n", "rep", "modes")

    def __init__(self, n: int, rep: str = COMPLEX, modes=None):
        self.n = n
        self.rep = rep
        self.modes = {}
        for k, phi in (modes or {}).items():
            k = _as_freq(k, n)
            if phi.n != n:
                raise ValueError("mode form has wrong dimension")
            phi = to_complex(phi) if rep == COMPLEX else to_real(phi)
            if k in self.modes:
                phi = self.modes[k] + phi
            if phi:
                self.modes[k] = phi
            else:
                self.modes.pop(k, None)

    @classmethod
    def exp(cls, n: int, k, form: Form | None = None, coeff=ONE, rep: str | None = None) -> "TorusForm":
        """``coeff * exp(i k.x) * form`` (form defaults to the constant 1)."""
        rep = rep or (form.rep if form is not None else COMPLEX)
        form = Form.one(n, rep) if form is None else form
        return cls(n, rep, {tuple(k): form * coeff})

    @classmethod
    def constant(cls, form: Form) -> "TorusForm":
        return cls(form.n, form.rep, {(0,) * (2 * form.n): form})

    @classmethod
    def zero(cls, n: int, rep: str = COMPLEX) -> "TorusForm":
        return cls(n, rep)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        modes = dict(self.modes)
        for k, phi in other.modes.items():
            modes[k] = modes[k] + phi if k in modes else phi
        return TorusForm(self.n, self.rep, modes)

    __radd__ = __add__

    def __neg__(self):
        return TorusForm(self.n, self.rep, {k: -phi for k, phi in self.modes.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return TorusForm(self.n, self.rep, {k: phi * scalar for k, phi in self.modes.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TorusForm):
            return NotImplemented
        return self.n == other.n and self.rep == other.rep and (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.modes

    def __bool__(self):
        return bool(self.modes)

    def _check(self, other):
        if not isinstance(other, TorusForm) or other.n != self.n or other.rep != self.rep:
            raise ValueError("torus forms must share n and basis")

    def mode(self, k) -> Form:
        return self.modes.get(tuple(k), Form.zero(self.n, self.rep))

    def to_complex(self) -> "TorusForm":
        return TorusForm(self.n, COMPLEX, self.modes)

    def to_real(self) -> "TorusForm":
        return TorusForm(self.n, REAL, self.modes)

    def inner(self, other: "TorusForm") -> GaussianRational:
        from .exterior import inner_product

        total = ZERO
        for k, phi in self.modes.items():
            if k in other.modes:
                total = total + inner_product(phi, other.modes[k])
        return total

    def to_json(self) -> dict:
        per_word: dict = {}
        for k in sorted(self.modes):
            for word, c in self.modes[k].sorted_terms():
                entry = {"freq": list(k)}
                entry.update(c.to_json())
                per_word.setdefault(word, []).append(entry)
        from .exterior import _sort_key, _word_to_json

        terms = [{"word": _word_to_json(w, self.rep), "coeff": per_word[w]}
                 for w in sorted(per_word, key=_sort_key)]
        return {"n": self.n, "repr": self.rep, "coeff_kind": "fourier", "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "TorusForm":
        if obj.get("coeff_kind", "fourier") != "fourier":
            raise ValueError("expected coeff_kind 'fourier'")
        n, rep = int(obj["n"]), obj.get("repr", COMPLEX)
        out = cls.zero(n, rep)
        for t in obj["terms"]:
            word = Form.from_json({"n": n, "repr": rep, "terms": [{"word": t["word"], "re": "1", "im": "0"}]})
            for c in t["coeff"]:
                out = out + cls.exp(n, c["freq"], word, GaussianRational.from_json(c))
        return out

    def __repr__(self):
        inner = ", ".join(f"{k}: {phi!r}" for k, phi in sorted(self.modes.items()))
        return f"TorusForm(n={self.n}, {self.rep}, {{{inner}}})"


# per-mode matrices -----------------------------------------------------------


@lru_cache(maxsize=None)
def _letter_matrices(n: int, rep: str):
    """Matrices of left multiplication by each letter of the chosen basis."""
    if rep == COMPLEX:
        zs = tuple(operator_matrix(lambda phi, j=j: Form.z(j, n) ^ phi, n, rep) for j in range(1, n + 1))
        zbs = tuple(operator_matrix(lambda phi, j=j: Form.zbar(j, n) ^ phi, n, rep) for j in range(1, n + 1))
        return zs, zbs
    return tuple(operator_matrix(lambda phi, l=l: Form.real_word(n, [l]) ^ phi, n, rep)
                 for l in range(2 * n))


def _zero_matrix(n: int, rep: str) -> SparseMatrix:
    size = len(basis(n, rep)[0])
    return SparseMatrix(size, size)


def _combine(coeffs, mats, n, rep) -> SparseMatrix:
    out = _zero_matrix(n, rep)
    for c, m in zip(coeffs, mats):
        if c != 0:
            out = out + m.scale(c)
    return out


def _dz_multipliers(k):
    # d/dz_j = (d/dx_j - i d/dy_j)/2 and d/dzbar_j = (d/dx_j + i d/dy_j)/2 on exp(i k.x)
    dol, dolbar = [], []
    for j in range(len(k) // 2):
        kx, ky = k[2 * j], k[2 * j + 1]
        dol.append(GaussianRational(ky, kx) * _HALF)
        dolbar.append(GaussianRational(-ky, kx) * _HALF)
    return dol, dolbar


_SIMPLE = ("d", "dol", "dolbar", "dc", "L", "Lstar")


@lru_cache(maxsize=None)
def mode_operator(name: str, n: int, k: tuple, rep: str = COMPLEX) -> SparseMatrix:
    """Exact matrix of operator ``name`` on the frequency-``k`` block.

    Names: d, dol, dolbar, dc, L, Lstar, adjoints with a trailing ``*``
    (``d*``, ``dol*``, ``dolbar*``, ``dc*``), and the Laplacians
    ``laplacian``, ``box``, ``boxbar``, ``laplacian_c``.
    """
    if name.endswith("*"):
        return adjoint_matrix(mode_operator(name[:-1], n, k, rep), n, rep)
    if name == "laplacian":
        return _laplacian_from("d", n, k, rep)
    if name == "box":
        return _laplacian_from("dol", n, k, rep)
    if name == "boxbar":
        return _laplacian_from("dolbar", n, k, rep)
    if name == "laplacian_c":
        return _laplacian_from("dc", n, k, rep)
    if rep == REAL:
        if name != "d":
            raise ValueError(f"operator {name!r} needs the complex basis")
        return _combine([I * kl for kl in k], _letter_matrices(n, REAL), n, REAL)
    if name == "L":
        return operator_matrix(L_op, n, COMPLEX)
    if name == "Lstar":
        return operator_matrix(Lstar_op, n, COMPLEX)
    zs, zbs = _letter_matrices(n, COMPLEX)
    a, b = _dz_multipliers(k)
    if name == "dol":
        return _combine(a, zs, n, rep)
    if name == "dolbar":
        return _combine(b, zbs, n, rep)
    if name == "d":
        return mode_operator("dol", n, k, rep) + mode_operator("dolbar", n, k, rep)
    if name == "dc":
        return (mode_operator("dol", n, k, rep) - mode_operator("dolbar", n, k, rep)).scale(-I)
    raise KeyError(f"unknown operator {name!r}")


def _laplacian_from(base: str, n, k, rep) -> SparseMatrix:
    a = mode_operator(base, n, k, rep)
    a_star = mode_operator(base + "*", n, k, rep)
    return a @ a_star + a_star @ a


def _apply_torus(name: str, phi: TorusForm) -> TorusForm:
    modes = {}
    for k, form in phi.modes.items():
        modes[k] = apply_matrix(mode_operator(name, phi.n, k, phi.rep), form)
    return TorusForm(phi.n, phi.rep, modes)


# -- public operators --------------------------------------------------------


def d(phi):
    if isinstance(phi, TorusForm):
        return _apply_torus("d", phi)
    return _symbolic_d(phi)


def dol(phi):
    if isinstance(phi, TorusForm):
        return _apply_torus("dol", phi)
    return _symbolic_dol(phi)


def dolbar(phi):
    if isinstance(phi, TorusForm):
        return _apply_torus("dolbar", phi)
    return _symbolic_dolbar(phi)


def d_c(phi):
    """``-i (del - delbar)``."""
    if isinstance(phi, TorusForm):
        return _apply_torus("dc", phi)
    return (dol(phi) - dolbar(phi)) * (-I)


def _torus_only(phi, what: str) -> TorusForm:
    if not isinstance(phi, TorusForm):
        raise UnsupportedModel(f"{what} needs the flat-torus model (symbolic forms carry no inner product)")
    return phi


def adjoint_d(phi):
    return _apply_torus("d*", _torus_only(phi, "adjoint_d"))


def adjoint_dol(phi):
    return _apply_torus("dol*", _torus_only(phi, "adjoint_dol"))


def adjoint_dolbar(phi):
    return _apply_torus("dolbar*", _torus_only(phi, "adjoint_dolbar"))


def laplacian(phi):
    return _apply_torus("laplacian", _torus_only(phi, "laplacian"))


def box(phi):
    return _apply_torus("box", _torus_only(phi, "box"))


def boxbar(phi):
    return _apply_torus("boxbar", _torus_only(phi, "boxbar"))


@lru_cache(maxsize=None)
def _laplacian_eigenvalue(n: int, k: tuple, rep: str):
    """Certify that the Laplacian on mode ``k`` is ``|k|^2`` times the identity."""
    lap = mode_operator("laplacian", n, k, rep)
    lam = GaussianRational(sum(v * v for v in k))
    size = lap.nrows
    if lap != SparseMatrix.identity(size, lam):
        raise AssertionError(f"Laplacian on mode {k} is not scalar; flat-metric assumption broken")
    return lam


def harmonic_projection(phi):
    phi = _torus_only(phi, "harmonic_projection")
    modes = {k: f for k, f in phi.modes.items() if _laplacian_eigenvalue(phi.n, k, phi.rep) == 0}
    return TorusForm(phi.n, phi.rep, modes)


def green(phi):
    phi = _torus_only(phi, "green")
    modes = {}
    for k, f in phi.modes.items():
        lam = _laplacian_eigenvalue(phi.n, k, phi.rep)
        if lam != 0:
            modes[k] = f * (ONE / lam)
    return TorusForm(phi.n, phi.rep, modes)


def solve_poisson(eta):
    """The unique ``phi`` with ``laplacian(phi) = eta`` and no harmonic part."""
    eta = _torus_only(eta, "solve_poisson")
    obstruction = harmonic_projection(eta)
    if obstruction:
        raise NoSolution(obstruction)
    return green(eta)


def _mode_matrix_of(fn, n: int, k: tuple, rep: str) -> SparseMatrix:
    """Matrix of a frequency-preserving torus operator on the mode ``k``."""
    words, index = basis(n, rep)
    cols = {}
    for j, w in enumerate(words):
        out = fn(TorusForm.exp(n, k, Form(n, rep, {w: ONE})))
        img = out.modes.get(k)
        if set(out.modes) - {k}:
            raise AssertionError(f"operator moved frequency {k}")
        cols[j] = {index[v]: c for v, c in img.terms.items()} if img is not None else {}
    return SparseMatrix(len(words), len(words), cols)


def check_torus_hodge_identities(n: int, maxfreq: int = 1) -> dict:
    """``I = H + lap G = H + G lap``, ``GH = HG = 0``, ``[G, d] = [G, d*] = 0``, ``dH = Hd = 0``.

    ``H`` and ``G`` are read off :func:`harmonic_projection` and :func:`green`
    on every basis form of every mode in the box; the identities are exact
    matrix equalities per mode.
    """
    if not 1 <= n <= 2:
        raise ValueError("check_torus_hodge_identities supports 1 <= n <= 2")
    names = ["I = H + lap G", "I = H + G lap", "G H = 0", "H G = 0", "[G, d] = 0", "[G, d*] = 0",
             "d H = 0", "H d = 0"]
    failures = {name: 0 for name in names}
    modes = _frequency_box(n, maxfreq)
    for k in modes:
        H = _mode_matrix_of(harmonic_projection, n, k, COMPLEX)
        G = _mode_matrix_of(green, n, k, COMPLEX)
        lap = mode_operator("laplacian", n, k)
        dk = mode_operator("d", n, k)
        ds = mode_operator("d*", n, k)
        eye = SparseMatrix.identity(lap.nrows, ONE)
        checks = {
            "I = H + lap G": H + lap @ G == eye,
            "I = H + G lap": H + G @ lap == eye,
            "G H = 0": (G @ H).is_zero(),
            "H G = 0": (H @ G).is_zero(),
            "[G, d] = 0": commutator(G, dk).is_zero(),
            "[G, d*] = 0": commutator(G, ds).is_zero(),
            "d H = 0": (dk @ H).is_zero(),
            "H d = 0": (H @ dk).is_zero(),
        }
        for name, ok in checks.items():
            if not ok:
                failures[name] += 1
    return {"n": n, "maxfreq": maxfreq, "modes_checked": len(modes),
            "identities": {name: "ok" if failures[name] == 0 else "FAIL" for name in names}}


# -- local formula for the codifferential ------------------------------------


def dstar_local(phi):
    """``d*(f dx_J) = sum_p (-1)^p (df/dx_{j_p}) dx_{J - j_p}`` on real words."""
    if phi.rep != REAL:
        raise ValueError("dstar_local works on real words")
    if isinstance(phi, TorusForm):
        modes = {}
        for k, form in phi.modes.items():
            modes[k] = _dstar_local_form(form, lambda c, l, k=k: c * (I * k[l]))
        return TorusForm(phi.n, REAL, modes)
    xs = real_coordinates(phi.n)
    return _dstar_local_form(phi, lambda c, l: _diff(c, xs[l]))


def _dstar_local_form(phi: Form, partial) -> Form:
    terms: dict = {}
    for word, c in phi.terms.items():
        for pos, l in enumerate(word, start=1):
            rest = word[:pos - 1] + word[pos:]
            v = partial(c, l)
            v = v if pos % 2 == 0 else -v
            terms[rest] = terms[rest] + v if rest in terms else v
    return Form(phi.n, REAL, terms)


def _frequency_box(n: int, maxfreq: int):
    return list(product(range(-maxfreq, maxfreq + 1), repeat=2 * n))


def check_dstar_global_formula(n: int, maxfreq: int = 1) -> dict:
    """Compare the adjoint of d with ``(-1)^(N(m+1)+1) * d *`` and with the local formula.

    ``N = 2n`` is the real dimension and ``m`` the degree of the input word.
    """
    N = 2 * n
    words, _ = basis(n, REAL)
    global_mismatch, local_mismatch = [], []
    for k in _frequency_box(n, maxfreq):
        for w in words:
            phi = TorusForm.exp(n, k, Form(n, REAL, {w: ONE}))
            ref = adjoint_d(phi)
            m = len(w)
            sign = -1 if (N * (m + 1) + 1) % 2 else 1
            modes = {kk: star_real(apply_matrix(mode_operator("d", n, kk, REAL), star_real(f))) * sign
                     for kk, f in phi.modes.items()}
            if TorusForm(n, REAL, modes) != ref:
                global_mismatch.append({"freq": list(k), "degree": m})
            if dstar_local(phi) != ref:
                local_mismatch.append({"freq": list(k), "degree": m})
    return {"n": n, "maxfreq": maxfreq, "global_formula_mismatches": len(global_mismatch),
            "local_formula_mismatches": len(local_mismatch),
            "examples": (global_mismatch + local_mismatch)[:5]}


# -- Kaehler identities ------------------------------------------------------


def _kaehler_identities():
    """``(label, lhs, rhs)`` builders on a dict of per-mode matrices."""
    c = commutator
    return [
        ("[L,d*] = dc", lambda o: c(o["L"], o["d*"]), lambda o: o["dc"]),
        ("[L*,d] = -dc*", lambda o: c(o["Lstar"], o["d"]), lambda o: -o["dc*"]),
        ("[L,dc] = 0", lambda o: c(o["L"], o["dc"]), lambda o: o["0"]),
        ("[L*,dc*] = 0", lambda o: c(o["Lstar"], o["dc*"]), lambda o: o["0"]),
        ("[L,dc*] = -d", lambda o: c(o["L"], o["dc*"]), lambda o: -o["d"]),
        ("[L*,dc] = d*", lambda o: c(o["Lstar"], o["dc"]), lambda o: o["d*"]),
        ("[L,dol] = 0", lambda o: c(o["L"], o["dol"]), lambda o: o["0"]),
        ("[L,dolbar] = 0", lambda o: c(o["L"], o["dolbar"]), lambda o: o["0"]),
        ("[L*,dol*] = 0", lambda o: c(o["Lstar"], o["dol*"]), lambda o: o["0"]),
        ("[L*,dolbar*] = 0", lambda o: c(o["Lstar"], o["dolbar*"]), lambda o: o["0"]),
        ("[L,dol*] = i dolbar", lambda o: c(o["L"], o["dol*"]), lambda o: o["dolbar"].scale(I)),
        ("[L,dolbar*] = -i dol", lambda o: c(o["L"], o["dolbar*"]), lambda o: o["dol"].scale(-I)),
        ("[L*,dol] = i dolbar*", lambda o: c(o["Lstar"], o["dol"]), lambda o: o["dolbar*"].scale(I)),
        ("[L*,dolbar] = -i dol*", lambda o: c(o["Lstar"], o["dolbar"]), lambda o: o["dol*"].scale(-I)),
        ("{d,dc} = 0", lambda o: anticommutator(o["d"], o["dc"]), lambda o: o["0"]),
        ("laplacian_c = laplacian", lambda o: o["laplacian_c"], lambda o: o["laplacian"]),
        ("laplacian = 2 box", lambda o: o["laplacian"], lambda o: o["box"].scale(2)),
        ("laplacian = 2 boxbar", lambda o: o["laplacian"], lambda o: o["boxbar"].scale(2)),
    ] + _chain_identities()


def _chain_identities():
    chains = {
        "d* dc": [lambda o: -(o["dc"] @ o["d*"]),
                  lambda o: o["d*"] @ o["L"] @ o["d*"],
                  lambda o: -(o["dc"] @ o["Lstar"] @ o["dc"])],
        "d dc*": [lambda o: -(o["dc*"] @ o["d"]),
                  lambda o: o["dc*"] @ o["L"] @ o["dc*"],
                  lambda o: -(o["d"] @ o["Lstar"] @ o["d"])],
        "dol dolbar*": [lambda o: -(o["dolbar*"] @ o["dol"]),
                        lambda o: (o["dolbar*"] @ o["L"] @ o["dolbar*"]).scale(-I),
                        lambda o: (o["dol"] @ o["Lstar"] @ o["dol"]).scale(-I)],
        "dolbar dol*": [lambda o: -(o["dol*"] @ o["dolbar"]),
                        lambda o: (o["dol*"] @ o["L"] @ o["dol*"]).scale(I),
                        lambda o: (o["dolbar"] @ o["Lstar"] @ o["dolbar"]).scale(I)],
    }
    heads = {
        "d* dc": lambda o: o["d*"] @ o["dc"],
        "d dc*": lambda o: o["d"] @ o["dc*"],
        "dol dolbar*": lambda o: o["dol"] @ o["dolbar*"],
        "dolbar dol*": lambda o: o["dolbar"] @ o["dol*"],
    }
    labels = {
        "d* dc": ["-dc d*", "d* L d*", "-dc L* dc"],
        "d dc*": ["-dc* d", "dc* L dc*", "-d L* d"],
        "dol dolbar*": ["-dolbar* dol", "-i dolbar* L dolbar*", "-i dol L* dol"],
        "dolbar dol*": ["-dol* dolbar", "i dol* L dol*", "i dolbar L* dolbar"],
    }
    out = []
    for head, rhss in chains.items():
        for label, rhs in zip(labels[head], rhss):
            out.append((f"{head} = {label}", heads[head], rhs))
    return out


def _mode_bundle(n: int, k: tuple) -> dict:
    names = ["d", "dol", "dolbar", "dc", "L", "Lstar", "d*", "dol*", "dolbar*", "dc*",
             "laplacian", "box", "boxbar", "laplacian_c"]
    ops = {name: mode_operator(name, n, k) for name in names}
    ops["0"] = _zero_matrix(n, COMPLEX)
    return ops


def _is_interior(k: tuple, maxfreq: int) -> bool:
    # every operator in the suite maps frequency k to frequency k
    return all(abs(v) <= maxfreq for v in k)


def check_kaehler_identities(n: int, maxfreq: int) -> dict:
    if not 1 <= n <= 2 or not 0 <= maxfreq <= 2:
        raise ValueError("check_kaehler_identities supports 1 <= n <= 2 and maxfreq <= 2")
    identities = _kaehler_identities()
    failures = {label: 0 for label, _, _ in identities}
    modes = _frequency_box(n, maxfreq)
    interior = [k for k in modes if _is_interior(k, maxfreq)]
    first = {}
    for k in interior:
        ops = _mode_bundle(n, k)
        for label, lhs, rhs in identities:
            if lhs(ops) != rhs(ops):
                failures[label] += 1
                first.setdefault(label, list(k))
    return {
        "n": n,
        "maxfreq": maxfreq,
        "modes_checked": len(interior),
        "modes_excluded": len(modes) - len(interior),
        "identities": {label: ("ok" if failures[label] == 0 else "FAIL") for label in failures},
        "failing_modes": {label: failures[label] for label in failures if failures[label]},
        "first_counterexample": first,
    }


def dc_adjoint_closed_form_check(n: int, maxfreq: int = 1) -> dict:
    """Test the closed form ``dc* = -i(dol* - dolbar*)`` against the true adjoint of dc."""
    bad = 0
    modes = _frequency_box(n, maxfreq)
    for k in modes:
        explicit = (mode_operator("dol*", n, k) - mode_operator("dolbar*", n, k)).scale(-I)
        if explicit != mode_operator("dc*", n, k):
            bad += 1
    return {"n": n, "modes": len(modes), "mismatching_modes": bad}


# -- Hodge numbers of the flat torus -----------------------------------------


def hodge_decomposition_dims(n: int) -> dict:
    """``h^{p,q}`` as kernel dimensions of the Laplacian on constant (p,q)-forms."""
    if not 1 <= n <= 3:
        raise ValueError("hodge_decomposition_dims supports 1 <= n <= 3")
    zero = (0,) * (2 * n)
    lap = mode_operator("laplacian", n, zero).to_dense()
    words, index = basis(n, COMPLEX)
    h = {}
    for p in range(n + 1):
        for q in range(n + 1):
            idx = [index[w] for w in words if w.bidegree == (p, q)]
            block = [[lap[i][j] for j in idx] for i in range(len(words))]
            h[(p, q)] = len(idx) - rank(block) if idx else 0
    betti = [sum(h[(p, r - p)] for p in range(max(0, r - n), min(n, r) + 1)) for r in range(2 * n + 1)]
    return {
        "n": n,
        "h": {f"{p},{q}": v for (p, q), v in sorted(h.items())},
        "betti": betti,
        "matches_binomial": all(h[(p, q)] == comb(n, p) * comb(n, q) for p, q in h),
        "betti_matches_binomial": all(b == comb(2 * n, r) for r, b in enumerate(betti)),
    }


# -- JSON for symbolic coefficients ------------------------------------------


def symbolic_form_to_json(phi: Form) -> dict:
    """Serialize a form with polynomial coefficients as exponent/coefficient lists."""
    from .exterior import _word_to_json

    gens = _gens(phi.n, phi.rep)
    terms = []
    for word, c in phi.sorted_terms():
        poly = sympy.Poly(sympy.sympify(c), *gens)
        coeffs = []
        for exp, a in sorted(poly.terms()):
            re, im = sympy.sympify(a).as_real_imag()
            coeffs.append({"exp": list(exp), "re": f"{re.p}/{re.q}", "im": f"{im.p}/{im.q}"})
        terms.append({"word": _word_to_json(word, phi.rep), "coeff": coeffs})
    return {"n": phi.n, "repr": phi.rep, "coeff_kind": "poly", "terms": terms}


def symbolic_form_from_json(obj: dict) -> Form:
    if obj.get("coeff_kind") != "poly":
        raise ValueError("expected coeff_kind 'poly'")
    n, rep = int(obj["n"]), obj.get("repr", COMPLEX)
    gens = _gens(n, rep)
    out = Form.zero(n, rep)
    for t in obj["terms"]:
        word = Form.from_json({"n": n, "repr": rep, "terms": [{"word": t["word"], "re": "1", "im": "0"}]})
        expr = sympy.Integer(0)
        for c in t["coeff"]:
            mono = sympy.Mul(*[g ** e for g, e in zip(gens, c["exp"])])
            expr += sympy.sympify(GaussianRational.from_json(c)) * mono
        out = out + word * expr
    return out


def _gens(n: int, rep: str):
    if rep == COMPLEX:
        zs, cs = complex_coordinates(n)
        return zs + cs
    return real_coordinates(n)
