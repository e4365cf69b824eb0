"""Hodge theory on finite simplicial cochain complexes, exactly over Q.

Cochains in degree k are vectors indexed by the k-simplices in lexicographic
order.  The coboundary ``d_k`` is the transpose of the simplicial boundary
``partial_{k+1}``; inner products are diagonal with positive weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from gmpy2 import mpq

from .gaussian import parse_fraction
from .linalg import (
    identity,
    inverse,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_sub,
    mat_vec,
    nullspace,
    rank,
    transpose,
    zeros,
)

__all__ = [
    "HodgeOperators",
    "NoSolution",
    "SimplicialComplex",
    "betti_numbers",
    "boundary_matrix",
    "build_hodge",
    "coboundary_matrix",
    "examples",
    "hodge_decomposition",
    "solve_poisson",
]


class NoSolution(ValueError):
    def __init__(self, obstruction):
        super().__init__("right-hand side has a nonzero harmonic part")
        self.obstruction = obstruction


class SimplicialComplex:
    """Closure of a list of maximal simplices on vertices ``0..n_vertices-1``."""

    def __init__(self, n_vertices: int, maximal):
        self.n_vertices = n_vertices
        faces: set = {(v,) for v in range(n_vertices)}
        for s in maximal:
            s = tuple(sorted(set(s)))
            if any(not 0 <= v < n_vertices for v in s):
                raise ValueError(f"simplex {s} uses a vertex outside 0..{n_vertices - 1}")
            for r in range(1, len(s) + 1):
                faces.update(combinations(s, r))
        self.dim = max((len(f) - 1 for f in faces), default=-1)
        self.simplices = [sorted(f for f in faces if len(f) == k + 1) for k in range(self.dim + 1)]
        self.index = [{s: i for i, s in enumerate(level)} for level in self.simplices]
        self.maximal = [tuple(sorted(s)) for s in maximal]

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.count(k) for k in range(self.dim + 1))

    @classmethod
    def from_json(cls, obj: dict) -> "SimplicialComplex":
        return cls(int(obj["vertices"]), obj.get("maximal", []))

    def to_json(self) -> dict:
        return {"vertices": self.n_vertices, "maximal": [list(s) for s in self.maximal]}

    def __repr__(self):
        return f"SimplicialComplex(f-vector={[self.count(k) for k in range(self.dim + 1)]})"


def boundary_matrix(K: SimplicialComplex, k: int) -> list[list]:
    """``partial_k``: rows are (k-1)-simplices, columns k-simplices."""
    rows, cols = K.count(k - 1), K.count(k)
    out = zeros(rows, cols)
    if k < 1 or k > K.dim:
        return out
    for j, s in enumerate(K.simplices[k]):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            out[K.index[k - 1][face]][j] = mpq(-1 if i % 2 else 1)
    return out


def coboundary_matrix(K: SimplicialComplex, k: int) -> list[list]:
    """``d_k : C^k -> C^{k+1}``, the transpose of ``partial_{k+1}``."""
    if k + 1 > K.dim:
        return zeros(0, K.count(k))
    return transpose(boundary_matrix(K, k + 1), K.count(k))


def _diag(values) -> list[list]:
    values = list(values)
    out = zeros(len(values), len(values))
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def _mm(a, b, inner):
    """Product tolerant of empty shapes (``a`` is m x inner, ``b`` inner x p)."""
    p = len(b[0]) if b else 0
    if not a:
        return []
    if inner == 0:
        return zeros(len(a), p)
    return mat_mul(a, b)


@dataclass
class HodgeOperators:
    complex: SimplicialComplex
    weights: list
    d: list = field(default_factory=list)
    dstar: list = field(default_factory=list)
    laplacian: list = field(default_factory=list)
    harmonic: list = field(default_factory=list)
    green: list = field(default_factory=list)

    def size(self, k: int) -> int:
        return self.complex.count(k)

    def d_op(self, k: int):
        """``d_k`` as an (n_{k+1} x n_k) matrix, empty outside the complex."""
        if 0 <= k < len(self.d):
            return self.d[k]
        return zeros(self.size(k + 1), self.size(k))

    def dstar_op(self, k: int):
        """Adjoint of ``d_k``: an (n_k x n_{k+1}) matrix."""
        if 0 <= k < len(self.dstar):
            return self.dstar[k]
        return zeros(self.size(k), self.size(k + 1))

    def identity_report(self) -> dict:
        return _check_identities(self)


def build_hodge(K: SimplicialComplex, weights=None, verify: bool = True) -> HodgeOperators:
    """Exact d, d*, Laplacian, harmonic projector and Green operator per degree."""
    top = K.dim
    w = []
    for k in range(top + 1):
        given = None if weights is None else weights.get(k, weights.get(str(k)))
        if given is None:
            wk = [mpq(1)] * K.count(k)
        else:
            wk = [parse_fraction(x) for x in given]
            if len(wk) != K.count(k):
                raise ValueError(f"degree {k} needs {K.count(k)} weights, got {len(wk)}")
        if any(x <= 0 for x in wk):
            raise ValueError(f"weights in degree {k} must be positive")
        w.append(wk)
    ops = HodgeOperators(K, w)
    for k in range(top):
        dk = coboundary_matrix(K, k)
        ops.d.append(dk)
        winv = _diag(1 / x for x in w[k])
        ops.dstar.append(_mm(_mm(winv, transpose(dk, K.count(k + 1)), K.count(k)), _diag(w[k + 1]), K.count(k + 1)))
    for k in range(top + 1):
        n = K.count(k)
        lap = zeros(n, n)
        if k >= 1:
            lap = mat_add(lap, _mm(ops.d_op(k - 1), ops.dstar_op(k - 1), K.count(k - 1)))
        if k < top:
            lap = mat_add(lap, _mm(ops.dstar_op(k), ops.d_op(k), K.count(k + 1)))
        ops.laplacian.append(lap)
        h = _harmonic_projector(lap, w[k])
        ops.harmonic.append(h)
        ops.green.append(mat_sub(inverse(mat_add(lap, h)), h) if n else [])
    if verify:
        report = _check_identities(ops)
        bad = [name for name, ok in report.items() if ok != "ok"]
        if bad:
            raise AssertionError(f"Hodge identities failed: {bad}")
    return ops


def _harmonic_projector(lap, wk):
    """``K (K^T W K)^-1 K^T W`` for a rational kernel basis ``K`` of the Laplacian."""
    n = len(wk)
    if n == 0:
        return []
    kernel = nullspace(lap)
    if not kernel:
        return zeros(n, n)
    Kmat = transpose(kernel)  # n x r
    r = len(kernel)
    W = _diag(wk)
    KtW = mat_mul(kernel, W)  # r x n
    gram = mat_mul(KtW, Kmat)  # r x r
    return mat_mul(mat_mul(Kmat, inverse(gram)), KtW) if r else zeros(n, n)


def _eq(a, b) -> bool:
    if not a and not b:
        return True
    return is_zero_matrix(mat_sub(a, b))


def _check_identities(ops: HodgeOperators) -> dict:
    K = ops.complex
    top = K.dim
    ok = {name: True for name in (
        "I = H + lap G", "I = H + G lap", "G H = 0", "H G = 0", "d H = 0", "H d = 0",
        "d* H = 0", "H d* = 0", "[G, d] = 0", "[G, d*] = 0", "[lap, d] = 0",
        "H^2 = H", "H self-adjoint", "ker lap = ker d & ker d*")}
    for k in range(top + 1):
        n = K.count(k)
        if n == 0:
            continue
        lap, H, G = ops.laplacian[k], ops.harmonic[k], ops.green[k]
        Id = identity(n)
        ok["I = H + lap G"] &= _eq(Id, mat_add(H, mat_mul(lap, G)))
        ok["I = H + G lap"] &= _eq(Id, mat_add(H, mat_mul(G, lap)))
        ok["G H = 0"] &= is_zero_matrix(mat_mul(G, H))
        ok["H G = 0"] &= is_zero_matrix(mat_mul(H, G))
        ok["H^2 = H"] &= _eq(mat_mul(H, H), H)
        W = _diag(ops.weights[k])
        ok["H self-adjoint"] &= _eq(mat_mul(W, H), mat_mul(transpose(H), W))
        dk, dsk = ops.d_op(k), ops.dstar_op(k - 1)  # C^k -> C^{k+1}, C^k -> C^{k-1}
        if k < top:
            ok["d H = 0"] &= is_zero_matrix(mat_mul(dk, H))
            ok["H d = 0"] &= is_zero_matrix(_mm(ops.harmonic[k + 1], dk, K.count(k + 1)))
            ok["[G, d] = 0"] &= _eq(mat_mul(ops.green[k + 1], dk), mat_mul(dk, G))
            ok["[lap, d] = 0"] &= _eq(mat_mul(ops.laplacian[k + 1], dk), mat_mul(dk, lap))
            dstar = ops.dstar_op(k)
            ok["[G, d*] = 0"] &= _eq(mat_mul(G, dstar), mat_mul(dstar, ops.green[k + 1]))
            ok["H d* = 0"] &= is_zero_matrix(mat_mul(H, dstar))
        if k >= 1:
            ok["d* H = 0"] &= is_zero_matrix(mat_mul(dsk, H))
        stacked = (dk if k < top else []) + (dsk if k >= 1 else [])
        ker_both = n - rank(stacked) if stacked else n
        ok["ker lap = ker d & ker d*"] &= ker_both == n - rank(lap)
    return {name: "ok" if v else "FAIL" for name, v in ok.items()}


def betti_numbers(K: SimplicialComplex, weights=None) -> dict:
    """Harmonic dimensions next to rank-nullity cohomology dimensions."""
    ops = build_hodge(K, weights)
    harmonic = [K.count(k) - rank(ops.laplacian[k]) if K.count(k) else 0 for k in range(K.dim + 1)]
    cohom = []
    for k in range(K.dim + 1):
        dk = coboundary_matrix(K, k)
        nullity = K.count(k) - (rank(dk) if dk else 0)
        prev = rank(coboundary_matrix(K, k - 1)) if k >= 1 else 0
        cohom.append(nullity - prev)
    return {"harmonic": harmonic, "rank_nullity": cohom, "agree": harmonic == cohom}


def solve_poisson(ops: HodgeOperators, k: int, eta) -> list:
    eta = [mpq(x) for x in eta]
    if len(eta) != ops.size(k):
        raise ValueError(f"degree-{k} cochains have {ops.size(k)} entries, got {len(eta)}")
    h_eta = mat_vec(ops.harmonic[k], eta)
    if any(x != 0 for x in h_eta):
        raise NoSolution(h_eta)
    return mat_vec(ops.green[k], eta)


def hodge_decomposition(ops: HodgeOperators, k: int) -> dict:
    """Projectors onto im d, im d* and harmonics in degree ``k``."""
    n = ops.size(k)
    G = ops.green[k]
    exact = mat_mul(_mm(ops.d_op(k - 1), ops.dstar_op(k - 1), ops.size(k - 1)), G) if k >= 1 else zeros(n, n)
    coexact = mat_mul(_mm(ops.dstar_op(k), ops.d_op(k), ops.size(k + 1)), G)
    return {"exact": exact, "coexact": coexact, "harmonic": ops.harmonic[k]}


# -- sample complexes --------------------------------------------------------


def _torus7():
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(7, tris)


def _octahedron():
    # vertices 0/1, 2/3, 4/5 are antipodal pairs
    tris = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return SimplicialComplex(6, tris)


def _projective_plane6():
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    return SimplicialComplex(6, tris)


def examples() -> dict:
    """Named complexes with their rational Betti numbers."""
    return {
        "hollow_triangle": (SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)]), [1, 1]),
        "solid_triangle": (SimplicialComplex(3, [(0, 1, 2)]), [1, 0, 0]),
        "two_points": (SimplicialComplex(2, []), [2]),
        "octahedron_sphere": (_octahedron(), [1, 0, 1]),
        "torus7": (_torus7(), [1, 2, 1]),
        "projective_plane6": (_projective_plane6(), [1, 0, 0]),
        "wedge_of_circles": (SimplicialComplex(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]), [1, 2]),
    }
