"""Cech cohomology of a presented sheaf on the nerve of a finite cover.

A presented sheaf assigns a finite-dimensional rational vector space to each
simplex of the nerve and a restriction matrix to each codimension-one face
pair. Cohomology is computed with exact ranks.
"""

from __future__ import annotations

from itertools import combinations

from gmpy2 import mpq

from .gaussian import parse_fraction
from .linalg import identity, is_zero_matrix, mat_mul, rank, zeros

__all__ = [
    "Nerve",
    "PresentedSheaf",
    "SheafValidationError",
    "circle_nerve",
    "coboundary",
    "cohomology_dims",
    "constant_sheaf",
    "euler_check",
    "examples",
    "interval_nerve",
    "torus_grid_nerve",
]


class SheafValidationError(ValueError):
    """Nerve or sheaf data is inconsistent (not closed, squares do not commute, ...)."""


class Nerve:
    """Downward-closed set of simplices on vertices ``0..cover_size-1``."""

    def __init__(self, cover_size: int, simplices):
        self.cover_size = cover_size
        found = set()
        for s in simplices:
            s = tuple(s)
            if list(s) != sorted(set(s)) or not s:
                raise SheafValidationError(f"simplex {list(s)} is not a strictly increasing tuple")
            if any(not 0 <= v < cover_size for v in s):
                raise SheafValidationError(f"simplex {list(s)} uses a vertex outside 0..{cover_size - 1}")
            found.add(s)
        for v in range(cover_size):
            if (v,) not in found:
                raise SheafValidationError(f"vertex {v} is missing from the nerve")
        for s in found:
            for face in _faces(s):
                if face and face not in found:
                    raise SheafValidationError(f"face {list(face)} of {list(s)} is missing")
        self.dim = max(len(s) for s in found) - 1 if found else -1
        self.simplices = [sorted(s for s in found if len(s) == k + 1) for k in range(self.dim + 1)]
        self.index = [{s: i for i, s in enumerate(level)} for level in self.simplices]

    @classmethod
    def from_maximal(cls, cover_size: int, maximal) -> "Nerve":
        closure = set()
        for s in maximal:
            s = tuple(sorted(s))
            for r in range(1, len(s) + 1):
                closure.update(combinations(s, r))
        return cls(cover_size, closure)

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def all_simplices(self):
        for level in self.simplices:
            yield from level

    def to_json(self) -> dict:
        return {"cover_size": self.cover_size, "simplices": [list(s) for s in self.all_simplices()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Nerve":
        try:
            return cls(int(obj["cover_size"]), obj["simplices"])
        except (KeyError, TypeError) as exc:
            raise SheafValidationError(f"malformed nerve JSON: {exc}") from exc

    def __repr__(self):
        return f"Nerve(cover_size={self.cover_size}, f={[len(l) for l in self.simplices]})"


def _faces(s: tuple):
    """Codimension-one faces in order ``s_0, s_1, ...`` (``s_j`` omits vertex ``j``)."""
    return [s[:j] + s[j + 1:] for j in range(len(s))]


class PresentedSheaf:
    """Dimensions per simplex and restriction matrices ``F(face) -> F(simplex)``."""

    def __init__(self, nerve: Nerve, dims: dict, restrictions: dict, validate: bool = True):
        self.nerve = nerve
        self.dims = {}
        for s in nerve.all_simplices():
            d = dims.get(s)
            if d is None or int(d) < 0:
                raise SheafValidationError(f"missing or negative dimension for simplex {list(s)}")
            self.dims[s] = int(d)
        self.restrictions = {}
        for s in nerve.all_simplices():
            if len(s) == 1:
                continue
            for face in _faces(s):
                m = restrictions.get((face, s))
                rows, cols = self.dims[s], self.dims[face]
                if m is None:
                    if rows and cols:
                        raise SheafValidationError(f"missing restriction {list(face)} -> {list(s)}")
                    m = zeros(rows, cols)
                m = [[mpq(parse_fraction(x)) for x in row] for row in m]
                if len(m) != rows or any(len(r) != cols for r in m):
                    raise SheafValidationError(
                        f"restriction {list(face)} -> {list(s)} should be {rows}x{cols}")
                self.restrictions[(face, s)] = m
        if validate:
            self.check_squares()

    def restriction(self, face: tuple, s: tuple):
        return self.restrictions[(face, s)]

    def check_squares(self):
        """Both paths ``tau -> rho_i -> sigma`` through codimension-two faces agree."""
        for s in self.nerve.all_simplices():
            if len(s) < 3:
                continue
            for i, j in combinations(range(len(s)), 2):
                tau = tuple(v for t, v in enumerate(s) if t not in (i, j))
                rho1 = s[:i] + s[i + 1:]
                rho2 = s[:j] + s[j + 1:]
                a = mat_mul(self.restriction(rho1, s), self.restriction(tau, rho1), self.dims[rho1])
                b = mat_mul(self.restriction(rho2, s), self.restriction(tau, rho2), self.dims[rho2])
                if a != b:
                    raise SheafValidationError(
                        f"restrictions do not commute on {list(tau)} -> {list(s)}")

    def to_json(self) -> dict:
        return {
            "nerve": self.nerve.to_json(),
            "dims": [{"simplex": list(s), "dim": d} for s, d in self.dims.items()],
            "restrictions": [
                {"face": list(f), "simplex": list(s), "matrix": [[str(x) for x in row] for row in m]}
                for (f, s), m in self.restrictions.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, nerve: Nerve | None = None) -> "PresentedSheaf":
        try:
            nerve = nerve or Nerve.from_json(obj["nerve"])
            dims = {tuple(e["simplex"]): e["dim"] for e in obj["dims"]}
            res = {(tuple(e["face"]), tuple(e["simplex"])): e["matrix"] for e in obj.get("restrictions", [])}
        except (KeyError, TypeError) as exc:
            raise SheafValidationError(f"malformed sheaf JSON: {exc}") from exc
        return cls(nerve, dims, res)


def constant_sheaf(nerve: Nerve, d: int = 1) -> PresentedSheaf:
    dims = {s: d for s in nerve.all_simplices()}
    res = {}
    for s in nerve.all_simplices():
        for face in _faces(s) if len(s) > 1 else []:
            res[(face, s)] = identity(d)
    return PresentedSheaf(nerve, dims, res, validate=False)


def _offsets(sheaf: PresentedSheaf, k: int):
    out, pos = {}, 0
    for s in sheaf.nerve.simplices[k] if 0 <= k <= sheaf.nerve.dim else []:
        out[s] = pos
        pos += sheaf.dims[s]
    return out, pos


def cochain_dim(sheaf: PresentedSheaf, k: int) -> int:
    return _offsets(sheaf, k)[1]


def coboundary(sheaf: PresentedSheaf, k: int) -> list[list]:
    """Matrix of ``delta: C^k -> C^(k+1)``, ``(delta phi)(s) = sum_j (-1)^j r(s_j, s) phi(s_j)``.

    The sum runs over every face, ``j = 0..k+1``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    src, ncols = _offsets(sheaf, k)
    dst, nrows = _offsets(sheaf, k + 1)
    out = zeros(nrows, ncols)
    for s, r0 in dst.items():
        for j, face in enumerate(_faces(s)):
            c0 = src[face]
            m = sheaf.restriction(face, s)
            for a, row in enumerate(m):
                for b, x in enumerate(row):
                    if x:
                        out[r0 + a][c0 + b] += x if j % 2 == 0 else -x
    return out


def cohomology_dims(sheaf: PresentedSheaf) -> list[int]:
    """``dim H^k = nullity(delta_k) - rank(delta_(k-1))`` for ``k = 0..dim``.

    Raises :class:`SheafValidationError` if ``delta^2 != 0`` anywhere.
    """
    top = sheaf.nerve.dim
    deltas = [coboundary(sheaf, k) for k in range(top + 1)]
    for k in range(top):
        inner = cochain_dim(sheaf, k + 1)
        if deltas[k + 1] and not is_zero_matrix(mat_mul(deltas[k + 1], deltas[k], inner)):
            raise SheafValidationError(f"delta^2 != 0 from degree {k}")
    ranks = [rank(d) if d else 0 for d in deltas]
    dims = []
    for k in range(top + 1):
        nullity = cochain_dim(sheaf, k) - ranks[k]
        dims.append(nullity - (ranks[k - 1] if k else 0))
    return dims


def euler_check(sheaf: PresentedSheaf) -> dict:
    dims = cohomology_dims(sheaf)
    chain = sum((-1) ** k * cochain_dim(sheaf, k) for k in range(sheaf.nerve.dim + 1))
    coh = sum((-1) ** k * h for k, h in enumerate(dims))
    return {"cochains": chain, "cohomology": coh, "ok": chain == coh}


def circle_nerve(arcs: int = 3) -> Nerve:
    """Cover of the circle by ``arcs`` arcs, each meeting only its neighbours."""
    if arcs < 3:
        raise ValueError("a circle needs at least 3 arcs for a good cover")
    return Nerve.from_maximal(arcs, [(i, (i + 1) % arcs) for i in range(arcs)])


def interval_nerve(pieces: int = 2) -> Nerve:
    return Nerve.from_maximal(pieces, [(i, i + 1) for i in range(pieces - 1)] or [(0,)])


def torus_grid_nerve(m: int = 3) -> Nerve:
    """Nerve of ``m*m`` slightly enlarged squares on a doubly periodic grid.

    The four squares around each grid vertex meet, giving ``m*m`` tetrahedra.
    """
    if m < 3:
        raise ValueError("grid must be at least 3x3 for a good cover")

    def cell(i, j):
        return (i % m) * m + (j % m)

    maximal = [(cell(i, j), cell(i + 1, j), cell(i, j + 1), cell(i + 1, j + 1))
               for i in range(m) for j in range(m)]
    return Nerve.from_maximal(m * m, maximal)


def examples() -> dict:
    return {
        "circle3": circle_nerve(3),
        "circle6": circle_nerve(6),
        "interval2": interval_nerve(2),
        "interval4": interval_nerve(4),
        "point": Nerve(1, [(0,)]),
        "torus3": torus_grid_nerve(3),
        "torus4": torus_grid_nerve(4),
    }
