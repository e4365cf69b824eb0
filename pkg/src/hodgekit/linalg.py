"""Exact linear algebra over Q and Q(i).

Dense matrices are plain lists of rows whose entries are ``mpq`` or
``GaussianRational``; nothing here ever touches floating point.
"""

from __future__ import annotations

from math import lcm

from gmpy2 import mpq

from .gaussian import GaussianRational

__all__ = [
    "SparseMatrix",
    "anticommutator",
    "bareiss_rank",
    "commutator",
    "identity",
    "inverse",
    "is_zero_matrix",
    "mat_add",
    "mat_mul",
    "mat_scale",
    "mat_sub",
    "mat_vec",
    "nullspace",
    "rank",
    "rref",
    "solve",
    "to_mpq_matrix",
    "transpose",
    "zeros",
]


def to_mpq_matrix(rows) -> list[list]:
    return [[mpq(x) if not isinstance(x, GaussianRational) else x for x in row] for row in rows]


def zeros(m: int, n: int) -> list[list]:
    return [[mpq(0)] * n for _ in range(m)]


def identity(n: int) -> list[list]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = mpq(1)
    return out


def transpose(a, ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def mat_mul(a, b, inner: int | None = None) -> list[list]:
    """Product of dense matrices; ``inner`` disambiguates shapes with zero rows."""
    if not a:
        return []
    n_inner = len(a[0]) if inner is None else inner
    if n_inner == 0:
        ncols = len(b[0]) if b else 0
        return zeros(len(a), ncols)
    ncols = len(b[0])
    out = []
    for row in a:
        acc = [mpq(0)] * ncols
        for k, x in enumerate(row):
            if x == 0:
                continue
            bk = b[k]
            for j in range(ncols):
                y = bk[j]
                if y != 0:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def mat_vec(a, v) -> list:
    return [sum((x * y for x, y in zip(row, v) if x != 0), mpq(0)) for row in a]


def mat_add(a, b) -> list[list]:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b) -> list[list]:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(c, a) -> list[list]:
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def _denominators(x):
    if isinstance(x, GaussianRational):
        return (int(x.re.denominator), int(x.im.denominator))
    return (int(mpq(x).denominator),)


def bareiss_rank(rows) -> int:
    """Rank by fraction-free Bareiss elimination.

    Each row is scaled by the lcm of its denominators first, so for rational
    input every intermediate entry is an integer and every division is exact.
    """
    m = to_mpq_matrix(rows)
    if not m or not m[0]:
        return 0
    for i, row in enumerate(m):
        scale = 1
        for x in row:
            for d in _denominators(x):
                scale = lcm(scale, d)
        m[i] = [x * scale for x in row]
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) / prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


rank = bareiss_rank


def rref(rows):
    """Reduced row echelon form. Returns ``(matrix, pivot_columns)``."""
    m = to_mpq_matrix(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], GaussianRational) else mpq(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(rows, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        n = ncols or 0
        return [[mpq(1) if i == j else mpq(0) for i in range(n)] for j in range(n)]
    n = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [mpq(0)] * n
        v[f] = mpq(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def inverse(a) -> list[list]:
    n = len(a)
    aug = [list(row) + [mpq(1) if i == j else mpq(0) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def solve(a, b) -> list | None:
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [mpq(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = m[r][n]
    return x


class SparseMatrix:
    """Square-or-not sparse matrix stored column-wise: ``cols[j] = {i: value}``.

    Used for operators on exterior algebras where columns are indexed by basis
    words; most columns have only a handful of entries.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {}
        for j, col in (cols or {}).items():
            col = {i: v for i, v in col.items() if v != 0}
            if col:
                self.cols[j] = col

    @classmethod
    def identity(cls, n: int, value=None) -> "SparseMatrix":
        one = mpq(1) if value is None else value
        return cls(n, n, {j: {j: one} for j in range(n)})

    @classmethod
    def diagonal(cls, values) -> "SparseMatrix":
        values = list(values)
        return cls(len(values), len(values), {j: {j: v} for j, v in enumerate(values)})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = {}
        for j, col in other.cols.items():
            acc = {}
            for k, b in col.items():
                left = self.cols.get(k)
                if not left:
                    continue
                for i, a in left.items():
                    acc[i] = acc[i] + a * b if i in acc else a * b
            out[j] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            tgt = out.setdefault(j, {})
            for i, v in col.items():
                tgt[i] = tgt[i] + sign * v if i in tgt else sign * v
        return SparseMatrix(self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {j: {i: c * v for i, v in col.items()} for j, col in self.cols.items()})

    __rmul__ = scale

    def conj_transpose(self) -> "SparseMatrix":
        out: dict = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                out.setdefault(i, {})[j] = v.conjugate() if hasattr(v, "conjugate") else v
        return SparseMatrix(self.ncols, self.nrows, out)

    def transpose(self) -> "SparseMatrix":
        out: dict = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                out.setdefault(i, {})[j] = v
        return SparseMatrix(self.ncols, self.nrows, out)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    def get(self, i: int, j: int):
        return self.cols.get(j, {}).get(i, 0)

    def to_dense(self) -> list[list]:
        out = zeros(self.nrows, self.ncols)
        for j, col in self.cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def anticommutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b + b @ a

