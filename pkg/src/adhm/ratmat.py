"""Exact rational matrices.

Everything in :mod:`adhm` is computed over the rationals with
:class:`fractions.Fraction` entries.  Matrices are immutable; all operations
return new objects.  Empty shapes (zero rows or zero columns) are legal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Scalar",
    "Matrix",
    "Subspace",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "rref",
    "rank",
    "rank_rref",
    "kernel_basis",
    "column_space",
    "solve",
    "inverse",
    "det",
    "kron",
    "random_matrix",
    "random_invertible",
    "make_rng",
    "SingularMatrixError",
]

Scalar = Fraction


class SingularMatrixError(ValueError):
    pass


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a rational scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with integer ``p`` and nonzero integer ``q``."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(p, q)


def format_scalar(x: Fraction) -> str:
    x = as_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Matrix:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, entries: Iterable[Iterable] = (), rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(as_scalar(v) for v in row) for row in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple, rows: int, cols: int) -> "Matrix":
        # trusted constructor: data is already a tuple of tuples of Fractions
        m = cls.__new__(cls)
        m.rows, m.cols, m._data, m._hash = rows, cols, data, None
        return m

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, z = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def scalar(cls, n: int, value) -> "Matrix":
        return cls.identity(n) * as_scalar(value)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        z = Fraction(0)
        return cls._raw(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls([[v] for v in values], rows=len(values), cols=1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = [[as_scalar(v) for v in col] for col in columns]
        if any(len(col) != rows for col in cols):
            raise ValueError("column length mismatch")
        return cls([[col[i] for col in cols] for i in range(rows)], rows=rows, cols=len(cols))

    @classmethod
    def hstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ValueError("hstack needs at least one block")
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ValueError("hstack: row counts differ")
        data = tuple(sum((b._data[i] for b in blocks), ()) for i in range(rows))
        return cls._raw(data, rows, sum(b.cols for b in blocks))

    @classmethod
    def vstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ValueError("vstack needs at least one block")
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ValueError("vstack: column counts differ")
        return cls._raw(sum((b._data for b in blocks), ()), sum(b.rows for b in blocks), cols)

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        return cls.vstack(*(cls.hstack(*row) for row in grid))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, slice) or isinstance(j, slice):
            ri = range(self.rows)[i] if isinstance(i, slice) else [i]
            cj = range(self.cols)[j] if isinstance(j, slice) else [j]
            return Matrix._raw(tuple(tuple(self._data[a][b] for b in cj) for a in ri), len(ri), len(cj))
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def flat(self) -> tuple:
        """Row-major entries."""
        return sum(self._data, ())

    @classmethod
    def from_flat(cls, values: Sequence, rows: int, cols: int) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        if len(vals) != rows * cols:
            raise ValueError("flat length mismatch")
        return cls._raw(tuple(tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows)), rows, cols)

    # arithmetic

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(v) for v in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
                           self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
                           self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.rows, self.cols)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        s = as_scalar(scalar)
        return Matrix._raw(tuple(tuple(a * s for a in r) for r in self._data), self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Fraction(0)
        ocols = other.columns()
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * oc[k] for k, a in nz), zero) for oc in ocols))
        return Matrix._raw(tuple(out), self.rows, other.cols)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols)),
                           self.cols, self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))


# elimination


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form.

    Pivot choice is the largest-magnitude entry in the current column;
    zero entries are skipped so sparse inputs stay cheap.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for j in range(ncols):
        if r == nrows:
            break
        best, best_abs = -1, 0
        for i in range(r, nrows):
            v = rows[i][j]
            if v and abs(v) > best_abs:
                best, best_abs = i, abs(v)
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        inv = 1 / prow[j]
        support = [k for k in range(j, ncols) if prow[k]]
        for k in support:
            prow[k] *= inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[j]
            if f:
                for k in support:
                    row[k] -= f * prow[k]
        pivots.append(j)
        r += 1
    return rows, pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    rows, piv = _rref_rows([list(r) for r in M._data], M.cols)
    return Matrix._raw(tuple(tuple(r) for r in rows), M.rows, M.cols), piv


def _integer_rows(M: Matrix) -> list[list[int]]:
    out = []
    for row in M._data:
        den = 1
        for v in row:
            if v.denominator != 1:
                den = den * v.denominator // _gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = _gcd(g, v)
            if g == 1:
                return row
    return [v // g for v in row] if g > 1 else row


def rank(M: Matrix) -> int:
    """Rank by fraction-free forward elimination on an integer copy.

    Each row is scaled to integers; updates ``row * p - f * pivot_row`` are
    followed by removal of the row content, which keeps entries small.
    """
    if M.rows > M.cols:
        M = M.T
    rows = [r for r in _integer_rows(M) if any(r)]
    rk = 0
    ncols = M.cols
    for j in range(ncols):
        if not rows:
            break
        best, best_abs = -1, 0
        for i, row in enumerate(rows):
            v = row[j]
            if v and (best < 0 or abs(v) < best_abs):
                best, best_abs = i, abs(v)
        if best < 0:
            continue
        prow = rows.pop(best)
        p = prow[j]
        support = [k for k in range(j, ncols) if prow[k]]
        rest = []
        for row in rows:
            f = row[j]
            if f:
                new = row[:]
                for k in range(j, ncols):
                    new[k] *= p
                for k in support:
                    new[k] -= f * prow[k]
                if any(new):
                    rest.append(_primitive(new))
            else:
                rest.append(row)
        rows = rest
        rk += 1
    return rk


def rank_rref(M: Matrix) -> int:
    """Rank read off the rational reduced echelon form (independent of :func:`rank`)."""
    _, piv = _rref_rows([list(r) for r in M._data], M.cols)
    return len(piv)


def kernel_basis(M: Matrix) -> "Subspace":
    """Basis of ``{v : M v = 0}`` read off the reduced echelon form."""
    rows, piv = _rref_rows([list(r) for r in M._data], M.cols)
    pivset = set(piv)
    free = [j for j in range(M.cols) if j not in pivset]
    vecs = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -rows[i][f]
        vecs.append(v)
    return Subspace(Matrix.from_columns(vecs, M.cols), _trusted=True)


def column_space(M: Matrix) -> "Subspace":
    """Independent columns of ``M`` spanning its image (pivot columns)."""
    _, piv = _rref_rows([list(r) for r in M._data], M.cols)
    return Subspace(Matrix.from_columns([M.col(j) for j in piv], M.rows), _trusted=True)


def _as_column(b, n: int) -> Matrix:
    if isinstance(b, Matrix):
        if b.cols != 1:
            raise ValueError("right-hand side must be a single column")
        col = b
    else:
        col = Matrix.column(list(b))
    if col.rows != n:
        raise ValueError(f"dimension mismatch: matrix has {n} rows, right-hand side has {col.rows}")
    return col


def solve(M: Matrix, b) -> Matrix | None:
    """Some ``x`` with ``M x = b``, or ``None`` when the system is inconsistent."""
    col = _as_column(b, M.rows)
    rows, piv = _rref_rows([list(r) + [col[i, 0]] for i, r in enumerate(M._data)], M.cols + 1)
    if piv and piv[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for i, p in enumerate(piv):
        x[p] = rows[i][M.cols]
    return Matrix.column(x)


def solve_matrix(M: Matrix, rhs: Matrix) -> Matrix | None:
    """Solve ``M X = rhs`` column by column; ``None`` if any column is inconsistent."""
    if rhs.rows != M.rows:
        raise ValueError("dimension mismatch")
    k = rhs.cols
    rows, piv = _rref_rows([list(r) + list(rhs.row(i)) for i, r in enumerate(M._data)], M.cols + k)
    if any(p >= M.cols for p in piv):
        return None
    out = [[Fraction(0)] * k for _ in range(M.cols)]
    for i, p in enumerate(piv):
        out[p] = rows[i][M.cols:]
    return Matrix(out, rows=M.cols, cols=k)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise SingularMatrixError("only square matrices are invertible")
    n = M.rows
    X = solve_matrix(M, Matrix.identity(n))
    if X is None or rank(M) < n:
        raise SingularMatrixError("matrix is singular")
    return X


def det(M: Matrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination on a common-denominator integer copy."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    den = 1
    for r in M._data:
        for v in r:
            den = den * v.denominator // _gcd(den, v.denominator)
    a = [[int(v * den) for v in r] for r in M._data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den ** n)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def kron(X: Matrix, Y: Matrix) -> Matrix:
    """Kronecker product; with row-major vectorization ``vec(X M Y) = kron(X, Y.T) vec(M)``."""
    rows = []
    for i in range(X.rows):
        for k in range(Y.rows):
            yr = Y.row(k)
            rows.append(tuple(x * y for x in X.row(i) for y in yr))
    return Matrix._raw(tuple(rows), X.rows * Y.rows, X.cols * Y.cols)


class Subspace:
    """Subspace of ``Q^ambient`` held as a matrix of independent basis columns."""

    __slots__ = ("ambient", "basis")

    def __init__(self, basis: Matrix, _trusted: bool = False):
        if not _trusted and rank(basis) != basis.cols:
            raise ValueError("basis columns are not independent")
        self.ambient = basis.rows
        self.basis = basis

    @classmethod
    def span(cls, M: Matrix) -> "Subspace":
        return column_space(M)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(Matrix.zeros(n, 0), _trusted=True)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(Matrix.identity(n), _trusted=True)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def contains(self, v) -> bool:
        col = _as_column(v, self.ambient)
        if self.dim == 0:
            return col.is_zero()
        return solve(self.basis, col) is not None

    def __contains__(self, v):
        return self.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        if self.dim == 0:
            return False
        return solve_matrix(self.basis, other.basis) is not None

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.dim == other.dim
                and self.contains_subspace(other))

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        return column_space(Matrix.hstack(self.basis, other.basis))

    def annihilator(self) -> Matrix:
        """Matrix ``N`` with ``ker N`` equal to this subspace."""
        return kernel_basis(self.basis.T).basis.T

    def intersect(self, other: "Subspace") -> "Subspace":
        return kernel_basis(Matrix.vstack(self.annihilator(), other.annihilator()))

    def image(self, M: Matrix) -> "Subspace":
        return column_space(M @ self.basis)

    def preimage(self, M: Matrix) -> "Subspace":
        return kernel_basis(self.annihilator() @ M)

    def is_invariant(self, M: Matrix) -> bool:
        return self.contains_subspace(self.image(M))

    def restrict(self, M: Matrix) -> Matrix:
        """Matrix of ``M`` on this (``M``-invariant) subspace in the stored basis."""
        R = solve_matrix(self.basis, M @ self.basis)
        if R is None:
            raise ValueError("subspace is not invariant")
        return R

    def completion(self) -> Matrix:
        """Append standard basis vectors greedily until the basis spans the ambient space."""
        cols = list(self.basis.columns())
        current = rank(self.basis)
        n = self.ambient
        for k in range(n):
            if current == n:
                break
            e = [Fraction(int(i == k)) for i in range(n)]
            trial = Matrix.from_columns(cols + [e], n)
            r = rank(trial)
            if r > current:
                cols.append(tuple(e))
                current = r
        return Matrix.from_columns(cols, n)


# seeded generation


def make_rng(seed=None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_matrix(rows: int, cols: int, bound: int, rng) -> Matrix:
    """Integer entries drawn uniformly from ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = make_rng(rng)
    vals = rng.integers(-bound, bound + 1, size=(rows, cols))
    return Matrix([[int(v) for v in row] for row in vals], rows=rows, cols=cols)


def random_invertible(n: int, bound: int, rng, max_tries: int = 100) -> Matrix:
    rng = make_rng(rng)
    for _ in range(max_tries):
        g = random_matrix(n, n, bound, rng)
        if det(g) != 0:
            return g
    raise RuntimeError("failed to draw an invertible matrix")
