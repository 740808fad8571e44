"""Exact linear algebra over the rationals.

Every Hom, kernel and cokernel computation in the package routes through
:class:`Matrix`, whose entries are :class:`fractions.Fraction` values. There is
no tolerance anywhere: a value is zero or it is not.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NoSolution(Exception):
    """Raised by :func:`solve` when the linear system is inconsistent."""


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, dropping the denominator when it is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class Matrix:
    """Immutable dense matrix with exact rational entries.

    Zero-sized shapes are legal and behave as linear maps between zero spaces.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple(tuple(_ZERO for _ in range(cols)) for _ in range(rows))
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"data does not match shape {rows}x{cols}")
            self._data = tuple(tuple(to_rational(x) for x in r) for r in data)
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = list(columns)
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def _raw(cls, rows: int, cols: int, data) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls(len(values), 1, [[v] for v in values])

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[_ZERO] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                data[r0 + i][c0:c0 + b.cols] = b._data[i]
            r0 += b.rows
            c0 += b.cols
        return cls._raw(rows, cols, tuple(tuple(r) for r in data))

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        if not blocks:
            return cls(rows or 0, 0)
        n = blocks[0].rows
        if any(b.rows != n for b in blocks):
            raise ValueError("hstack: row counts differ")
        data = tuple(tuple(x for b in blocks for x in b._data[i]) for i in range(n))
        return cls._raw(n, sum(b.cols for b in blocks), data)

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        if not blocks:
            return cls(0, cols or 0)
        n = blocks[0].cols
        if any(b.cols != n for b in blocks):
            raise ValueError("vstack: column counts differ")
        data = tuple(r for b in blocks for r in b._data)
        return cls._raw(sum(b.rows for b in blocks), n, data)

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def entries(self) -> list[Fraction]:
        """Row-major flat list."""
        return [x for r in self._data for x in r]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows = list(rows)
        cols = list(cols)
        return Matrix._raw(len(rows), len(cols),
                           tuple(tuple(self._data[i][j] for j in cols) for i in rows))

    # arithmetic ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self._data))

    def scale(self, c) -> "Matrix":
        c = to_rational(c)
        if c == 0:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self._data))

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            if not nz:
                out.append((_ZERO,) * other.cols)
                continue
            out.append(tuple(sum((a * c[k] for k, a in nz), _ZERO) for c in ocols))
        return Matrix._raw(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * v for a, v in zip(r, vec) if a and v), _ZERO) for r in self._data)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix(self.cols, 0)
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self._data)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def rank(self) -> int:
        return rref(self)[0]

    def inverse(self) -> "Matrix":
        if not is_invertible(self):
            raise ValueError("matrix is not invertible")
        n = self.rows
        aug = Matrix.hstack([self, Matrix.identity(n)])
        _, red, _ = rref(aug)
        return red.submatrix(range(n), range(n, 2 * n))

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan on a list of row lists; returns (rows, pivots)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        nzc = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[int, Matrix, list[int]]:
    """Reduced row echelon form: ``(rank, reduced, pivot_columns)``."""
    rows = [list(r) for r in m._data]
    rows, pivots = _rref_rows(rows, m.cols)
    return len(pivots), Matrix._raw(m.rows, m.cols, tuple(tuple(r) for r in rows)), pivots


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of the null space of ``m``."""
    rank, red, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    cols = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -red._data[i][f]
        cols.append(v)
    return Matrix.from_columns(cols, m.cols)


def solve(m: Matrix, b: Sequence) -> tuple:
    """Return one exact solution ``x`` of ``m x = b``; raise :class:`NoSolution` otherwise."""
    if isinstance(b, Matrix):
        if b.cols != 1:
            raise ValueError("solve expects a single column")
        b = b.col(0)
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix has {m.rows} rows")
    rows = [list(r) + [to_rational(x)] for r, x in zip(m._data, b)]
    rows, pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise NoSolution("inconsistent system")
    x = [_ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols]
    return tuple(x)


def solve_many(m: Matrix, rhs: Matrix) -> Matrix:
    """Solve ``m X = rhs`` column by column in one elimination."""
    if rhs.rows != m.rows:
        raise ValueError("row count mismatch")
    rows = [list(r) + list(s) for r, s in zip(m._data, rhs._data)]
    rows, pivots = _rref_rows(rows, m.cols + rhs.cols)
    if any(p >= m.cols for p in pivots):
        raise NoSolution("inconsistent system")
    out = [[_ZERO] * rhs.cols for _ in range(m.cols)]
    for i, p in enumerate(pivots):
        out[p] = rows[i][m.cols:]
    return Matrix._raw(m.cols, rhs.cols, tuple(tuple(r) for r in out))


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rref(m)[0] == m.rows


def column_space_basis(m: Matrix) -> Matrix:
    """Columns of ``m`` at pivot positions: a basis of its image."""
    _, _, pivots = rref(m)
    return m.submatrix(range(m.rows), pivots)


def complement_basis(sub: Matrix, n: int) -> Matrix:
    """Standard unit vectors completing the columns of ``sub`` to a basis of Q^n."""
    aug = Matrix.hstack([sub, Matrix.identity(n)]) if sub.cols else Matrix.identity(n)
    _, _, pivots = rref(aug)
    extra = [p - sub.cols for p in pivots if p >= sub.cols]
    return Matrix.identity(n).submatrix(range(n), extra)


def determinant(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m._data]
    n = m.rows
    det = _ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return _ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                for j in range(c, n):
                    rows[i][j] -= f * rows[c][j]
    return det


def charpoly(m: Matrix) -> list[Fraction]:
    """Characteristic polynomial coefficients, highest degree first (Faddeev-LeVerrier)."""
    n = m.rows
    coeffs = [_ONE]
    mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[-1]))
        trace = sum((mk[i, i] for i in range(n)), _ZERO)
        coeffs.append(-trace / k)
    return coeffs


def poly_eval_matrix(coeffs: Sequence[Fraction], m: Matrix) -> Matrix:
    """Horner evaluation of a polynomial (highest degree first) at a square matrix."""
    n = m.rows
    result = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in coeffs:
        result = result @ m + ident.scale(c)
    return result
