"""Dense exact-arithmetic matrices over the integers and rationals.

Entries are Python ints or :class:`fractions.Fraction`; every operation is
exact.  Matrices are immutable and hashable, so they can be used as dict keys
and set members (needed for the conjugacy-ball enumeration).
"""

from __future__ import annotations

from fractions import Fraction


class ExactError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(ExactError):
    """Operands have incompatible dimensions."""


class PreconditionError(ExactError):
    """An operation's mathematical precondition was violated."""


def _norm(x):
    # Canonicalize Fraction with denominator 1 to int.
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x)!r}")


class Matrix:
    """Immutable dense matrix with exact int/Fraction entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = tuple(tuple(_norm(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n):
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows, cols=None):
        cols = rows if cols is None else cols
        return Matrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(entries):
        n = len(entries)
        return Matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- basic protocol ----------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.data]})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by "
                                 f"{other.rows}x{other.cols}")
            cols = list(zip(*other.data))
            return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                           for row in self.data])
        return Matrix([[other * a for a in r] for r in self.data])

    __rmul__ = __mul__

    def __pow__(self, k):
        if self.rows != self.cols:
            raise ShapeError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Matrix.identity(self.rows)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply(self, vec):
        """Matrix-vector product, returning a tuple."""
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        return tuple(_norm(sum(a * x for a, x in zip(row, vec))) for row in self.data)

    # -- structure ---------------------------------------------------------

    def transpose(self):
        return Matrix(list(zip(*self.data)))

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        return _norm(sum(self.data[i][i] for i in range(self.rows)))

    def det(self):
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        d = self.data
        if n == 1:
            return d[0][0]
        if n == 2:
            return _norm(d[0][0] * d[1][1] - d[0][1] * d[1][0])
        if n == 3:
            return _norm(
                d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1])
                - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0])
                + d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]))
        # Fraction Gaussian elimination for larger sizes.
        m = [[Fraction(x) for x in row] for row in d]
        det = Fraction(1)
        for col in range(n):
            piv = next((i for i in range(col, n) if m[i][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            inv = 1 / m[col][col]
            for i in range(col + 1, n):
                f = m[i][col] * inv
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[col])]
        return _norm(det)

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.data)]
        for col in range(n):
            piv = next((i for i in range(col, n) if m[i][col] != 0), None)
            if piv is None:
                raise PreconditionError("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [a * inv for a in m[col]]
            for i in range(n):
                if i != col and m[i][col]:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[col])]
        return Matrix([row[n:] for row in m])

    def is_integral(self):
        return all(isinstance(x, int) for row in self.data for x in row)

    def is_upper_triangular(self):
        return all(self.data[i][j] == 0
                   for i in range(self.rows) for j in range(min(i, self.cols)))

    def _same_shape(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch")


# -- vector helpers --------------------------------------------------------

def vec_add(u, v):
    return tuple(_norm(a + b) for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(_norm(a - b) for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_is_integral(u):
    return all(isinstance(x, int) or x.denominator == 1 for x in u)


def vec_norm(u):
    return tuple(_norm(x) for x in u)
