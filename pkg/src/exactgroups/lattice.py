"""Canonical forms for integer lattices and matrices: HNF, SNF, integer solve.

Conventions:
  * HNF is row-style upper echelon: pivots positive, entries below a pivot
    zero, entries above a pivot reduced into [0, pivot).
  * SNF diagonal entries are nonnegative and form a divisibility chain,
    with U*M*V = D for unimodular U, V.
  * The zero lattice is an empty basis, never a zero row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .matrix import Matrix, PreconditionError, ShapeError


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^dim given by its row Hermite normal form."""

    dim: int
    rows: tuple  # tuple of integer tuples, in HNF

    @property
    def rank(self):
        return len(self.rows)

    @property
    def is_zero(self):
        return not self.rows

    def pivots(self):
        """Pivot values, ordered by pivot column."""
        out = []
        for row in self.rows:
            j = next(k for k, x in enumerate(row) if x != 0)
            out.append(row[j])
        return out

    def index(self):
        """Index in Z^dim (product of pivots); None unless full rank."""
        if self.rank != self.dim:
            return None
        result = 1
        for p in self.pivots():
            result *= p
        return result

    def contains(self, v):
        """Membership by back-substitution against the echelon basis."""
        if len(v) != self.dim:
            raise ShapeError("vector dimension mismatch")
        r = list(v)
        for row in self.rows:
            j = next(k for k, x in enumerate(row) if x != 0)
            if r[j] % row[j] != 0:
                return False
            q = r[j] // row[j]
            r = [a - q * b for a, b in zip(r, row)]
        return all(x == 0 for x in r)


def hnf(rows, dim=None):
    """Row Hermite normal form of the lattice generated by `rows`.

    Canonical: two generating sets of the same lattice give identical output.
    Empty input (with `dim` supplied) yields the zero lattice.
    """
    rows = [tuple(r) for r in rows]
    if rows:
        dims = {len(r) for r in rows}
        if len(dims) != 1:
            raise ShapeError("vectors have mixed dimensions")
        dim = dims.pop() if dim is None else dim
        if dim != len(rows[0]):
            raise ShapeError("explicit dim disagrees with vectors")
    elif dim is None:
        raise ShapeError("empty input requires an explicit ambient dimension")

    def extgcd(a, b):
        old_r, r_ = a, b
        old_s, s_ = 1, 0
        old_t, t_ = 0, 1
        while r_:
            q = old_r // r_
            old_r, r_ = r_, old_r - q * r_
            old_s, s_ = s_, old_s - q * s_
            old_t, t_ = t_, old_t - q * t_
        return old_r, old_s, old_t

    work = [list(r) for r in rows]
    r = 0
    for col in range(dim):
        live = [i for i in range(r, len(work)) if work[i][col] != 0]
        if not live:
            continue
        work[r], work[live[0]] = work[live[0]], work[r]
        # Fold every other nonzero entry in this column into row r.
        for i in range(r + 1, len(work)):
            b = work[i][col]
            if b == 0:
                continue
            a = work[r][col]
            g, x, y = extgcd(a, b)
            new_r = [x * p + y * q for p, q in zip(work[r], work[i])]
            new_i = [(a // g) * q - (b // g) * p for p, q in zip(work[r], work[i])]
            work[r], work[i] = new_r, new_i
        if work[r][col] < 0:
            work[r] = [-x for x in work[r]]
        r += 1
    work = [row for row in work[:r] if any(row)]
    # Reduce entries above each pivot into [0, pivot).  Ascending order is
    # required: row i has zeros at all earlier pivot columns, so reducing
    # with it never disturbs columns already brought into range.
    for i in range(1, len(work)):
        j = next(k for k, x in enumerate(work[i]) if x != 0)
        for i2 in range(i):
            q = work[i2][j] // work[i][j]
            if q:
                work[i2] = [a - q * b for a, b in zip(work[i2], work[i])]
    return LatticeBasis(dim=dim, rows=tuple(tuple(row) for row in work))


def snf(M):
    """Smith normal form: returns (U, D, V) with U*M*V = D.

    U, V are unimodular; D is diagonal with nonnegative entries, each
    dividing the next.
    """
    m, n = M.rows, M.cols
    A = [list(row) for row in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, k, q):  # row i -= q * row k
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_op(j, k, q):  # col j -= q * col k
        for row in (A, V):
            for r in row:
                r[j] -= q * r[k]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    t = 0
    while t < min(m, n):
        # Pivot: smallest nonzero |entry| in the trailing block.
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # Clear column t and row t by Euclidean reduction.
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if not dirty:
                break
        # Divisibility: pivot must divide every remaining entry.
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t] != 0:
                    row_op(t, i, -1)  # row t += row i, then redo this pivot
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1

    # Nonnegative diagonal.
    for t in range(min(m, n)):
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return Matrix(U), Matrix(A), Matrix(V)


def solve_integer(M, b):
    """Some integer solution x of M x = b, or None when none exists.

    Solvability is decided through the Smith normal form; absence is a
    value, not an error.
    """
    if len(b) != M.rows:
        raise ShapeError("right-hand side length mismatch")
    U, D, V = snf(M)
    c = U.apply(tuple(b))
    m, n = M.rows, M.cols
    y = [0] * n
    for i in range(m):
        d = D[i, i] if i < min(m, n) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return V.apply(tuple(y))


def kernel_basis(M):
    """HNF basis of the integer kernel {x in Z^n : M x = 0}."""
    U, D, V = snf(M)
    m, n = M.rows, M.cols
    gens = []
    for j in range(n):
        d = D[j, j] if j < min(m, n) else 0
        if d == 0:
            gens.append(tuple(V[i, j] for i in range(n)))
    return hnf(gens, dim=n)


def fixed_sublattice(g, sign):
    """HNF basis of {v in Z^n : g v = sign * v}."""
    if g.rows != g.cols:
        raise ShapeError("square matrix required")
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    return kernel_basis(g - sign * Matrix.identity(g.rows))


def content(v):
    """gcd of the entries of an integer vector (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
