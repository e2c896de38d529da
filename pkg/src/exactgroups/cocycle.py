"""Z^2-valued 1-cocycles on subgroups of SL2(Z).

A cocycle for the linear action on Z^2 satisfies
    c(g h) = g c(h) + c(g),
and is a coboundary when c(g) = xi - g xi for a fixed vector xi.

The module covers: evaluation on words, the full-group coboundary solver,
the Gamma_1(N) family with its integrality obstruction, the central (-I)
parity case analysis, and the infinite-rank free family b^k a b^-k with its
singular extension system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import solve_integer
from .matrix import (Matrix, PreconditionError, vec_add, vec_is_integral,
                     vec_norm, vec_sub)
from .sl2 import CongruenceKind, congruence_membership


class RelatorNotIdentity(PreconditionError):
    """A supplied relator word does not evaluate to the identity matrix."""


class UnderdeterminedWitness(PreconditionError):
    """The joint coboundary system does not pin xi down uniquely."""


@dataclass(frozen=True)
class CocycleSpec:
    """A cocycle presented by generator matrices and their Z^2 values.

    Relators (optional) are words that must evaluate to the identity matrix;
    words are tuples of (generator index, integer exponent).
    """

    generators: tuple
    values: tuple
    relators: tuple = ()

    def __post_init__(self):
        if len(self.generators) != len(self.values):
            raise PreconditionError("generator and value lists differ in length")
        for g in self.generators:
            if (g.rows, g.cols) != (2, 2) or not g.is_integral() or g.det() != 1:
                raise PreconditionError("generators must lie in SL2(Z)")


@dataclass(frozen=True)
class CoboundaryWitness:
    xi: tuple          # rational vector
    integral: bool     # xi in Z^2

    @staticmethod
    def of(xi):
        xi = vec_norm(xi)
        return CoboundaryWitness(xi=xi, integral=all(isinstance(x, int) for x in xi))


def cocycle_eval(spec, word):
    """Value of the cocycle on a word over the spec's generators.

    Inverse generators are handled through c(g^-1) = -g^-1 c(g).
    """
    m = Matrix.identity(2)
    v = (0, 0)
    for idx, exp in word:
        if not 0 <= idx < len(spec.generators):
            raise PreconditionError(f"unknown generator index {idx}")
        g = spec.generators[idx]
        cg = spec.values[idx]
        if exp < 0:
            g_inv = g.inverse()
            g, cg = g_inv, vec_norm(tuple(-x for x in g_inv.apply(cg)))
            exp = -exp
        for _ in range(exp):
            v = vec_add(v, m.apply(cg))
            m = m * g
    return v


def verify_relations(spec):
    """True iff every relator evaluates to I as a matrix and 0 as a cocycle.

    A relator that is not the identity matrix is a spec error, reported as
    RelatorNotIdentity rather than False.
    """
    ident = Matrix.identity(2)
    for word in spec.relators:
        m = ident
        for idx, exp in word:
            m = m * (spec.generators[idx] ** exp)
        if m != ident:
            raise RelatorNotIdentity(f"relator {word} evaluates to {m!r}")
        if cocycle_eval(spec, word) != (0, 0):
            return False
    return True


def solve_full_coboundary(c_t):
    """Extend a value on the order-6 generator t to a coboundary of SL2(Z).

    Every choice c(t) = (x, y) extends uniquely: the relation between the
    order-4 and order-6 generators forces c(s) = (-x - 2y, x), and the
    resulting cocycle equals xi - g xi with xi = (-y, x + y).
    """
    x, y = c_t
    c_s = (-x - 2 * y, x)
    return c_s, CoboundaryWitness.of((-y, x + y))


def coboundary_witness(spec):
    """Solve xi - g xi = c(g) over Q for all generators jointly.

    Prefers a single generator g with det(I - g) != 0 (unique xi); otherwise
    falls back to the stacked linear system from all generators.  Returns
    None when the system is inconsistent; raises UnderdeterminedWitness when
    the joint kernel is nontrivial.
    """
    ident = Matrix.identity(2)
    for g, cg in zip(spec.generators, spec.values):
        m = ident - g
        if m.det() != 0:
            xi = m.inverse().apply(cg)
            if _witness_fits(spec, xi):
                return CoboundaryWitness.of(xi)
            return None
    # Stacked system over all generators.
    rows, rhs = [], []
    for g, cg in zip(spec.generators, spec.values):
        m = ident - g
        rows.extend([[Fraction(m[i, 0]), Fraction(m[i, 1])] for i in range(2)])
        rhs.extend([Fraction(cg[0]), Fraction(cg[1])])
    xi = _solve_rational(rows, rhs)
    if xi is None:
        return None
    return CoboundaryWitness.of(xi)


def _witness_fits(spec, xi):
    for g, cg in zip(spec.generators, spec.values):
        if vec_norm(vec_sub(xi, g.apply(xi))) != vec_norm(cg):
            return False
    return True


def _solve_rational(rows, rhs):
    """Gauss elimination on an overdetermined 2-column rational system."""
    aug = [row + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(2):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][2] != 0:
            return None  # inconsistent
    if len(pivots) < 2:
        raise UnderdeterminedWitness("joint system has a nontrivial kernel")
    xi = [None, None]
    for i, col in enumerate(pivots):
        xi[col] = aug[i][2]
    return tuple(xi)


# -- the Gamma_1(N) family -------------------------------------------------

def gamma1_cocycle(N, g):
    """The cocycle ((1 - g11)/N, -g21/N) on Gamma_1(N); divisions are exact."""
    kind = CongruenceKind("gamma1", N)
    if not congruence_membership(kind, g):
        raise PreconditionError(f"matrix is not in Gamma_1({N})")
    return ((1 - g[0, 0]) // N, -g[1, 0] // N)


def gamma1_obstruction(N, s):
    """Whether xi - s xi lies in Z^2 for xi = (1/N, 0).

    Integrality holds exactly for members of Gamma_1(N), which is the
    non-extendability obstruction for the family.
    """
    if (s.rows, s.cols) != (2, 2) or not s.is_integral() or s.det() != 1:
        raise PreconditionError("expected an element of SL2(Z)")
    xi = (Fraction(1, N), Fraction(0))
    return vec_is_integral(vec_sub(xi, s.apply(xi)))


# -- cocycles with -I in the domain ----------------------------------------

def central_cocycle(m, n, g):
    """(I - g)(m, n)/2 when all components are even, else None.

    This is the unique candidate value at g for a cocycle taking (m, n)
    at the central element -I.
    """
    if (g.rows, g.cols) != (2, 2) or not g.is_integral() or g.det() != 1:
        raise PreconditionError("expected an element of SL2(Z)")
    w = (Matrix.identity(2) - g).apply((m, n))
    if w[0] % 2 or w[1] % 2:
        return None
    return (w[0] // 2, w[1] // 2)


@dataclass(frozen=True)
class ParityCase:
    """One of the four parity classes of the central value (m, n)."""

    case_id: int
    description: str

    def accepts(self, g):
        if self.case_id == 1:
            return True
        if self.case_id == 2:
            return g[0, 0] % 2 == 1 and g[1, 0] % 2 == 0
        if self.case_id == 3:
            return g[1, 1] % 2 == 1 and g[0, 1] % 2 == 0
        return (g[0, 0] + g[0, 1]) % 2 == 1 and (g[1, 0] + g[1, 1]) % 2 == 1


_PARITY_CASES = {
    (0, 0): ParityCase(1, "coboundary; all of SL2(Z)"),
    (1, 0): ParityCase(2, "g11 odd and g21 even"),
    (0, 1): ParityCase(3, "g22 odd and g12 even"),
    (1, 1): ParityCase(4, "g11+g12 odd and g21+g22 odd"),
}


def parity_domain(m, n):
    """Maximal domain of a cocycle with central value (m, n), by parity."""
    return _PARITY_CASES[(m % 2, n % 2)]


# -- the infinite-rank free family -----------------------------------------

A_GEN = Matrix([[1, 2], [0, 1]])
B_GEN = Matrix([[1, 0], [2, 1]])


def finf_generator(k):
    """The conjugate b^k a b^-k = [[1-4k, 2], [-8k^2, 1+4k]]."""
    return Matrix([[1 - 4 * k, 2], [-8 * k * k, 1 + 4 * k]])


def finf_extend(n, values, window):
    """Extension of a free-family cocycle by the shift b^n, over a window.

    `values` maps k to (x_k, y_k).  Returns u = c(b^n) in Z^2 satisfying
        (x_{k+n}, y_{k+n}) = b^n (x_k, y_k) + (I - g_{k+n}) u
    for every k with both k and k+n in the window, or None when the joint
    integer system is unsolvable.  Checking all in-window relations is
    strictly stronger than the single necessary relation and still sound.
    """
    if n == 0:
        raise PreconditionError("n must be nonzero")
    window = sorted(set(window))
    if 0 not in window:
        raise PreconditionError("window must contain 0")
    for k in window:
        if k not in values:
            raise PreconditionError(f"window index {k} missing from values")
    bn = B_GEN ** n
    ident = Matrix.identity(2)
    rows, rhs = [], []
    for k in window:
        if k + n not in values or k + n not in window:
            continue
        m = ident - finf_generator(k + n)
        target = vec_sub(values[k + n], bn.apply(values[k]))
        rows.extend([[m[i, 0], m[i, 1]] for i in range(2)])
        rhs.extend(target)
    if not rows:
        raise PreconditionError("window instantiates no relation")
    sol = solve_integer(Matrix(rows), tuple(rhs))
    return None if sol is None else tuple(sol)
