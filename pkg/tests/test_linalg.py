"""Unit tests for exact matrices, HNF/SNF, and integer solving."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactgroups.lattice import (LatticeBasis, content, fixed_sublattice, hnf,
                                 kernel_basis, snf, solve_integer)
from exactgroups.matrix import Matrix, PreconditionError, ShapeError
from tests.conftest import random_unimodular, seeded


# -- Matrix basics ---------------------------------------------------------

def test_matrix_arithmetic_and_normalization():
    m = Matrix([[Fraction(2, 1), 1], [0, Fraction(1, 2)]])
    assert isinstance(m[0, 0], int)           # 2/1 canonicalized to int
    assert m.trace() == Fraction(5, 2)
    assert (m * m.inverse()) == Matrix.identity(2)
    assert m.apply((2, 2)) == (6, 1)
    assert (-m)[0, 0] == -2
    assert (m + m - m) == m
    assert m.transpose().transpose() == m


def test_matrix_pow_and_det():
    t = Matrix([[1, 1], [0, 1]])
    assert t ** 5 == Matrix([[1, 5], [0, 1]])
    assert t ** -3 == Matrix([[1, -3], [0, 1]])
    assert t ** 0 == Matrix.identity(2)
    m4 = Matrix([[1, 2, 0, 1], [0, 1, 3, 0], [2, 0, 1, 1], [1, 1, 1, 1]])
    # 4x4 determinant goes through the elimination path; check by expansion
    # against the cofactor formula on a transposed copy (det is invariant).
    assert m4.det() == m4.transpose().det()
    assert (m4 * m4.inverse()) == Matrix.identity(4)


def test_matrix_errors():
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])
    with pytest.raises(PreconditionError):
        Matrix([[1, 1], [1, 1]]).inverse()
    with pytest.raises(TypeError):
        Matrix([[1.5]])


def test_matrix_hashable_immutable():
    m = Matrix([[1, 2], [3, 4]])
    assert m in {m}
    with pytest.raises(AttributeError):
        m.rows = 3


# -- HNF -------------------------------------------------------------------

def test_hnf_pinned_example():
    basis = hnf([(2, 0), (1, 1)])
    assert basis.rows == ((1, 1), (0, 2))
    assert basis.index() == 2


def test_hnf_zero_and_empty():
    assert hnf([], dim=3).rows == ()
    assert hnf([(0, 0, 0)]).rows == ()
    assert hnf([], dim=2).is_zero
    with pytest.raises(ShapeError):
        hnf([])
    with pytest.raises(ShapeError):
        hnf([(1, 0), (1, 0, 0)])


def test_hnf_shape_properties():
    rng = seeded(11)
    for _ in range(100):
        n = 2 + rng.below(3)
        rows = [tuple(rng.int_in(-9, 9) for _ in range(n))
                for _ in range(rng.below(4) + 1)]
        basis = hnf(rows)
        # echelon with positive pivots, reduced above
        last_piv = -1
        for row in basis.rows:
            j = next(k for k, x in enumerate(row) if x)
            assert j > last_piv
            assert row[j] > 0
            last_piv = j
        for i, row in enumerate(basis.rows):
            j = next(k for k, x in enumerate(row) if x)
            for i2 in range(i):
                assert 0 <= basis.rows[i2][j] < row[j]
        # every generator is a member
        for r in rows:
            assert basis.contains(r)


def test_hnf_canonical_under_regeneration():
    rng = seeded(5)
    for _ in range(60):
        n = 2 + rng.below(2)
        rows = [tuple(rng.int_in(-6, 6) for _ in range(n)) for _ in range(n)]
        basis = hnf(rows)
        # adding lattice members and integer row combinations cannot change it
        mixed = list(rows)
        for _ in range(4):
            i, j = rng.below(len(rows)), rng.below(len(rows))
            c = rng.int_in(-3, 3)
            mixed.append(tuple(a + c * b for a, b in zip(rows[i], rows[j])))
        assert hnf(mixed, dim=n) == basis


def test_contains_against_brute_force():
    basis = hnf([(2, 1), (0, 3)])
    # coefficients in [-4, 4] cover every lattice point of the [-6, 6] box
    members = {(2 * a, a + 3 * b) for a in range(-4, 5) for b in range(-4, 5)}
    for x in range(-6, 7):
        for y in range(-6, 7):
            assert basis.contains((x, y)) == ((x, y) in members)


def test_lattice_basis_accessors():
    basis = hnf([(2, 1), (0, 3)])
    assert basis.rank == 2 and not basis.is_zero
    assert basis.pivots() == [2, 3]
    assert basis.index() == 6
    low = hnf([(1, 2, 3)])
    assert low.index() is None
    with pytest.raises(ShapeError):
        basis.contains((1, 2, 3))


# -- SNF -------------------------------------------------------------------

def _check_snf(M):
    U, D, V = snf(M)
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert U.is_integral() and V.is_integral()
    assert U * M * V == D
    k = min(M.rows, M.cols)
    diag = [D[i, i] for i in range(k)]
    assert all(D[i, j] == 0 for i in range(M.rows) for j in range(M.cols) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    return diag


def test_snf_pinned_example():
    diag = _check_snf(Matrix([[4, -2], [8, -4]]))
    assert diag == [2, 0]


def test_snf_random_shapes():
    rng = seeded(21)
    for _ in range(120):
        r, c = 1 + rng.below(3), 1 + rng.below(3)
        _check_snf(Matrix([[rng.int_in(-20, 20) for _ in range(c)]
                           for _ in range(r)]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_snf_hypothesis(rows):
    _check_snf(Matrix(rows))


# -- integer solving -------------------------------------------------------

def test_solve_integer_pinned():
    M = Matrix([[4, -2], [8, -4]])
    assert solve_integer(M, (2, 4)) == (0, -1) or \
        M.apply(solve_integer(M, (2, 4))) == (2, 4)
    assert solve_integer(M, (1, 2)) is None   # needs a half-integer
    assert solve_integer(M, (2, 5)) is None   # inconsistent
    with pytest.raises(ShapeError):
        solve_integer(M, (1, 2, 3))


def test_solve_integer_roundtrip():
    rng = seeded(33)
    for _ in range(150):
        M = Matrix([[rng.int_in(-6, 6) for _ in range(3)] for _ in range(3)])
        x0 = tuple(rng.int_in(-4, 4) for _ in range(3))
        b = M.apply(x0)
        x = solve_integer(M, b)
        assert x is not None and M.apply(x) == b


def test_kernel_basis():
    M = Matrix([[1, 2, 3]])
    ker = kernel_basis(M)
    assert ker.rank == 2
    for row in ker.rows:
        assert M.apply(row) == (0,)
    assert kernel_basis(Matrix.identity(3)).is_zero
    # kernel members found by brute force are all contained
    M2 = Matrix([[2, 4], [1, 2]])
    ker2 = kernel_basis(M2)
    for x in range(-5, 6):
        for y in range(-5, 6):
            if M2.apply((x, y)) == (0, 0):
                assert ker2.contains((x, y))


def test_fixed_sublattice():
    t = Matrix([[1, 1], [0, 1]])
    plus = fixed_sublattice(t, 1)
    assert plus.rows == ((1, 0),)
    assert fixed_sublattice(t, -1).is_zero
    with pytest.raises(PreconditionError):
        fixed_sublattice(t, 2)
    with pytest.raises(ShapeError):
        fixed_sublattice(Matrix([[1, 0, 0], [0, 1, 0]]), 1)


def test_content():
    assert content((4, 6)) == 2
    assert content((0, 0, 0)) == 0
    assert content((-3, 0, 9)) == 3


def test_hnf_invariant_under_unimodular_mix():
    rng = seeded(44)
    for _ in range(40):
        n = 2 + rng.below(2)
        rows = [tuple(rng.int_in(-8, 8) for _ in range(n)) for _ in range(n)]
        basis = hnf(rows)
        u = random_unimodular(rng, len(rows))
        as_matrix = Matrix(rows)
        mixed = (u * as_matrix).data
        assert hnf(mixed, dim=n) == basis
