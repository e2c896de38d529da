"""Unit tests for the affine semidirect products Z^n x| SL_n(Z)."""

import pytest

from exactgroups.affine import (AffineElement, ClassificationReport,
                                CyclicLinear, FullLatticeSemidirect,
                                GraphSubgroup, affine_automorphism,
                                classify_subgroup, conj_class_ball, fc_witness,
                                icc_affine_cyclic, invariant_lattice)
from exactgroups.cocycle import CocycleSpec, finf_generator, gamma1_cocycle
from exactgroups.lattice import hnf
from exactgroups.matrix import Matrix, PreconditionError, ShapeError
from exactgroups.sl2 import S, T
from tests.conftest import (SL3_ELEMENTARIES, random_sl2, random_unimodular,
                            seeded)


# -- group arithmetic ------------------------------------------------------

def test_affine_group_laws():
    rng = seeded(1)
    e = AffineElement.identity(2)
    for _ in range(60):
        x = AffineElement((rng.int_in(-5, 5), rng.int_in(-5, 5)), random_sl2(rng, 5))
        y = AffineElement((rng.int_in(-5, 5), rng.int_in(-5, 5)), random_sl2(rng, 5))
        z = AffineElement((rng.int_in(-5, 5), rng.int_in(-5, 5)), random_sl2(rng, 5))
        assert (x * y) * z == x * (y * z)
        assert x * e == x and e * x == x
        assert x * x.inverse() == e
        assert x.conjugate(e) == e


def test_affine_multiplication_law_explicit():
    x = AffineElement((1, 2), T)
    y = AffineElement((0, 3), S)
    assert (x * y).translation == (1 + 3, 2 + 3)   # (1,2) + T (0,3)
    assert (x * y).linear == T * S


def test_affine_shape_errors():
    with pytest.raises(ShapeError):
        AffineElement((1, 2, 3), T)
    with pytest.raises(ShapeError):
        AffineElement((1, 2), T) * AffineElement.identity(3)


# -- ICC analysis ----------------------------------------------------------

def test_fc_witness_examples():
    assert fc_witness(T) == ((1, 0), 1)
    assert fc_witness(-T) == ((1, 0), -1)
    assert fc_witness(Matrix([[2, 1], [1, 1]])) is None
    v, sign = fc_witness(Matrix([[1, 0], [4, 1]]))
    assert v == (0, 1) and sign == 1


def test_icc_examples():
    assert icc_affine_cyclic(Matrix([[2, 1], [1, 1]]))
    assert not icc_affine_cyclic(T)
    with pytest.raises(PreconditionError):
        icc_affine_cyclic(S)  # finite order


def test_conj_class_ball_basics():
    g = Matrix([[2, 1], [1, 1]])
    gens = [AffineElement((0, 0), g), AffineElement((0, 0), -Matrix.identity(2))]
    x = AffineElement((1, 0), Matrix.identity(2))
    counts = [conj_class_ball(x, gens, r) for r in range(5)]
    assert counts[0] == 1
    assert all(a < b for a, b in zip(counts, counts[1:]))
    central = AffineElement((0, 0), Matrix.identity(2))
    assert conj_class_ball(central, gens, 4) == 1
    with pytest.raises(PreconditionError):
        conj_class_ball(x, gens, -1)


# -- invariant lattices ----------------------------------------------------

def test_invariant_lattice_full_rank():
    basis, index = invariant_lattice([S, T], [(2, 0)])
    assert basis.rows == ((2, 0), (0, 2)) and index == 4
    basis, index = invariant_lattice(list(SL3_ELEMENTARIES), [(2, 0, 0)])
    assert index == 8 and basis.rows == ((2, 0, 0), (0, 2, 0), (0, 0, 2))


def test_invariant_lattice_zero_seed():
    basis, index = invariant_lattice([S, T], [(0, 0)])
    assert basis.is_zero and index is None


def test_invariant_lattice_single_parabolic():
    # T-orbit closure of (0,1): adds (1,0), yielding all of Z^2.
    basis, index = invariant_lattice([T], [(0, 1)])
    assert index == 1
    # but (1,0) is fixed by T: the closure is rank 1, no index.
    basis, index = invariant_lattice([T], [(1, 0)])
    assert basis.rows == ((1, 0),) and index is None


def test_invariant_lattice_errors():
    with pytest.raises(PreconditionError):
        invariant_lattice([], [(1, 0)])
    with pytest.raises(PreconditionError):
        invariant_lattice([Matrix([[1, 0], [0, 2]]).inverse()], [(1, 0)])


# -- automorphisms ---------------------------------------------------------

def test_affine_automorphism_homomorphism():
    rng = seeded(8)
    for n in (2, 3):
        for _ in range(10):
            L = random_unimodular(rng, n)
            xi = tuple(rng.int_in(-4, 4) for _ in range(n))
            phi = affine_automorphism(L, xi)
            for _ in range(20):
                x = AffineElement(tuple(rng.int_in(-3, 3) for _ in range(n)),
                                  random_unimodular(rng, n, length=4))
                y = AffineElement(tuple(rng.int_in(-3, 3) for _ in range(n)),
                                  random_unimodular(rng, n, length=4))
                assert phi(x * y) == phi(x) * phi(y)
            # identity goes to identity; inverse to inverse
            e = AffineElement.identity(n)
            assert phi(e) == e
            x = AffineElement((1,) * n, Matrix.identity(n))
            assert phi(x.inverse()) == phi(x).inverse()


def test_affine_automorphism_rejects_non_unimodular():
    with pytest.raises(PreconditionError):
        affine_automorphism(Matrix([[2, 0], [0, 1]]), (0, 0))


# -- classification reports ------------------------------------------------

def test_classify_full_lattice_case1():
    basis = hnf([(2, 0), (0, 2)])
    report = classify_subgroup(FullLatticeSemidirect(basis, (S, T)))
    assert isinstance(report, ClassificationReport)
    assert report.case == "case1"
    assert report.verdict("lattice-invariance") == "pass"
    assert report.verdict("missing-check") is None


def test_classify_full_lattice_not_invariant():
    basis = hnf([(2, 1), (0, 3)])  # not SL2(Z)-invariant
    with pytest.raises(PreconditionError):
        classify_subgroup(FullLatticeSemidirect(basis, (S, T)))


def test_classify_cyclic_linear():
    report = classify_subgroup(CyclicLinear(Matrix([[2, 1], [1, 1]])))
    assert report.case == "case1"
    assert report.verdict("icc") == "pass"
    assert report.verdict("amenable-linear-part") == "pass"
    parab = classify_subgroup(CyclicLinear(T))
    assert parab.verdict("icc") == "fail"
    torsion = classify_subgroup(CyclicLinear(S))
    assert torsion.verdict("icc") == "unknown"


def test_classify_graph_gamma1():
    N = 2
    gens = (Matrix([[1, 1], [0, 1]]), Matrix([[1, 0], [N, 1]]))
    values = tuple(gamma1_cocycle(N, g) for g in gens)
    report = classify_subgroup(GraphSubgroup(CocycleSpec(gens, values)))
    assert report.case == "case2"
    assert report.verdict("gamma1-obstruction") == "pass"


def test_classify_graph_finf():
    gens = tuple(finf_generator(k) for k in range(-3, 4))
    values = tuple((0, 0) if k == 0 else (1, 1) for k in range(-3, 4))
    report = classify_subgroup(GraphSubgroup(CocycleSpec(gens, values)))
    assert report.case == "case2"
    assert report.verdict("finf-obstruction") == "pass"


def test_classify_graph_unrecognized():
    spec = CocycleSpec((Matrix([[1, 1], [1, 2]]),), ((0, 0),))
    report = classify_subgroup(GraphSubgroup(spec))
    assert report.case == "case2"
    assert report.verdict("known-obstruction") == "unknown"


def test_classify_unknown_descriptor():
    with pytest.raises(PreconditionError):
        classify_subgroup(object())
