"""The affine groups Z^n x| SL_n(Z): arithmetic, ICC analysis, conjugacy-class
growth oracle, invariant-lattice closure, the unimodular-twist automorphism,
and a classification report for canonical subgroup descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import cocycle as _cocycle
from .lattice import LatticeBasis, content, fixed_sublattice, hnf
from .matrix import Matrix, PreconditionError, ShapeError, vec_add, vec_sub
from .sl2 import classify_sl2, order_of


@dataclass(frozen=True)
class AffineElement:
    """Pair (a, g): translation a in Z^n and linear part g in SL_n(Z).

    Multiplication law: (a, g)(b, h) = (a + g b, g h).
    """

    translation: tuple
    linear: Matrix

    def __post_init__(self):
        if len(self.translation) != self.linear.rows or self.linear.rows != self.linear.cols:
            raise ShapeError("translation and linear part dimensions disagree")

    @staticmethod
    def identity(n):
        return AffineElement((0,) * n, Matrix.identity(n))

    @staticmethod
    def of(a, g):
        return AffineElement(tuple(a), g)

    def __mul__(self, other):
        if self.linear.rows != other.linear.rows:
            raise ShapeError("dimension mismatch")
        return AffineElement(vec_add(self.translation, self.linear.apply(other.translation)),
                             self.linear * other.linear)

    def inverse(self):
        g_inv = self.linear.inverse()
        return AffineElement(tuple(-x for x in g_inv.apply(self.translation)), g_inv)

    def conjugate(self, other):
        """self * other * self^-1."""
        return self * other * self.inverse()


# -- ICC analysis ----------------------------------------------------------

def fc_witness(g):
    """A primitive v with g v = sign * v, or None when no +-1 eigenvector exists.

    Such a v generates a finite conjugacy class of (v, e) in Z^2 x| <g, -I>.
    """
    for sign in (1, -1):
        basis = fixed_sublattice(g, sign)
        if not basis.is_zero:
            v = basis.rows[0]
            d = content(v)
            return tuple(x // d for x in v), sign
    return None


def icc_affine_cyclic(g):
    """Whether Z^2 x| <g, -I> is ICC, for g of infinite order.

    Equivalent characterizations (all checked to agree by the test suite):
    no +-1 eigenvector in Z^2, and |tr(g)| > 2.
    """
    k = order_of(g)
    if k is not None:
        raise PreconditionError(f"g has finite order {k}")
    return fc_witness(g) is None


def conj_class_ball(x, gens, radius):
    """Number of distinct conjugates w x w^-1 for words w of length <= radius.

    Breadth-first closure over the group generated by `gens` and inverses,
    with exact equality for deduplication.
    """
    if radius < 0:
        raise PreconditionError("radius must be >= 0")
    alphabet = []
    for g in gens:
        alphabet.append(g)
        alphabet.append(g.inverse())
    seen_words = {AffineElement.identity(len(x.translation))}
    frontier = list(seen_words)
    conjugates = {w.conjugate(x) for w in frontier}
    for _ in range(radius):
        new_frontier = []
        for w in frontier:
            for g in alphabet:
                nw = g * w
                if nw not in seen_words:
                    seen_words.add(nw)
                    new_frontier.append(nw)
                    conjugates.add(nw.conjugate(x))
        frontier = new_frontier
        if not frontier:
            break
    return len(conjugates)


# -- invariant lattices ----------------------------------------------------

def invariant_lattice(gens, seeds):
    """Smallest sublattice containing the seeds and invariant under all
    generators and their inverses.

    Worklist closure interleaved with HNF reduction; returns (basis, index)
    where index is None when the closure is not of full rank.
    """
    if not gens:
        raise PreconditionError("at least one generator required")
    n = gens[0].rows
    for g in gens:
        if (g.rows, g.cols) != (n, n) or not g.is_integral():
            raise PreconditionError("generators must be square integer matrices of one size")
    mats = []
    for g in gens:
        mats.append(g)
        mats.append(g.inverse())
    basis = hnf([tuple(s) for s in seeds], dim=n)
    while True:
        images = [g.apply(row) for g in mats for row in basis.rows]
        new_basis = hnf(list(basis.rows) + images, dim=n)
        if new_basis == basis:
            return basis, basis.index()
        basis = new_basis


# -- automorphisms ---------------------------------------------------------

def affine_automorphism(L, xi):
    """The automorphism (a, s) -> (L a + xi - (L s L^-1) xi, L s L^-1).

    L must be unimodular; xi is an integer vector.  The returned map is a
    bijective homomorphism (property-tested in the suite).
    """
    if L.det() not in (1, -1):
        raise PreconditionError("L must have determinant +-1")
    L_inv = L.inverse()
    xi = tuple(xi)

    def phi(el):
        s_conj = L * el.linear * L_inv
        a = vec_add(L.apply(el.translation), vec_sub(xi, s_conj.apply(xi)))
        return AffineElement(a, s_conj)

    return phi


# -- subgroup descriptors and classification -------------------------------

@dataclass(frozen=True)
class FullLatticeSemidirect:
    """H = B x| <gens>: a sublattice B of Z^n with linear generators."""

    lattice: LatticeBasis
    linear_gens: tuple


@dataclass(frozen=True)
class GraphSubgroup:
    """H = {(c(g), g)}: the graph of a cocycle given by a CocycleSpec."""

    spec: object


@dataclass(frozen=True)
class CyclicLinear:
    """H = Z^2 x| <g> (optionally with -I adjoined)."""

    g: Matrix
    with_minus_identity: bool = True


@dataclass(frozen=True)
class Check:
    name: str
    verdict: str   # "pass" | "fail" | "unknown"
    evidence: dict


@dataclass(frozen=True)
class ClassificationReport:
    case: str      # "case1" | "case2" | "unknown"
    checks: tuple

    def verdict(self, name):
        for c in self.checks:
            if c.name == name:
                return c.verdict
        return None


def _lattice_invariant(basis, g):
    return all(basis.contains(g.apply(row)) for row in basis.rows)


def _detect_gamma1_level(spec):
    """Largest N >= 2 such that the spec is the Gamma_1(N) family cocycle."""
    N = 0
    for g in spec.generators:
        N = gcd(N, g[1, 0])
        N = gcd(N, g[0, 0] - 1)
        N = gcd(N, g[1, 1] - 1)
    N = abs(N)
    if N < 2:
        return None
    for g, v in zip(spec.generators, spec.values):
        if tuple(v) != _cocycle.gamma1_cocycle(N, g):
            return None
    return N


def classify_subgroup(descriptor):
    """Evidence report for a canonical subgroup descriptor.

    Maximality itself is never asserted; the report lists reproducible
    obstruction evidence only.
    """
    checks = []
    if isinstance(descriptor, FullLatticeSemidirect):
        basis = descriptor.lattice
        bad = [i for i, g in enumerate(descriptor.linear_gens)
               if not _lattice_invariant(basis, g)]
        checks.append(Check("lattice-invariance",
                            "fail" if bad else "pass",
                            {"violating_generators": bad,
                             "index": basis.index()}))
        if bad:
            raise PreconditionError("lattice is not invariant under the generators")
        if len(descriptor.linear_gens) == 1:
            checks.extend(_cyclic_checks(descriptor.linear_gens[0]))
        else:
            checks.append(Check("amenable-linear-part", *_finite_closure_check(
                descriptor.linear_gens)))
        return ClassificationReport("case1", tuple(checks))

    if isinstance(descriptor, CyclicLinear):
        checks.extend(_cyclic_checks(descriptor.g))
        return ClassificationReport("case1", tuple(checks))

    if isinstance(descriptor, GraphSubgroup):
        spec = descriptor.spec
        if spec.relators:
            ok = _cocycle.verify_relations(spec)
            checks.append(Check("relators", "pass" if ok else "fail",
                                {"count": len(spec.relators)}))
        else:
            checks.append(Check("relators", "unknown", {"count": 0}))
        level = _detect_gamma1_level(spec)
        if level is not None:
            witness = _cocycle.coboundary_witness(spec)
            obstructed = witness is not None and not witness.integral
            checks.append(Check("gamma1-obstruction",
                                "pass" if obstructed else "fail",
                                {"level": level,
                                 "xi": None if witness is None else witness.xi}))
        elif _is_finf_family(spec):
            absent = all(
                _finf_window_extension(spec, n) is None
                for n in (1, -1, 2, -2))
            checks.append(Check("finf-obstruction",
                                "pass" if absent else "fail",
                                {"shifts_checked": [1, -1, 2, -2]}))
        else:
            checks.append(Check("known-obstruction", "unknown", {}))
        return ClassificationReport("case2", tuple(checks))

    raise PreconditionError(f"unknown descriptor type {type(descriptor)!r}")


def _cyclic_checks(g):
    checks = []
    cls = classify_sl2(g)
    checks.append(Check("linear-part-class", "pass",
                        {"kind": cls.kind, "order": cls.order, "sign": cls.sign}))
    if cls.kind == "elliptic":
        checks.append(Check("icc", "unknown", {"reason": "finite order"}))
    else:
        icc = icc_affine_cyclic(g)
        checks.append(Check("icc", "pass" if icc else "fail",
                            {"trace": g.trace()}))
    # A single generator (with -I) is virtually cyclic, hence amenable.
    checks.append(Check("amenable-linear-part", "pass", {"form": "virtually cyclic"}))
    return checks


def _finite_closure_check(gens, cap=24):
    """("pass", evidence) when the generated linear group closes finitely."""
    seen = {Matrix.identity(gens[0].rows)}
    frontier = list(seen)
    alphabet = [g for g in gens] + [g.inverse() for g in gens]
    while frontier:
        if len(seen) > cap:
            return "unknown", {"reason": f"no closure within cap {cap}"}
        new = []
        for m in frontier:
            for g in alphabet:
                nm = m * g
                if nm not in seen:
                    seen.add(nm)
                    new.append(nm)
        frontier = new
    return "pass", {"order": len(seen)}


def _is_finf_family(spec):
    ks = []
    for g in spec.generators:
        if g[0, 1] != 2:
            return False
        k, rem = divmod(1 - g[0, 0], 4)
        if rem != 0 or g != _cocycle.finf_generator(k):
            return False
        ks.append(k)
    return bool(ks) and 0 in ks


def _finf_window_extension(spec, n):
    values = {}
    for g, v in zip(spec.generators, spec.values):
        k = (1 - g[0, 0]) // 4
        values[k] = tuple(v)
    window = sorted(values)
    if not any(k + n in values for k in values):
        return (0, 0)  # no relation instantiable: nothing obstructs
    return _cocycle.finf_extend(n, values, window)
