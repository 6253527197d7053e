"""Involutions of pairs that keep each component in place.

An involution is a pair of matrices (S+, S-) with S^2 = 1 and
<x y z>* = <z* y* x*>.  It extends to the standard imbedding as an
anti-automorphism exchanging e1 and e2, and acts on the centroid by
T -> S T S; the fixed points form the *-centroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebra import CheckResult, StructureAlgebra, AlgebraIdeal, center, is_field_algebra, subalgebra
from .centroid import (
    CentroidElement,
    CentroidRing,
    ClosureCommutation,
    centroid_pair,
    compare_closure_with_imbedding,
    extend_to_imbedding as extend_centroid_element,
    restrict_to_pair,
    scalar_extension,
)
from .errors import InvariantViolation, PreconditionError, UnsupportedError
from .imbedding import Imbedding, build_standard_imbedding, is_semiprime, require_semiprime
from .linalg import Subspace, identity, kernel, mat_mul, mat_sub, mat_vec
from .pair import MINUS, PLUS, SIGNS, AssocPair, PairElement, PairIdeal, annihilator, ideal_generate
from .polys import minimal_polynomial


@dataclass(frozen=True)
class Involution:
    star_plus: tuple
    star_minus: tuple

    def matrix(self, sign: int) -> tuple:
        return self.star_plus if sign == PLUS else self.star_minus

    def apply(self, sign: int, v) -> tuple:
        m = self.matrix(sign)
        out = []
        for row in m:
            acc = row[0] - row[0]
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def apply_element(self, x: PairElement) -> PairElement:
        return PairElement(x.sign, self.apply(x.sign, x.coords))

    @classmethod
    def identity(cls, A: AssocPair) -> "Involution":
        return cls(identity(A.dim_plus, A.field), identity(A.dim_minus, A.field))


def check_involution(A: AssocPair, inv: Involution) -> CheckResult:
    """Both axioms on basis tuples; witness ("order", s, i) or ("reversal", s, (i, j, k))."""
    f = A.field
    for s in SIGNS:
        m = inv.matrix(s)
        n = A.dim(s)
        if len(m) != n or any(len(r) != n for r in m):
            return CheckResult(False, ("shape", s))
        sq = mat_mul(m, m, f)
        for i in range(n):
            col = tuple(sq[r][i] for r in range(n))
            if col != A.basis_vector(s, i):
                return CheckResult(False, ("order", s, i))
    star = {s: [inv.apply(s, A.basis_vector(s, i)) for i in range(A.dim(s))] for s in SIGNS}
    for s in SIGNS:
        for i in range(A.dim(s)):
            for j in range(A.dim(-s)):
                for k in range(A.dim(s)):
                    lhs = inv.apply(s, A.triple(s, A.basis_vector(s, i), A.basis_vector(-s, j), A.basis_vector(s, k)))
                    rhs = A.triple(s, star[s][k], star[-s][j], star[s][i])
                    if lhs != rhs:
                        return CheckResult(False, ("reversal", s, (i, j, k)))
    return CheckResult(True, None)


def require_involution(A: AssocPair, inv: Involution):
    res = check_involution(A, inv)
    if not res.ok:
        raise PreconditionError(f"not an involution of this pair: {res.witness}")


# --- the imbedding ----------------------------------------------------------

class AlgebraInvolution(NamedTuple):
    matrix: tuple    # columns are images of basis vectors

    def apply(self, v, field) -> tuple:
        return mat_vec(self.matrix, v, field)


def check_algebra_involution(E: StructureAlgebra, J: AlgebraInvolution) -> CheckResult:
    """J linear with J^2 = 1 and J(uv) = J(v)J(u) on all basis pairs."""
    f = E.field
    images = [J.apply(E.basis_vector(i), f) for i in range(E.dim)]
    for i in range(E.dim):
        if J.apply(images[i], f) != E.basis_vector(i):
            return CheckResult(False, ("order", i))
    for i in range(E.dim):
        for j in range(E.dim):
            lhs = J.apply(E.mul(E.basis_vector(i), E.basis_vector(j)), f)
            if lhs != E.mul(images[j], images[i]):
                return CheckResult(False, ("reversal", i, j))
    return CheckResult(True, None)


def extend_to_imbedding(emb: Imbedding, inv: Involution) -> AlgebraInvolution:
    """The unique involution of E extending inv with e1* = e2."""
    A, E = emb.pair, emb.algebra
    f = A.field
    require_involution(A, inv)
    xs = [emb.embed(PairElement(PLUS, inv.apply(PLUS, A.basis_vector(PLUS, i)))) for i in range(A.dim_plus)]
    ys = [emb.embed(PairElement(MINUS, inv.apply(MINUS, A.basis_vector(MINUS, j)))) for j in range(A.dim_minus)]

    def corner_image(corner, v):
        c0, terms = emb.corner_expression(corner, emb.block(v, 11 if corner == 1 else 22))
        out = tuple(c0 * a for a in (emb.e2 if corner == 1 else emb.e1))
        for (i, j), c in terms.items():
            p = E.mul(ys[j], xs[i]) if corner == 1 else E.mul(xs[i], ys[j])
            out = tuple(a + c * b for a, b in zip(out, p))
        return out

    cols = []
    for idx in range(E.dim):
        v = E.basis_vector(idx)
        if idx < emb.offset[PLUS]:
            cols.append(corner_image(1, v))
        elif idx < emb.offset[MINUS]:
            cols.append(xs[idx - emb.offset[PLUS]])
        elif idx < emb.offset[22]:
            cols.append(ys[idx - emb.offset[MINUS]])
        else:
            cols.append(corner_image(2, v))
    J = AlgebraInvolution(tuple(tuple(c[r] for c in cols) for r in range(E.dim)))
    # well-definedness: every generator product goes where the formula says
    bx = [emb.embed(PairElement.basis(A, PLUS, i)) for i in range(A.dim_plus)]
    by = [emb.embed(PairElement.basis(A, MINUS, j)) for j in range(A.dim_minus)]
    for i in range(A.dim_plus):
        for j in range(A.dim_minus):
            if J.apply(E.mul(bx[i], by[j]), f) != E.mul(ys[j], xs[i]):
                raise InvariantViolation("extension is not well defined on E11", (i, j))
            if J.apply(E.mul(by[j], bx[i]), f) != E.mul(xs[i], ys[j]):
                raise InvariantViolation("extension is not well defined on E22", (i, j))
    if J.apply(emb.e1, f) != emb.e2:
        raise InvariantViolation("extension does not exchange the idempotents")
    res = check_algebra_involution(E, J)
    if not res.ok:
        raise InvariantViolation("extension is not an involution", res.witness)
    return J


# --- *-ideals ----------------------------------------------------------------

def star_image(A: AssocPair, inv: Involution, I: PairIdeal) -> PairIdeal:
    comps = {s: Subspace.span(A.field, A.dim(s), [inv.apply(s, v) for v in I.component(s).basis]) for s in SIGNS}
    return PairIdeal(A, comps[PLUS], comps[MINUS])


def is_star_ideal(A: AssocPair, inv: Involution, I: PairIdeal) -> bool:
    return star_image(A, inv, I) == I


def star_ideal_generate(A: AssocPair, inv: Involution, seeds) -> PairIdeal:
    seeds = list(seeds)
    return ideal_generate(A, seeds + [inv.apply_element(x) for x in seeds])


def is_star_invariant(E: StructureAlgebra, J: AlgebraInvolution, I: AlgebraIdeal) -> bool:
    return all(I.contains(J.apply(v, E.field)) for v in I.space.basis)


# --- the *-centroid ----------------------------------------------------------

class StarCentroid(NamedTuple):
    ring: CentroidRing
    star_matrix: tuple       # induced involution on C in ring coordinates (columns)
    fixed: Subspace          # symmetric elements, in ring coordinates
    algebra: StructureAlgebra
    is_field: Optional[bool]

    @property
    def dim(self) -> int:
        return self.fixed.dim

    def elements(self) -> list:
        return [self.ring.element(v) for v in self.fixed.basis]


def induced_star(inv: Involution, T: CentroidElement, field) -> CentroidElement:
    """T*(y) = (T(y*))*."""
    return CentroidElement(
        mat_mul(inv.star_plus, mat_mul(T.t_plus, inv.star_plus, field), field),
        mat_mul(inv.star_minus, mat_mul(T.t_minus, inv.star_minus, field), field),
    )


def star_centroid(A: AssocPair, inv: Involution) -> StarCentroid:
    require_semiprime(A, "*-centroid")
    require_involution(A, inv)
    f = A.field
    C = centroid_pair(A)
    cols = []
    for T in C.basis:
        Ts = induced_star(inv, T, f)
        if not C.contains(Ts):
            raise InvariantViolation("induced involution leaves the centroid")
        cols.append(C.coordinates(Ts))
    n = C.dim
    M = tuple(tuple(c[r] for c in cols) for r in range(n))
    # ring involution: fixes 1 and is multiplicative (C is commutative)
    S = C.structure
    if mat_vec(M, S.unit, f) != tuple(S.unit):
        raise InvariantViolation("induced involution moves the identity")
    for i in range(n):
        for j in range(n):
            lhs = mat_vec(M, S.mul(S.basis_vector(i), S.basis_vector(j)), f)
            if lhs != S.mul(cols[i], cols[j]):
                raise InvariantViolation("induced involution is not multiplicative", (i, j))
    fixed = kernel(mat_sub(M, identity(n, f)), f, n) if n else Subspace.zero(f, 0)
    alg = subalgebra(S, fixed)
    return StarCentroid(C, M, fixed, alg, is_field_algebra(alg))


def decomposition_witness(A: AssocPair, inv: Involution) -> Optional[tuple]:
    """Nonzero *-ideals (I, ann I) from basis-orbit seeds, if any."""
    for s in SIGNS:
        for i in range(A.dim(s)):
            I = star_ideal_generate(A, inv, [PairElement.basis(A, s, i)])
            J = annihilator(A, I)
            if not J.is_zero():
                return I, J
    return None


def is_star_prime(A: AssocPair, inv: Involution) -> bool:
    """Semiprime and the symmetric centroid is a field.

    In finite dimension a semiprime pair is a direct sum of simple ideals
    whose centroids are fields; the involution permutes them, and the
    symmetric centroid is a field exactly when there is a single orbit.
    Basis-orbit seeds are searched for a decomposition as a cross-check.
    """
    require_involution(A, inv)
    if not is_semiprime(A):
        return False
    sc = star_centroid(A, inv)
    if sc.is_field is None:
        raise UnsupportedError("could not decide whether the *-centroid is a field")
    if sc.is_field and decomposition_witness(A, inv) is not None:
        raise InvariantViolation("*-ideal with nonzero annihilator in a *-prime pair")
    return sc.is_field


# --- C_*(A) versus C_*(E) ----------------------------------------------------

class StarIsoReport(NamedTuple):
    ok: bool
    pair_dim: int
    algebra_dim: int
    closure: Optional[ClosureCommutation]
    failures: tuple


def star_center(E: StructureAlgebra, J: AlgebraInvolution) -> Subspace:
    """Symmetric central elements, as a subspace of E."""
    f = E.field
    Z = center(E)
    cols = [tuple(a - b for a, b in zip(J.apply(z, f), z)) for z in Z.basis]
    if not cols:
        return Subspace.zero(f, E.dim)
    M = tuple(tuple(c[r] for c in cols) for r in range(E.dim))
    K = kernel(M, f, len(cols))
    return Subspace.span(f, E.dim, [Z.from_coordinates(v) for v in K.basis])


def verify_star_isos(A: AssocPair, inv: Involution) -> StarIsoReport:
    require_semiprime(A, "*-centroid isomorphism")
    f = A.field
    sc = star_centroid(A, inv)
    emb = build_standard_imbedding(A)
    E = emb.algebra
    J = extend_to_imbedding(emb, inv)
    ZS = star_center(E, J)
    failures = []
    images = []
    for k, T in enumerate(sc.elements()):
        z = extend_centroid_element(emb, T)
        images.append(z)
        if not ZS.contains(z):
            failures.append(("phi leaves the *-center", k))
    for k, T in enumerate(sc.ring.basis):
        # Phi intertwines the two involutions
        lhs = extend_centroid_element(emb, induced_star(inv, T, f))
        if lhs != J.apply(extend_centroid_element(emb, T), f):
            failures.append(("phi does not commute with *", k))
    for k, z in enumerate(ZS.basis):
        T = restrict_to_pair(emb, z)
        if not sc.ring.contains(T) or not sc.fixed.contains(sc.ring.coordinates(T)):
            failures.append(("psi leaves the *-centroid", k))
    if sc.dim != ZS.dim:
        failures.append(("dimension mismatch", sc.dim, ZS.dim))
    elif images and Subspace.span(f, E.dim, images).dim != sc.dim:
        failures.append(("phi not injective",))
    closure = None
    if not failures and sc.is_field:
        x = primitive_symmetric(sc)
        theta = sc.ring.element(sc.fixed.from_coordinates(x))
        m = minimal_polynomial(sc.algebra.left_matrix(x), f)
        closure = compare_closure_with_imbedding(scalar_extension(A, theta, m))
        if not closure.ok:
            failures.append(("*-closure does not commute with the imbedding",) + closure.failures)
    return StarIsoReport(not failures, sc.dim, ZS.dim, closure, tuple(failures))


def primitive_symmetric(sc: StarCentroid) -> tuple:
    from .algebra import primitive_element

    x, _ = primitive_element(sc.algebra)
    if x is None:
        raise UnsupportedError("no primitive element for the *-centroid")
    return x
