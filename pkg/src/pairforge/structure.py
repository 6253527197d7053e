"""Socle, rank and capacity, and the structure theorems as executable checks."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import isqrt
from typing import Optional

from .algebra import (
    CheckResult,
    StructureAlgebra,
    center,
    find_unit,
    is_simple_algebra,
    min_standard_degree,
    radical,
    regularity_profile,
)
from .errors import InvariantViolation, PreconditionError, UnsupportedError
from .imbedding import (
    build_standard_imbedding,
    is_prime,
    is_semiprime,
    pair_regularity,
    require_prime,
    require_semiprime,
)
from .linalg import Subspace, kernel_sparse, solve_linear
from .pair import (
    MINUS,
    PLUS,
    SIGNS,
    AssocPair,
    PairElement,
    PairIdeal,
    ideal_generate,
    local_algebra,
)


# --- modules -----------------------------------------------------------------

@dataclass(frozen=True)
class PairModuleRep:
    """Right module: actions[s][(i, j)] = m_i . b_j for m_i in M^s, b_j in A^-s, landing in M^-s.

    ``delta_dim`` is the dimension over the base field of the division ring
    of module endomorphisms, used to turn F-dimensions into ranks.
    """

    pair: AssocPair
    m_plus: int
    m_minus: int
    actions: dict = dc_field(hash=False)
    delta_dim: int = 1

    def mdim(self, sign: int) -> int:
        return self.m_plus if sign == PLUS else self.m_minus

    def act(self, sign: int, m, b) -> tuple:
        """m . b with m in M^sign and b in A^-sign."""
        f = self.pair.field
        out = [f.zero] * self.mdim(-sign)
        table = self.actions[sign]
        for i, x in enumerate(m):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, v in table.get((i, j), ()):
                    out[k] += x * y * v
        return tuple(out)

    def operator(self, a: PairElement) -> tuple:
        """Matrix of m -> m . a from M^-s to M^s, for a in A^s."""
        s = -a.sign
        cols = [self.act(s, self.basis(s, i), a.coords) for i in range(self.mdim(s))]
        return tuple(tuple(c[r] for c in cols) for r in range(self.mdim(-s)))

    def basis(self, sign: int, i: int) -> tuple:
        f = self.pair.field
        return tuple(f.one if k == i else f.zero for k in range(self.mdim(sign)))


def check_module(rep: PairModuleRep) -> CheckResult:
    """((m x) y) z = m <x y z> on basis tuples; witness (s, m, x, y, z)."""
    A = rep.pair
    for s in SIGNS:
        for m in range(rep.mdim(s)):
            mv = rep.basis(s, m)
            for x in range(A.dim(-s)):
                xv = A.basis_vector(-s, x)
                mx = rep.act(s, mv, xv)
                for y in range(A.dim(s)):
                    yv = A.basis_vector(s, y)
                    mxy = rep.act(-s, mx, yv)
                    for z in range(A.dim(-s)):
                        zv = A.basis_vector(-s, z)
                        if rep.act(s, mxy, zv) != rep.act(s, mv, A.triple(-s, xv, yv, zv)):
                            return CheckResult(False, (s, m, x, y, z))
    return CheckResult(True, None)


def is_faithful(rep: PairModuleRep) -> bool:
    A = rep.pair
    for s in SIGNS:
        ops = [rep.operator(PairElement.basis(A, s, i)) for i in range(A.dim(s))]
        flat = [tuple(x for row in op for x in row) for op in ops]
        if ops and Subspace.span(A.field, len(flat[0]), flat).dim != len(ops):
            return False
    return True


def _matrix_rank(mat, f) -> int:
    from .linalg import rank

    return rank(mat, f) if mat and mat[0] else 0


# --- socle -------------------------------------------------------------------

def algebra_socle(E: StructureAlgebra) -> Subspace:
    """Right socle {x : x J = 0}, J the radical (valid for finite-dimensional algebras)."""
    J = radical(E).space
    rows = []
    for j in J.basis:
        R = E.right_matrix(j)
        for r in range(E.dim):
            row = {c: v for c, v in enumerate(R[r]) if v}
            if row:
                rows.append(row)
    return kernel_sparse(rows, E.dim, E.field)


def socle_pair(A: AssocPair) -> PairIdeal:
    """Soc(A) = Soc(E) meet A, cross-checked against e1 Soc(E) e2 and e2 Soc(E) e1."""
    require_semiprime(A, "socle")
    emb = build_standard_imbedding(A)
    E = emb.algebra
    S = algebra_socle(E)
    comps = {}
    for s, P in ((PLUS, emb.peirce.e12), (MINUS, emb.peirce.e21)):
        meet = S & P
        comps[s] = Subspace.span(A.field, A.dim(s), [emb.block(v, s) for v in meet.basis])
        first, second = (emb.e1, emb.e2) if s == PLUS else (emb.e2, emb.e1)
        corner = Subspace.span(A.field, A.dim(s), [emb.block(E.mul(E.mul(first, v), second), s) for v in S.basis])
        if corner != comps[s]:
            raise InvariantViolation("socle of the pair disagrees with the Peirce corner of Soc(E)", s)
    return PairIdeal(A, comps[PLUS], comps[MINUS])


# --- rank ----------------------------------------------------------------------

def element_rank(A: AssocPair, a: PairElement, module: Optional[PairModuleRep] = None) -> int:
    """rank(a), from the module when one is given, else from the local algebra.

    The local route reads t off the least standard identity of A_a (S_2t
    for M_t over a field) and accepts it only when A_a has dimension t^2
    over its center.
    """
    require_prime(A, "element rank")
    if a.is_zero():
        return 0
    if module is not None:
        r = _matrix_rank(module.operator(a), A.field)
        if r % module.delta_dim:
            raise InvariantViolation("image dimension is not a multiple of the division ring dimension")
        return r // module.delta_dim
    La, _ = local_algebra(A, a)
    d = min_standard_degree(La, max(2 * La.dim, 1))
    if d is None or d % 2:
        raise UnsupportedError("unsupported: local algebra is not a split matrix algebra")
    t = d // 2
    zdim = center(La).dim
    if zdim == 0 or La.dim != t * t * zdim:
        raise UnsupportedError("unsupported: non-split division algebra")
    return t


def rank_one_decompose(A: AssocPair, a: PairElement, module: Optional[PairModuleRep]) -> list:
    """t rank-one elements summing to a, by factorizing the module operator of a."""
    if module is None:
        raise PreconditionError("rank-one decomposition needs a module representation")
    t = element_rank(A, a, module)
    if t == 0:
        return []
    if t == 1:
        return [a]
    if module.delta_dim != 1:
        raise UnsupportedError("rank-one factorization over a noncommutative or nontrivial division ring")
    f = A.field
    op = module.operator(a)
    rows, cols = len(op), len(op[0])
    # image basis from the leading columns, coefficients of every column in it
    image_cols, picked = [], []
    span = Subspace.zero(f, rows)
    for c in range(cols):
        col = tuple(op[r][c] for r in range(rows))
        if not span.contains(col):
            span = span + Subspace.span(f, rows, [col])
            image_cols.append(col)
            picked.append(c)
    W = tuple(tuple(w[r] for w in image_cols) for r in range(rows))
    coeff = []
    for c in range(cols):
        col = tuple(op[r][c] for r in range(rows))
        coeff.append(solve_linear(W, col, f, len(image_cols)).particular)
    ops_basis = [module.operator(PairElement.basis(A, a.sign, i)) for i in range(A.dim(a.sign))]
    flat_basis = [tuple(x for row in m for x in row) for m in ops_basis]
    M = tuple(tuple(v[r] for v in flat_basis) for r in range(rows * cols))
    pieces = []
    for l, w in enumerate(image_cols):
        target = tuple(tuple(w[r] * coeff[c][l] for c in range(cols)) for r in range(rows))
        sol = solve_linear(M, tuple(x for row in target for x in row), f, len(flat_basis))
        if not sol.consistent:
            raise UnsupportedError("rank-one operator is not realized by an element of the pair")
        pieces.append(PairElement(a.sign, tuple(sol.particular)))
    total = pieces[0]
    for p in pieces[1:]:
        total = total + p
    if total != a or any(element_rank(A, p, module) != 1 for p in pieces):
        raise InvariantViolation("rank-one decomposition failed to verify")
    return pieces


def _rank_candidates(A: AssocPair, sign: int):
    n = A.dim(sign)
    f = A.field
    for i in range(n):
        yield PairElement.basis(A, sign, i)
    for i, j in combinations(range(n), 2):
        yield PairElement(sign, tuple(f.one if k in (i, j) else f.zero for k in range(n)))
    for k in range(1, 5):
        yield PairElement(sign, tuple(f((i + 1) ** k) for i in range(n)))


def capacity(A: AssocPair, module: Optional[PairModuleRep] = None) -> int:
    """Largest rank over deterministic candidate elements of both components.

    Only prime pairs have a rank function here, so only they get a capacity.
    """
    if not is_semiprime(A):
        raise PreconditionError("capacity needs a semiprime pair")
    require_prime(A, "capacity")
    best = 0
    for s in SIGNS:
        ceiling = isqrt(A.dim(s)) if module is None else min(module.m_plus, module.m_minus) // module.delta_dim
        for a in _rank_candidates(A, s):
            best = max(best, element_rank(A, a, module))
            if best >= ceiling:
                break
    return best


# --- simplicity ----------------------------------------------------------------

def is_simple(A: AssocPair) -> CheckResult:
    """Nonzero products and no proper nonzero ideal.

    Seeds: every basis element must generate the whole pair (a proper ideal
    found this way is the witness).  Seeds alone can miss ideals that meet
    no basis vector, so a positive answer is certified by semiprime + prime,
    which at finite dimension is equivalent to simple with nonzero product.
    """
    if A.is_zero_product():
        return CheckResult(False, "zero product")
    for s in SIGNS:
        for i in range(A.dim(s)):
            I = ideal_generate(A, [PairElement.basis(A, s, i)])
            if not I.is_whole():
                return CheckResult(False, ("proper ideal", s, i, I.dims))
    if not is_semiprime(A):
        return CheckResult(False, "not semiprime")
    p = is_prime(A)
    if p is None:
        raise UnsupportedError("primeness undecided")
    return CheckResult(bool(p), None if p else "not prime")


# --- reports -------------------------------------------------------------------

def _local_is_simple_unital_pi(A: AssocPair, a: PairElement) -> bool:
    La, _ = local_algebra(A, a)
    if La.dim == 0 or find_unit(La) is None:
        return False
    return bool(is_simple_algebra(La)) and min_standard_degree(La) is not None


def algebra_strongly_primitive(E: StructureAlgebra) -> bool:
    """Prime with nonzero socle and nonzero PI-ideal (every element is PI at finite dimension)."""
    prof = regularity_profile(E)
    return bool(prof.prime) and not algebra_socle(E).is_zero() and E.dim > 0


@dataclass(frozen=True)
class StructureReport:
    semiprime: bool
    prime: bool
    primitive: bool
    strongly_primitive: bool
    socle_dims: Optional[tuple]
    capacity: Optional[int]
    amitsur: tuple
    strong_primitivity_transfer: bool
    simple: bool
    kaplansky: Optional[bool]
    notes: tuple = ()

    @property
    def amitsur_agree(self) -> bool:
        return len(set(self.amitsur)) == 1


def structure_report(A: AssocPair, module: Optional[PairModuleRep] = None) -> StructureReport:
    prof = pair_regularity(A)
    semiprime = prof.semiprime
    prime = bool(prof.prime)
    notes = []
    soc = socle_pair(A) if semiprime else None
    soc_nonzero = soc is not None and not soc.is_zero()
    primitive = prime and soc_nonzero
    # PI(A) = A at finite dimension, so nonzero exactly when A is
    pi_nonzero = A.dim_plus + A.dim_minus > 0
    strongly_primitive = primitive and pi_nonzero

    emb = build_standard_imbedding(A)
    cond_i = algebra_strongly_primitive(emb.algebra)
    cond_ii = prime and soc is not None and soc.is_whole() and pi_nonzero
    cond_iii = prime and any(
        _local_is_simple_unital_pi(A, PairElement.basis(A, s, i)) for s in SIGNS for i in range(A.dim(s))
    )
    amitsur = (cond_i, cond_ii, cond_iii)
    if len(set(amitsur)) != 1:
        raise InvariantViolation("Amitsur conditions disagree", amitsur)

    cap = None
    if prime:
        try:
            cap = capacity(A, module)
        except UnsupportedError as exc:
            notes.append(f"capacity: {exc}")
    else:
        notes.append("capacity: defined for prime pairs only")
    simple = bool(is_simple(A).ok)
    kaplansky = None
    if primitive:
        # every finite-dimensional pair satisfies the homotope identity S_(n+1), n = max component dim
        kaplansky = simple and soc.is_whole()
        notes.append("kaplansky: HPI holds automatically at finite dimension; conclusion checked")
    notes.append("density: finite-dimensional dense subpairs are the whole pair")
    return StructureReport(
        semiprime=semiprime,
        prime=prime,
        primitive=primitive,
        strongly_primitive=strongly_primitive,
        socle_dims=soc.dims if soc is not None else None,
        capacity=cap,
        amitsur=amitsur,
        strong_primitivity_transfer=(strongly_primitive == cond_i),
        simple=simple,
        kaplansky=kaplansky,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class MartindalePosnerReport:
    ok: bool
    closure_field: str
    closure_dims: tuple
    hpi_degree: Optional[int]
    capacity: Optional[int]
    bound: Optional[int]
    closure_simple: bool
    closure_socle_whole: bool
    closure_strongly_primitive: bool
    pi_is_intersection: bool
    failures: tuple = ()


def martindale_posner_report(A: AssocPair, max_degree: Optional[int] = None, budget: Optional[int] = None,
                             jobs: int = 1) -> MartindalePosnerReport:
    from .centroid import central_closure
    from .identities import least_hpi_degree

    require_prime(A, "Martindale/Posner report")
    closed = central_closure(A)
    P = closed.pair_over_K
    failures = []
    sr = structure_report(P)
    soc = socle_pair(P)
    # PI(A) = A, so the Martindale equality says every element of A lands in Soc(closure)
    pi_meet = all(
        soc.component(s).contains(closed.presentations[s].to_K(A.basis_vector(s, i)))
        for s in SIGNS
        for i in range(A.dim(s))
    )
    if max_degree is None:
        max_degree = max(A.dims) + 1
    d, _ = least_hpi_degree(A, max_degree, budget=budget, jobs=jobs)
    cap = sr.capacity
    bound = d // 2 if d is not None else None
    if not sr.simple:
        failures.append("closure not simple")
    if not soc.is_whole():
        failures.append("closure not equal to its socle")
    if not sr.strongly_primitive:
        failures.append("closure not strongly primitive")
    if not pi_meet:
        failures.append("PI(A) differs from A meet Soc(closure)")
    if d is None:
        failures.append("no homotope standard identity up to the degree bound")
    elif cap is None or cap > bound:
        failures.append("capacity exceeds the HPI bound")
    return MartindalePosnerReport(
        ok=not failures,
        closure_field=str(closed.closure_field),
        closure_dims=P.dims,
        hpi_degree=d,
        capacity=cap,
        bound=bound,
        closure_simple=sr.simple,
        closure_socle_whole=soc.is_whole(),
        closure_strongly_primitive=sr.strongly_primitive,
        pi_is_intersection=pi_meet,
        failures=tuple(failures),
    )
