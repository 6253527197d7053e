"""Finite-dimensional associative algebras given by structure constants.

``e_i * e_j = sum_k c[i][j][k] e_k``.  The table is stored sparsely as a
dict ``(i, j) -> ((k, c_ijk), ...)``; elements are coordinate tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import NamedTuple, Optional, Sequence

from .errors import PreconditionError, UnsupportedError
from .linalg import Eliminator, Subspace, kernel_sparse, solve_linear
from .polys import irreducible_over_base, is_squarefree, minimal_polynomial


class CheckResult(NamedTuple):
    ok: bool
    witness: Optional[tuple]

    def __bool__(self):
        return self.ok


class StructureAlgebra:
    __slots__ = ("field", "dim", "table", "unit", "_tensor")

    def __init__(self, field, dim: int, table: dict, unit: Optional[Sequence] = None):
        self.field = field
        self.dim = dim
        clean = {}
        for (i, j), terms in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product index ({i}, {j}) outside dimension {dim}")
            acc = {}
            for k, v in terms:
                if not 0 <= k < dim:
                    raise ValueError(f"output index {k} outside dimension {dim}")
                v = field(v)
                acc[k] = acc.get(k, field.zero) + v
            row = tuple(sorted((k, v) for k, v in acc.items() if v))
            if row:
                clean[(i, j)] = row
        self.table = clean
        self.unit = None if unit is None else tuple(field(x) for x in unit)
        self._tensor = None
        if self.unit is not None:
            for i in range(dim):
                e = self.basis_vector(i)
                if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                    raise ValueError("declared unit does not act as the identity")

    @classmethod
    def from_tensor(cls, field, c, unit=None) -> "StructureAlgebra":
        dim = len(c)
        table = {}
        for i in range(dim):
            for j in range(dim):
                terms = tuple((k, v) for k, v in enumerate(c[i][j]) if v)
                if terms:
                    table[(i, j)] = terms
        return cls(field, dim, table, unit)

    @classmethod
    def zero_algebra(cls, field, dim: int) -> "StructureAlgebra":
        return cls(field, dim, {})

    @property
    def structure_constants(self) -> tuple:
        if self._tensor is None:
            z = self.field.zero
            t = [[[z] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
            for (i, j), terms in self.table.items():
                for k, v in terms:
                    t[i][j][k] = v
            self._tensor = tuple(tuple(tuple(r) for r in m) for m in t)
        return self._tensor

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return tuple(v)

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"expected vectors of length {self.dim}")
        out = [self.field.zero] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        table = self.table
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                terms = table.get((i, j))
                if terms:
                    ab = a * b
                    for k, v in terms:
                        out[k] += ab * v
        return tuple(out)

    def left_matrix(self, x: Sequence) -> tuple:
        """Matrix of y -> x*y acting on column vectors."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return tuple(zip(*cols)) if cols else ()

    def right_matrix(self, x: Sequence) -> tuple:
        cols = [self.mul(self.basis_vector(j), x) for j in range(self.dim)]
        return tuple(zip(*cols)) if cols else ()

    def is_commutative(self) -> bool:
        return all(self.table.get((j, i)) == t for (i, j), t in self.table.items())

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.dim, tuple(sorted(self.table.items()))))

    def __repr__(self):
        unital = ", unital" if self.unit is not None else ""
        return f"StructureAlgebra(dim={self.dim}, field={self.field}{unital})"


def algebra_multiply(A: StructureAlgebra, x, y) -> tuple:
    return A.mul(x, y)


def check_associativity(A: StructureAlgebra) -> CheckResult:
    """First basis triple (lexicographic) with (e_i e_j) e_k != e_i (e_j e_k)."""
    basis = [A.basis_vector(i) for i in range(A.dim)]
    prods = {}
    for i in range(A.dim):
        for j in range(A.dim):
            prods[i, j] = A.mul(basis[i], basis[j])
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                if A.mul(prods[i, j], basis[k]) != A.mul(basis[i], prods[j, k]):
                    return CheckResult(False, (i, j, k))
    return CheckResult(True, None)


# --- sub-objects ------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraIdeal:
    parent: StructureAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_zero(self) -> bool:
        return self.space.is_zero()

    def contains(self, v) -> bool:
        return self.space.contains(v)

    def is_ideal(self) -> bool:
        A = self.parent
        for b in self.space.basis:
            for i in range(A.dim):
                e = A.basis_vector(i)
                if not self.space.contains(A.mul(e, b)) or not self.space.contains(A.mul(b, e)):
                    return False
        return True


def generate_ideal(A: StructureAlgebra, seeds) -> AlgebraIdeal:
    """Smallest two-sided ideal containing ``seeds``."""
    elim = Eliminator(A.dim, A.field)
    queue = []
    for s in seeds:
        s = tuple(A.field(x) for x in s)
        if elim.add_dense(s):
            queue.append(s)
    basis = [A.basis_vector(i) for i in range(A.dim)]
    while queue:
        v = queue.pop()
        for e in basis:
            for w in (A.mul(e, v), A.mul(v, e)):
                if elim.add_dense(w):
                    queue.append(w)
    return AlgebraIdeal(A, Subspace._from_eliminator(elim))


def product_space(A: StructureAlgebra, U: Subspace, V: Subspace) -> Subspace:
    return Subspace.span(
        A.field, A.dim, [A.mul(u, v) for u in U.basis for v in V.basis]
    )


def is_nilpotent_space(A: StructureAlgebra, U: Subspace) -> bool:
    power = U
    for _ in range(A.dim + 1):
        if power.is_zero():
            return True
        power = product_space(A, power, U)
    return power.is_zero()


def subalgebra(A: StructureAlgebra, S: Subspace) -> StructureAlgebra:
    """The algebra structure on a multiplicatively closed subspace, in its echelon basis."""
    table = {}
    for i, u in enumerate(S.basis):
        for j, v in enumerate(S.basis):
            p = A.mul(u, v)
            try:
                coords = S.coordinates(p)
            except ValueError:
                raise PreconditionError("subspace is not closed under multiplication") from None
            terms = tuple((k, c) for k, c in enumerate(coords) if c)
            if terms:
                table[(i, j)] = terms
    unit = None
    if A.unit is not None and S.contains(A.unit):
        unit = S.coordinates(A.unit)
    sub = StructureAlgebra(A.field, S.dim, table)
    if unit is None:
        unit = find_unit(sub)
    return StructureAlgebra(A.field, S.dim, table, unit)


class QuotientMap(NamedTuple):
    """Projection A -> A/K onto the coordinates of the non-pivot columns of K."""

    kernel: Subspace

    def project(self, v) -> tuple:
        return self.kernel.quotient_coordinates(v)

    def lift(self, coords) -> tuple:
        K = self.kernel
        out = [K.field.zero] * K.ambient_dim
        for c, col in zip(coords, K.complement_columns()):
            out[col] = K.field(c)
        return tuple(out)


def quotient_algebra(A: StructureAlgebra, K: Subspace):
    """``A/K`` for an ideal ``K``; returns ``(algebra, QuotientMap)``."""
    q = QuotientMap(K)
    cols = K.complement_columns()
    table = {}
    for a, i in enumerate(cols):
        for b, j in enumerate(cols):
            coords = q.project(A.mul(A.basis_vector(i), A.basis_vector(j)))
            terms = tuple((k, c) for k, c in enumerate(coords) if c)
            if terms:
                table[(a, b)] = terms
    Q = StructureAlgebra(A.field, len(cols), table)
    unit = find_unit(Q)
    if unit is not None:
        Q = StructureAlgebra(A.field, len(cols), table, unit)
    return Q, q


def find_unit(A: StructureAlgebra) -> Optional[tuple]:
    """The two-sided identity if it exists (solved linearly), else None."""
    if A.unit is not None:
        return A.unit
    if A.dim == 0:
        return ()
    n = A.dim
    c = A.structure_constants
    rows, rhs = [], []
    one, zero = A.field.one, A.field.zero
    for j in range(n):
        for k in range(n):
            rows.append([c[i][j][k] for i in range(n)])
            rhs.append(one if j == k else zero)
            rows.append([c[j][i][k] for i in range(n)])
            rhs.append(one if j == k else zero)
    sol = solve_linear(rows, rhs, A.field, n)
    return sol.particular if sol.consistent else None


# --- radical, center, centroid ---------------------------------------------

def radical(A: StructureAlgebra) -> AlgebraIdeal:
    """Jacobson radical via the trace form of the regular representation.

    Uses tr(L_x L_y) = tr(L_xy).  The form is taken on the unital hull, which
    adds the single condition tr(L_x) = 0; that keeps the criterion exact for
    non-unital algebras too.
    """
    p = A.field.characteristic
    if p and p <= A.dim:
        raise UnsupportedError(
            f"trace-form radical needs characteristic 0 or p > dim; got p={p}, dim={A.dim}"
        )
    n = A.dim
    if n == 0:
        return AlgebraIdeal(A, Subspace.zero(A.field, 0))
    zero = A.field.zero
    traces = [zero] * n
    for (m, k), terms in A.table.items():
        for l, v in terms:
            if l == k:
                traces[m] += v
    rows = []
    for j in range(n):
        row = {}
        for i in range(n):
            acc = zero
            for k, v in A.table.get((i, j), ()):
                acc += v * traces[k]
            if acc:
                row[i] = acc
        rows.append(row)
    rows.append({i: t for i, t in enumerate(traces) if t})
    return AlgebraIdeal(A, kernel_sparse(rows, n, A.field))


def center(A: StructureAlgebra) -> Subspace:
    n = A.dim
    f = A.field
    rows = {}
    # row (j, k): sum_i z_i (c[i][j][k] - c[j][i][k]) = 0
    for (i, j), terms in A.table.items():
        for k, v in terms:
            r = rows.setdefault((j, k), {})
            r[i] = r.get(i, f.zero) + v
            r = rows.setdefault((i, k), {})
            r[j] = r.get(j, f.zero) - v
    return kernel_sparse(rows.values(), n, f)


def _coef(A, i, j, k):
    for kk, v in A.table.get((i, j), ()):
        if kk == k:
            return v
    return A.field.zero


def centroid_maps(A: StructureAlgebra) -> Subspace:
    """Linear maps T with T(xy) = T(x)y = xT(y), flattened row-major (T[k][l])."""
    n = A.dim
    f = A.field
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                lhs = {}
                for l, v in A.table.get((i, j), ()):
                    lhs[m * n + l] = lhs.get(m * n + l, f.zero) + v
                mid = {}
                rgt = {}
                for k in range(n):
                    v = _coef(A, k, j, m)
                    if v:
                        mid[k * n + i] = mid.get(k * n + i, f.zero) + v
                    v = _coef(A, i, k, m)
                    if v:
                        rgt[k * n + j] = rgt.get(k * n + j, f.zero) + v
                for a, b in ((lhs, mid), (mid, rgt)):
                    row = dict(a)
                    for c, v in b.items():
                        row[c] = row.get(c, f.zero) - v
                    row = {c: v for c, v in row.items() if v}
                    if row:
                        rows.append(row)
    return kernel_sparse(rows, n * n, f)


def _composition_algebra(S: Subspace, n: int) -> StructureAlgebra:
    """Algebra of a subspace of flattened n x n matrices closed under composition."""
    from .linalg import flatten, mat_mul, unflatten

    f = S.field
    mats = [unflatten(b, n, n) for b in S.basis]
    table = {}
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            coords = S.coordinates(flatten(mat_mul(a, b, f)))
            terms = tuple((k, c) for k, c in enumerate(coords) if c)
            if terms:
                table[(i, j)] = terms
    idn = tuple(f.one if r == c else f.zero for r in range(n) for c in range(n))
    unit = S.coordinates(idn) if S.contains(idn) else None
    return StructureAlgebra(f, S.dim, table, unit)


def center_and_centroid(A: StructureAlgebra):
    """``(center, centroid_algebra)``.

    For unital algebras the centroid is the center acting by multiplication,
    so the center with inherited product is returned directly.
    """
    Z = center(A)
    if A.unit is not None or find_unit(A) is not None:
        if A.unit is None:
            A = StructureAlgebra(A.field, A.dim, A.table, find_unit(A))
        return Z, subalgebra(A, Z)
    return Z, _composition_algebra(centroid_maps(A), A.dim)


def centroid_algebra(A: StructureAlgebra):
    """Centroid by the full commuting-map solve; returns ``(maps, algebra)``."""
    S = centroid_maps(A)
    return S, _composition_algebra(S, A.dim)


# --- field test, regularity -------------------------------------------------

def _candidates(C: StructureAlgebra, rounds: int = 12):
    for i in range(C.dim):
        yield C.basis_vector(i)
    for k in range(1, rounds + 1):
        yield tuple(C.field((k + 1) ** i) for i in range(C.dim))


def primitive_element(C: StructureAlgebra, rounds: int = 12):
    """First deterministic candidate whose minimal polynomial has degree dim C."""
    for x in _candidates(C, rounds):
        m = minimal_polynomial(C.left_matrix(x), C.field)
        if m.degree == C.dim:
            return x, m
    return None, None


def is_field_algebra(C: StructureAlgebra, rounds: int = 12) -> Optional[bool]:
    """Decide whether a commutative unital algebra is a field.

    None means inconclusive: no primitive element among the deterministic
    candidates and no zero-divisor certificate either.
    """
    if C.dim == 0:
        return False
    if find_unit(C) is None:
        return False
    for x in _candidates(C, rounds):
        m = minimal_polynomial(C.left_matrix(x), C.field)
        if not is_squarefree(m):
            return False
        try:
            irreducible = irreducible_over_base(m)
        except UnsupportedError:
            return None
        if not irreducible:
            return False
        if m.degree == C.dim:
            return True
    return None


class RegularityProfile(NamedTuple):
    semiprime: bool
    prime: Optional[bool]
    radical_dim: int
    center_dim: int
    center_is_field: Optional[bool]


def regularity_profile(A: StructureAlgebra) -> RegularityProfile:
    """Semiprimeness from the radical; primeness from the center being a field.

    A finite-dimensional semiprime algebra is semisimple and therefore has a
    unit of its own, so the center test runs on A itself.
    """
    R = radical(A)
    Z = center(A)
    semiprime = R.is_zero()
    if not semiprime:
        return RegularityProfile(False, False, R.dim, Z.dim, None)
    if A.dim == 0:
        return RegularityProfile(True, False, 0, 0, False)
    unit = find_unit(A)
    if unit is None:  # pragma: no cover - semisimple algebras are unital
        raise UnsupportedError("semiprime algebra without a unit")
    U = StructureAlgebra(A.field, A.dim, A.table, unit)
    is_field = is_field_algebra(subalgebra(U, Z))
    return RegularityProfile(True, is_field, 0, Z.dim, is_field)


def is_simple_algebra(A: StructureAlgebra) -> Optional[bool]:
    """Semisimple with a field as center is the same as simple."""
    prof = regularity_profile(A)
    return prof.semiprime and prof.prime


def matrix_algebra_certificate(A: StructureAlgebra) -> Optional[int]:
    """n with A isomorphic to M_n(F), or None when that is not certified.

    Central simple plus an element x with dim(xAx) = 1 forces A = M_n(F):
    in M_n(D) the corner xAx has dimension rank(x)^2 * dim D.
    """
    prof = regularity_profile(A)
    if not (prof.semiprime and prof.prime and prof.center_dim == 1):
        return None
    n = isqrt(A.dim)
    if n * n != A.dim:
        return None
    cands = [A.basis_vector(i) for i in range(A.dim)]
    cands += [tuple(a + b for a, b in zip(A.basis_vector(i), A.basis_vector(j)))
              for i, j in combinations(range(A.dim), 2)]
    basis = [A.basis_vector(i) for i in range(A.dim)]
    for x in cands:
        corner = Subspace.span(A.field, A.dim, [A.mul(A.mul(x, b), x) for b in basis])
        if corner.dim == 1:
            return n
    return None


# --- Peirce decomposition ---------------------------------------------------

class PeirceDecomposition(NamedTuple):
    e11: Subspace
    e12: Subspace
    e21: Subspace
    e22: Subspace

    @property
    def dims(self) -> tuple:
        return (self.e11.dim, self.e12.dim, self.e21.dim, self.e22.dim)

    def component(self, i: int, j: int) -> Subspace:
        return (self.e11, self.e12, self.e21, self.e22)[2 * (i - 1) + (j - 1)]


def peirce_decompose(A: StructureAlgebra, e: Sequence) -> PeirceDecomposition:
    unit = find_unit(A)
    if unit is None:
        raise PreconditionError("Peirce decomposition needs a unital algebra")
    e = tuple(A.field(x) for x in e)
    if A.mul(e, e) != e:
        raise PreconditionError("element is not idempotent")
    e1 = e
    e2 = tuple(u - x for u, x in zip(unit, e))
    basis = [A.basis_vector(i) for i in range(A.dim)]
    parts = []
    for a in (e1, e2):
        for b in (e1, e2):
            parts.append(Subspace.span(A.field, A.dim, [A.mul(A.mul(a, v), b) for v in basis]))
    dec = PeirceDecomposition(*parts)
    if sum(dec.dims) != A.dim:  # pragma: no cover - guaranteed by idempotency
        raise AssertionError("Peirce components do not span")
    return dec


def check_peirce_rules(A: StructureAlgebra, dec: PeirceDecomposition) -> bool:
    """E_ij * E_kl lies in E_il when j == k and vanishes otherwise."""
    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                for l in (1, 2):
                    target = dec.component(i, l) if j == k else None
                    for u in dec.component(i, j).basis:
                        for v in dec.component(k, l).basis:
                            p = A.mul(u, v)
                            if target is None:
                                if any(p):
                                    return False
                            elif not target.contains(p):
                                return False
    return True


# --- homotopes and local algebras of algebras ------------------------------

def algebra_homotope(A: StructureAlgebra, a: Sequence) -> StructureAlgebra:
    """x . y = x a y."""
    table = {}
    for i in range(A.dim):
        ea = A.mul(A.basis_vector(i), a)
        for j in range(A.dim):
            p = A.mul(ea, A.basis_vector(j))
            terms = tuple((k, v) for k, v in enumerate(p) if v)
            if terms:
                table[(i, j)] = terms
    return StructureAlgebra(A.field, A.dim, table)


def algebra_local(A: StructureAlgebra, a: Sequence):
    """Homotope at ``a`` modulo {x : a x a = 0}; returns ``(algebra, QuotientMap)``."""
    a = tuple(A.field(x) for x in a)
    cols = [A.mul(A.mul(a, A.basis_vector(j)), a) for j in range(A.dim)]
    rows = [{j: col[k] for j, col in enumerate(cols) if col[k]} for k in range(A.dim)]
    K = kernel_sparse(rows, A.dim, A.field)
    return quotient_algebra(algebra_homotope(A, a), K)


# --- standard identities on algebras ---------------------------------------

def standard_values(A: StructureAlgebra, n: int, prev=None):
    """S_n on every strictly increasing basis n-tuple, keyed by index tuple.

    S_n(x_1..x_n) = sum_k (-1)^(k-1) x_k S_{n-1}(x_1..^x_k..x_n); passing the
    previous level in ``prev`` makes a level sweep linear in the number of
    subsets.
    """
    if n == 1:
        return {(i,): A.basis_vector(i) for i in range(A.dim)}
    if prev is None:
        prev = standard_values(A, n - 1)
    out = {}
    zero = A.zero_vector()
    for S in combinations(range(A.dim), n):
        acc = [A.field.zero] * A.dim
        for pos, k in enumerate(S):
            rest = prev.get(S[:pos] + S[pos + 1:], zero)
            if not any(rest):
                continue
            p = A.mul(A.basis_vector(k), rest)
            if pos % 2:
                acc = [x - y for x, y in zip(acc, p)]
            else:
                acc = [x + y for x, y in zip(acc, p)]
        out[S] = tuple(acc)
    return out


def min_standard_degree(A: StructureAlgebra, bound: Optional[int] = None) -> Optional[int]:
    """Least n such that A satisfies S_n, or None if none up to ``bound``.

    S_n vanishes vacuously on increasing n-tuples once n > dim A, so the
    default bound max(2 dim, dim + 1, 1) always settles the question.
    """
    if bound is None:
        bound = max(2 * A.dim, A.dim + 1, 1)
    prev = None
    for n in range(1, bound + 1):
        if n > A.dim:
            return n
        prev = standard_values(A, n, prev)
        if not any(any(v) for v in prev.values()):
            return n
    return None
