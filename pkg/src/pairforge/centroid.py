"""Centroid, extended centroid and central closure of a pair.

The centroid is solved for directly: pairs (T+, T-) with

    T(<x y z>) = <T x, y, z> = <x, T y, z> = <x, y, T z>.

Extended centroid.  In a finite-dimensional semiprime pair the annihilator
of every proper ideal is nonzero (the standard imbedding is semisimple), so
the only essential ideal is the pair itself and the direct limit over
essential ideals is just the centroid.  ``extended_centroid`` asserts that
premise on every ideal generated by a basis element before returning.

The central closure is built for prime pairs, where the centroid is a field
K = F[t]/(m).  Picking a primitive element theta, every component is a
K-space; a greedy K-basis turns structure constants over F into structure
constants over K.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .algebra import (
    StructureAlgebra,
    center,
    find_unit,
    is_field_algebra,
    primitive_element,
)
from .errors import InvariantViolation, UnsupportedError
from .imbedding import (
    Imbedding,
    build_standard_imbedding,
    require_prime,
    require_semiprime,
)
from .linalg import (
    Eliminator,
    Subspace,
    flatten,
    identity,
    kernel_sparse,
    mat_inverse,
    mat_mul,
    mat_vec,
    rank,
    solve_linear,
    unflatten,
)
from .pair import (
    MINUS,
    PLUS,
    SIGNS,
    AssocPair,
    PairElement,
    annihilator,
    ideal_generate,
)
from .polys import ExtensionField, minimal_polynomial


class CentroidElement(NamedTuple):
    t_plus: tuple
    t_minus: tuple

    def component(self, sign: int) -> tuple:
        return self.t_plus if sign == PLUS else self.t_minus

    def apply(self, sign: int, v, field) -> tuple:
        return mat_vec(self.component(sign), v, field)

    def compose(self, other: "CentroidElement", field) -> "CentroidElement":
        return CentroidElement(
            mat_mul(self.t_plus, other.t_plus, field), mat_mul(self.t_minus, other.t_minus, field)
        )

    def flat(self) -> tuple:
        return flatten(self.t_plus) + flatten(self.t_minus)


def _var(A, sign, r, c):
    dp = A.dim_plus
    if sign == PLUS:
        return r * dp + c
    return dp * dp + r * A.dim_minus + c


def centroid_space(A: AssocPair) -> Subspace:
    """All (T+, T-) commuting with the products, flattened as T+ then T-."""
    f = A.field
    slots = {k: {} for k in "abcd"}
    for s in SIGNS:
        ds, dt = A.dim(s), A.dim(-s)
        for (i, j, k), terms in A.tables[s].items():
            for m in range(ds):
                # a: T(<e_i e_j e_k>)_m
                row = slots["a"].setdefault((s, i, j, k, m), {})
                for l, v in terms:
                    key = _var(A, s, m, l)
                    row[key] = row.get(key, f.zero) + v
            for m, v in terms:
                # b: <T e_r, e_j, e_k> with r = i
                for c in range(ds):
                    row = slots["b"].setdefault((s, c, j, k, m), {})
                    key = _var(A, s, i, c)
                    row[key] = row.get(key, f.zero) + v
                # c: <e_i, T e_r, e_k> with r = j
                for c in range(dt):
                    row = slots["c"].setdefault((s, i, c, k, m), {})
                    key = _var(A, -s, j, c)
                    row[key] = row.get(key, f.zero) + v
                # d: <e_i, e_j, T e_r> with r = k
                for c in range(ds):
                    row = slots["d"].setdefault((s, i, j, c, m), {})
                    key = _var(A, s, k, c)
                    row[key] = row.get(key, f.zero) + v
    keys = set()
    for d in slots.values():
        keys.update(d)
    rows = []
    for key in sorted(keys):
        forms = [slots[k].get(key, {}) for k in "abcd"]
        for u, w in zip(forms, forms[1:]):
            row = dict(u)
            for c, v in w.items():
                row[c] = row.get(c, f.zero) - v
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    n = A.dim_plus ** 2 + A.dim_minus ** 2
    return kernel_sparse(rows, n, f)


class CentroidRing:
    """Commutative unital ring of centroid maps with structure constants in its basis."""

    def __init__(self, pair: AssocPair, space: Subspace):
        self.pair = pair
        self.space = space
        f = pair.field
        self.basis = [self._unflat(v) for v in space.basis]
        table = {}
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                coords = self.coordinates(a.compose(b, f))
                terms = tuple((k, c) for k, c in enumerate(coords) if c)
                if terms:
                    table[(i, j)] = terms
        self.identity = CentroidElement(identity(pair.dim_plus, f), identity(pair.dim_minus, f))
        unit = self.coordinates(self.identity)
        self.structure = StructureAlgebra(f, space.dim, table, unit)

    def _unflat(self, v) -> CentroidElement:
        dp, dm = self.pair.dim_plus, self.pair.dim_minus
        return CentroidElement(unflatten(v[: dp * dp], dp, dp), unflatten(v[dp * dp:], dm, dm))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self):
        return self.pair.field

    def element(self, coords) -> CentroidElement:
        return self._unflat(self.space.from_coordinates(coords))

    def coordinates(self, el: CentroidElement) -> tuple:
        try:
            return self.space.coordinates(el.flat())
        except ValueError:
            raise InvariantViolation("map is not in the centroid") from None

    def contains(self, el: CentroidElement) -> bool:
        return self.space.contains(el.flat())

    def mul(self, x, y) -> tuple:
        return self.structure.mul(x, y)

    def is_commutative(self) -> bool:
        return self.structure.is_commutative()

    def is_field(self) -> Optional[bool]:
        return is_field_algebra(self.structure)

    def inverse(self, x) -> Optional[tuple]:
        """mu with x*mu = 1, or None."""
        n = self.dim
        L = self.structure.left_matrix(x)
        sol = solve_linear(L, self.structure.unit, self.field, n)
        return sol.particular if sol.consistent else None

    def regularity_witness(self, x) -> Optional[tuple]:
        """mu with x mu x = x."""
        S = self.structure
        cols = [S.mul(S.mul(x, S.basis_vector(j)), x) for j in range(S.dim)]
        mat = [[c[r] for c in cols] for r in range(S.dim)]
        sol = solve_linear(mat, x, self.field, S.dim)
        return sol.particular if sol.consistent else None

    def __repr__(self):
        return f"CentroidRing(dim={self.dim}, pair={self.pair!r})"


def centroid_pair(A: AssocPair) -> CentroidRing:
    return CentroidRing(A, centroid_space(A))


class ExtendedCentroid(NamedTuple):
    ring: CentroidRing
    witnesses: tuple   # one regularity witness per basis element
    is_field: Optional[bool]


def _assert_collapse(A: AssocPair):
    """Every proper ideal generated by a basis element has a nonzero annihilator."""
    for s in SIGNS:
        for i in range(A.dim(s)):
            I = ideal_generate(A, [PairElement.basis(A, s, i)])
            if not I.is_whole() and annihilator(A, I).is_zero():
                raise InvariantViolation(
                    "proper essential ideal found; the finite-dimensional collapse fails",
                    {"sign": s, "basis": i, "dims": I.dims},
                )


def extended_centroid(A: AssocPair) -> ExtendedCentroid:
    require_semiprime(A, "extended centroid")
    _assert_collapse(A)
    C = centroid_pair(A)
    if not C.is_commutative():
        raise InvariantViolation("centroid of a semiprime pair is not commutative")
    wit = []
    for i in range(C.dim):
        mu = C.regularity_witness(C.structure.basis_vector(i))
        if mu is None:
            raise InvariantViolation("centroid element without a regularity witness", i)
        wit.append(mu)
    return ExtendedCentroid(C, tuple(wit), C.is_field())


# --- C(A) and C(E) -----------------------------------------------------------

def extend_to_imbedding(emb: Imbedding, T: CentroidElement) -> tuple:
    """Phi(T): the central element z of E with z*v = f(v), f given casewise.

    f(x y) = T(x) y on E11, f(y x) = T(y) x on E22 and f = T on the odd part.
    In a semiprime pair E11 is spanned by products, so f is defined on all
    of E and z = f(e1) + f(e2).
    """
    A, E, f = emb.pair, emb.algebra, emb.pair.field
    tx = [emb.embed(PairElement(PLUS, T.apply(PLUS, A.basis_vector(PLUS, i), f))) for i in range(A.dim_plus)]
    ty = [emb.embed(PairElement(MINUS, T.apply(MINUS, A.basis_vector(MINUS, j), f))) for j in range(A.dim_minus)]
    bx = [emb.embed(PairElement.basis(A, PLUS, i)) for i in range(A.dim_plus)]
    by = [emb.embed(PairElement.basis(A, MINUS, j)) for j in range(A.dim_minus)]

    def f_corner(corner, coords):
        _, terms = emb.corner_expression(corner, coords, with_unit=False)
        out = E.zero_vector()
        for (i, j), c in terms.items():
            p = E.mul(tx[i], by[j]) if corner == 1 else E.mul(ty[j], bx[i])
            out = tuple(a + c * b for a, b in zip(out, p))
        return out

    z1 = f_corner(1, emb.block(emb.e1, 11))
    z2 = f_corner(2, emb.block(emb.e2, 22))
    z = tuple(a + b for a, b in zip(z1, z2))
    # check the casewise definition agrees with multiplication by z everywhere
    for idx in range(E.dim):
        v = E.basis_vector(idx)
        if idx < emb.offset[PLUS]:
            fv = f_corner(1, emb.block(v, 11))
        elif idx < emb.offset[MINUS]:
            fv = tx[idx - emb.offset[PLUS]]
        elif idx < emb.offset[22]:
            fv = ty[idx - emb.offset[MINUS]]
        else:
            fv = f_corner(2, emb.block(v, 22))
        if E.mul(z, v) != fv:
            raise InvariantViolation("extension of a centroid element is not multiplication", idx)
    return z


def restrict_to_pair(emb: Imbedding, z) -> CentroidElement:
    """Psi(z): multiplication by z on the Peirce components E12 and E21."""
    A, E = emb.pair, emb.algebra
    mats = {}
    for s in SIGNS:
        cols = [emb.block(E.mul(z, emb.embed(PairElement.basis(A, s, i))), s) for i in range(A.dim(s))]
        n = A.dim(s)
        mats[s] = tuple(tuple(c[r] for c in cols) for r in range(n)) if cols else ()
    return CentroidElement(mats[PLUS], mats[MINUS])


def commutes_with_peirce(emb: Imbedding, z) -> bool:
    E = emb.algebra
    for comp in emb.peirce:
        for v in comp.basis:
            if not comp.contains(E.mul(z, v)):
                return False
    return True


class CentroidIsoReport(NamedTuple):
    ok: bool
    pair_dim: int
    algebra_dim: int
    phi: tuple           # columns: images of C(A) basis in Z(E) coordinates
    psi: tuple           # columns: images of Z(E) basis in C(A) coordinates
    failures: tuple


def verify_centroid_iso(A: AssocPair) -> CentroidIsoReport:
    require_semiprime(A, "centroid isomorphism")
    C = centroid_pair(A)
    emb = build_standard_imbedding(A)
    E = emb.algebra
    Z = center(E)
    failures = []
    phi_cols, z_of = [], []
    for i, T in enumerate(C.basis):
        z = extend_to_imbedding(emb, T)
        z_of.append(z)
        if not Z.contains(z):
            failures.append(("phi not central", i))
            phi_cols.append(None)
            continue
        phi_cols.append(Z.coordinates(z))
        if not commutes_with_peirce(emb, z):
            failures.append(("phi not Peirce compatible", i))
    psi_cols = []
    for j, z in enumerate(Z.basis):
        T = restrict_to_pair(emb, z)
        if not C.contains(T):
            failures.append(("psi not in centroid", j))
            psi_cols.append(None)
            continue
        psi_cols.append(C.coordinates(T))
    if not failures:
        if C.dim != Z.dim:
            failures.append(("dimension mismatch", C.dim, Z.dim))
        else:
            for i, T in enumerate(C.basis):
                back = restrict_to_pair(emb, z_of[i])
                if back != T:
                    failures.append(("psi(phi(T)) != T", i))
            for j, z in enumerate(Z.basis):
                again = extend_to_imbedding(emb, restrict_to_pair(emb, z))
                if tuple(again) != tuple(z):
                    failures.append(("phi(psi(z)) != z", j))
            for i in range(C.dim):
                for j in range(C.dim):
                    prod = C.element(C.mul(C.structure.basis_vector(i), C.structure.basis_vector(j)))
                    if extend_to_imbedding(emb, prod) != E.mul(z_of[i], z_of[j]):
                        failures.append(("phi not multiplicative", i, j))
    mat = lambda cols, rows: tuple(tuple(c[r] for c in cols) for r in range(rows)) if cols and None not in cols else ()
    return CentroidIsoReport(
        not failures, C.dim, Z.dim, mat(phi_cols, Z.dim), mat(psi_cols, C.dim), tuple(failures)
    )


# --- scalar presentations ----------------------------------------------------

def closure_field(base, m):
    """K = base[t]/(m); the base field itself when deg m = 1."""
    if m.degree == 1:
        return base
    return ExtensionField(base, m)


def to_field_element(K, base, coeffs):
    if K is base:
        return coeffs[0]
    return K(list(coeffs))


def field_coefficients(K, base, x, k) -> tuple:
    if K is base:
        return (x,)
    return tuple(x.coeffs) + (base.zero,) * (k - len(x.coeffs))


class ScalarPresentation:
    """An F-space V with a K-structure given by theta acting as ``theta_matrix``.

    The K-basis is chosen greedily from ``candidates`` (default: the unit
    vectors in order); the F-basis behind it is theta^a v_l ordered by l,
    then a.
    """

    def __init__(self, base, theta_matrix, m, K, candidates=None):
        self.base = base
        self.K = K
        self.k = m.degree
        n = len(theta_matrix)
        self.n = n
        if n % self.k:
            raise InvariantViolation("dimension is not divisible by the degree of the scalar field")
        if candidates is None:
            candidates = [tuple(base.one if r == c else base.zero for r in range(n)) for c in range(n)]
        elim = Eliminator(n, base)
        self.generators = []
        cols = []
        for v in candidates:
            if elim.rank == n:
                break
            if not elim.reduce({i: x for i, x in enumerate(v) if x}):
                continue
            self.generators.append(tuple(v))
            w = tuple(v)
            for _ in range(self.k):
                elim.add_dense(w)
                cols.append(w)
                w = mat_vec(theta_matrix, w, base)
        if elim.rank != n or len(cols) != n:
            raise InvariantViolation("greedy K-basis does not span")
        self.fbasis = cols
        self.dim = n // self.k
        self.matrix = tuple(tuple(c[r] for c in cols) for r in range(n)) if n else ()
        self.inverse = mat_inverse(self.matrix, base) if n else ()

    def to_K(self, v) -> tuple:
        c = mat_vec(self.inverse, v, self.base) if self.n else ()
        k = self.k
        return tuple(to_field_element(self.K, self.base, c[l * k:(l + 1) * k]) for l in range(self.dim))

    def from_K(self, kv) -> tuple:
        out = [self.base.zero] * self.n
        for l, x in enumerate(kv):
            coeffs = field_coefficients(self.K, self.base, self.K(x) if self.K is not self.base else self.base(x), self.k)
            for a, c in enumerate(coeffs):
                if c:
                    col = self.fbasis[l * self.k + a]
                    for r, y in enumerate(col):
                        if y:
                            out[r] += c * y
        return tuple(out)


class ClosedPair(NamedTuple):
    base: AssocPair
    closure_field: object
    pair_over_K: AssocPair
    theta: CentroidElement
    minimal_polynomial: object
    presentations: dict    # sign -> ScalarPresentation

    @property
    def k_dims(self) -> tuple:
        return self.pair_over_K.dims

    def tight(self) -> bool:
        """to_K(<x y z>) = <to_K x, to_K y, to_K z> on all F-basis triples."""
        A, P, pres = self.base, self.pair_over_K, self.presentations
        for s in SIGNS:
            for i in range(A.dim(s)):
                x = A.basis_vector(s, i)
                for j in range(A.dim(-s)):
                    y = A.basis_vector(-s, j)
                    for k in range(A.dim(s)):
                        z = A.basis_vector(s, k)
                        lhs = pres[s].to_K(A.triple(s, x, y, z))
                        rhs = P.triple(s, pres[s].to_K(x), pres[-s].to_K(y), pres[s].to_K(z))
                        if lhs != rhs:
                            return False
        return True


def scalar_extension(A: AssocPair, theta: CentroidElement, m) -> ClosedPair:
    """Re-express A over K = F[theta] = F[t]/(m)."""
    f = A.field
    K = closure_field(f, m)
    pres = {s: ScalarPresentation(f, theta.component(s), m, K) for s in SIGNS}
    tables = {PLUS: {}, MINUS: {}}
    for s in SIGNS:
        P, Q = pres[s], pres[-s]
        for i, x in enumerate(P.generators):
            for j, y in enumerate(Q.generators):
                for k, z in enumerate(P.generators):
                    out = P.to_K(A.triple(s, x, y, z))
                    terms = tuple((l, v) for l, v in enumerate(out) if v)
                    if terms:
                        tables[s][(i, j, k)] = terms
    Ak = AssocPair(K, pres[PLUS].dim, pres[MINUS].dim, tables)
    return ClosedPair(A, K, Ak, theta, m, pres)


def _field_generator(C: CentroidRing, coords=None):
    """(theta, minimal polynomial) for C or for the subfield generated by ``coords``."""
    if coords is None:
        x, m = primitive_element(C.structure)
        if x is None:
            raise UnsupportedError("no primitive element found for the centroid")
        coords = x
    m = minimal_polynomial(C.structure.left_matrix(coords), C.field)
    return C.element(coords), m


def central_closure(A: AssocPair) -> ClosedPair:
    require_prime(A, "central closure")
    C = centroid_pair(A)
    status = C.is_field()
    if status is None:
        raise UnsupportedError("could not decide whether the centroid is a field")
    if not status:
        raise InvariantViolation("centroid of a prime pair is not a field")
    theta, m = _field_generator(C)
    return scalar_extension(A, theta, m)


def closure_is_closed(closed: ClosedPair) -> bool:
    """The closure has K-dimension 1 centroid."""
    return centroid_pair(closed.pair_over_K).dim == 1


# --- closure versus imbedding ------------------------------------------------

class ClosureCommutation(NamedTuple):
    ok: bool
    k_dim_left: int        # imbedding of the closure
    k_dim_right: int       # E re-expressed over its center field
    matrix: tuple
    failures: tuple


def algebra_over_field(E: StructureAlgebra, theta_matrix, m, K, candidates=None):
    """E as a K-algebra, where theta is a central element with minimal polynomial m."""
    pres = ScalarPresentation(E.field, theta_matrix, m, K, candidates)
    table = {}
    for i, u in enumerate(pres.generators):
        for j, v in enumerate(pres.generators):
            out = pres.to_K(E.mul(u, v))
            terms = tuple((k, c) for k, c in enumerate(out) if c)
            if terms:
                table[(i, j)] = terms
    alg = StructureAlgebra(K, pres.dim, table)
    unit = find_unit(alg)
    return StructureAlgebra(K, pres.dim, table, unit), pres


def compare_closure_with_imbedding(closed: ClosedPair) -> ClosureCommutation:
    """Explicit K-isomorphism from the imbedding of the closure to E over K."""
    A = closed.base
    K = closed.closure_field
    emb = build_standard_imbedding(A)
    E = emb.algebra
    theta_E = extend_to_imbedding(emb, closed.theta)
    theta_mat = E.left_matrix(theta_E)
    ER, pres = algebra_over_field(E, theta_mat, closed.minimal_polynomial, K)
    left = build_standard_imbedding(closed.pair_over_K)
    EL = left.algebra
    failures = []
    if EL.dim != ER.dim:
        return ClosureCommutation(False, EL.dim, ER.dim, (), (("dimension mismatch", EL.dim, ER.dim),))
    # images of the K-basis of the odd part: generators of the closure presentations
    odd = {}
    for s in SIGNS:
        odd[s] = [pres.to_K(emb.embed(PairElement(s, g))) for g in closed.presentations[s].generators]
    e1R = pres.to_K(emb.e1)
    e2R = pres.to_K(emb.e2)
    images = []
    for idx in range(EL.dim):
        v = EL.basis_vector(idx)
        if idx < left.offset[PLUS] or idx >= left.offset[22]:
            corner = 1 if idx < left.offset[PLUS] else 2
            c0, terms = left.corner_expression(corner, left.block(v, 11 if corner == 1 else 22))
            img = tuple(c0 * x for x in (e1R if corner == 1 else e2R))
            for (i, j), c in terms.items():
                prod = ER.mul(odd[PLUS][i], odd[MINUS][j]) if corner == 1 else ER.mul(odd[MINUS][j], odd[PLUS][i])
                img = tuple(a + c * b for a, b in zip(img, prod))
        elif idx < left.offset[MINUS]:
            img = odd[PLUS][idx - left.offset[PLUS]]
        else:
            img = odd[MINUS][idx - left.offset[MINUS]]
        images.append(img)
    mat = tuple(tuple(col[r] for col in images) for r in range(ER.dim))
    if rank(mat, K) != EL.dim:
        failures.append(("not invertible",))
    if pres_vec(mat, left.e1, K) != e1R or pres_vec(mat, left.e2, K) != e2R:
        failures.append(("idempotents not matched",))
    for i in range(EL.dim):
        for j in range(EL.dim):
            lhs = pres_vec(mat, EL.mul(EL.basis_vector(i), EL.basis_vector(j)), K)
            if lhs != ER.mul(images[i], images[j]):
                failures.append(("not multiplicative", i, j))
                break
        if len(failures) > 3:
            break
    return ClosureCommutation(not failures, EL.dim, ER.dim, mat, tuple(failures))


def pres_vec(mat, v, K):
    return mat_vec(mat, v, K)


def verify_closure_imbedding_commutes(A: AssocPair) -> ClosureCommutation:
    return compare_closure_with_imbedding(central_closure(A))
