"""The standard imbedding of an associative pair and Peirce extraction.

E = E11 + A+ + A- + E22, multiplied like a 2x2 block matrix.  E11 lives in
End(A+) x End(A-)^op as pairs (P, Q) acting by x -> P x on A+ and w -> Q w
on A- (a right action, so (P1, Q1)(P2, Q2) = (P1 P2, Q2 Q1)).  It is the
span closure of (Id, Id) and the operators

    l(x, y) = (z -> <x y z>,  w -> <w x y>),    x in A+, y in A-.

E22 is the mirror image inside End(A-) x End(A+)^op.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional

from .algebra import (
    AlgebraIdeal,
    PeirceDecomposition,
    RegularityProfile,
    StructureAlgebra,
    algebra_local,
    generate_ideal,
    peirce_decompose,
    regularity_profile,
)
from .errors import AxiomError, InvariantViolation, PreconditionError
from .linalg import (
    Eliminator,
    Subspace,
    flatten,
    identity,
    kernel_sparse,
    mat_mul,
    mat_vec,
    rank,
    unflatten,
)
from .pair import (
    MINUS,
    PLUS,
    SIGNS,
    AssocPair,
    PairElement,
    PairIdeal,
    check_pair_axioms,
    is_pair_isomorphism,
    local_algebra,
)


def _operator_pair(A: AssocPair, corner: int, x: tuple, y: tuple):
    """l(x, y) for corner 1 (x in A+, y in A-) or l'(y, x) for corner 2."""
    if corner == 1:
        s = PLUS
    else:
        s = MINUS
    left = [A.triple(s, x, y, A.basis_vector(s, k)) for k in range(A.dim(s))]
    right = [A.triple(-s, A.basis_vector(-s, k), x, y) for k in range(A.dim(-s))]
    return _cols_to_matrix(left, A.dim(s), A.field), _cols_to_matrix(right, A.dim(-s), A.field)


def _cols_to_matrix(cols, n, field):
    if not cols:
        return ()
    return tuple(tuple(col[r] for col in cols) for r in range(n))


class Imbedding:
    """Standard imbedding with its Peirce data and the pair <-> algebra maps."""

    def __init__(self, pair, algebra, corners, generators):
        self.pair = pair
        self.algebra = algebra
        self._corners = corners  # corner -> (Subspace of flattened operator pairs, (n_left, n_right))
        self._generators = generators
        self.n11 = corners[1][0].dim
        self.n22 = corners[2][0].dim
        self.offset = {
            11: 0,
            PLUS: self.n11,
            MINUS: self.n11 + pair.dim_plus,
            22: self.n11 + pair.dim_plus + pair.dim_minus,
        }
        self.e1 = self._corner_vector(1, self._identity_coords(1))
        self.e2 = self._corner_vector(2, self._identity_coords(2))
        n = algebra.dim
        self.peirce = PeirceDecomposition(
            self._block_space(0, self.n11),
            self._block_space(self.offset[PLUS], pair.dim_plus),
            self._block_space(self.offset[MINUS], pair.dim_minus),
            self._block_space(self.offset[22], self.n22),
        )
        assert sum(self.peirce.dims) == n

    def _block_space(self, start, length):
        f = self.pair.field
        n = self.algebra.dim
        vecs = []
        for i in range(start, start + length):
            v = [f.zero] * n
            v[i] = f.one
            vecs.append(tuple(v))
        return Subspace.span(f, n, vecs)

    def _identity_coords(self, corner):
        space, (a, b) = self._corners[corner]
        f = self.pair.field
        return space.coordinates(flatten(identity(a, f)) + flatten(identity(b, f)))

    def _corner_vector(self, corner, coords):
        f = self.pair.field
        v = [f.zero] * self.algebra.dim
        off = self.offset[11] if corner == 1 else self.offset[22]
        for i, c in enumerate(coords):
            v[off + i] = c
        return tuple(v)

    @property
    def dims(self) -> tuple:
        return self.peirce.dims

    @property
    def unit(self) -> tuple:
        return self.algebra.unit

    def embed(self, x: PairElement) -> tuple:
        f = self.pair.field
        v = [f.zero] * self.algebra.dim
        off = self.offset[x.sign]
        for i, c in enumerate(x.coords):
            v[off + i] = c
        return tuple(v)

    def embed_plus(self, coords) -> tuple:
        return self.embed(PairElement(PLUS, tuple(coords)))

    def embed_minus(self, coords) -> tuple:
        return self.embed(PairElement(MINUS, tuple(coords)))

    def block(self, v, part) -> tuple:
        """Coordinates of the ``part`` component (11, PLUS, MINUS or 22) of v."""
        length = {11: self.n11, PLUS: self.pair.dim_plus, MINUS: self.pair.dim_minus, 22: self.n22}[part]
        off = self.offset[part]
        return tuple(v[off:off + length])

    def extract(self, v, sign: int) -> PairElement:
        """The pair element of an E vector lying in E12 (sign +) or E21 (sign -)."""
        other = [p for p in (11, PLUS, MINUS, 22) if p != sign]
        if any(any(self.block(v, p)) for p in other):
            raise ValueError("vector does not lie in the requested Peirce component")
        return PairElement(sign, self.block(v, sign))

    def corner_operators(self, v, corner: int):
        """(left, right) operator matrices of the E11 or E22 block of v."""
        space, (a, b) = self._corners[corner]
        flat = space.from_coordinates(self.block(v, 11 if corner == 1 else 22))
        return unflatten(flat[: a * a], a, a), unflatten(flat[a * a:], b, b)

    def corner_expression(self, corner: int, coords, with_unit: bool = True) -> tuple:
        """Write an E11 (E22) element as c0*e + sum c_ij x_i y_j (y_j x_i).

        Returns ``(c0, {(i, j): c})`` with i indexing A+ and j indexing A-.
        With ``with_unit=False`` the idempotent is not allowed (c0 = 0); an
        element outside the span of products then raises InvariantViolation.
        """
        keys, solver = self._generators[corner]
        space, _ = self._corners[corner]
        sol = solver(space.from_coordinates(coords), with_unit)
        if sol is None:
            raise InvariantViolation("corner element is not a combination of generators")
        if with_unit:
            c0, rest = sol[0], sol[1:]
        else:
            c0, rest = self.pair.field.zero, sol
        return c0, {key: c for key, c in zip(keys, rest) if c}

    def __repr__(self):
        return f"Imbedding(dims={self.dims}, algebra_dim={self.algebra.dim})"


def _compose(corner_a, corner_b, field):
    (p1, q1), (p2, q2) = corner_a, corner_b
    return mat_mul(p1, p2, field), mat_mul(q2, q1, field)


def _corner_closure(A: AssocPair, corner: int):
    f = A.field
    s = PLUS if corner == 1 else MINUS
    a, b = A.dim(s), A.dim(-s)
    width = a * a + b * b
    elim = Eliminator(width, f)
    ident = (identity(a, f), identity(b, f))
    gens = []
    keys = []
    elim.add_dense(flatten(ident[0]) + flatten(ident[1]))
    for i in range(A.dim_plus):
        for j in range(A.dim_minus):
            x, y = A.basis_vector(PLUS, i), A.basis_vector(MINUS, j)
            op = _operator_pair(A, corner, x, y) if corner == 1 else _operator_pair(A, corner, y, x)
            gens.append(op)
            keys.append((i, j))
            elim.add_dense(flatten(op[0]) + flatten(op[1]))
    # span closure under composition until the dimension stabilises
    while True:
        space = Subspace._from_eliminator(elim)
        ops = [
            (unflatten(v[: a * a], a, a), unflatten(v[a * a:], b, b)) for v in space.basis
        ]
        grew = False
        for u in ops:
            for w in ops:
                p, q = _compose(u, w, f)
                if elim.add_dense(flatten(p) + flatten(q)):
                    grew = True
        if not grew:
            break
    space = Subspace._from_eliminator(elim)
    gen_vecs = [flatten(ident[0]) + flatten(ident[1])] + [flatten(p) + flatten(q) for p, q in gens]

    elims = {}
    for with_unit in (True, False):
        vecs = gen_vecs if with_unit else gen_vecs[1:]
        el = Eliminator(len(vecs) + width, f)
        # rows of [G^T | I]: reducing a target against G's column space
        for idx, g in enumerate(vecs):
            row = {width + idx: f.one}
            row.update({r: x for r, x in enumerate(g) if x})
            el.add(row)
        elims[with_unit] = (el, len(vecs))

    def solver(target, with_unit=True):
        el, count = elims[with_unit]
        # find coefficients c with sum c_g g = target: reduce (target | 0)
        rem = el.reduce({r: x for r, x in enumerate(target) if x})
        if any(c < width for c in rem):
            return None
        coeffs = [f.zero] * count
        for c, v in rem.items():
            coeffs[c - width] = -v
        return tuple(coeffs)

    return space, (a, b), keys, solver


@lru_cache(maxsize=128)
def build_standard_imbedding(A: AssocPair) -> Imbedding:
    ok = check_pair_axioms(A)
    if not ok:
        raise AxiomError("pair axioms fail", ok.witness)
    f = A.field
    corners = {}
    generators = {}
    for corner in (1, 2):
        space, shape, keys, solver = _corner_closure(A, corner)
        corners[corner] = (space, shape)
        generators[corner] = (keys, solver)
    n11, n22 = corners[1][0].dim, corners[2][0].dim
    dp, dm = A.dim_plus, A.dim_minus
    n = n11 + dp + dm + n22
    op, om, o22 = n11, n11 + dp, n11 + dp + dm

    def ops(corner):
        space, (a, b) = corners[corner]
        return [(unflatten(v[: a * a], a, a), unflatten(v[a * a:], b, b)) for v in space.basis]

    ops11, ops22 = ops(1), ops(2)

    def corner_coords(corner, pq):
        space, _ = corners[corner]
        try:
            return space.coordinates(flatten(pq[0]) + flatten(pq[1]))
        except ValueError:
            raise InvariantViolation("corner closure is not multiplicatively closed") from None

    table = {}

    def put(i, j, off, coords):
        terms = tuple((off + k, v) for k, v in enumerate(coords) if v)
        if terms:
            table[(i, j)] = terms

    bp = [A.basis_vector(PLUS, i) for i in range(dp)]
    bm = [A.basis_vector(MINUS, j) for j in range(dm)]
    for i, u in enumerate(ops11):
        for j, w in enumerate(ops11):
            put(i, j, 0, corner_coords(1, _compose(u, w, f)))
        for k, x in enumerate(bp):
            put(i, op + k, op, mat_vec(u[0], x, f))
    for i, u in enumerate(ops22):
        for j, w in enumerate(ops22):
            put(o22 + i, o22 + j, o22, corner_coords(2, _compose(u, w, f)))
        for k, y in enumerate(bm):
            put(o22 + i, om + k, om, mat_vec(u[0], y, f))
    for k, x in enumerate(bp):
        for j, w in enumerate(ops22):
            put(op + k, o22 + j, op, mat_vec(w[1], x, f))
        for l, y in enumerate(bm):
            put(op + k, om + l, 0, corner_coords(1, _operator_pair(A, 1, x, y)))
    for k, y in enumerate(bm):
        for j, u in enumerate(ops11):
            put(om + k, j, om, mat_vec(u[1], y, f))
        for l, x in enumerate(bp):
            put(om + k, op + l, o22, corner_coords(2, _operator_pair(A, 2, y, x)))

    E = StructureAlgebra(f, n, table)
    emb = Imbedding(A, E, corners, generators)
    unit = tuple(a + b for a, b in zip(emb.e1, emb.e2))
    emb.algebra = StructureAlgebra(f, n, table, unit)
    return emb


def extract_pair(E: StructureAlgebra, e) -> AssocPair:
    pair, _ = extract_pair_with_peirce(E, e)
    return pair


def extract_pair_with_peirce(E: StructureAlgebra, e):
    """Pair (E12, E21) with products computed in E, plus the decomposition used."""
    dec = peirce_decompose(E, e)
    f = E.field
    tables = {PLUS: {}, MINUS: {}}
    comps = {PLUS: dec.e12, MINUS: dec.e21}
    for s in SIGNS:
        S, T = comps[s], comps[-s]
        for i, x in enumerate(S.basis):
            for j, y in enumerate(T.basis):
                xy = E.mul(x, y)
                for k, z in enumerate(S.basis):
                    coords = S.coordinates(E.mul(xy, z))
                    terms = tuple((l, v) for l, v in enumerate(coords) if v)
                    if terms:
                        tables[s][(i, j, k)] = terms
    return AssocPair(f, dec.e12.dim, dec.e21.dim, tables), dec


class RoundTrip(NamedTuple):
    ok: bool
    phi_plus: tuple
    phi_minus: tuple
    witness: Optional[tuple]


def verify_round_trip(A: AssocPair) -> RoundTrip:
    """extract_pair(build(A), e1) is isomorphic to A through the embedding maps."""
    emb = build_standard_imbedding(A)
    B, dec = extract_pair_with_peirce(emb.algebra, emb.e1)
    phis = {}
    for s, comp in ((PLUS, dec.e12), (MINUS, dec.e21)):
        cols = [comp.coordinates(emb.embed(PairElement.basis(A, s, i))) for i in range(A.dim(s))]
        phis[s] = tuple(tuple(c[r] for c in cols) for r in range(comp.dim)) if cols else ()
    res = is_pair_isomorphism(A, B, phis[PLUS], phis[MINUS])
    return RoundTrip(res.ok, phis[PLUS], phis[MINUS], res.witness)


# --- ideals across the imbedding -------------------------------------------

def lift_ideal(emb: Imbedding, I: PairIdeal) -> AlgebraIdeal:
    """(I+A- + A+I-) + I+ + I- + (I-A+ + A-I+)."""
    E = emb.algebra
    A = emb.pair
    vecs = []
    ip = [emb.embed_plus(v) for v in I.plus.basis]
    im = [emb.embed_minus(v) for v in I.minus.basis]
    ap = [emb.embed(PairElement.basis(A, PLUS, i)) for i in range(A.dim_plus)]
    am = [emb.embed(PairElement.basis(A, MINUS, j)) for j in range(A.dim_minus)]
    vecs += ip + im
    vecs += [E.mul(x, y) for x in ip for y in am]
    vecs += [E.mul(x, y) for x in ap for y in im]
    vecs += [E.mul(y, x) for y in im for x in ap]
    vecs += [E.mul(y, x) for y in am for x in ip]
    return AlgebraIdeal(E, Subspace.span(E.field, E.dim, vecs))


def restrict_ideal(emb: Imbedding, J: AlgebraIdeal) -> PairIdeal:
    A = emb.pair
    comps = {}
    for s, P in ((PLUS, emb.peirce.e12), (MINUS, emb.peirce.e21)):
        meet = J.space & P
        comps[s] = Subspace.span(A.field, A.dim(s), [emb.block(v, s) for v in meet.basis])
    return PairIdeal(A, comps[PLUS], comps[MINUS])


def envelope(emb: Imbedding) -> AlgebraIdeal:
    """Ideal of E generated by the odd part A+ + A-."""
    A = emb.pair
    seeds = [emb.embed(PairElement.basis(A, s, i)) for s in SIGNS for i in range(A.dim(s))]
    return generate_ideal(emb.algebra, seeds)


# --- regularity through the imbedding --------------------------------------

@lru_cache(maxsize=128)
def pair_regularity(A: AssocPair) -> RegularityProfile:
    return regularity_profile(build_standard_imbedding(A).algebra)


def is_semiprime(A: AssocPair) -> bool:
    return pair_regularity(A).semiprime


def is_prime(A: AssocPair) -> Optional[bool]:
    return pair_regularity(A).prime


def require_semiprime(A: AssocPair, what: str):
    if not is_semiprime(A):
        raise PreconditionError(f"{what} needs a semiprime pair")


def require_prime(A: AssocPair, what: str):
    p = is_prime(A)
    if p is None:
        raise PreconditionError(f"{what}: primeness test inconclusive")
    if not p:
        raise PreconditionError(f"{what} needs a prime pair")


def peirce_annihilators(emb: Imbedding) -> dict:
    """Dimensions of {x11 : x11 E12 = 0}, {x11 : E21 x11 = 0} and their meet; same for E22."""
    E = emb.algebra
    out = {}
    for corner, right_part, left_part in ((11, PLUS, MINUS), (22, MINUS, PLUS)):
        idx = range(emb.offset[corner], emb.offset[corner] + (emb.n11 if corner == 11 else emb.n22))
        idx = list(idx)
        rp = [E.basis_vector(emb.offset[right_part] + i) for i in range(emb.pair.dim(right_part))]
        lp = [E.basis_vector(emb.offset[left_part] + i) for i in range(emb.pair.dim(left_part))]

        def rows_for(products):
            rows = []
            for prod in products:
                vecs = [prod(E.basis_vector(c)) for c in idx]
                for r in range(E.dim):
                    row = {a: v[r] for a, v in enumerate(vecs) if v[r]}
                    if row:
                        rows.append(row)
            return rows

        right_rows = rows_for([lambda x, b=b: E.mul(x, b) for b in rp])
        left_rows = rows_for([lambda x, b=b: E.mul(b, x) for b in lp])
        n = len(idx)
        out[corner] = (
            kernel_sparse(right_rows, n, E.field).dim,
            kernel_sparse(left_rows, n, E.field).dim,
            kernel_sparse(right_rows + left_rows, n, E.field).dim,
        )
    return out


# --- local algebras across the imbedding -----------------------------------

class LocalTransfer(NamedTuple):
    ok: bool
    pair_dim: int
    algebra_dim: int
    matrix: tuple
    witness: Optional[tuple]


def verify_local_transfer(A: AssocPair, a: PairElement) -> LocalTransfer:
    """A^s_a is isomorphic to E_a through the inclusion A^s -> E."""
    emb = build_standard_imbedding(A)
    La, qa = local_algebra(A, a)
    Ea, qe = algebra_local(emb.algebra, emb.embed(a))
    s = -a.sign
    cols = []
    for i in range(La.dim):
        x = PairElement(s, qa.lift(La.basis_vector(i)))
        cols.append(qe.project(emb.embed(x)))
    mat = tuple(tuple(c[r] for c in cols) for r in range(Ea.dim)) if cols else ()
    if La.dim != Ea.dim or (La.dim and rank(mat, A.field) != La.dim):
        return LocalTransfer(False, La.dim, Ea.dim, mat, ("not bijective",))
    for i in range(La.dim):
        for j in range(La.dim):
            lhs = mat_vec(mat, La.mul(La.basis_vector(i), La.basis_vector(j)), A.field)
            rhs = Ea.mul(cols[i], cols[j])
            if lhs != rhs:
                return LocalTransfer(False, La.dim, Ea.dim, mat, (i, j))
    return LocalTransfer(True, La.dim, Ea.dim, mat, None)
