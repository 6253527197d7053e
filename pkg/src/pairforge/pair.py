"""Associative pairs by structure constants.

A pair has components A+ (dimension ``dim_plus``) and A- (``dim_minus``) and
trilinear products A^s x A^-s x A^s -> A^s.  ``tables[s]`` maps a basis
triple ``(i, j, k)`` to the sparse output ``((l, value), ...)``.

Axiom convention: <<x y z> u v> = <x <y z u> v> = <x y <z u v>> with
x, z, v in A^s and y, u in A^-s, for both signs.  Witness indices are
0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .algebra import CheckResult, StructureAlgebra, quotient_algebra
from .errors import FieldMismatchError, PreconditionError
from .linalg import Eliminator, Subspace, kernel_sparse

PLUS = 1
MINUS = -1
SIGNS = (PLUS, MINUS)


def sign_name(s: int) -> str:
    return "+" if s == PLUS else "-"


class AssocPair:
    __slots__ = ("field", "dim_plus", "dim_minus", "tables", "_by_ij")

    def __init__(self, field, dim_plus: int, dim_minus: int, tables: dict):
        self.field = field
        self.dim_plus = dim_plus
        self.dim_minus = dim_minus
        clean = {}
        for s in SIGNS:
            ds, dt = self.dim(s), self.dim(-s)
            out = {}
            for (i, j, k), terms in tables.get(s, {}).items():
                if not (0 <= i < ds and 0 <= j < dt and 0 <= k < ds):
                    raise ValueError(f"index ({i}, {j}, {k}) out of range for sign {sign_name(s)}")
                acc = {}
                for l, v in terms:
                    if not 0 <= l < ds:
                        raise ValueError(f"output index {l} out of range for sign {sign_name(s)}")
                    acc[l] = acc.get(l, field.zero) + field(v)
                row = tuple(sorted((l, v) for l, v in acc.items() if v))
                if row:
                    out[(i, j, k)] = row
            clean[s] = out
        self.tables = clean
        self._by_ij = {s: {} for s in SIGNS}
        for s in SIGNS:
            for (i, j, k), terms in sorted(clean[s].items()):
                self._by_ij[s].setdefault((i, j), []).append((k, terms))

    def dim(self, sign: int) -> int:
        return self.dim_plus if sign == PLUS else self.dim_minus

    @property
    def dims(self) -> tuple:
        return (self.dim_plus, self.dim_minus)

    def zero(self, sign: int) -> tuple:
        return (self.field.zero,) * self.dim(sign)

    def basis_vector(self, sign: int, i: int) -> tuple:
        v = [self.field.zero] * self.dim(sign)
        v[i] = self.field.one
        return tuple(v)

    def triple(self, sign: int, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        """<x y z> for x, z in A^sign and y in A^-sign (dense coordinates)."""
        out = [self.field.zero] * self.dim(sign)
        by_ij = self._by_ij[sign]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                entries = by_ij.get((i, j))
                if not entries:
                    continue
                ab = a * b
                for k, terms in entries:
                    c = z[k]
                    if c:
                        abc = ab * c
                        for l, v in terms:
                            out[l] += abc * v
        return tuple(out)

    def basis_triple(self, sign: int, i: int, j: int, k: int) -> dict:
        return dict(self.tables[sign].get((i, j, k), ()))

    def is_zero_product(self) -> bool:
        return not self.tables[PLUS] and not self.tables[MINUS]

    def __eq__(self, other):
        return (
            isinstance(other, AssocPair)
            and self.field == other.field
            and self.dims == other.dims
            and self.tables == other.tables
        )

    def __hash__(self):
        return hash((self.field, self.dims, tuple(sorted(self.tables[PLUS].items()))))

    def __repr__(self):
        return f"AssocPair(dims=({self.dim_plus}, {self.dim_minus}), field={self.field})"

    def __reduce__(self):
        return (AssocPair, (self.field, self.dim_plus, self.dim_minus, self.tables))


@dataclass(frozen=True)
class PairElement:
    sign: int
    coords: tuple

    def __post_init__(self):
        if self.sign not in SIGNS:
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def basis(cls, A: AssocPair, sign: int, i: int) -> "PairElement":
        return cls(sign, A.basis_vector(sign, i))

    @classmethod
    def of(cls, A: AssocPair, sign: int, coords) -> "PairElement":
        coords = tuple(A.field(c) for c in coords)
        if len(coords) != A.dim(sign):
            raise ValueError(
                f"expected {A.dim(sign)} coordinates for A{sign_name(sign)}, got {len(coords)}"
            )
        return cls(sign, coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "PairElement") -> "PairElement":
        if other.sign != self.sign:
            raise ValueError("cannot add elements of different components")
        return PairElement(self.sign, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __repr__(self):
        return f"PairElement({sign_name(self.sign)}, [{', '.join(map(str, self.coords))}])"


def triple_product(A: AssocPair, x: PairElement, y: PairElement, z: PairElement) -> PairElement:
    if not (x.sign == z.sign == -y.sign):
        raise ValueError("triple product needs signs (s, -s, s)")
    for e in (x, y, z):
        if len(e.coords) != A.dim(e.sign):
            raise ValueError("coordinate length does not match the component")
        for c in e.coords:
            if not A.field.contains(c) and not isinstance(c, int):
                raise FieldMismatchError(f"{c!r} is not an element of {A.field}")
    return PairElement(x.sign, A.triple(x.sign, x.coords, y.coords, z.coords))


# --- operator views ---------------------------------------------------------

def L_operator(A: AssocPair, x: PairElement, y: PairElement) -> tuple:
    """Matrix of z -> <x y z> on A^sign(x), column convention."""
    s = x.sign
    cols = [A.triple(s, x.coords, y.coords, A.basis_vector(s, k)) for k in range(A.dim(s))]
    return tuple(zip(*cols)) if cols else ()


def R_operator(A: AssocPair, y: PairElement, z: PairElement) -> tuple:
    """Matrix of x -> <x y z>."""
    s = z.sign
    cols = [A.triple(s, A.basis_vector(s, i), y.coords, z.coords) for i in range(A.dim(s))]
    return tuple(zip(*cols)) if cols else ()


def M_operator(A: AssocPair, x: PairElement, z: PairElement) -> tuple:
    """Matrix of y -> <x y z>, from A^-s to A^s."""
    s = x.sign
    cols = [A.triple(s, x.coords, A.basis_vector(-s, j), z.coords) for j in range(A.dim(-s))]
    if not cols:
        return tuple(() for _ in range(A.dim(s)))
    return tuple(zip(*cols))


# --- axioms -----------------------------------------------------------------

def _sparse_triple(A, sign, x: dict, y: dict, z: dict) -> dict:
    out = {}
    tab = A.tables[sign]
    for i, a in x.items():
        for j, b in y.items():
            for k, c in z.items():
                terms = tab.get((i, j, k))
                if terms:
                    abc = a * b * c
                    for l, v in terms:
                        out[l] = out.get(l, A.field.zero) + abc * v
    return {l: v for l, v in out.items() if v}


def check_pair_axioms(A: AssocPair) -> CheckResult:
    """Both five-variable identities on all basis tuples.

    The witness is ``(sign, (i, j, k, l, m))`` for the first failing basis
    tuple in (sign, lexicographic) order, with sign +1 before -1.
    """
    one = A.field.one
    for s in SIGNS:
        ds, dt = A.dim(s), A.dim(-s)
        inner_s = {}
        inner_t = {}
        for i in range(ds):
            for j in range(dt):
                for k in range(ds):
                    inner_s[i, j, k] = A.basis_triple(s, i, j, k)
        for j in range(dt):
            for k in range(ds):
                for l in range(dt):
                    inner_t[j, k, l] = A.basis_triple(-s, j, k, l)
        for i in range(ds):
            ei = {i: one}
            for j in range(dt):
                ej = {j: one}
                for k in range(ds):
                    left_in = inner_s[i, j, k]
                    for l in range(dt):
                        el = {l: one}
                        mid_in = inner_t[j, k, l]
                        for m in range(ds):
                            em = {m: one}
                            lhs = _sparse_triple(A, s, left_in, el, em) if left_in else {}
                            mid = _sparse_triple(A, s, ei, mid_in, em) if mid_in else {}
                            if lhs != mid:
                                return CheckResult(False, (s, (i, j, k, l, m)))
                            right_in = inner_s[k, l, m]
                            rgt = _sparse_triple(A, s, ei, ej, right_in) if right_in else {}
                            if mid != rgt:
                                return CheckResult(False, (s, (i, j, k, l, m)))
    return CheckResult(True, None)


# --- ideals -----------------------------------------------------------------

@dataclass(frozen=True)
class PairIdeal:
    parent: AssocPair
    plus: Subspace
    minus: Subspace

    def component(self, sign: int) -> Subspace:
        return self.plus if sign == PLUS else self.minus

    @property
    def dims(self) -> tuple:
        return (self.plus.dim, self.minus.dim)

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def is_whole(self) -> bool:
        return self.plus.is_full() and self.minus.is_full()

    def contains(self, x: PairElement) -> bool:
        return self.component(x.sign).contains(x.coords)

    def __le__(self, other: "PairIdeal") -> bool:
        return self.plus <= other.plus and self.minus <= other.minus

    def __eq__(self, other):
        if not isinstance(other, PairIdeal):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self):
        return hash((self.plus.basis, self.minus.basis))

    def __repr__(self):
        return f"PairIdeal(dims={self.dims})"


def zero_ideal(A: AssocPair) -> PairIdeal:
    return PairIdeal(A, Subspace.zero(A.field, A.dim_plus), Subspace.zero(A.field, A.dim_minus))


def whole_ideal(A: AssocPair) -> PairIdeal:
    return PairIdeal(A, Subspace.full(A.field, A.dim_plus), Subspace.full(A.field, A.dim_minus))


def _ideal_consequences(A: AssocPair, sign: int, v: tuple):
    """Products that must lie in the ideal once v lies in I^sign."""
    s = sign
    bs = [A.basis_vector(s, i) for i in range(A.dim(s))]
    bt = [A.basis_vector(-s, j) for j in range(A.dim(-s))]
    for a in bs:
        for b in bt:
            yield s, A.triple(s, a, b, v)
            yield s, A.triple(s, v, b, a)
    for a in bt:
        for c in bt:
            yield -s, A.triple(-s, a, v, c)


def ideal_generate(A: AssocPair, seeds: Iterable[PairElement]) -> PairIdeal:
    elims = {s: Eliminator(A.dim(s), A.field) for s in SIGNS}
    queue = []
    for x in seeds:
        coords = tuple(A.field(c) for c in x.coords)
        if elims[x.sign].add_dense(coords):
            queue.append((x.sign, coords))
    while queue:
        s, v = queue.pop()
        for t, w in _ideal_consequences(A, s, v):
            if any(w) and elims[t].add_dense(w):
                queue.append((t, w))
    return PairIdeal(
        A, Subspace._from_eliminator(elims[PLUS]), Subspace._from_eliminator(elims[MINUS])
    )


def ideal_from_subspaces(A: AssocPair, plus: Subspace, minus: Subspace) -> PairIdeal:
    seeds = [PairElement(PLUS, b) for b in plus.basis] + [PairElement(MINUS, b) for b in minus.basis]
    return ideal_generate(A, seeds)


def is_pair_ideal(I: PairIdeal) -> bool:
    A = I.parent
    for s in SIGNS:
        for v in I.component(s).basis:
            for t, w in _ideal_consequences(A, s, v):
                if not I.component(t).contains(w):
                    return False
    return True


def ideal_sum(I: PairIdeal, J: PairIdeal) -> PairIdeal:
    return PairIdeal(I.parent, I.plus + J.plus, I.minus + J.minus)


def ideal_intersection(I: PairIdeal, J: PairIdeal) -> PairIdeal:
    return PairIdeal(I.parent, I.plus & J.plus, I.minus & J.minus)


def sandwich_vanishes(A: AssocPair, I: PairIdeal, J: PairIdeal) -> bool:
    """I^s A^-s J^s = 0 for both signs."""
    for s in SIGNS:
        for u in I.component(s).basis:
            for j in range(A.dim(-s)):
                b = A.basis_vector(-s, j)
                for v in J.component(s).basis:
                    if any(A.triple(s, u, b, v)):
                        return False
    return True


def annihilator(A: AssocPair, I: PairIdeal) -> PairIdeal:
    """ann(I)^s = elements b of A^s killed from every side by I^-s.

    Uses the general left/right annihilator conditions, which need no
    semiprimeness: b X A^s = A^-s b X = X b A^-s = A^s X b = 0 with X = I^-s.
    """
    comps = {}
    for s in SIGNS:
        ds = A.dim(s)
        X = I.component(-s).basis
        rows = []
        bs = [A.basis_vector(s, i) for i in range(ds)]
        bt = [A.basis_vector(-s, j) for j in range(A.dim(-s))]
        images = []  # one list of output vectors per unknown b_i
        for i in range(ds):
            b = bs[i]
            outs = []
            for x in X:
                for a in bs:
                    outs.append(A.triple(s, b, x, a))
                    outs.append(A.triple(s, a, x, b))
                for c in bt:
                    outs.append(A.triple(-s, c, b, x))
                    outs.append(A.triple(-s, x, b, c))
            images.append(outs)
        if images and images[0]:
            for r in range(len(images[0])):
                width = len(images[0][r])
                for l in range(width):
                    row = {i: images[i][r][l] for i in range(ds) if images[i][r][l]}
                    if row:
                        rows.append(row)
        comps[s] = kernel_sparse(rows, ds, A.field)
    return PairIdeal(A, comps[PLUS], comps[MINUS])


def is_essential(A: AssocPair, I: PairIdeal) -> bool:
    from .imbedding import pair_regularity

    if not pair_regularity(A).semiprime:
        raise PreconditionError("essentiality via annihilators needs a semiprime pair")
    return annihilator(A, I).is_zero()


# --- homotopes and local algebras ------------------------------------------

def homotope_algebra(A: AssocPair, a: PairElement) -> StructureAlgebra:
    """Algebra on A^s with x . y = <x a y>, for a in A^-s."""
    s = -a.sign
    table = {}
    n = A.dim(s)
    for i in range(n):
        ei = A.basis_vector(s, i)
        for j in range(n):
            p = A.triple(s, ei, a.coords, A.basis_vector(s, j))
            terms = tuple((k, v) for k, v in enumerate(p) if v)
            if terms:
                table[(i, j)] = terms
    return StructureAlgebra(A.field, n, table)


def kernel_of(A: AssocPair, a: PairElement) -> Subspace:
    """Ker a = {x in A^s : <a x a> = 0}, linear in x."""
    s = -a.sign
    cols = [A.triple(a.sign, a.coords, A.basis_vector(s, j), a.coords) for j in range(A.dim(s))]
    rows = []
    for k in range(A.dim(a.sign)):
        row = {j: col[k] for j, col in enumerate(cols) if col[k]}
        if row:
            rows.append(row)
    return kernel_sparse(rows, A.dim(s), A.field)


def local_algebra(A: AssocPair, a: PairElement):
    """``(A^s_a, QuotientMap)``: the a-homotope modulo Ker a."""
    return quotient_algebra(homotope_algebra(A, a), kernel_of(A, a))


# --- nondegeneracy ----------------------------------------------------------

def _small_combinations(dim: int, field, max_terms: int = 3):
    for r in range(1, max_terms + 1):
        for idx in combinations(range(dim), r):
            v = [field.zero] * dim
            for i in idx:
                v[i] = field.one
            yield tuple(v)


def degenerate_witness(A: AssocPair) -> Optional[PairElement]:
    """A readable nonzero a with <a A^-s a> = 0, searched over sums of <= 3 basis vectors.

    Only a witness finder: the authoritative semiprimeness answer comes from
    the radical of the standard imbedding.
    """
    for s in SIGNS:
        bt = [A.basis_vector(-s, j) for j in range(A.dim(-s))]
        for v in _small_combinations(A.dim(s), A.field):
            if not any(any(A.triple(s, v, b, v)) for b in bt):
                return PairElement(s, v)
    return None


# --- morphisms --------------------------------------------------------------

def is_pair_homomorphism(A: AssocPair, B: AssocPair, phi_plus, phi_minus) -> CheckResult:
    """phi(<x y z>) = <phi x, phi y, phi z> on basis triples; matrices act on columns."""
    from .linalg import mat_vec

    phis = {PLUS: phi_plus, MINUS: phi_minus}
    imgs = {
        s: [mat_vec(phis[s], A.basis_vector(s, i), A.field) for i in range(A.dim(s))]
        for s in SIGNS
    }
    for s in SIGNS:
        for i in range(A.dim(s)):
            for j in range(A.dim(-s)):
                for k in range(A.dim(s)):
                    lhs = mat_vec(phis[s], A.triple(s, A.basis_vector(s, i), A.basis_vector(-s, j),
                                                    A.basis_vector(s, k)), A.field)
                    rhs = B.triple(s, imgs[s][i], imgs[-s][j], imgs[s][k])
                    if lhs != rhs:
                        return CheckResult(False, (s, (i, j, k)))
    return CheckResult(True, None)


def is_pair_isomorphism(A: AssocPair, B: AssocPair, phi_plus, phi_minus) -> CheckResult:
    from .linalg import rank

    if A.dims != B.dims:
        return CheckResult(False, ("dims", A.dims, B.dims))
    for s, phi in ((PLUS, phi_plus), (MINUS, phi_minus)):
        if A.dim(s) and rank(phi, A.field) != A.dim(s):
            return CheckResult(False, ("singular", s))
    return is_pair_homomorphism(A, B, phi_plus, phi_minus)


def direct_sum(*pairs: AssocPair) -> AssocPair:
    if not pairs:
        raise ValueError("direct_sum needs at least one pair")
    field = pairs[0].field
    tables = {PLUS: {}, MINUS: {}}
    off = {PLUS: 0, MINUS: 0}
    for P in pairs:
        if P.field != field:
            raise FieldMismatchError("direct summands over different fields")
        for s in SIGNS:
            o, t = off[s], off[-s]
            for (i, j, k), terms in P.tables[s].items():
                tables[s][(i + o, j + t, k + o)] = tuple((l + o, v) for l, v in terms)
        off = {s: off[s] + P.dim(s) for s in SIGNS}
    return AssocPair(field, off[PLUS], off[MINUS], tables)
