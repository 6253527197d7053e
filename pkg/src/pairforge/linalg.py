"""Dense exact linear algebra over an arbitrary exact field.

Vectors are tuples of field elements, matrices are lists (or tuples) of rows.
All eliminations pivot on the leftmost available column, so every canonical
basis produced here is reproducible bit for bit.

The workhorse is :class:`Eliminator`, an incremental Gauss-Jordan reducer on
sparse rows (``dict`` column -> value).  Structure-constant equation systems
are extremely sparse, so this is far cheaper than dense elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class Eliminator:
    """Row space kept in fully reduced row echelon form at all times."""

    def __init__(self, ncols: int, field):
        self.ncols = ncols
        self.field = field
        self.rows: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        hits = [c for c in row if c in self.rows]
        for c in hits:
            coef = row.get(c)
            if not coef:
                continue
            for cc, vv in self.rows[c].items():
                nv = row.get(cc, 0) - coef * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it enlarged the row space."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = self.field.one / r[p]
        r = {c: v * inv for c, v in r.items()}
        for other in self.rows.values():
            coef = other.get(p)
            if coef:
                for cc, vv in r.items():
                    nv = other.get(cc, 0) - coef * vv
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        self.rows[p] = r
        return True

    def add_dense(self, vec: Sequence) -> bool:
        return self.add({i: v for i, v in enumerate(vec) if v})

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple:
        return tuple(sorted(self.rows))

    def dense_rows(self) -> tuple:
        zero = self.field.zero
        out = []
        for p in sorted(self.rows):
            vec = [zero] * self.ncols
            for c, v in self.rows[p].items():
                vec[c] = v
            out.append(tuple(vec))
        return tuple(out)

    def kernel_vectors(self) -> list:
        """Basis of {x : row . x = 0 for every stored row}, one per free column."""
        zero, one = self.field.zero, self.field.one
        free = [c for c in range(self.ncols) if c not in self.rows]
        out = []
        for f in free:
            vec = [zero] * self.ncols
            vec[f] = one
            for p, row in self.rows.items():
                v = row.get(f)
                if v:
                    vec[p] = -v
            out.append(tuple(vec))
        return out


def rref(rows: Iterable[Sequence], field, ncols: Optional[int] = None):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    elim = Eliminator(ncols, field)
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        elim.add_dense(r)
    return elim.dense_rows(), elim.pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its unique reduced echelon basis."""

    field: object
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        elim = Eliminator(ambient_dim, field)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in F^{ambient_dim}")
            elim.add_dense(v)
        return cls._from_eliminator(elim)

    @classmethod
    def _from_eliminator(cls, elim: Eliminator) -> "Subspace":
        return cls(elim.field, elim.ncols, elim.dense_rows(), elim.pivots)

    @classmethod
    def zero(cls, field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, identity(ambient_dim, field))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing the pivot columns."""
        v = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        v[i] = v[i] - c * bi
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the echelon basis; ValueError if outside."""
        if not self.contains(v):
            raise ValueError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def from_coordinates(self, coords: Sequence) -> tuple:
        out = [self.field.zero] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        out[i] += c * bi
        return tuple(out)

    def complement_columns(self) -> tuple:
        """Non-pivot columns; the matching unit vectors span a complement."""
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def quotient_coordinates(self, v: Sequence) -> tuple:
        r = self.reduce(v)
        return tuple(r[i] for i in self.complement_columns())

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient_dim)
        # x = sum a_i u_i = sum b_j w_j  <=>  (a, b) in ker [U^T | -W^T]
        k, m = self.dim, other.dim
        rows = []
        for i in range(self.ambient_dim):
            rows.append(
                tuple(u[i] for u in self.basis) + tuple(-w[i] for w in other.basis)
            )
        ker = kernel(rows, self.field, k + m)
        return Subspace.span(
            self.field,
            self.ambient_dim,
            [self.from_coordinates(vec[:k]) for vec in ker.basis],
        )

    __and__ = intersection

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces of different ambient spaces")

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class LinearSolution(NamedTuple):
    consistent: bool
    particular: Optional[tuple]
    kernel: Subspace


def kernel(matrix: Sequence[Sequence], field, ncols: Optional[int] = None) -> Subspace:
    """Solution space of ``matrix . x = 0`` as a canonical Subspace."""
    if ncols is None:
        if not matrix:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(matrix[0])
    elim = Eliminator(ncols, field)
    for r in matrix:
        elim.add_dense([field(x) for x in r])
    return Subspace.span(field, ncols, elim.kernel_vectors())


def kernel_sparse(rows: Iterable[dict], ncols: int, field) -> Subspace:
    elim = Eliminator(ncols, field)
    for r in rows:
        elim.add(r)
    return Subspace.span(field, ncols, elim.kernel_vectors())


def solve_linear(matrix: Sequence[Sequence], rhs: Optional[Sequence], field,
                 ncols: Optional[int] = None):
    """Solve ``matrix . x = rhs`` exactly.

    With ``rhs=None`` the kernel Subspace is returned.  Otherwise a
    :class:`LinearSolution`; inconsistent systems come back with
    ``consistent=False`` rather than raising.  Free variables of the
    particular solution are set to zero.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(matrix[0])
    rows = [[field(x) for x in r] for r in matrix]
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    if rhs is None:
        return kernel(rows, field, ncols)
    if len(rhs) != len(rows):
        raise ValueError("right-hand side has the wrong length")
    rhs = [field(b) for b in rhs]
    elim = Eliminator(ncols + 1, field)
    for r, b in zip(rows, rhs):
        elim.add_dense(r + [b])
    ker = kernel(rows, field, ncols)
    if ncols in elim.rows:
        return LinearSolution(False, None, ker)
    x = [field.zero] * ncols
    for p, row in elim.rows.items():
        x[p] = row.get(ncols, field.zero)
    return LinearSolution(True, tuple(x), ker)


# --- small dense helpers ---------------------------------------------------

def identity(n: int, field) -> tuple:
    zero, one = field.zero, field.one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(r: int, c: int, field) -> tuple:
    return tuple((field.zero,) * c for _ in range(r))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], field) -> tuple:
    if not a:
        return ()
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * cols
        for k in range(inner):
            r = row[k]
            if r:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += r * bk[j]
        out.append(tuple(acc))
    return tuple(out)


def mat_vec(a: Sequence[Sequence], v: Sequence, field) -> tuple:
    out = []
    for row in a:
        acc = field.zero
        for x, y in zip(row, v):
            if x and y:
                acc += x * y
        out.append(acc)
    return tuple(out)


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a))


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a) -> tuple:
    return tuple(tuple(c * x for x in r) for r in a)


def rank(matrix: Sequence[Sequence], field) -> int:
    if not matrix:
        return 0
    elim = Eliminator(len(matrix[0]), field)
    for r in matrix:
        elim.add_dense(r)
    return elim.rank


def mat_inverse(a: Sequence[Sequence], field) -> tuple:
    n = len(a)
    elim = Eliminator(2 * n, field)
    idn = identity(n, field)
    for r, e in zip(a, idn):
        elim.add_dense(tuple(r) + e)
    if elim.pivots[:n] != tuple(range(n)) or elim.rank != n:
        raise ZeroDivisionError("matrix is singular")
    rows = elim.dense_rows()
    return tuple(r[n:] for r in rows)


def vec_add(x, y) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x) -> tuple:
    return tuple(c * a for a in x)


def flatten(m) -> tuple:
    return tuple(x for row in m for x in row)


def unflatten(v, rows: int, cols: int) -> tuple:
    return tuple(tuple(v[r * cols:(r + 1) * cols]) for r in range(rows))
