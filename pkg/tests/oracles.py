"""Independent brute-force references used by the tests."""

from itertools import product

import numpy as np

from pairforge.pair import MINUS, PLUS, SIGNS, AssocPair
from pairforge.fields import QQ


def dense_tensor(A, s):
    ds, dt = A.dim(s), A.dim(-s)
    T = np.zeros((ds, dt, ds, ds), dtype=np.int64)
    for (i, j, k), terms in A.tables[s].items():
        for l, v in terms:
            assert v.denominator == 1
            T[i, j, k, l] = int(v)
    return T


def dense_homotope_value(T, monomials, z, xs):
    out = np.zeros(T.shape[0], dtype=np.int64)
    for perm, c in monomials:
        v = xs[perm[0]]
        for p in perm[1:]:
            v = np.einsum("ijkl,i,j,k->l", T, v, z, xs[p])
        out += int(c) * v
    return out


def dense_identity_holds(A, f, values=(0, 1, -1)) -> bool:
    """f(z; x) = 0 for every z, x with coordinates in ``values``; exact for degree <= 3."""
    for s in SIGNS:
        ds, dt = A.dim(s), A.dim(-s)
        if ds == 0:
            continue
        T = dense_tensor(A, s)
        xgrid = [np.array(v, dtype=np.int64) for v in product(values, repeat=ds)]
        zgrid = [np.array(v, dtype=np.int64) for v in product(values, repeat=dt)]
        for z in zgrid:
            for xs in product(xgrid, repeat=f.arity):
                if np.any(dense_homotope_value(T, f.monomials, z, xs)):
                    return False
    return True


def algebra_pair(mult, n):
    """Pair (R, R) with <x y z> = xyz for an associative algebra R given by integer structure constants."""
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = {}
                for m, a in mult.get((i, j), {}).items():
                    for l, b in mult.get((m, k), {}).items():
                        acc[l] = acc.get(l, 0) + a * b
                terms = tuple((l, QQ(v)) for l, v in sorted(acc.items()) if v)
                if terms:
                    table[(i, j, k)] = terms
    return AssocPair(QQ, n, n, {PLUS: table, MINUS: dict(table)})


def dual_numbers_pair():
    # Q[t]/(t^2): basis 1, t
    return algebra_pair({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, 2)


def matrix_rank(rows):
    import sympy

    return sympy.Matrix(rows).rank() if rows and rows[0] else 0
