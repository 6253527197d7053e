"""Shared constructions for the tests."""

from fractions import Fraction

import sympy

from pairforge.fields import QQ
from pairforge.pair import MINUS, PLUS, SIGNS, AssocPair


def transport(A, P, Q):
    """Pair isomorphic to A through x -> P x on A+ and y -> Q y on A-, P and Q invertible integer matrices."""
    mats = {PLUS: sympy.Matrix(P), MINUS: sympy.Matrix(Q)}
    inv = {s: m.inv() for s, m in mats.items()}
    tables = {}
    for s in SIGNS:
        ds, dt = A.dim(s), A.dim(-s)
        out = {}
        for i in range(ds):
            x = [QQ(Fraction(int(c.p), int(c.q))) for c in inv[s][:, i]]
            for j in range(dt):
                y = [QQ(Fraction(int(c.p), int(c.q))) for c in inv[-s][:, j]]
                for k in range(ds):
                    z = [QQ(Fraction(int(c.p), int(c.q))) for c in inv[s][:, k]]
                    v = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in A.triple(s, x, y, z)])
                    w = mats[s] * v
                    terms = tuple((l, Fraction(int(c.p), int(c.q))) for l, c in enumerate(w) if c != 0)
                    if terms:
                        out[(i, j, k)] = terms
        tables[s] = out
    return AssocPair(A.field, A.dim_plus, A.dim_minus, tables)


def unimodular(n, seed):
    """Deterministic invertible integer matrix."""
    import random

    rng = random.Random(seed)
    m = sympy.eye(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            m[i, :] = m[i, :] + rng.choice([-2, -1, 1, 2]) * m[j, :]
    return m.tolist()
