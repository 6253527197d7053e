"""Named example pairs with their canonical bases and extras."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .fields import QQ
from .involutions import Involution
from .pair import MINUS, PLUS, AssocPair, direct_sum
from .structure import PairModuleRep


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pair: AssocPair
    involution: Optional[Involution] = None
    module: Optional[PairModuleRep] = None


def _permutation_matrix(perm, f):
    n = len(perm)
    return tuple(tuple(f.one if perm[c] == r else f.zero for c in range(n)) for r in range(n))


def _diagonal(values, f):
    n = len(values)
    return tuple(tuple(f(values[r]) if r == c else f.zero for c in range(n)) for r in range(n))


def rect_pair(p: int, q: int, field=QQ) -> AssocPair:
    """A+ = p x q matrices, A- = q x p matrices, row-major matrix units, <x y z> = x y z."""
    one = field.one
    plus, minus = {}, {}
    for a in range(p):
        for b in range(q):
            for d in range(p):
                for e in range(q):
                    plus[(a * q + b, b * p + d, d * q + e)] = ((a * q + e, one),)
    for a in range(q):
        for b in range(p):
            for d in range(q):
                for e in range(p):
                    minus[(a * p + b, b * q + d, d * p + e)] = ((a * p + e, one),)
    return AssocPair(field, p * q, q * p, {PLUS: plus, MINUS: minus})


def rect_module(A: AssocPair, p: int, q: int) -> PairModuleRep:
    """Row vectors: F^p . (p x q) lands in F^q and F^q . (q x p) lands in F^p."""
    one = A.field.one
    act_minus = {(a, a * q + b): ((b, one),) for a in range(p) for b in range(q)}
    act_plus = {(b, b * p + d): ((d, one),) for b in range(q) for d in range(p)}
    return PairModuleRep(A, q, p, {PLUS: act_plus, MINUS: act_minus}, 1)


def transpose_involution(p: int, field=QQ) -> Involution:
    perm = [(i % p) * p + i // p for i in range(p * p)]
    m = _permutation_matrix(perm, field)
    return Involution(m, m)


def zero_pair(d: int, field=QQ) -> AssocPair:
    return AssocPair(field, d, d, {PLUS: {}, MINUS: {}})


def split_pair(k: int, field=QQ) -> AssocPair:
    return direct_sum(*[rect_pair(1, 1, field) for _ in range(k)])


def reversal_involution(k: int, field=QQ) -> Involution:
    m = _permutation_matrix([k - 1 - i for i in range(k)], field)
    return Involution(m, m)


# complex multiplication on the basis (1, i)
_GAUSS = {(0, 0): (0, 1), (0, 1): (1, 1), (1, 0): (1, 1), (1, 1): (0, -1)}


def gauss_pair() -> AssocPair:
    """Q(i) on both components over Q, <x y z> = x y z."""
    f = QQ
    table = {}
    for i in range(2):
        for j in range(2):
            a, s1 = _GAUSS[(i, j)]
            for k in range(2):
                b, s2 = _GAUSS[(a, k)]
                table[(i, j, k)] = ((b, f(s1 * s2)),)
    return AssocPair(f, 2, 2, {PLUS: table, MINUS: dict(table)})


def gauss_module(A: AssocPair) -> PairModuleRep:
    act = {(i, j): ((k, A.field(s)),) for (i, j), (k, s) in _GAUSS.items()}
    return PairModuleRep(A, 2, 2, {PLUS: act, MINUS: dict(act)}, 2)


def conjugation_involution() -> Involution:
    m = _diagonal([1, -1], QQ)
    return Involution(m, m)


_NAME = re.compile(r"^\s*([a-z]+)\s*(?:\(\s*([0-9\s,]*)\))?\s*$")

CATALOG_NAMES = ("rect", "zero", "split", "gauss")


def parse_catalog_name(text: str) -> tuple:
    m = _NAME.match(text)
    if not m:
        raise ParseError(f"bad catalog name {text!r}")
    name, args = m.group(1), m.group(2)
    params = ()
    if args is not None and args.strip():
        try:
            params = tuple(int(x) for x in args.split(","))
        except ValueError:
            raise ParseError(f"bad catalog parameters in {text!r}") from None
    return name, params


def catalog_pair(name: str, params: tuple = ()) -> CatalogEntry:
    """rect(p,q), zero(d), split(k) or gauss; ``name`` may also carry its parameters."""
    if "(" in name and not params:
        name, params = parse_catalog_name(name)
    params = tuple(params)

    def need(n):
        if len(params) != n or any(p < 1 for p in params):
            raise ParseError(f"{name} takes {n} positive integer parameter(s), got {params}")

    if name == "rect":
        need(2)
        p, q = params
        A = rect_pair(p, q)
        inv = transpose_involution(p) if p == q else None
        return CatalogEntry(f"rect({p},{q})", A, inv, rect_module(A, p, q))
    if name == "zero":
        need(1)
        A = zero_pair(params[0])
        return CatalogEntry(f"zero({params[0]})", A, Involution.identity(A), None)
    if name == "split":
        need(1)
        k = params[0]
        return CatalogEntry(f"split({k})", split_pair(k), reversal_involution(k), None)
    if name == "gauss":
        if params:
            raise ParseError("gauss takes no parameters")
        A = gauss_pair()
        return CatalogEntry("gauss", A, conjugation_involution(), gauss_module(A))
    raise ParseError(f"unknown catalog pair {name!r}; known: {', '.join(CATALOG_NAMES)}")


STANDARD_CATALOG = ("rect(1,1)", "rect(1,2)", "rect(2,2)", "rect(2,3)", "zero(1)", "split(2)", "gauss")
