"""Multilinear polynomials evaluated in homotopes of a pair.

A homotope value f(z; x_1..x_n) replaces each monomial x_i1 x_i2 ... x_in by
<..<<x_i1 z x_i2> z x_i3> .. z x_in>.  It is linear in every x_i but has
degree n-1 in z, so checking basis values of z alone is not enough.  We
expand in z exactly: with z = sum_b c_b e_b every value is a polynomial in
the c_b, and we keep one vector per monomial, i.e. per multiset of z-basis
indices.  f is a homotope identity iff all these coefficient vectors vanish
for every basis substitution of the x_i.

For standard polynomials we use alternation (only strictly increasing
x-tuples matter) and a subset dynamic programme that shares prefixes across
all n! monomials.  Everything else runs through a prefix trie.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import NamedTuple, Optional, Sequence

from .algebra import algebra_local, min_standard_degree
from .errors import BudgetExceeded, PreconditionError
from .linalg import Subspace
from .pair import SIGNS, AssocPair, PairElement, local_algebra

DEFAULT_BUDGET = 10**7


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class MultilinearPoly:
    """Sum of coefficient * x_p(0) x_p(1) ... x_p(n-1) over permutations p (0-based)."""

    arity: int
    monomials: tuple

    def __post_init__(self):
        full = tuple(range(self.arity))
        for perm, _ in self.monomials:
            if tuple(sorted(perm)) != full:
                raise ValueError(f"monomial {perm} is not multilinear of arity {self.arity}")

    @classmethod
    def from_terms(cls, arity: int, terms) -> "MultilinearPoly":
        acc = {}
        for perm, c in terms:
            perm = tuple(perm)
            acc[perm] = acc.get(perm, 0) + c
        return cls(arity, tuple(sorted((p, c) for p, c in acc.items() if c)))

    def is_monic(self) -> bool:
        return any(c == 1 for _, c in self.monomials)

    @property
    def is_standard(self) -> bool:
        if len(self.monomials) != factorial(self.arity):
            return False
        return all(c == _perm_sign(p) for p, c in self.monomials)

    def __str__(self):
        if not self.monomials:
            return "0"
        parts = []
        for perm, c in self.monomials:
            mono = "".join(f"x{i + 1}" for i in perm)
            if c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            else:
                s = str(c)
                parts.append(f"- {s[1:]}*{mono}" if s.startswith("-") else f"+ {s}*{mono}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def standard_identity(n: int) -> MultilinearPoly:
    if n < 1:
        raise ValueError("standard polynomials need n >= 1")
    return MultilinearPoly(n, tuple((p, _perm_sign(p)) for p in permutations(range(n))))


@dataclass(frozen=True)
class StarMultilinearPoly:
    """Monomials are sequences of (variable, starred) using each variable once."""

    arity: int
    monomials: tuple

    def __post_init__(self):
        full = list(range(self.arity))
        for word, _ in self.monomials:
            if sorted(v for v, _ in word) != full:
                raise ValueError(f"monomial {word} is not multilinear of arity {self.arity}")

    @classmethod
    def from_terms(cls, arity: int, terms) -> "StarMultilinearPoly":
        acc = {}
        for word, c in terms:
            word = tuple((int(v), bool(s)) for v, s in word)
            acc[word] = acc.get(word, 0) + c
        return cls(arity, tuple(sorted((w, c) for w, c in acc.items() if c)))

    @classmethod
    def from_poly(cls, f: MultilinearPoly) -> "StarMultilinearPoly":
        return cls(f.arity, tuple((tuple((v, False) for v in p), c) for p, c in f.monomials))

    def is_monic(self) -> bool:
        return any(c == 1 for _, c in self.monomials)


def symmetric_difference_poly() -> StarMultilinearPoly:
    """x1 - x1*, the degree-one *-identity of involutions that fix everything."""
    return StarMultilinearPoly.from_terms(1, [(((0, False),), 1), (((0, True),), -1)])


# --- evaluation -------------------------------------------------------------

def _check_signs(A: AssocPair, z: PairElement, args: Sequence[PairElement], arity: int):
    if len(args) != arity:
        raise ValueError(f"expected {arity} arguments, got {len(args)}")
    if not args:
        return
    s = args[0].sign
    if any(x.sign != s for x in args) or z.sign != -s:
        raise ValueError("homotope evaluation needs all arguments in A^s and z in A^-s")
    if len(z.coords) != A.dim(-s) or any(len(x.coords) != A.dim(s) for x in args):
        raise ValueError("coordinate length does not match the component")


def _eval_words(A: AssocPair, sign: int, z: tuple, words) -> tuple:
    out = [A.field.zero] * A.dim(sign)
    for leaves, c in words:
        v = leaves[0]
        for w in leaves[1:]:
            v = A.triple(sign, v, z, w)
        c = A.field(c)
        for i, x in enumerate(v):
            if x:
                out[i] += c * x
    return tuple(out)


def eval_homotope(A: AssocPair, f: MultilinearPoly, z: PairElement, args: Sequence[PairElement]) -> PairElement:
    _check_signs(A, z, args, f.arity)
    if not args:
        raise ValueError("arity must be at least 1")
    s = args[0].sign
    coords = [tuple(A.field(c) for c in x.coords) for x in args]
    words = [([coords[i] for i in perm], c) for perm, c in f.monomials]
    zc = tuple(A.field(c) for c in z.coords)
    return PairElement(s, _eval_words(A, s, zc, words))


def eval_star(A: AssocPair, inv, p: StarMultilinearPoly, z: PairElement, args: Sequence[PairElement]) -> PairElement:
    from .involutions import check_involution

    if not check_involution(A, inv).ok:
        raise PreconditionError("not an involution of this pair")
    _check_signs(A, z, args, p.arity)
    s = args[0].sign
    coords = [tuple(A.field(c) for c in x.coords) for x in args]
    starred = [inv.apply(s, c) for c in coords]
    words = [([starred[v] if st else coords[v] for v, st in word], c) for word, c in p.monomials]
    zc = tuple(A.field(c) for c in z.coords)
    return PairElement(s, _eval_words(A, s, zc, words))


# --- the exhaustive checker -------------------------------------------------

class HPIWitness(NamedTuple):
    sign: int
    args: tuple            # basis indices of x_1..x_n in A^sign
    z_multiset: tuple      # z-basis indices of the failing coefficient
    coefficient: tuple     # that coefficient vector
    z: Optional[tuple]     # a concrete z in A^-sign with f(z; x) != 0
    value: Optional[tuple]


class HPIResult(NamedTuple):
    holds: bool
    witness: Optional[HPIWitness]
    cost: int

    def __bool__(self):
        return self.holds


def _right_maps(A: AssocPair, sign: int):
    """(b, k) -> [(i, terms)] so that <v, e_b, e_k> = sum_i v_i terms_i."""
    out = {}
    for (i, b, k), terms in A.tables[sign].items():
        out.setdefault((b, k), []).append((i, terms))
    return out


def _multisets(dz: int, m: int) -> int:
    return comb(dz + m - 1, m) if dz else (1 if m == 0 else 0)


def estimate_cost(A: AssocPair, f, star: bool = False) -> int:
    """Triple products the exhaustive check performs (upper estimate)."""
    n = f.arity
    total = 0
    for s in SIGNS:
        dx, dz = A.dim(s), A.dim(-s)
        if dx == 0:
            continue
        if not star and isinstance(f, MultilinearPoly) and f.is_standard:
            per = sum(
                comb(n, k) * _multisets(dz, k - 1) * (n - k) * dz for k in range(1, n)
            )
            total += comb(dx, n) * per
        else:
            nodes = _trie_depth_counts(_words_of(f))
            per = sum(cnt * _multisets(dz, d - 2) * dz for d, cnt in nodes.items() if d >= 2)
            total += dx ** n * per
    return total


def _words_of(f):
    if isinstance(f, MultilinearPoly):
        return [(tuple((v, False) for v in p), c) for p, c in f.monomials]
    return list(f.monomials)


def _trie_depth_counts(words) -> dict:
    prefixes = set()
    for w, _ in words:
        for d in range(1, len(w) + 1):
            prefixes.add(w[:d])
    counts = {}
    for p in prefixes:
        counts[len(p)] = counts.get(len(p), 0) + 1
    return counts


def _add_into(target: dict, key, vec, coef, zero):
    cur = target.get(key)
    if cur is None:
        cur = [zero] * len(vec)
        target[key] = cur
    for l, x in enumerate(vec):
        if x:
            cur[l] += coef * x


def _standard_tuple(A: AssocPair, sign: int, T: tuple, rmaps) -> dict:
    """All z-coefficients of S_n(z; e_T) as {multiset: vector}."""
    n = len(T)
    dz = A.dim(-sign)
    zero = A.field.zero
    dx = A.dim(sign)
    levels = {}
    for k in range(n):
        v = [zero] * dx
        v[T[k]] = A.field.one
        levels[1 << k] = {(): v}
    full = (1 << n) - 1
    order = sorted(range(1, full + 1), key=lambda m: (bin(m).count("1"), m))
    for mask in order:
        if mask == full:
            break
        cur = levels.pop(mask, None)
        if not cur:
            continue
        for k in range(n):
            if mask >> k & 1:
                continue
            higher = bin(mask >> (k + 1)).count("1")
            coef = -1 if higher % 2 else 1
            dest = levels.setdefault(mask | (1 << k), {})
            xk = T[k]
            for M, v in cur.items():
                for b in range(dz):
                    entries = rmaps.get((b, xk))
                    if not entries:
                        continue
                    w = {}
                    for i, terms in entries:
                        vi = v[i]
                        if vi:
                            for l, t in terms:
                                w[l] = w.get(l, zero) + vi * t
                    if not any(w.values()):
                        continue
                    key = tuple(sorted(M + (b,)))
                    d = dest.get(key)
                    if d is None:
                        d = [zero] * dx
                        dest[key] = d
                    for l, x in w.items():
                        if coef == 1:
                            d[l] += x
                        else:
                            d[l] -= x
    return levels.get(full, {})


def _general_tuple(A: AssocPair, sign: int, words, leaves: list) -> dict:
    """z-coefficients of a (star-)multilinear f at fixed leaf vectors."""
    dz = A.dim(-sign)
    zero = A.field.zero
    result = {}
    cache = {}
    zb = [A.basis_vector(-sign, b) for b in range(dz)]
    for word, c in words:
        c = A.field(c)
        for d in range(1, len(word) + 1):
            pre = word[:d]
            if pre in cache:
                continue
            if d == 1:
                cache[pre] = {(): list(leaves[pre[0][0]][pre[0][1]])}
                continue
            parent = cache[word[:d - 1]]
            leaf = leaves[pre[-1][0]][pre[-1][1]]
            out = {}
            for M, v in parent.items():
                for b in range(dz):
                    w = A.triple(sign, v, zb[b], leaf)
                    if any(w):
                        _add_into(out, tuple(sorted(M + (b,))), w, 1, zero)
            cache[pre] = out
        for M, v in cache[word].items():
            _add_into(result, M, v, c, zero)
    return result


def _first_failure(vals: dict):
    for M in sorted(vals):
        if any(vals[M]):
            return M, tuple(vals[M])
    return None


def _scan(A: AssocPair, sign: int, f, tuples, inv=None):
    """First failing tuple in the given order: (T, multiset, coefficient) or None."""
    if not inv and isinstance(f, MultilinearPoly) and f.is_standard:
        rmaps = _right_maps(A, sign)
        for T in tuples:
            hit = _first_failure(_standard_tuple(A, sign, T, rmaps))
            if hit:
                return T, hit[0], hit[1]
        return None
    words = _words_of(f)
    for T in tuples:
        leaves = []
        for idx in T:
            e = A.basis_vector(sign, idx)
            leaves.append({False: e, True: inv.apply(sign, e) if inv else None})
        hit = _first_failure(_general_tuple(A, sign, words, leaves))
        if hit:
            return T, hit[0], hit[1]
    return None


def _scan_chunk(payload):
    A, sign, f, tuples, inv = payload
    return _scan(A, sign, f, tuples, inv)


def _tuples(A: AssocPair, sign: int, f, inv) -> list:
    n = f.arity
    if not inv and isinstance(f, MultilinearPoly) and f.is_standard:
        return list(combinations(range(A.dim(sign)), n))
    return list(product(range(A.dim(sign)), repeat=n))


def _concrete_z(A: AssocPair, sign: int, f, T, M, inv=None):
    """Smallest integer z on the support of M (grid order) with f(z; e_T) != 0."""
    support = sorted(set(M))
    n = f.arity
    args = [PairElement.basis(A, sign, i) for i in T]
    grid = range(1, max(n, 1) + 1)
    for cs in product(grid, repeat=len(support)):
        z = [A.field.zero] * A.dim(-sign)
        for b, c in zip(support, cs):
            z[b] = A.field(c)
        zel = PairElement(-sign, tuple(z))
        if inv is None:
            val = eval_homotope(A, f, zel, args)
        else:
            val = eval_star(A, inv, f, zel, args)
        if not val.is_zero():
            return tuple(z), val.coords
    return None, None


def _run_check(A: AssocPair, f, budget, jobs, inv) -> HPIResult:
    cost = estimate_cost(A, f, star=inv is not None)
    if budget is not None and cost > budget:
        raise BudgetExceeded(cost, budget)
    for s in SIGNS:
        if A.dim(s) == 0:
            continue
        tuples = _tuples(A, s, f, inv)
        hit = None
        if jobs and jobs > 1 and len(tuples) > 1:
            size = max(1, -(-len(tuples) // (jobs * 4)))
            chunks = [tuples[i:i + size] for i in range(0, len(tuples), size)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for res in pool.map(_scan_chunk, [(A, s, f, c, inv) for c in chunks]):
                    if res is not None:
                        hit = res  # chunks come back in order; the first hit is least
                        break
        else:
            hit = _scan(A, s, f, tuples, inv)
        if hit is not None:
            T, M, coeff = hit
            z, value = _concrete_z(A, s, f, T, M, inv)
            return HPIResult(False, HPIWitness(s, T, M, coeff, z, value), cost)
    return HPIResult(True, None, cost)


def check_hpi(A: AssocPair, f: MultilinearPoly, budget: Optional[int] = None, jobs: int = 1) -> HPIResult:
    """Does f(z; x) vanish on A for both polarities?

    The witness is the least failing (sign, x-tuple, z-multiset) with sign +
    first; x-tuples are strictly increasing for standard polynomials (they
    are alternating) and arbitrary otherwise.
    """
    if not f.is_monic():
        raise PreconditionError("identity candidates must be monic")
    return _run_check(A, f, budget, jobs, None)


def check_star_identity(A: AssocPair, inv, p: StarMultilinearPoly, budget: Optional[int] = None,
                        jobs: int = 1) -> HPIResult:
    from .involutions import check_involution

    if not p.is_monic():
        raise PreconditionError("identity candidates must be monic")
    if not check_involution(A, inv).ok:
        raise PreconditionError("not an involution of this pair")
    return _run_check(A, p, budget, jobs, inv)


def least_hpi_degree(A: AssocPair, max_degree: int, budget: Optional[int] = None, jobs: int = 1):
    """Least d <= max_degree with check_hpi(A, S_d); returns (d or None, results by d)."""
    results = {}
    for d in range(1, max_degree + 1):
        res = check_hpi(A, standard_identity(d), budget=budget, jobs=jobs)
        results[d] = res
        if res.holds:
            return d, results
    return None, results


# --- local algebras ---------------------------------------------------------

def local_min_standard_degree(A: AssocPair, a: PairElement, bound: Optional[int] = None) -> Optional[int]:
    """Least n with S_n an identity of the local algebra at a; None if above ``bound``."""
    La, _ = local_algebra(A, a)
    if bound is None:
        bound = max(2 * La.dim, 1)
    return min_standard_degree(La, bound)


@dataclass(frozen=True)
class PIReport:
    pi_elements_plus: Subspace
    pi_elements_minus: Subspace
    min_standard_degree: dict = dc_field(hash=False)
    transfer_ok: bool = True
    capacity: Optional[int] = None
    capacity_note: str = ""

    @property
    def is_whole(self) -> bool:
        return self.pi_elements_plus.is_full() and self.pi_elements_minus.is_full()


def pi_ideal(A: AssocPair, module=None) -> PIReport:
    """PI(A) with per-basis-element local degrees, checked against the imbedding.

    At finite dimension every local algebra is PI, so PI(A) = A.  The degree
    at each basis element a is recomputed on E_a inside the standard
    imbedding, which must agree.
    """
    from .imbedding import build_standard_imbedding
    from .structure import capacity as _capacity
    from .errors import UnsupportedError

    emb = build_standard_imbedding(A)
    degrees = {}
    transfer_ok = True
    for s in SIGNS:
        for i in range(A.dim(s)):
            a = PairElement.basis(A, s, i)
            d = local_min_standard_degree(A, a)
            Ea, _ = algebra_local(emb.algebra, emb.embed(a))
            if min_standard_degree(Ea, max(2 * Ea.dim, 1)) != d:
                transfer_ok = False
            degrees[(s, i)] = d
    cap, note = None, ""
    try:
        cap = _capacity(A, module)
    except (PreconditionError, UnsupportedError) as exc:
        note = str(exc)
    return PIReport(
        Subspace.full(A.field, A.dim_plus),
        Subspace.full(A.field, A.dim_minus),
        degrees,
        transfer_ok,
        cap,
        note,
    )


def default_jobs() -> int:
    return max(1, min(4, os.cpu_count() or 1))
