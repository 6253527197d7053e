"""Univariate polynomials over an exact field, minimal polynomials, and
irreducibility over Q and GF(p).

Irreducibility over Q works on the primitive integer associate:

1. reduce modulo primes that keep the polynomial square-free and of full
   degree; a distinct-degree factorization there bounds the degrees a rational
   factor could have (subset sums of the modular factor degrees);
2. intersect those degree sets over several primes;
3. for each surviving degree ``d <= n/2`` run Kronecker's interpolation
   search, which is exhaustive and needs no Hensel lifting.

Step 3 is exponential in principle, so it is capped; hitting the cap raises
:class:`~pairforge.errors.UnsupportedError` instead of guessing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import gcd
from typing import Sequence

from .errors import FieldMismatchError, UnsupportedError
from .fields import GF, FieldSpec, is_prime
from .linalg import Eliminator, identity, mat_mul

KRONECKER_CAP = 200_000


class Poly:
    """Coefficient list over ``field``, lowest degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Sequence = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return Poly(self.field, [c * inv for c in self.coeffs])

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        return Poly(self.field, (other,))

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = o.coeffs + (z,) * (n - len(o.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly(self.field, ()), self
        quot = [self.field.zero] * (dq + 1)
        inv = 1 / o.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(self.field, quot), Poly(self.field, rem[: len(o.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        result = Poly(self.field, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def powmod(self, k: int, modulus: "Poly") -> "Poly":
        result = Poly(self.field, (1,)) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def derivative(self) -> "Poly":
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero * x if not isinstance(x, int) else self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m) -> tuple:
        n = len(m)
        f = self.field
        acc = tuple((f.zero,) * n for _ in range(n))
        idn = identity(n, f)
        for c in reversed(self.coeffs):
            acc = mat_mul(acc, m, f)
            acc = tuple(
                tuple(a + c * e for a, e in zip(ra, re)) for ra, re in zip(acc, idn)
            )
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        s = str(c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        if i == 0:
            body = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == "1" else f"{mag}*{mono}"
            if "/" in mag and mag != "1":
                body = f"({mag})*{mono}"
        terms.append(("-" if neg else "+", body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly(f, (1,)), Poly(f, ())
    t0, t1 = Poly(f, ()), Poly(f, (1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def is_squarefree(p: Poly) -> bool:
    if p.degree <= 0:
        return True
    d = p.derivative()
    if d.is_zero():
        # only possible in characteristic p: f(t) = g(t^p)
        return False
    return poly_gcd(p, d).degree == 0


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct monic irreducible factors (characteristic 0)."""
    if p.degree <= 0:
        return p.monic()
    if p.field.characteristic:
        raise UnsupportedError("square-free part is implemented in characteristic 0")
    return (p // poly_gcd(p, p.derivative())).monic()


# --- minimal polynomial -----------------------------------------------------

def minimal_polynomial(m: Sequence[Sequence], field) -> Poly:
    """Monic polynomial of least degree annihilating the square matrix ``m``."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("minimal_polynomial needs a square matrix")
    m = tuple(tuple(field(x) for x in r) for r in m)
    nn = n * n
    width = nn + n + 1
    elim = Eliminator(width, field)
    power = identity(n, field)
    for k in range(n + 1):
        row = {i: v for i, v in enumerate(x for r in power for x in r) if v}
        row[nn + k] = field.one
        reduced = elim.reduce(row)
        if not any(c < nn for c in reduced):
            rel = [field.zero] * (k + 1)
            for c, v in reduced.items():
                rel[c - nn] = v
            return Poly(field, rel).monic()
        elim.add(row)
        power = mat_mul(power, m, field)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


# --- irreducibility ---------------------------------------------------------

def irreducible_over_base(p: Poly) -> bool:
    """True iff the monic square-free polynomial ``p`` is irreducible over its field."""
    if p.degree < 1:
        raise ValueError("irreducibility needs degree at least 1")
    if p.lc != p.field.one:
        raise ValueError("irreducible_over_base expects a monic polynomial")
    if not is_squarefree(p):
        raise ValueError("polynomial is not square-free; take its square-free part first")
    if p.degree == 1:
        return True
    field = p.field
    if not isinstance(field, FieldSpec):
        raise UnsupportedError(f"irreducibility over {field} of degree > 1 is not implemented")
    if field.is_rational:
        return _irreducible_over_q(p)
    return _irreducible_mod_p([c.value for c in p.coeffs], field.characteristic)


def _ddf_degrees(f: Poly) -> list:
    """Degrees of the irreducible factors of a monic square-free f over GF(p)."""
    q = f.field.characteristic
    x = Poly.x(f.field)
    degrees = []
    h = x % f
    i = 0
    while f.degree >= 2 * (i + 1):
        i += 1
        h = h.powmod(q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            degrees.extend([i] * (g.degree // i))
            f = f // g
            h = h % f
    if f.degree > 0:
        degrees.append(f.degree)
    return degrees


def _irreducible_mod_p(coeffs: list, p: int) -> bool:
    f = Poly(GF(p), coeffs).monic()
    return _ddf_degrees(f) == [f.degree]


def _integer_primitive(p: Poly) -> list:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _subset_sums(degrees: list) -> set:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _irreducible_over_q(p: Poly) -> bool:
    f = _integer_primitive(p)
    n = len(f) - 1
    allowed = set(range(1, n))
    good = 0
    cand = 2
    while good < 8 and cand < 400 and allowed:
        if is_prime(cand) and f[-1] % cand:
            fp = Poly(GF(cand), f)
            if fp.degree == n and is_squarefree(fp):
                good += 1
                allowed &= _subset_sums(_ddf_degrees(fp.monic()))
        cand += 1
    allowed.discard(0)
    allowed.discard(n)
    for d in sorted(allowed):
        if d > n // 2:
            break
        if _kronecker_factor(f, d) is not None:
            return False
    return True


def _eval_int(f: list, a: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * a + c
    return acc


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _interpolate(points: list, values: list) -> list:
    """Lagrange interpolation with rational coefficients, lowest degree first."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def _kronecker_factor(f: list, d: int):
    """Search for an integer factor of degree exactly d; None if there is none."""
    pts = []
    a = 0
    while len(pts) < 3 * d + 6:
        for cand in ((a,) if a == 0 else (a, -a)):
            v = _eval_int(f, cand)
            if v == 0:
                return [-cand, 1]
            pts.append((len(_divisors(v)), cand, v))
        a += 1
    pts.sort()
    chosen = pts[: d + 1]
    xs = [c for _, c, _ in chosen]
    choices = []
    for k, (_, _, v) in enumerate(chosen):
        divs = _divisors(v)
        choices.append(divs if k == 0 else divs + [-x for x in divs])
    total = 1
    for c in choices:
        total *= len(c)
    if total > KRONECKER_CAP:
        raise UnsupportedError(
            f"Kronecker search for a degree-{d} factor needs {total} trials"
        )
    fq = Poly(FieldSpec("Q", 0), f)
    for vals in cartesian(*choices):
        g = _interpolate(xs, vals)
        while g and g[-1] == 0:
            g.pop()
        if len(g) - 1 != d:
            continue
        if any(c.denominator != 1 for c in g):
            continue
        gq = Poly(fq.field, g)
        q, r = divmod(fq, gq)
        if r.is_zero() and all(c.denominator == 1 for c in q.coeffs):
            return [int(c) for c in g]
    return None


# --- simple algebraic extensions -------------------------------------------

class ExtensionField:
    """``base[t]/(modulus)`` for a monic irreducible ``modulus`` of degree >= 2."""

    def __init__(self, base, modulus: Poly, name: str = "t"):
        if modulus.field != base:
            raise FieldMismatchError("modulus must have coefficients in the base field")
        if modulus.degree < 2:
            raise ValueError("use the base field for degree-one presentations")
        self.base = base
        self.modulus = modulus.monic()
        self.var = name

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def zero(self):
        return ExtElement(self, (self.base.zero,) * self.degree)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        return self(Poly.x(self.base))

    def __call__(self, value):
        if isinstance(value, ExtElement):
            if value.field != self:
                raise FieldMismatchError("element of a different extension field")
            return value
        if isinstance(value, Poly):
            r = value % self.modulus
            cs = r.coeffs + (self.base.zero,) * (self.degree - len(r.coeffs))
            return ExtElement(self, cs)
        if isinstance(value, (list, tuple)):
            return self(Poly(self.base, value))
        c = self.base(value)
        return ExtElement(self, (c,) + (self.base.zero,) * (self.degree - 1))

    def contains(self, value) -> bool:
        return isinstance(value, ExtElement) and value.field == self

    def format(self, value) -> str:
        return str(self(value))

    def parse(self, text):
        raise UnsupportedError("parsing extension-field elements is not supported")

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def __str__(self):
        return f"{self.base}[{self.var}]/({format_poly(self.modulus, self.var)})"

    __repr__ = __str__


class ExtElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _poly(self) -> Poly:
        return Poly(self.field.base, self.coeffs)

    def _other(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise FieldMismatchError("elements of different extension fields")
            return other
        try:
            return self.field(other)
        except FieldMismatchError:
            raise
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not any(o.coeffs[1:]):
            c = o.coeffs[0]
            return ExtElement(self.field, tuple(a * c for a in self.coeffs))
        return self.field(self._poly() * o._poly())

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse")
        g, s, _ = poly_xgcd(self._poly(), self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("modulus is not irreducible")  # pragma: no cover
        return self.field(s)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return ExtElement(self.field, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self == self.field(other)
        except (TypeError, ValueError, FieldMismatchError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExtElement({self})"

    def __str__(self):
        s = format_poly(self._poly(), self.field.var)
        return s if " " not in s else f"({s})"

    def __reduce__(self):
        return (ExtElement, (self.field, self.coeffs))
