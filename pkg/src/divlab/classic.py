"""Control domains: Z[sqrt(-5)], the field Q(sqrt(2)) and polynomials over it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Iterable, Sequence

from sympy import QQ, Poly, symbols

from .errors import OracleNeeded

# --------------------------------------------------------------------------
# Z[sqrt(-5)]
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadInt:
    """``a + b*sqrt(-5)`` with integer ``a``, ``b``."""

    a: int
    b: int = 0

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("QuadInt components must be integers")

    def norm(self) -> int:
        return self.a * self.a + 5 * self.b * self.b

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def __add__(self, other: QuadInt | int) -> QuadInt:
        other = _qi(other)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        other = _qi(other)
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        other = _qi(other)
        return QuadInt(self.a * other.a - 5 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    @property
    def is_unit(self) -> bool:
        return self.b == 0 and self.a in (1, -1)

    def normalized(self) -> QuadInt:
        """Representative of the class ``{self, -self}``: first nonzero component positive."""
        if self.a < 0 or (self.a == 0 and self.b < 0):
            return -self
        return self

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}i5"
        return f"{self.a}{self.b:+d}i5"


def _qi(v: QuadInt | int) -> QuadInt:
    return v if isinstance(v, QuadInt) else QuadInt(int(v))


def quadint_divides(d: QuadInt, a: QuadInt) -> QuadInt | None:
    """Quotient ``a/d`` in Z[sqrt(-5)], or ``None`` if it is not integral."""
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[sqrt(-5)]")
    num = a * d.conj()
    if num.a % n or num.b % n:
        return None
    return QuadInt(num.a // n, num.b // n)


def quadint_divisors(a: QuadInt) -> list[QuadInt]:
    """All divisors of ``a`` up to sign, sorted by norm.

    Candidates ``x + y*sqrt(-5)`` are enumerated over every norm dividing N(a).
    """
    if not a:
        raise ValueError("zero has infinitely many divisors")
    n = a.norm()
    out = []
    for x in range(0, isqrt(n) + 1):
        for y in range(-isqrt((n - x * x) // 5), isqrt((n - x * x) // 5) + 1):
            if x == 0 and y <= 0:
                continue
            c = QuadInt(x, y)
            if n % c.norm() == 0 and quadint_divides(c, a) is not None:
                out.append(c)
    out.sort(key=lambda c: (c.norm(), c.a, c.b))
    return out


# --------------------------------------------------------------------------
# Q(sqrt(2))
# --------------------------------------------------------------------------


@total_ordering
class QuadRat:
    """``p + q*sqrt(2)`` with rational ``p``, ``q``.

    The order exists only to make printing and sorting deterministic; it is
    lexicographic on ``(p, q)`` and has no field meaning.
    """

    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0):
        self.p = p if isinstance(p, Fraction) else Fraction(p)
        self.q = q if isinstance(q, Fraction) else Fraction(q)

    @classmethod
    def coerce(cls, v) -> QuadRat:
        return v if isinstance(v, QuadRat) else cls(v)

    def norm(self) -> Fraction:
        return self.p * self.p - 2 * self.q * self.q

    def conj(self) -> QuadRat:
        return QuadRat(self.p, -self.q)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 0 and self.p.denominator == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if not isinstance(other, QuadRat):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __lt__(self, other: QuadRat) -> bool:
        return (self.p, self.q) < (other.p, other.q)

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __bool__(self) -> bool:
        return bool(self.p or self.q)

    def __add__(self, other) -> QuadRat:
        o = QuadRat.coerce(other)
        return QuadRat(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other) -> QuadRat:
        o = QuadRat.coerce(other)
        return QuadRat(self.p - o.p, self.q - o.q)

    def __rsub__(self, other) -> QuadRat:
        return QuadRat.coerce(other) - self

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.p, -self.q)

    def __mul__(self, other) -> QuadRat:
        o = QuadRat.coerce(other)
        return QuadRat(self.p * o.p + 2 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def inverse(self) -> QuadRat:
        n = self.norm()
        if n == 0:
            # p^2 = 2 q^2 has no rational solution besides 0
            raise ZeroDivisionError("zero has no inverse in Q(sqrt(2))")
        return QuadRat(self.p / n, -self.q / n)

    def __truediv__(self, other) -> QuadRat:
        return self * QuadRat.coerce(other).inverse()

    def __rtruediv__(self, other) -> QuadRat:
        return QuadRat.coerce(other) * self.inverse()

    def __repr__(self) -> str:
        return f"QuadRat({self})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        qs = f"{self.q}r2"
        if self.p == 0:
            return qs
        return f"{self.p}{'' if self.q < 0 else '+'}{qs}"


SQRT2 = QuadRat(0, 1)


def rational_sqrt(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    n, d = isqrt(v.numerator), isqrt(v.denominator)
    if n * n == v.numerator and d * d == v.denominator:
        return Fraction(n, d)
    return None


def quadrat_sqrt(v: QuadRat) -> QuadRat | None:
    """A square root of ``v`` in Q(sqrt(2)), or ``None`` if ``v`` is not a square."""
    if not v:
        return QuadRat(0)
    # (a + b r2)^2 = a^2 + 2b^2 + 2ab r2, and N(v) = (a^2 - 2b^2)^2
    n = rational_sqrt(v.norm()) if v.norm() >= 0 else None
    if n is None:
        return None
    for s in (n, -n):
        a2 = (v.p + s) / 2
        a = rational_sqrt(a2)
        if a is None:
            continue
        if a == 0:
            b = rational_sqrt(v.p / 2)
            cand = QuadRat(0, b) if b is not None else None
        else:
            cand = QuadRat(a, v.q / (2 * a))
        if cand is not None and cand * cand == v:
            return cand
    return None


# --------------------------------------------------------------------------
# K[x] with K = Q(sqrt(2))
# --------------------------------------------------------------------------


class KPoly:
    """Polynomial over Q(sqrt(2)); ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [QuadRat.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[QuadRat, ...] = tuple(cs)

    @classmethod
    def x(cls) -> KPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> KPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> QuadRat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else QuadRat(0)

    def lc(self) -> QuadRat:
        return self.coeffs[-1]

    def ord(self) -> int:
        if not self.coeffs:
            raise ValueError("order of the zero polynomial is undefined")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def monic(self) -> KPoly:
        inv = self.lc().inverse()
        return KPoly(c * inv for c in self.coeffs)

    def scale(self, c) -> KPoly:
        c = QuadRat.coerce(c)
        return KPoly(a * c for a in self.coeffs)

    def conj(self) -> KPoly:
        return KPoly(c.conj() for c in self.coeffs)

    def __call__(self, v) -> QuadRat:
        acc = QuadRat(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, KPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: KPoly) -> KPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> KPoly:
        return KPoly(-c for c in self.coeffs)

    def __sub__(self, other: KPoly) -> KPoly:
        return self + (-other)

    def __mul__(self, other: KPoly) -> KPoly:
        if not self.coeffs or not other.coeffs:
            return KPoly()
        out = [QuadRat(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return KPoly(out)

    def __pow__(self, n: int) -> KPoly:
        out = KPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"KPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = _coef_str(c)
            if not mon:
                terms.append(cs)
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms)


def _coef_str(c: QuadRat) -> str:
    s = str(c)
    simple = (c.q == 0 and c.p > 0) or (c.p == 0 and c.q > 0)
    return s if simple else f"({s})"


def kpoly_divmod(g: KPoly, f: KPoly) -> tuple[KPoly, KPoly]:
    """Euclidean division in K[x]: ``g = f*q + r`` with ``deg r < deg f``."""
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(g.coeffs)
    df = f.degree
    inv = f.lc().inverse()
    q = [QuadRat(0)] * max(len(r) - df, 0)
    for k in range(len(r) - 1 - df, -1, -1):
        c = r[k + df] * inv
        q[k] = c
        if c:
            for j, fc in enumerate(f.coeffs):
                r[k + j] = r[k + j] - c * fc
    return KPoly(q), KPoly(r[:df] if df > 0 else [])


def kpoly_exact_div(g: KPoly, f: KPoly) -> KPoly | None:
    q, r = kpoly_divmod(g, f)
    return q if r.is_zero else None


def kpoly_gcd(a: KPoly, b: KPoly) -> KPoly:
    """Monic gcd in K[x] (zero if both are zero)."""
    while not b.is_zero:
        a, b = b, kpoly_divmod(a, b)[1]
    return a.monic() if not a.is_zero else a


_x = symbols("x")


def norm_poly(f: KPoly) -> list[Fraction]:
    """Coefficients (low to high) of f * conj(f), which lies in Q[x]."""
    n = f * f.conj()
    if any(c.q for c in n.coeffs):
        raise AssertionError("norm polynomial must be rational")
    return [c.p for c in n.coeffs]


def _rational_factors(coeffs: Sequence[Fraction]) -> list[KPoly]:
    p = Poly(list(reversed([QQ(c.numerator, c.denominator) for c in coeffs])), _x, domain=QQ)
    out = []
    for fac, _ in p.factor_list()[1]:
        cs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(fac.all_coeffs())]
        out.append(KPoly(cs))
    return out


def _quadratic_root(f: KPoly) -> QuadRat | None:
    a, b, c = f.coeff(2), f.coeff(1), f.coeff(0)
    s = quadrat_sqrt(b * b - 4 * a * c)
    if s is None:
        return None
    return (-b + s) / (2 * a)


def kpoly_is_irreducible(f: KPoly) -> bool:
    """Irreducibility test for ``1 <= deg f <= 3``."""
    return kpoly_prime_factor(f).degree == f.degree


def kpoly_prime_factor(f: KPoly) -> KPoly:
    """A monic irreducible factor of ``f`` in K[x], for ``deg f <= 3``.

    Degree 2 and 3 polynomials are reducible exactly when they have a root in
    K.  A root ``a`` has a minimal polynomial over Q of degree 1 or 2 dividing
    the rational norm polynomial f*conj(f); its gcd with ``f`` exposes the root.
    Raises :class:`OracleNeeded` for degree 4 and up.
    """
    d = f.degree
    if d < 1:
        raise ValueError("constants have no prime factors in K[x]")
    if d == 1:
        return f.monic()
    if d >= 4:
        raise OracleNeeded(f"deg {d} > 3: supply an irreducible factor of {f}")
    if d == 2:
        root = _quadratic_root(f)
        return f.monic() if root is None else KPoly([-root, 1])
    for m in _rational_factors(norm_poly(f)):
        if m.degree > 2:
            continue
        g = kpoly_gcd(f, m)
        if g.degree == 1:
            return g
        if g.degree == 2:
            root = _quadratic_root(g)
            if root is not None:
                return KPoly([-root, 1])
    return f.monic()


def verify_oracle_factor(f: KPoly, p: KPoly) -> bool:
    """Accept a caller-supplied factor: it must divide ``f`` and, when small, be irreducible."""
    if p.degree < 1 or kpoly_exact_div(f, p) is None:
        return False
    if p.degree <= 3:
        return kpoly_is_irreducible(p)
    return True
