"""Exponent vectors of monomials in X, Y, Z, T_1, T_2, ...

The exponent monoid is the countable product of copies of Q>=0.  Only
eventually-constant sequences are representable: every T_i carries a shared
bulk exponent ``u`` plus a finite set of deviations.  ``U`` in the textual
syntax stands for the product of all T_i, so ``X*U*T[1]^(-1)`` is
X*T_2*T_3*...

Membership of a monomial in the subring R (generated by X^a, Y^a, Z^a and
X^a*T, Y^a*T, Z^a*T with a > 0 and T an arbitrary T-monomial) is decided by
:func:`in_qr`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import Iterable, Mapping, Union

from gmpy2 import mpq

RationalLike = Union[int, Fraction, str]

# Exponents are stored as gmpy2 rationals: they compare, hash and print like
# Fraction but add an order of magnitude faster.
Q = type(mpq(0))
ZERO = mpq(0)


def _frac(v: RationalLike) -> mpq:
    return v if type(v) is Q else mpq(v)


def format_exponent(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({e})"


@total_ordering
class ExpVec:
    """Immutable, canonical exponent vector.

    Equality is structural: deviations equal to zero are never stored.
    The total order is lexicographic on ``(x, y, z, u, e_1, e_2, ...)``
    and is compatible with addition, so it serves as a monomial order.
    """

    __slots__ = ("x", "y", "z", "u", "exc", "_hash")

    def __init__(
        self,
        x: RationalLike = 0,
        y: RationalLike = 0,
        z: RationalLike = 0,
        u: RationalLike = 0,
        exc: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] | None = None,
    ):
        x, y, z, u = _frac(x), _frac(y), _frac(z), _frac(u)
        if x < 0 or y < 0 or z < 0 or u < 0:
            raise ValueError("exponents of X, Y, Z and U must be nonnegative")
        items = exc.items() if isinstance(exc, Mapping) else (exc or ())
        dev: dict[int, Fraction] = {}
        for i, e in items:
            if int(i) != i or i < 1:
                raise ValueError(f"T index must be a positive integer, got {i!r}")
            dev[int(i)] = dev.get(int(i), ZERO) + _frac(e)
        for i, e in dev.items():
            if u + e < 0:
                raise ValueError(f"exponent of T[{i}] would be {u + e} < 0")
        self.x, self.y, self.z, self.u = x, y, z, u
        self.exc: tuple[tuple[int, Fraction], ...] = tuple(
            sorted((i, e) for i, e in dev.items() if e != 0)
        )
        self._hash = hash((x, y, z, u, self.exc))

    @classmethod
    def _raw(cls, x, y, z, u, exc) -> ExpVec:
        # trusted constructor: exc already sorted, zero-free and nonnegative-checked
        v = object.__new__(cls)
        v.x, v.y, v.z, v.u, v.exc = x, y, z, u, exc
        v._hash = hash((x, y, z, u, exc))
        return v

    @classmethod
    def t(cls, i: int, e: RationalLike = 1) -> ExpVec:
        """Exponent vector of ``T_i^e``."""
        return cls(exc={i: e})

    # -- views -------------------------------------------------------------

    def t_exponent(self, i: int) -> Fraction:
        return self.u + dict(self.exc).get(i, ZERO)

    @property
    def deviations(self) -> dict[int, Fraction]:
        return dict(self.exc)

    @property
    def has_xyz(self) -> bool:
        return self.x > 0 or self.y > 0 or self.z > 0

    @property
    def has_t(self) -> bool:
        return self.u != 0 or bool(self.exc)

    @property
    def is_zero(self) -> bool:
        return not self.has_xyz and not self.has_t

    def xyz_part(self) -> ExpVec:
        return ExpVec._raw(self.x, self.y, self.z, ZERO, ())

    def t_part(self) -> ExpVec:
        return ExpVec._raw(ZERO, ZERO, ZERO, self.u, self.exc)

    def max_index(self) -> int:
        return self.exc[-1][0] if self.exc else 0

    def dense_key(self, n: int) -> tuple:
        """Sort key equivalent to the total order for vectors with T indices <= n."""
        dev = dict(self.exc)
        return (self.x, self.y, self.z, self.u) + tuple(dev.get(i, ZERO) for i in range(1, n + 1))

    def denominators(self) -> int:
        """lcm of all denominators occurring in the vector."""
        d = lcm(self.x.denominator, self.y.denominator, self.z.denominator, self.u.denominator)
        for _, e in self.exc:
            d = lcm(d, e.denominator)
        return d

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpVec):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.x == other.x
            and self.y == other.y
            and self.z == other.z
            and self.u == other.u
            and self.exc == other.exc
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: ExpVec) -> bool:
        return _compare(self, other) < 0

    def __add__(self, other: ExpVec) -> ExpVec:
        return add(self, other)

    def __repr__(self) -> str:
        return f"ExpVec({self})"

    def __str__(self) -> str:
        parts = []
        for name, e in (("X", self.x), ("Y", self.y), ("Z", self.z), ("U", self.u)):
            if e:
                parts.append(name if e == 1 else f"{name}^{format_exponent(e)}")
        for i, e in self.exc:
            parts.append(f"T[{i}]" if e == 1 else f"T[{i}]^{format_exponent(e)}")
        return "*".join(parts) if parts else "1"


ONE_VEC = ExpVec()


def _compare(a: ExpVec, b: ExpVec) -> int:
    for p, q in ((a.x, b.x), (a.y, b.y), (a.z, b.z), (a.u, b.u)):
        if p != q:
            return -1 if p < q else 1
    if a.exc == b.exc:
        return 0
    da, db = dict(a.exc), dict(b.exc)
    for i in sorted(da.keys() | db.keys()):
        p, q = da.get(i, ZERO), db.get(i, ZERO)
        if p != q:
            return -1 if p < q else 1
    return 0


def _merge(a: ExpVec, b: ExpVec, op) -> tuple[tuple[int, Fraction], ...]:
    da, db = dict(a.exc), dict(b.exc)
    out = []
    for i in sorted(da.keys() | db.keys()):
        e = op(da.get(i, ZERO), db.get(i, ZERO))
        if e != 0:
            out.append((i, e))
    return tuple(out)


def add(a: ExpVec, b: ExpVec) -> ExpVec:
    """Componentwise sum (the monoid operation)."""
    if not a.exc and not b.exc:
        exc = ()
    elif not b.exc:
        exc = a.exc
    elif not a.exc:
        exc = b.exc
    else:
        exc = _merge(a, b, lambda p, q: p + q)
    return ExpVec._raw(a.x + b.x, a.y + b.y, a.z + b.z, a.u + b.u, exc)


def sub(a: ExpVec, b: ExpVec) -> ExpVec | None:
    """The unique ``w`` with ``b + w == a``, or ``None`` if ``b`` does not divide ``a``."""
    x, y, z, u = a.x - b.x, a.y - b.y, a.z - b.z, a.u - b.u
    if x < 0 or y < 0 or z < 0 or u < 0:
        return None
    exc = _merge(a, b, lambda p, q: p - q) if (a.exc or b.exc) else ()
    for _, e in exc:
        if u + e < 0:
            return None
    return ExpVec._raw(x, y, z, u, exc)


def divides(b: ExpVec, a: ExpVec) -> bool:
    return sub(a, b) is not None


def minimum(a: ExpVec, b: ExpVec) -> ExpVec:
    """Componentwise minimum, i.e. the gcd of two monomials in the full monoid."""
    u = min(a.u, b.u)
    da, db = dict(a.exc), dict(b.exc)
    exc = []
    for i in sorted(da.keys() | db.keys()):
        e = min(a.u + da.get(i, ZERO), b.u + db.get(i, ZERO)) - u
        if e != 0:
            exc.append((i, e))
    return ExpVec._raw(min(a.x, b.x), min(a.y, b.y), min(a.z, b.z), u, tuple(exc))


def minimum_of(vs: Iterable[ExpVec]) -> ExpVec:
    it = iter(vs)
    acc = next(it)
    for v in it:
        acc = minimum(acc, v)
    return acc


def scalar_div(a: ExpVec, n: int) -> ExpVec:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return a
    return ExpVec._raw(a.x / n, a.y / n, a.z / n, a.u / n, tuple((i, e / n) for i, e in a.exc))


def scalar_mul(a: ExpVec, n: RationalLike) -> ExpVec:
    n = _frac(n)
    if n < 0:
        raise ValueError("scalar must be nonnegative")
    if n == 0:
        return ONE_VEC
    return ExpVec._raw(a.x * n, a.y * n, a.z * n, a.u * n, tuple((i, e * n) for i, e in a.exc))


class QVerdict(enum.Enum):
    IN_Q_PURE_XYZ = "InQ_pureXYZ"
    IN_Q_MIXED = "InQ_mixed"
    NOT_IN_Q_PURE_T = "NotInQ_pureT"
    NOT_IN_Q_NEGATIVE = "NotInQ_negative"

    @property
    def member(self) -> bool:
        return self in (QVerdict.IN_Q_PURE_XYZ, QVerdict.IN_Q_MIXED)


@dataclass(frozen=True)
class QMembership:
    verdict: QVerdict
    explanation: str

    def __bool__(self) -> bool:
        return self.verdict.member


def classify_raw(x, y, z, u, exc: Mapping[int, Fraction]) -> QMembership:
    """Membership test on possibly invalid raw components (used by the parser)."""
    x, y, z, u = map(_frac, (x, y, z, u))
    bad = [n for n, e in (("X", x), ("Y", y), ("Z", z), ("U", u)) if e < 0]
    bad += [f"T[{i}]" for i, e in exc.items() if u + _frac(e) < 0]
    if bad:
        return QMembership(QVerdict.NOT_IN_Q_NEGATIVE, f"negative exponent at {', '.join(bad)}")
    return in_qr(ExpVec(x, y, z, u, exc))


def in_qr(a: ExpVec) -> QMembership:
    """Decide whether ``a`` is the exponent of a monomial of R.

    A monomial lies in R iff it has positive X, Y or Z content, or it has no
    T content at all.
    """
    if not a.has_t:
        return QMembership(QVerdict.IN_Q_PURE_XYZ, "monomial in X, Y, Z only")
    if a.has_xyz:
        return QMembership(QVerdict.IN_Q_MIXED, "T content carried by positive X/Y/Z content")
    return QMembership(QVerdict.NOT_IN_Q_PURE_T, "nontrivial T content with no X, Y or Z factor")


def is_in_qr(a: ExpVec) -> bool:
    return not a.has_t or a.has_xyz


# Named vectors used throughout the witnesses.
X = ExpVec(x=1)
Y = ExpVec(y=1)
Z = ExpVec(z=1)
U = ExpVec(u=1)


def b_vec(i: int) -> ExpVec:
    """Exponent of b_i = X * prod_{j != i} T_j."""
    return ExpVec(x=1, u=1, exc={i: -1})


S_Y = ExpVec(x=1, y=1, u=1)
S_Z = ExpVec(x=1, z=1, u=1)
