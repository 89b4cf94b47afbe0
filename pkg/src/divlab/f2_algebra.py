"""Arithmetic in the monoid algebra F2[P] and its subring R.

Coefficients live in F2, so an element is simply a finite set of exponent
vectors and addition is symmetric difference.  ``R0`` is the whole algebra;
``R`` is spanned by the monomials accepted by :func:`divlab.exponents.in_qr`.
Both have trivial unit group ``{1}``, so associates are equal elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ClaimViolation, Fault, NotMember
from .exponents import (
    ONE_VEC,
    ExpVec,
    add,
    is_in_qr,
    minimum,
    minimum_of,
    scalar_div,
    sub,
)


class AlgElem:
    """Element of F2[P]: an immutable set of monomial exponents."""

    __slots__ = ("monomials", "_hash")

    def __init__(self, monomials: Iterable[ExpVec] = ()):
        acc: set[ExpVec] = set()
        for m in monomials:
            acc ^= {m}
        self.monomials: frozenset[ExpVec] = frozenset(acc)
        self._hash = hash(self.monomials)

    @classmethod
    def _wrap(cls, ms: frozenset[ExpVec]) -> AlgElem:
        e = object.__new__(cls)
        e.monomials = ms
        e._hash = hash(ms)
        return e

    @classmethod
    def monomial(cls, v: ExpVec) -> AlgElem:
        return cls._wrap(frozenset((v,)))

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def is_one(self) -> bool:
        return self.monomials == _ONE_SET

    @property
    def is_monomial(self) -> bool:
        return len(self.monomials) == 1

    def only_monomial(self) -> ExpVec:
        if len(self.monomials) != 1:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self.monomials))

    def sorted_monomials(self) -> list[ExpVec]:
        """Monomials in descending order (leading term first)."""
        return sorted(self.monomials, reverse=True)

    def lead(self) -> ExpVec:
        return max(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: AlgElem) -> AlgElem:
        return AlgElem._wrap(self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other: AlgElem) -> AlgElem:
        return mul(self, other)

    def __pow__(self, n: int) -> AlgElem:
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"AlgElem({self})"

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(str(m) for m in self.sorted_monomials())


_ONE_SET = frozenset((ONE_VEC,))
ZERO = AlgElem()
ONE = AlgElem._wrap(_ONE_SET)


def mono(v: ExpVec) -> AlgElem:
    return AlgElem.monomial(v)


def mul(f: AlgElem, g: AlgElem) -> AlgElem:
    acc: set[ExpVec] = set()
    for a in f.monomials:
        for b in g.monomials:
            acc ^= {add(a, b)}
    return AlgElem._wrap(frozenset(acc))


def exact_div(g: AlgElem, f: AlgElem) -> AlgElem | None:
    """Return ``q`` with ``f*q == g`` in R0, or ``None`` if ``f`` does not divide ``g``.

    Leading-term cancellation under the ExpVec order.  All candidate quotient
    exponents have denominators dividing the lcm of those of ``f`` and ``g``
    and only use T indices occurring in ``f`` or ``g``; on that lattice the
    order is a well-order, so the loop terminates.
    """
    if f.is_zero:
        raise ZeroDivisionError("division by the zero element")
    if g.is_zero:
        return ZERO
    fm = f.monomials
    lf = max(fm)
    if len(fm) == 1:
        q = []
        for m in g.monomials:
            t = sub(m, lf)
            if t is None:
                return None
            q.append(t)
        return AlgElem._wrap(frozenset(q))
    n = max(v.max_index() for v in (*fm, *g.monomials))
    key = lambda v: v.dense_key(n)  # noqa: E731
    lf = max(fm, key=key)
    rem = set(g.monomials)
    quot: set[ExpVec] = set()
    while rem:
        t = sub(max(rem, key=key), lf)
        if t is None:
            return None
        quot ^= {t}
        for m in fm:
            rem ^= {add(t, m)}
    q = AlgElem._wrap(frozenset(quot))
    if mul(f, q) != g:
        raise Fault(f"exact_div self-check failed for ({g}) / ({f})")
    return q


def divides_r0(f: AlgElem, g: AlgElem) -> bool:
    return exact_div(g, f) is not None


def in_r(f: AlgElem) -> bool:
    return all(is_in_qr(m) for m in f.monomials)


def divide_in_r(g: AlgElem, f: AlgElem) -> AlgElem | None:
    """Quotient of ``g`` by ``f`` inside R (both assumed in R), else ``None``."""
    q = exact_div(g, f)
    if q is None or not in_r(q):
        return None
    return q


@dataclass(frozen=True)
class RSplit:
    i_part: AlgElem
    t_part: AlgElem

    def reconstruct(self) -> AlgElem:
        return self.i_part + self.t_part


def split_r0(f: AlgElem) -> RSplit:
    """Split ``f`` into its part in the ideal generated by positive powers of
    X, Y, Z and its part in F2[T-monomials]."""
    i_part = frozenset(m for m in f.monomials if m.has_xyz)
    return RSplit(AlgElem._wrap(i_part), AlgElem._wrap(f.monomials - i_part))


class ClaimStatus(enum.Enum):
    HOLDS = "Holds"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ClaimVerdict:
    status: ClaimStatus
    product: AlgElem
    f_in_r: bool
    g_in_r: bool

    @property
    def which(self) -> str:
        return {(True, True): "both", (True, False): "f", (False, True): "g"}.get(
            (self.f_in_r, self.g_in_r), "neither"
        )


def claim_check(f: AlgElem, g: AlgElem) -> ClaimVerdict:
    """If ``f*g`` lies in R, confirm that ``f`` or ``g`` does too."""
    fg = mul(f, g)
    fr, gr = in_r(f), in_r(g)
    if not in_r(fg):
        return ClaimVerdict(ClaimStatus.NOT_APPLICABLE, fg, fr, gr)
    if not (fr or gr):
        raise ClaimViolation(f"f={f}, g={g}: product {fg} in R but neither factor is")
    return ClaimVerdict(ClaimStatus.HOLDS, fg, fr, gr)


def sqrt(f: AlgElem) -> AlgElem:
    """Inverse of the Frobenius map: halve every exponent."""
    return AlgElem._wrap(frozenset(scalar_div(m, 2) for m in f.monomials))


def antimatter_factor(f: AlgElem) -> tuple[AlgElem, AlgElem] | None:
    """Split a nonzero nonunit of R as a product of two nonunits of R.

    Returns ``None`` for 0 and 1 (nothing to factor).
    """
    if not in_r(f):
        raise NotMember(f"{f} is not an element of R")
    if f.is_zero or f.is_one:
        return None
    h = sqrt(f)
    return h, h


def monomial_common_divisor_trivial(ms: Iterable[ExpVec]) -> bool:
    """True iff the monomials of R in ``ms`` have no common nonunit divisor in R.

    Any common divisor in R lies below the componentwise minimum; it can be
    a nonunit only if that minimum has positive X, Y or Z content.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("need at least one monomial")
    for m in ms:
        if not is_in_qr(m):
            raise NotMember(f"{m} is not a monomial of R")
    return not minimum_of(ms).has_xyz


class MCDStatus(enum.Enum):
    MAXIMAL = "Maximal"
    NOT_MAXIMAL = "NotMaximal"
    NOT_COMMON_DIVISOR = "NotCommonDivisor"


@dataclass(frozen=True)
class MCDVerdict:
    status: MCDStatus
    witness: ExpVec | None = None
    quotients: tuple[ExpVec, ...] = field(default_factory=tuple)


def r_monomial_quotient(a: ExpVec, d: ExpVec) -> ExpVec | None:
    """``a - d`` if the monomial ``d`` divides ``a`` inside R."""
    w = sub(a, d)
    if w is None or not is_in_qr(w):
        return None
    return w


def mcd_verify(d: ExpVec, a: ExpVec, b: ExpVec) -> MCDVerdict:
    """Decide whether the monomial ``d`` is a maximal common divisor of ``a`` and ``b`` in R.

    Divisors of a monomial in F2[Q_R] are monomials, so the search stays in
    the exponent monoid.
    """
    for v in (d, a, b):
        if not is_in_qr(v):
            raise NotMember(f"{v} is not a monomial of R")
    qa, qb = r_monomial_quotient(a, d), r_monomial_quotient(b, d)
    if qa is None or qb is None:
        return MCDVerdict(MCDStatus.NOT_COMMON_DIVISOR)
    m = minimum(qa, qb)
    if not m.has_xyz:
        return MCDVerdict(MCDStatus.MAXIMAL, quotients=(qa, qb))
    bigger = add(d, scalar_div(m.xyz_part(), 2))
    wa, wb = r_monomial_quotient(a, bigger), r_monomial_quotient(b, bigger)
    if wa is None or wb is None:
        raise Fault(f"larger common divisor {bigger} failed to divide")
    return MCDVerdict(MCDStatus.NOT_MAXIMAL, witness=bigger, quotients=(wa, wb))


def r_monomial_mcd(a: ExpVec, b: ExpVec) -> ExpVec | None:
    """A maximal common divisor of two monomials of R, or ``None`` if none exists.

    When the componentwise minimum m is itself a common divisor in R it is the
    answer.  When m has no X/Y/Z content only 1 divides both.  Otherwise the
    common divisors approach m without reaching it, so no MCD exists.
    """
    m = minimum(a, b)
    if (
        is_in_qr(m)
        and r_monomial_quotient(a, m) is not None
        and r_monomial_quotient(b, m) is not None
    ):
        return m
    if not m.has_xyz:
        return ONE_VEC
    return None
