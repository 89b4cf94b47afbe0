"""Uniform divisibility interface over the five registered domains.

Each domain knows how to do ring arithmetic, exact division, and whichever
common-divisor decision procedures exist for it.  Anything outside those
procedures raises :class:`~divlab.errors.Undecided` rather than guessing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Any, Sequence

from . import f2_algebra as alg
from .classic import QuadInt, quadint_divides, quadint_divisors
from .dk import DKElem, dk_divides, prime_like_witness
from .errors import NotMember, OracleNeeded, Undecided
from .exponents import ExpVec, is_in_qr, minimum, minimum_of, scalar_div, sub

DomainElem = Any  # int | QuadInt | AlgElem | DKElem


class DomainId(enum.Enum):
    R0 = "r0"
    R = "r"
    Z = "z"
    Z_SQRT_MINUS5 = "z5"
    DK = "dk"


@dataclass(frozen=True)
class Capabilities:
    has_gcd: bool = False
    has_mcd_verify: bool = False
    has_divisor_enumeration: bool = False
    units_trivial: bool = False


@dataclass(frozen=True)
class Divisor:
    """A nonunit divisor found by a search, with the side it divides."""

    divisor: DomainElem
    side: str  # "r" or "s"
    quotients: tuple
    case: str = ""


class Domain:
    id: DomainId
    capabilities: Capabilities

    # ring structure ---------------------------------------------------------
    def zero(self) -> DomainElem:
        raise NotImplementedError

    def one(self) -> DomainElem:
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def divide(self, a, d):
        """Quotient ``a/d`` inside the domain, or ``None``."""
        raise NotImplementedError

    def check(self, a) -> DomainElem:
        """Raise if ``a`` is not an element of this domain."""
        return a

    # decision procedures ------------------------------------------------------
    def common_nonunit_divisor(self, elems: Sequence) -> DomainElem | None:
        raise Undecided(f"no common-divisor procedure for domain {self.id.value}")

    def mcd(self, a, b) -> DomainElem:
        raise Undecided(f"no MCD procedure for domain {self.id.value}")

    def prime_like_divisor(self, p, r, s) -> Divisor | None:
        raise Undecided(f"no prime-like search for domain {self.id.value}")

    def factorizations(self, p):
        """All ``(u, v)`` with ``u*v == p`` up to units, when enumerable."""
        raise Undecided(f"factorizations not enumerable in domain {self.id.value}")

    def __repr__(self) -> str:
        return f"<Domain {self.id.value}>"


class IntegerDomain(Domain):
    id = DomainId.Z
    capabilities = Capabilities(has_gcd=True, has_mcd_verify=True, has_divisor_enumeration=True)

    def zero(self):
        return 0

    def one(self):
        return 1

    def check(self, a):
        if not isinstance(a, int):
            raise NotMember(f"{a!r} is not an integer")
        return a

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def divide(self, a, d):
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return a // d if a % d == 0 else None

    def common_nonunit_divisor(self, elems):
        g = 0
        for e in elems:
            g = gcd(g, e)
        return g if g > 1 else None

    def mcd(self, a, b):
        return gcd(a, b)

    def divisors(self, n: int) -> list[int]:
        n = abs(n)
        small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
        return sorted(set(small + [n // d for d in small]))

    def prime_like_divisor(self, p, r, s):
        for d in self.divisors(p):
            if d == 1:
                continue
            for side, t in (("r", r), ("s", s)):
                if t % d == 0:
                    return Divisor(d, side, (p // d, t // d))
        return None

    def factorizations(self, p):
        return [(d, p // d) for d in self.divisors(p)]


class QuadIntDomain(Domain):
    id = DomainId.Z_SQRT_MINUS5
    capabilities = Capabilities(has_mcd_verify=True, has_divisor_enumeration=True)

    def zero(self):
        return QuadInt(0)

    def one(self):
        return QuadInt(1)

    def check(self, a):
        if isinstance(a, int):
            return QuadInt(a)
        if not isinstance(a, QuadInt):
            raise NotMember(f"{a!r} is not in Z[sqrt(-5)]")
        return a

    def is_unit(self, a) -> bool:
        return a.is_unit

    def divide(self, a, d):
        return quadint_divides(d, a)

    def _nonunit_divisors(self, a):
        return [d for d in quadint_divisors(a) if not d.is_unit]

    def common_nonunit_divisor(self, elems):
        nz = [e for e in elems if e]
        base = min(nz, key=lambda e: e.norm())
        for d in self._nonunit_divisors(base):
            if all(quadint_divides(d, e) is not None for e in nz):
                return d
        return None

    def common_divisors(self, a, b):
        return [d for d in quadint_divisors(a) if quadint_divides(d, b) is not None]

    def mcd(self, a, b):
        # a proper multiple has strictly larger norm, so the largest norm is maximal
        if not a:
            return b.normalized()
        if not b:
            return a.normalized()
        return max(self.common_divisors(a, b), key=lambda d: (d.norm(), d.a, d.b))

    def prime_like_divisor(self, p, r, s):
        for d in self._nonunit_divisors(p):
            for side, t in (("r", r), ("s", s)):
                q = quadint_divides(d, t)
                if q is not None:
                    return Divisor(d, side, (quadint_divides(d, p), q))
        return None

    def factorizations(self, p):
        return [(d, quadint_divides(d, p)) for d in quadint_divisors(p)]


class MonoidAlgebraDomain(Domain):
    """F2[P] (``restricted=False``) or its subring R (``restricted=True``)."""

    def __init__(self, restricted: bool):
        self.restricted = restricted
        self.id = DomainId.R if restricted else DomainId.R0
        self.capabilities = Capabilities(
            has_gcd=not restricted,
            has_mcd_verify=True,
            has_divisor_enumeration=False,
            units_trivial=True,
        )

    def zero(self):
        return alg.ZERO

    def one(self):
        return alg.ONE

    def check(self, a):
        if not isinstance(a, alg.AlgElem):
            raise NotMember(f"{a!r} is not a monoid-algebra element")
        if self.restricted and not alg.in_r(a):
            raise NotMember(f"{a} is not in R")
        return a

    def is_zero(self, a) -> bool:
        return a.is_zero

    def is_unit(self, a) -> bool:
        return a.is_one

    def divide(self, a, d):
        if self.restricted:
            return alg.divide_in_r(a, d)
        return alg.exact_div(a, d)

    def _mono_divides(self, d: ExpVec, a: ExpVec) -> ExpVec | None:
        w = sub(a, d)
        if w is None or (self.restricted and not is_in_qr(w)):
            return None
        return w

    def common_nonunit_divisor(self, elems):
        nz = [e for e in elems if not e.is_zero]
        if not any(e.is_monomial for e in nz):
            raise Undecided("common divisors of non-monomial elements are not decided")
        # divisors of a monomial are monomials; a monomial divides f iff it
        # lies below every monomial of f
        m = minimum_of(v for e in nz for v in e.monomials)
        if self.restricted:
            if not m.has_xyz:
                return None
            return alg.mono(scalar_div(m.xyz_part(), 2))
        return None if m.is_zero else alg.mono(m)

    def _monomials(self, *elems) -> list[ExpVec]:
        if not all(e.is_monomial for e in elems):
            raise Undecided("only monomial inputs are decided")
        return [e.only_monomial() for e in elems]

    def mcd(self, a, b):
        va, vb = self._monomials(a, b)
        if not self.restricted:
            return alg.mono(minimum(va, vb))
        d = alg.r_monomial_mcd(va, vb)
        if d is None:
            raise Undecided(f"{a} and {b} have no maximal common divisor in R")
        return alg.mono(d)

    def prime_like_divisor(self, p, r, s):
        vp, vr, vs = self._monomials(p, r, s)
        for side, vt in (("r", vr), ("s", vs)):
            m = minimum(vp, vt)
            if self.restricted:
                cands = [m.xyz_part(), scalar_div(m.xyz_part(), 2)] if m.has_xyz else []
            else:
                cands = [m] if not m.is_zero else []
            for d in cands:
                qp, qt = self._mono_divides(d, vp), self._mono_divides(d, vt)
                if qp is not None and qt is not None:
                    return Divisor(alg.mono(d), side, (alg.mono(qp), alg.mono(qt)))
        return None


class DKDomain(Domain):
    id = DomainId.DK
    capabilities = Capabilities()

    def zero(self):
        return DKElem.of()

    def one(self):
        return DKElem.of(1)

    def check(self, a):
        if not isinstance(a, DKElem):
            raise NotMember(f"{a!r} is not in Z + xK[x]")
        return a

    def is_zero(self, a) -> bool:
        return a.is_zero

    def is_unit(self, a) -> bool:
        return a.is_unit

    def divide(self, a, d):
        return dk_divides(d, a)

    def common_nonunit_divisor(self, elems):
        nz = [e for e in elems if not e.is_zero]
        if any(e.is_unit for e in nz):
            return None
        # an integer divides f exactly when it divides f(0)
        g = 0
        for e in nz:
            g = gcd(g, e.constant)
        if g != 1:
            return DKElem.of(2 if g == 0 else g)
        raise Undecided("common polynomial divisors in Z + xK[x] are not decided")

    def prime_like_divisor(self, p, r, s):
        if r.is_unit:
            return Divisor(p, "s", (self.one(), dk_divides(p, s)), "unit")
        if s.is_unit:
            return Divisor(p, "r", (self.one(), dk_divides(p, r)), "unit")
        try:
            w = prime_like_witness(p, r, s)
        except OracleNeeded as exc:
            raise Undecided(str(exc)) from exc
        side = "r" if w.side.value == "DividesB" else "s"
        return Divisor(w.divisor, side, w.quotients, w.case_used.value)


R0 = MonoidAlgebraDomain(restricted=False)
R = MonoidAlgebraDomain(restricted=True)
Z = IntegerDomain()
Z5 = QuadIntDomain()
DK = DKDomain()

DOMAINS: dict[str, Domain] = {d.id.value: d for d in (R0, R, Z, Z5, DK)}


def get_domain(tag: str | Domain) -> Domain:
    if isinstance(tag, Domain):
        return tag
    try:
        return DOMAINS[tag]
    except KeyError:
        raise ValueError(f"unknown domain {tag!r}; choose from {', '.join(DOMAINS)}") from None
