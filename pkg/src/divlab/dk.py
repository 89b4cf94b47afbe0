"""The composite domain Z + x*K[x] with K = Q(sqrt(2)).

Elements are polynomials over K whose constant term is an integer.  The
units are exactly +1 and -1.  :func:`prime_like_witness` runs the case
analysis showing that every nonzero nonunit is prime-like (hence the domain
is GL), and :func:`x_not_primal_check` certifies that ``x`` is not primal
(hence the domain is not pre-Schreier).
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction

from .classic import KPoly, QuadRat, SQRT2, kpoly_divmod, kpoly_prime_factor, verify_oracle_factor
from .errors import NotMember, PreconditionFailed, UnitFactor
from .report import SubCheck, WitnessReport


class DKElem:
    """Element of Z + x*K[x]."""

    __slots__ = ("poly",)

    def __init__(self, poly: KPoly):
        if not isinstance(poly, KPoly):
            poly = KPoly(poly)
        if not poly.coeff(0).is_integer:
            raise NotMember(f"constant term {poly.coeff(0)} of {poly} is not an integer")
        self.poly = poly

    @classmethod
    def of(cls, *coeffs) -> DKElem:
        return cls(KPoly(coeffs))

    @property
    def constant(self) -> int:
        return self.poly.coeff(0).p.numerator

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_unit(self) -> bool:
        return self.poly.degree == 0 and self.constant in (1, -1)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, DKElem):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __mul__(self, other: DKElem) -> DKElem:
        return DKElem(self.poly * other.poly)

    def __add__(self, other: DKElem) -> DKElem:
        return DKElem(self.poly + other.poly)

    def __neg__(self) -> DKElem:
        return DKElem(-self.poly)

    def __repr__(self) -> str:
        return f"DKElem({self.poly})"

    def __str__(self) -> str:
        return str(self.poly)


ONE = DKElem.of(1)
X = DKElem.of(0, 1)


def dk_member(f: KPoly) -> DKElem:
    """Wrap ``f`` as an element of Z + x*K[x]; raises :class:`NotMember` otherwise."""
    return DKElem(f)


def dk_divides(f: DKElem, g: DKElem) -> DKElem | None:
    """Quotient ``g/f`` in Z + x*K[x], or ``None``."""
    if f.is_zero:
        raise ZeroDivisionError("division by zero")
    q, r = kpoly_divmod(g.poly, f.poly)
    if not r.is_zero or not q.coeff(0).is_integer:
        return None
    return DKElem(q)


def dk_ord(f: DKElem) -> int:
    return f.poly.ord()


class Side(enum.Enum):
    DIVIDES_B = "DividesB"
    DIVIDES_C = "DividesC"


class Case(enum.Enum):
    CASE1_ORD = "Case1_ord"
    CASE2_1_CONSTANT = "Case2_1_constant"
    CASE2_2_POLYPRIME = "Case2_2_polyprime"


@dataclass(frozen=True)
class PrimeLikeWitness:
    divisor: DKElem
    side: Side
    case_used: Case
    quotients: tuple[DKElem, DKElem]  # (r / divisor, side / divisor)


def smallest_prime_factor(n: int) -> int:
    n = abs(n)
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


def prime_like_witness(
    r: DKElem, b: DKElem, c: DKElem, oracle: KPoly | None = None
) -> PrimeLikeWitness:
    """Find a nonunit divisor of ``r`` dividing ``b`` or ``c``, given ``r | b*c``.

    Three cases on ``r``: it vanishes at 0 (any rational prime works); its
    constant term is a nonunit integer (a prime factor of it works); its
    constant term is +-1 (a prime of K[x] normalised to constant term 1 works).
    ``oracle`` supplies an irreducible factor when ``deg r > 3``.
    """
    if r.is_zero or r.is_unit:
        raise PreconditionFailed(f"r = {r} must be a nonzero nonunit")
    if b.is_zero or c.is_zero:
        raise PreconditionFailed("b and c must be nonzero")
    if dk_divides(r, b * c) is None:
        raise PreconditionFailed(f"{r} does not divide ({b})*({c})")
    if b.is_unit:
        raise UnitFactor(f"b = {b} is a unit, so r divides c directly", "c", dk_divides(r, c))
    if c.is_unit:
        raise UnitFactor(f"c = {c} is a unit, so r divides b directly", "b", dk_divides(r, b))

    if dk_ord(r) >= 1:
        d = DKElem.of(2)
        case = Case.CASE1_ORD
        sides = [(Side.DIVIDES_B, b) if dk_ord(b) >= 1 else (Side.DIVIDES_C, c)]
    elif abs(r.constant) >= 2:
        d = DKElem.of(smallest_prime_factor(r.constant))
        case = Case.CASE2_1_CONSTANT
        sides = [(Side.DIVIDES_B, b), (Side.DIVIDES_C, c)]
    else:
        monic_r = r.poly.scale(Fraction(1, r.constant))
        if oracle is not None:
            if not verify_oracle_factor(monic_r, oracle):
                raise PreconditionFailed(f"oracle factor {oracle} rejected for {r}")
            p = oracle
        else:
            p = kpoly_prime_factor(monic_r)
        p = p.scale(p.coeff(0).inverse())
        d = DKElem(p)
        case = Case.CASE2_2_POLYPRIME
        sides = [(Side.DIVIDES_B, b), (Side.DIVIDES_C, c)]

    qr = dk_divides(d, r)
    if qr is None or d.is_unit:
        raise AssertionError(f"{d} should be a nonunit divisor of {r}")
    for side, target in sides:
        qt = dk_divides(d, target)
        if qt is not None:
            return PrimeLikeWitness(d, side, case, (qr, qt))
    raise AssertionError(f"{d} divides neither {b} nor {c}; r={r}")


def integral_multiple_exists(alpha: QuadRat) -> bool:
    """Whether ``d*alpha`` lies in Z for some nonzero integer ``d``.

    That happens exactly when ``alpha`` is rational, so the quantifier over
    ``d`` is discharged without sampling.
    """
    return alpha.is_rational


def x_not_primal_check(alpha: QuadRat = SQRT2, sample: int = 10) -> WitnessReport:
    """Certify that ``x`` is not primal in Z + x*K[x].

    ``x`` divides (alpha*x)*(x/alpha) but every factorization ``x = d*(x/d)``
    (``d`` a nonzero integer) fails to split across the two factors, because
    ``d*alpha`` and ``d/alpha`` are never integers when ``alpha`` is irrational.
    """
    start = time.perf_counter()
    checks: list[SubCheck] = []
    a_el = DKElem(KPoly([0, alpha]))
    b_el = DKElem(KPoly([0, alpha.inverse()]))
    prod = a_el * b_el
    q = dk_divides(X, prod)
    checks.append(SubCheck("x divides (alpha x)(alpha^-1 x)", q is not None,
                           {"product": str(prod), "quotient": str(q)}))
    checks.append(SubCheck("alpha not in Q", not alpha.is_rational, {"alpha": str(alpha)}))
    checks.append(SubCheck("x does not divide alpha x", dk_divides(X, a_el) is None, {}))
    checks.append(SubCheck("x divides x*x", dk_divides(X, X * X) == X, {}))
    # Any factorization x = u*v has deg u + deg v = 1; the degree-0 factor is a
    # constant of the domain, i.e. a nonzero integer d, and the other is x/d.
    ds = [k for k in range(-sample, sample + 1) if k]
    shape_ok = all(
        dk_divides(DKElem.of(d), X) == DKElem(KPoly([0, Fraction(1, d)])) for d in ds
    ) and dk_divides(DKElem(KPoly([0, alpha])), X) is None
    checks.append(SubCheck(
        "factorizations of x are d*(x/d) with d a nonzero integer",
        shape_ok,
        {"argument": "degrees add to 1 and degree-0 elements are integers"},
    ))
    # x/d | alpha x  <=>  d*alpha in Z;   x/d | x/alpha  <=>  d/alpha in Z
    no_split = not integral_multiple_exists(alpha) and not integral_multiple_exists(alpha.inverse())
    checks.append(SubCheck(
        "no d with x/d dividing alpha x or x/alpha (symbolic)",
        no_split,
        {"condition": "d*alpha in Z or d/alpha in Z", "holds_for_some_d": str(not no_split)},
    ))
    sampled_ok = True
    for d in ds:
        xd = DKElem(KPoly([0, Fraction(1, d)]))
        if dk_divides(xd, a_el) is not None or dk_divides(xd, b_el) is not None:
            sampled_ok = False
    checks.append(SubCheck(f"sanity: |d| <= {sample} sampled", sampled_ok, {}))
    return WitnessReport.build(
        name="x-not-primal",
        statement="In Z + xK[x] with K a proper extension of Q, x is not primal, so the domain is not pre-Schreier.",
        inputs={"alpha": str(alpha), "p": "x", "a": str(a_el), "b": str(b_el)},
        details=checks,
        started=start,
        verdict_label="NotPrimal",
    )
