"""Seeded random element generators.

Default scale: at most 5 monomials, denominators up to 6, T indices 1..4,
exponent magnitudes up to 4.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classic import KPoly, QuadInt, QuadRat
from .dk import DKElem
from .exponents import ExpVec
from .f2_algebra import AlgElem

MAX_TERMS = 5
MAX_DEN = 6
MAX_INDEX = 4
MAX_EXP = 4


def rand_frac(rng: random.Random, hi: int = MAX_EXP, max_den: int = MAX_DEN,
              p_zero: float = 0.5) -> Fraction:
    if rng.random() < p_zero:
        return Fraction(0)
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, hi * den), den)


def rand_expvec(rng: random.Random, *, xyz: bool | None = None, t: bool | None = None,
                max_den: int = MAX_DEN) -> ExpVec:
    """Random exponent vector.

    ``xyz``/``t`` force (True) or forbid (False) X/Y/Z and T content.
    """
    while True:
        x, y, z = (rand_frac(rng, max_den=max_den) for _ in range(3))
        if xyz is False:
            x = y = z = Fraction(0)
        u = Fraction(0)
        exc: dict[int, Fraction] = {}
        if t is not False:
            if rng.random() < 0.3:
                u = rand_frac(rng, max_den=max_den, p_zero=0)
            for i in rng.sample(range(1, MAX_INDEX + 1), rng.randint(0, 3)):
                e = rand_frac(rng, max_den=max_den, p_zero=0)
                if u and rng.random() < 0.4:
                    e = -min(e, u)  # deviations below the bulk exponent
                exc[i] = e
        v = ExpVec(x, y, z, u, exc)
        if xyz is True and not v.has_xyz:
            continue
        if t is True and not v.has_t:
            continue
        return v


def rand_alg(rng: random.Random, *, max_terms: int = MAX_TERMS, allow_zero: bool = False,
             **kw) -> AlgElem:
    while True:
        f = AlgElem(rand_expvec(rng, **kw) for _ in range(rng.randint(1, max_terms)))
        if allow_zero or not f.is_zero:
            return f


def rand_r(rng: random.Random, *, max_terms: int = MAX_TERMS, with_one: float = 0.3) -> AlgElem:
    """Random nonzero element of R."""
    while True:
        ms = [rand_expvec(rng, xyz=True) for _ in range(rng.randint(1, max_terms))]
        if rng.random() < with_one:
            ms.append(ExpVec())
        f = AlgElem(ms)
        if not f.is_zero:
            return f


def rand_i(rng: random.Random, max_terms: int = MAX_TERMS, allow_zero: bool = True) -> AlgElem:
    """Random element of the ideal generated by positive powers of X, Y, Z."""
    n = rng.randint(0 if allow_zero else 1, max_terms)
    return AlgElem(rand_expvec(rng, xyz=True) for _ in range(n))


def rand_pure_t(rng: random.Random, max_terms: int = 3) -> AlgElem:
    """Random nonzero element of F2[T-monomials] that is not 1 or 0."""
    while True:
        ms = [rand_expvec(rng, xyz=False, t=True) for _ in range(rng.randint(1, max_terms))]
        if rng.random() < 0.5:
            ms.append(ExpVec())
        f = AlgElem(ms)
        if not f.is_zero and not f.is_one:
            return f


def rand_monomial(rng: random.Random, **kw) -> AlgElem:
    return AlgElem.monomial(rand_expvec(rng, **kw))


def rand_quadint(rng: random.Random, bound: int = 6) -> QuadInt:
    while True:
        q = QuadInt(rng.randint(-bound, bound), rng.randint(-bound // 2, bound // 2))
        if q:
            return q


def rand_quadrat(rng: random.Random, bound: int = 5, max_den: int = 4, rational: bool = False) -> QuadRat:
    def r():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
    return QuadRat(r(), 0 if rational or rng.random() < 0.3 else r())


def rand_kpoly(rng: random.Random, degree: int, const=None) -> KPoly:
    cs = [rand_quadrat(rng) for _ in range(degree + 1)]
    while not cs[-1]:
        cs[-1] = rand_quadrat(rng)
    if const is not None:
        cs[0] = QuadRat(const)
    return KPoly(cs)


def rand_dk(rng: random.Random, degree: int, const: int | None = None) -> DKElem:
    c = rng.randint(-6, 6) if const is None else const
    return DKElem(rand_kpoly(rng, degree, const=c))
