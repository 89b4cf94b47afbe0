from fractions import Fraction as F
from itertools import product

import pytest
import sympy

from divlab.classic import (
    SQRT2, KPoly, QuadInt, QuadRat, kpoly_divmod, kpoly_exact_div, kpoly_gcd,
    kpoly_is_irreducible, kpoly_prime_factor, quadint_divides, quadint_divisors,
    quadrat_sqrt, verify_oracle_factor,
)
from divlab.errors import OracleNeeded


def brute_divisors(a: QuadInt) -> set[QuadInt]:
    """Every d = u + v*sqrt(-5) with N(d) | N(a) that divides a, up to sign."""
    n = a.norm()
    out = set()
    for u, v in product(range(0, int(n**0.5) + 1), range(-int((n / 5) ** 0.5) - 1, int((n / 5) ** 0.5) + 2)):
        d = QuadInt(u, v)
        if d and n % d.norm() == 0 and quadint_divides(d, a) is not None:
            out.add(d.normalized())
    return out


def test_quadint_arithmetic():
    a, b = QuadInt(1, 1), QuadInt(1, -1)
    assert a * b == QuadInt(6)
    assert a.norm() == 6 and a.conj() == b
    assert str(QuadInt(3, 2)) == "3+2i5" and str(QuadInt(0, -1)) == "-1i5"


def test_quadint_divisors_of_6():
    got = set(quadint_divisors(QuadInt(6)))
    assert got == {QuadInt(1), QuadInt(2), QuadInt(3), QuadInt(6), QuadInt(1, 1), QuadInt(1, -1)}


@pytest.mark.parametrize("a", [QuadInt(2), QuadInt(9), QuadInt(1, 1), QuadInt(4, 2), QuadInt(21), QuadInt(-3, 4), QuadInt(0, 6)])
def test_quadint_divisors_match_brute_force(a):
    assert {d.normalized() for d in quadint_divisors(a)} == brute_divisors(a)


def test_quadint_divides():
    assert quadint_divides(QuadInt(2), QuadInt(1, 1)) is None
    assert quadint_divides(QuadInt(1, 1), QuadInt(6)) == QuadInt(1, -1)


def test_quadrat_field():
    a = QuadRat(1, 1)
    assert a * a.inverse() == 1
    assert SQRT2 * SQRT2 == 2
    assert not SQRT2.is_rational and QuadRat(F(1, 2)).is_rational
    assert quadrat_sqrt(QuadRat(3, 2)) in (QuadRat(1, 1), QuadRat(-1, -1))
    assert quadrat_sqrt(QuadRat(3)) is None


def _to_sympy(f: KPoly, x):
    r2 = sympy.sqrt(2)
    return sum((sympy.Rational(c.p.numerator, c.p.denominator) + sympy.Rational(c.q.numerator, c.q.denominator) * r2) * x**i
               for i, c in enumerate(f.coeffs))


def test_kpoly_divmod_and_gcd():
    x = KPoly.x()
    one = KPoly.const(1)
    f = (x - KPoly.const(SQRT2)) * (x + one)
    q, r = kpoly_divmod(f * x + one, f)
    assert q * f + r == f * x + one and r.degree < f.degree
    assert kpoly_exact_div(f, x + one) == x - KPoly.const(SQRT2)
    assert kpoly_gcd(f, (x + one) * (x + KPoly.const(3))) == x + one


@pytest.mark.parametrize("coeffs", [
    [-2, 0, 1], [1, 0, 1], [-3, 0, 1], [2, 0, 0, 1], [-2, 0, 0, 1], [QuadRat(1, 1), 1],
    [-1, -1, 1], [QuadRat(-3, -2), 0, 1], [1, 1, 1, 1], [QuadRat(0, 2), 0, 0, 1],
])
def test_kpoly_prime_factor_against_sympy(coeffs):
    x = sympy.symbols("x")
    f = KPoly([QuadRat.coerce(c) for c in coeffs])
    p = kpoly_prime_factor(f)
    assert kpoly_exact_div(f, p) is not None and p.degree >= 1
    expected_irreducible = len(sympy.factor_list(_to_sympy(f, x), x, extension=sympy.sqrt(2))[1]) == 1 and \
        sympy.factor_list(_to_sympy(f, x), x, extension=sympy.sqrt(2))[1][0][1] == 1
    assert kpoly_is_irreducible(f) == expected_irreducible
    # the returned factor is irreducible over Q(sqrt 2)
    facs = sympy.factor_list(_to_sympy(p, x), x, extension=sympy.sqrt(2))[1]
    assert len(facs) == 1 and facs[0][1] == 1


def test_prime_factor_example():
    x = KPoly.x()
    assert kpoly_prime_factor(x * x - KPoly.const(2)).monic() in (x - KPoly.const(SQRT2), x + KPoly.const(SQRT2))


def test_degree_four_needs_oracle():
    x = KPoly.x()
    f = x**4 + KPoly.const(1)
    with pytest.raises(OracleNeeded):
        kpoly_prime_factor(f)
    # x^4 + 1 = (x^2 + sqrt2 x + 1)(x^2 - sqrt2 x + 1)
    assert verify_oracle_factor(f, x * x + x * KPoly.const(SQRT2) + KPoly.const(1))
