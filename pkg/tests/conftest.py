from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from divlab.exponents import ExpVec
from divlab.f2_algebra import AlgElem

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_q = st.fractions(min_value=0, max_value=3, max_denominator=6)


@st.composite
def expvecs(draw, xyz: bool | None = None, t: bool | None = None):
    x, y, z = (draw(small_q) for _ in range(3))
    if xyz is False:
        x = y = z = Fraction(0)
    u = Fraction(0)
    exc = {}
    if t is not False:
        u = draw(st.sampled_from([Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]))
        for i in draw(st.sets(st.integers(1, 4), max_size=3)):
            exc[i] = draw(st.fractions(min_value=-u, max_value=3, max_denominator=6))
    v = ExpVec(x, y, z, u, exc)
    if xyz is True and not v.has_xyz:
        v = ExpVec(x + 1, y, z, u, exc)
    if t is True and not v.has_t:
        v = ExpVec(x, y, z, u + 1, exc)
    return v


def algelems(min_size: int = 1, max_size: int = 4, **kw):
    return st.lists(expvecs(**kw), min_size=min_size, max_size=max_size).map(AlgElem).filter(
        lambda f: min_size == 0 or not f.is_zero
    )


def r_elems():
    """Nonzero elements of R: monomials with X/Y/Z content plus optionally 1."""
    return st.tuples(st.lists(expvecs(xyz=True), min_size=0, max_size=4), st.booleans()).map(
        lambda p: AlgElem(p[0] + ([ExpVec()] if p[1] else []))
    ).filter(lambda f: not f.is_zero)


@pytest.fixture
def rng():
    import random
    return random.Random(12345)
