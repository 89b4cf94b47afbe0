"""Divisibility predicates that work over any registered domain.

Every check returns a :class:`Verdict`; ``Unknown`` is reported as such and
never folded into a negative answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .domains import Domain, DomainElem, get_domain
from .errors import EmptyContent, Fault, PreconditionFailed, Undecided

HOLDS = {"Primitive", "Holds", "Witness", "Primal", "Vacuous"}
FAILS = {"NotPrimitive", "Violation", "NoWitness", "NotPrimal"}


@dataclass(frozen=True)
class Verdict:
    """Result of one predicate; ``verdict`` is one of the strings in HOLDS, FAILS or "Unknown"."""

    verdict: str
    witness: Any = None
    quotients: tuple = ()
    case: str = ""
    detail: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool | None:
        if self.verdict in HOLDS:
            return True
        if self.verdict in FAILS:
            return False
        return None

    def to_dict(self, fmt=str) -> dict:
        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else fmt(self.witness),
            "quotients": [fmt(q) for q in self.quotients],
            "case": self.case,
            "detail": self.detail,
            **{k: v for k, v in self.extra.items()},
        }


@dataclass(frozen=True)
class PrimalDecomposition:
    r_part: DomainElem
    s_part: DomainElem
    unit_slack: DomainElem


def _content(D: Domain, coeffs: Sequence) -> list:
    nz = [D.check(c) for c in coeffs if not D.is_zero(D.check(c))]
    if not nz:
        raise EmptyContent("content needs at least one nonzero coefficient")
    return nz


def is_primitive(D: Domain | str, coeffs: Sequence) -> bool:
    """True iff the coefficients have no common nonunit divisor.

    Raises :class:`Undecided` when the domain has no procedure for the inputs.
    """
    D = get_domain(D)
    nz = _content(D, coeffs)
    if any(D.is_unit(c) for c in nz):
        return True
    return D.common_nonunit_divisor(nz) is None


def coprime(D: Domain | str, a, b) -> bool:
    return is_primitive(D, [a, b])


def primitive_check(D: Domain | str, coeffs: Sequence) -> Verdict:
    D = get_domain(D)
    nz = _content(D, coeffs)
    if any(D.is_unit(c) for c in nz):
        return Verdict("Primitive", detail="a coefficient is a unit")
    try:
        d = D.common_nonunit_divisor(nz)
    except Undecided as exc:
        return Verdict("Unknown", detail=str(exc))
    if d is None:
        return Verdict("Primitive")
    return Verdict("NotPrimitive", witness=d, quotients=tuple(D.divide(c, d) for c in nz),
                   detail="common nonunit divisor")


def poly_mul(D: Domain, f: Sequence, g: Sequence) -> list:
    """Coefficients (low to high) of the product of two polynomials over ``D``."""
    if not f or not g:
        return []
    out = [D.zero() for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = D.add(out[i + j], D.mul(a, b))
    return out


def gauss_product_check(D: Domain | str, f: Sequence, g: Sequence) -> Verdict:
    """Multiply two primitive polynomials and report whether the product is primitive.

    ``NotPrimitive`` certifies that ``D`` is not a GL-domain, with ``f`` and
    ``g`` as the witness pair.
    """
    D = get_domain(D)
    f = [D.check(c) for c in f]
    g = [D.check(c) for c in g]
    for name, h in (("f", f), ("g", g)):
        try:
            ok = is_primitive(D, h)
        except Undecided as exc:
            return Verdict("Unknown", detail=f"primitivity of {name}: {exc}")
        if not ok:
            raise PreconditionFailed(f"{name} is not primitive")
    prod = poly_mul(D, f, g)
    v = primitive_check(D, prod)
    return Verdict(v.verdict, v.witness, v.quotients, detail=v.detail,
                   extra={"product": [str(c) for c in prod]})


def aq_triple_check(D: Domain | str, r, s, t) -> Verdict:
    """Test gcd(r,s) = gcd(r,t) = 1  =>  gcd(r,st) = 1 on one triple."""
    D = get_domain(D)
    r, s, t = D.check(r), D.check(s), D.check(t)
    try:
        if not (coprime(D, r, s) and coprime(D, r, t)):
            return Verdict("Vacuous", detail="r is not coprime to both s and t")
        st = D.mul(s, t)
        if coprime(D, r, st):
            return Verdict("Holds")
        return Verdict("Violation", witness=D.common_nonunit_divisor([r, st]),
                       detail="gcd(r, s) = gcd(r, t) = 1 but gcd(r, st) != 1")
    except Undecided as exc:
        return Verdict("Unknown", detail=str(exc))


def _require_divides(D: Domain, p, a, b) -> None:
    if D.is_zero(p) or D.is_unit(p):
        raise PreconditionFailed(f"p = {p} must be a nonzero nonunit")
    if D.divide(D.mul(a, b), p) is None:
        raise PreconditionFailed(f"{p} does not divide the product of {a} and {b}")


def prime_like_check(D: Domain | str, p, r, s) -> Verdict:
    """Look for a nonunit divisor of ``p`` dividing ``r`` or ``s``, given ``p | rs``.

    ``NoWitness`` certifies that ``p`` is not prime-like, so ``D`` is not GL.
    """
    D = get_domain(D)
    p, r, s = D.check(p), D.check(r), D.check(s)
    _require_divides(D, p, r, s)
    try:
        w = D.prime_like_divisor(p, r, s)
    except Undecided as exc:
        return Verdict("Unknown", detail=str(exc))
    if w is None:
        return Verdict("NoWitness", detail="no nonunit divisor of p divides r or s")
    target = r if w.side == "r" else s
    qp, qt = D.divide(p, w.divisor), D.divide(target, w.divisor)
    if D.is_unit(w.divisor) or qp is None or qt is None:
        raise Fault(f"prime-like witness {w.divisor} failed re-verification")
    return Verdict("Witness", witness=w.divisor, quotients=(qp, qt), case=w.case,
                   extra={"side": w.side})


def primal_decompose(D: Domain | str, p, a, b) -> PrimalDecomposition | Verdict:
    """Split ``p | ab`` as ``p = d * d' * u`` with ``d | a``, ``d' | b``, ``u`` a unit.

    Runs the chain d = mcd(p, a), p' = p/d, d' = mcd(p', b), u = p'/d'.  If
    ``u`` is not a unit the chain failed; in domains with enumerable
    factorizations every split of ``p`` is then tried before answering
    ``NotPrimal``.  Returns a ``Verdict`` for ``NotPrimal``/``Unknown``.
    """
    D = get_domain(D)
    p, a, b = D.check(p), D.check(a), D.check(b)
    _require_divides(D, p, a, b)
    try:
        d = D.mcd(p, a)
        p1 = D.divide(p, d)
        d1 = D.mcd(p1, b)
        u = D.divide(p1, d1)
    except Undecided as exc:
        return Verdict("Unknown", detail=str(exc))
    if p1 is None or u is None:
        raise Fault("mcd does not divide its argument")
    if D.is_unit(u):
        dec = PrimalDecomposition(d, d1, u)
        verify_decomposition(D, p, a, b, dec)
        return dec
    chain = {"mcd(p,a)": str(d), "mcd(p',b)": str(d1), "remainder": str(u)}
    if D.capabilities.has_divisor_enumeration:
        for x, y in D.factorizations(p):
            if D.divide(a, x) is not None and D.divide(b, y) is not None:
                dec = PrimalDecomposition(x, y, D.one())
                verify_decomposition(D, p, a, b, dec)
                return dec
        return Verdict("NotPrimal", witness=u, detail="no factorization of p splits across a and b",
                       extra={"chain": chain, "exhaustive": True})
    return Verdict("NotPrimal", witness=u, detail="mcd chain ended with a nonunit",
                   extra={"chain": chain, "exhaustive": False})


def verify_decomposition(D: Domain, p, a, b, dec: PrimalDecomposition) -> None:
    if D.mul(D.mul(dec.r_part, dec.s_part), dec.unit_slack) != p:
        raise Fault("primal decomposition does not multiply back to p")
    if not D.is_unit(dec.unit_slack):
        raise Fault("unit slack is not a unit")
    if D.divide(a, dec.r_part) is None or D.divide(b, dec.s_part) is None:
        raise Fault("primal decomposition parts do not divide a and b")


def primal_check(D: Domain | str, p, a, b) -> Verdict:
    """:func:`primal_decompose` wrapped as a :class:`Verdict`."""
    res = primal_decompose(D, p, a, b)
    if isinstance(res, Verdict):
        return res
    D = get_domain(D)
    return Verdict("Primal", witness=None,
                   quotients=(res.r_part, res.s_part, res.unit_slack),
                   detail="p = r_part * s_part * unit_slack",
                   extra={"r_quotient": str(D.divide(a, res.r_part)),
                          "s_quotient": str(D.divide(b, res.s_part))})
