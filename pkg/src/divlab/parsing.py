"""Text syntax for domain elements.

Monoid algebra (domains ``r0``, ``r``)::

    X^(3/2)*Y*T[5]^(1/3)*U^2 + X

``U`` is the product of all T_i; ``T[i]^e`` adjusts the exponent of T_i
alone and may be negative as long as the total stays nonnegative.

Integers (``z``), Z[sqrt(-5)] (``z5``: ``3+2i5``) and Z + xK[x] (``dk``:
``(1+1r2)*x^2 + 1``, with ``r2`` = sqrt(2)) share a small ring-expression
grammar with ``+ - *``, parentheses and nonnegative integer powers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .classic import KPoly, QuadInt, QuadRat
from .dk import DKElem
from .errors import NotMember, ParseError
from .exponents import classify_raw, ExpVec
from .f2_algebra import AlgElem, in_r


class NotInDomain(ParseError, NotMember):
    """Text is well formed but denotes an element outside the requested domain."""


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<surd>r2|i5)|(?P<var>[XYZUx])|(?P<t>T)|(?P<op>[-+*/^()\[\]]))"
)


@dataclass(frozen=True)
class Tok:
    kind: str  # int, surd, var, T, op, end
    text: str
    pos: int
    end: int


def tokenize(text: str) -> list[Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            j = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[j]!r}", text, j,
                             ("number", "operator", "variable"))
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(Tok("T" if kind == "t" else kind, m.group(kind), start, m.end()))
        pos = m.end()
    toks.append(Tok("end", "", len(text), len(text)))
    return toks


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, *texts: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in texts

    def take(self) -> Tok:
        t = self.tok
        self.i += 1
        return t

    def expect_op(self, text: str) -> Tok:
        if not self.peek(text):
            self.fail(f"expected {text!r}", (text,))
        return self.take()

    def expect_kind(self, kind: str, label: str) -> Tok:
        if self.tok.kind != kind:
            self.fail(f"expected {label}", (label,))
        return self.take()

    def fail(self, message: str, expected: tuple[str, ...] = (), at: Tok | None = None):
        tok = at or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{message}, found {found!r}", self.text, tok.pos, expected)

    def finish(self):
        if self.tok.kind != "end":
            self.fail("unexpected trailing input", ("end of input",))


# -- monoid algebra -----------------------------------------------------------


def _exponent(c: _Cursor) -> Fraction:
    if c.tok.kind == "int":
        return Fraction(int(c.take().text))
    c.expect_op("(")
    sign = 1
    if c.peek("-"):
        c.take()
        sign = -1
    num = int(c.expect_kind("int", "integer").text)
    den = 1
    if c.peek("/"):
        c.take()
        dtok = c.expect_kind("int", "integer")
        den = int(dtok.text)
        if den == 0:
            c.fail("zero denominator", at=dtok)
    c.expect_op(")")
    return sign * Fraction(num, den)


def _monomial(c: _Cursor) -> ExpVec | None:
    start = c.tok.pos
    comps = {"X": Fraction(0), "Y": Fraction(0), "Z": Fraction(0), "U": Fraction(0)}
    exc: dict[int, Fraction] = {}
    coeff = 1
    while True:
        t = c.tok
        if t.kind == "int":
            coeff *= int(c.take().text)
        elif t.kind == "var" and t.text in comps:
            c.take()
            e = _exponent(c) if c.peek("^") and c.take() else Fraction(1)
            comps[t.text] += e
        elif t.kind == "T":
            c.take()
            c.expect_op("[")
            itok = c.expect_kind("int", "index")
            idx = int(itok.text)
            if idx < 1:
                c.fail("T index must be positive", at=itok)
            c.expect_op("]")
            e = _exponent(c) if c.peek("^") and c.take() else Fraction(1)
            exc[idx] = exc.get(idx, Fraction(0)) + e
        else:
            c.fail("expected a monomial factor", ("X", "Y", "Z", "U", "T[i]", "0", "1"))
        if c.peek("*"):
            c.take()
            continue
        break
    verdict = classify_raw(comps["X"], comps["Y"], comps["Z"], comps["U"], exc)
    if verdict.verdict.name == "NOT_IN_Q_NEGATIVE":
        raise ParseError(f"invalid monomial: {verdict.explanation}", c.text, start)
    if coeff % 2 == 0:
        return None
    return ExpVec(comps["X"], comps["Y"], comps["Z"], comps["U"], exc)


def parse_monoid(text: str, restricted: bool = False) -> AlgElem:
    c = _Cursor(text)
    monos = []
    while True:
        m = _monomial(c)
        if m is not None:
            monos.append(m)
        if c.peek("+"):
            c.take()
            continue
        break
    c.finish()
    f = AlgElem(monos)
    if restricted and not in_r(f):
        bad = [str(m) for m in f.monomials if not (m.has_xyz or not m.has_t)]
        raise NotInDomain(f"NotInR: monomial(s) {', '.join(bad)} have T content without X, Y or Z", text, 0)
    return f


def parse_expvec(text: str) -> ExpVec:
    f = parse_monoid(text)
    if len(f) != 1:
        raise ParseError("expected a single monomial", text, 0)
    return f.only_monomial()


# -- ring expressions -----------------------------------------------------------


class _Ring:
    """Atom handlers for one coefficient ring."""

    def __init__(self, tag: str):
        self.tag = tag

    def number(self, n: Fraction):
        if self.tag == "dk":
            return KPoly([n])
        if n.denominator != 1:
            raise ValueError("fractions are only allowed in dk polynomials")
        return QuadInt(int(n)) if self.tag == "z5" else int(n)

    def surd(self, name: str):
        if self.tag == "z5" and name == "i5":
            return QuadInt(0, 1)
        if self.tag == "dk" and name == "r2":
            return KPoly([QuadRat(0, 1)])
        raise ValueError(f"{name} is not available in domain {self.tag}")

    def var(self, name: str):
        if self.tag == "dk" and name == "x":
            return KPoly.x()
        raise ValueError(f"variable {name} is not available in domain {self.tag}")

    def one(self):
        return self.number(Fraction(1))


def _ring_expr(c: _Cursor, R: _Ring):
    val = _ring_term(c, R)
    while c.peek("+", "-"):
        op = c.take().text
        rhs = _ring_term(c, R)
        val = val + rhs if op == "+" else val - rhs
    return val


def _ring_term(c: _Cursor, R: _Ring):
    val = _ring_factor(c, R)
    while c.peek("*"):
        c.take()
        val = val * _ring_factor(c, R)
    return val


def _ring_factor(c: _Cursor, R: _Ring):
    if c.peek("-"):
        c.take()
        return -_ring_factor(c, R)
    base = _ring_primary(c, R)
    if c.peek("^"):
        c.take()
        n = int(c.expect_kind("int", "integer exponent").text)
        out = R.one()
        for _ in range(n):
            out = out * base
        return out
    return base


def _ring_primary(c: _Cursor, R: _Ring):
    t = c.tok
    try:
        if t.kind == "int":
            c.take()
            n = Fraction(int(t.text))
            if c.peek("/") and R.tag == "dk":
                c.take()
                dtok = c.expect_kind("int", "denominator")
                d = int(dtok.text)
                if d == 0:
                    c.fail("zero denominator", at=dtok)
                n /= d
            val = R.number(n)
            # implicit product only for a literal directly followed by a surd
            if c.tok.kind == "surd" and c.tok.pos == c.toks[c.i - 1].end:
                val = val * R.surd(c.take().text)
            return val
        if t.kind == "surd":
            c.take()
            return R.surd(t.text)
        if t.kind == "var":
            c.take()
            return R.var(t.text)
    except ValueError as exc:
        raise ParseError(str(exc), c.text, t.pos) from None
    if c.peek("("):
        c.take()
        v = _ring_expr(c, R)
        c.expect_op(")")
        return v
    expected = {"z": ("integer", "("), "z5": ("integer", "i5", "("),
                "dk": ("number", "r2", "x", "(")}[R.tag]
    c.fail("expected an operand", expected)


def parse_ring(text: str, tag: str):
    c = _Cursor(text)
    R = _Ring(tag)
    v = _ring_expr(c, R)
    c.finish()
    return v


def parse_kpoly(text: str) -> KPoly:
    return parse_ring(text, "dk")


def parse_expr(text: str, domain_tag: str):
    """Parse ``text`` as an element of the domain named ``domain_tag``."""
    tag = getattr(getattr(domain_tag, "id", None), "value", domain_tag)
    if tag in ("r", "r0"):
        return parse_monoid(text, restricted=(tag == "r"))
    if tag == "z":
        return parse_ring(text, "z")
    if tag == "z5":
        return parse_ring(text, "z5")
    if tag == "dk":
        p = parse_ring(text, "dk")
        try:
            return DKElem(p)
        except NotMember as exc:
            raise NotInDomain(str(exc), text, 0) from None
    raise ValueError(f"unknown domain tag {domain_tag!r}")


def parse_poly_coeffs(text: str, domain_tag: str) -> list:
    """Comma-separated coefficient list, constant term first: ``"2, 1+1i5"``."""
    parts = [s for s in text.split(",")]
    if any(not s.strip() for s in parts):
        raise ParseError("empty coefficient in list", text, 0)
    return [parse_expr(s, domain_tag) for s in parts]


def print_expr(e) -> str:
    """Canonical text for any domain element; inverse of :func:`parse_expr`."""
    if isinstance(e, (AlgElem, ExpVec, QuadInt, KPoly, DKElem, QuadRat)):
        return str(e)
    if isinstance(e, int):
        return str(e)
    raise TypeError(f"cannot print {type(e).__name__}")
