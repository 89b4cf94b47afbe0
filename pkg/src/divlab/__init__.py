"""Exact-arithmetic experiments on divisibility: GL-domains, MCDs, primal and
prime-like elements, over Z, Z[sqrt(-5)], a monoid algebra over F2 and
Z + xQ(sqrt 2)[x]."""

from .classic import KPoly, QuadInt, QuadRat
from .dk import DKElem, prime_like_witness, x_not_primal_check
from .domains import DK, R, R0, Z, Z5, get_domain
from .errors import (
    ClaimViolation,
    DivlabError,
    EmptyContent,
    Fault,
    NotMember,
    OracleNeeded,
    ParseError,
    PreconditionFailed,
    Undecided,
    UnitFactor,
)
from .exponents import ExpVec, in_qr, is_in_qr
from .f2_algebra import AlgElem, antimatter_factor, claim_check, exact_div, mcd_verify, sqrt
from .parsing import parse_expr, print_expr
from .predicates import (
    Verdict,
    aq_triple_check,
    gauss_product_check,
    is_primitive,
    primal_check,
    primal_decompose,
    prime_like_check,
    primitive_check,
)
from .witnesses import WITNESSES, FamilyParams

__version__ = "0.1.0"

__all__ = [
    "AlgElem", "ClaimViolation", "DK", "DKElem", "DivlabError", "EmptyContent", "ExpVec",
    "FamilyParams", "Fault", "KPoly", "NotMember", "OracleNeeded", "ParseError",
    "PreconditionFailed", "QuadInt", "QuadRat", "R", "R0", "Undecided", "UnitFactor",
    "Verdict", "WITNESSES", "Z", "Z5", "antimatter_factor", "aq_triple_check", "claim_check",
    "exact_div", "gauss_product_check", "get_domain", "in_qr", "is_in_qr", "is_primitive",
    "mcd_verify", "parse_expr", "primal_check", "primal_decompose", "prime_like_check",
    "prime_like_witness", "primitive_check", "print_expr", "sqrt", "x_not_primal_check",
]
