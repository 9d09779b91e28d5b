"""Canonical text form of monomials and polynomials.

Terms are listed strictly descending under the given ordering, a coefficient
is separated from its monomial by a space, and factors are space separated
with ``^`` for repeated runs: ``y + 1/2 x``, ``X^2 - 16 T X + 48 T^2``.
session.parser reads this form back unchanged.
"""

from typing import List, Optional

from algebra_core.context import RingContext
from algebra_core.orderings import OrderingSpec, default_ordering
from poly.polynomial import Polynomial


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def format_monomial(m: tuple, ctx: RingContext) -> str:
    """Empty string for the identity"""
    names = ctx.variables
    if ctx.is_commutative:
        h = ctx.homog_index
        # t^r w: the homogenization variable is written first
        order = ([h] if h is not None else []) + [i for i in range(ctx.nvars) if i != h]
        return " ".join(_power(names[i], m[i]) for i in order if m[i])

    factors: List[str] = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        factors.append(_power(names[m[i]], j - i))
        i = j
    return " ".join(factors)


def format_term(m: tuple, coefficient, ctx: RingContext) -> str:
    """Unsigned term; the sign is handled by format_polynomial"""
    field = ctx.field
    magnitude = -coefficient if field.is_negative(coefficient) else coefficient
    body = format_monomial(m, ctx)
    if not body:
        return field.render(magnitude)
    if field.is_one(magnitude):
        return body
    return f"{field.render(magnitude)} {body}"


def format_polynomial(f: Polynomial, ord: Optional[OrderingSpec] = None) -> str:
    if f.is_zero():
        return "0"
    ord = ord or default_ordering(f.ctx)
    field = f.ctx.field
    parts: List[str] = []
    for k, (m, c) in enumerate(f.sorted_terms(ord)):
        negative = field.is_negative(c)
        text = format_term(m, c, f.ctx)
        if k == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)


def format_polynomials(polys, ord: Optional[OrderingSpec] = None) -> str:
    return "{" + ", ".join(format_polynomial(f, ord) for f in polys) + "}"
