"""Division algorithm against a finite polynomial set.

Strategy is fixed so traces are reproducible: repeatedly take the largest
monomial of the working polynomial, divide it by the first member of G whose
leading monomial divides it (leftmost occurrence for words), otherwise move it
to the remainder. Tails are reduced too, so the remainder is supported on N(G).
"""

from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Tuple

from algebra_core import monomials as mono
from algebra_core.orderings import OrderingSpec
from poly.polynomial import Polynomial
from utils.config_loader import settings
from utils.errors import ArgumentError, DhGroebnerError


class ReductionStep(NamedTuple):
    divisor: int
    left: tuple
    right: tuple
    scalar: object


@dataclass
class ReductionTrace:
    """f = sum(scalar * left * G[divisor] * right) + remainder"""

    divisors: Tuple[Polynomial, ...]
    remainder: Polynomial
    steps: List[ReductionStep] = field(default_factory=list)

    def ideal_part(self) -> Polynomial:
        total = Polynomial.zero(self.remainder.ctx)
        for step in self.steps:
            total = total + self.divisors[step.divisor].mul_term(step.left, step.scalar, step.right)
        return total

    def replay(self) -> Polynomial:
        return self.ideal_part() + self.remainder

    def reduced_to_zero(self) -> bool:
        return self.remainder.is_zero()


class Decomposition(NamedTuple):
    ideal_part: Polynomial
    remainder: Polynomial
    trace: ReductionTrace


def _check_divisors(f: Polynomial, G: Sequence[Polynomial], ord: OrderingSpec):
    ord.require_ctx(f.ctx)
    for g in G:
        f.ctx.require_same(g.ctx)
        if g.is_zero():
            raise ArgumentError("Cannot reduce by the zero polynomial")


def normal_form(f: Polynomial, G: Sequence[Polynomial], ord: OrderingSpec) -> ReductionTrace:
    G = tuple(G)
    _check_divisors(f, G, ord)
    ctx = f.ctx
    field_ = ctx.field
    key = ord.key

    leads = [g.leading(ord) for g in G]
    inverses = [field_.inverse(lead.coefficient) for lead in leads]

    work = dict(f.terms())
    remainder = {}
    steps: List[ReductionStep] = []

    while work:
        m = max(work, key=key)
        c = work[m]
        for j, lead in enumerate(leads):
            witness = mono.divide_monomial(lead.monomial, m, ctx)
            if witness is None:
                continue
            scalar = c * inverses[j]
            for gm, gc in G[j].terms():
                target = mono.multiply_sides(witness.left, gm, witness.right, ctx)
                value = work.get(target, field_.zero) - scalar * gc
                if field_.is_zero(value):
                    work.pop(target, None)
                else:
                    work[target] = value
            steps.append(ReductionStep(j, witness.left, witness.right, scalar))
            break
        else:
            remainder[m] = work.pop(m)

    trace = ReductionTrace(G, Polynomial._raw(ctx, remainder), steps)
    if settings.reduction.verify_traces and trace.replay() != f:
        raise DhGroebnerError(f"Reduction trace of {f} does not replay")
    return trace


def reduces_to_zero(f: Polynomial, G: Sequence[Polynomial], ord: OrderingSpec) -> bool:
    return normal_form(f, G, ord).reduced_to_zero()


def is_normal(m: tuple, leading_monomials: Sequence[tuple], ctx) -> bool:
    return not any(mono.divides(u, m, ctx) for u in leading_monomials)


def verify_decomposition(f: Polynomial, G: Sequence[Polynomial], ord: OrderingSpec) -> Decomposition:
    """f = (f - r) + r with f - r in <G> (by its trace) and r in span N(G)"""
    trace = normal_form(f, G, ord)
    ideal_part = trace.ideal_part()
    if ideal_part + trace.remainder != f:
        raise DhGroebnerError(f"Decomposition of {f} does not add up")
    lms = [g.leading_monomial(ord) for g in G]
    if not all(is_normal(m, lms, f.ctx) for m in trace.remainder.monomials()):
        raise DhGroebnerError(f"Remainder of {f} is not normal")
    return Decomposition(ideal_part, trace.remainder, trace)
