"""Degree-bounded completion in the free algebra K<X>.

Candidates (generators and S-elements of overlaps) sit in a heap keyed by
(degree, creation index). Each nonzero remainder joins the basis, evicting
elements whose leading word contains its leading word; evicted elements are
pushed back as candidates. Overlaps whose word exceeds the bound are not
formed and the result is flagged incomplete.
"""

import heapq
from itertools import count
from typing import List, Optional, Sequence

from algebra_core.monomials import degree, divides
from algebra_core.orderings import OrderingSpec
from groebner.basis import GroebnerBasis, GroebnerCheck, interreduce
from groebner.overlaps import Overlap, overlaps
from poly.polynomial import Polynomial
from reduction.normal_form import normal_form
from utils.config_loader import settings
from utils.errors import ArgumentError, ZeroPolynomialError
from utils.logger import log


def _require_free(ord: OrderingSpec):
    if ord.ctx.is_commutative:
        raise ArgumentError("complete_nc needs a free algebra; use buchberger for commutative rings")


def s_element(f: Polynomial, g: Polynomial, overlap: Overlap, ord: OrderingSpec) -> Polynomial:
    field_ = f.ctx.field
    lcf, lcg = f.leading_coefficient(ord), g.leading_coefficient(ord)
    return (f.mul_term(overlap.first_left, field_.inverse(lcf), overlap.first_right)
            - g.mul_term(overlap.second_left, field_.inverse(lcg), overlap.second_right))


def complete_nc(F: Sequence[Polynomial], ord: OrderingSpec, degree_bound: Optional[int] = None) -> GroebnerBasis:
    _require_free(ord)
    ctx = ord.ctx
    bound = settings.engine.degree_bound if degree_bound is None else degree_bound
    generators = [f for f in F if not f.is_zero()]
    for f in generators:
        ord.require_ctx(f.ctx)

    if not generators:
        return GroebnerBasis((), ord, minimal=True, reduced=True, complete=True, degree_bound=bound)

    top = max(f.degree() for f in generators)
    if bound < top:
        raise ArgumentError(f"Degree bound {bound} is below the generator degree {top}")

    log.info(f"complete_nc: {len(generators)} generators in {ctx.describe()}, bound {bound}")
    counter = count()
    heap = []
    for f in generators:
        heapq.heappush(heap, (f.degree(), next(counter), f))

    basis: List[Polynomial] = []
    truncated = False
    formed = 0

    while heap:
        _, _, h = heapq.heappop(heap)
        r = normal_form(h, basis, ord).remainder
        if r.is_zero():
            continue
        r = r.monic(ord)
        lm = r.leading_monomial(ord)

        survivors = []
        for g in basis:
            if divides(lm, g.leading_monomial(ord), ctx):
                heapq.heappush(heap, (g.degree(), next(counter), g))
            else:
                survivors.append(g)
        basis = survivors + [r]

        for g in basis:
            is_self = g is r
            for o in overlaps(lm, g.leading_monomial(ord), include_identical=not is_self):
                if degree(o.word, ctx) > bound:
                    truncated = True
                    continue
                s = s_element(r, g, o, ord)
                formed += 1
                if not s.is_zero():
                    heapq.heappush(heap, (s.degree(), next(counter), s))

    if truncated:
        log.warning(f"complete_nc: overlaps beyond degree {bound} were not resolved")
    result = interreduce(GroebnerBasis.from_polynomials(basis, ord))
    log.info(f"complete_nc: {formed} S-elements formed, basis has {len(result)} elements")
    return result.with_flags(complete=not truncated, degree_bound=bound)


def verify_groebner_nc(G: Sequence[Polynomial], ord: OrderingSpec, degree_bound: Optional[int] = None) -> GroebnerCheck:
    """Every overlap S-element of degree at most the bound reduces to zero by G"""
    _require_free(ord)
    bound = settings.engine.degree_bound if degree_bound is None else degree_bound
    elements = list(G.elements if isinstance(G, GroebnerBasis) else G)
    if any(g.is_zero() for g in elements):
        raise ZeroPolynomialError("Groebner basis candidates must be nonzero")

    ctx = ord.ctx
    lms = [g.leading_monomial(ord) for g in elements]
    check = GroebnerCheck(True)
    for j in range(len(elements)):
        for i in range(j + 1):
            for o in overlaps(lms[i], lms[j], include_identical=i != j):
                if degree(o.word, ctx) > bound:
                    check.truncated = True
                    continue
                trace = normal_form(s_element(elements[i], elements[j], o, ord), elements, ord)
                check.certificate.append((i, j, trace))
                if not trace.reduced_to_zero():
                    check.is_groebner = False
    return check
