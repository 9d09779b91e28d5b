"""Buchberger completion in K[x] with the normal selection strategy.

Pairs are (i, j) indices into the growing basis; Gebauer-Moeller elimination
drops pairs that the coprime-LM or chain criterion shows to be redundant.
"""

from itertools import count
from typing import Dict, List, Optional, Sequence, Tuple

from algebra_core import monomials as mono
from algebra_core.orderings import OrderingSpec
from groebner.basis import GroebnerBasis, GroebnerCheck, interreduce
from poly.polynomial import Polynomial
from reduction.normal_form import normal_form
from utils.config_loader import settings
from utils.errors import ArgumentError, ZeroPolynomialError
from utils.logger import log

Pair = Tuple[int, int]


def _require_commutative(ord: OrderingSpec):
    if not ord.ctx.is_commutative:
        raise ArgumentError("Buchberger completion needs a commutative ring; use complete_nc for free algebras")


def s_polynomial(f: Polynomial, g: Polynomial, ord: OrderingSpec) -> Polynomial:
    """lcm/LT(f) * f - lcm/LT(g) * g"""
    _require_commutative(ord)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-polynomial of the zero polynomial")
    f.ctx.require_same(g.ctx)
    ctx = f.ctx
    field_ = ctx.field
    lf, lg = f.leading(ord), g.leading(ord)
    lcm = mono.lcm(lf.monomial, lg.monomial)
    left_f = mono.divide_monomial(lf.monomial, lcm, ctx).left
    left_g = mono.divide_monomial(lg.monomial, lcm, ctx).left
    one = ctx.one()
    return (f.mul_term(left_f, field_.inverse(lf.coefficient), one)
            - g.mul_term(left_g, field_.inverse(lg.coefficient), one))


def _update(lms: List[tuple], pairs: Dict[Pair, int], lmf: tuple, ord: OrderingSpec,
            counter, criteria: bool) -> Dict[Pair, int]:
    """Pairs after the element with leading monomial ``lmf`` joins the basis at index len(lms)"""
    ctx = ord.ctx
    new = len(lms)
    lcm = mono.lcm

    if not criteria:
        for i in range(new):
            pairs[(i, new)] = next(counter)
        return pairs

    # chain criterion on the old pairs
    kept = {}
    for (i, j), stamp in pairs.items():
        l_ij = lcm(lms[i], lms[j])
        if (not mono.divides(lmf, l_ij, ctx)
                or l_ij == lcm(lms[i], lmf) or l_ij == lcm(lms[j], lmf)):
            kept[(i, j)] = stamp
        else:
            log.debug(f"chain criterion drops pair {(i, j)}")

    by_lcm: Dict[tuple, List[int]] = {}
    for i in range(new):
        by_lcm.setdefault(lcm(lms[i], lmf), []).append(i)
    minimal_lcms: List[tuple] = []
    for L in sorted(by_lcm, key=ord.key):
        if all(not mono.divides(L_, L, ctx) for L_ in minimal_lcms):
            minimal_lcms.append(L)

    for L in minimal_lcms:
        if any(mono.is_coprime(lms[i], lmf) for i in by_lcm[L]):
            log.debug(f"coprime criterion drops pairs with lcm {L}")
            continue
        kept[(min(by_lcm[L]), new)] = next(counter)
    return kept


def buchberger(F: Sequence[Polynomial], ord: OrderingSpec, pair_criteria: Optional[bool] = None) -> GroebnerBasis:
    _require_commutative(ord)
    criteria = settings.engine.pair_criteria if pair_criteria is None else pair_criteria
    ctx = ord.ctx
    generators = [f for f in F if not f.is_zero()]
    for f in generators:
        ord.require_ctx(f.ctx)

    if not generators:
        log.info("buchberger: zero ideal")
        return GroebnerBasis((), ord, minimal=True, reduced=True, complete=True)

    log.info(f"buchberger: {len(generators)} generators in {ctx.describe()} under {ord.describe()}")
    counter = count()
    G: List[Polynomial] = []
    lms: List[tuple] = []
    pairs: Dict[Pair, int] = {}

    for f in generators:
        g = f.monic(ord)
        lm = g.leading_monomial(ord)
        pairs = _update(lms, pairs, lm, ord, counter, criteria)
        G.append(g)
        lms.append(lm)

    reductions = 0
    while pairs:
        # normal strategy: smallest lcm degree, FIFO among ties
        i, j = min(pairs, key=lambda p: (mono.degree(mono.lcm(lms[p[0]], lms[p[1]]), ctx), pairs[p]))
        del pairs[(i, j)]
        s = s_polynomial(G[i], G[j], ord)
        r = normal_form(s, G, ord).remainder
        reductions += 1
        if r.is_zero():
            log.debug(f"pair {(i, j)} reduces to zero")
            continue
        r = r.monic(ord)
        lm = r.leading_monomial(ord)
        log.debug(f"pair {(i, j)} adds element with LM {lm}")
        pairs = _update(lms, pairs, lm, ord, counter, criteria)
        G.append(r)
        lms.append(lm)

    basis = interreduce(GroebnerBasis.from_polynomials(G, ord)).with_flags(complete=True)
    log.info(f"buchberger: {reductions} pairs reduced, reduced basis has {len(basis)} elements")
    return basis


def verify_groebner(G: Sequence[Polynomial], ord: OrderingSpec) -> GroebnerCheck:
    """Every S-polynomial of a pair in G must reduce to zero by G"""
    _require_commutative(ord)
    elements = list(G.elements if isinstance(G, GroebnerBasis) else G)
    if any(g.is_zero() for g in elements):
        raise ZeroPolynomialError("Groebner basis candidates must be nonzero")

    check = GroebnerCheck(True)
    for j in range(len(elements)):
        for i in range(j):
            trace = normal_form(s_polynomial(elements[i], elements[j], ord), elements, ord)
            check.certificate.append((i, j, trace))
            if not trace.reduced_to_zero():
                check.is_groebner = False
    return check
