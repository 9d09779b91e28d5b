from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import numpy as np

from algebra_core.monomials import monomials_of_degree
from groebner.basis import GroebnerBasis
from poly.polynomial import HomogeneousPolynomial, Polynomial
from utils.config_loader import settings
from utils.errors import ZeroPolynomialError


@dataclass
class NormalMonomialSet:
    """Monomials divisible by no leading monomial of ``basis``, by degree up to ``max_degree``"""

    basis: GroebnerBasis
    max_degree: int
    by_degree: Dict[int, List[tuple]] = field(default_factory=dict)

    def dims(self) -> List[int]:
        return [len(self.by_degree.get(p, [])) for p in range(self.max_degree + 1)]

    def __iter__(self) -> Iterator[tuple]:
        for p in range(self.max_degree + 1):
            yield from self.by_degree.get(p, [])

    def __contains__(self, m: tuple) -> bool:
        return any(m in words for words in self.by_degree.values())

    def __len__(self) -> int:
        return sum(self.dims())


def _commutative_normal(basis: GroebnerBasis, max_degree: int) -> Dict[int, List[tuple]]:
    ctx = basis.ctx
    lms = np.array(basis.leading_monomials(), dtype=np.int64).reshape(-1, ctx.nvars)
    by_degree = {}
    for p in range(max_degree + 1):
        candidates = monomials_of_degree(p, ctx)
        if not candidates:
            by_degree[p] = []
            continue
        C = np.array(candidates, dtype=np.int64)
        if len(lms):
            divisible = (C[:, None, :] >= lms[None, :, :]).all(axis=2).any(axis=1)
        else:
            divisible = np.zeros(len(C), dtype=bool)
        by_degree[p] = [m for m, hit in zip(candidates, divisible) if not hit]
    return by_degree


def _word_normal(basis: GroebnerBasis, max_degree: int) -> Dict[int, List[tuple]]:
    # every subword of a normal word is normal, so only new suffixes need checking
    ctx = basis.ctx
    lms = basis.leading_monomials()
    weights = ctx.weights
    by_degree: Dict[int, List[tuple]] = {0: [] if () in lms else [()]}
    for p in range(1, max_degree + 1):
        words = []
        for letter in range(ctx.nvars):
            w_l = weights[letter]
            if w_l > p:
                continue
            for w in by_degree[p - w_l]:
                candidate = w + (letter,)
                if not any(len(u) <= len(candidate) and candidate[len(candidate) - len(u):] == u for u in lms):
                    words.append(candidate)
        by_degree[p] = words
    return by_degree


def normal_monomials(G: GroebnerBasis, max_degree: Optional[int] = None) -> NormalMonomialSet:
    cap = settings.engine.max_degree if max_degree is None else max_degree
    if G.ctx.is_commutative:
        by_degree = _commutative_normal(G, cap)
    else:
        by_degree = _word_normal(G, cap)
    key = G.ordering.key
    return NormalMonomialSet(G, cap, {p: sorted(ms, key=key) for p, ms in by_degree.items()})


def quotient_dims(G: GroebnerBasis, max_degree: Optional[int] = None) -> List[int]:
    return normal_monomials(G, max_degree).dims()


def lh_set(G) -> List[HomogeneousPolynomial]:
    elements = G.elements if isinstance(G, GroebnerBasis) else G
    result = []
    for g in elements:
        if g.is_zero():
            raise ZeroPolynomialError("LH of the zero polynomial is undefined")
        result.append(g.leading_homogeneous())
    return result


def monomial_relations(G: GroebnerBasis) -> List[Polynomial]:
    """The leading monomials of G as monic monomial relations"""
    return [Polynomial.monomial(G.ctx, m) for m in G.leading_monomials()]
