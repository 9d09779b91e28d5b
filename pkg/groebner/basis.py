from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra_core import monomials as mono
from algebra_core.context import RingContext
from algebra_core.orderings import OrderingSpec
from poly.polynomial import Polynomial
from reduction.normal_form import ReductionTrace, normal_form


def _sort_key(f: Polynomial, ord: OrderingSpec):
    field_ = f.ctx.field
    return [(ord.key(m), field_.canonical(c)) for m, c in f.sorted_terms(ord)]


def canonicalize(polys: Iterable[Polynomial], ord: OrderingSpec) -> Tuple[Polynomial, ...]:
    """Drop zeros and duplicates, make monic, sort ascending by leading monomial"""
    seen = {}
    for f in polys:
        ord.require_ctx(f.ctx)
        if f.is_zero():
            continue
        g = f.monic(ord)
        seen.setdefault(g, g)
    return tuple(sorted(seen, key=lambda g: _sort_key(g, ord)))


@dataclass(frozen=True)
class GroebnerBasis:
    """Monic elements sorted ascending by LM, plus what is known about them"""

    elements: Tuple[Polynomial, ...]
    ordering: OrderingSpec
    minimal: bool = False
    reduced: bool = False
    complete: bool = True
    degree_bound: Optional[int] = None

    @classmethod
    def from_polynomials(cls, polys: Iterable[Polynomial], ord: OrderingSpec, **flags) -> "GroebnerBasis":
        return cls(canonicalize(polys, ord), ord, **flags)

    @property
    def ctx(self) -> RingContext:
        return self.ordering.ctx

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> Polynomial:
        return self.elements[i]

    @property
    def is_zero_ideal(self) -> bool:
        return not self.elements

    @property
    def is_unit_ideal(self) -> bool:
        one = self.ctx.one()
        return any(g.leading_monomial(self.ordering) == one for g in self.elements)

    def leading_monomials(self) -> List[tuple]:
        return [g.leading_monomial(self.ordering) for g in self.elements]

    def reduce(self, f: Polynomial) -> ReductionTrace:
        return normal_form(f, self.elements, self.ordering)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).reduced_to_zero()

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        """Mutual zero reduction; decisive when both sides are Groebner bases"""
        return all(self.contains(g) for g in other) and all(other.contains(g) for g in self)

    def with_flags(self, **flags) -> "GroebnerBasis":
        return replace(self, **flags)

    def with_elements(self, polys: Iterable[Polynomial], **flags) -> "GroebnerBasis":
        return replace(self, elements=canonicalize(polys, self.ordering), **flags)


@dataclass
class GroebnerCheck:
    """Outcome of a pairwise verification, with one reduction trace per checked pair"""

    is_groebner: bool
    certificate: List[Tuple[int, int, ReductionTrace]] = field(default_factory=list)
    truncated: bool = False

    def __bool__(self) -> bool:
        return self.is_groebner

    def failures(self) -> List[Tuple[int, int, Polynomial]]:
        return [(i, j, trace.remainder) for i, j, trace in self.certificate if not trace.reduced_to_zero()]


def minimalize(G, ord: Optional[OrderingSpec] = None) -> GroebnerBasis:
    """Keep only elements whose LM is not divisible by an earlier kept LM"""
    if isinstance(G, GroebnerBasis):
        basis = G
    else:
        basis = GroebnerBasis.from_polynomials(G, ord)
    ord, ctx = basis.ordering, basis.ctx

    kept: List[Polynomial] = []
    kept_lms: List[tuple] = []
    for g in basis.elements:
        lm = g.leading_monomial(ord)
        if not any(mono.divides(u, lm, ctx) for u in kept_lms):
            kept.append(g)
            kept_lms.append(lm)
    return replace(basis, elements=tuple(kept), minimal=True)


def interreduce(G, ord: Optional[OrderingSpec] = None) -> GroebnerBasis:
    """Reduce every tail by the other elements of a minimal basis"""
    basis = minimalize(G, ord)
    ord = basis.ordering
    elements = list(basis.elements)
    for i, g in enumerate(elements):
        lead = g.leading(ord).term
        others = elements[:i] + elements[i + 1:]
        elements[i] = lead + normal_form(g - lead, others, ord).remainder
    return basis.with_elements(elements, minimal=True, reduced=True)


def reduced_basis(polys: Sequence[Polynomial], ord: OrderingSpec, **flags) -> GroebnerBasis:
    return interreduce(GroebnerBasis.from_polynomials(polys, ord, **flags))
