"""Weighted graded lex orderings and their t / T extensions.

Every ordering is realised as a sort key, so ``max``/``sorted`` do the work:

* base (graded lex): degree first, then exponents (commutative) or letters
  (noncommutative, leftmost first) read through the precedence ranks;
* central-t: block order, base key of the t-free part first, t-exponent last;
* noncentral-T: plain graded lex over the extended alphabet with T of lowest rank.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

from algebra_core.context import RingContext
from algebra_core.monomials import check_monomial, degree
from utils.errors import ArgumentError, ContextMismatchError


class Extension(str, Enum):
    NONE = "none"
    CENTRAL_T = "central-t"
    NONCENTRAL_T = "noncentral-T"


class Comparison(int, Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderingSpec:
    ctx: RingContext
    precedence: Tuple[int, ...]  # variable indices, smallest first
    extension: Extension = Extension.NONE
    _rank: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    _lex_order: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        precedence = tuple(self.precedence)
        object.__setattr__(self, 'precedence', precedence)
        object.__setattr__(self, 'extension', Extension(self.extension))
        ctx = self.ctx

        if sorted(precedence) != list(range(ctx.nvars)):
            raise ArgumentError(f"Precedence {precedence} is not a permutation of the variables")

        if self.extension is Extension.CENTRAL_T:
            if not ctx.is_commutative or ctx.homog_index is None:
                raise ArgumentError("central-t ordering needs a commutative ring with a homogenization variable")
        elif self.extension is Extension.NONCENTRAL_T:
            if ctx.is_commutative or ctx.homog_index is None:
                raise ArgumentError("noncentral-T ordering needs a free algebra with a homogenization letter")
            if precedence[0] != ctx.homog_index:
                raise ArgumentError(f"{ctx.homog_var} must have the lowest precedence")

        rank = [0] * ctx.nvars
        for r, var in enumerate(precedence):
            rank[var] = r
        object.__setattr__(self, '_rank', tuple(rank))
        # commutative lex reads the highest-precedence exponent first
        lex = [v for v in reversed(precedence)]
        if self.extension is Extension.CENTRAL_T:
            lex.remove(ctx.homog_index)
        object.__setattr__(self, '_lex_order', tuple(lex))

    @classmethod
    def deglex(cls, ctx: RingContext, precedence: Optional[Sequence[str]] = None,
               extension: Extension = Extension.NONE) -> "OrderingSpec":
        """Graded lex with ``precedence`` listed from smallest to largest variable"""
        names = list(precedence) if precedence is not None else list(ctx.variables)
        return cls(ctx, tuple(ctx.index(name) for name in names), extension)

    def key(self, m: tuple) -> tuple:
        ctx = self.ctx
        if ctx.is_commutative:
            if self.extension is Extension.CENTRAL_T:
                h = ctx.homog_index
                base_degree = degree(m, ctx) - m[h]
                return (base_degree,) + tuple(m[i] for i in self._lex_order) + (m[h],)
            return (degree(m, ctx),) + tuple(m[i] for i in self._lex_order)
        rank = self._rank
        return degree(m, ctx), tuple(rank[letter] for letter in m)

    def compare(self, a: tuple, b: tuple) -> Comparison:
        check_monomial(a, self.ctx)
        check_monomial(b, self.ctx)
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Comparison.LESS
        if ka > kb:
            return Comparison.GREATER
        return Comparison.EQUAL

    def require_ctx(self, ctx: RingContext):
        if ctx != self.ctx:
            raise ContextMismatchError(f"Ordering is for {self.ctx.describe()}, not {ctx.describe()}")

    def describe(self) -> str:
        precedence = self.precedence
        if self.extension is Extension.CENTRAL_T:
            # t only breaks ties after the base key
            precedence = tuple(i for i in precedence if i != self.ctx.homog_index)
        names = " < ".join(self.ctx.variables[i] for i in precedence)
        return f"deglex({names}){'' if self.extension is Extension.NONE else ' ' + self.extension.value}"


def compare(a: tuple, b: tuple, ord: OrderingSpec) -> Comparison:
    return ord.compare(a, b)


def default_ordering(ctx: RingContext) -> OrderingSpec:
    """Graded lex over the declared order, extended by the homogenization variable if one is set"""
    h = ctx.homog_index
    if h is None:
        return OrderingSpec(ctx, tuple(range(ctx.nvars)))
    if ctx.is_commutative:
        return OrderingSpec(ctx, tuple(range(ctx.nvars)), Extension.CENTRAL_T)
    rest = tuple(i for i in range(ctx.nvars) if i != h)
    return OrderingSpec(ctx, (h,) + rest, Extension.NONCENTRAL_T)
