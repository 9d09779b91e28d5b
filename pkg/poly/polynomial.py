from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from algebra_core import monomials as mono
from algebra_core.context import RingContext
from algebra_core.orderings import OrderingSpec
from utils.errors import PreconditionError, ZeroPolynomialError


class HomogeneityTag(str, Enum):
    ZERO = "zero"


class Leading(NamedTuple):
    monomial: tuple
    coefficient: object
    term: "Polynomial"


class Polynomial:
    """Finite map monomial -> nonzero scalar over a RingContext.

    Storage is ordering independent; every ordering-dependent query takes an
    OrderingSpec. Instances are never mutated after construction.
    """

    __slots__ = ('ctx', '_terms')

    def __init__(self, ctx: RingContext, terms: Optional[Dict[tuple, object]] = None):
        field = ctx.field
        cleaned = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            mono.check_monomial(m, ctx)
            c = field.convert(c)
            if not field.is_zero(c):
                cleaned[m] = c
        self.ctx = ctx
        self._terms = cleaned

    @classmethod
    def _raw(cls, ctx: RingContext, terms: Dict[tuple, object]) -> "Polynomial":
        obj = Polynomial.__new__(Polynomial)
        obj.ctx = ctx
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, ctx: RingContext) -> "Polynomial":
        return cls._raw(ctx, {})

    @classmethod
    def constant(cls, ctx: RingContext, value=1) -> "Polynomial":
        return cls(ctx, {ctx.one(): value})

    @classmethod
    def monomial(cls, ctx: RingContext, m: tuple, coefficient=1) -> "Polynomial":
        return cls(ctx, {tuple(m): coefficient})

    @classmethod
    def variable(cls, ctx: RingContext, name: str) -> "Polynomial":
        i = ctx.index(name)
        if ctx.is_commutative:
            m = tuple(1 if j == i else 0 for j in range(ctx.nvars))
        else:
            m = (i,)
        return cls.monomial(ctx, m)

    @classmethod
    def variables(cls, ctx: RingContext) -> List["Polynomial"]:
        return [cls.variable(ctx, name) for name in ctx.variables]

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[Tuple[tuple, object]]:
        return iter(self._terms.items())

    def monomials(self) -> List[tuple]:
        return list(self._terms)

    def coefficient(self, m: tuple):
        return self._terms.get(tuple(m), self.ctx.field.zero)

    def sorted_terms(self, ord: OrderingSpec) -> List[Tuple[tuple, object]]:
        """Terms strictly descending under ``ord``"""
        return sorted(self._terms.items(), key=lambda item: ord.key(item[0]), reverse=True)

    def leading(self, ord: OrderingSpec) -> Leading:
        if not self._terms:
            raise ZeroPolynomialError("The zero polynomial has no leading term")
        ord.require_ctx(self.ctx)
        m = max(self._terms, key=ord.key)
        c = self._terms[m]
        return Leading(m, c, Polynomial._raw(self.ctx, {m: c}))

    def leading_monomial(self, ord: OrderingSpec) -> tuple:
        return self.leading(ord).monomial

    def leading_coefficient(self, ord: OrderingSpec):
        return self.leading(ord).coefficient

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("The zero polynomial has no degree")
        return max(mono.degree(m, self.ctx) for m in self._terms)

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(mono.degree(m, self.ctx), {})[m] = c
        return {d: Polynomial._raw(self.ctx, t) for d, t in sorted(parts.items())}

    def leading_homogeneous(self) -> "HomogeneousPolynomial":
        if not self._terms:
            raise ZeroPolynomialError("LH of the zero polynomial is undefined")
        top = self.degree()
        return HomogeneousPolynomial._wrap(
            self.ctx, {m: c for m, c in self._terms.items() if mono.degree(m, self.ctx) == top}, top)

    def is_homogeneous(self) -> Union[int, None, HomogeneityTag]:
        if not self._terms:
            return HomogeneityTag.ZERO
        degrees = {mono.degree(m, self.ctx) for m in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self.ctx.require_same(other.ctx)
            return other
        return Polynomial.constant(self.ctx, other)

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        field = self.ctx.field
        result = dict(self._terms)
        for m, c in other._terms.items():
            total = result.get(m, field.zero) + (c if sign > 0 else -c)
            if field.is_zero(total):
                result.pop(m, None)
            else:
                result[m] = total
        return Polynomial._raw(self.ctx, result)

    def __add__(self, other) -> "Polynomial":
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other)._combine(self, -1)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ctx, {m: -c for m, c in self._terms.items()})

    def scale(self, scalar) -> "Polynomial":
        field = self.ctx.field
        scalar = field.convert(scalar)
        if field.is_zero(scalar):
            return Polynomial.zero(self.ctx)
        return Polynomial._raw(self.ctx, {m: c * scalar for m, c in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self.ctx.require_same(other.ctx)
        ctx = self.ctx
        field = ctx.field
        result: Dict[tuple, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono.multiply(m1, m2, ctx)
                result[m] = result.get(m, field.zero) + c1 * c2
        return Polynomial._raw(ctx, {m: c for m, c in result.items() if not field.is_zero(c)})

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other.__mul__(self)
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.ctx, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def mul_term(self, left: tuple, coefficient, right: tuple) -> "Polynomial":
        """coefficient * left * self * right for monomials left, right"""
        ctx = self.ctx
        return Polynomial._raw(ctx, {mono.multiply_sides(left, m, right, ctx): c * coefficient
                                     for m, c in self._terms.items()})

    def monic(self, ord: OrderingSpec) -> "Polynomial":
        lc = self.leading(ord).coefficient
        return self.scale(self.ctx.field.inverse(lc))

    def map_monomials(self, func: Callable[[tuple], tuple], ctx: RingContext) -> "Polynomial":
        """Image under a monomial map into ``ctx``, merging like terms"""
        field = ctx.field
        result: Dict[tuple, object] = {}
        for m, c in self._terms.items():
            image = func(m)
            result[image] = result.get(image, field.zero) + c
        return Polynomial._raw(ctx, {m: c for m, c in result.items() if not field.is_zero(c)})

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from poly.printer import format_polynomial
        return format_polynomial(self)


class HomogeneousPolynomial(Polynomial):
    """A nonzero polynomial whose terms all have weighted degree ``homogeneous_degree``"""

    __slots__ = ('homogeneous_degree',)

    @classmethod
    def _wrap(cls, ctx: RingContext, terms: Dict[tuple, object], degree: int) -> "HomogeneousPolynomial":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = terms
        obj.homogeneous_degree = degree
        return obj

    @classmethod
    def of(cls, f: Polynomial) -> "HomogeneousPolynomial":
        if isinstance(f, HomogeneousPolynomial):
            return f
        d = f.is_homogeneous()
        if d is HomogeneityTag.ZERO:
            raise ZeroPolynomialError("The zero polynomial is not a homogeneous element of a fixed degree")
        if d is None:
            raise PreconditionError(f"{f} is not homogeneous", offending=f)
        return cls._wrap(f.ctx, dict(f._terms), d)


def require_homogeneous(polys: Iterable[Polynomial]) -> List[HomogeneousPolynomial]:
    return [HomogeneousPolynomial.of(f) for f in polys]


def leading(f: Polynomial, ord: OrderingSpec) -> Leading:
    return f.leading(ord)


def leading_homogeneous(f: Polynomial) -> HomogeneousPolynomial:
    return f.leading_homogeneous()


def is_homogeneous(f: Polynomial) -> Union[int, None, HomogeneityTag]:
    return f.is_homogeneous()
