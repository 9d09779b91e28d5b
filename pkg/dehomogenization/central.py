"""Central (de)homogenization between K[x] and K[x][t].

The extended ring lists the base variables first and t last, so a monomial
t^r w is the exponent vector of w with r appended. Its ordering is the block
order that compares the t-free part by the base ordering and the t-exponent last.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from algebra_core.context import RingContext
from algebra_core.monomials import degree
from algebra_core.orderings import Extension, OrderingSpec
from groebner.basis import GroebnerBasis, interreduce
from groebner.buchberger import buchberger, verify_groebner
from poly.polynomial import HomogeneousPolynomial, Polynomial
from utils.config_loader import settings
from utils.errors import ArgumentError, DhGroebnerError, ZeroPolynomialError
from utils.logger import log


@dataclass(frozen=True)
class DhVerdict:
    """Whether a graded ideal is dh-closed, decided on its reduced basis"""

    closed: bool
    basis: GroebnerBasis
    witness: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.closed


@dataclass(frozen=True)
class CentralPipelineReport:
    generators: Tuple[Polynomial, ...]
    gb_Sstar: GroebnerBasis
    gb_I: GroebnerBasis
    gb_Istar: GroebnerBasis
    ideals_equal: bool

    @property
    def strict_inclusion(self) -> bool:
        return not self.ideals_equal


@dataclass(frozen=True)
class CentralDhContext:
    base: RingContext
    ext: RingContext
    ord_base: OrderingSpec
    ord_ext: OrderingSpec
    original: Optional[RingContext] = None
    # ext variable index -> original variable index, when built from another ring
    permutation: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_base(cls, base: RingContext, t: str = "t",
                  precedence: Optional[Sequence[str]] = None) -> "CentralDhContext":
        if not base.is_commutative:
            raise ArgumentError("Central homogenization needs a commutative base ring")
        if t in base.variables:
            raise ArgumentError(f"{t} is already a variable of {base.describe()}")
        if base.homog_var is not None:
            raise ArgumentError(f"{base.describe()} already has a homogenization variable")
        ext = RingContext.commutative(base.variables + (t,), base.weights + (1,), base.field, homog_var=t)
        ord_base = OrderingSpec.deglex(base, precedence)
        ord_ext = OrderingSpec(ext, (base.nvars,) + ord_base.precedence, Extension.CENTRAL_T)
        return cls(base, ext, ord_base, ord_ext)

    @property
    def t(self) -> str:
        return self.ext.homog_var

    # -- element maps -----------------------------------------------------

    def homogenize(self, f: Polynomial) -> HomogeneousPolynomial:
        """f* = f_p + t f_{p-1} + ... + t^s f_{p-s}"""
        self.base.require_same(f.ctx)
        if f.is_zero():
            raise ZeroPolynomialError("Cannot homogenize the zero polynomial")
        p = f.degree()
        base = self.base
        image = Polynomial(self.ext, {m + (p - degree(m, base),): c for m, c in f.terms()})
        return HomogeneousPolynomial.of(image)

    def dehomogenize(self, F: Polynomial) -> Polynomial:
        """F_* : t -> 1"""
        self.ext.require_same(F.ctx)
        return F.map_monomials(lambda m: m[:-1], self.base)

    def to_base(self, F: Polynomial) -> Polynomial:
        """An extended-ring element that does not involve t, read in the base ring"""
        if F.ctx == self.base:
            return F
        F = self.from_original(F)
        if any(m[-1] for m in F.monomials()):
            raise ArgumentError(f"{F} involves {self.t}")
        return self.dehomogenize(F)

    def from_original(self, F: Polynomial) -> Polynomial:
        if F.ctx == self.ext or self.original is None:
            self.ext.require_same(F.ctx)
            return F
        self.original.require_same(F.ctx)
        perm = self.permutation
        return F.map_monomials(lambda m: tuple(m[perm[i]] for i in range(len(perm))), self.ext)

    def to_original(self, F: Polynomial) -> Polynomial:
        if self.original is None:
            return F
        self.ext.require_same(F.ctx)
        inverse = [0] * len(self.permutation)
        for i, j in enumerate(self.permutation):
            inverse[j] = i
        return F.map_monomials(lambda m: tuple(m[inverse[j]] for j in range(len(inverse))), self.original)

    # -- dh-closed elements -----------------------------------------------

    def dh_defect(self, F: Polynomial) -> int:
        """r with F = t^r (F_*)^*"""
        F = HomogeneousPolynomial.of(self.from_original(F))
        return F.homogeneous_degree - self.dehomogenize(F).degree()

    def is_dh_closed_element(self, F: Polynomial) -> bool:
        F = HomogeneousPolynomial.of(self.from_original(F))
        closed = F.leading_monomial(self.ord_ext)[-1] == 0
        if settings.dh.verify_criteria:
            by_definition = self.homogenize(self.dehomogenize(F)) == F
            if by_definition != closed:
                raise DhGroebnerError(f"dh-closure criteria disagree on {F}")
        return closed

    # -- bases and ideals -------------------------------------------------

    def _elements(self, G) -> List[Polynomial]:
        return list(G.elements if isinstance(G, GroebnerBasis) else G)

    def homogenize_basis(self, G) -> GroebnerBasis:
        elements = self._elements(G)
        if not verify_groebner(elements, self.ord_base):
            raise ArgumentError("homogenize_basis needs a Groebner basis of the base ring")
        minimal = isinstance(G, GroebnerBasis) and G.minimal
        reduced = isinstance(G, GroebnerBasis) and G.reduced
        return GroebnerBasis.from_polynomials([self.homogenize(g) for g in elements], self.ord_ext,
                                              minimal=minimal, reduced=reduced, complete=True)

    def dehomogenize_basis(self, G) -> GroebnerBasis:
        elements = [self.from_original(g) for g in self._elements(G)]
        for g in elements:
            HomogeneousPolynomial.of(g)
        if not verify_groebner(elements, self.ord_ext):
            raise ArgumentError("dehomogenize_basis needs a homogeneous Groebner basis of the extended ring")
        return GroebnerBasis.from_polynomials([self.dehomogenize(g) for g in elements], self.ord_base,
                                              complete=True)

    def is_dh_closed_ideal(self, G) -> DhVerdict:
        elements = [self.from_original(g) for g in self._elements(G)]
        for g in elements:
            HomogeneousPolynomial.of(g)
        basis = buchberger(elements, self.ord_ext)
        for g in basis:
            if not self.is_dh_closed_element(g):
                log.info(f"ideal is not dh-closed: {g} has LM divisible by {self.t}")
                return DhVerdict(False, basis, g)
        return DhVerdict(True, basis)

    def dh_closure(self, G) -> GroebnerBasis:
        """Reduced basis of <(J_*)^*>, the smallest dh-closed graded ideal containing J"""
        verdict = self.is_dh_closed_ideal(G)
        if verdict.closed:
            return verdict.basis
        gb_I = interreduce(self.dehomogenize_basis(verdict.basis))
        return interreduce(self.homogenize_basis(gb_I))

    def torsion_witness(self, G) -> Optional[HomogeneousPolynomial]:
        """Homogeneous F with t F in J and F not in J, or None when J is dh-closed"""
        verdict = self.is_dh_closed_ideal(G)
        if verdict.closed:
            return None
        g = verdict.witness
        return HomogeneousPolynomial.of(g.map_monomials(lambda m: m[:-1] + (m[-1] - 1,), self.ext))

    def pipeline(self, S: Sequence[Polynomial]) -> CentralPipelineReport:
        generators = tuple(self.to_base(f) if f.ctx != self.base else f for f in S if not f.is_zero())
        if not generators:
            raise ArgumentError("pipeline needs at least one nonzero generator")

        log.info(f"pipeline_central: {len(generators)} generators")
        gb_Sstar = buchberger([self.homogenize(f) for f in generators], self.ord_ext)
        gb_I = interreduce(self.dehomogenize_basis(gb_Sstar)).with_flags(complete=True)
        gb_Istar = self.homogenize_basis(gb_I)
        equal = gb_Sstar.same_ideal(gb_Istar)
        if not equal:
            log.warning("pipeline_central: strict inclusion <S*> < <I*> detected")
        return CentralPipelineReport(generators, gb_Sstar, gb_I, gb_Istar, equal)


def treat_variable_as_t(ctx: RingContext, var: Union[int, str],
                        precedence: Optional[Sequence[str]] = None) -> CentralDhContext:
    """Regard one variable of K[x_1..x_n] as t over the ring of the others.

    ``var`` is a name or a 0-based index; ``precedence`` is the base ordering
    over the remaining variables (declared order when omitted).
    """
    if not ctx.is_commutative:
        raise ArgumentError("treat_variable_as_t needs a commutative ring")
    i = ctx.index(var) if isinstance(var, str) else var
    if not 0 <= i < ctx.nvars:
        raise ArgumentError(f"No variable with index {i}")
    name = ctx.variables[i]
    if ctx.weights[i] != 1:
        raise ArgumentError(f"{name} has weight {ctx.weights[i]}, a homogenization variable needs weight 1")

    rest = [j for j in range(ctx.nvars) if j != i]
    base = RingContext.commutative([ctx.variables[j] for j in rest], [ctx.weights[j] for j in rest], ctx.field)
    if precedence is not None:
        precedence = [v for v in precedence if v != name]
    dh = CentralDhContext.from_base(base, name, precedence)

    if ctx == dh.ext:
        return dh
    permutation = tuple(rest) + (i,)
    return CentralDhContext(dh.base, dh.ext, dh.ord_base, dh.ord_ext, ctx, permutation)


def pipeline_central(S: Sequence[Polynomial], dh: Optional[CentralDhContext] = None) -> CentralPipelineReport:
    S = list(S)
    if dh is None:
        if not S:
            raise ArgumentError("pipeline needs at least one nonzero generator")
        dh = CentralDhContext.from_base(S[0].ctx)
    return dh.pipeline(S)
