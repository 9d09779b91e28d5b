"""Noncentral (de)homogenization between K<X> and K<X,T>.

T is a new letter that does not commute with X_i; the commutators X_i T - T X_i
are carried alongside every homogenized generating set. T is declared last and
has the lowest precedence, so LM(X_i T - T X_i) = X_i T.
"""

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from algebra_core.context import RingContext
from algebra_core.monomials import degree
from algebra_core.orderings import Extension, OrderingSpec
from dehomogenization.central import DhVerdict
from groebner.basis import GroebnerBasis
from groebner.nc_completion import complete_nc, verify_groebner_nc
from poly.polynomial import HomogeneousPolynomial, Polynomial
from reduction.normal_form import ReductionTrace, normal_form
from utils.config_loader import settings
from utils.errors import ArgumentError, DhGroebnerError, PreconditionError, ZeroPolynomialError
from utils.logger import log


def leading_t_count(word: tuple, t: int) -> int:
    r = 0
    while r < len(word) and word[r] == t:
        r += 1
    return r


class TLeftNormalForm(NamedTuple):
    """F = L + polynomial with L in the commutator ideal; every word is T^r w, w free of T"""

    polynomial: Polynomial
    t_power: int
    trace: ReductionTrace


@dataclass(frozen=True)
class NoncentralPipelineReport:
    generators: Tuple[Polynomial, ...]
    gb_Stilde: GroebnerBasis
    gb_I: GroebnerBasis
    gb_Itilde: GroebnerBasis
    ideals_equal: bool
    degree_bound: int
    dropped_commutator_images: int = 0

    @property
    def strict_inclusion(self) -> bool:
        return not self.ideals_equal

    @property
    def complete(self) -> bool:
        return self.gb_Stilde.complete and self.gb_I.complete and self.gb_Itilde.complete


@dataclass(frozen=True)
class NoncentralDhContext:
    base: RingContext
    ext: RingContext
    ord_base: OrderingSpec
    ord_ext: OrderingSpec
    commutators: Tuple[Polynomial, ...] = field(repr=False, default=())
    original: Optional[RingContext] = None
    # ext letter -> original letter, when built from another algebra
    permutation: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_base(cls, base: RingContext, T: str = "T",
                  precedence: Optional[Sequence[str]] = None) -> "NoncentralDhContext":
        if base.is_commutative:
            raise ArgumentError("Noncentral homogenization needs a free algebra")
        if T in base.variables:
            raise ArgumentError(f"{T} is already a letter of {base.describe()}")
        if base.homog_var is not None:
            raise ArgumentError(f"{base.describe()} already has a homogenization letter")
        ext = RingContext.free(base.variables + (T,), base.weights + (1,), base.field, homog_var=T)
        ord_base = OrderingSpec.deglex(base, precedence)
        ord_ext = OrderingSpec(ext, (base.nvars,) + ord_base.precedence, Extension.NONCENTRAL_T)
        t = base.nvars
        commutators = tuple(Polynomial(ext, {(i, t): 1, (t, i): -1}) for i in range(base.nvars))
        return cls(base, ext, ord_base, ord_ext, commutators)

    @property
    def T(self) -> str:
        return self.ext.homog_var

    @property
    def t_index(self) -> int:
        return self.base.nvars

    def commutator_leads(self) -> List[tuple]:
        return [(i, self.t_index) for i in range(self.base.nvars)]

    # -- element maps -----------------------------------------------------

    def homogenize(self, f: Polynomial) -> HomogeneousPolynomial:
        """f~ = f_p + T f_{p-1} + ... + T^s f_{p-s}, powers of T on the left"""
        self.base.require_same(f.ctx)
        if f.is_zero():
            raise ZeroPolynomialError("Cannot homogenize the zero polynomial")
        p = f.degree()
        t, base = self.t_index, self.base
        image = Polynomial(self.ext, {(t,) * (p - degree(w, base)) + w: c for w, c in f.terms()})
        return HomogeneousPolynomial.of(image)

    def dehomogenize(self, F: Polynomial) -> Polynomial:
        """F~ : erase every T"""
        self.ext.require_same(F.ctx)
        t = self.t_index
        return F.map_monomials(lambda w: tuple(letter for letter in w if letter != t), self.base)

    def to_base(self, F: Polynomial) -> Polynomial:
        if F.ctx == self.base:
            return F
        F = self.from_original(F)
        if any(self.t_index in w for w in F.monomials()):
            raise ArgumentError(f"{F} involves {self.T}")
        return self.dehomogenize(F)

    def from_original(self, F: Polynomial) -> Polynomial:
        if F.ctx == self.ext or self.original is None:
            self.ext.require_same(F.ctx)
            return F
        self.original.require_same(F.ctx)
        inverse = [0] * len(self.permutation)
        for i, j in enumerate(self.permutation):
            inverse[j] = i
        return F.map_monomials(lambda w: tuple(inverse[letter] for letter in w), self.ext)

    def to_original(self, F: Polynomial) -> Polynomial:
        if self.original is None:
            return F
        self.ext.require_same(F.ctx)
        perm = self.permutation
        return F.map_monomials(lambda w: tuple(perm[letter] for letter in w), self.original)

    def normalize_mod_commutators(self, F: Polynomial) -> TLeftNormalForm:
        F = HomogeneousPolynomial.of(self.from_original(F))
        trace = normal_form(F, self.commutators, self.ord_ext)
        H = trace.remainder
        t = self.t_index
        power = min((leading_t_count(w, t) for w in H.monomials()), default=0)
        return TLeftNormalForm(H, power, trace)

    # -- dh-closed elements -----------------------------------------------

    def _normalized(self, F: Polynomial) -> TLeftNormalForm:
        form = self.normalize_mod_commutators(F)
        if form.polynomial.is_zero():
            raise ZeroPolynomialError(f"{F} vanishes modulo the commutators")
        return form

    def dh_defect(self, F: Polynomial) -> int:
        """r with H = T^r (H~)~ for the T-left normal form H of F"""
        return self._normalized(F).t_power

    def is_dh_closed_element(self, F: Polynomial) -> bool:
        H = self._normalized(F).polynomial
        closed = leading_t_count(H.leading_monomial(self.ord_ext), self.t_index) == 0
        if settings.dh.verify_criteria:
            by_definition = self.homogenize(self.dehomogenize(H)) == H
            if by_definition != closed:
                raise DhGroebnerError(f"dh-closure criteria disagree on {H}")
        return closed

    # -- bases and ideals -------------------------------------------------

    def _elements(self, G) -> List[Polynomial]:
        return list(G.elements if isinstance(G, GroebnerBasis) else G)

    def _bound(self, degree_bound: Optional[int]) -> int:
        return settings.engine.degree_bound if degree_bound is None else degree_bound

    def homogenize_basis(self, G, degree_bound: Optional[int] = None, verify: bool = True) -> GroebnerBasis:
        bound = self._bound(degree_bound)
        elements = self._elements(G)
        if verify and not verify_groebner_nc(elements, self.ord_base, bound):
            raise ArgumentError("homogenize_basis_nc needs a Groebner basis of the base algebra")
        complete = not isinstance(G, GroebnerBasis) or G.complete
        images = [self.homogenize(g) for g in elements] + list(self.commutators)
        return GroebnerBasis.from_polynomials(images, self.ord_ext, complete=complete, degree_bound=bound)

    def _check_graded(self, elements: Sequence[Polynomial]):
        for g in elements:
            HomogeneousPolynomial.of(g)

    def _check_commutators(self, elements: Sequence[Polynomial]):
        for c in self.commutators:
            if not normal_form(c, elements, self.ord_ext).reduced_to_zero():
                raise PreconditionError(f"{c} does not reduce to zero: the ideal must contain the commutators",
                                        offending=c)

    def dehomogenized_images(self, G) -> Tuple[List[Polynomial], int]:
        images = [self.dehomogenize(self.from_original(g)) for g in self._elements(G)]
        kept = [f for f in images if not f.is_zero()]
        return kept, len(images) - len(kept)

    def dehomogenize_basis(self, G, degree_bound: Optional[int] = None) -> GroebnerBasis:
        bound = self._bound(degree_bound)
        elements = [self.from_original(g) for g in self._elements(G)]
        self._check_graded(elements)
        self._check_commutators(elements)
        if not verify_groebner_nc(elements, self.ord_ext, bound):
            raise ArgumentError("dehomogenize_basis_nc needs a homogeneous Groebner basis of the extended algebra")
        images, dropped = self.dehomogenized_images(elements)
        log.debug(f"dehomogenize_basis_nc: dropped {dropped} zero images")
        complete = not isinstance(G, GroebnerBasis) or G.complete
        return GroebnerBasis.from_polynomials(images, self.ord_base, complete=complete, degree_bound=bound)

    def is_dh_closed_ideal(self, G, degree_bound: Optional[int] = None) -> DhVerdict:
        bound = self._bound(degree_bound)
        elements = [self.from_original(g) for g in self._elements(G)]
        self._check_graded(elements)
        basis = complete_nc(elements, self.ord_ext, bound)
        self._check_commutators(basis.elements)

        commutator_leads = set(self.commutator_leads())
        t = self.t_index
        for g in basis:
            if g.leading_monomial(self.ord_ext) in commutator_leads:
                continue
            closed = leading_t_count(g.leading_monomial(self.ord_ext), t) == 0
            if settings.dh.verify_criteria and closed != self.is_dh_closed_element(g):
                raise DhGroebnerError(f"dh-closure criteria disagree on {g}")
            if not closed:
                log.info(f"ideal is not dh-closed: {g} has LM starting with {self.T}")
                return DhVerdict(False, basis, g)
        return DhVerdict(True, basis)

    def dh_closure(self, G, degree_bound: Optional[int] = None) -> GroebnerBasis:
        """Reduced basis of <(J~)~>, within the degree bound"""
        bound = self._bound(degree_bound)
        verdict = self.is_dh_closed_ideal(G, bound)
        if verdict.closed:
            return verdict.basis
        images, _ = self.dehomogenized_images(verdict.basis)
        gb_I = complete_nc(images, self.ord_base, bound)
        return complete_nc(self.homogenize_basis(gb_I, bound, verify=False).elements, self.ord_ext, bound)

    def torsion_witness(self, G, degree_bound: Optional[int] = None) -> Optional[HomogeneousPolynomial]:
        """Homogeneous F with T F in J and F not in J, or None when J is dh-closed"""
        verdict = self.is_dh_closed_ideal(G, degree_bound)
        if verdict.closed:
            return None
        return HomogeneousPolynomial.of(verdict.witness.map_monomials(lambda w: w[1:], self.ext))

    def pipeline(self, S: Sequence[Polynomial], degree_bound: Optional[int] = None) -> NoncentralPipelineReport:
        bound = self._bound(degree_bound)
        generators = tuple(self.to_base(f) for f in S if not f.is_zero())
        if not generators:
            raise ArgumentError("pipeline needs at least one nonzero generator")

        log.info(f"pipeline_noncentral: {len(generators)} generators, bound {bound}")
        S_tilde = [self.homogenize(f) for f in generators] + list(self.commutators)
        gb_Stilde = complete_nc(S_tilde, self.ord_ext, bound)
        images, dropped = self.dehomogenized_images(gb_Stilde)
        # re-completing in K<X> keeps every leading word a truncated basis may miss
        gb_I = complete_nc(images, self.ord_base, bound)
        if not gb_Stilde.complete:
            gb_I = gb_I.with_flags(complete=False)
        gb_Itilde = self.homogenize_basis(gb_I, bound, verify=False)
        equal = gb_Stilde.same_ideal(gb_Itilde)
        if not equal:
            log.warning(f"pipeline_noncentral: strict inclusion <S~> < <I~> detected up to degree {bound}")
        return NoncentralPipelineReport(generators, gb_Stilde, gb_I, gb_Itilde, equal, bound, dropped)


def treat_variable_as_T(ctx: RingContext, var: Union[int, str],
                        precedence: Optional[Sequence[str]] = None) -> NoncentralDhContext:
    """Regard one letter of K<X_1..X_n> as T over the free algebra on the others.

    The letter is moved to the end and to the lowest precedence; ``permutation``
    records where every letter came from.
    """
    if ctx.is_commutative:
        raise ArgumentError("treat_variable_as_T needs a free algebra")
    i = ctx.index(var) if isinstance(var, str) else var
    if not 0 <= i < ctx.nvars:
        raise ArgumentError(f"No letter with index {i}")
    name = ctx.variables[i]
    if ctx.weights[i] != 1:
        raise ArgumentError(f"{name} has weight {ctx.weights[i]}, a homogenization letter needs weight 1")

    rest = [j for j in range(ctx.nvars) if j != i]
    base = RingContext.free([ctx.variables[j] for j in rest], [ctx.weights[j] for j in rest], ctx.field)
    if precedence is not None:
        precedence = [v for v in precedence if v != name]
    dh = NoncentralDhContext.from_base(base, name, precedence)
    if ctx == dh.ext:
        return dh
    return NoncentralDhContext(dh.base, dh.ext, dh.ord_base, dh.ord_ext, dh.commutators,
                               ctx, tuple(rest) + (i,))


def pipeline_noncentral(S: Sequence[Polynomial], degree_bound: Optional[int] = None,
                        dh: Optional[NoncentralDhContext] = None) -> NoncentralPipelineReport:
    S = list(S)
    if dh is None:
        if not S:
            raise ArgumentError("pipeline needs at least one nonzero generator")
        dh = NoncentralDhContext.from_base(S[0].ctx)
    return dh.pipeline(S, degree_bound)
