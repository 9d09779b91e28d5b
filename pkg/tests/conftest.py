import pytest

from algebra_core.context import RingContext
from algebra_core.monomials import monomials_of_degree
from algebra_core.orderings import Extension, OrderingSpec
from algebra_core.scalars import ScalarField
from poly.polynomial import Polynomial
from session.parser import parse_polynomial
from utils.config_loader import settings

# every reduction replays its trace and every dh test is cross-checked
settings.reduction.verify_traces = True
settings.dh.verify_criteria = True


def create_poly(text: str, ctx: RingContext):
    return parse_polynomial(text, ctx)


def create_polys(texts, ctx: RingContext):
    return [parse_polynomial(text, ctx) for text in texts]


def create_random_coefficient(rng) -> int:
    return int(rng.integers(1, 4)) * int(rng.choice([-1, 1]))


def create_random_poly(rng, ctx: RingContext, max_degree=3, max_terms=3):
    pool = [m for p in range(max_degree + 1) for m in monomials_of_degree(p, ctx)]
    picks = rng.choice(len(pool), size=int(rng.integers(1, max_terms + 1)), replace=False)
    return Polynomial(ctx, {pool[k]: create_random_coefficient(rng) for k in picks})


def create_random_homogeneous(rng, ctx: RingContext, degree: int, max_terms=3):
    pool = monomials_of_degree(degree, ctx)
    size = min(len(pool), int(rng.integers(1, max_terms + 1)))
    picks = rng.choice(len(pool), size=size, replace=False)
    return Polynomial(ctx, {pool[k]: create_random_coefficient(rng) for k in picks})


@pytest.fixture
def ring_xy():
    return RingContext.commutative(['x', 'y'])


@pytest.fixture
def ord_xy(ring_xy):
    return OrderingSpec.deglex(ring_xy, ['x', 'y'])


@pytest.fixture
def ring_xyt():
    return RingContext.commutative(['x', 'y', 't'], homog_var='t')


@pytest.fixture
def ord_xyt(ring_xyt):
    return OrderingSpec.deglex(ring_xyt, ['t', 'x', 'y'], Extension.CENTRAL_T)


@pytest.fixture
def free_xy():
    return RingContext.free(['X', 'Y'])


@pytest.fixture
def ord_free_xy(free_xy):
    return OrderingSpec.deglex(free_xy, ['X', 'Y'])


@pytest.fixture
def free_xyt():
    return RingContext.free(['X', 'Y', 'T'], homog_var='T')


@pytest.fixture
def ord_free_xyt(free_xyt):
    return OrderingSpec.deglex(free_xyt, ['T', 'X', 'Y'], Extension.NONCENTRAL_T)


@pytest.fixture
def gf7():
    return ScalarField.prime(7)
