import numpy as np
import pytest

from algebra_core import monomials as mono
from algebra_core.context import RingContext
from algebra_core.orderings import Comparison, Extension, OrderingSpec, compare, default_ordering
from algebra_core.scalars import ScalarField
from utils.errors import ArgumentError, ContextMismatchError


def test_scalar_fields():
    """Rationals and prime fields"""
    Q = ScalarField.rationals()
    assert Q.render(Q.from_fraction(2, 4)) == "1/2"
    assert Q.render(Q.from_fraction(3, -6)) == "-1/2"
    assert Q.is_negative(Q.from_int(-3))

    F = ScalarField.prime(7)
    assert F.canonical(F.from_int(-1)) == (6, 1)
    assert F.render(F.from_fraction(1, 2)) == "4"
    assert not F.is_negative(F.from_int(-1))
    assert F.describe() == "GF(7)"

    with pytest.raises(ArgumentError):
        ScalarField.prime(4)
    with pytest.raises(ArgumentError):
        F.from_fraction(1, 14)


def test_ring_context_validation():
    """Names, weights and the homogenization variable are checked up front"""
    with pytest.raises(ArgumentError):
        RingContext.commutative(['x', 'x'])
    with pytest.raises(ArgumentError):
        RingContext.commutative(['x', 'y'], [1, 0])
    with pytest.raises(ArgumentError):
        RingContext.commutative(['x', 't'], [1, 2], homog_var='t')
    with pytest.raises(ArgumentError):
        RingContext.commutative(['x'], homog_var='t')

    ctx = RingContext.free(['X', 'Y'], [2, 3])
    assert ctx.describe() == "Q<X,Y>"
    assert ctx.one() == ()


def test_degree_and_division(ring_xyt, free_xy):
    """Weighted degree, division witnesses and subwords"""
    assert mono.degree((1, 0, 2), ring_xyt) == 3
    assert mono.degree((), free_xy) == 0
    weighted = RingContext.free(['X', 'Y'], [2, 3])
    assert mono.degree((0, 1), weighted) == 5

    ring_xy = RingContext.commutative(['x', 'y'])
    witness = mono.divide_monomial((2, 0), (2, 1), ring_xy)
    assert witness.left == (0, 1)

    X, T = 0, 1
    free_xt = RingContext.free(['X', 'T'])
    witness = mono.divide_monomial((X, T), (X, X, T), free_xt)
    assert (witness.left, witness.right, witness.position) == ((X,), (), 1)
    assert mono.divide_monomial((1,), (0, 0), free_xy) is None
    assert list(mono.subword_positions((0, 0), (0, 0, 0))) == [0, 1]


def test_monomials_of_degree():
    """Counts of monomials and words by degree"""
    ring = RingContext.commutative(['x', 'y', 't'])
    assert len(mono.monomials_of_degree(2, ring)) == 6
    free = RingContext.free(['X', 'Y'])
    assert len(mono.monomials_of_degree(3, free)) == 8
    weighted = RingContext.free(['X', 'Y'], [1, 2])
    # X X, Y
    assert sorted(mono.monomials_of_degree(2, weighted)) == [(0, 0), (1,)]


def test_deglex_commutative(ring_xy, ord_xy):
    """Degree first, then the highest-precedence exponent"""
    x, y = (1, 0), (0, 1)
    assert compare(x, y, ord_xy) is Comparison.LESS
    assert ord_xy.compare((0, 3), (2, 0)) is Comparison.GREATER
    assert ord_xy.compare((1, 1), (1, 1)) is Comparison.EQUAL

    reversed_ord = OrderingSpec.deglex(ring_xy, ['y', 'x'])
    assert reversed_ord.compare(x, y) is Comparison.GREATER


def test_central_t_block_order(ord_xyt):
    """t-free part compares first, so t^r stays below every base monomial of degree >= 1"""
    t3 = (0, 0, 3)
    t2x = (1, 0, 2)
    assert ord_xyt.compare(t3, t2x) is Comparison.LESS
    # t^2 y above t^2 x, and both below y^2
    assert ord_xyt.compare((0, 1, 2), (1, 0, 2)) is Comparison.GREATER
    assert ord_xyt.compare((0, 1, 2), (0, 2, 0)) is Comparison.LESS
    assert ord_xyt.describe() == "deglex(x < y) central-t"


def test_noncentral_t_order(free_xyt, ord_free_xyt):
    """Graded lex over the extended alphabet with T lowest"""
    X, Y, T = 0, 1, 2
    assert ord_free_xyt.compare((T, X), (X, T)) is Comparison.LESS
    assert ord_free_xyt.compare((Y, Y), (T, X)) is Comparison.GREATER
    with pytest.raises(ArgumentError):
        OrderingSpec.deglex(free_xyt, ['X', 'T', 'Y'], Extension.NONCENTRAL_T)


def test_ordering_rejects_foreign_monomials(ord_xy):
    with pytest.raises(ContextMismatchError):
        ord_xy.compare((1, 0, 0), (0, 1))
    with pytest.raises(ArgumentError):
        OrderingSpec(ord_xy.ctx, (0, 0))


def create_orderings():
    commutative = RingContext.commutative(['x', 'y', 'z'])
    weighted = RingContext.commutative(['x', 'y', 'z'], [1, 2, 1])
    with_t = RingContext.commutative(['x', 'y', 't'], homog_var='t')
    words = RingContext.free(['X', 'Y', 'Z'])
    weighted_words = RingContext.free(['X', 'Y', 'Z'], [1, 2, 1])
    with_T = RingContext.free(['X', 'Y', 'T'], homog_var='T')
    return [
        OrderingSpec.deglex(commutative, ['x', 'y', 'z']),
        OrderingSpec.deglex(weighted, ['z', 'x', 'y']),
        OrderingSpec.deglex(with_t, ['t', 'x', 'y'], Extension.CENTRAL_T),
        OrderingSpec.deglex(words, ['X', 'Y', 'Z']),
        OrderingSpec.deglex(weighted_words, ['Y', 'X', 'Z']),
        OrderingSpec.deglex(with_T, ['T', 'X', 'Y'], Extension.NONCENTRAL_T),
    ]


@pytest.mark.parametrize("ord", create_orderings(), ids=lambda o: f"{o.ctx.describe()} {o.describe()}")
def test_monomial_ordering_axioms(ord):
    """Strict total order, 1 smallest, compatible with multiplication on both sides, up to degree 4"""
    ctx = ord.ctx
    pool = [m for p in range(5) for m in mono.monomials_of_degree(p, ctx)]
    assert len(set(pool)) == len(pool)
    ascending = sorted(pool, key=ord.key)
    for i, u in enumerate(ascending):
        assert ord.compare(u, u) is Comparison.EQUAL
        for v in ascending[i + 1:]:
            assert ord.compare(u, v) is Comparison.LESS
            assert ord.compare(v, u) is Comparison.GREATER

    one = ctx.one()
    assert ascending[0] == one
    if ctx.is_commutative:
        letters = [tuple(int(i == j) for j in range(ctx.nvars)) for i in range(ctx.nvars)]
    else:
        letters = [(i,) for i in range(ctx.nvars)]
    for u, v in zip(ascending, ascending[1:]):
        for w in letters:
            assert ord.compare(mono.multiply(u, w, ctx), mono.multiply(v, w, ctx)) is Comparison.LESS
            assert ord.compare(mono.multiply(w, u, ctx), mono.multiply(w, v, ctx)) is Comparison.LESS


def test_central_t_matches_its_definition():
    """t^a u < t^b v iff u < v in the base ordering, or u = v and a < b"""
    rng = np.random.default_rng(3)
    for weights in ([1, 1], [2, 1]):
        base = RingContext.commutative(['x', 'y'], weights)
        ring = RingContext.commutative(['x', 'y', 't'], weights + [1], homog_var='t')
        ord_base = OrderingSpec.deglex(base, ['x', 'y'])
        ord_ext = OrderingSpec.deglex(ring, ['t', 'x', 'y'], Extension.CENTRAL_T)
        for _ in range(2000):
            a, b = tuple(int(e) for e in rng.integers(0, 4, 3)), tuple(int(e) for e in rng.integers(0, 4, 3))
            below = ord_base.compare(a[:2], b[:2])
            literal = below is Comparison.LESS or (below is Comparison.EQUAL and a[2] < b[2])
            assert (ord_ext.compare(a, b) is Comparison.LESS) == literal


def test_default_ordering(free_xyt, ring_xyt):
    assert default_ordering(free_xyt).precedence == (2, 0, 1)
    assert default_ordering(ring_xyt).extension is Extension.CENTRAL_T


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
