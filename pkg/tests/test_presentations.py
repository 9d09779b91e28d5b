import pytest

from algebra_core.context import RingContext
from algebra_core.orderings import OrderingSpec
from dehomogenization.central import CentralDhContext
from dehomogenization.noncentral import NoncentralDhContext
from groebner.basis import GroebnerBasis
from groebner.buchberger import buchberger
from groebner.nc_completion import complete_nc
from presentations.normal_monomials import lh_set, monomial_relations, normal_monomials, quotient_dims
from presentations.presentation import PresentationMode, presentation_report
from tests.conftest import create_poly, create_polys
from utils.errors import ArgumentError, PreconditionError, ZeroPolynomialError


def create_central_rees(ring_xyt, ord_xyt):
    return buchberger(create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ring_xyt), ord_xyt)


def test_normal_monomials_commutative(ring_xy, ord_xy):
    G = buchberger(create_polys(["y + 1/2 x", "x^2 + 4"], ring_xy), ord_xy)
    normal = normal_monomials(G, 3)
    assert normal.by_degree[0] == [(0, 0)]
    assert normal.by_degree[1] == [(1, 0)]
    assert normal.dims() == [1, 1, 0, 0]
    assert (0, 1) not in normal and len(normal) == 2

    zero = GroebnerBasis((), ord_xy)
    assert normal_monomials(zero, 2).dims() == [1, 2, 3]
    assert list(normal_monomials(zero, 2)) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_normal_words(free_xy, ord_free_xy):
    G = complete_nc(create_polys(["Y + 1/4 X", "X^2 - 16 X + 48"], free_xy), ord_free_xy, 4)
    normal = normal_monomials(G, 3)
    assert list(normal) == [(), (0,)]
    assert quotient_dims(GroebnerBasis((), ord_free_xy), 2) == [1, 2, 4]


def test_quotient_dims(ring_xyt, ord_xyt, ring_xy, ord_xy):
    assert quotient_dims(create_central_rees(ring_xyt, ord_xyt), 3) == [1, 2, 2, 2]
    unit = buchberger([create_poly("1", ring_xy)], ord_xy)
    assert quotient_dims(unit, 3) == [0, 0, 0, 0]


def test_weighted_normal_words():
    free = RingContext.free(['X', 'Y'], [1, 2])
    ord = OrderingSpec.deglex(free, ['X', 'Y'])
    assert quotient_dims(GroebnerBasis((), ord), 4) == [1, 1, 2, 3, 5]


def test_lh_set(ring_xy, free_xy, ring_xyt):
    assert lh_set(create_polys(["y + 1/2 x", "x^2 + 4"], ring_xy)) == create_polys(["y + 1/2 x", "x^2"], ring_xy)
    assert lh_set(create_polys(["Y + 1/4 X", "X^2 - 16 X + 48"], free_xy)) == \
        create_polys(["Y + 1/4 X", "X^2"], free_xy)
    homogeneous = create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ring_xyt)
    assert lh_set(homogeneous) == homogeneous
    with pytest.raises(ZeroPolynomialError):
        lh_set([create_poly("x", ring_xy) - create_poly("x", ring_xy)])


def test_monomial_relations(ring_xy, ord_xy):
    G = buchberger(create_polys(["y + 1/2 x", "x^2 + 4"], ring_xy), ord_xy)
    assert monomial_relations(G) == create_polys(["y", "x^2"], ring_xy)


def test_central_report(ring_xyt, ord_xyt):
    report = presentation_report(create_central_rees(ring_xyt, ord_xyt), PresentationMode.CENTRAL, 3)
    base = report.algebra.ctx
    assert list(report.algebra) == create_polys(["y + 1/2 x", "x^2 + 4"], base)
    assert list(report.graded) == create_polys(["y + 1/2 x", "x^2"], base)
    assert list(report.rees) == create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ring_xyt)
    assert report.algebra_dims() == [1, 1, 0, 0]
    assert report.graded_dims() == [1, 1, 0, 0]
    assert report.rees_dims() == [1, 2, 2, 2]
    assert report.cumulative_algebra_dims() == report.rees_dims()

    table = report.dimension_table()
    assert list(table.columns) == ['degree', 'A', 'G(A)', 'LM(A)', 'Rees', 'A_cumulative']
    assert table['Rees'].tolist() == [1, 2, 2, 2]


def test_noncentral_report_of_commutators():
    dh = NoncentralDhContext.from_base(RingContext.free(['X', 'Y']), 'T')
    report = presentation_report(list(dh.commutators), max_degree=2, degree_bound=4, dh=dh)
    assert report.mode is PresentationMode.NONCENTRAL
    assert report.algebra.is_zero_ideal
    assert report.algebra_dims() == [1, 2, 4]
    assert report.rees_dims() == [1, 3, 7]
    assert report.cumulative_algebra_dims() == [1, 3, 7]


def test_report_gate(ring_xyt):
    S_star = create_polys(["y^3 - t^2 x - t^2 y", "y^2 + t^2"], ring_xyt)
    with pytest.raises(PreconditionError) as err:
        presentation_report(S_star, max_degree=3)
    assert err.value.offending == create_poly("t^2 y + 1/2 t^2 x", ring_xyt)


def test_report_needs_a_homogenization_variable(ring_xy, ord_xy):
    with pytest.raises(ArgumentError):
        presentation_report(buchberger([create_poly("x", ring_xy)], ord_xy))
    dh = CentralDhContext.from_base(ring_xy)
    with pytest.raises(ArgumentError):
        presentation_report([create_poly("x", dh.ext)], PresentationMode.NONCENTRAL)


def test_dimension_laws_for_worked_ideals(ring_xyt, ord_xyt):
    """dim of the homogenized quotient in degree p counts t^r w with r + deg w = p, w normal for I"""
    report = presentation_report(create_central_rees(ring_xyt, ord_xyt), max_degree=8)
    cumulative = report.cumulative_algebra_dims()
    assert report.rees_dims() == cumulative

    dh = NoncentralDhContext.from_base(RingContext.free(['X', 'Y']), 'T')
    gb_I = create_polys(["Y + 1/4 X", "X^2 - 16 X + 48"], dh.base)
    rees = dh.homogenize_basis(gb_I, 8)
    report = presentation_report(rees, max_degree=8, degree_bound=8, dh=dh)
    assert report.rees_dims() == report.cumulative_algebra_dims() == [1, 2, 2, 2, 2, 2, 2, 2, 2]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
