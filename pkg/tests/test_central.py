from itertools import combinations

import numpy as np
import pytest

from algebra_core.context import RingContext
from algebra_core.monomials import monomials_of_degree
from dehomogenization.central import CentralDhContext, pipeline_central, treat_variable_as_t
from groebner.basis import minimalize
from groebner.buchberger import buchberger, verify_groebner
from poly.polynomial import Polynomial
from poly.printer import format_polynomial, format_polynomials
from tests.conftest import create_poly, create_polys, create_random_homogeneous, create_random_poly
from utils.errors import ArgumentError, PreconditionError, ZeroPolynomialError


def create_dh(precedence=('x', 'y'), weights=()):
    return CentralDhContext.from_base(RingContext.commutative(['x', 'y'], weights), 't', precedence)


def test_extended_context():
    dh = create_dh()
    assert dh.ext.variables == ('x', 'y', 't')
    assert dh.t == 't'
    assert dh.ord_ext.describe() == "deglex(x < y) central-t"
    with pytest.raises(ArgumentError):
        CentralDhContext.from_base(RingContext.commutative(['x', 't']), 't')
    with pytest.raises(ArgumentError):
        CentralDhContext.from_base(RingContext.free(['X']), 't')


def test_homogenize():
    dh = create_dh()
    base, ext = dh.base, dh.ext
    assert dh.homogenize(create_poly("y^3 - x - y", base)) == create_poly("y^3 - t^2 x - t^2 y", ext)
    assert dh.homogenize(create_poly("x + 2 y", base)) == create_poly("x + 2 y", ext)
    image = dh.homogenize(create_poly("y^2 + 1", base))
    assert image == create_poly("y^2 + t^2", ext)
    assert image.homogeneous_degree == 2
    with pytest.raises(ZeroPolynomialError):
        dh.homogenize(Polynomial.zero(base))


def test_dehomogenize():
    dh = create_dh()
    base, ext = dh.base, dh.ext
    assert dh.dehomogenize(create_poly("t^2 x + 2 t^2 y", ext)) == create_poly("x + 2 y", base)
    assert dh.dehomogenize(create_poly("t^5", ext)) == 1
    f = create_poly("y^3 - x - y", base)
    assert dh.dehomogenize(dh.homogenize(f)) == f


def test_element_dh_closure():
    dh = create_dh()
    ext = dh.ext
    assert dh.is_dh_closed_element(create_poly("x^2 + 4 t^2", ext))
    assert not dh.is_dh_closed_element(create_poly("t^2 x + 2 t^2 y", ext))
    assert not dh.is_dh_closed_element(create_poly("t^3", ext))
    assert dh.dh_defect(create_poly("t^2 x + 2 t^2 y", ext)) == 2
    assert dh.dh_defect(create_poly("x^2 + 4 t^2", ext)) == 0
    assert dh.dh_defect(create_poly("t^3", ext)) == 3
    with pytest.raises(PreconditionError):
        dh.is_dh_closed_element(create_poly("x + t^2", ext))


def test_homogenize_basis():
    dh = create_dh()
    base, ext = dh.base, dh.ext
    G = buchberger(create_polys(["y + 1/2 x", "x^2 + 4"], base), dh.ord_base)
    assert list(dh.homogenize_basis(G)) == create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ext)
    assert list(dh.homogenize_basis([create_poly("x", base)])) == [create_poly("x", ext)]
    assert dh.homogenize_basis([]).is_zero_ideal
    with pytest.raises(ArgumentError):
        dh.homogenize_basis(create_polys(["y^2 + 1", "y^3 - x - y"], base))


def test_dehomogenize_basis():
    dh = create_dh()
    base, ext = dh.base, dh.ext
    gb_Sstar = create_polys(["y^2 + t^2", "t^2 y + 1/2 t^2 x", "t^2 x^2 + 4 t^4"], ext)
    assert list(dh.dehomogenize_basis(gb_Sstar)) == create_polys(["y + 1/2 x", "x^2 + 4", "y^2 + 1"], base)
    assert list(dh.dehomogenize_basis([create_poly("x^2 + 4 t^2", ext)])) == [create_poly("x^2 + 4", base)]
    assert dh.dehomogenize_basis([create_poly("t", ext)]).is_unit_ideal
    with pytest.raises(PreconditionError):
        dh.dehomogenize_basis([create_poly("x + t^2", ext)])


def test_ideal_dh_closure():
    dh = create_dh()
    ext = dh.ext
    assert dh.is_dh_closed_ideal(create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ext))
    S_star = create_polys(["y^3 - t^2 x - t^2 y", "y^2 + t^2"], ext)
    verdict = dh.is_dh_closed_ideal(S_star)
    assert not verdict
    assert verdict.witness == create_poly("t^2 y + 1/2 t^2 x", ext)
    assert not dh.is_dh_closed_ideal([create_poly("t", ext)])


def test_torsion_witness():
    """t F lies in J while F does not"""
    dh = create_dh()
    ext = dh.ext
    S_star = create_polys(["y^3 - t^2 x - t^2 y", "y^2 + t^2"], ext)
    F = dh.torsion_witness(S_star)
    assert F == create_poly("t y + 1/2 t x", ext)
    J = buchberger(S_star, dh.ord_ext)
    assert J.contains(create_poly("t", ext) * F)
    assert not J.contains(F)
    assert dh.torsion_witness(create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ext)) is None


def test_dh_closure():
    dh = create_dh()
    ext = dh.ext
    S_star = create_polys(["y^3 - t^2 x - t^2 y", "y^2 + t^2"], ext)
    assert list(dh.dh_closure(S_star)) == create_polys(["y + 1/2 x", "x^2 + 4 t^2"], ext)


def test_homogenized_generators_come_back():
    """F* inside the basis of <F*> gives F inside its dehomogenization"""
    dh = create_dh()
    F = create_polys(["y + 1/2 x", "x^2 + 4"], dh.base)
    G = buchberger([dh.homogenize(f) for f in F], dh.ord_ext)
    assert {dh.homogenize(f) for f in F} <= set(G)
    assert set(F) <= set(dh.dehomogenize_basis(G))


def test_worked_pipeline():
    dh = create_dh()
    base = dh.base
    report = dh.pipeline(create_polys(["y^3 - x - y", "y^2 + 1"], base))
    assert format_polynomials(report.gb_Sstar.elements, dh.ord_ext) == \
        "{t^2 y + 1/2 t^2 x, t^2 x^2 + 4 t^4, y^2 + t^2}"
    assert format_polynomials(report.gb_I.elements, dh.ord_base) == "{y + 1/2 x, x^2 + 4}"
    assert format_polynomials(report.gb_Istar.elements, dh.ord_ext) == "{y + 1/2 x, x^2 + 4 t^2}"
    assert report.strict_inclusion
    assert not report.gb_Sstar.contains(report.gb_Istar[0])


def test_pipeline_small_cases():
    dh = create_dh()
    base, ext = dh.base, dh.ext
    report = pipeline_central([create_poly("x", base)], dh)
    assert list(report.gb_Sstar) == list(report.gb_Istar) == [create_poly("x", ext)]
    assert report.ideals_equal

    report = dh.pipeline([create_poly("x^2 + 4", base)])
    assert list(report.gb_Sstar) == list(report.gb_Istar) == [create_poly("x^2 + 4 t^2", ext)]
    assert not report.strict_inclusion
    with pytest.raises(ArgumentError):
        dh.pipeline([Polynomial.zero(base)])


def test_treat_variable_as_t():
    ring = RingContext.commutative(['x', 'y', 't'], homog_var='t')
    dh = treat_variable_as_t(ring, 2)
    assert dh.ext == ring and dh.original is None

    plain = RingContext.commutative(['x', 'y'])
    dh = treat_variable_as_t(plain, 'x')
    assert dh.base.variables == ('y',)
    assert dh.t == 'x'
    f = create_poly("y^2 + x y + 1", plain)
    F = dh.from_original(f)
    assert format_polynomial(F, dh.ord_ext) == "y^2 + x y + 1"
    assert dh.to_original(F) == f
    assert dh.to_original(dh.homogenize(create_poly("y^2 + 1", dh.base))) == create_poly("y^2 + x^2", plain)

    with pytest.raises(ArgumentError):
        treat_variable_as_t(RingContext.commutative(['x', 'y'], [1, 2]), 'y')


@pytest.mark.parametrize("weights", [(), (2, 1)])
def test_homogenization_laws_on_random_elements(weights):
    """(f*)_* = f, (f g)* = f* g*, F = t^r (F_*)^* for homogeneous F"""
    dh = create_dh(weights=weights)
    rng = np.random.default_rng(2024)
    t = create_poly("t", dh.ext)
    for _ in range(1000):
        f = create_random_poly(rng, dh.base)
        g = create_random_poly(rng, dh.base)
        assert dh.dehomogenize(dh.homogenize(f)) == f
        assert dh.homogenize(f * g) == dh.homogenize(f) * dh.homogenize(g)
        F = dh.homogenize(f) * t ** int(rng.integers(0, 3))
        r = dh.dh_defect(F)
        assert t ** r * dh.homogenize(dh.dehomogenize(F)) == F


@pytest.mark.parametrize("weights", [(), (2, 1)])
def test_leading_monomials_follow_homogenization(weights):
    """LM(f*) = LM(f) and LM(F_*) = LM(F)_* for homogeneous F"""
    dh = create_dh(weights=weights)
    rng = np.random.default_rng(77)
    for _ in range(1000):
        f = create_random_poly(rng, dh.base)
        assert dh.homogenize(f).leading_monomial(dh.ord_ext) == f.leading_monomial(dh.ord_base) + (0,)

        F = create_random_homogeneous(rng, dh.ext, int(rng.integers(1, 5)))
        assert dh.dehomogenize(F).leading_monomial(dh.ord_base) == F.leading_monomial(dh.ord_ext)[:-1]


def test_dh_criteria_agree_on_homogeneous_combinations():
    """Every monomial and every binomial m + 2 n of degree <= 4 in K[x,y,t]"""
    dh = create_dh()
    for p in range(1, 5):
        pool = monomials_of_degree(p, dh.ext)
        candidates = [{m: 1} for m in pool] + [{m: 1, n: 2} for m, n in combinations(pool, 2)]
        for terms in candidates:
            F = Polynomial(dh.ext, terms)
            closed = dh.is_dh_closed_element(F)
            assert closed == (dh.homogenize(dh.dehomogenize(F)) == F)
            assert closed == (dh.dh_defect(F) == 0)


def test_basis_transfer_on_random_ideals():
    """F is a Groebner basis exactly when F* is; bases move both ways between K[x,y,z] and K[x,y,z,t]"""
    dh = CentralDhContext.from_base(RingContext.commutative(['x', 'y', 'z']), 't')
    rng = np.random.default_rng(5)
    agreed = {True: 0, False: 0}
    for _ in range(200):
        F = [create_random_poly(rng, dh.base, 4, 3) for _ in range(int(rng.integers(1, 4)))]
        F_star = [dh.homogenize(f) for f in F]
        is_basis = bool(verify_groebner(F, dh.ord_base))
        assert bool(verify_groebner(F_star, dh.ord_ext)) == is_basis
        agreed[is_basis] += 1

        G = buchberger(F, dh.ord_base)
        J = buchberger(F_star, dh.ord_ext)
        assert verify_groebner(dh.dehomogenize_basis(J), dh.ord_base)
        if G.is_unit_ideal:
            continue
        H = dh.homogenize_basis(G)
        assert verify_groebner(H, dh.ord_ext)
        back = dh.dehomogenize_basis(H)
        assert verify_groebner(back, dh.ord_base)
        assert back.same_ideal(G)
    assert agreed[True] and agreed[False]


def test_round_trips_on_worked_bases():
    """Homogenizing and dehomogenizing are inverse on minimal bases and dh-closed minimal bases"""
    dh = create_dh()
    base, ext = dh.base, dh.ext
    gb_I = buchberger(create_polys(["y^3 - x - y", "y^2 + 1"], base), dh.ord_base)
    gb_Istar = dh.homogenize_basis(gb_I)
    assert set(dh.homogenize_basis(dh.dehomogenize_basis(gb_Istar))) == set(gb_Istar)
    assert set(minimalize(dh.dehomogenize_basis(dh.homogenize_basis(gb_I)))) == set(gb_I)

    closure = dh.dh_closure(create_polys(["y^3 - t^2 x - t^2 y", "y^2 + t^2"], ext))
    assert set(dh.homogenize_basis(dh.dehomogenize_basis(closure))) == set(closure)


def test_round_trips_on_random_bases():
    dh = create_dh()
    rng = np.random.default_rng(11)
    for _ in range(60):
        F = [create_random_poly(rng, dh.base, 3, 3) for _ in range(int(rng.integers(1, 4)))]
        G = buchberger(F, dh.ord_base)
        if G.is_unit_ideal:
            continue
        assert set(minimalize(dh.dehomogenize_basis(dh.homogenize_basis(G)))) == set(G)

        closed = dh.dh_closure([dh.homogenize(f) for f in F])
        assert dh.is_dh_closed_ideal(closed)
        assert set(dh.homogenize_basis(dh.dehomogenize_basis(closed))) == set(closed)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
