"""Torsion scan for the homogenization variable on a graded quotient.

For each degree p the map (R/J)_p -> (R/J)_{p+1}, F -> t F (T F for words), is
written in normal-monomial coordinates and its kernel dimension is read off
from an exact rank computation.
"""

from enum import Enum
from typing import List, Optional, Union

from sympy.polys.matrices import DomainMatrix

from groebner.basis import GroebnerBasis
from poly.polynomial import Polynomial
from presentations.normal_monomials import normal_monomials
from utils.config_loader import settings
from utils.errors import ArgumentError
from utils.logger import log


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def multiply_by_homog_var(m: tuple, ctx, side: Side = Side.LEFT) -> tuple:
    h = ctx.homog_index
    if ctx.is_commutative:
        return tuple(e + 1 if i == h else e for i, e in enumerate(m))
    return (h,) + m if side is Side.LEFT else m + (h,)


def torsion_kernel_dims(G: GroebnerBasis, max_degree: Optional[int] = None,
                        side: Union[Side, str] = Side.LEFT) -> List[int]:
    """Kernel dimension of multiplication by t (by T from ``side``) in each degree <= max_degree

    ``side`` only matters for words; modulo the commutators both sides agree.
    """
    ctx = G.ctx
    try:
        side = Side(side)
    except ValueError:
        raise ArgumentError(f"side must be left or right, not {side!r}") from None
    if ctx.homog_index is None:
        raise ArgumentError(f"{ctx.describe()} has no homogenization variable")
    cap = settings.engine.max_degree if max_degree is None else max_degree
    domain = ctx.field.domain
    normal = normal_monomials(G, cap + 1)

    dims = []
    for p in range(cap + 1):
        source = normal.by_degree.get(p, [])
        target = normal.by_degree.get(p + 1, [])
        if not source:
            dims.append(0)
            continue
        if not target:
            dims.append(len(source))
            continue
        column = {m: k for k, m in enumerate(target)}
        rows = []
        for m in source:
            image = G.reduce(Polynomial.monomial(ctx, multiply_by_homog_var(m, ctx, side))).remainder
            row = [domain.zero] * len(target)
            for n, c in image.terms():
                row[column[n]] = c
            rows.append(row)
        rank = DomainMatrix(rows, (len(source), len(target)), domain).rank()
        dims.append(len(source) - rank)

    if any(dims):
        log.info(f"torsion visible up to degree {cap}: {dims}")
    return dims
