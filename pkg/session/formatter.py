from typing import List

from algebra_core.context import RingContext
from algebra_core.orderings import OrderingSpec
from groebner.basis import GroebnerBasis
from poly.printer import format_monomial, format_polynomial, format_polynomials
from presentations.normal_monomials import NormalMonomialSet
from presentations.presentation import PresentationReport
from reduction.normal_form import ReductionTrace


def monomial_text(m: tuple, ctx: RingContext) -> str:
    return format_monomial(m, ctx) or "1"


def basis_text(G: GroebnerBasis) -> str:
    return format_polynomials(G.elements, G.ordering)


def completeness_text(G: GroebnerBasis) -> str:
    if G.degree_bound is None:
        return "complete: yes"
    if G.complete:
        return f"complete: yes (degree bound {G.degree_bound})"
    return f"complete: no (stopped at degree bound {G.degree_bound})"


def trace_lines(trace: ReductionTrace, ord: OrderingSpec) -> List[str]:
    ctx = ord.ctx
    lines = []
    for step in trace.steps:
        lines.append(f"  {ctx.field.render(step.scalar)} * [{monomial_text(step.left, ctx)}] "
                     f"g{step.divisor + 1} [{monomial_text(step.right, ctx)}]")
    lines.append(f"  remainder: {format_polynomial(trace.remainder, ord)}")
    return lines


def normal_lines(normal: NormalMonomialSet) -> List[str]:
    ctx = normal.basis.ctx
    lines = []
    for p in range(normal.max_degree + 1):
        words = normal.by_degree.get(p, [])
        listed = ", ".join(monomial_text(m, ctx) for m in words) if words else "-"
        lines.append(f"degree {p}: {listed}")
    lines.append(f"dims: {normal.dims()}")
    return lines


def report_lines(report: PresentationReport) -> List[str]:
    lines = [
        f"A: {basis_text(report.algebra)}",
        f"G(A): {basis_text(report.graded)}",
        f"LM(A): {basis_text(report.monomial)}",
        f"Rees: {basis_text(report.rees)}",
    ]
    if report.rees.degree_bound is not None:
        lines.append(completeness_text(report.rees))
    lines.extend(report.dimension_table().to_string(index=False).splitlines())
    return lines
