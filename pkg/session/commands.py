"""Dispatch a parsed session to one command and render its report.

Exit codes: 0 success, 1 any other engine error, 2 session parse error.
"""

import argparse
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

from dehomogenization.central import CentralDhContext, treat_variable_as_t
from dehomogenization.noncentral import NoncentralDhContext, treat_variable_as_T
from groebner.basis import GroebnerBasis
from groebner.buchberger import buchberger
from groebner.nc_completion import complete_nc
from poly.printer import format_polynomial
from presentations.normal_monomials import normal_monomials
from presentations.presentation import presentation_report
from session.formatter import (basis_text, completeness_text, monomial_text, normal_lines, report_lines,
                               trace_lines)
from session.parser import Session, parse_session
from utils.config_loader import settings
from utils.errors import ArgumentError, DhGroebnerError, SessionParseError
from utils.logger import log

COMMANDS = ('gb', 'homogenize', 'dehomogenize', 'dhcheck', 'pipeline', 'normal', 'present')

DhContext = Union[CentralDhContext, NoncentralDhContext]


@dataclass
class CommandResult:
    output: str
    exit_code: int = 0
    error: str = ""


class _RaisingParser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def add_command_options(parser: argparse.ArgumentParser):
    parser.add_argument('--degree-bound', type=int, default=None,
                        help='Degree bound for free-algebra completion (required for ncvars gb/pipeline)')
    parser.add_argument('--maxdeg', type=int, default=None, help='Degree cap for normal monomials and tables')
    parser.add_argument('--trace', action='store_true', help='Append reduction traces')
    parser.add_argument('--asvar', default=None, help='Treat this variable as the homogenization variable')
    parser.add_argument('--noncommutative', action='store_true', help='Require an ncvars session')
    check = parser.add_mutually_exclusive_group()
    check.add_argument('--element', action='store_true', help='dhcheck: test each polynomial')
    check.add_argument('--ideal', action='store_true', help='dhcheck: test the ideal they generate')


def command_parser() -> argparse.ArgumentParser:
    parser = _RaisingParser(prog='command', add_help=False)
    parser.add_argument('command', choices=COMMANDS)
    add_command_options(parser)
    return parser


# -- helpers -----------------------------------------------------------------

def _header(session: Session) -> List[str]:
    lines = [f"ring: {session.ctx.describe()}", f"ordering: {session.ordering.describe()}"]
    if session.reordered:
        lines.append(f"note: {session.homvar} moved to the lowest precedence")
    return lines


def _dh_context(session: Session, opts) -> DhContext:
    name = opts.asvar or session.homvar
    if name is None:
        raise ArgumentError("this command needs 'homvar' in the session or --asvar")
    if opts.asvar and session.homvar and opts.asvar != session.homvar:
        raise ArgumentError(f"--asvar {opts.asvar} conflicts with homvar {session.homvar}")
    if session.noncommutative:
        return treat_variable_as_T(session.ctx, name, session.precedence)
    return treat_variable_as_t(session.ctx, name, session.precedence)


def _bound(opts, required: bool, what: str) -> Optional[int]:
    if opts.degree_bound is None and required:
        raise ArgumentError(f"--degree-bound is required for noncommutative {what}")
    return settings.engine.degree_bound if opts.degree_bound is None else opts.degree_bound


def _is_central(dh: DhContext) -> bool:
    return isinstance(dh, CentralDhContext)


def _trace_block(label: str, f, basis: GroebnerBasis) -> List[str]:
    return [f"trace {label}:"] + trace_lines(basis.reduce(f), basis.ordering)


def _membership_traces(name: str, elements: GroebnerBasis, against: str, basis: GroebnerBasis) -> List[str]:
    lines = []
    for k, g in enumerate(elements, start=1):
        lines.extend(_trace_block(f"{name}[{k}] mod {against}", g, basis))
    return lines


def _compute_gb(session: Session, opts, what: str) -> GroebnerBasis:
    if session.noncommutative:
        return complete_nc(session.polys(), session.ordering, _bound(opts, what in ('gb', 'pipeline'), what))
    return buchberger(session.polys(), session.ordering)


# -- commands ----------------------------------------------------------------

def _gb(session: Session, opts) -> List[str]:
    basis = _compute_gb(session, opts, 'gb')
    lines = _header(session) + [f"gb: {basis_text(basis)}"]
    if session.noncommutative:
        lines.append(completeness_text(basis))
    if opts.trace:
        for name, f in session.polynomials.items():
            lines.extend(_trace_block(name, f, basis))
    return lines


def _homogenize(session: Session, opts) -> List[str]:
    dh = _dh_context(session, opts)
    mark = '*' if _is_central(dh) else '~'
    lines = _header(session)
    for name, f in session.polynomials.items():
        F = dh.homogenize(dh.to_base(f))
        lines.append(f"{name}{mark} = {format_polynomial(F, dh.ord_ext)}")
    return lines


def _dehomogenize(session: Session, opts) -> List[str]:
    dh = _dh_context(session, opts)
    mark = '*' if _is_central(dh) else '~'
    lines = _header(session)
    for name, f in session.polynomials.items():
        lines.append(f"{name}_{mark} = {format_polynomial(dh.dehomogenize(dh.from_original(f)), dh.ord_base)}")
    return lines


def _dhcheck(session: Session, opts) -> List[str]:
    dh = _dh_context(session, opts)
    lines = _header(session)
    polys = [dh.from_original(f) for f in session.polys()]

    if opts.ideal:
        if _is_central(dh):
            verdict = dh.is_dh_closed_ideal(polys)
        else:
            verdict = dh.is_dh_closed_ideal(polys, _bound(opts, False, 'dhcheck'))
        if verdict.closed:
            lines.append("dh-closed")
        else:
            lm = verdict.witness.leading_monomial(dh.ord_ext)
            lines.append(f"NOT dh-closed; witness LM = {monomial_text(lm, dh.ext)}")
        lines.append(f"basis: {basis_text(verdict.basis)}")
        if not verdict.closed:
            witness = verdict.witness.map_monomials(
                (lambda m: m[:-1] + (m[-1] - 1,)) if _is_central(dh) else (lambda w: w[1:]), dh.ext)
            lines.append(f"torsion witness: {format_polynomial(witness, dh.ord_ext)}")
        if verdict.basis.degree_bound is not None:
            lines.append(completeness_text(verdict.basis))
        if opts.trace:
            for name, f in zip(session.polynomials, polys):
                lines.extend(_trace_block(name, f, verdict.basis))
            if not verdict.closed:
                # the basis element it came from is the homogenization variable times the witness
                lines.extend(_trace_block("witness", witness, verdict.basis))
                lines.extend(_trace_block(f"{dh.ext.homog_var}*witness", verdict.witness, verdict.basis))
        return lines

    for name, f in zip(session.polynomials, polys):
        if dh.is_dh_closed_element(f):
            lines.append(f"{name}: dh-closed")
        else:
            lines.append(f"{name}: NOT dh-closed (defect {dh.dh_defect(f)})")
    return lines


def _pipeline(session: Session, opts) -> List[str]:
    dh = _dh_context(session, opts)
    lines = _header(session)
    if _is_central(dh):
        report = dh.pipeline(session.polys())
        lines += [
            f"gb_Sstar: {basis_text(report.gb_Sstar)}",
            f"gb_I: {basis_text(report.gb_I)}",
            f"gb_Istar: {basis_text(report.gb_Istar)}",
            "strict inclusion detected" if report.strict_inclusion else "ideals equal",
        ]
        if opts.trace:
            lines += _membership_traces("gb_Istar", report.gb_Istar, "gb_Sstar", report.gb_Sstar)
        return lines

    bound = _bound(opts, True, 'pipeline')
    report = dh.pipeline(session.polys(), bound)
    verdict = "strict inclusion detected" if report.strict_inclusion else "ideals equal"
    lines += [
        f"gb_Stilde: {basis_text(report.gb_Stilde)}",
        f"gb_I: {basis_text(report.gb_I)}",
        f"gb_Itilde: {basis_text(report.gb_Itilde)}",
        f"{verdict} (up to degree {bound})",
        f"commutator images dropped: {report.dropped_commutator_images}",
        completeness_text(report.gb_Stilde),
    ]
    if opts.trace:
        lines += _membership_traces("gb_Itilde", report.gb_Itilde, "gb_Stilde", report.gb_Stilde)
    return lines


def _normal(session: Session, opts) -> List[str]:
    basis = _compute_gb(session, opts, 'normal')
    lines = _header(session) + [f"gb: {basis_text(basis)}"]
    return lines + normal_lines(normal_monomials(basis, opts.maxdeg))


def _present(session: Session, opts) -> List[str]:
    dh = _dh_context(session, opts)
    polys = [dh.from_original(f) for f in session.polys()]
    bound = None if _is_central(dh) else _bound(opts, False, 'present')
    report = presentation_report(polys, max_degree=opts.maxdeg, degree_bound=bound, dh=dh)
    return _header(session) + report_lines(report)


HANDLERS: Dict[str, Callable[[Session, argparse.Namespace], List[str]]] = {
    'gb': _gb,
    'homogenize': _homogenize,
    'dehomogenize': _dehomogenize,
    'dhcheck': _dhcheck,
    'pipeline': _pipeline,
    'normal': _normal,
    'present': _present,
}


def run_command(session: Session, argv: Optional[Sequence[str]] = None,
                options: Optional[argparse.Namespace] = None) -> CommandResult:
    """Run ``options`` (or ``argv``, or the session's own command line) against the session"""
    try:
        if options is None:
            argv = list(argv) if argv is not None else session.command
            if not argv:
                raise ArgumentError("no command given")
            options = command_parser().parse_args(argv)
        if options.noncommutative and not session.noncommutative:
            raise ArgumentError("--noncommutative needs an ncvars session")
        log.info(f"running {options.command} on {session.ctx.describe()}")
        lines = HANDLERS[options.command](session, options)
        return CommandResult("\n".join(lines) + "\n")
    except SessionParseError as e:
        log.error(f"parse error: {e}")
        return CommandResult("", 2, f"parse error: {e}")
    except DhGroebnerError as e:
        log.error(f"{options.command if options else 'command'} failed: {e}")
        return CommandResult("", 1, f"error: {e}")


def execute(text: str, argv: Optional[Sequence[str]] = None,
            options: Optional[argparse.Namespace] = None) -> CommandResult:
    try:
        session = parse_session(text)
    except SessionParseError as e:
        log.error(f"parse error: {e}")
        return CommandResult("", 2, f"parse error: {e}")
    return run_command(session, argv, options)
