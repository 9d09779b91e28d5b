"""Line-oriented session files.

    # comment
    field Q | field GF <p>
    vars <names...> | ncvars <names...>
    weights <ints...>
    order deglex <names ascending>
    homvar <name>
    poly <name> = <expr>
    command <name> [--options]

Expressions are signed terms; a term is an optional coefficient (``3``,
``1/2``) followed by factors ``x^2`` separated by ``*`` or spaces. In ncvars
sessions factors are letters of a word and their order is kept.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra_core.context import RingContext
from algebra_core.orderings import Extension, OrderingSpec
from algebra_core.scalars import ScalarField
from poly.polynomial import Polynomial
from utils.config_loader import settings
from utils.errors import DhGroebnerError, SessionParseError

TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*/^]))")


@dataclass
class Session:
    ctx: RingContext
    ordering: OrderingSpec
    precedence: Tuple[str, ...]
    polynomials: Dict[str, Polynomial] = field(default_factory=dict)
    command: Optional[List[str]] = None
    # homvar was moved to the lowest precedence of an ncvars session
    reordered: bool = False

    @property
    def homvar(self) -> Optional[str]:
        return self.ctx.homog_var

    @property
    def noncommutative(self) -> bool:
        return not self.ctx.is_commutative

    def polys(self) -> List[Polynomial]:
        return list(self.polynomials.values())


class _ExpressionParser:
    def __init__(self, text: str, ctx: RingContext, line: int, offset: int):
        self.ctx = ctx
        self.line = line
        self.offset = offset
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = TOKEN.match(text, pos)
            if match is None or match.end() == pos:
                self._fail(f"unexpected character {text[pos]!r}", pos + 1)
            kind = match.lastgroup
            self.tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        self.i = 0

    def _fail(self, message: str, pos: int):
        raise SessionParseError(message, self.line, self.offset + pos)

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self):
        token = self._peek()
        self.i += 1
        return token

    def _is_op(self, value: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == 'op' and token[1] == value

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail("empty expression", 1)
        result = Polynomial.zero(self.ctx)
        sign = 1
        if self._is_op('-') or self._is_op('+'):
            sign = -1 if self._next()[1] == '-' else 1
        while True:
            term = self._term()
            result = result + (term if sign > 0 else -term)
            token = self._peek()
            if token is None:
                return result
            if token[0] == 'op' and token[1] in '+-':
                sign = -1 if self._next()[1] == '-' else 1
                continue
            self._fail(f"unexpected {token[1]!r}", token[2] + 1)

    def _integer(self) -> int:
        token = self._next()
        if token is None or token[0] != 'number':
            where = token[2] + 1 if token else (self.tokens[-1][2] + 2 if self.tokens else 1)
            self._fail("expected an integer", where)
        return int(token[1])

    def _term(self) -> Polynomial:
        ctx = self.ctx
        field_ = ctx.field
        coefficient = field_.one
        token = self._peek()
        if token is None:
            self._fail("expected a term", (self.tokens[-1][2] + 2) if self.tokens else 1)
        has_coefficient = token[0] == 'number'
        if has_coefficient:
            numerator = self._integer()
            denominator = 1
            if self._is_op('/'):
                slash = self._next()
                denominator = self._integer()
                if denominator == 0:
                    self._fail("zero denominator", slash[2] + 2)
            try:
                coefficient = field_.from_fraction(numerator, denominator)
            except DhGroebnerError as e:
                self._fail(str(e), token[2] + 1)
            if self._is_op('*'):
                self._next()

        monomial = list(ctx.one())
        factors = 0
        while True:
            token = self._peek()
            if token is None or token[0] != 'name':
                break
            self._next()
            name = token[1]
            if name not in ctx.variables:
                self._fail(f"unknown variable {name}", token[2] + 1)
            exponent = 1
            if self._is_op('^'):
                caret = self._next()
                nxt = self._peek()
                if nxt is None or nxt[0] != 'number' or int(nxt[1]) < 1:
                    self._fail("malformed exponent", caret[2] + 2)
                exponent = int(self._next()[1])
            index = ctx.index(name)
            if ctx.is_commutative:
                monomial[index] += exponent
            else:
                monomial.extend([index] * exponent)
            factors += 1
            if self._is_op('*'):
                star = self._next()
                if self._peek() is None or self._peek()[0] != 'name':
                    self._fail("expected a variable after '*'", star[2] + 2)

        if not has_coefficient and not factors:
            self._fail(f"unexpected {token[1]!r}" if token else "expected a term",
                       token[2] + 1 if token else 1)
        return Polynomial(ctx, {tuple(monomial): coefficient})


def parse_polynomial(text: str, ctx: RingContext, line: int = 1, offset: int = 0) -> Polynomial:
    return _ExpressionParser(text, ctx, line, offset).parse()


def _default_field() -> ScalarField:
    declared = settings.engine.default_field.split()
    if declared[0] == 'GF':
        return ScalarField.prime(int(declared[1]))
    return ScalarField.rationals()


def parse_session(text: str) -> Session:
    field_: Optional[ScalarField] = None
    variables: Optional[List[str]] = None
    noncommutative = False
    weights: Tuple[int, ...] = ()
    precedence: Optional[List[str]] = None
    homvar: Optional[str] = None
    pending_polys: List[Tuple[int, str, str, int]] = []
    command: Optional[List[str]] = None
    # keyword -> line of its declaration
    declared: Dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = stripped.partition(' ')
        rest = rest.strip()
        words = rest.split()

        def fail(message: str, column: Optional[int] = None):
            raise SessionParseError(message, number, column)

        if keyword in ('vars', 'ncvars', 'weights', 'order', 'homvar'):
            declared['vars' if keyword == 'ncvars' else keyword] = number

        if keyword == 'field':
            if field_ is not None:
                fail("field declared twice")
            if words == ['Q']:
                field_ = ScalarField.rationals()
            elif len(words) == 2 and words[0] == 'GF' and words[1].isdigit():
                try:
                    field_ = ScalarField.prime(int(words[1]))
                except DhGroebnerError as e:
                    fail(f"{e}", line.index(words[1]) + 1)
            else:
                fail(f"expected 'field Q' or 'field GF <p>', got {rest!r}")
        elif keyword in ('vars', 'ncvars'):
            if variables is not None:
                fail("variables declared twice")
            if not words:
                fail(f"{keyword} needs at least one name")
            variables = words
            noncommutative = keyword == 'ncvars'
        elif keyword == 'weights':
            if not all(w.isdigit() for w in words):
                fail("weights must be positive integers")
            weights = tuple(int(w) for w in words)
        elif keyword == 'order':
            if not words or words[0] != 'deglex':
                fail("only 'order deglex <names>' is supported")
            precedence = words[1:]
        elif keyword == 'homvar':
            if len(words) != 1:
                fail("homvar takes one name")
            homvar = words[0]
        elif keyword == 'poly':
            name, eq, expr = rest.partition('=')
            name = name.strip()
            if not eq or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
                fail("expected 'poly <name> = <expr>'")
            if any(p[1] == name for p in pending_polys):
                fail(f"duplicate polynomial name {name}")
            pending_polys.append((number, name, expr, line.index('=') + 1))
        elif keyword == 'command':
            if not words:
                fail("command needs a name")
            command = words
        else:
            fail(f"unknown keyword {keyword!r}", indent + 1)

    if variables is None:
        raise SessionParseError("no 'vars' or 'ncvars' declaration", 1)
    kind = 'noncommutative' if noncommutative else 'commutative'
    field_ = field_ or _default_field()
    try:
        ctx = RingContext(kind, tuple(variables), (), field_)
    except DhGroebnerError as e:
        raise SessionParseError(str(e), declared['vars']) from None
    if weights:
        try:
            ctx = RingContext(kind, tuple(variables), weights, field_)
        except DhGroebnerError as e:
            raise SessionParseError(str(e), declared['weights']) from None
    if homvar is not None:
        try:
            ctx = ctx.with_homog_var(homvar)
        except DhGroebnerError as e:
            raise SessionParseError(str(e), declared['homvar']) from None

    if precedence is None:
        precedence = list(variables)
    if sorted(precedence) != sorted(variables):
        raise SessionParseError(f"order must list every variable once: {precedence}", declared['order'])

    reordered = False
    if homvar is None:
        ordering = OrderingSpec.deglex(ctx, precedence)
    elif not noncommutative:
        if variables[-1] != homvar:
            raise SessionParseError(f"homvar {homvar} must be the last declared variable", declared['homvar'])
        ordering = OrderingSpec.deglex(ctx, precedence, Extension.CENTRAL_T)
    else:
        if precedence[0] != homvar:
            precedence = [homvar] + [v for v in precedence if v != homvar]
            reordered = True
        ordering = OrderingSpec.deglex(ctx, precedence, Extension.NONCENTRAL_T)

    session = Session(ctx, ordering, tuple(precedence), command=command, reordered=reordered)
    for number, name, expr, offset in pending_polys:
        try:
            session.polynomials[name] = parse_polynomial(expr, ctx, number, offset)
        except SessionParseError:
            raise
        except DhGroebnerError as e:
            raise SessionParseError(str(e), number) from None
    return session
