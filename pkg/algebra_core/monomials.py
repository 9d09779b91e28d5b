"""Monomials of K[x] (exponent vectors) and words of K<X> (letter-index tuples).

Both are plain tuples of ints; the RingContext decides how to read them. The
identity is the zero vector in the commutative case and the empty word otherwise.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from algebra_core.context import RingContext
from utils.errors import ContextMismatchError

Monomial = Tuple[int, ...]
Word = Tuple[int, ...]


@dataclass(frozen=True)
class DivisionWitness:
    """v = left * u * right. Commutative witnesses keep the quotient in ``left``."""

    left: tuple
    right: tuple
    position: int = 0


def check_monomial(m: tuple, ctx: RingContext):
    if ctx.is_commutative:
        if len(m) != ctx.nvars or any(e < 0 for e in m):
            raise ContextMismatchError(f"{m} is not an exponent vector of {ctx.describe()}")
    elif any(not 0 <= letter < ctx.nvars for letter in m):
        raise ContextMismatchError(f"{m} is not a word of {ctx.describe()}")


def degree(m: tuple, ctx: RingContext) -> int:
    weights = ctx.weights
    if ctx.is_commutative:
        return sum(e * w for e, w in zip(m, weights))
    return sum(weights[letter] for letter in m)


def multiply(u: tuple, v: tuple, ctx: RingContext) -> tuple:
    if ctx.is_commutative:
        return tuple(a + b for a, b in zip(u, v))
    return u + v


def multiply_sides(left: tuple, m: tuple, right: tuple, ctx: RingContext) -> tuple:
    if ctx.is_commutative:
        return tuple(a + b + c for a, b, c in zip(left, m, right))
    return left + m + right


def divide_monomial(u: tuple, v: tuple, ctx: RingContext) -> Optional[DivisionWitness]:
    """Witness that u divides v, or None. Words use the leftmost occurrence."""
    if ctx.is_commutative:
        if any(a > b for a, b in zip(u, v)):
            return None
        return DivisionWitness(tuple(b - a for a, b in zip(u, v)), ctx.one())

    position = find_subword(u, v)
    if position is None:
        return None
    return DivisionWitness(v[:position], v[position + len(u):], position)


def divides(u: tuple, v: tuple, ctx: RingContext) -> bool:
    if ctx.is_commutative:
        return all(a <= b for a, b in zip(u, v))
    return find_subword(u, v) is not None


def find_subword(u: Word, v: Word, start: int = 0) -> Optional[int]:
    n, m = len(u), len(v)
    for i in range(start, m - n + 1):
        if v[i:i + n] == u:
            return i
    return None


def subword_positions(u: Word, v: Word) -> Iterator[int]:
    n = len(u)
    for i in range(len(v) - n + 1):
        if v[i:i + n] == u:
            yield i


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def is_coprime(u: Monomial, v: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def monomials_of_degree(p: int, ctx: RingContext) -> List[tuple]:
    """Every monomial (or word) of weighted degree exactly p"""
    weights = ctx.weights
    n = ctx.nvars

    if ctx.is_commutative:
        result = []

        def fill(i: int, remaining: int, prefix: list):
            if i == n:
                if remaining == 0:
                    result.append(tuple(prefix))
                return
            for e in range(remaining // weights[i] + 1):
                prefix.append(e)
                fill(i + 1, remaining - e * weights[i], prefix)
                prefix.pop()

        fill(0, p, [])
        return result

    by_degree: List[List[Word]] = [[()]]
    for d in range(1, p + 1):
        words = []
        for letter in range(n):
            if weights[letter] <= d:
                words.extend(w + (letter,) for w in by_degree[d - weights[letter]])
        by_degree.append(words)
    return by_degree[p]
