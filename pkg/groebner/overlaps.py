"""Ambiguities between two leading words.

An Overlap records one word that can be read in two ways,
``word = first_left * u * first_right = second_left * v * second_right``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List

from algebra_core.monomials import Word, subword_positions


class OverlapKind(str, Enum):
    OVERLAP = "overlap"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Overlap:
    word: Word
    first_left: Word
    first_right: Word
    second_left: Word
    second_right: Word
    kind: OverlapKind = OverlapKind.OVERLAP

    def placements(self) -> frozenset:
        return frozenset({(self.first_left, self.first_right), (self.second_left, self.second_right)})


def overlaps(u: Word, v: Word, include_identical: bool = False) -> List[Overlap]:
    """Suffix/prefix overlaps of u and v in both orders, and containments of one in the other.

    ``include_identical`` keeps the full containment of equal words, which is
    only an ambiguity when u and v belong to different basis elements.
    """
    u, v = tuple(u), tuple(v)
    found: List[Overlap] = []
    empty: Word = ()

    # suffix of u = prefix of v
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            found.append(Overlap(u + v[k:], empty, v[k:], u[:-k], empty))
    # suffix of v = prefix of u
    for k in range(1, min(len(u), len(v))):
        if v[-k:] == u[:k]:
            found.append(Overlap(v + u[k:], v[:-k], empty, empty, u[k:]))

    if len(v) < len(u) or (include_identical and u == v):
        for p in subword_positions(v, u):
            found.append(Overlap(u, empty, empty, u[:p], u[p + len(v):], OverlapKind.INCLUSION))
    elif len(u) < len(v):
        for p in subword_positions(u, v):
            found.append(Overlap(v, v[:p], v[p + len(u):], empty, empty, OverlapKind.INCLUSION))

    unique: List[Overlap] = []
    seen = set()
    for o in found:
        # a self-overlap read from either side is the same ambiguity
        signature = (o.word, o.placements()) if u == v else (o.word, o.first_left, o.second_left)
        if signature not in seen:
            seen.add(signature)
            unique.append(o)
    return unique
