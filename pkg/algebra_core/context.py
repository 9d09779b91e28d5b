from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from algebra_core.scalars import ScalarField
from utils.errors import ArgumentError, ContextMismatchError


class RingKind(str, Enum):
    COMMUTATIVE = "commutative"
    NONCOMMUTATIVE = "noncommutative"


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring K[x_1..x_n] or free algebra K<X_1..X_n> with a weight gradation"""

    kind: RingKind
    variables: Tuple[str, ...]
    weights: Tuple[int, ...] = ()
    field: ScalarField = ScalarField()
    homog_var: Optional[str] = None
    _index: Dict[str, int] = dc_field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        object.__setattr__(self, 'variables', variables)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'kind', RingKind(self.kind))

        if len(set(variables)) != len(variables):
            raise ArgumentError(f"Variable names must be unique: {variables}")
        if len(weights) != len(variables):
            raise ArgumentError(f"Expected {len(variables)} weights, got {len(weights)}")
        if any(w <= 0 for w in weights):
            raise ArgumentError(f"Weights must be strictly positive: {weights}")

        object.__setattr__(self, '_index', {name: i for i, name in enumerate(variables)})

        if self.homog_var is not None:
            if self.homog_var not in self._index:
                raise ArgumentError(f"Homogenization variable {self.homog_var} is not declared")
            if self.weight_of(self.homog_var) != 1:
                raise ArgumentError(f"Homogenization variable {self.homog_var} must have weight 1")

    @classmethod
    def commutative(cls, variables: Sequence[str], weights: Sequence[int] = (),
                    field: ScalarField = ScalarField(), homog_var: Optional[str] = None) -> "RingContext":
        return cls(RingKind.COMMUTATIVE, tuple(variables), tuple(weights), field, homog_var)

    @classmethod
    def free(cls, variables: Sequence[str], weights: Sequence[int] = (),
             field: ScalarField = ScalarField(), homog_var: Optional[str] = None) -> "RingContext":
        return cls(RingKind.NONCOMMUTATIVE, tuple(variables), tuple(weights), field, homog_var)

    @property
    def is_commutative(self) -> bool:
        return self.kind is RingKind.COMMUTATIVE

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def homog_index(self) -> Optional[int]:
        return None if self.homog_var is None else self._index[self.homog_var]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ArgumentError(f"Unknown variable: {name}") from None

    def weight_of(self, name: str) -> int:
        return self.weights[self.index(name)]

    def with_homog_var(self, name: Optional[str]) -> "RingContext":
        return RingContext(self.kind, self.variables, self.weights, self.field, name)

    def one(self):
        """The identity monomial"""
        return (0,) * self.nvars if self.is_commutative else ()

    def require_same(self, other: "RingContext"):
        if self != other:
            raise ContextMismatchError(f"Ring contexts differ: {self.describe()} vs {other.describe()}")

    def describe(self) -> str:
        left, right = ("[", "]") if self.is_commutative else ("<", ">")
        return f"{self.field.describe()}{left}{','.join(self.variables)}{right}"
