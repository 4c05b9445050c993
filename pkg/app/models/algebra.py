"""Sparse elements of the group algebra Q[S_k] and of its center."""
import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping

from app.core.exceptions import DegreeMismatchError, InvalidInputError
from app.models.combinatorics import Partition, Permutation


class ProductMode(str, enum.Enum):
    ORDINARY = "ordinary"
    # q = 0 specialization: σ̃₁σ̃₂ = (σ₁σ₂)~ if lengths add, 0 otherwise
    DEGENERATE = "degenerate"


def _accumulate(pairs: Iterable[tuple[Any, Any]]) -> dict:
    out: dict = {}
    for key, coeff in pairs:
        out[key] = out.get(key, 0) + coeff
    return out


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Σ_σ a_σ σ with no stored zero coefficients, iterated in one-line lexicographic order.

    Coefficients are exact: ints, ``QQ`` elements, or polynomials / rational
    functions in d.
    """

    k: int
    terms: Mapping[Permutation, Any]

    def __post_init__(self):
        for perm in self.terms:
            if perm.degree != self.k:
                raise DegreeMismatchError(f"{perm} is not an element of S_{self.k}")
        cleaned = {perm: self.terms[perm] for perm in sorted(self.terms) if self.terms[perm]}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, k: int) -> "GroupAlgebraElement":
        return cls(k, {})

    @classmethod
    def identity(cls, k: int, coeff: Any = 1) -> "GroupAlgebraElement":
        return cls(k, {Permutation.identity(k): coeff})

    @classmethod
    def of(cls, perm: Permutation, coeff: Any = 1) -> "GroupAlgebraElement":
        return cls(perm.degree, {perm: coeff})

    @classmethod
    def from_pairs(cls, k: int, pairs: Iterable[tuple[Permutation, Any]]) -> "GroupAlgebraElement":
        return cls(k, _accumulate(pairs))

    def coefficient(self, perm: Permutation) -> Any:
        return self.terms.get(perm, 0)

    def support(self) -> list[Permutation]:
        return list(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "GroupAlgebraElement") -> None:
        if not isinstance(other, GroupAlgebraElement):
            raise InvalidInputError(f"Expected a group algebra element, got {type(other).__name__}")
        if other.k != self.k:
            raise DegreeMismatchError(f"Cannot combine elements of Q[S_{self.k}] and Q[S_{other.k}]")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement.from_pairs(self.k, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "GroupAlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, factor: Any) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.k, {perm: factor * c for perm, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.k, {perm: fn(c) for perm, c in self.terms.items()})

    def multiply(self, other: "GroupAlgebraElement", mode: ProductMode = ProductMode.ORDINARY) -> "GroupAlgebraElement":
        self._check(other)
        degenerate = ProductMode(mode) is ProductMode.DEGENERATE
        out: dict = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                prod = left * right
                if degenerate and prod.length != left.length + right.length:
                    continue
                out[prod] = out.get(prod, 0) + a * b
        return GroupAlgebraElement(self.k, out)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def transpose(self) -> "GroupAlgebraElement":
        """The involution a* : σ ↦ σ⁻¹ extended linearly."""
        return GroupAlgebraElement(self.k, {perm.inverse: c for perm, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{perm.cycle_notation()}" for perm, c in self.terms.items())


@dataclass(frozen=True)
class ClassFunction:
    """Element of the center in the class-sum basis: Σ_μ f(μ) C_μ.

    Values are iterated in reverse-lexicographic order of μ, (k) first.
    """

    k: int
    values: Mapping[Partition, Any]

    def __post_init__(self):
        for mu in self.values:
            if mu.size != self.k:
                raise DegreeMismatchError(f"{mu} is not a partition of {self.k}")
        cleaned = {mu: self.values[mu] for mu in sorted(self.values, key=lambda p: p.parts, reverse=True) if self.values[mu]}
        object.__setattr__(self, "values", cleaned)

    def value(self, mu: Partition) -> Any:
        return self.values.get(mu, 0)

    def __getitem__(self, mu: Partition) -> Any:
        return self.value(mu)

    def _check(self, other: "ClassFunction") -> None:
        if other.k != self.k:
            raise DegreeMismatchError(f"Cannot combine class functions of S_{self.k} and S_{other.k}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.k, _accumulate([*self.values.items(), *other.values.items()]))

    def __neg__(self) -> "ClassFunction":
        return self.scale(-1)

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + (-other)

    def scale(self, factor: Any) -> "ClassFunction":
        return ClassFunction(self.k, {mu: factor * v for mu, v in self.values.items()})

    def map_values(self, fn: Callable[[Any], Any]) -> "ClassFunction":
        return ClassFunction(self.k, {mu: fn(v) for mu, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values
