"""Irreducible characters of S_k and the dimension formulas built on hooks and contents."""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

from sympy import QQ

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, check_capacity
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Partition
from app.models.polynomials import D_POLY, D_RING
from app.services.combinatorics import class_size, conjugacy_classes, hooks_and_contents, partitions_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterTable:
    k: int
    partitions: tuple[Partition, ...]
    table: Mapping[tuple[Partition, Partition], int]

    def __call__(self, shape: Partition, mu: Partition) -> int:
        return self.table[(shape, mu)]

    def row(self, shape: Partition) -> dict[Partition, int]:
        return {mu: self.table[(shape, mu)] for mu in self.partitions}


def character(shape: Partition, mu: Partition) -> int:
    """χ_λ(μ) by the Murnaghan–Nakayama rule, stripping the largest part of μ first."""
    if shape.size != mu.size:
        raise DegreeMismatchError(f"χ_{shape} cannot be evaluated on class {mu}: sizes differ")
    return _murnaghan_nakayama(shape.parts, mu.parts)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    strip, rest = cycles[0], cycles[1:]
    n = len(shape)
    # beta-set (first-column hook lengths); a rim hook of length r is a bead moving down r places
    beads = [part + n - 1 - i for i, part in enumerate(shape)]
    occupied = set(beads)
    total = 0
    for bead in beads:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        between = sum(1 for b in beads if target < b < bead)
        moved = sorted((target if b == bead else b for b in beads), reverse=True)
        smaller = tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(moved)) if p > 0)
        total += (-1) ** between * _murnaghan_nakayama(smaller, rest)
    return total


def character_table(k: int) -> CharacterTable:
    check_capacity("k", k, settings.MAX_PARTITION_DEGREE)
    return _character_table(k)


@lru_cache(maxsize=None)
def _character_table(k: int) -> CharacterTable:
    partitions = tuple(partitions_of(k))
    table = {(shape, mu): _murnaghan_nakayama(shape.parts, mu.parts) for shape in partitions for mu in partitions}
    logger.info(f"Computed character table of S_{k} ({len(partitions)} classes)")
    return CharacterTable(k=k, partitions=partitions, table=table)


def dim_irrep(shape: Partition) -> int:
    """χ_λ(1) = k!/Π h_u."""
    return math.factorial(shape.size) // math.prod(box.hook for box in hooks_and_contents(shape))


def schur_dim(shape: Partition, d: int):
    """s_λ(d) = Π (d + c_u)/h_u, the dimension of the GL(d)-module of shape λ."""
    boxes = hooks_and_contents(shape)
    return QQ(math.prod(d + box.content for box in boxes), math.prod(box.hook for box in boxes))


def r_lambda(shape: Partition, d: Optional[int] = None):
    """Π_u (d + c_u); a polynomial in d when d is None."""
    if d is None:
        out = D_RING.one
        for box in hooks_and_contents(shape):
            out *= D_POLY + box.content
        return out
    return math.prod(d + box.content for box in hooks_and_contents(shape))


def central_idempotent(shape: Partition) -> GroupAlgebraElement:
    """e_λ = (χ_λ(1)/k!) Σ_σ χ_λ(σ) σ."""
    k = shape.size
    check_capacity("k", k, settings.MAX_GROUP_DEGREE)
    scale = QQ(dim_irrep(shape), math.factorial(k))
    terms = {}
    for mu, members in conjugacy_classes(k).items():
        value = character(shape, mu)
        if value:
            for perm in members:
                terms[perm] = scale * value
    return GroupAlgebraElement(k, terms)


def content_sum(shape: Partition) -> int:
    return sum(box.content for box in hooks_and_contents(shape))


def transposition_scalar(shape: Partition):
    """Scalar by which the class sum of transpositions acts on M_λ."""
    k = shape.size
    if k < 2:
        return QQ(0)
    transpositions = Partition.of([2] + [1] * (k - 2))
    return QQ(class_size(transpositions) * character(shape, transpositions), dim_irrep(shape))


def orthogonality_violations(k: int) -> list[tuple[Partition, Partition]]:
    """Pairs (λ, ν) with (1/k!) Σ_μ |C_μ| χ_λ(μ) χ_ν(μ) ≠ δ_λν."""
    table = character_table(k)
    sizes = {mu: class_size(mu) for mu in table.partitions}
    violations = []
    for index, shape in enumerate(table.partitions):
        for other in table.partitions[index:]:
            inner = QQ(sum(sizes[mu] * table(shape, mu) * table(other, mu) for mu in table.partitions), math.factorial(k))
            if inner != (1 if shape == other else 0):
                violations.append((shape, other))
    return violations
