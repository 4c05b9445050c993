import itertools
import logging
import math
from functools import lru_cache

from app.core.config import settings
from app.core.exceptions import InvalidInputError, NonCentralError, check_capacity
from app.models.algebra import ClassFunction, GroupAlgebraElement, ProductMode
from app.models.combinatorics import BoxStats, Partition, Permutation

logger = logging.getLogger(__name__)


def partitions_of(k: int) -> list[Partition]:
    """All partitions of k in reverse-lexicographic order, (k) first and (1^k) last."""
    if k < 0:
        raise InvalidInputError(f"Cannot partition a negative integer: {k}")
    check_capacity("k", k, settings.MAX_PARTITION_DEGREE)
    return list(_partitions(k))


@lru_cache(maxsize=None)
def _partitions(k: int) -> tuple[Partition, ...]:
    def descend(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in descend(k, k))


def display_order(partitions) -> list[Partition]:
    """Display order of the published d!²·Wg tables: increasing parts, lexicographic."""
    return sorted(partitions, key=lambda p: p.increasing_key)


def hooks_and_contents(shape: Partition) -> list[BoxStats]:
    conjugate = shape.conjugate.parts
    return [
        BoxStats(row=i, col=j, hook=shape.parts[i - 1] + conjugate[j - 1] - i - j + 1, content=j - i)
        for i, j in shape.boxes()
    ]


def centralizer_order(mu: Partition) -> int:
    """z_μ = Π_m m^{a_m} a_m!."""
    return math.prod(m ** a * math.factorial(a) for m, a in mu.multiplicities().items())


def class_size(mu: Partition) -> int:
    return math.factorial(mu.size) // centralizer_order(mu)


def class_representative(mu: Partition) -> Permutation:
    """The permutation (1 … μ₁)(μ₁+1 … μ₁+μ₂)… of cycle type μ."""
    cycles = []
    start = 1
    for part in mu.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, mu.size)


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement, mode: ProductMode = ProductMode.ORDINARY) -> GroupAlgebraElement:
    return a.multiply(b, mode)


def all_permutations(k: int) -> tuple[Permutation, ...]:
    check_capacity("k", k, settings.MAX_GROUP_DEGREE)
    return _all_permutations(k)


@lru_cache(maxsize=None)
def _all_permutations(k: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(images) for images in itertools.permutations(range(k)))


def conjugacy_classes(k: int) -> dict[Partition, tuple[Permutation, ...]]:
    check_capacity("k", k, settings.MAX_GROUP_DEGREE)
    return _conjugacy_classes(k)


@lru_cache(maxsize=None)
def _conjugacy_classes(k: int) -> dict[Partition, tuple[Permutation, ...]]:
    classes: dict[Partition, list[Permutation]] = {mu: [] for mu in partitions_of(k)}
    for perm in _all_permutations(k):
        classes[perm.cycle_type].append(perm)
    logger.debug(f"Enumerated {len(classes)} conjugacy classes of S_{k}")
    return {mu: tuple(members) for mu, members in classes.items()}


def class_expand(f: ClassFunction) -> GroupAlgebraElement:
    classes = conjugacy_classes(f.k)
    return GroupAlgebraElement(f.k, {perm: value for mu, value in f.values.items() for perm in classes[mu]})


def class_collect(a: GroupAlgebraElement) -> ClassFunction:
    """Inverse of class_expand; raises NonCentralError naming a witness pair."""
    values = {}
    for mu, members in conjugacy_classes(a.k).items():
        first = members[0]
        value = a.coefficient(first)
        for perm in members[1:]:
            other = a.coefficient(perm)
            if other != value:
                raise NonCentralError((first, perm), (value, other))
        values[mu] = value
    return ClassFunction(a.k, values)


def class_sum(mu: Partition) -> GroupAlgebraElement:
    return class_expand(ClassFunction(mu.size, {mu: 1}))
