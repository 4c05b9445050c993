"""Connection coefficients A[μ; μ₁, …, μ_i] of the class algebra and the 1/d expansion of Wg.

C_{μ₁} C_{μ₂} = Σ_μ A[μ; μ₁, μ₂] C_μ. The fast route uses the Frobenius
character formula; ``brute_force_class_product`` fixes a representative σ of
each class μ and counts factorizations σ = σ₁σ₂ directly.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.utilities.iterables import multiset_partitions

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, InvalidInputError, check_capacity
from app.models.algebra import ClassFunction, GroupAlgebraElement, ProductMode
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import laurent_coefficient
from app.services.characters import character_table
from app.services.combinatorics import (
    all_permutations,
    class_collect,
    class_representative,
    class_size,
    conjugacy_classes,
    partitions_of,
)
from app.services.weingarten import catalan, wg_characters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectionTable:
    k: int
    constants: Mapping[tuple[Partition, Partition, Partition], int]

    def __call__(self, mu: Partition, mu1: Partition, mu2: Partition) -> int:
        return self.constants.get((mu, mu1, mu2), 0)


@dataclass(frozen=True)
class TopCoefficients:
    """C[μ] for μ ⊢ k, with C[1^k] = 1 standing for the constant term."""

    k: int
    values: Mapping[Partition, int]

    def __getitem__(self, mu: Partition) -> int:
        return self.values[mu]


@dataclass(frozen=True)
class MultiplicativityReport:
    k: int
    coefficients: TopCoefficients
    catalan_mismatches: list[str] = field(default_factory=list)
    limit_mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.catalan_mismatches and not self.limit_mismatches


def _same_degree(*partitions: Partition) -> int:
    sizes = {mu.size for mu in partitions}
    if len(sizes) != 1:
        raise DegreeMismatchError(f"Classes {[str(mu) for mu in partitions]} belong to different S_k")
    return sizes.pop()


def connection_table(k: int) -> ConnectionTable:
    check_capacity("k", k, settings.MAX_PARTITION_DEGREE)
    return _connection_table(k)


@lru_cache(maxsize=None)
def _connection_table(k: int) -> ConnectionTable:
    table = character_table(k)
    classes = table.partitions
    identity_class = Partition((1,) * k)
    sizes = {mu: class_size(mu) for mu in classes}
    # Frobenius: A[μ; μ₁, μ₂] = |C₁||C₂|/k! Σ_λ χ_λ(μ₁)χ_λ(μ₂)χ_λ(μ)/χ_λ(1)
    weights = {shape: QQ(1, table(shape, identity_class)) for shape in classes}
    constants = {}
    for index, mu1 in enumerate(classes):
        for mu2 in classes[index:]:
            pair = {
                shape: weights[shape] * table(shape, mu1) * table(shape, mu2)
                for shape in classes
                if table(shape, mu1) and table(shape, mu2)
            }
            scale = QQ(sizes[mu1] * sizes[mu2], math.factorial(k))
            for mu in classes:
                total = sum((w * table(shape, mu) for shape, w in pair.items()), QQ(0)) * scale
                if total:
                    if total.denominator != 1:
                        raise ArithmeticError(f"Non-integral structure constant A[{mu}; {mu1}, {mu2}] = {total}")
                    constants[(mu, mu1, mu2)] = int(total)
                    constants[(mu, mu2, mu1)] = int(total)
    logger.info(f"Computed connection coefficients of S_{k} ({len(constants)} non-zero)")
    return ConnectionTable(k, constants)


def class_product(mu1: Partition, mu2: Partition) -> ClassFunction:
    k = _same_degree(mu1, mu2)
    table = connection_table(k)
    return ClassFunction(k, {mu: table(mu, mu1, mu2) for mu in partitions_of(k)})


def class_product_many(classes: Sequence[Partition]) -> ClassFunction:
    """A[μ; μ₁, …, μ_i] as the class function C_{μ₁}⋯C_{μ_i}."""
    if not classes:
        raise InvalidInputError("At least one class is required")
    k = _same_degree(*classes)
    result = ClassFunction(k, {classes[0]: 1})
    for mu in classes[1:]:
        result = multiply_class_functions(result, ClassFunction(k, {mu: 1}))
    return result


def brute_force_class_product(mu1: Partition, mu2: Partition) -> ClassFunction:
    """Count σ₁ ∈ C_{μ₁} with σ₁⁻¹σ ∈ C_{μ₂} for a fixed σ of each type."""
    k = _same_degree(mu1, mu2)
    check_capacity("k", k, settings.MAX_BRUTE_FORCE_DEGREE)
    members = conjugacy_classes(k)[mu1]
    values = {}
    for mu in partitions_of(k):
        sigma = class_representative(mu)
        values[mu] = sum(1 for first in members if (first.inverse * sigma).cycle_type == mu2)
    return ClassFunction(k, values)


def multiply_class_functions(f: ClassFunction, g: ClassFunction, mode: ProductMode = ProductMode.ORDINARY) -> ClassFunction:
    """Product in the center; the degenerate mode keeps only classes with |μ| = |μ₁| + |μ₂|."""
    if f.k != g.k:
        raise DegreeMismatchError(f"Cannot multiply class functions of S_{f.k} and S_{g.k}")
    degenerate = ProductMode(mode) is ProductMode.DEGENERATE
    table = connection_table(f.k)
    out: dict = defaultdict(int)
    for mu1, a in f.values.items():
        for mu2, b in g.values.items():
            for mu in partitions_of(f.k):
                if degenerate and mu.transposition_length != mu1.transposition_length + mu2.transposition_length:
                    continue
                count = table(mu, mu1, mu2)
                if count:
                    out[mu] += count * a * b
    return ClassFunction(f.k, dict(out))


def collins_expansion(k: int, h_max: int) -> dict[tuple[Partition, int], int]:
    """A[μ, h]: coefficient of d^{−k−h} C_μ in P⁻¹ = d^{−k}(1 + Σ_{μ≠1^k} d^{−|μ|} C_μ)^{−1}."""
    if h_max < k - 1:
        raise InvalidInputError(f"h_max must be at least k−1={k - 1}, got {h_max}")
    identity_class = Partition((1,) * k)
    step: dict[int, list[Partition]] = defaultdict(list)
    for mu in partitions_of(k):
        if mu != identity_class:
            step[mu.transposition_length].append(mu)
    # graded series: degree h -> class function
    term = {h: ClassFunction(k, {mu: 1 for mu in classes}) for h, classes in step.items()}
    total: dict[int, ClassFunction] = {0: ClassFunction(k, {identity_class: 1})}
    power = {0: ClassFunction(k, {identity_class: 1})}
    for i in range(1, h_max + 1):
        product: dict[int, ClassFunction] = {}
        for h1, f in power.items():
            for h2, g in term.items():
                if h1 + h2 > h_max:
                    continue
                contribution = multiply_class_functions(f, g)
                product[h1 + h2] = product[h1 + h2] + contribution if h1 + h2 in product else contribution
        power = product
        if not power:
            break
        for h, f in power.items():
            signed = f.scale((-1) ** i)
            total[h] = total[h] + signed if h in total else signed
    return {(mu, h): int(value) for h, f in sorted(total.items()) for mu, value in f.values.items()}


def top_coefficients(k: int) -> TopCoefficients:
    """C[μ] = A[μ, |μ|] from the geometric series Σ_{i<k} (−T̃)^i in the degenerate center."""
    identity_class = Partition((1,) * k)
    one = ClassFunction(k, {identity_class: 1})
    t = ClassFunction(k, {mu: 1 for mu in partitions_of(k) if mu != identity_class})
    total, power = one, one
    # the augmentation ideal is nilpotent: T̃^k = 0
    for i in range(1, k):
        power = multiply_class_functions(power, t, ProductMode.DEGENERATE)
        total = total + power.scale((-1) ** i)
    return TopCoefficients(k, {mu: int(total.value(mu)) for mu in partitions_of(k)})


def top_coefficients_by_sequences(k: int) -> TopCoefficients:
    """Σ_i (−1)^i Σ A[μ; μ₁, …, μ_i] over sequences of non-identity classes with Σ|μ_j| = |μ|."""
    identity_class = Partition((1,) * k)
    classes = [mu for mu in partitions_of(k) if mu != identity_class]
    values = {mu: 0 for mu in partitions_of(k)}
    values[identity_class] = 1

    def extend(product: ClassFunction, degree: int, count: int):
        for mu, value in product.values.items():
            if mu.transposition_length == degree:
                values[mu] += (-1) ** count * value
        for mu in classes:
            if degree + mu.transposition_length <= k - 1:
                extend(multiply_class_functions(product, ClassFunction(k, {mu: 1})), degree + mu.transposition_length, count + 1)

    for mu in classes:
        extend(ClassFunction(k, {mu: 1}), mu.transposition_length, 1)
    return TopCoefficients(k, {mu: int(v) for mu, v in values.items()})


def top_coefficients_by_elements(k: int) -> TopCoefficients:
    """Same series evaluated on full elements of Q[S̃_k] with the degenerate product."""
    check_capacity("k", k, settings.MAX_BRUTE_FORCE_DEGREE)
    one = GroupAlgebraElement.identity(k)
    t = GroupAlgebraElement(k, {perm: 1 for perm in all_permutations(k) if not perm.is_identity()})
    total, power = one, one
    for i in range(1, k):
        power = power.multiply(t, ProductMode.DEGENERATE)
        total = total + power.scale((-1) ** i)
    collected = class_collect(total)
    return TopCoefficients(k, {mu: int(collected.value(mu)) for mu in partitions_of(k)})


def catalan_factorization(mu: Partition) -> list[int]:
    """Per-cycle factors (−1)^{a−1} Cat_{a−1}; fixed points contribute 1."""
    return [(-1) ** (a - 1) * catalan(a - 1) for a in mu.parts]


def verify_collins_multiplicativity(k: int) -> MultiplicativityReport:
    check_capacity("k", k, settings.MAX_GROUP_DEGREE)
    coefficients = top_coefficients(k)
    wg = wg_characters(k)
    catalan_mismatches, limit_mismatches = [], []
    for mu in partitions_of(k):
        expected = math.prod(catalan_factorization(mu))
        if coefficients[mu] != expected:
            catalan_mismatches.append(f"C[{mu}] = {coefficients[mu]}, expected {expected}")
        limit = laurent_coefficient(wg.value(mu), -(k + mu.transposition_length))
        if limit != coefficients[mu]:
            limit_mismatches.append(f"lim d^{k + mu.transposition_length} Wg({mu}) = {limit}, expected {coefficients[mu]}")
    if catalan_mismatches or limit_mismatches:
        logger.warning(f"Top coefficients of S_{k}: {catalan_mismatches + limit_mismatches}")
    return MultiplicativityReport(k, coefficients, catalan_mismatches, limit_mismatches)


def cycle_blocks(sigma: Permutation) -> tuple[frozenset[int], ...]:
    """The set partition Π_σ of {0..k−1} into supports of the cycles of σ."""
    return tuple(frozenset(cycle) for cycle in sigma.cycles)


def in_young_subgroup(sigma: Permutation, blocks: Iterable[frozenset[int]]) -> bool:
    return all(sigma(x) in block for block in blocks for x in block)


def length_additive_factorizations(sigma: Permutation) -> list[tuple[Permutation, Permutation]]:
    """All σ = σ₁σ₂ with σ₁, σ₂ ≠ 1 and |σ| = |σ₁| + |σ₂|."""
    out = []
    for first in all_permutations(sigma.degree):
        if first.is_identity():
            continue
        second = first.inverse * sigma
        if not second.is_identity() and first.length + second.length == sigma.length:
            out.append((first, second))
    return out


def set_partitions(k: int) -> list[tuple[frozenset[int], ...]]:
    """Every set partition Π of {0..k−1}."""
    check_capacity("k", k, settings.MAX_BRUTE_FORCE_DEGREE)
    if k == 0:
        return [()]
    return [tuple(frozenset(block) for block in blocks) for blocks in multiset_partitions(list(range(k)))]


def young_subgroup(blocks: Sequence[frozenset[int]], k: int) -> list[Permutation]:
    """Y_Π: the permutations of S_k that map every block to itself."""
    return [sigma for sigma in all_permutations(k) if in_young_subgroup(sigma, blocks)]


def block_restriction(sigma: Permutation, block: frozenset[int]) -> Permutation:
    """σ on a block it stabilizes, relabeled onto 0..|B|−1 in increasing order."""
    ordered = sorted(block)
    index = {x: position for position, x in enumerate(ordered)}
    if any(sigma(x) not in index for x in ordered):
        raise InvalidInputError(f"{sigma.cycle_notation()} does not stabilize {sorted(x + 1 for x in block)}")
    return Permutation(tuple(index[sigma(x)] for x in ordered))


def _degenerate(left: Permutation, right: Permutation) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(left).multiply(GroupAlgebraElement.of(right), ProductMode.DEGENERATE)


def blockwise_violations(blocks: Sequence[frozenset[int]], k: int) -> list[str]:
    """For γ, τ ∈ Y_Π: |γτ| = |γ| + |τ| iff it holds on every block, and the degenerate product
    computed in Q[S_k] equals the tensor product of the blockwise degenerate products."""
    failures = []
    members = young_subgroup(blocks, k)
    restricted = {sigma: [block_restriction(sigma, block) for block in blocks] for sigma in members}
    for gamma in members:
        for tau in members:
            pieces = list(zip(restricted[gamma], restricted[tau]))
            additive = (gamma * tau).length == gamma.length + tau.length
            blockwise = all((g * t).length == g.length + t.length for g, t in pieces)
            if additive != blockwise:
                failures.append(f"{gamma.cycle_notation()}·{tau.cycle_notation()}: length additivity differs blockwise")
            product = _degenerate(gamma, tau)
            factors = [_degenerate(g, t) for g, t in pieces]
            if any(factor.is_zero() for factor in factors):
                split = product.is_zero()
            else:
                split = product.support() == [gamma * tau] and all(
                    factor.support() == [block_restriction(gamma * tau, block)] for factor, block in zip(factors, blocks)
                )
            if not split:
                failures.append(f"{gamma.cycle_notation()}·{tau.cycle_notation()}: degenerate product does not split over blocks")
    return failures
