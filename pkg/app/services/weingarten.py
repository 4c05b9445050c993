"""The element P = Σ_ρ d^{c(ρ)}ρ of the center of Q[S_k] and its inverse, the Weingarten function.

Three routes compute Wg independently:

* ``wg_characters``: the character sum over λ ⊢ k (restricted to ht(λ) ≤ d for
  integer d), exact over ``QQ`` or over rational functions in d.
* ``wg_oracle_linear``: solves X·P = 1 in the center using class-multiplication
  counts obtained by enumerating S_k.
* ``wg_full_cycle``: the Catalan closed form on the class (k).

The Jucys–Murphy elements give a fourth, series-valued, description.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from app.core.config import settings
from app.core.exceptions import InvalidInputError, SingularSystemError, check_capacity
from app.models.algebra import ClassFunction, GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation, cycle_count_of, cycle_type_of
from app.models.polynomials import D, D_FIELD, D_POLY, D_RING, evaluate, laurent_expansion, lift, pole_orders
from app.services.characters import character_table, r_lambda
from app.services.combinatorics import (
    all_permutations,
    class_collect,
    class_expand,
    class_representative,
    display_order,
    partitions_of,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeingartenClassFunction(ClassFunction):
    """Wg(d, μ) for every μ ⊢ k; ``d`` is None for the symbolic function of d."""

    d: Optional[int] = None

    @property
    def symbolic(self) -> bool:
        return self.d is None

    @property
    def faithful(self) -> bool:
        """True when the values are the inverse of P in the whole center (d ≥ k)."""
        return self.d is None or self.d >= self.k

    def at(self, d: int) -> "WeingartenClassFunction":
        if not self.symbolic:
            raise InvalidInputError("Values are already numeric")
        return WeingartenClassFunction(self.k, {mu: evaluate(v, d) for mu, v in self.values.items()}, d)


@dataclass(frozen=True)
class JucysSeries:
    """orders[j] = h_j(J_2, …, J_k) in the class-sum basis."""

    k: int
    orders: tuple[ClassFunction, ...]


@dataclass(frozen=True)
class PoleProfile:
    k: int
    orders: dict[int, int]
    violations: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class ScaledTable:
    """d!²·Wg(d, μ) for k = d, in display order, over a common denominator."""

    d: int
    entries: list[tuple[Partition, Any]]
    denominator: int
    numerators: list[int]
    largest_denominator: int


@dataclass(frozen=True)
class ConjectureRow:
    d: int
    strictly_decreasing: bool
    denominators_divide: bool
    largest_denominator: int
    counterexamples: list[str]


@dataclass(frozen=True)
class ConjectureReport:
    d_max: int
    rows: list[ConjectureRow]

    @property
    def passed(self) -> bool:
        return all(row.strictly_decreasing and row.denominators_divide for row in self.rows)


def p_element(k: int, d: Optional[int] = None) -> ClassFunction:
    """P = Σ_μ d^{ht(μ)} C_μ."""
    base = D if d is None else d
    return ClassFunction(k, {mu: base ** mu.height for mu in partitions_of(k)})


def wg_characters(k: int, d: Optional[int] = None) -> WeingartenClassFunction:
    """Wg(d, σ) = Σ_λ χ_λ(1) χ_λ(σ) / (k! r_λ(d)), λ restricted to ht(λ) ≤ d for integer d."""
    if d is not None and d < 1:
        raise InvalidInputError(f"Dimension must be positive, got d={d}")
    return _wg_characters(k, d)


@lru_cache(maxsize=None)
def _wg_characters(k: int, d: Optional[int]) -> WeingartenClassFunction:
    table = character_table(k)
    k_factorial = math.factorial(k)
    identity_class = Partition((1,) * k)
    shapes = [shape for shape in table.partitions if d is None or shape.height <= d]
    scales = {shape: r_lambda(shape, d) for shape in shapes}
    values = {}
    for mu in table.partitions:
        total = lift(0, d)
        for shape in shapes:
            numerator = table(shape, identity_class) * table(shape, mu)
            if not numerator:
                continue
            if d is None:
                total += lift(QQ(numerator, k_factorial), d) / D_FIELD(scales[shape])
            else:
                total += QQ(numerator, k_factorial * scales[shape])
        values[mu] = total
    if d is not None and d < k:
        logger.warning(f"Wg for k={k}, d={d} is only defined modulo the kernel of Q[S_k] → End(V^⊗k)")
    return WeingartenClassFunction(k, values, d)


@lru_cache(maxsize=None)
def _cycle_histogram(k: int) -> dict[tuple[Partition, Partition], dict[int, int]]:
    """For each class γ (fixed representative σ_γ) and class α: counts of c(σ₁⁻¹σ_γ) over σ₁ ∈ C_α."""
    histogram: dict[tuple[Partition, Partition], dict[int, int]] = {}
    perms = all_permutations(k)
    inverse_images = [(p.inverse.images, cycle_type_of(p.images)) for p in perms]
    for gamma in partitions_of(k):
        rep = class_representative(gamma).images
        for inv, alpha in inverse_images:
            cycles = cycle_count_of(tuple(inv[x] for x in rep))
            bucket = histogram.setdefault((gamma, alpha), {})
            bucket[cycles] = bucket.get(cycles, 0) + 1
    logger.info(f"Tabulated class-multiplication cycle counts for S_{k}")
    return histogram


def wg_oracle_linear(k: int, d: int) -> WeingartenClassFunction:
    """Solve X·P = 1 in the center by linear algebra over QQ (requires d ≥ k)."""
    if d < k:
        raise InvalidInputError(f"The linear oracle needs d ≥ k, got k={k}, d={d}")
    check_capacity("k", k, settings.MAX_GROUP_DEGREE)
    classes = partitions_of(k)
    histogram = _cycle_histogram(k)
    # (X·P)[γ] = Σ_α x_α Σ_{σ₁∈C_α} d^{c(σ₁⁻¹σ_γ)}
    rows = [
        [QQ(sum(count * d ** c for c, count in histogram.get((gamma, alpha), {}).items())) for alpha in classes]
        for gamma in classes
    ]
    identity_class = Partition((1,) * k)
    rhs = [[QQ(1) if gamma == identity_class else QQ(0)] for gamma in classes]
    system = DomainMatrix(rows, (len(classes), len(classes)), QQ)
    try:
        solution = system.lu_solve(DomainMatrix(rhs, (len(classes), 1), QQ)).to_Matrix()
    except DMNonInvertibleMatrixError as e:
        raise SingularSystemError(f"Center system for k={k}, d={d} is singular: {e}")
    return WeingartenClassFunction(k, {mu: QQ.from_sympy(solution[i, 0]) for i, mu in enumerate(classes)}, d)


def catalan(i: int) -> int:
    return math.comb(2 * i, i) // (i + 1)


def wg_full_cycle(k: int):
    """(−1)^{k−1} Cat_{k−1} / Π_{j=−k+1}^{k−1} (d − j), a rational function of d."""
    denominator = D_RING.one
    for j in range(-k + 1, k):
        denominator *= D_POLY - j
    return D_FIELD((-1) ** (k - 1) * catalan(k - 1)) / D_FIELD(denominator)


def jucys_elements(k: int) -> list[GroupAlgebraElement]:
    """[J_2, …, J_k] with J_i = Σ_{j<i} (j, i)."""
    return [
        GroupAlgebraElement(k, {Permutation.transposition(j, i, k): 1 for j in range(1, i)})
        for i in range(2, k + 1)
    ]


def jucys_product(k: int, d: Optional[int] = None) -> GroupAlgebraElement:
    """d·Π_{i=2}^k (d + J_i), with polynomial coefficients when d is None."""
    base = D_POLY if d is None else d
    identity = GroupAlgebraElement.identity(k)
    product = identity.scale(base)
    for jucys in jucys_elements(k):
        product = product * (identity.scale(base) + jucys)
    return product


def jucys_factorization_check(k: int, d: Optional[int] = None) -> bool:
    base = D_POLY if d is None else d
    expected = GroupAlgebraElement(k, {perm: base ** perm.cycle_count for perm in all_permutations(k)})
    return jucys_product(k, d) == expected


def elementary_jucys(k: int) -> list[GroupAlgebraElement]:
    """[e_0, …, e_{k−1}] of J_2, …, J_k via e_j(…, J_i) = e_j(…) + J_i e_{j−1}(…)."""
    zero = GroupAlgebraElement.zero(k)
    values = [GroupAlgebraElement.identity(k)] + [zero] * (k - 1)
    for jucys in jucys_elements(k):
        values = [values[0]] + [values[j] + jucys * values[j - 1] for j in range(1, k)]
    return values


def jucys_elementary_check(k: int) -> bool:
    """e_i(J_2, …, J_k) = Σ_{|μ|=i} C_μ for every i."""
    for i, element in enumerate(elementary_jucys(k)):
        expected = ClassFunction(k, {mu: 1 for mu in partitions_of(k) if mu.transposition_length == i})
        if element != class_expand(expected):
            return False
    return True


def complete_jucys(k: int, max_order: int) -> list[GroupAlgebraElement]:
    """[h_0, …, h_max_order] of J_2, …, J_k via h_j(…, J_i) = h_j(…) + J_i h_{j−1}(…, J_i)."""
    zero = GroupAlgebraElement.zero(k)
    values = [GroupAlgebraElement.identity(k)] + [zero] * max_order
    for jucys in jucys_elements(k):
        updated = [values[0]]
        for j in range(1, max_order + 1):
            updated.append(values[j] + jucys * updated[j - 1])
        values = updated
    return values


def jucys_series(k: int, max_order: Optional[int] = None) -> JucysSeries:
    """h_j(J_2, …, J_k) for j ≤ max_order (default 2k); P⁻¹ = d^{−k} Σ_j (−1/d)^j h_j."""
    max_order = 2 * k if max_order is None else max_order
    if max_order < 0:
        raise InvalidInputError(f"max_order must be non-negative, got {max_order}")
    return JucysSeries(k, tuple(class_collect(h) for h in complete_jucys(k, max_order)))


def jucys_series_matches(k: int, max_order: Optional[int] = None) -> bool:
    """Compare the truncated series with the expansion of symbolic Wg at d = ∞."""
    series = jucys_series(k, max_order)
    wg = wg_characters(k)
    for mu in partitions_of(k):
        valuation, coefficients = laurent_expansion(wg.value(mu), k + len(series.orders))
        for j, order in enumerate(series.orders):
            index = k + j - valuation
            # the expansion starts at d^{-valuation}; higher powers vanish
            actual = coefficients[index] if 0 <= index < len(coefficients) else QQ.zero
            if actual != (-1) ** j * order.value(mu):
                return False
    return True


def novak_sign_check(k: int, d: int) -> list[Partition]:
    """Classes whose Weingarten value does not carry the sign (−1)^{|μ|}."""
    if d < k:
        raise InvalidInputError(f"The sign rule needs d ≥ k, got k={k}, d={d}")
    wg = wg_characters(k, d)
    violations = [mu for mu in partitions_of(k) if (wg.value(mu) > 0) != (mu.sign > 0) or wg.value(mu) == 0]
    if violations:
        logger.warning(f"Sign rule fails for k={k}, d={d} at {[str(mu) for mu in violations]}")
    return violations


def wg_inequality_check(k: int, d: int, a: GroupAlgebraElement):
    """Σ_σ b_σ Wg(d, σ) for b = a·a*; positive for every a ≠ 0 when d ≥ k."""
    if a.k != k:
        raise InvalidInputError(f"Element lives in Q[S_{a.k}], expected Q[S_{k}]")
    if a.is_zero():
        raise InvalidInputError("The inequality needs a non-zero element")
    if d < k:
        raise InvalidInputError(f"The inequality needs d ≥ k, got k={k}, d={d}")
    wg = wg_characters(k, d)
    b = a * a.transpose()
    return sum((c * wg.value(perm.cycle_type) for perm, c in b.terms.items()), QQ(0))


def wg_dominance_violations(k: int, d: int) -> list[Partition]:
    """Classes μ ≠ 1^k with |Wg(d, μ)| ≥ Wg(d, 1^k)."""
    wg = wg_characters(k, d)
    top = wg.value(Partition((1,) * k))
    return [mu for mu in partitions_of(k) if mu.height < k and abs(wg.value(mu)) >= top]


def pole_profile(k: int) -> PoleProfile:
    """Largest pole order of symbolic Wg at each integer i, with the check p(p + |i|) ≤ k."""
    wg = wg_characters(k)
    points = range(-k + 1, k)
    orders = {i: 0 for i in points}
    for value in wg.values.values():
        for i, order in pole_orders(value, points).items():
            orders[i] = max(orders[i], order)
    violations = [i for i, p in orders.items() if p * (p + abs(i)) > k]
    return PoleProfile(k, orders, violations)


def scaled_table(d: int) -> ScaledTable:
    wg = wg_characters(d, d)
    scale = math.factorial(d) ** 2
    entries = [(mu, wg.value(mu) * scale) for mu in display_order(partitions_of(d))]
    denominators = [int(value.denominator) for _, value in entries]
    common = math.lcm(*denominators)
    numerators = [int(value.numerator) * (common // int(value.denominator)) for _, value in entries]
    return ScaledTable(d, entries, common, numerators, max(denominators))


def conjecture_scan(d_max: Optional[int] = None) -> ConjectureReport:
    """For d = 2..d_max: |d!²·Wg(d, μ)| strictly decreases in display order, and the
    largest denominator is a multiple of every denominator."""
    d_max = settings.CONJECTURE_D_MAX if d_max is None else d_max
    rows = []
    for d in range(2, d_max + 1):
        table = scaled_table(d)
        counterexamples = [
            f"|{mu.class_label()}| <= |{nu.class_label()}|"
            for (mu, value), (nu, following) in zip(table.entries, table.entries[1:])
            if abs(value) <= abs(following)
        ]
        strictly_decreasing = not counterexamples
        denominators_divide = all(table.largest_denominator % int(v.denominator) == 0 for _, v in table.entries)
        if not denominators_divide:
            counterexamples.append(f"denominators do not all divide {table.largest_denominator}")
        rows.append(ConjectureRow(d, strictly_decreasing, denominators_divide, table.largest_denominator, counterexamples))
        logger.info(f"Scanned d={d}: {len(counterexamples)} counterexamples")
    return ConjectureReport(d_max, rows)
