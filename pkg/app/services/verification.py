"""Named acceptance checks, each runnable at three levels of effort.

Every check returns the list of failures it found; an empty list is a pass.
The registry order is the order reports list the checks in.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from sympy import QQ

from app.core.exceptions import UnknownCheckError
from app.models.algebra import ClassFunction, GroupAlgebraElement, ProductMode
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import laurent_coefficient
from app.models.tensors import MatrixTuple, MonomialSpec, TensorOperator
from app.schemas.schemas import CheckResult, Level
from app.services.characters import (
    central_idempotent,
    character_table,
    content_sum,
    dim_irrep,
    orthogonality_violations,
    r_lambda,
    schur_dim,
    transposition_scalar,
)
from app.services.combinatorics import all_permutations, class_sum, partitions_of
from app.services.connection import (
    blockwise_violations,
    brute_force_class_product,
    class_product,
    collins_expansion,
    cycle_blocks,
    in_young_subgroup,
    length_additive_factorizations,
    multiply_class_functions,
    set_partitions,
    top_coefficients_by_elements,
    top_coefficients_by_sequences,
    verify_collins_multiplicativity,
)
from app.services.haar import haar_mc_oracle
from app.services.integrals import (
    monomial_integral,
    monomial_integral_via_projection,
    multilinear_invariant,
    operator_of,
    trace_against,
    wg_via_monomial,
)
from app.services.tableaux import (
    commutant_dimension,
    content_product,
    content_vector,
    enumerate_syt,
    good_basis,
    is_d_good,
    longest_decreasing,
    rsk,
    rsk_inverse_permutation,
    straighten,
    tableau_from_contents,
)
from app.services.tensor_polynomials import determinant_constant, formanek_specializations, formanek_verify, verify_forgz
from app.services.weingarten import (
    conjecture_scan,
    jucys_elementary_check,
    jucys_factorization_check,
    jucys_series_matches,
    novak_sign_check,
    pole_profile,
    scaled_table,
    wg_characters,
    wg_dominance_violations,
    wg_full_cycle,
    wg_inequality_check,
    wg_oracle_linear,
)

logger = logging.getLogger(__name__)

# d!²·Wg(d, μ) for k = d: (denominator, numerators in display order)
PUBLISHED_TABLES: dict[int, tuple[int, list[int]]] = {
    2: (3, [4, -2]),
    3: (10, [21, -9, 6]),
    4: (35, [134, -48, 29, 22, -20]),
    5: (126, [1015, -299, 160, 115, -101, -74, 70]),
    6: (1617, [31524, -7614, 3540, 2396, -2004, -1377, 1274, -1014, 922, 900, -882]),
    7: (3432, [184849, -36957, 14770, 9401, -7369, -4704, 4214, -3261, 2849, 2758, -2676, 2030, -1922, -1870, 1848]),
    8: (
        19305,
        [
            3245092, -546368, 187642, 112828, -81680, -48224, 41332, -31296, 25824, 24718, -23616,
            17122, -15808, -15224, 14949, 12276, -11152, -10880, 10674, 10387, 10348, -10296,
        ],
    ),
}

# class-sum products in S_4, classes written with increasing parts
S4_CLASS_PRODUCTS: dict[tuple[str, str], dict[str, int]] = {
    ("1,1,2", "1,1,2"): {"1,1,1,1": 6, "1,3": 3, "2,2": 2},
    ("1,1,2", "1,3"): {"1,1,2": 4, "4": 4},
    ("1,1,2", "2,2"): {"1,1,2": 1, "4": 2},
    ("1,1,2", "4"): {"1,3": 3, "2,2": 4},
    ("1,3", "1,3"): {"1,1,1,1": 8, "1,3": 4, "2,2": 8},
    ("1,3", "2,2"): {"1,3": 3},
    ("1,3", "4"): {"1,1,2": 4, "4": 4},
    ("2,2", "2,2"): {"1,1,1,1": 3, "2,2": 2},
    ("2,2", "4"): {"1,1,2": 2, "4": 1},
    ("4", "4"): {"1,1,1,1": 6, "1,3": 3, "2,2": 2},
}

# non-zero products of the degenerate algebra of S_5 among the non-identity classes
S5_DEGENERATE_PRODUCTS: dict[tuple[str, str], dict[str, int]] = {
    ("1,1,1,2", "1,1,1,2"): {"1,1,3": 3, "1,2,2": 2},
    ("1,1,1,2", "1,1,3"): {"1,4": 4, "2,3": 1},
    ("1,1,1,2", "1,2,2"): {"1,4": 2, "2,3": 3},
    ("1,1,1,2", "1,4"): {"5": 5},
    ("1,1,1,2", "2,3"): {"5": 5},
    ("1,1,3", "1,1,3"): {"5": 5},
    ("1,1,3", "1,2,2"): {"5": 5},
    ("1,2,2", "1,2,2"): {"5": 5},
}

TOP_COEFFICIENTS: dict[str, int] = {
    "1,1,1,1": 1,
    "1,1,2": -1,
    "1,3": 2,
    "2,2": 1,
    "4": -5,
    "5": 14,
    "1,4": -5,
    "2,3": -2,
}

# (d, u, ubar, exact value) worked by hand on U(2)
U2_INTEGRALS: list[tuple[int, str, str, tuple[int, int]]] = [
    (2, "1,1", "1,1", (1, 2)),
    (2, "1,1 1,1", "1,1 1,1", (1, 3)),
    (2, "1,1 1,2", "1,1 1,2", (1, 6)),
    (2, "1,1 2,2", "1,2 2,1", (-1, 6)),
]

PROJECTION_SPECS: list[tuple[int, str, str]] = [
    (2, "1,1", "1,1"),
    (2, "1,1 1,2", "1,1 1,2"),
    (2, "1,1 2,2", "1,2 2,1"),
    (2, "1,2 2,1", "1,2 2,1"),
    (3, "1,1 2,2", "2,2 1,1"),
    (2, "1,1 1,1 2,2", "1,1 1,2 2,1"),
    (3, "1,2 2,3 3,1", "1,2 2,3 3,1"),
]

MC_SPECS: list[tuple[int, str, str]] = [
    (2, "1,1", "1,1"),
    (2, "1,1 1,1", "1,1 1,1"),
    (2, "1,1 1,2", "1,1 1,2"),
    (2, "1,1 2,2", "1,2 2,1"),
    (2, "1,1 2,2", "1,1 2,2"),
    (3, "1,1", "1,1"),
    (3, "1,1 2,2", "1,1 2,2"),
    (3, "1,1 2,2", "1,2 2,1"),
    (3, "1,1 1,1", "1,1 1,1"),
    (3, "1,2 2,3 3,1", "1,2 2,3 3,1"),
]

# Elements of Q[S_3] in one-line form, each with the bad permutation 321 in its support.
STRAIGHTEN_SAMPLES: list[dict[tuple[int, ...], object]] = [
    {(3, 2, 1): 2, (1, 2, 3): 1},
    {(3, 2, 1): -3, (2, 1, 3): 1, (1, 3, 2): 4},
    {(3, 2, 1): QQ(-1, 2), (2, 3, 1): 5, (3, 1, 2): -1},
    {(3, 2, 1): 7, (1, 2, 3): -2, (2, 1, 3): 3, (1, 3, 2): QQ(1, 3), (2, 3, 1): -4, (3, 1, 2): 6},
    {(3, 2, 1): 1},
    {(1, 2, 3): 1, (1, 3, 2): 2, (2, 1, 3): 3, (2, 3, 1): 4, (3, 1, 2): 5, (3, 2, 1): 6},
]


def straighten_sample(terms: dict[tuple[int, ...], object]) -> GroupAlgebraElement:
    k = len(next(iter(terms)))
    return GroupAlgebraElement(k, {Permutation.from_one_line(line): c for line, c in terms.items()})


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[..., list[str]]
    levels: dict[Level, dict] = field(default_factory=dict)


CHECKS: dict[str, Check] = {}


def register(name: str, description: str, smoke: dict, desk: dict, deep: Optional[dict] = None):
    def decorator(fn: Callable[..., list[str]]):
        CHECKS[name] = Check(name, description, fn, {Level.smoke: smoke, Level.desk: desk, Level.deep: deep or desk})
        return fn

    return decorator


def check_names() -> list[str]:
    return list(CHECKS)


def run_check(name: str, level: Level = Level.desk) -> CheckResult:
    if name not in CHECKS:
        raise UnknownCheckError(name)
    level = Level(level)
    check = CHECKS[name]
    failures = check.run(**check.levels[level])
    if failures:
        logger.warning(f"Check {name} ({level.value}) failed: {failures[:5]}")
    else:
        logger.info(f"Check {name} ({level.value}) passed")
    return CheckResult(name=name, level=level, passed=not failures, details=failures)


def _increasing(text: str) -> Partition:
    return Partition.of(int(part) for part in text.split(","))


@register("published-tables", "d!²·Wg(d, μ) equals the published tables", {"d_max": 5}, {"d_max": 8})
def check_published_tables(d_max: int) -> list[str]:
    failures = []
    for d in range(2, d_max + 1):
        table = scaled_table(d)
        denominator, numerators = PUBLISHED_TABLES[d]
        if len(table.entries) != len(numerators):
            failures.append(f"d={d}: {len(table.entries)} classes, expected {len(numerators)}")
            continue
        for (mu, value), numerator in zip(table.entries, numerators):
            if value != QQ(numerator, denominator):
                failures.append(f"d={d} {mu.class_label()}: {value}, expected {numerator}/{denominator}")
    return failures


@register("full-cycle", "Wg at the full cycle matches the Catalan closed form", {"k_max": 4}, {"k_max": 8})
def check_full_cycle(k_max: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        full = Partition((k,))
        symbolic = wg_characters(k).value(full)
        if symbolic != wg_full_cycle(k):
            failures.append(f"k={k}: {symbolic} differs from the closed form")
        scaled = wg_characters(k, k).value(full) * math.factorial(k) ** 2
        if scaled != QQ((-1) ** (k + 1) * k, 2 * k - 1):
            failures.append(f"d=k={k}: d!²·Wg = {scaled}")
    return failures


@register("oracle-equivalence", "character sum equals the linear solve in the center", {"k_max": 5}, {"k_max": 8})
def check_oracle_equivalence(k_max: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        for d in (k, k + 3):
            by_characters = wg_characters(k, d)
            by_solve = wg_oracle_linear(k, d)
            symbolic = wg_characters(k).at(d)
            for mu in partitions_of(k):
                if not by_characters.value(mu) == by_solve.value(mu) == symbolic.value(mu):
                    failures.append(f"k={k} d={d} {mu}: {by_characters.value(mu)} vs {by_solve.value(mu)}")
    return failures


@register("jucys", "Jucys–Murphy factorization, elementary and complete symmetric functions", {"k_max": 4, "series_max": 3}, {"k_max": 7, "series_max": 5})
def check_jucys(k_max: int, series_max: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        if not jucys_factorization_check(k):
            failures.append(f"k={k}: d·Π(d + J_i) ≠ Σ d^c(ρ) ρ")
        if not jucys_elementary_check(k):
            failures.append(f"k={k}: e_i(J) ≠ Σ_(|μ|=i) C_μ")
        if k <= series_max and not jucys_series_matches(k):
            failures.append(f"k={k}: complete symmetric series differs from the expansion of Wg")
    return failures


@register("top-coefficients", "top coefficients are Catalan products and leading terms of Wg", {"k_max": 5, "element_max": 4}, {"k_max": 8, "element_max": 5})
def check_top_coefficients(k_max: int, element_max: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        report = verify_collins_multiplicativity(k)
        failures += [f"k={k}: {m}" for m in report.catalan_mismatches + report.limit_mismatches]
        coefficients = report.coefficients.values
        for mu, value in coefficients.items():
            expected = TOP_COEFFICIENTS.get(",".join(str(p) for p in mu.increasing_key))
            if expected is not None and value != expected:
                failures.append(f"C[{mu}] = {value}, expected {expected}")
        if k <= 6 and top_coefficients_by_sequences(k).values != coefficients:
            failures.append(f"k={k}: sum over class sequences differs")
        if k <= element_max and top_coefficients_by_elements(k).values != coefficients:
            failures.append(f"k={k}: element-level degenerate series differs")
        if k <= 5:
            expansion = collins_expansion(k, k + 1)
            wg = wg_characters(k)
            for mu in partitions_of(k):
                if expansion.get((mu, mu.transposition_length), 0) != coefficients[mu]:
                    failures.append(f"k={k} {mu}: A[μ, |μ|] differs from C[μ]")
                for h in range(k + 2):
                    if laurent_coefficient(wg.value(mu), -(k + h)) != expansion.get((mu, h), 0):
                        failures.append(f"k={k} {mu}: coefficient of d^-{k + h} differs from A[μ, {h}]")
    return failures


@register("connection-tables", "S_4 class products, S_5 degenerate products and brute-force counts", {"k_max": 4}, {"k_max": 6})
def check_connection_tables(k_max: int) -> list[str]:
    failures = []
    for (first, second), expected in S4_CLASS_PRODUCTS.items():
        product = class_product(_increasing(first), _increasing(second))
        wanted = {_increasing(mu): count for mu, count in expected.items()}
        if {mu: v for mu, v in product.values.items() if v} != wanted:
            failures.append(f"S_4 c_{{{first}}}·c_{{{second}}} = {product.values}")
    identity = Partition((1,) * 5)
    classes = [mu for mu in partitions_of(5) if mu != identity]
    for mu1 in classes:
        for mu2 in classes:
            key = tuple(sorted((",".join(map(str, mu1.increasing_key)), ",".join(map(str, mu2.increasing_key)))))
            expected = S5_DEGENERATE_PRODUCTS.get(key, {})
            product = multiply_class_functions(ClassFunction(5, {mu1: 1}), ClassFunction(5, {mu2: 1}), ProductMode.DEGENERATE)
            if {mu: v for mu, v in product.values.items() if v} != {_increasing(mu): c for mu, c in expected.items()}:
                failures.append(f"S_5 degenerate {mu1.class_label()}·{mu2.class_label()} = {product.values}")
    for k in range(1, k_max + 1):
        for mu1 in partitions_of(k):
            for mu2 in partitions_of(k):
                fast = {mu: v for mu, v in class_product(mu1, mu2).values.items() if v}
                slow = {mu: v for mu, v in brute_force_class_product(mu1, mu2).values.items() if v}
                if fast != slow:
                    failures.append(f"k={k} {mu1}·{mu2}: characters {fast} vs counting {slow}")
    return failures


@register("young-subgroups", "length-additive factorizations stay in Y_σ; lengths and degenerate products split over blocks", {"k_max": 4}, {"k_max": 5})
def check_young_subgroups(k_max: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        for sigma in all_permutations(k):
            blocks = cycle_blocks(sigma)
            for first, second in length_additive_factorizations(sigma):
                if not (in_young_subgroup(first, blocks) and in_young_subgroup(second, blocks)):
                    failures.append(f"{sigma.cycle_notation()} = {first.cycle_notation()}·{second.cycle_notation()}")
        for blocks in set_partitions(k):
            failures.extend(blockwise_violations(blocks, k))
    return failures


@register("novak-signs", "sign rule, dominance of Wg(d, 1), positivity and pole orders", {"k_max": 4, "extra_d": 2}, {"k_max": 7, "extra_d": 4})
def check_novak_signs(k_max: int, extra_d: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        identity = GroupAlgebraElement.identity(k)
        elements = [identity]
        if k >= 2:
            swap = GroupAlgebraElement.of(Permutation.transposition(1, 2, k))
            transpositions = class_sum(Partition.of([2] + [1] * (k - 2)))
            elements += [identity - swap, identity + swap.scale(3), identity - transpositions]
        for d in range(k, k + extra_d + 1):
            failures += [f"k={k} d={d}: sign of Wg at {mu}" for mu in novak_sign_check(k, d)]
            failures += [f"k={k} d={d}: |Wg({mu})| ≥ Wg(1)" for mu in wg_dominance_violations(k, d)]
            for a in elements:
                if wg_inequality_check(k, d, a) <= 0:
                    failures.append(f"k={k} d={d}: Σ b_σ Wg(σ) ≤ 0 for a = {a}")
        if k <= 6:
            profile = pole_profile(k)
            failures += [f"k={k}: pole of order {profile.orders[i]} at {i}" for i in profile.violations]
    return failures


@register("conjecture", "strict decrease and universal denominators of the scaled tables", {"d_max": 6}, {"d_max": 10}, {"d_max": 12})
def check_conjecture(d_max: int) -> list[str]:
    report = conjecture_scan(d_max)
    return [f"d={row.d}: {example}" for row in report.rows for example in row.counterexamples]


@register("haar-integration", "exact monomial integrals, relabeling invariance and the Monte Carlo oracle", {"samples": 10_000}, {"samples": 100_000})
def check_haar_integration(samples: int) -> list[str]:
    failures = []
    for d, u, ubar, (numerator, denominator) in U2_INTEGRALS:
        value = monomial_integral(MonomialSpec.parse(d, u, ubar))
        if value != QQ(numerator, denominator):
            failures.append(f"∫ {u} | {ubar} at d={d} = {value}, expected {numerator}/{denominator}")
    for d, u, ubar in PROJECTION_SPECS:
        spec = MonomialSpec.parse(d, u, ubar)
        exact = monomial_integral(spec)
        if any(monomial_integral(spec.relabel(sigma)) != exact for sigma in all_permutations(spec.k1)):
            failures.append(f"{spec} at d={d}: integral changes when the factors are reordered")
        renamings = [(rows, cols) for rows in all_permutations(d) for cols in all_permutations(d)]
        if any(monomial_integral(spec.rename_indices(rows, cols)) != exact for rows, cols in renamings):
            failures.append(f"{spec} at d={d}: integral changes when the indices are renamed")
    for index, (d, u, ubar) in enumerate(MC_SPECS):
        spec = MonomialSpec.parse(d, u, ubar)
        exact = monomial_integral(spec)
        estimate = haar_mc_oracle(spec, samples=samples, seed=1000 + index)
        if not estimate.agrees_with(exact):
            failures.append(f"{spec} at d={d}: Monte Carlo {estimate.mean:.5f} ± {estimate.stderr:.5f}, exact {exact}")
    return failures


@register("wg-via-monomial", "Wg read off a monomial integral and through the projection E", {"projection_k": 2}, {"projection_k": 3})
def check_wg_via_monomial(projection_k: int) -> list[str]:
    failures = []
    d = 3
    for k in (2, 3):
        wg = wg_characters(k, d)
        for tau in all_permutations(k):
            if wg_via_monomial(d, tau) != wg.value(tau.cycle_type):
                failures.append(f"d={d} τ={tau}: monomial route differs")
    for d, u, ubar in PROJECTION_SPECS:
        spec = MonomialSpec.parse(d, u, ubar)
        if spec.k1 <= projection_k and monomial_integral(spec) != monomial_integral_via_projection(spec):
            failures.append(f"{spec} at d={d}: integral differs from tr(e·E(e))")
    matrices = MatrixTuple(2, [[[1, 2], [0, 1]], [[0, 1], [1, 0]], [[2, 0], [1, 3]]])
    for sigma in all_permutations(3):
        tensor = TensorOperator.from_matrices(matrices.matrices)
        if multilinear_invariant(sigma, matrices) != trace_against(tensor, sigma):
            failures.append(f"T_σ for σ={sigma.cycle_notation()} differs from tr(σ⁻¹∘X)")
    return failures


@register(
    "formanek",
    "𝒞_d, the G_d identity and Formanek's central polynomial, also at random rational tuples",
    {"d_max": 2, "draws": 3},
    {"d_max": 2, "draws": 20},
    {"d_max": 3, "draws": 20},
)
def check_formanek(d_max: int, draws: int) -> list[str]:
    failures = []
    if abs(determinant_constant(2)) != 6:
        failures.append(f"𝒞_2 = {determinant_constant(2)}, expected ±6")
    for d in range(1, d_max + 1):
        staggered = verify_forgz(d)
        if not staggered.operator_matches:
            failures.append(f"d={d}: G_d ≠ 𝒯_d·Wg")
        if not staggered.phi_matches:
            failures.append(f"d={d}: Φ(G_d) ≠ 𝒯_d·1")
        report = formanek_verify(d)
        if not report.passed:
            failures.append(
                f"d={d}: F = {report.computed_scalar}·Id (scalar: {report.is_scalar}), expected {report.expected_scalar}"
            )
    for index, sample in enumerate(formanek_specializations(2, draws)):
        if not sample.passed:
            failures.append(f"d=2 draw {index}: F is not {sample.expected_scalar}·Id (scalar: {sample.is_scalar})")
    return failures


@register("tableaux", "RSK, Schensted, good bases, straightening and contents", {"n_max": 5, "d_max": 3}, {"n_max": 7, "d_max": 4})
def check_tableaux(n_max: int, d_max: int) -> list[str]:
    failures = []
    if rsk("strange").shape != Partition((2, 2, 1, 1, 1)) or longest_decreasing("strange") != 5:
        failures.append("the word 'strange' does not insert to shape (2,2,1,1,1)")
    for n in range(1, n_max + 1):
        pairs = set()
        for sigma in all_permutations(n):
            result = rsk(sigma)
            pairs.add((result.p, result.q))
            if rsk_inverse_permutation(result.p, result.q) != sigma:
                failures.append(f"RSK does not invert on {sigma}")
            if result.shape.height != longest_decreasing(sigma):
                failures.append(f"height of RSK shape of {sigma} is not its longest decreasing subsequence")
        if len(pairs) != math.factorial(n):
            failures.append(f"n={n}: RSK is not injective")
        for shape in partitions_of(n):
            tableaux = enumerate_syt(shape)
            if len(tableaux) != dim_irrep(shape):
                failures.append(f"{shape}: {len(tableaux)} standard tableaux, expected {dim_irrep(shape)}")
            for tableau in tableaux:
                for j in range(n + 1):
                    tableau.restrict(j)
                if tableau_from_contents(content_vector(tableau)) != tableau:
                    failures.append(f"{tableau}: contents do not determine the tableau")
                if content_product(tableau) != r_lambda(shape):
                    failures.append(f"{tableau}: content product differs from r_λ")
    for k in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            if len(good_basis(k, d)) != commutant_dimension(k, d):
                failures.append(f"k={k} d={d}: good basis has {len(good_basis(k, d))} elements")
    d = 2
    for terms in STRAIGHTEN_SAMPLES:
        a = straighten_sample(terms)
        straight = straighten(a, d)
        if operator_of(straight, d) != operator_of(a, d):
            failures.append(f"straightening {a} changed the action on V^⊗3")
        if not all(is_d_good(sigma, d + 1) for sigma in straight.terms):
            failures.append(f"straightened {a} is not supported on good permutations")
        if straighten(straight, d) != straight:
            failures.append(f"straightening {a} is not idempotent")
    return failures


@register("characters", "orthogonality, power sums, Stanley's identity and central idempotents", {"k_max": 5, "power_k": 4, "idempotent_k": 3}, {"k_max": 8, "power_k": 6, "idempotent_k": 4})
def check_characters(k_max: int, power_k: int, idempotent_k: int) -> list[str]:
    failures = []
    for k in range(1, k_max + 1):
        shapes = partitions_of(k)
        failures += [f"k={k}: ⟨χ_{a}, χ_{b}⟩ wrong" for a, b in orthogonality_violations(k)]
        if sum(dim_irrep(shape) ** 2 for shape in shapes) != math.factorial(k):
            failures.append(f"k={k}: Σ χ(1)² ≠ k!")
        for shape in shapes:
            if transposition_scalar(shape) != content_sum(shape):
                failures.append(f"{shape}: transposition scalar differs from the content sum")
            closed = QQ(sum(row * row - (2 * i - 1) * row for i, row in enumerate(shape.parts, start=1)), 2)
            if content_sum(shape) != closed:
                failures.append(f"{shape}: content sum {content_sum(shape)} differs from ½Σ(λ_i² − (2i−1)λ_i) = {closed}")
            for d in range(1, k + 3):
                if QQ(math.factorial(k)) * schur_dim(shape, d) / dim_irrep(shape) != r_lambda(shape, d):
                    failures.append(f"{shape} d={d}: k!·s_λ(d)/χ_λ(1) ≠ Π(d + c)")
        if k <= power_k:
            table = character_table(k)
            for mu in shapes:
                for d in range(1, 7):
                    total = sum((schur_dim(shape, d) * table(shape, mu) for shape in shapes if shape.height <= d), QQ(0))
                    if total != d ** mu.height:
                        failures.append(f"k={k} ρ∈{mu} d={d}: Σ s_λ(d)χ_λ(ρ) = {total}")
        if k <= idempotent_k:
            for shape in shapes:
                e = central_idempotent(shape)
                if e * e != e:
                    failures.append(f"e_{shape} is not idempotent")
    return failures
