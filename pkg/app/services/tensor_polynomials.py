"""Multilinear tensor polynomials of matrices, the odd trace invariants T_{2i−1}, 𝒯_d,
the alternated staggered products G_d and Formanek's central polynomial F.

At tuples of elementary matrices a product e_{a₁b₁}e_{a₂b₂}⋯ is either 0 or
e_{a₁b_last}, so the alternations are evaluated by walking the slots in
order, keeping only the chains that survive. Everything else falls back to
expanding the alternation and evaluating with exact sympy matrices.
"""
import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import QQ, Rational, eye, zeros

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, InvalidInputError, NotMultilinearError, check_capacity
from app.models.combinatorics import Partition, Permutation
from app.models.tensors import MatrixTuple, TensorMonomialPolynomial, TensorOperator
from app.services.combinatorics import all_permutations, class_representative
from app.services.integrals import operator_of, phi_map, trace_against, weingarten_element
from app.services.weingarten import wg_characters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StaggeredReport:
    d: int
    determinant_constant: object
    operator_matches: bool
    phi_matches: bool

    @property
    def passed(self) -> bool:
        return self.operator_matches and self.phi_matches


@dataclass(frozen=True)
class FormanekReport:
    d: int
    determinant_constant: object
    computed_scalar: object
    expected_scalar: object
    trace: object
    expected_trace: object
    is_scalar: bool
    cycle_trace_matches: bool
    full_cycle_matches: bool

    @property
    def passed(self) -> bool:
        return (
            self.is_scalar
            and self.computed_scalar == self.expected_scalar
            and self.trace == self.expected_trace
            and self.cycle_trace_matches
            and self.full_cycle_matches
        )


def evaluate(p: TensorMonomialPolynomial, x: MatrixTuple) -> TensorOperator:
    """Σ coefficient · m_1(X) ⊗ … ⊗ m_k(X); an empty word is the identity matrix."""
    if len(x) != p.n:
        raise DegreeMismatchError(f"Polynomial in {p.n} variables evaluated at {len(x)} matrices")
    out = TensorOperator.zero(x.d, p.k)
    for coefficient, words in p.terms:
        factors = []
        for word in words:
            product = eye(x.d)
            for v in word:
                product = product * x[v - 1]
            factors.append(product)
        out = out + TensorOperator.from_matrices(factors).scale(QQ.convert(coefficient))
    return out


def alternate(p: TensorMonomialPolynomial, variables: Iterable[int]) -> TensorMonomialPolynomial:
    """Σ_σ ε_σ p(x_{σ(·)}) over the permutations of ``variables``, without 1/m!."""
    variables = sorted(set(variables))
    if any(not 1 <= v <= p.n for v in variables):
        raise InvalidInputError(f"Variables {variables} are not among 1..{p.n}")
    if not p.is_multilinear_in(variables):
        raise NotMultilinearError(f"Polynomial is not multilinear in {variables}")
    terms = []
    for sigma in all_permutations(len(variables)):
        relabel = {v: variables[sigma(a)] for a, v in enumerate(variables)}
        for coefficient, words in p.terms:
            moved = tuple(tuple(relabel.get(v, v) for v in word) for word in words)
            terms.append((sigma.sign * coefficient, moved))
    return TensorMonomialPolynomial(p.k, p.n, tuple(terms))


def _sparse(matrix) -> dict[tuple[int, int], object]:
    return {
        (a, b): QQ.from_sympy(matrix[a, b])
        for a in range(matrix.rows)
        for b in range(matrix.cols)
        if matrix[a, b] != 0
    }


def _sparse_product(left: dict, right: dict) -> dict:
    by_row = defaultdict(list)
    for (a, b), value in right.items():
        by_row[a].append((b, value))
    out: dict = defaultdict(lambda: QQ(0))
    for (a, b), value in left.items():
        for c, other in by_row.get(b, ()):
            out[(a, c)] += value * other
    return {key: value for key, value in out.items() if value}


def _alternating_trace(matrices: Sequence[dict]) -> object:
    """Σ_σ ε_σ tr(M_{σ(1)}⋯M_{σ(m)}) by backtracking with zero-pruning."""
    m = len(matrices)
    total = QQ(0)

    def extend(product: dict, used: int, sign: int):
        nonlocal total
        if used == (1 << m) - 1:
            total += sign * sum((value for (a, b), value in product.items() if a == b), QQ(0))
            return
        for v in range(m):
            if used >> v & 1:
                continue
            following = _sparse_product(product, matrices[v]) if product is not None else matrices[v]
            if not following:
                continue
            # placing v after every already-used larger index adds that many inversions
            flip = bin(used >> (v + 1)).count("1") % 2
            extend(following, used | 1 << v, -sign if flip else sign)

    extend(None, 0, 1)
    return total


def t_odd(i: int, y: MatrixTuple):
    """T_{2i−1}(Y) = Σ_σ ε_σ tr(Y_{σ(1)}⋯Y_{σ(2i−1)})."""
    if i < 1 or len(y) != 2 * i - 1:
        raise InvalidInputError(f"T_{2 * i - 1} takes {2 * i - 1} matrices, got {len(y)}")
    return _alternating_trace([_sparse(m) for m in y.matrices])


def _inversion_sign(sequence: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(sequence, 2) if a > b)
    return -1 if inversions % 2 else 1


def script_t(y: MatrixTuple):
    """𝒯_d(Y) = T₁ ∧ T₃ ∧ … ∧ T_{2d−1} on d² matrices.

    Sum over ordered splittings of the d² positions into blocks of sizes
    1, 3, …, 2d−1 (each kept in increasing order) of the shuffle sign times
    Π_i T_{2i−1}(block i).
    """
    d = y.d
    n = d * d
    if len(y) != n:
        raise InvalidInputError(f"𝒯_{d} takes {n} matrices, got {len(y)}")
    sparse = [_sparse(m) for m in y.matrices]

    @lru_cache(maxsize=None)
    def block_value(block: tuple[int, ...]):
        return _alternating_trace([sparse[v] for v in block])

    total = QQ(0)

    def split(remaining: tuple[int, ...], size: int, prefix: tuple[int, ...], value):
        nonlocal total
        if not remaining:
            total += _inversion_sign(prefix) * value
            return
        for block in itertools.combinations(remaining, size):
            factor = block_value(block)
            if factor:
                rest = tuple(v for v in remaining if v not in block)
                split(rest, size + 2, prefix + block, value * factor)

    split(tuple(range(n)), 1, (), QQ(1))
    return total


def determinant_constant(d: int):
    """𝒞_d = 𝒯_d at (e_11, e_12, …, e_dd), the tuple whose determinant is 1."""
    check_capacity("d", d, settings.MAX_FORMANEK_DEGREE)
    value = script_t(MatrixTuple.elementary_basis(d))
    logger.info(f"Determinant constant for d={d}: {value}")
    return value


def _block_sizes(d: int) -> list[int]:
    return [2 * i - 1 for i in range(1, d + 1)]


def staggered_polynomial(d: int) -> TensorMonomialPolynomial:
    """m_1(Y) ⊗ … ⊗ m_d(Y) with m_i(Y) = Y_{(i−1)²+1}⋯Y_{i²}."""
    words = tuple(tuple(range((i - 1) ** 2 + 1, i * i + 1)) for i in range(1, d + 1))
    return TensorMonomialPolynomial.monomial(d * d, words)


def formanek_polynomial(d: int) -> TensorMonomialPolynomial:
    """m_1(X)m_1(Y)m_2(X)m_2(Y)⋯m_d(X)m_d(Y) in X = x_1..x_{d²}, Y = x_{d²+1}..x_{2d²}."""
    n = d * d
    word: list[int] = []
    for i in range(1, d + 1):
        block = range((i - 1) ** 2 + 1, i * i + 1)
        word += list(block) + [v + n for v in block]
    return TensorMonomialPolynomial.monomial(2 * n, (tuple(word),))


def _alternated_chains(layout: Sequence[Sequence[str]], pairs: dict[str, Sequence[tuple[int, int]]]) -> dict:
    """Alternate every variable family over its slots, at elementary matrices.

    ``layout`` lists the tensor factors, each a sequence of family names (one
    per slot, multiplied left to right); ``pairs[name][v]`` is (a, b) for
    e_{ab}. Returns {(s_1, e_1, …, s_k, e_k): coefficient} meaning
    Σ coefficient · e_{s_1 e_1} ⊗ … ⊗ e_{s_k e_k}.
    """
    names = sorted(pairs)
    slots = []
    for factor in layout:
        for position, name in enumerate(factor):
            slots.append((names.index(name), position == 0, position == len(factor) - 1))
    families = [tuple(pairs[name]) for name in names]

    @lru_cache(maxsize=None)
    def walk(masks: tuple[int, ...], slot: int, last: int) -> tuple:
        if slot == len(slots):
            return (((), 1),)
        family, opens, closes = slots[slot]
        mask = masks[family]
        out: dict = defaultdict(int)
        for v, (a, b) in enumerate(families[family]):
            if mask >> v & 1 or (not opens and a != last):
                continue
            sign = -1 if bin(mask >> (v + 1)).count("1") % 2 else 1
            following = masks[:family] + (mask | 1 << v,) + masks[family + 1:]
            prefix = ((a,) if opens else ()) + ((b,) if closes else ())
            for key, c in walk(following, slot + 1, -1 if closes else b):
                out[prefix + key] += sign * c
        return tuple((key, c) for key, c in out.items() if c)

    result = dict(walk(tuple(0 for _ in names), 0, -1))
    walk.cache_clear()
    return result


def _as_operator(d: int, chains: dict) -> TensorOperator:
    entries = {}
    for key, coefficient in chains.items():
        entries[(key[0::2], key[1::2])] = QQ(coefficient)
    k = len(next(iter(chains))) // 2 if chains else 0
    return TensorOperator(d, k, entries)


def g_d(d: int, y: Optional[MatrixTuple] = None) -> TensorOperator:
    """G_d(Y) = Alt_Y(m_1(Y) ⊗ … ⊗ m_d(Y)); Y defaults to (e_11, e_12, …, e_dd)."""
    check_capacity("d", d, settings.MAX_FORMANEK_DEGREE)
    y = MatrixTuple.elementary_basis(d) if y is None else y
    if y.d != d or len(y) != d * d:
        raise InvalidInputError(f"G_{d} takes {d * d} matrices of size {d}")
    pairs = y.elementary_pairs()
    if pairs is None:
        return evaluate(alternate(staggered_polynomial(d), range(1, d * d + 1)), y)
    chains = _alternated_chains([["Y"] * size for size in _block_sizes(d)], {"Y": pairs})
    return _as_operator(d, chains) if chains else TensorOperator.zero(d, d)


def verify_forgz(d: int) -> StaggeredReport:
    """G_d = 𝒯_d(Y)·Wg(d, d) as operators and Φ(G_d) = 𝒯_d(Y)·1, at the elementary tuple."""
    constant = determinant_constant(d)
    g = g_d(d)
    expected = operator_of(weingarten_element(d, d), d).scale(constant)
    identity = Permutation.identity(d)
    phi = phi_map(g)
    phi_matches = phi.terms == ({identity: constant} if constant else {})
    report = StaggeredReport(d, constant, g == expected, phi_matches)
    if not report.passed:
        logger.warning(f"G_{d} does not match 𝒯_{d}·Wg(d, d)")
    return report


@lru_cache(maxsize=None)
def _alternated_formanek(d: int) -> TensorMonomialPolynomial:
    n = d * d
    return alternate(alternate(formanek_polynomial(d), range(1, n + 1)), range(n + 1, 2 * n + 1))


def formanek_value(d: int, x: Optional[MatrixTuple] = None, y: Optional[MatrixTuple] = None):
    """F(X, Y) = Alt_X Alt_Y(m_1(X)m_1(Y)⋯m_d(X)m_d(Y)) as an exact d×d sympy matrix."""
    check_capacity("d", d, settings.MAX_FORMANEK_DEGREE)
    x = MatrixTuple.elementary_basis(d) if x is None else x
    y = MatrixTuple.elementary_basis(d) if y is None else y
    x_pairs, y_pairs = x.elementary_pairs(), y.elementary_pairs()
    if x_pairs is None or y_pairs is None:
        value = evaluate(_alternated_formanek(d), MatrixTuple(d, x.matrices + y.matrices))
        chains = {(row[0], col[0]): c for (row, col), c in value.entries.items()}
    else:
        layout = [sum((["X"] * size + ["Y"] * size for size in _block_sizes(d)), [])]
        chains = _alternated_chains(layout, {"X": x_pairs, "Y": y_pairs})
    matrix = zeros(d, d)
    for (row, col), coefficient in chains.items():
        matrix[row, col] = QQ.to_sympy(QQ.convert(coefficient))
    return matrix


def _formanek_tensor(d: int) -> TensorOperator:
    """Alt_X Alt_Y(m_1(X)m_1(Y) ⊗ … ⊗ m_d(X)m_d(Y)) at the elementary tuples."""
    pairs = MatrixTuple.elementary_basis(d).elementary_pairs()
    layout = [["X"] * size + ["Y"] * size for size in _block_sizes(d)]
    chains = _alternated_chains(layout, {"X": pairs, "Y": pairs})
    return _as_operator(d, chains) if chains else TensorOperator.zero(d, d)


def formanek_coefficient(d: int):
    """(−1)^{d−1} / ((d!)²(2d−1))."""
    return QQ((-1) ** (d - 1), math.factorial(d) ** 2 * (2 * d - 1))


def formanek_verify(d: int) -> FormanekReport:
    """F = (−1)^{d−1}/((d!)²(2d−1))·𝒯_d(X)𝒯_d(Y)·Id_d at X = Y = (e_11, …, e_dd)."""
    constant = determinant_constant(d)
    f = formanek_value(d)
    diagonal = {QQ.from_sympy(f[a, a]) for a in range(d)}
    is_scalar = len(diagonal) == 1 and all(f[a, b] == 0 for a in range(d) for b in range(d) if a != b)
    computed = QQ.from_sympy(f[0, 0])
    expected = formanek_coefficient(d) * constant * constant
    trace = QQ.from_sympy(f.trace())
    expected_trace = expected * d
    full_cycle = class_representative(Partition((d,)))
    cycle_trace = trace_against(_formanek_tensor(d), full_cycle)
    wg_full = wg_characters(d, d).value(Partition((d,)))
    report = FormanekReport(
        d=d,
        determinant_constant=constant,
        computed_scalar=computed,
        expected_scalar=expected,
        trace=trace,
        expected_trace=expected_trace,
        is_scalar=is_scalar,
        cycle_trace_matches=cycle_trace == trace,
        full_cycle_matches=wg_full * constant * constant == expected_trace,
    )
    logger.info(f"Formanek d={d}: scalar {computed}, expected {expected}")
    return report


@dataclass(frozen=True)
class FormanekSpecialization:
    x: MatrixTuple
    y: MatrixTuple
    value: TensorOperator
    expected_scalar: object

    @property
    def is_scalar(self) -> bool:
        return self.value.is_scalar()

    @property
    def passed(self) -> bool:
        return self.is_scalar and self.value == TensorOperator.identity(self.x.d, 1).scale(self.expected_scalar)


def random_rational_tuple(d: int, n: int, rng: np.random.Generator) -> MatrixTuple:
    """n d×d matrices with entries a/b, a ∈ [−3, 3], b ∈ [1, 3]."""
    numerators = rng.integers(-3, 4, size=(n, d, d))
    denominators = rng.integers(1, 4, size=(n, d, d))
    return MatrixTuple(
        d,
        tuple(
            [[Rational(int(num[a, b]), int(den[a, b])) for b in range(d)] for a in range(d)]
            for num, den in zip(numerators, denominators)
        ),
    )


def formanek_specializations(d: int, draws: int, seed: Optional[int] = None) -> list[FormanekSpecialization]:
    """F(X, Y) against (−1)^{d−1}/((d!)²(2d−1))·𝒯_d(X)𝒯_d(Y)·Id_d at seeded random rational tuples."""
    check_capacity("d", d, settings.MAX_FORMANEK_DEGREE)
    rng = np.random.default_rng(settings.MC_SEED if seed is None else seed)
    coefficient = formanek_coefficient(d)
    out = []
    for _ in range(draws):
        x = random_rational_tuple(d, d * d, rng)
        y = random_rational_tuple(d, d * d, rng)
        value = TensorOperator.from_matrices([formanek_value(d, x, y)])
        out.append(FormanekSpecialization(x, y, value, coefficient * script_t(x) * script_t(y)))
    failed = sum(1 for sample in out if not sample.passed)
    if failed:
        logger.warning(f"Formanek d={d}: {failed} of {draws} random specializations are not the expected scalar")
    return out
