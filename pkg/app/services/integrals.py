"""Haar-unitary monomial integrals and the equivariant projection onto Σ_k(V).

∫ Π_ℓ u_{j_ℓ h_ℓ} Π_ℓ ū_{i_ℓ p_ℓ} dU
    = Σ_{γ,σ ∈ S_k} [j_ℓ = i_{γ(ℓ)} ∀ℓ] [h_ℓ = p_{σ(ℓ)} ∀ℓ] Wg(d, γσ⁻¹)

Only the γ (resp. σ) that match the index tuples are enumerated, so the cost
is the product of the two coset sizes rather than k!².
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from sympy import QQ

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, InvalidInputError, check_capacity
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Permutation
from app.models.polynomials import D_FIELD
from app.models.tensors import MatrixTuple, MonomialSpec, TensorOperator
from app.services.combinatorics import all_permutations, class_expand
from app.services.weingarten import wg_characters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivariantProjection:
    """E(A) as an element of Q[S_k]; ``faithful`` is False when d < k and the
    element only represents E(A) modulo the kernel of Q[S_k] → End(V^⊗k)."""

    element: GroupAlgebraElement
    faithful: bool


def permutation_operator(sigma: Permutation, d: int) -> TensorOperator:
    return TensorOperator.permutation(sigma, d)


def operator_of(a: GroupAlgebraElement, d: int) -> TensorOperator:
    """Image of a ∈ Q[S_k] in End(V^⊗k), dim V = d."""
    out = TensorOperator.zero(d, a.k)
    for sigma, coefficient in a.terms.items():
        out = out + permutation_operator(sigma, d).scale(coefficient)
    return out


def trace_against(a: TensorOperator, sigma: Permutation):
    """tr(A∘σ⁻¹) = Σ A[r, c] over entries with c_m = r_{σ(m)}."""
    if sigma.degree != a.k:
        raise DegreeMismatchError(f"σ ∈ S_{sigma.degree} cannot act on a degree-{a.k} operator")
    images = sigma.images
    return sum(
        (value for (row, col), value in a.entries.items() if all(col[m] == row[images[m]] for m in range(a.k))),
        QQ(0),
    )


def phi_map(a: TensorOperator) -> GroupAlgebraElement:
    """Φ(A) = Σ_σ tr(A∘σ⁻¹) σ."""
    check_capacity("k", a.k, settings.MAX_GROUP_DEGREE)
    return GroupAlgebraElement(a.k, {sigma: trace_against(a, sigma) for sigma in all_permutations(a.k)})


def weingarten_element(k: int, d: int) -> GroupAlgebraElement:
    return class_expand(wg_characters(k, d))


def projection_E(a: TensorOperator) -> EquivariantProjection:
    """E(A) = Wg·Φ(A), the Haar average of U^⊗k A U^⊗k⁻¹ written in Q[S_k]."""
    wg = weingarten_element(a.k, a.d)
    return EquivariantProjection(wg * phi_map(a), faithful=a.d >= a.k)


def _matchings(targets: Sequence[int], sources: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Permutations π (0-based image tuples) with targets[ℓ] = sources[π(ℓ)] for every ℓ."""
    k = len(targets)
    used = [False] * k
    images = [0] * k

    def extend(position: int):
        if position == k:
            yield tuple(images)
            return
        for x in range(k):
            if not used[x] and sources[x] == targets[position]:
                used[x] = True
                images[position] = x
                yield from extend(position + 1)
                used[x] = False

    yield from extend(0)


def monomial_integral(spec: MonomialSpec, symbolic: bool = False):
    """Exact value of the monomial integral; a rational function of d when ``symbolic``."""
    if spec.k1 != spec.k2:
        return D_FIELD(0) if symbolic else QQ(0)
    k = spec.k1
    check_capacity("k", k, settings.MAX_INTEGRAL_DEGREE)
    wg = wg_characters(k, None if symbolic else spec.d)
    gammas = [Permutation(images) for images in _matchings(spec.j, spec.i)]
    sigmas = [Permutation(images) for images in _matchings(spec.h, spec.p)]
    total = D_FIELD(0) if symbolic else QQ(0)
    for gamma in gammas:
        for sigma in sigmas:
            total += wg.value((gamma * sigma.inverse).cycle_type)
    logger.debug(f"Integrated {spec} over {len(gammas)}×{len(sigmas)} permutation pairs")
    return total


def _zero_based(indices: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - 1 for x in indices)


def monomial_integral_via_projection(spec: MonomialSpec):
    """tr(e_{i̲,j̲} ∘ E(e_{h̲,p̲})), the same integral read off the equivariant projection."""
    if spec.k1 != spec.k2:
        return QQ(0)
    source = TensorOperator.elementary(spec.d, _zero_based(spec.h), _zero_based(spec.p))
    projected = operator_of(projection_E(source).element, spec.d)
    return (TensorOperator.elementary(spec.d, _zero_based(spec.i), _zero_based(spec.j)) @ projected).trace()


def wg_via_monomial(d: int, tau: Permutation):
    """Wg(d, τ) as the integral with i̲ = h̲ = p̲ = (1, …, k) and j_ℓ = τ(ℓ)."""
    k = tau.degree
    if k > d:
        raise InvalidInputError(f"The monomial route needs k ≤ d, got k={k}, d={d}")
    identity = tuple(range(1, k + 1))
    spec = MonomialSpec(d, tuple(zip(tau.one_line, identity)), tuple(zip(identity, identity)))
    return monomial_integral(spec)


def multilinear_invariant(sigma: Permutation, matrices: Union[MatrixTuple, Sequence]):
    """T_σ(X) = Π over cycles (i₁ … i_h) of σ of tr(X_{i₁}⋯X_{i_h})."""
    matrices = list(matrices)
    if len(matrices) != sigma.degree:
        raise InvalidInputError(f"T_σ for σ ∈ S_{sigma.degree} needs {sigma.degree} matrices, got {len(matrices)}")
    factors = []
    for cycle in sigma.cycles:
        product = matrices[cycle[0]]
        for x in cycle[1:]:
            product = product * matrices[x]
        factors.append(QQ.from_sympy(product.trace()))
    return math.prod(factors, start=QQ(1))
