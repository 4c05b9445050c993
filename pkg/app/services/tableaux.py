"""Standard Young tableaux, Robinson–Schensted–Knuth, good permutations and straightening.

RSK uses row insertion: a letter bumps the leftmost entry strictly larger
than itself. The pile-by-columns presentation of the same game produces the
transposed shape when it reads the word from the right, so only shapes and
bijectivity are compared across the two.
"""
import bisect
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional, Sequence, Union

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, InvalidInputError, check_capacity
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import D_POLY, D_RING
from app.models.tableaux import ContentVector, StandardTableau, Tableau
from app.services.characters import dim_irrep
from app.services.combinatorics import all_permutations, partitions_of

logger = logging.getLogger(__name__)

Word = Union[Permutation, str, Sequence[Any]]


@dataclass(frozen=True)
class RskResult:
    p: Tableau
    q: StandardTableau

    @property
    def shape(self) -> Partition:
        return self.q.shape


def enumerate_syt(shape: Partition) -> list[StandardTableau]:
    check_capacity("|λ|", shape.size, settings.MAX_TABLEAU_SIZE)
    return [StandardTableau(rows) for rows in _syt(shape.parts)]


@lru_cache(maxsize=None)
def _syt(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(parts)
    if n == 0:
        return ((),)
    out = []
    # the largest entry sits in a removable corner
    for i, length in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if length == below:
            continue
        smaller = tuple(p for p in parts[:i] + (length - 1,) + parts[i + 1:] if p)
        for rows in _syt(smaller):
            padded = list(rows) + [()] * (len(parts) - len(rows))
            padded[i] = padded[i] + (n,)
            out.append(tuple(padded))
    return tuple(sorted(out))


def _letters(word: Word) -> list:
    if isinstance(word, Permutation):
        return list(word.one_line)
    return list(word)


def rsk(word: Word) -> RskResult:
    """Row-insertion RSK of a permutation (one-line form) or of a word of comparable letters."""
    p: list[list] = []
    q: list[list[int]] = []
    for step, letter in enumerate(_letters(word), start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([letter])
                q.append([step])
                break
            current = p[row]
            position = bisect.bisect_right(current, letter)
            if position == len(current):
                current.append(letter)
                q[row].append(step)
                break
            letter, current[position] = current[position], letter
            row += 1
    rows = tuple(tuple(r) for r in p)
    insertion = StandardTableau(rows) if isinstance(word, Permutation) else Tableau(rows)
    return RskResult(insertion, StandardTableau(tuple(tuple(r) for r in q)))


def rsk_inverse(p: Tableau, q: StandardTableau) -> tuple:
    """The word whose RSK pair is (P, Q)."""
    if p.shape != q.shape:
        raise DegreeMismatchError(f"P has shape {p.shape} but Q has shape {q.shape}")
    if not p.is_semistandard():
        raise InvalidInputError(f"P is not semistandard: {p}")
    rows = p.to_lists()
    recording = q.to_lists()
    word = []
    for step in range(q.size, 0, -1):
        row = next(i for i, r in enumerate(recording) if r and r[-1] == step)
        recording[row].pop()
        letter = rows[row].pop()
        for above in range(row - 1, -1, -1):
            current = rows[above]
            # rightmost entry strictly smaller than the letter moving up
            position = bisect.bisect_left(current, letter) - 1
            letter, current[position] = current[position], letter
        word.append(letter)
    return tuple(reversed(word))


def rsk_inverse_permutation(p: StandardTableau, q: StandardTableau) -> Permutation:
    return Permutation.from_one_line(rsk_inverse(p, q))


def longest_decreasing(word: Word) -> int:
    """Length of a longest strictly decreasing subsequence (patience sorting on the reversed word)."""
    piles: list = []
    for letter in reversed(_letters(word)):
        position = bisect.bisect_left(piles, letter)
        if position == len(piles):
            piles.append(letter)
        else:
            piles[position] = letter
    return len(piles)


def is_d_good(sigma: Permutation, d: int) -> bool:
    """No decreasing subsequence of length d."""
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    return longest_decreasing(sigma) <= d - 1


def good_basis(k: int, d: int) -> list[Permutation]:
    """The (d+1)-good permutations of S_k, a basis of Σ_k(V) for dim V = d."""
    return [sigma for sigma in all_permutations(k) if is_d_good(sigma, d + 1)]


def commutant_dimension(k: int, d: int) -> int:
    """dim Σ_k(V) = Σ_{ht(λ) ≤ d} χ_λ(1)²."""
    return sum(dim_irrep(shape) ** 2 for shape in partitions_of(k) if shape.height <= d)


def _first_descending(images: tuple[int, ...], length: int) -> list[int]:
    """Lexicographically first positions of a strictly decreasing subsequence of the given length."""
    n = len(images)
    longest = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if images[j] < images[i]:
                longest[i] = max(longest[i], longest[j] + 1)
    positions: list[int] = []
    start, bound = 0, n
    for needed in range(length, 0, -1):
        chosen = next(i for i in range(start, n) if images[i] < bound and longest[i] >= needed)
        positions.append(chosen)
        start, bound = chosen + 1, images[chosen]
    return positions


def straighten(a: GroupAlgebraElement, d: int) -> GroupAlgebraElement:
    """Rewrite a on the (d+1)-good permutations without changing its action on V^{⊗k}, dim V = d.

    The leading bad term σ (lexicographically largest) is replaced through
    Σ_ρ sign(ρ) σρ = 0, ρ running over the permutations of a (d+1)-element
    decreasing pattern of σ; every other term of that relation is
    lexicographically smaller than σ.
    """
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    check_capacity("k", a.k, settings.MAX_STRAIGHTEN_DEGREE)
    if d >= a.k:
        return a
    patterns = [rho for rho in all_permutations(d + 1) if not rho.is_identity()]
    terms = dict(a.terms)
    bad = {sigma for sigma in terms if longest_decreasing(sigma) > d}
    steps = 0
    while bad:
        sigma = max(bad)
        bad.remove(sigma)
        coefficient = terms.pop(sigma)
        positions = _first_descending(sigma.images, d + 1)
        values = [sigma.images[p] for p in positions]
        for rho in patterns:
            images = list(sigma.images)
            for m, position in enumerate(positions):
                images[position] = values[rho(m)]
            tau = Permutation(tuple(images))
            updated = terms.get(tau, 0) - rho.sign * coefficient
            if updated:
                terms[tau] = updated
                if longest_decreasing(tau) > d:
                    bad.add(tau)
            else:
                terms.pop(tau, None)
                bad.discard(tau)
        steps += 1
    logger.debug(f"Straightened an element of Q[S_{a.k}] for d={d} in {steps} steps")
    return GroupAlgebraElement(a.k, terms)


def content_vector(tableau: StandardTableau) -> ContentVector:
    return ContentVector(tuple(col - row for row, col in (tableau.position(i) for i in range(1, tableau.size + 1))))


def tableau_from_contents(contents: Union[ContentVector, Sequence[int]]) -> StandardTableau:
    """Place i on the first free box of diagonal c_T(i); the box must be addable."""
    values = contents.values if isinstance(contents, ContentVector) else tuple(contents)
    rows: list[list[int]] = []
    on_diagonal: dict[int, int] = {}
    for i, content in enumerate(values, start=1):
        t = on_diagonal.get(content, 0)
        row, col = (t, t + content) if content >= 0 else (t - content, t)
        addable = (
            row <= len(rows)
            and (len(rows[row]) if row < len(rows) else 0) == col
            and (row == 0 or len(rows[row - 1]) > col)
        )
        if not addable:
            raise InvalidInputError(f"Content sequence {list(values)} is not the content vector of a standard tableau")
        if row == len(rows):
            rows.append([])
        rows[row].append(i)
        on_diagonal[content] = t + 1
    return StandardTableau(tuple(tuple(r) for r in rows))


def content_product(tableau: StandardTableau, d: Optional[int] = None):
    """d·Π_{i≥2}(d + c_T(i)); equals r_λ(d) for every standard tableau of shape λ."""
    contents = content_vector(tableau).values
    if d is None:
        out = D_RING.one
        for c in contents:
            out *= D_POLY + c
        return out
    out = 1
    for c in contents:
        out *= d + c
    return out
