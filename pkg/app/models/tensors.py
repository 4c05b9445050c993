"""Operators on V^{⊗k}, tuples of d×d matrices, monomial specifications and
multilinear tensor-valued polynomials.

Multi-indices are 0-based tuples internally; ``MonomialSpec`` keeps the
1-based indices it was written with.
"""
import itertools
import re
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Optional, Sequence

from sympy import QQ, ImmutableMatrix, zeros

from app.core.exceptions import DegreeMismatchError, InvalidInputError
from app.models.combinatorics import Permutation

MultiIndex = tuple[int, ...]
Word = tuple[int, ...]


def elementary_matrix(d: int, row: int, col: int) -> ImmutableMatrix:
    """e_{row,col} with 0-based indices."""
    m = zeros(d, d)
    m[row, col] = 1
    return ImmutableMatrix(m)


def _nonzero_entries(matrix) -> list[tuple[int, int, Any]]:
    return [
        (a, b, QQ.convert(matrix[a, b]))
        for a in range(matrix.rows)
        for b in range(matrix.cols)
        if matrix[a, b] != 0
    ]


@dataclass(frozen=True)
class TensorOperator:
    """Element of End(V)^{⊗k} = End(V^{⊗k}) as a sparse map (row, col) → rational."""

    d: int
    k: int
    entries: Mapping[tuple[MultiIndex, MultiIndex], Any]

    def __post_init__(self):
        cleaned = {}
        for (row, col), value in sorted(self.entries.items()):
            if len(row) != self.k or len(col) != self.k:
                raise DegreeMismatchError(f"Multi-index {row},{col} does not have length {self.k}")
            if any(not 0 <= x < self.d for x in row + col):
                raise InvalidInputError(f"Multi-index {row},{col} out of range for d={self.d}")
            if value:
                cleaned[(row, col)] = value
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def zero(cls, d: int, k: int) -> "TensorOperator":
        return cls(d, k, {})

    @classmethod
    def identity(cls, d: int, k: int) -> "TensorOperator":
        return cls(d, k, {(idx, idx): QQ(1) for idx in itertools.product(range(d), repeat=k)})

    @classmethod
    def elementary(cls, d: int, rows: MultiIndex, cols: MultiIndex) -> "TensorOperator":
        """e_{rows, cols} = e_{r_1 c_1} ⊗ … ⊗ e_{r_k c_k} (0-based)."""
        return cls(d, len(rows), {(tuple(rows), tuple(cols)): QQ(1)})

    @classmethod
    def from_matrices(cls, matrices: Sequence) -> "TensorOperator":
        """X_1 ⊗ … ⊗ X_k for square sympy matrices of a common size."""
        if not matrices:
            raise InvalidInputError("At least one tensor factor is required")
        d = matrices[0].rows
        factors = [_nonzero_entries(m) for m in matrices]
        entries: dict = {}
        for choice in itertools.product(*factors):
            value = QQ(1)
            for _, _, v in choice:
                value *= v
            key = (tuple(a for a, _, _ in choice), tuple(b for _, b, _ in choice))
            entries[key] = entries.get(key, 0) + value
        return cls(d, len(matrices), entries)

    @classmethod
    def permutation(cls, sigma: Permutation, d: int) -> "TensorOperator":
        """σ·(v_1 ⊗ … ⊗ v_k) = v_{σ⁻¹(1)} ⊗ … ⊗ v_{σ⁻¹(k)}."""
        inverse = sigma.inverse.images
        k = sigma.degree
        return cls(d, k, {
            (tuple(col[inverse[m]] for m in range(k)), col): QQ(1)
            for col in itertools.product(range(d), repeat=k)
        })

    def _check(self, other: "TensorOperator") -> None:
        if (self.d, self.k) != (other.d, other.k):
            raise DegreeMismatchError(
                f"Operators on (C^{self.d})^⊗{self.k} and (C^{other.d})^⊗{other.k} cannot be combined"
            )

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """self ∘ other."""
        self._check(other)
        by_row: dict[MultiIndex, list] = {}
        for (row, col), value in other.entries.items():
            by_row.setdefault(row, []).append((col, value))
        out: dict = {}
        for (row, middle), a in self.entries.items():
            for col, b in by_row.get(middle, ()):
                out[(row, col)] = out.get((row, col), 0) + a * b
        return TensorOperator(self.d, self.k, out)

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        return self.compose(other)

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        out = dict(self.entries)
        for key, value in other.entries.items():
            out[key] = out.get(key, 0) + value
        return TensorOperator(self.d, self.k, out)

    def __neg__(self) -> "TensorOperator":
        return self.scale(-1)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def scale(self, factor: Any) -> "TensorOperator":
        return TensorOperator(self.d, self.k, {key: factor * value for key, value in self.entries.items()})

    def trace(self):
        return sum((value for (row, col), value in self.entries.items() if row == col), QQ(0))

    def entry(self, row: MultiIndex, col: MultiIndex):
        return self.entries.get((tuple(row), tuple(col)), QQ(0))

    def is_scalar(self) -> bool:
        if any(row != col for row, col in self.entries):
            return False
        values = set(self.entries.values())
        return not values or (len(values) == 1 and len(self.entries) == self.d ** self.k)


@dataclass(frozen=True)
class MatrixTuple:
    """An ordered tuple of exact d×d matrices (sympy ``ImmutableMatrix``)."""

    d: int
    matrices: tuple

    def __post_init__(self):
        matrices = tuple(ImmutableMatrix(m) for m in self.matrices)
        for m in matrices:
            if m.shape != (self.d, self.d):
                raise DegreeMismatchError(f"Expected {self.d}×{self.d} matrices, got {m.rows}×{m.cols}")
        object.__setattr__(self, "matrices", matrices)

    @classmethod
    def elementary_basis(cls, d: int) -> "MatrixTuple":
        """(e_11, e_12, …, e_dd) in lexicographic order; its determinant as d² vectors is 1."""
        return cls(d, tuple(elementary_matrix(d, a, b) for a in range(d) for b in range(d)))

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, index: int):
        return self.matrices[index]

    def elementary_pairs(self) -> Optional[list[tuple[int, int]]]:
        """(row, col) of every matrix if all are elementary matrices e_{ab}, else None."""
        pairs = []
        for m in self.matrices:
            entries = _nonzero_entries(m)
            if len(entries) != 1 or entries[0][2] != 1:
                return None
            pairs.append(entries[0][:2])
        return pairs

    def replace(self, index: int, matrix) -> "MatrixTuple":
        matrices = list(self.matrices)
        matrices[index] = matrix
        return MatrixTuple(self.d, tuple(matrices))


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for token in text.split():
        parts = [p for p in re.split(r"[,;]", token) if p]
        if len(parts) != 2:
            raise InvalidInputError(f"Expected row,col pairs like '1,1 2,2', got {text!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidInputError(f"Non-integer index in {text!r}")
    return tuple(pairs)


@dataclass(frozen=True)
class MonomialSpec:
    """The monomial Π_ℓ u_{j_ℓ,h_ℓ} · Π_ℓ ū_{i_ℓ,p_ℓ} in the entries of a d×d unitary.

    ``u`` holds the pairs (j_ℓ, h_ℓ), ``ubar`` the pairs (i_ℓ, p_ℓ), 1-based.
    """

    d: int
    u: tuple[tuple[int, int], ...]
    ubar: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.d < 1:
            raise InvalidInputError(f"Dimension must be positive, got d={self.d}")
        u = tuple((int(a), int(b)) for a, b in self.u)
        ubar = tuple((int(a), int(b)) for a, b in self.ubar)
        for a, b in u + ubar:
            if not (1 <= a <= self.d and 1 <= b <= self.d):
                raise InvalidInputError(f"Index ({a},{b}) out of range 1..{self.d}")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "ubar", ubar)

    @classmethod
    def parse(cls, d: int, u: str, ubar: str) -> "MonomialSpec":
        return cls(d, _parse_pairs(u), _parse_pairs(ubar))

    @property
    def k1(self) -> int:
        return len(self.u)

    @property
    def k2(self) -> int:
        return len(self.ubar)

    @property
    def j(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.u)

    @property
    def h(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.u)

    @property
    def i(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.ubar)

    @property
    def p(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.ubar)

    def relabel(self, sigma: Permutation) -> "MonomialSpec":
        """Reorder the k factors of both products by the same permutation."""
        if sigma.degree != self.k1 or self.k1 != self.k2:
            raise DegreeMismatchError("Relabeling needs a permutation of the common degree")
        return MonomialSpec(self.d, tuple(self.u[x] for x in sigma.images), tuple(self.ubar[x] for x in sigma.images))

    def rename_indices(self, rows: Permutation, cols: Permutation) -> "MonomialSpec":
        """Apply permutations of 1..d to every row index and every column index."""
        if rows.degree != self.d or cols.degree != self.d:
            raise DegreeMismatchError(f"Index renaming needs permutations of 1..{self.d}")

        def rename(pairs):
            return tuple((rows(a - 1) + 1, cols(b - 1) + 1) for a, b in pairs)

        return MonomialSpec(self.d, rename(self.u), rename(self.ubar))

    def __str__(self) -> str:
        left = "".join(f"u{a}{b}" for a, b in self.u)
        right = "".join(f"ū{a}{b}" for a, b in self.ubar)
        return left + right


@dataclass(frozen=True)
class TensorMonomialPolynomial:
    """Σ coefficient · m_1 ⊗ … ⊗ m_k, each m_j a word in the variables 1..n."""

    k: int
    n: int
    terms: tuple[tuple[Any, tuple[Word, ...]], ...]

    def __post_init__(self):
        collected: dict[tuple[Word, ...], Any] = {}
        for coefficient, words in self.terms:
            words = tuple(tuple(int(v) for v in word) for word in words)
            if len(words) != self.k:
                raise DegreeMismatchError(f"Term {words} does not have {self.k} tensor factors")
            if any(not 1 <= v <= self.n for word in words for v in word):
                raise InvalidInputError(f"Term {words} uses a variable outside 1..{self.n}")
            collected[words] = collected.get(words, 0) + coefficient
        terms = tuple((c, words) for words, c in sorted(collected.items()) if c)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, n: int, words: Sequence[Sequence[int]], coefficient: Any = 1) -> "TensorMonomialPolynomial":
        return cls(len(words), n, ((coefficient, tuple(tuple(w) for w in words)),))

    def __add__(self, other: "TensorMonomialPolynomial") -> "TensorMonomialPolynomial":
        if (self.k, self.n) != (other.k, other.n):
            raise DegreeMismatchError("Polynomials differ in tensor degree or variable count")
        return TensorMonomialPolynomial(self.k, self.n, self.terms + other.terms)

    def scale(self, factor: Any) -> "TensorMonomialPolynomial":
        return TensorMonomialPolynomial(self.k, self.n, tuple((factor * c, w) for c, w in self.terms))

    def is_multilinear_in(self, variables: Iterable[int]) -> bool:
        variables = set(variables)
        for _, words in self.terms:
            occurrences = [v for word in words for v in word if v in variables]
            if sorted(occurrences) != sorted(variables):
                return False
        return True

    def is_zero(self) -> bool:
        return not self.terms
