"""Partitions, Young-diagram box statistics and permutations of S_k."""
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from app.core.exceptions import InvalidInputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Used both as a Young diagram (irreducible representations) and as the
    cycle type of a permutation (conjugacy classes).
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"Partition parts must be positive: {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"Partition parts must be weakly decreasing: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts given in any order, e.g. the increasing form "[1,1,2]"."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("[]()").strip()
        if not body:
            return cls(())
        try:
            parts = [int(tok) for tok in re.split(r"[,\s]+", body) if tok]
        except ValueError:
            raise InvalidInputError(f"Cannot parse partition from {text!r}")
        return cls.of(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    @property
    def transposition_length(self) -> int:
        """|σ| = k − c(σ) for any σ of this cycle type."""
        return self.size - self.height

    @property
    def sign(self) -> int:
        return -1 if self.transposition_length % 2 else 1

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Box coordinates (i, j), 1-based, row by row."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def is_hook(self) -> bool:
        return self.height <= 1 or all(p == 1 for p in self.parts[1:])

    @property
    def increasing_key(self) -> tuple[int, ...]:
        """Sort key of the published tables: parts written increasing, compared lexicographically."""
        return tuple(sorted(self.parts))

    def class_label(self) -> str:
        return "c_{" + ",".join(str(p) for p in self.increasing_key) + "}"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class BoxStats:
    row: int
    col: int
    hook: int
    content: int


@dataclass(frozen=True, order=True)
class Permutation:
    """Element of S_k in one-line form.

    ``images`` is 0-based: the permutation sends i to images[i]. Text I/O is
    1-based. Products compose right to left, (στ)(x) = σ(τ(x)).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInputError(f"Not a permutation: {[x + 1 for x in images]}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(k)))

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> "Permutation":
        return cls(tuple(int(v) - 1 for v in values))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], k: Optional[int] = None) -> "Permutation":
        cycles = [[int(x) for x in c] for c in cycles]
        largest = max((x for c in cycles for x in c), default=0)
        k = largest if k is None else k
        if largest > k:
            raise InvalidInputError(f"Cycle entry {largest} exceeds degree {k}")
        images = list(range(k))
        seen: set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if a < 1 or a in seen:
                    raise InvalidInputError(f"Invalid cycle notation {cycles}")
                seen.add(a)
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def transposition(cls, i: int, j: int, k: int) -> "Permutation":
        return cls.from_cycles([(i, j)], k)

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "Permutation":
        text = text.strip()
        if text.startswith("("):
            cycles = [[int(x) for x in re.split(r"[,\s]+", body.strip()) if x] for body in _CYCLE_RE.findall(text)]
            return cls.from_cycles(cycles, k)
        try:
            values = [int(x) for x in re.split(r"[,\s]+", text) if x]
        except ValueError:
            raise InvalidInputError(f"Cannot parse permutation from {text!r}")
        perm = cls.from_one_line(values)
        if k is not None and perm.degree != k:
            raise InvalidInputError(f"Permutation {text!r} is not in S_{k}")
        return perm

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def one_line(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise InvalidInputError(f"Cannot compose S_{self.degree} with S_{other.degree}")
        return Permutation(tuple(self.images[x] for x in other.images))

    @cached_property
    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles with 0-based entries, each starting at its smallest element, fixed points included."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return tuple(out)

    @cached_property
    def cycle_type(self) -> Partition:
        return Partition(tuple(sorted((len(c) for c in self.cycles), reverse=True)))

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def length(self) -> int:
        """Minimal number of transpositions with product σ."""
        return self.degree - self.cycle_count

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def conjugate_by(self, other: "Permutation") -> "Permutation":
        return other * self * other.inverse

    def cycle_notation(self) -> str:
        moved = [c for c in self.cycles if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in moved)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.one_line)


def cycle_count_of(images: Sequence[int]) -> int:
    """Number of cycles of a raw 0-based image tuple; hot-loop helper."""
    seen = [False] * len(images)
    count = 0
    for start in range(len(images)):
        if not seen[start]:
            count += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = images[x]
    return count


def cycle_type_of(images: Sequence[int]) -> Partition:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if not seen[start]:
            n = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = images[x]
                n += 1
            lengths.append(n)
    return Partition(tuple(sorted(lengths, reverse=True)))
