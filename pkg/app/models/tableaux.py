"""Young tableaux and content vectors."""
from dataclasses import dataclass
from typing import Any, Iterator

from app.core.exceptions import InvalidInputError
from app.models.combinatorics import Partition


@dataclass(frozen=True)
class Tableau:
    """Filling of a Young diagram, row by row. Entries may be integers or letters."""

    rows: tuple[tuple[Any, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows if len(row))
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise InvalidInputError(f"Row lengths must be weakly decreasing: {[list(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> Iterator[tuple[int, int, Any]]:
        """(row, col, value) with 1-based coordinates."""
        for i, row in enumerate(self.rows, start=1):
            for j, value in enumerate(row, start=1):
                yield i, j, value

    def position(self, value: Any) -> tuple[int, int]:
        for i, j, entry in self.entries():
            if entry == value:
                return i, j
        raise InvalidInputError(f"{value!r} does not occur in the tableau")

    def is_semistandard(self) -> bool:
        """Rows weakly increasing, columns strictly increasing."""
        for i, row in enumerate(self.rows):
            for j, value in enumerate(row):
                if j and row[j - 1] > value:
                    return False
                if i and self.rows[i - 1][j] >= value:
                    return False
        return True

    def to_lists(self) -> list[list[Any]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class StandardTableau(Tableau):
    """Entries 1..n, strictly increasing along rows and down columns."""

    def __post_init__(self):
        super().__post_init__()
        values = sorted(v for _, _, v in self.entries())
        if values != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"Entries of a standard tableau must be 1..{len(values)}")
        for i, row in enumerate(self.rows):
            for j, value in enumerate(row):
                if j and row[j - 1] >= value:
                    raise InvalidInputError(f"Row {i + 1} is not increasing: {list(row)}")
                if i and self.rows[i - 1][j] >= value:
                    raise InvalidInputError(f"Column {j + 1} is not increasing at row {i + 1}")

    @classmethod
    def single_row(cls, n: int) -> "StandardTableau":
        return cls((tuple(range(1, n + 1)),))

    def restrict(self, j: int) -> "StandardTableau":
        """Empty every box holding an entry > j."""
        return StandardTableau(tuple(tuple(v for v in row if v <= j) for row in self.rows))


@dataclass(frozen=True)
class ContentVector:
    """c_T(i) = content of the box of T holding i, for i = 1..n."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]
