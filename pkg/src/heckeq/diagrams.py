"""Integer partitions as Young diagrams.

Boxes are indexed matrix-style with 1-based (row, column) pairs, so the
content of box (i, j) is j - i and sign conventions match throughout the
package.  Branching (adding or removing a corner box), standard-tableau
chains, and the branching recursion for irrep dimensions all live here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache

__all__ = [
    "YoungDiagram",
    "TableauPath",
    "partitions",
    "paths",
    "dimension",
    "export_dimension_memo",
    "import_dimension_memo",
]


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing positive row lengths; labels an irrep."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a Young diagram needs at least one row")
        for r in rows:
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise ValueError(f"row lengths must be positive integers, got {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing, got {rows}")

    @classmethod
    def from_string(cls, text: str) -> "YoungDiagram":
        """Parse comma-separated row lengths, e.g. ``4,1,1``."""
        try:
            rows = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse diagram {text!r}") from exc
        return cls(rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    def contents(self) -> list[int]:
        """Contents j - i of all boxes, row by row."""
        return [j - i for i, length in enumerate(self.rows, start=1) for j in range(1, length + 1)]

    def diagonal_counts(self) -> dict[int, int]:
        """Map content k -> number of boxes on the k-th diagonal."""
        return dict(Counter(self.contents()))

    def branch_down(self) -> list["YoungDiagram"]:
        """All diagrams obtained by removing one corner box.

        Ordered by the row the box is removed from.  The one-box diagram
        has nothing below it and yields the empty list.
        """
        out = []
        rows = self.rows
        for i, length in enumerate(rows):
            below = rows[i + 1] if i + 1 < len(rows) else 0
            if length > below:
                if length == 1:
                    shrunk = rows[:i]
                else:
                    shrunk = rows[:i] + (length - 1,) + rows[i + 1 :]
                if shrunk:
                    out.append(YoungDiagram(shrunk))
        return out

    def branch_up(self) -> list["YoungDiagram"]:
        """All diagrams obtained by adding one box, ordered by row."""
        out = []
        rows = self.rows
        for i, length in enumerate(rows):
            above = rows[i - 1] if i > 0 else None
            if above is None or length < above:
                out.append(YoungDiagram(rows[:i] + (length + 1,) + rows[i + 1 :]))
        out.append(YoungDiagram(rows + (1,)))
        return out

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"YoungDiagram(({', '.join(str(r) for r in self.rows)}))"


# A standard-tableau chain [1] = G_1 < G_2 < ... < G_n = g, each step
# adding one box.
TableauPath = tuple[YoungDiagram, ...]


@cache
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[YoungDiagram]:
    """All partitions of n, in descending lexicographic order.

    This fixed order is the canonical row/column order for every table
    in the package.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    return [YoungDiagram(rows) for rows in _partition_tuples(n, n)]


def paths(g: YoungDiagram) -> list[TableauPath]:
    """All standard-tableau chains from the one-box diagram up to g.

    The number of chains is the dimension of the irrep labeled by g;
    this enumeration is exponential and intended for small n.
    """
    if g.n == 1:
        return [(g,)]
    return [chain + (g,) for parent in g.branch_down() for chain in paths(parent)]


_DIMENSION_MEMO: dict[tuple[int, ...], int] = {}


def dimension(g: YoungDiagram) -> int:
    """Irrep dimension via the branching recursion.

    dim(g) = sum of dim over all diagrams covered by g, with the one-box
    diagram as base case.  The memo is filled idempotently, so concurrent
    use at worst recomputes a value.
    """
    memo = _DIMENSION_MEMO
    got = memo.get(g.rows)
    if got is not None:
        return got
    if g.n == 1:
        value = 1
    else:
        value = sum(dimension(parent) for parent in g.branch_down())
    memo[g.rows] = value
    return value


def export_dimension_memo() -> dict[str, int]:
    """Snapshot the dimension memo for cache persistence."""
    return {",".join(map(str, rows)): value for rows, value in _DIMENSION_MEMO.items()}


def import_dimension_memo(data: dict[str, int]) -> None:
    """Merge a previously exported memo; malformed entries are skipped."""
    for key, value in data.items():
        try:
            diagram = YoungDiagram.from_string(key)
        except (ValueError, AttributeError):
            continue
        if isinstance(value, int) and value >= 1:
            _DIMENSION_MEMO.setdefault(diagram.rows, value)
