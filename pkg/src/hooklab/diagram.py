"""Partitions, Young diagrams, hooks and corners.

All indices are 1-based; row ``i`` grows downward and column ``j`` grows to
the right (English convention).  A :class:`Cell` is a plain named tuple so it
can be used freely as a dict key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple


class InvalidCellError(ValueError):
    """Raised when a cell does not lie in (or is not a corner of) a diagram."""


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"6,6,5,3,2"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_rows(self) -> int:
        return len(self.parts)

    @property
    def num_cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def row(self, i: int) -> int:
        """λ_i, with λ_i = 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """λ'_j, with λ'_j = 0 past the last column."""
        conj = self.conjugate_parts
        return conj[j - 1] if 1 <= j <= len(conj) else 0

    @cached_property
    def conjugate_parts(self) -> tuple[int, ...]:
        width = self.num_cols
        return tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1))

    def conjugate(self) -> "Partition":
        return Partition(self.conjugate_parts)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def cells(self) -> list[Cell]:
        """All cells in row-major order."""
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def is_staircase(self) -> bool:
        d = len(self.parts)
        return self.parts == tuple(range(d, 0, -1))


def staircase(d: int) -> Partition:
    return Partition(tuple(range(d, 0, -1)))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


def partitions_up_to(n: int, *, include_empty: bool = False) -> Iterator[Partition]:
    for k in range(0 if include_empty else 1, n + 1):
        yield from partitions(k)


def _require(lam: Partition, cell: tuple[int, int]) -> Cell:
    if cell not in lam:
        raise InvalidCellError(f"cell {tuple(cell)} is not in the diagram of ({lam})")
    return Cell(*cell)


def hook_length(lam: Partition, cell: tuple[int, int]) -> int:
    i, j = _require(lam, cell)
    return lam.row(i) + lam.col(j) - i - j + 1


def hook_cells(lam: Partition, cell: tuple[int, int]) -> frozenset[Cell]:
    """Cells weakly right of and weakly below ``cell``, including itself."""
    i, j = _require(lam, cell)
    arm = {Cell(i, l) for l in range(j, lam.row(i) + 1)}
    leg = {Cell(k, j) for k in range(i, lam.col(j) + 1)}
    return frozenset(arm | leg)


def is_corner(lam: Partition, cell: tuple[int, int]) -> bool:
    i, j = cell
    return cell in lam and lam.row(i) == j and lam.col(j) == i


def corners(lam: Partition) -> list[Cell]:
    """Removable cells ordered by increasing row (top-right corner first)."""
    out = []
    for i, p in enumerate(lam.parts, 1):
        if i == len(lam.parts) or lam.parts[i] < p:
            out.append(Cell(i, p))
    return out


def addable_corners(lam: Partition) -> list[Cell]:
    """Cells outside ``lam`` whose addition still gives a Young diagram."""
    out = [Cell(1, lam.num_cols + 1)]
    for i in range(2, lam.num_rows + 2):
        if lam.row(i) < lam.row(i - 1):
            out.append(Cell(i, lam.row(i) + 1))
    return out


def non_corner_cells(lam: Partition) -> list[Cell]:
    return [c for c in lam.cells() if not is_corner(lam, c)]


def dor(lam: Partition, corner: tuple[int, int]) -> frozenset[Cell]:
    """Non-corner cells sharing neither the row nor the column of ``corner``."""
    if not is_corner(lam, corner):
        raise InvalidCellError(f"{tuple(corner)} is not a corner of ({lam})")
    r, s = corner
    return frozenset(c for c in non_corner_cells(lam) if c.row != r and c.col != s)


def dor_prime(lam: Partition, addable: tuple[int, int]) -> frozenset[Cell]:
    """All cells of ``lam`` off the row and column of an addable cell."""
    if Cell(*addable) not in addable_corners(lam):
        raise InvalidCellError(f"{tuple(addable)} is not an addable cell of ({lam})")
    r, s = addable
    return frozenset(c for c in lam.cells() if c.row != r and c.col != s)


def modified_hook(lam: Partition, cell: tuple[int, int]) -> frozenset[Cell]:
    """The truncated hook used by the modified weighted hook walk.

    With ``r1`` the row of the first corner at or below row ``i`` and ``s2``
    the column of the first corner at or right of column ``j``, this is
    ``{(k, j): r1 < k <= λ'_j} ∪ {(i, l): s2 < l <= λ_i}``.
    """
    i, j = _require(lam, cell)
    cs = corners(lam)
    r1 = min(r for r, _ in cs if r >= i)
    s2 = min(s for _, s in cs if s >= j)
    down = {Cell(k, j) for k in range(r1 + 1, lam.col(j) + 1)}
    right = {Cell(i, l) for l in range(s2 + 1, lam.row(i) + 1)}
    return frozenset(down | right)


@dataclass(frozen=True)
class StaircaseReduction:
    """Blocks of equal rows (``row_blocks``) and equal columns (``col_blocks``).

    ``row_blocks[k-1]`` is U_k and ``col_blocks[k-1]`` is V_k; both are listed
    top-to-bottom / left-to-right, so block ``k`` of rows together with block
    ``c + 1 - k`` of columns holds the ``k``-th corner.
    """

    row_blocks: tuple[tuple[int, ...], ...]
    col_blocks: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.row_blocks)

    def row_block_of(self, i: int) -> int:
        for k, block in enumerate(self.row_blocks, 1):
            if i in block:
                return k
        raise InvalidCellError(f"row {i} out of range")

    def col_block_of(self, j: int) -> int:
        for k, block in enumerate(self.col_blocks, 1):
            if j in block:
                return k
        raise InvalidCellError(f"column {j} out of range")


def _group_equal(values: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    blocks: list[list[int]] = []
    for idx, v in enumerate(values, 1):
        if blocks and values[blocks[-1][0] - 1] == v:
            blocks[-1].append(idx)
        else:
            blocks.append([idx])
    return tuple(tuple(b) for b in blocks)


def staircase_reduction(lam: Partition) -> StaircaseReduction:
    if lam.size() == 0:
        raise ValueError("staircase reduction needs a nonempty partition")
    return StaircaseReduction(_group_equal(lam.parts), _group_equal(lam.conjugate_parts))


def block_corner(lam: Partition, cell: tuple[int, int]) -> Cell | None:
    """Corner credited when the modified walk stops at ``cell``.

    The modified hook is empty exactly on the cells of the blocks
    U_k × V_{c+1-k}; those cells absorb the walk into corner ``k``.  Returns
    ``None`` for cells from which the walk can still move.
    """
    i, j = _require(lam, cell)
    red = staircase_reduction(lam)
    k, l = red.row_block_of(i), red.col_block_of(j)
    if k + l != red.c + 1:
        return None
    return Cell(red.row_blocks[k - 1][-1], red.col_blocks[l - 1][-1])
