"""Counting standard Young tableaux three independent ways."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .diagram import Cell, Partition, corners, hook_length, partitions

ENUMERATION_LIMIT = 16


class GuardError(ValueError):
    """Input exceeds a size guard protecting against combinatorial blowup."""


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.entries[i - 1][j - 1]

    def is_standard(self) -> bool:
        n = self.shape.size()
        if tuple(len(r) for r in self.entries) != self.shape.parts:
            return False
        if sorted(v for r in self.entries for v in r) != list(range(1, n + 1)):
            return False
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if j + 1 < len(row) and row[j + 1] <= v:
                    return False
                if i + 1 < len(self.entries) and j < len(self.entries[i + 1]) and self.entries[i + 1][j] <= v:
                    return False
        return True

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:>2}" for v in row) for row in self.entries)


def count_hlf(lam: Partition) -> int:
    """n! divided by the product of hook lengths; the division must be exact."""
    n = lam.size()
    hooks = prod(hook_length(lam, c) for c in lam.cells())
    count, rem = divmod(factorial(n), hooks)
    if rem:
        raise ArithmeticError(f"hook product {hooks} does not divide {n}! for ({lam})")
    return count


@lru_cache(maxsize=None)
def _branching(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    total = 0
    lam = Partition(parts)
    for r, _ in corners(lam):
        smaller = list(parts)
        smaller[r - 1] -= 1
        if not smaller[-1]:
            smaller.pop()
        total += _branching(tuple(smaller))
    return total


def count_branching(lam: Partition) -> int:
    """Sum over corner removals, memoized on the partition's parts."""
    return _branching(lam.parts)


def enumerate_syt(lam: Partition, *, limit: int = ENUMERATION_LIMIT) -> list[Tableau]:
    """Every standard tableau of shape ``lam``.

    Built by placing the largest entry in each corner and recursing on the
    shape with that corner removed.
    """
    n = lam.size()
    if n > limit:
        raise GuardError(f"|λ| = {n} exceeds enumeration limit {limit}")

    def rec(parts: tuple[int, ...]) -> list[list[list[int]]]:
        if not parts:
            return [[]]
        k = sum(parts)
        out = []
        for r, _ in corners(Partition(parts)):
            smaller = list(parts)
            smaller[r - 1] -= 1
            if not smaller[-1]:
                smaller.pop()
            for rows in rec(tuple(smaller)):
                grown = [row[:] for row in rows]
                if r > len(grown):
                    grown.append([])
                grown[r - 1].append(k)
                out.append(grown)
        return out

    tableaux = [Tableau(lam, tuple(tuple(row) for row in rows)) for rows in rec(lam.parts)]
    for t in tableaux:
        if not t.is_standard():
            raise AssertionError(f"generated a non-standard tableau:\n{t}")
    return tableaux


def burnside_check(n: int) -> bool:
    """Whether Σ_{λ⊢n} |SYT(λ)|² equals n!."""
    if not 1 <= n <= 12:
        raise GuardError("burnside_check supports 1 <= n <= 12")
    return sum(count_hlf(lam) ** 2 for lam in partitions(n)) == factorial(n)


def corner_cells(lam: Partition) -> list[Cell]:
    return corners(lam)
