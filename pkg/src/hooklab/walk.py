"""Weighted and modified hook walks.

Exact absorption distributions come from a dynamic program over cells in
decreasing row+col order (every step strictly increases row+col).  Closed
forms, projection probabilities and a seeded Monte Carlo simulator sit on
top of that.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .diagram import (
    Cell,
    Partition,
    block_corner,
    corners,
    is_corner,
    modified_hook,
    staircase,
    staircase_reduction,
)
from .identities import product_rs
from .poly import WeightAssignment, format_rational, span_sum
from .rng import RandomSource
from .syt import GuardError

PROJECTION_LIMIT = 14
_ONE64 = 1 << 64


class ReductionError(ArithmeticError):
    """Block sums of the staircase reduction do not reproduce the start normalization."""


@dataclass(frozen=True)
class CornerDistribution:
    """Absorption masses per corner, exact or as Monte Carlo hit counts.

    Exactly one of ``mass`` and ``hits`` is set.  Corners are listed by
    increasing row, i.e. top-right first.
    """

    corners: tuple[Cell, ...]
    mass: tuple[Fraction, ...] | None = None
    hits: tuple[int, ...] | None = None
    samples: int | None = None

    def __post_init__(self) -> None:
        if (self.mass is None) == (self.hits is None):
            raise ValueError("give exactly one of mass or hits")
        values = self.mass if self.mass is not None else self.hits
        if len(values) != len(self.corners):
            raise ValueError("one value per corner expected")
        if self.mass is not None and sum(self.mass, Fraction(0)) != 1:
            raise ValueError("exact masses must sum to 1")
        if self.hits is not None and sum(self.hits) != self.samples:
            raise ValueError("hit counts must sum to the sample count")

    @property
    def is_exact(self) -> bool:
        return self.mass is not None

    def __getitem__(self, corner: tuple[int, int]):
        idx = self.corners.index(Cell(*corner))
        return self.mass[idx] if self.is_exact else self.hits[idx]

    def as_dict(self) -> dict[Cell, Fraction | int]:
        return dict(zip(self.corners, self.mass if self.is_exact else self.hits))

    def frequencies(self) -> list[float]:
        if self.is_exact:
            return [float(m) for m in self.mass]
        return [h / self.samples for h in self.hits]

    def to_json(self) -> dict:
        if self.is_exact:
            masses = [format_rational(m) for m in self.mass]
        else:
            masses = [{"hits": h, "samples": self.samples} for h in self.hits]
        return {"corners": [list(c) for c in self.corners], "mass": masses}


@dataclass(frozen=True)
class ProjectionQuery:
    """A walk start together with the row set ``I`` and column set ``J`` it visits."""

    start: Cell
    I: tuple[int, ...]
    J: tuple[int, ...]

    @classmethod
    def make(cls, I, J) -> "ProjectionQuery":
        I, J = tuple(sorted(set(I))), tuple(sorted(set(J)))
        if not I or not J:
            raise ValueError("projections must be nonempty")
        return cls(Cell(I[0], J[0]), I, J)

    @property
    def corner(self) -> Cell:
        return Cell(self.I[-1], self.J[-1])

    def validate(self, lam: Partition) -> None:
        if tuple(sorted(set(self.I))) != self.I or tuple(sorted(set(self.J))) != self.J:
            raise ValueError("projections must be strictly increasing")
        if self.start != (self.I[0], self.J[0]):
            raise ValueError(f"start {tuple(self.start)} is not (min I, min J)")
        if not is_corner(lam, self.corner):
            raise ValueError(f"(max I, max J) = {tuple(self.corner)} is not a corner of ({lam})")


# ---------------------------------------------------------------------------
# step rules

def _start_weights(lam: Partition, w: WeightAssignment) -> list[tuple[Cell, Fraction]]:
    return [(c, w.x[c.row - 1] * w.y[c.col - 1]) for c in lam.cells()]


def start_normalization(lam: Partition, w: WeightAssignment) -> Fraction:
    return sum((m for _, m in _start_weights(lam, w)), Fraction(0))


def step_targets(lam: Partition, w: WeightAssignment, cell: Cell, modified: bool) -> list[tuple[Cell, Fraction]]:
    """Possible next cells with their unnormalized weights; empty at absorbing cells."""
    i, j = cell
    if modified:
        targets = sorted(modified_hook(lam, cell))
    else:
        targets = [Cell(k, j) for k in range(i + 1, lam.col(j) + 1)] + [
            Cell(i, l) for l in range(j + 1, lam.row(i) + 1)
        ]
    return [(t, w.x[t.row - 1] if t.col == j else w.y[t.col - 1]) for t in targets]


def absorbing_corner(lam: Partition, cell: Cell, modified: bool) -> Cell | None:
    if modified:
        return block_corner(lam, cell)
    return cell if is_corner(lam, cell) else None


# ---------------------------------------------------------------------------
# exact distributions and closed forms

def absorption_table(lam: Partition, w: WeightAssignment, *, modified: bool = False) -> dict[Cell, list[Fraction]]:
    """P(absorb at each corner | walk is at cell), for every cell."""
    w.check_shape(lam)
    cs = corners(lam)
    index = {c: k for k, c in enumerate(cs)}
    table: dict[Cell, list[Fraction]] = {}
    for cell in sorted(lam.cells(), key=lambda c: -(c.row + c.col)):
        stop = absorbing_corner(lam, cell, modified)
        vec = [Fraction(0)] * len(cs)
        if stop is not None:
            vec[index[stop]] = Fraction(1)
        else:
            targets = step_targets(lam, w, cell, modified)
            total = sum((wt for _, wt in targets), Fraction(0))
            for t, wt in targets:
                p = wt / total
                for k, v in enumerate(table[t]):
                    if v:
                        vec[k] += p * v
        table[cell] = vec
    return table


def exact_distribution(lam: Partition, w: WeightAssignment, *, modified: bool = False) -> CornerDistribution:
    table = absorption_table(lam, w, modified=modified)
    starts = _start_weights(lam, w)
    total = sum((m for _, m in starts), Fraction(0))
    cs = corners(lam)
    mass = [Fraction(0)] * len(cs)
    for cell, m in starts:
        for k, v in enumerate(table[cell]):
            mass[k] += m * v
    return CornerDistribution(tuple(cs), mass=tuple(v / total for v in mass))


def closed_form_probability(lam: Partition, w: WeightAssignment, corner: tuple[int, int]) -> Fraction:
    return product_rs(lam, w, corner) / start_normalization(lam, w)


def closed_form_distribution(lam: Partition, w: WeightAssignment) -> CornerDistribution:
    cs = corners(lam)
    return CornerDistribution(tuple(cs), mass=tuple(closed_form_probability(lam, w, c) for c in cs))


def block_sums(lam: Partition, w: WeightAssignment) -> tuple[list[Fraction], list[Fraction]]:
    """The sums X_k over row blocks U_k and Y_k over column blocks V_k."""
    w.check_shape(lam)
    red = staircase_reduction(lam)
    X = [sum((w.x[i - 1] for i in block), Fraction(0)) for block in red.row_blocks]
    Y = [sum((w.y[j - 1] for j in block), Fraction(0)) for block in red.col_blocks]
    return X, Y


def check_block_conservation(lam: Partition, w: WeightAssignment) -> tuple[Fraction, Fraction]:
    """Both sides of Σ_{p+q<=c+1} X_p Y_q = Σ_{(p,q) in λ} x_p y_q."""
    X, Y = block_sums(lam, w)
    c = len(X)
    lhs = sum((X[p - 1] * Y[q - 1] for p in range(1, c + 1) for q in range(1, c + 2 - p)), Fraction(0))
    return lhs, start_normalization(lam, w)


def modified_closed_form(lam: Partition, w: WeightAssignment, r: int) -> Fraction:
    """Absorption probability of the ``r``-th corner (top-right first) for the modified walk.

    Computed as the ordinary walk on the staircase (c, …, 1) whose k-th row
    and column carry the block sums X_k and Y_k.
    """
    X, Y = block_sums(lam, w)
    c = len(X)
    if not 1 <= r <= c:
        raise ValueError(f"corner index {r} outside 1..{c}")
    lhs, rhs = check_block_conservation(lam, w)
    if lhs != rhs:
        raise ReductionError(f"block sums give {lhs}, cell sums give {rhs} for ({lam})")
    return closed_form_probability(staircase(c), WeightAssignment(tuple(X), tuple(Y)), (r, c + 1 - r))


def modified_formula(lam: Partition, w: WeightAssignment, r: int) -> Fraction:
    """The displayed block-sum product, written out directly."""
    X, Y = block_sums(lam, w)
    c = len(X)
    s = c + 1 - r
    zero = Fraction(0)
    value = X[r - 1] * Y[s - 1] / start_normalization(lam, w)
    for i in range(1, r):
        value *= 1 + X[i - 1] / (span_sum(X, i + 1, r, zero) + span_sum(Y, s + 1, c + 1 - i, zero))
    for j in range(1, s):
        value *= 1 + Y[j - 1] / (span_sum(X, r + 1, c + 1 - j, zero) + span_sum(Y, j + 1, s, zero))
    return value


def modified_closed_distribution(lam: Partition, w: WeightAssignment) -> CornerDistribution:
    cs = corners(lam)
    return CornerDistribution(tuple(cs), mass=tuple(modified_closed_form(lam, w, r) for r in range(1, len(cs) + 1)))


# ---------------------------------------------------------------------------
# projections

def projection_probability(lam: Partition, w: WeightAssignment, q: ProjectionQuery) -> Fraction:
    q.validate(lam)
    w.check_shape(lam)
    r, s = q.corner
    zero = Fraction(0)
    value = Fraction(1)
    for i in q.I[1:]:
        value *= w.x[i - 1]
    for i in q.I[:-1]:
        value /= span_sum(w.x, i + 1, r, zero) + span_sum(w.y, s + 1, lam.row(i), zero)
    for j in q.J[1:]:
        value *= w.y[j - 1]
    for j in q.J[:-1]:
        value /= span_sum(w.x, r + 1, lam.col(j), zero) + span_sum(w.y, j + 1, s, zero)
    return value


def brute_force_projection(lam: Partition, w: WeightAssignment, q: ProjectionQuery) -> Fraction:
    """Sum over every interleaving of the row and column steps of the step probabilities."""
    q.validate(lam)
    w.check_shape(lam)
    if len(q.I) + len(q.J) > PROJECTION_LIMIT:
        raise GuardError(f"|I| + |J| = {len(q.I) + len(q.J)} exceeds {PROJECTION_LIMIT}")
    zero = Fraction(0)

    @lru_cache(maxsize=None)
    def rec(a: int, b: int) -> Fraction:
        # currently at (I[a], J[b])
        if a == len(q.I) - 1 and b == len(q.J) - 1:
            return Fraction(1)
        i, j = q.I[a], q.J[b]
        hook = span_sum(w.x, i + 1, lam.col(j), zero) + span_sum(w.y, j + 1, lam.row(i), zero)
        total = Fraction(0)
        if a + 1 < len(q.I):
            total += w.x[q.I[a + 1] - 1] / hook * rec(a + 1, b)
        if b + 1 < len(q.J):
            total += w.y[q.J[b + 1] - 1] / hook * rec(a, b + 1)
        return total

    return rec(0, 0)


def _subsets_between(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Increasing tuples starting at ``lo`` and ending at ``hi``."""
    middle = range(lo + 1, hi)
    for k in range(len(middle) + 1):
        for mid in itertools.combinations(middle, k):
            yield (lo, *mid, hi) if lo != hi else (lo,)


def queries_for_corner(corner: tuple[int, int]) -> Iterator[ProjectionQuery]:
    r, s = corner
    for i1 in range(1, r + 1):
        for j1 in range(1, s + 1):
            for I in _subsets_between(i1, r):
                for J in _subsets_between(j1, s):
                    yield ProjectionQuery(Cell(i1, j1), I, J)


def well_formed_queries(lam: Partition) -> Iterator[ProjectionQuery]:
    for corner in corners(lam):
        yield from queries_for_corner(corner)


def assembled_probability(lam: Partition, w: WeightAssignment, corner: tuple[int, int]) -> Fraction:
    """Start probability times projection probability, summed over all (I, J) ending at ``corner``."""
    norm = start_normalization(lam, w)
    total = Fraction(0)
    for q in queries_for_corner(corner):
        start = w.x[q.start.row - 1] * w.y[q.start.col - 1] / norm
        total += start * projection_probability(lam, w, q)
    return total


# ---------------------------------------------------------------------------
# Monte Carlo

def fixed_point_bounds(weights: Sequence[Fraction]) -> np.ndarray:
    """Cumulative 64-bit thresholds for sampling proportionally to ``weights``.

    Each share of 2^64 is floored, and the leftover units go to the largest
    fractional remainders, so the widths sum to exactly 2^64.  Returns the
    interior bounds (all but the final 2^64) as uint64.
    """
    total = sum(weights, Fraction(0))
    scaled = [wt * _ONE64 / total for wt in weights]
    widths = [math.floor(v) for v in scaled]
    leftover = _ONE64 - sum(widths)
    order = sorted(range(len(widths)), key=lambda k: (-(scaled[k] - widths[k]), k))
    for k in order[:leftover]:
        widths[k] += 1
    bounds = list(itertools.accumulate(widths))
    return np.array(bounds[:-1], dtype=np.uint64)


def _pick(bounds: np.ndarray, draws: np.ndarray) -> np.ndarray:
    return np.searchsorted(bounds, draws, side="right")


def _simulate_shard(lam, w, modified, samples, rng: RandomSource, plan) -> np.ndarray:
    cells, start_bounds, moves, stops, ncorners = plan
    pos = _pick(start_bounds, rng.uint64(samples))
    hits = np.zeros(ncorners, dtype=np.int64)
    for cid in range(len(cells)):
        mask = pos == cid
        k = int(mask.sum())
        if not k:
            continue
        if cid in stops:
            hits[stops[cid]] += k
        else:
            bounds, target_ids = moves[cid]
            pos[mask] = target_ids[_pick(bounds, rng.uint64(k))]
    return hits


def _simulation_plan(lam: Partition, w: WeightAssignment, modified: bool):
    # cells in increasing row+col order, so moves always go to later ids
    cells = sorted(lam.cells(), key=lambda c: (c.row + c.col, c.row))
    cid = {c: k for k, c in enumerate(cells)}
    cs = corners(lam)
    cindex = {c: k for k, c in enumerate(cs)}
    start_bounds = fixed_point_bounds([w.x[c.row - 1] * w.y[c.col - 1] for c in cells])
    moves, stops = {}, {}
    for c in cells:
        stop = absorbing_corner(lam, c, modified)
        if stop is not None:
            stops[cid[c]] = cindex[stop]
        else:
            targets = step_targets(lam, w, c, modified)
            moves[cid[c]] = (
                fixed_point_bounds([wt for _, wt in targets]),
                np.array([cid[t] for t, _ in targets], dtype=np.int64),
            )
    return cells, start_bounds, moves, stops, len(cs)


def shard_sizes(samples: int, shards: int) -> list[int]:
    base, extra = divmod(samples, shards)
    return [base + (k < extra) for k in range(shards)]


def simulate(
    lam: Partition,
    w: WeightAssignment,
    *,
    modified: bool = False,
    samples: int,
    seed: int = 0,
    shards: int = 1,
    rng: RandomSource | None = None,
) -> CornerDistribution:
    """Monte Carlo corner frequencies.

    Shard ``k`` draws from ``RandomSource(seed, stream=k)`` unless a single
    ``rng`` is supplied (then ``shards`` must be 1).  Counts are summed, so
    the result depends only on (seed, samples, shards).
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if shards < 1:
        raise ValueError("shards must be positive")
    if rng is not None and shards != 1:
        raise ValueError("an explicit rng cannot be shared between shards")
    w.check_shape(lam)
    plan = _simulation_plan(lam, w, modified)
    sources = [rng] if rng is not None else [RandomSource(seed, k) for k in range(shards)]
    hits = sum(
        _simulate_shard(lam, w, modified, n, src, plan)
        for n, src in zip(shard_sizes(samples, len(sources)), sources)
        if n
    )
    return CornerDistribution(tuple(corners(lam)), hits=tuple(int(h) for h in hits), samples=samples)


def z_scores(estimate: CornerDistribution, exact: CornerDistribution) -> list[float]:
    """(frequency − p) / sqrt(p(1 − p)/N) per corner; 0 when p is 0 or 1 and matched exactly."""
    out = []
    n = estimate.samples
    for freq, p in zip(estimate.frequencies(), exact.mass):
        var = float(p * (1 - p)) / n
        diff = freq - float(p)
        out.append(diff / math.sqrt(var) if var > 0 else (0.0 if diff == 0 else math.inf))
    return out
