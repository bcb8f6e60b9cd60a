"""Label arrangements F_λ, G_λ and the weight-preserving bijection between them.

An arrangement puts one label in every non-corner cell.  A row label ``x_k``
in cell (i, j) is read as an arrow to (k, j), a column label ``y_l`` as an
arrow to (i, l).  Elements of F_λ also carry a special cell (p, q) standing
for the pair x_p y_q; elements of G_λ carry a corner (r, s) standing for
x_r y_s.  Summing the label monomials over F_λ (resp. G_λ) gives the left
(resp. right) side of the polynomial weighted branching rule.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

from .diagram import Cell, Partition, corners, is_corner, non_corner_cells
from .poly import MultiPoly
from .syt import GuardError

ROW = "x"
COL = "y"
ENUMERATION_LIMIT = 8


class Label(NamedTuple):
    kind: str  # ROW or COL
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def target(self, cell: tuple[int, int]) -> Cell:
        i, j = cell
        return Cell(self.index, j) if self.kind == ROW else Cell(i, self.index)


class InvalidArrangementError(ValueError):
    pass


def _freeze(labels: Mapping[tuple[int, int], Label]) -> tuple[tuple[Cell, Label], ...]:
    return tuple(sorted((Cell(*c), Label(*l)) for c, l in labels.items()))


@dataclass(frozen=True)
class ArrangementF:
    shape: Partition
    special: Cell
    labels: tuple[tuple[Cell, Label], ...]

    @classmethod
    def make(cls, shape: Partition, special: tuple[int, int], labels: Mapping) -> "ArrangementF":
        return cls(shape, Cell(*special), _freeze(labels))

    def label_map(self) -> dict[Cell, Label]:
        return dict(self.labels)

    def __getitem__(self, cell: tuple[int, int]) -> Label:
        return self.label_map()[Cell(*cell)]

    def special_labels(self) -> tuple[Label, Label]:
        return Label(ROW, self.special.row), Label(COL, self.special.col)

    def to_json(self) -> dict:
        return {"shape": str(self.shape), "special": list(self.special), **_labels_json(self.labels)}


@dataclass(frozen=True)
class ArrangementG:
    shape: Partition
    corner: Cell
    labels: tuple[tuple[Cell, Label], ...]

    @classmethod
    def make(cls, shape: Partition, corner: tuple[int, int], labels: Mapping) -> "ArrangementG":
        return cls(shape, Cell(*corner), _freeze(labels))

    def label_map(self) -> dict[Cell, Label]:
        return dict(self.labels)

    def __getitem__(self, cell: tuple[int, int]) -> Label:
        return self.label_map()[Cell(*cell)]

    def special_labels(self) -> tuple[Label, Label]:
        return Label(ROW, self.corner.row), Label(COL, self.corner.col)

    def to_json(self) -> dict:
        return {"shape": str(self.shape), "corner": list(self.corner), **_labels_json(self.labels)}


def _labels_json(labels) -> dict:
    return {
        "labels": [
            {"row": c.row, "col": c.col, "kind": "Row" if l.kind == ROW else "Col", "index": l.index}
            for c, l in labels
        ]
    }


def arrangement_from_json(data: dict) -> ArrangementF | ArrangementG:
    shape = Partition.parse(data["shape"])
    labels = {
        Cell(e["row"], e["col"]): Label(ROW if e["kind"] == "Row" else COL, e["index"]) for e in data["labels"]
    }
    if "special" in data:
        return ArrangementF.make(shape, data["special"], labels)
    return ArrangementG.make(shape, data["corner"], labels)


@dataclass(frozen=True)
class HookWalkPath:
    cells: tuple[Cell, ...]

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def corner(self) -> Cell:
        return self.cells[-1]

    @property
    def rows(self) -> tuple[int, ...]:
        """Vertical projection I, in increasing order."""
        return tuple(sorted({c.row for c in self.cells}))

    @property
    def cols(self) -> tuple[int, ...]:
        """Horizontal projection J, in increasing order."""
        return tuple(sorted({c.col for c in self.cells}))

    def steps(self) -> list[tuple[Cell, Cell]]:
        return list(zip(self.cells, self.cells[1:]))


# ---------------------------------------------------------------------------
# allowed labels and validation

def f_choices(lam: Partition, cell: tuple[int, int]) -> list[Label]:
    """Labels allowed in a non-corner cell of an F-arrangement (rows first)."""
    i, j = cell
    return [Label(ROW, k) for k in range(i + 1, lam.col(j) + 1)] + [
        Label(COL, l) for l in range(j + 1, lam.row(i) + 1)
    ]


def g_choices(lam: Partition, corner: tuple[int, int], cell: tuple[int, int]) -> list[Label]:
    """Labels allowed in a non-corner cell of a G-arrangement with the given corner."""
    r, s = corner
    i, j = cell
    if j == s:
        return [Label(ROW, k) for k in range(i, lam.col(j) + 1)] + [
            Label(COL, l) for l in range(s + 1, lam.row(i) + 1)
        ]
    if i == r:
        return [Label(ROW, k) for k in range(r + 1, lam.col(j) + 1)] + [
            Label(COL, l) for l in range(j, lam.row(i) + 1)
        ]
    return f_choices(lam, cell)


def is_valid_F(f: ArrangementF) -> bool:
    lam = f.shape
    if f.special not in lam:
        return False
    labels = f.label_map()
    if set(labels) != set(non_corner_cells(lam)):
        return False
    return all(label in f_choices(lam, cell) for cell, label in labels.items())


def is_valid_G(g: ArrangementG) -> bool:
    lam = g.shape
    if not is_corner(lam, g.corner):
        return False
    labels = g.label_map()
    if set(labels) != set(non_corner_cells(lam)):
        return False
    return all(label in g_choices(lam, g.corner, cell) for cell, label in labels.items())


# ---------------------------------------------------------------------------
# enumeration

def _guard(lam: Partition, limit: int) -> None:
    if lam.size() > limit:
        raise GuardError(f"|λ| = {lam.size()} exceeds arrangement enumeration limit {limit}")


def iter_F(lam: Partition, *, limit: int = ENUMERATION_LIMIT) -> Iterator[ArrangementF]:
    _guard(lam, limit)
    cells = non_corner_cells(lam)
    options = [f_choices(lam, c) for c in cells]
    for special in lam.cells():
        for combo in itertools.product(*options):
            yield ArrangementF(lam, special, tuple(zip(cells, combo)))


def iter_G(lam: Partition, *, limit: int = ENUMERATION_LIMIT) -> Iterator[ArrangementG]:
    _guard(lam, limit)
    cells = non_corner_cells(lam)
    for corner in corners(lam):
        options = [g_choices(lam, corner, c) for c in cells]
        for combo in itertools.product(*options):
            yield ArrangementG(lam, corner, tuple(zip(cells, combo)))


def enumerate_F(lam: Partition, *, limit: int = ENUMERATION_LIMIT) -> list[ArrangementF]:
    return list(iter_F(lam, limit=limit))


def enumerate_G(lam: Partition, *, limit: int = ENUMERATION_LIMIT) -> list[ArrangementG]:
    return list(iter_G(lam, limit=limit))


def count_F(lam: Partition) -> int:
    """|F_λ| without enumerating."""
    total = lam.size()
    for c in non_corner_cells(lam):
        total *= len(f_choices(lam, c))
    return total


def count_G(lam: Partition) -> int:
    total = 0
    for corner in corners(lam):
        term = 1
        for c in non_corner_cells(lam):
            term *= len(g_choices(lam, corner, c))
        total += term
    return total


def random_F(lam: Partition, rng) -> ArrangementF:
    labels = {c: rng.choice(f_choices(lam, c)) for c in non_corner_cells(lam)}
    return ArrangementF.make(lam, rng.choice(lam.cells()), labels)


# ---------------------------------------------------------------------------
# the bijection

def walk_from_F(f: ArrangementF) -> HookWalkPath:
    """Follow arrows from the special cell until a corner is reached."""
    labels = f.label_map()
    cur = f.special
    path = [cur]
    while not is_corner(f.shape, cur):
        cur = labels[cur].target(cur)
        path.append(cur)
    return HookWalkPath(tuple(path))


class Move(NamedTuple):
    label: Label
    source: str | Cell  # a cell, or "special" for x_p / y_q
    dest: Cell  # may be the virtual (r, 0) or (0, s)


def phi_moves(f: ArrangementF) -> tuple[HookWalkPath, list[Move]]:
    """The walk of ``f`` and every label relocation performed by φ.

    A label landing on the corner (r, s) is passed on to the virtual cell
    (r, 0) if it is x_r, or (0, s) if it is y_s; these two become the special
    labels of the image.
    """
    path = walk_from_F(f)
    labels = f.label_map()
    r, s = path.corner
    moves: list[Move] = []

    def to(dest: Cell, label: Label, source) -> None:
        if dest == (r, s):
            dest = Cell(r, 0) if label.kind == ROW else Cell(0, s)
        moves.append(Move(label, source, dest))

    for cur, nxt in path.steps():
        i, j = cur
        if nxt.row == i:
            to(Cell(r, nxt.col), labels[cur], cur)
            if i < r:
                to(cur, labels[Cell(r, j)], Cell(r, j))
        else:
            to(Cell(nxt.row, s), labels[cur], cur)
            if j < s:
                to(cur, labels[Cell(i, s)], Cell(i, s))
    p, q = f.special
    to(Cell(p, s), Label(ROW, p), "special")
    to(Cell(r, q), Label(COL, q), "special")
    return path, moves


def phi(f: ArrangementF, *, check: bool = True) -> ArrangementG:
    if check and not is_valid_F(f):
        raise InvalidArrangementError(f"not a valid F-arrangement: {f.to_json()}")
    path, moves = phi_moves(f)
    r, s = path.corner
    labels = f.label_map()
    placed: dict[Cell, Label] = {}
    for mv in moves:
        if mv.dest in placed:
            raise AssertionError(f"two labels relocated to {mv.dest}")
        placed[mv.dest] = mv.label
    specials = {placed.pop(Cell(r, 0), None), placed.pop(Cell(0, s), None)}
    if specials != {Label(ROW, r), Label(COL, s)}:
        raise AssertionError(f"corner received {specials}, expected x{r}, y{s}")
    labels.update(placed)
    g = ArrangementG.make(f.shape, (r, s), labels)
    if check and not is_valid_G(g):
        raise AssertionError(f"φ produced an invalid G-arrangement: {g.to_json()}")
    return g


def _reconstruct_walk(g: ArrangementG) -> HookWalkPath:
    r, s = g.corner
    labels = g.label_map()
    rows = [i for i in range(1, r) if labels[Cell(i, s)] == Label(ROW, i)] + [r]
    cols = [j for j in range(1, s) if labels[Cell(r, j)] == Label(COL, j)] + [s]
    cur = Cell(rows[0], cols[0])
    path = [cur]
    while cur != (r, s):
        i, j = cur
        if i == r:
            horizontal = True
        elif j == s:
            horizontal = False
        else:
            # where the label at cur came from tells which way the walk left cur
            lab = labels[cur]
            horizontal = lab.index > r if lab.kind == ROW else lab.index <= s
        if horizontal:
            later = [c for c in cols if c > j]
            if not later:
                raise InvalidArrangementError(f"walk reconstruction stuck at {cur}")
            cur = Cell(i, later[0])
        else:
            later = [k for k in rows if k > i]
            if not later:
                raise InvalidArrangementError(f"walk reconstruction stuck at {cur}")
            cur = Cell(later[0], j)
        path.append(cur)
    return HookWalkPath(tuple(path))


def phi_inv(g: ArrangementG, *, check: bool = True) -> ArrangementF:
    """Rebuild the walk from the shaded projections, then undo the shift."""
    if check and not is_valid_G(g):
        raise InvalidArrangementError(f"not a valid G-arrangement: {g.to_json()}")
    r, s = g.corner
    path = _reconstruct_walk(g)
    glabels = g.label_map()
    labels = dict(glabels)
    for cur, nxt in path.steps():
        i, j = cur
        if nxt.row == i:
            labels[cur] = Label(COL, nxt.col)
            if i < r:
                labels[Cell(r, j)] = glabels[cur]
        else:
            labels[cur] = Label(ROW, nxt.row)
            if j < s:
                labels[Cell(i, s)] = glabels[cur]
    f = ArrangementF.make(g.shape, path.start, labels)
    if check and not is_valid_F(f):
        raise AssertionError(f"φ⁻¹ produced an invalid F-arrangement: {f.to_json()}")
    return f


# ---------------------------------------------------------------------------
# weights

def label_multiset(a: ArrangementF | ArrangementG) -> Counter:
    return Counter([l for _, l in a.labels] + list(a.special_labels()))


def _exponent(a: ArrangementF | ArrangementG) -> tuple[int, ...]:
    nx = a.shape.num_rows
    exp = [0] * (nx + a.shape.num_cols)
    for label, mult in label_multiset(a).items():
        exp[label.index - 1 if label.kind == ROW else nx + label.index - 1] += mult
    return tuple(exp)


def monomial(a: ArrangementF | ArrangementG) -> MultiPoly:
    return MultiPoly(a.shape.num_rows, a.shape.num_cols, {_exponent(a): 1})


def monomial_sum(arrangements) -> MultiPoly | None:
    """Sum of monomials, or ``None`` for an empty iterable."""
    counts: Counter = Counter()
    shape = None
    for a in arrangements:
        shape = a.shape
        counts[_exponent(a)] += 1
    if shape is None:
        return None
    return MultiPoly(shape.num_rows, shape.num_cols, dict(counts))
