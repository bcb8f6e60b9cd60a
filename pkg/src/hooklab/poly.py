"""Exact rationals and multivariate polynomials in row/column variables.

Polynomials live in a fixed variable universe ``x_1..x_nx, y_1..y_ny`` and
are stored as ``{exponent tuple: Fraction}`` with zero coefficients dropped,
so structural equality is polynomial equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .diagram import Partition
from .rng import RandomSource

BigRational = Fraction

__all__ = [
    "BigRational",
    "MultiPoly",
    "WeightAssignment",
    "parse_rational",
    "parse_weights",
    "poly_arith",
    "evaluate",
    "random_rational",
    "random_weights",
    "format_rational",
]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    """Always ``num/den``, so reports never lose precision or change shape."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class MultiPoly:
    __slots__ = ("nx", "ny", "_terms", "_hash")

    def __init__(self, nx: int, ny: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nx = nx
        self.ny = ny
        self._hash: int | None = None
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != nx + ny:
                raise ValueError(f"exponent {exp} does not fit universe ({nx}, {ny})")
            if coeff:
                clean[exp] = Fraction(coeff)
        self._terms = clean

    # construction helpers

    @classmethod
    def constant(cls, nx: int, ny: int, value: int | Fraction) -> "MultiPoly":
        return cls(nx, ny, {(0,) * (nx + ny): Fraction(value)})

    @classmethod
    def zero(cls, nx: int, ny: int) -> "MultiPoly":
        return cls(nx, ny)

    @classmethod
    def one(cls, nx: int, ny: int) -> "MultiPoly":
        return cls.constant(nx, ny, 1)

    @classmethod
    def x(cls, i: int, nx: int, ny: int) -> "MultiPoly":
        if not 1 <= i <= nx:
            raise ValueError(f"x_{i} not in universe")
        exp = [0] * (nx + ny)
        exp[i - 1] = 1
        return cls(nx, ny, {tuple(exp): Fraction(1)})

    @classmethod
    def y(cls, j: int, nx: int, ny: int) -> "MultiPoly":
        if not 1 <= j <= ny:
            raise ValueError(f"y_{j} not in universe")
        exp = [0] * (nx + ny)
        exp[nx + j - 1] = 1
        return cls(nx, ny, {tuple(exp): Fraction(1)})

    @classmethod
    def variables(cls, nx: int, ny: int) -> tuple[list["MultiPoly"], list["MultiPoly"]]:
        return (
            [cls.x(i, nx, ny) for i in range(1, nx + 1)],
            [cls.y(j, nx, ny) for j in range(1, ny + 1)],
        )

    # inspection

    @property
    def universe(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lexicographic order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self.terms())

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.universe != self.universe:
                raise ValueError(f"variable universe mismatch: {self.universe} vs {other.universe}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nx, self.ny, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return MultiPoly(self.nx, self.ny, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nx, self.ny, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(a + b for a, b in zip(ea, eb))
                out[exp] = out.get(exp, 0) + ca * cb
        return MultiPoly(self.nx, self.ny, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self.nx, self.ny)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nx, self.ny, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.universe == other.universe and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nx, self.ny, frozenset(self._terms.items())))
        return self._hash

    # evaluation and rendering

    def evaluate(self, weights: "WeightAssignment") -> Fraction:
        return evaluate(self, weights)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms():
            factors = []
            for idx, e in enumerate(exp):
                if not e:
                    continue
                name = f"x{idx + 1}" if idx < self.nx else f"y{idx - self.nx + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.nx}, {self.ny}, {str(self)!r})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if a.universe != b.universe:
        raise ValueError(f"variable universe mismatch: {a.universe} vs {b.universe}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class WeightAssignment:
    """Row weights ``x`` and column weights ``y`` (1-based in formulas)."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    positive: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        object.__setattr__(self, "y", tuple(Fraction(v) for v in self.y))
        if self.positive and any(v <= 0 for v in self.x + self.y):
            raise ValueError("positive weight assignment contains a non-positive entry")

    @classmethod
    def ones(cls, lam: Partition) -> "WeightAssignment":
        return cls((Fraction(1),) * lam.num_rows, (Fraction(1),) * lam.num_cols)

    def check_shape(self, lam: Partition) -> "WeightAssignment":
        if len(self.x) != lam.num_rows or len(self.y) != lam.num_cols:
            raise ValueError(
                f"weights have {len(self.x)} rows/{len(self.y)} columns, "
                f"partition ({lam}) needs {lam.num_rows}/{lam.num_cols}"
            )
        return self

    def to_json(self) -> dict:
        return {"x": [format_rational(v) for v in self.x], "y": [format_rational(v) for v in self.y]}


def parse_weights(text: str, count: int) -> tuple[Fraction, ...]:
    """``"1,3/2,2"`` or the keyword ``"ones"``; must have ``count`` entries."""
    text = text.strip()
    if text == "ones":
        return (Fraction(1),) * count
    values = tuple(parse_rational(tok) for tok in text.split(",")) if text else ()
    if len(values) != count:
        raise ValueError(f"expected {count} weights, got {len(values)} in {text!r}")
    return values


def evaluate(p: MultiPoly, weights: WeightAssignment) -> Fraction:
    if len(weights.x) < p.nx or len(weights.y) < p.ny:
        raise ValueError(
            f"weights cover {len(weights.x)}/{len(weights.y)} variables, polynomial needs {p.nx}/{p.ny}"
        )
    point = list(weights.x[: p.nx]) + list(weights.y[: p.ny])
    total = Fraction(0)
    for exp, coeff in p._terms.items():
        term = coeff
        for v, e in zip(point, exp):
            if e:
                term *= v**e
        total += term
    return total


def random_rational(rng: RandomSource, bound: int = 100) -> Fraction:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    num = rng.randint(1, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_weights(lam: Partition, rng: RandomSource, bound: int = 100) -> WeightAssignment:
    return WeightAssignment(
        tuple(random_rational(rng, bound) for _ in range(lam.num_rows)),
        tuple(random_rational(rng, bound) for _ in range(lam.num_cols)),
    )


def span_sum(values: Sequence, a: int, b: int, zero):
    """``values_a + ... + values_b`` (1-based, inclusive); ``zero`` if empty."""
    if a < 1 and a <= b:
        raise IndexError(f"span {a}..{b} starts before index 1")
    total = zero
    for k in range(a, b + 1):
        total = total + values[k - 1]
    return total


def product(items: Iterable, one):
    out = one
    for item in items:
        out = out * item
    return out
