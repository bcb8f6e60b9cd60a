"""Evaluators and checkers for the hook-length identities.

Each identity is written once, generically over "ring elements": the same
side-builders run on :class:`~fractions.Fraction` weights (exact evaluation)
or on :class:`~hooklab.poly.MultiPoly` variables (full symbolic expansion).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Sequence

from .diagram import (
    Cell,
    Partition,
    addable_corners,
    corners,
    dor,
    dor_prime,
    hook_length,
    is_corner,
    non_corner_cells,
    partitions,
    staircase,
)
from .poly import (
    MultiPoly,
    WeightAssignment,
    format_rational,
    product,
    random_rational,
    random_weights,
    span_sum,
)
from .rng import RandomSource
from .syt import GuardError

SYMBOLIC_LIMIT = 8
MAX_RESAMPLES = 32

MAIN_VARIANTS = ("a", "b", "c", "d")
WBRHL_VARIANTS = ("eq4", "eq5", "eq5_conj", "eq6")
KEROV_VARIANTS = ("a", "b", "c", "d")
ALPHA_BETA_VARIANTS = ("sum_n", "row_m", "col_l", "combined")


class DegenerateError(ArithmeticError):
    """A denominator vanished at the chosen evaluation point."""


@dataclass
class IdentityReport:
    identity: str
    partition: Partition | None
    mode: str
    passed: bool
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity,
            "partition": None if self.partition is None else str(self.partition),
            "mode": self.mode,
            "passed": self.passed,
        }
        if self.details:
            out["details"] = self.details
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _render(value) -> str:
    return format_rational(value) if isinstance(value, (int, Fraction)) else str(value)


def _report(identity, lam, mode, lhs, rhs, point: dict | None = None, **details) -> IdentityReport:
    passed = lhs == rhs
    witness = None
    if not passed:
        witness = {"lhs": _render(lhs), "rhs": _render(rhs)}
        if point is not None:
            witness["point"] = point
    if mode == "evaluated":
        details.setdefault("value", _render(lhs))
    return IdentityReport(identity, lam, mode, passed, witness, details)


# ---------------------------------------------------------------------------
# generic building blocks

def _inner_hook(lam: Partition, x, y, zero, cell):
    """x_{i+1}+…+x_{λ'_j} + y_{j+1}+…+y_{λ_i}: the hook of (i,j) without (i,j)."""
    i, j = cell
    return span_sum(x, i + 1, lam.col(j), zero) + span_sum(y, j + 1, lam.row(i), zero)


def _full_hook(lam: Partition, x, y, zero, cell):
    i, j = cell
    return span_sum(x, i, lam.col(j), zero) + span_sum(y, j, lam.row(i), zero)


def _row_factor(lam, x, y, zero, i, r, s, first: int):
    # x_first..x_r + y_{s+1}..y_{λ_i}, first ∈ {i, i+1}
    return span_sum(x, first, r, zero) + span_sum(y, s + 1, lam.row(i), zero)


def _col_factor(lam, x, y, zero, j, r, s, first: int):
    return span_sum(y, first, s, zero) + span_sum(x, r + 1, lam.col(j), zero)


def wbrhl_sides(lam: Partition, x: Sequence, y: Sequence, zero, one, variant: str = "eq4"):
    """Both sides of the polynomial form of the weighted branching rule.

    ``eq4`` is the main identity; ``eq5``, ``eq5_conj`` and ``eq6`` are the
    polynomial forms of parts (b), (c) and (d) of the rational identities.
    """
    if variant not in WBRHL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    base = product((_inner_hook(lam, x, y, zero, c) for c in non_corner_cells(lam)), one)
    cells = lam.cells()
    if variant == "eq4":
        prefactor = zero
        for p, q in cells:
            prefactor = prefactor + x[p - 1] * y[q - 1]
    elif variant == "eq5":
        prefactor = span_sum(x, 1, lam.num_rows, zero)
    elif variant == "eq5_conj":
        prefactor = span_sum(y, 1, lam.num_cols, zero)
    else:
        prefactor = one
    lhs = prefactor * base

    row_start = 2 if variant in ("eq5_conj", "eq6") else 1
    col_start = 2 if variant in ("eq5", "eq6") else 1
    rhs = zero
    for r, s in corners(lam):
        term = product((_inner_hook(lam, x, y, zero, c) for c in sorted(dor(lam, (r, s)))), one)
        if variant == "eq4":
            term = term * x[r - 1] * y[s - 1]
        elif variant == "eq5":
            term = term * x[r - 1]
        elif variant == "eq5_conj":
            term = term * y[s - 1]
        # the shifted product ranges come from cancelling the (b)/(c)/(d) denominators
        for i in range(row_start, r + (row_start - 1)):
            term = term * _row_factor(lam, x, y, zero, i, r, s, i)
        for j in range(col_start, s + (col_start - 1)):
            term = term * _col_factor(lam, x, y, zero, j, r, s, j)
        rhs = rhs + term
    return lhs, rhs


def complementary_sides(lam: Partition, x: Sequence, y: Sequence, zero, one, *, printed: bool = False):
    """Both sides of the complementary weighted branching rule.

    The sum runs over addable cells ``(r, s)``.  With ``printed=True`` the
    row/column factors use the upper limits ``x_r`` and ``y_s`` exactly as
    typeset in the source, which is false already for λ = (1); it then needs
    one extra row and column weight.
    """
    lhs = product((_full_hook(lam, x, y, zero, c) for c in lam.cells()), one)
    rhs = zero
    for r, s in addable_corners(lam):
        term = product((_full_hook(lam, x, y, zero, c) for c in sorted(dor_prime(lam, (r, s)))), one)
        top = r if printed else r - 1
        right = s if printed else s - 1
        for i in range(1, r):
            term = term * (span_sum(x, i + 1, top, zero) + span_sum(y, s, lam.row(i), zero))
        for j in range(1, s):
            term = term * (span_sum(x, r, lam.col(j), zero) + span_sum(y, j + 1, right, zero))
        rhs = rhs + term
    return lhs, rhs


def _symbolic_vars(lam: Partition, extra: int = 0):
    nx, ny = lam.num_rows + extra, lam.num_cols + extra
    xs, ys = MultiPoly.variables(nx, ny)
    return xs, ys, MultiPoly.zero(nx, ny), MultiPoly.one(nx, ny)


def wbrhl_polynomials(lam: Partition, variant: str = "eq4") -> tuple[MultiPoly, MultiPoly]:
    xs, ys, zero, one = _symbolic_vars(lam)
    return wbrhl_sides(lam, xs, ys, zero, one, variant)


def wbrhl_degree(lam: Partition) -> int:
    """Common total degree |λ| + 2 − |corners| of both sides of the main identity."""
    return lam.size() + 2 - len(corners(lam))


# ---------------------------------------------------------------------------
# rational identities

def product_rs(lam: Partition, w: WeightAssignment, corner: tuple[int, int]) -> Fraction:
    """x_r y_s times the row and column correction products at corner (r, s)."""
    if not is_corner(lam, corner):
        raise ValueError(f"{tuple(corner)} is not a corner of ({lam})")
    w.check_shape(lam)
    x, y = w.x, w.y
    zero = Fraction(0)
    r, s = corner
    value = x[r - 1] * y[s - 1]
    for i in range(1, r):
        den = span_sum(x, i + 1, r, zero) + span_sum(y, s + 1, lam.row(i), zero)
        value *= 1 + x[i - 1] / den
    for j in range(1, s):
        den = span_sum(x, r + 1, lam.col(j), zero) + span_sum(y, j + 1, s, zero)
        value *= 1 + y[j - 1] / den
    return value


def _lower_right(lam: Partition, w: WeightAssignment, r: int, s: int) -> Fraction:
    # x_{r+1}+…+x_ℓ + y_1+…+y_s
    return span_sum(w.x, r + 1, lam.num_rows, Fraction(0)) + span_sum(w.y, 1, s, Fraction(0))


def _upper_left(lam: Partition, w: WeightAssignment, r: int, s: int) -> Fraction:
    # x_1+…+x_r + y_{s+1}+…+y_m
    return span_sum(w.x, 1, r, Fraction(0)) + span_sum(w.y, s + 1, lam.num_cols, Fraction(0))


def main_summands(lam: Partition, w: WeightAssignment, variant: str) -> list[Fraction]:
    """Per-corner summands of the left side of rational identity (a)–(d)."""
    out = []
    for r, s in corners(lam):
        term = product_rs(lam, w, (r, s))
        if variant in ("b", "d"):
            term /= _lower_right(lam, w, r, s)
        if variant in ("c", "d"):
            term /= _upper_left(lam, w, r, s)
        out.append(term)
    return out


def main_rhs(lam: Partition, w: WeightAssignment, variant: str) -> Fraction:
    if variant == "a":
        return sum((w.x[p - 1] * w.y[q - 1] for p, q in lam.cells()), Fraction(0))
    if variant == "b":
        return sum(w.x, Fraction(0))
    if variant == "c":
        return sum(w.y, Fraction(0))
    return Fraction(1)


def check_main(lam: Partition, w: WeightAssignment, variant: str) -> IdentityReport:
    if variant not in MAIN_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    w.check_shape(lam)
    try:
        lhs = sum(main_summands(lam, w, variant), Fraction(0))
    except ZeroDivisionError as exc:
        raise DegenerateError(f"zero denominator in main identity ({variant}) for ({lam})") from exc
    return _report(f"main-{variant}", lam, "evaluated", lhs, main_rhs(lam, w, variant), w.to_json())


def check_wbrhl_symbolic(lam: Partition, variant: str = "eq4", *, limit: int = SYMBOLIC_LIMIT) -> IdentityReport:
    if lam.size() > limit:
        raise GuardError(f"|λ| = {lam.size()} exceeds symbolic limit {limit}")
    lhs, rhs = wbrhl_polynomials(lam, variant)
    return _report(f"wbrhl-{variant}", lam, "symbolic", lhs, rhs, terms=len(lhs), degree=lhs.degree())


def check_wbrhl_evaluated(lam: Partition, w: WeightAssignment, variant: str = "eq4") -> IdentityReport:
    w.check_shape(lam)
    zero, one = Fraction(0), Fraction(1)
    lhs, rhs = wbrhl_sides(lam, w.x, w.y, zero, one, variant)
    return _report(f"wbrhl-{variant}", lam, "evaluated", lhs, rhs, w.to_json())


def brhl_integer_sides(lam: Partition) -> tuple[int, int]:
    """Both sides of the integer hook identity (the common-denominator form)."""
    n = lam.size()
    lhs = n * prod(hook_length(lam, c) - 1 for c in non_corner_cells(lam))
    rhs = 0
    for r, s in corners(lam):
        term = prod(hook_length(lam, (i, s)) for i in range(1, r))
        term *= prod(hook_length(lam, (r, j)) for j in range(1, s))
        term *= prod(hook_length(lam, c) - 1 for c in dor(lam, (r, s)))
        rhs += term
    return lhs, rhs


def brhl_summands(lam: Partition) -> list[Fraction]:
    n = lam.size()
    out = []
    for r, s in corners(lam):
        term = Fraction(1, n)
        for i in range(1, r):
            h = hook_length(lam, (i, s))
            term *= Fraction(h, h - 1)
        for j in range(1, s):
            h = hook_length(lam, (r, j))
            term *= Fraction(h, h - 1)
        out.append(term)
    return out


def check_brhl(lam: Partition) -> IdentityReport:
    if lam.size() == 0:
        raise ValueError("the hook branching rule needs a nonempty partition")
    total = sum(brhl_summands(lam), Fraction(0))
    lhs_int, rhs_int = brhl_integer_sides(lam)
    report = _report("brhl", lam, "evaluated", total, Fraction(1), integer_lhs=lhs_int, integer_rhs=rhs_int)
    if lhs_int != rhs_int:
        report.passed = False
        report.witness = {"integer_lhs": lhs_int, "integer_rhs": rhs_int}
    return report


# ---------------------------------------------------------------------------
# complementary rule

def complementary_unit_sides(lam: Partition) -> tuple[int, int]:
    """Π(h+1) over [λ] against the sum over addable cells, all in hook lengths."""
    lhs = prod(hook_length(lam, c) + 1 for c in lam.cells())
    rhs = 0
    for r, s in addable_corners(lam):
        term = prod(hook_length(lam, (i, s)) for i in range(1, r))
        term *= prod(hook_length(lam, (r, j)) for j in range(1, s))
        term *= prod(hook_length(lam, c) + 1 for c in dor_prime(lam, (r, s)))
        rhs += term
    return lhs, rhs


def check_complementary(
    lam: Partition,
    mode: str = "symbolic",
    *,
    weights: WeightAssignment | None = None,
    rng: RandomSource | None = None,
    printed: bool = False,
    limit: int = SYMBOLIC_LIMIT,
) -> IdentityReport:
    """Check the complementary rule and its unit-weight integer form.

    In evaluated mode ``weights`` is used if given, otherwise a random
    positive point is drawn from ``rng``.
    """
    ident = "complementary-printed" if printed else "complementary"
    extra = 1 if printed else 0
    if mode == "symbolic":
        if lam.size() > limit:
            raise GuardError(f"|λ| = {lam.size()} exceeds symbolic limit {limit}")
        xs, ys, zero, one = _symbolic_vars(lam, extra)
        lhs, rhs = complementary_sides(lam, xs, ys, zero, one, printed=printed)
        report = _report(ident, lam, mode, lhs, rhs, terms=len(lhs))
    elif mode == "evaluated":
        if weights is None:
            rng = rng or RandomSource()
            bigger = Partition((lam.num_cols + extra,) * (lam.num_rows + extra)) if extra else lam
            weights = random_weights(bigger, rng) if bigger.size() else WeightAssignment((), ())
        x = weights.x
        y = weights.y
        lhs, rhs = complementary_sides(lam, x, y, Fraction(0), Fraction(1), printed=printed)
        report = _report(ident, lam, mode, lhs, rhs, weights.to_json())
    else:
        raise ValueError(f"unknown mode {mode!r}")
    unit_lhs, unit_rhs = complementary_unit_sides(lam)
    report.details["unit_lhs"] = unit_lhs
    report.details["unit_rhs"] = unit_rhs
    if unit_lhs != unit_rhs:
        report.passed = False
        report.witness = dict(report.witness or {}, unit_lhs=unit_lhs, unit_rhs=unit_rhs)
    return report


# ---------------------------------------------------------------------------
# Kerov's q-identities

@dataclass(frozen=True)
class KerovInput:
    """Interlacing integers Y_0 < X_1 < Y_1 < … < X_d < Y_d and a base q."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "X", tuple(int(v) for v in self.X))
        object.__setattr__(self, "Y", tuple(int(v) for v in self.Y))
        object.__setattr__(self, "q", Fraction(self.q))
        d = len(self.X)
        if d < 1 or len(self.Y) != d + 1:
            raise ValueError("need d >= 1 values X and d + 1 values Y")
        merged = [self.Y[0]]
        for k in range(d):
            merged += [self.X[k], self.Y[k + 1]]
        if any(a >= b for a, b in zip(merged, merged[1:])):
            raise ValueError(f"sequences do not interlace: X={self.X}, Y={self.Y}")
        if self.q <= 0 or self.q == 1:
            raise ValueError("q must be positive and different from 1")

    @property
    def d(self) -> int:
        return len(self.X)

    def to_json(self) -> dict:
        return {"X": list(self.X), "Y": list(self.Y), "q": format_rational(self.q)}


def _kerov_powers(inp: KerovInput) -> tuple[list[Fraction], list[Fraction]]:
    return [inp.q**v for v in inp.X], [inp.q**v for v in inp.Y]


def kerov_pi(inp: KerovInput) -> list[Fraction]:
    qX, qY = _kerov_powers(inp)
    d = inp.d
    out = []
    for k in range(1, d + 1):
        term = Fraction(1)
        for i in range(1, k):
            term *= (qY[i] - qX[k - 1]) / (qX[i - 1] - qX[k - 1])
        for i in range(k + 1, d + 1):
            term *= (qX[k - 1] - qY[i - 1]) / (qX[k - 1] - qX[i - 1])
        out.append(term)
    return out


def kerov_Z(inp: KerovInput) -> Fraction:
    qX, qY = _kerov_powers(inp)
    return sum(qX, Fraction(0)) - sum(qY[1 : inp.d], Fraction(0))


def kerov_S(inp: KerovInput) -> Fraction:
    qX, qY = _kerov_powers(inp)
    d = inp.d
    return sum(
        ((qY[i - 1] - qX[i - 1]) * (qX[j - 1] - qY[j]) for i in range(1, d + 1) for j in range(i, d + 1)),
        Fraction(0),
    )


def kerov_summands(inp: KerovInput, variant: str) -> list[Fraction]:
    if variant not in KEROV_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    qX, qY = _kerov_powers(inp)
    try:
        pis = kerov_pi(inp)
        if variant == "a":
            return pis
        if variant == "b":
            den = qY[0] - kerov_Z(inp)
            return [(qY[0] - qX[k]) / den * pis[k] for k in range(inp.d)]
        if variant == "c":
            den = kerov_Z(inp) - qY[-1]
            return [(qX[k] - qY[-1]) / den * pis[k] for k in range(inp.d)]
        S = kerov_S(inp)
        return [(qY[0] - qX[k]) * (qX[k] - qY[-1]) / S * pis[k] for k in range(inp.d)]
    except ZeroDivisionError as exc:
        raise DegenerateError(f"zero denominator in Kerov identity ({variant})") from exc


def check_kerov(inp: KerovInput, variant: str) -> IdentityReport:
    lhs = sum(kerov_summands(inp, variant), Fraction(0))
    report = _report(f"kerov-{variant}", None, "evaluated", lhs, Fraction(1), inp.to_json())
    report.details["input"] = inp.to_json()
    return report


def kerov_staircase_weights(inp: KerovInput) -> WeightAssignment:
    """Row/column weights on the staircase (d, …, 1) realizing Kerov's identities.

    x_i = q^{X_i} − q^{Y_{i−1}} and y_j = q^{Y_{d+1−j}} − q^{X_{d+1−j}}.
    These are negative when q < 1, so positivity is not enforced.
    """
    qX, qY = _kerov_powers(inp)
    d = inp.d
    x = tuple(qX[i - 1] - qY[i - 1] for i in range(1, d + 1))
    y = tuple(qY[d + 1 - j] - qX[d - j] for j in range(1, d + 1))
    return WeightAssignment(x, y, positive=False)


# Kerov variant -> (rational-identity variant, normalizer) with matching summands
KEROV_TO_MAIN = {"a": "d", "b": "b", "c": "c", "d": "a"}


def kerov_crosscheck(inp: KerovInput, variant: str) -> IdentityReport:
    """Compare Kerov summands with the staircase rational-identity summands.

    Under the substitution of :func:`kerov_staircase_weights`, the k-th Kerov
    summand equals the k-th corner summand of the matching rational identity
    divided by that identity's right side.
    """
    lam = staircase(inp.d)
    w = kerov_staircase_weights(inp)
    main_variant = KEROV_TO_MAIN[variant]
    try:
        norm = main_rhs(lam, w, main_variant)
        ours = [t / norm for t in main_summands(lam, w, main_variant)]
    except ZeroDivisionError as exc:
        raise DegenerateError("zero denominator in staircase substitution") from exc
    theirs = kerov_summands(inp, variant)
    report = IdentityReport(f"kerov-{variant}-staircase", lam, "evaluated", ours == theirs)
    report.details["input"] = inp.to_json()
    report.details["main_variant"] = main_variant
    if not report.passed:
        report.witness = {
            "staircase_terms": [format_rational(t) for t in ours],
            "kerov_terms": [format_rational(t) for t in theirs],
        }
    return report


def random_kerov_input(d: int, rng: RandomSource, *, q: Fraction | None = None, spread: int = 12) -> KerovInput:
    """A random interlacing input whose identities have no vanishing denominator."""
    for _ in range(MAX_RESAMPLES):
        values = sorted(rng.sample(list(range(-spread, spread + 2 * d + 1)), 2 * d + 1))
        base = q
        while base is None or base == 1:
            base = random_rational(rng, 9)
        inp = KerovInput(tuple(values[1::2]), tuple(values[0::2]), base)
        try:
            for v in KEROV_VARIANTS:
                kerov_summands(inp, v)
        except DegenerateError:
            continue
        return inp
    raise DegenerateError(f"no non-degenerate Kerov input after {MAX_RESAMPLES} draws")


# ---------------------------------------------------------------------------
# α/β identities

@dataclass(frozen=True)
class AlphaBetaWeights:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if not self.alpha or not self.beta:
            raise ValueError("alpha and beta must be nonzero")

    def weight(self, cell: tuple[int, int]) -> Fraction:
        """Square weight: α per column step plus β per row step."""
        i, j = cell
        return j * self.alpha + i * self.beta

    def to_json(self) -> dict:
        return {"alpha": format_rational(self.alpha), "beta": format_rational(self.beta)}


def _alpha_beta_factor(ab: AlphaBetaWeights, lam: Partition, s: Cell) -> Fraction:
    a, b = ab.alpha, ab.beta
    ws = ab.weight(s)
    skip = {s, Cell(s.row + 1, s.col + 1)}
    out = Fraction(1)
    for t in lam.cells():
        if t in skip:
            continue
        diff = ab.weight(t) - ws
        den = (diff - a - b) * diff
        if not den:
            raise DegenerateError(f"vanishing denominator at s={s}, t={t} for {ab.to_json()}")
        out *= (diff - a) * (diff - b) / den
    return out


def alpha_beta_sides(lam: Partition, ab: AlphaBetaWeights, variant: str) -> tuple[Fraction, Fraction]:
    if variant not in ALPHA_BETA_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    a, b = ab.alpha, ab.beta
    n, m, ell = lam.size(), lam.num_cols, lam.num_rows
    w_m0, w_0l = m * a, ell * b
    lhs = Fraction(0)
    for s in lam.cells():
        ws = ab.weight(s)
        lead = ws
        if variant in ("row_m", "combined"):
            if ws == w_m0:
                raise DegenerateError(f"w_s = w_m0 at s={s}")
            lead /= ws - w_m0
        if variant in ("col_l", "combined"):
            if ws == w_0l:
                raise DegenerateError(f"w_s = w_0l at s={s}")
            lead /= ws - w_0l
        lhs += lead * _alpha_beta_factor(ab, lam, s)
    rhs = {
        "sum_n": n * (a + b),
        "row_m": m * (1 + a / b),
        "col_l": ell * (1 + b / a),
        "combined": 1 / a + 1 / b,
    }[variant]
    return lhs, rhs


def check_alpha_beta(lam: Partition, ab: AlphaBetaWeights, variant: str) -> IdentityReport:
    lhs, rhs = alpha_beta_sides(lam, ab, variant)
    return _report(f"alpha-beta-{variant}", lam, "evaluated", lhs, rhs, ab.to_json())


def check_alpha_beta_random(
    lam: Partition, rng: RandomSource, variant: str, *, bound: int = 100, retries: int = MAX_RESAMPLES
) -> IdentityReport:
    """Draw (α, β) until no denominator vanishes, then check."""
    for attempt in range(retries + 1):
        ab = AlphaBetaWeights(random_rational(rng, bound), random_rational(rng, bound))
        try:
            report = check_alpha_beta(lam, ab, variant)
        except DegenerateError:
            continue
        report.details["resamples"] = attempt
        return report
    raise DegenerateError(f"all {retries + 1} draws of (α, β) were degenerate for ({lam})")


# ---------------------------------------------------------------------------
# sweeps

def random_partition(rng: RandomSource, max_size: int, min_size: int = 1) -> Partition:
    n = rng.randint(min_size, max_size)
    return rng.choice(list(partitions(n)))


def check_main_random(
    lam: Partition, rng: RandomSource, variant: str, trials: int = 5, bound: int = 100
) -> list[IdentityReport]:
    return [check_main(lam, random_weights(lam, rng, bound), variant) for _ in range(trials)]


def all_passed(reports: Sequence[IdentityReport]) -> bool:
    return all(r.passed for r in reports)

