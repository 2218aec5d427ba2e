# ──────────────────────────────────────────────────────────────
# junta_bounds/bounds.py
# Exact rational arithmetic for the bounds on C_d and C*.
# ──────────────────────────────────────────────────────────────
import csv
import io
import typing as t
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from math import comb, factorial

from pydantic import PlainSerializer

from junta_bounds.config import get_settings
from junta_bounds.reports import Report

Q = Fraction  # rational type alias

ExactFraction = t.Annotated[Fraction, PlainSerializer(lambda q: f"{q.numerator}/{q.denominator}", return_type=str)]

# Threshold comparison for the minimizing d: d^3 2^-d against 1/2
_HALF = Q(1, 2)


def _check_nonnegative(name: str, value: int, minimum: int = 0) -> None:
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")


# ---------- Series ------------------------------------------
def summand(i: int) -> Q:
    """i^3 2^-i."""
    return Q(i**3, 1 << i)


def partial_sum(d: int) -> Q:
    """sum_{i=1}^{d} i^3 2^-i."""
    _check_nonnegative("d", d)
    return sum((summand(i) for i in range(1, d + 1)), Q(0))


def tail_sum(d: int) -> Q:
    """sum_{i > d} i^3 2^-i = 2^-d (d^3 + 6d^2 + 18d + 26)."""
    _check_nonnegative("d", d)
    return Q(d**3 + 6 * d**2 + 18 * d + 26, 1 << d)


def stirling2(k: int, j: int) -> int:
    """Stirling numbers of the second kind, by the explicit alternating sum."""
    return sum((-1) ** (j - m) * comb(j, m) * m**k for m in range(j + 1)) // factorial(j)


def binomial_moment(j: int) -> Q:
    """sum_{i >= 1} C(i, j) 2^-i: 2 for j >= 1 and 1 for j = 0."""
    _check_nonnegative("j", j)
    return Q(2) if j else Q(1)


def power_series_total(k: int = 3) -> Q:
    """
    sum_{i >= 1} i^k 2^-i from i^k = sum_j j! S(k, j) C(i, j); for k = 3
    this is 1*C(i,1) + 6*C(i,2) + 6*C(i,3), giving 2 + 12 + 12 = 26.
    """
    _check_nonnegative("k", k, 1)
    return sum((factorial(j) * stirling2(k, j) * binomial_moment(j) for j in range(1, k + 1)), Q(0))


# ---------- Bounds on C* ------------------------------------------
def cstar_upper(d: int) -> Q:
    """d/2 + sum_{i > d} i^3 2^-i: C_d <= d/2 plus the h_i <= i^3 tail."""
    _check_nonnegative("d", d, 1)
    return Q(d, 2) + tail_sum(d)


def cstar_upper_best(dmax: int) -> t.Tuple[int, Q]:
    """argmin of cstar_upper over 1..dmax, lowest d on ties."""
    _check_nonnegative("dmax", dmax, 1)
    best_d, best = 1, cstar_upper(1)
    for d in range(2, dmax + 1):
        value = cstar_upper(d)
        if value < best:
            best_d, best = d, value
    return best_d, best


def summand_threshold(dmax: int = 64) -> int:
    """
    Largest d <= dmax with d^3 2^-d > 1/2; past it each extra term of d/2
    outweighs the tail it removes. 0 when no d <= dmax qualifies (dmax = 1).
    """
    _check_nonnegative("dmax", dmax, 1)
    return max((d for d in range(1, dmax + 1) if summand(d) > _HALF), default=0)


def cd_lower(d: int) -> Q:
    """C_d >= 1 - 2^-d from the selector chain."""
    _check_nonnegative("d", d)
    return 1 - Q(1, 1 << d)


def cd_upper_from_h(hs: t.Sequence[int]) -> Q:
    """sum_{i=1}^{d} h_i 2^-i for hs = [h_1, ..., h_d]."""
    if not hs:
        raise ValueError("need at least one h_i")
    return sum((Q(h, 1 << i) for i, h in enumerate(hs, start=1)), Q(0))


def nisan_szegedy_bound(d: int) -> int:
    """Most relevant variables a degree-d function can have: d 2^(d-1)."""
    _check_nonnegative("d", d)
    return d << (d - 1) if d else 0


def ns_upper(d: int) -> Q:
    """C_d <= d/2 (from R <= d 2^(d-1)), used as stated."""
    _check_nonnegative("d", d)
    return Q(d, 2)


def xi_lower(d: int) -> Q:
    """l(d) 2^-d = 3/2 - 2^(1-d): the Xi family's relevant-variable density."""
    _check_nonnegative("d", d, 1)
    return Q(3 * (1 << (d - 1)) - 2, 1 << d)


def cstar_lower() -> Q:
    return Q(3, 2)


# ---------- Rendering ------------------------------------------
def render_decimal(value: Q, digits: t.Optional[int] = None) -> str:
    """Round half away from zero to `digits` significant digits (default from settings)."""
    digits = digits or get_settings().decimal_digits
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_UP
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rounded, "f")


def fraction_text(value: Q) -> str:
    return f"{value.numerator}/{value.denominator}"


class ThresholdReport(Report):
    """Where the C* upper bound is minimized, next to the d = 12 reading of the minimization."""

    threshold_d: int
    best_d: int
    best_value: ExactFraction
    best_decimal: str
    d12_value: ExactFraction
    d12_decimal: str
    stated_bound: str = "6.614"
    stated_matches_best: bool
    stated_matches_d12: bool


def threshold_report(dmax: int = 64, digits: t.Optional[int] = None) -> ThresholdReport:
    best_d, best = cstar_upper_best(dmax)
    d12 = cstar_upper(12)
    best_text, d12_text = render_decimal(best, digits), render_decimal(d12, digits)
    return ThresholdReport(
        threshold_d=summand_threshold(dmax),
        best_d=best_d,
        best_value=best,
        best_decimal=best_text,
        d12_value=d12,
        d12_decimal=d12_text,
        stated_matches_best=best_text == "6.614",
        stated_matches_d12=d12_text == "6.614",
    )


def bounds_table(dmax: int, digits: t.Optional[int] = None) -> str:
    """CSV of exact and decimal bounds for d = 1..dmax."""
    _check_nonnegative("dmax", dmax, 1)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["d", "cd_lower", "xi_lower", "ns_upper", "cstar_upper", "cd_lower_dec", "xi_lower_dec", "cstar_upper_dec"]
    )
    for d in range(1, dmax + 1):
        lower, xi_d, upper = cd_lower(d), xi_lower(d), cstar_upper(d)
        writer.writerow(
            [
                d,
                fraction_text(lower),
                fraction_text(xi_d),
                fraction_text(ns_upper(d)),
                fraction_text(upper),
                render_decimal(lower, digits),
                render_decimal(xi_d, digits),
                render_decimal(upper, digits),
            ]
        )
    return buffer.getvalue()
