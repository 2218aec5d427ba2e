# ──────────────────────────────────────────────────────────────
# junta_bounds/measures/weights.py
# deg_i, dyadic weights w_i = 2^-deg_i, total weight W(f), and the
# restriction inequality for w_i.
# ──────────────────────────────────────────────────────────────
import typing as t
from dataclasses import dataclass

from junta_bounds.errors import IInJ, IndexOutOfRange
from junta_bounds.measures.dyadic import ZERO, DyadicRational, dyadic_sum
from junta_bounds.reports import ClaimReport, variables
from junta_bounds.tables.codec import format_table
from junta_bounds.tables.multilinear import popcounts, support
from junta_bounds.tables.truth_table import TruthTable, partial_assignments, popcount, restrict


def _check_index(tt: TruthTable, i: int) -> None:
    if not 1 <= i <= tt.arity:
        raise IndexOutOfRange(i, tt.arity)


def degree_profile(tt: TruthTable) -> t.List[t.Optional[int]]:
    """deg_i for i = 1..n (None for irrelevant variables) from a single transform."""
    masks = support(tt)
    sizes = popcounts(tt.arity)[masks]
    profile: t.List[t.Optional[int]] = []
    for k in range(tt.arity):
        containing = sizes[((masks >> k) & 1).astype(bool)]
        profile.append(int(containing.max()) if containing.size else None)
    return profile


def deg_i(tt: TruthTable, i: int) -> t.Optional[int]:
    """Largest monomial containing x_i; None when x_i is irrelevant."""
    _check_index(tt, i)
    masks = support(tt)
    containing = popcounts(tt.arity)[masks[((masks >> (i - 1)) & 1).astype(bool)]]
    return int(containing.max()) if containing.size else None


def _weight(d: t.Optional[int]) -> DyadicRational:
    return ZERO if d is None else DyadicRational.power_of_two(-d)


def weight_i(tt: TruthTable, i: int) -> DyadicRational:
    """w_i = 2^-deg_i, and 0 for an irrelevant variable."""
    return _weight(deg_i(tt, i))


@dataclass(frozen=True)
class WeightProfile:
    weights: t.Tuple[DyadicRational, ...]
    total: DyadicRational

    def __post_init__(self) -> None:
        if dyadic_sum(self.weights) != self.total:
            raise ValueError("weight total does not match its entries")


def profile_weights(profile: t.Sequence[t.Optional[int]]) -> t.List[DyadicRational]:
    return [_weight(d) for d in profile]


def weight_total(tt: TruthTable) -> WeightProfile:
    weights = tuple(profile_weights(degree_profile(tt)))
    return WeightProfile(weights, dyadic_sum(weights))


def total_weight(tt: TruthTable) -> DyadicRational:
    return weight_total(tt).total


def renumber(i: int, removed_mask: int) -> int:
    """Index of variable i after the variables in removed_mask are fixed away."""
    return i - popcount(removed_mask & ((1 << (i - 1)) - 1))


def check_claim_wi(tt: TruthTable, fixed_mask: int, i: int) -> ClaimReport:
    """w_i(f) <= 2^-|J| * sum over alpha in PA(J) of w_i(f_alpha), computed exactly."""
    _check_index(tt, i)
    if fixed_mask < 0 or fixed_mask >> tt.arity:
        raise IndexOutOfRange(max(fixed_mask.bit_length(), 0), tt.arity)
    if (fixed_mask >> (i - 1)) & 1:
        raise IInJ(i, fixed_mask)

    lhs = weight_i(tt, i)
    j = renumber(i, fixed_mask)
    rhs = dyadic_sum(weight_i(restrict(tt, pa), j) for pa in partial_assignments(fixed_mask))
    rhs = rhs.scale(-popcount(fixed_mask))
    return ClaimReport(
        table=format_table(tt),
        fixed=variables(fixed_mask),
        variable=i,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
    )


def check_claim_base(tt: TruthTable, j: int, i: int) -> ClaimReport:
    """The single-variable case: w_i(f) <= (w_i(f_{x_j=0}) + w_i(f_{x_j=1})) / 2."""
    _check_index(tt, j)
    return check_claim_wi(tt, 1 << (j - 1), i)


def weight_lower_bound_holds(tt: TruthTable, degree: int, relevant: int) -> bool:
    """W(f) >= R(f) * 2^-deg(f)."""
    return total_weight(tt) >= DyadicRational(relevant, degree)


def all_full_degree(profile: t.Sequence[t.Optional[int]], degree: int) -> bool:
    return all(d is None or d == degree for d in profile)
