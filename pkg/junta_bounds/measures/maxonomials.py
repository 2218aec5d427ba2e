# ──────────────────────────────────────────────────────────────
# junta_bounds/measures/maxonomials.py
# Maxonomials, exact minimum maxonomial hitting sets, and the weight
# decomposition around a minimum hitting set.
# ──────────────────────────────────────────────────────────────
import logging
import typing as t
from dataclasses import dataclass

from junta_bounds.errors import ConstantFunction, NotAHittingSet, NotMinimum
from junta_bounds.measures.dyadic import DyadicRational, dyadic_sum
from junta_bounds.measures.packing import greedy_packing, max_disjoint_packing
from junta_bounds.measures.weights import degree_profile, total_weight, weight_total
from junta_bounds.reports import DecompositionReport, HittingSetReport, variables
from junta_bounds.tables.codec import format_table
from junta_bounds.tables.multilinear import degree, popcounts, support
from junta_bounds.tables.truth_table import TruthTable, iter_bits, partial_assignments, popcount, restrict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaxonomialSet:
    degree: int
    masks: t.Tuple[int, ...]


@dataclass(frozen=True)
class HittingSetResult:
    mask: int
    size: int
    certificate: t.Tuple[int, ...] = ()

    @property
    def certified(self) -> bool:
        """True when `certificate` holds `size` disjoint maxonomials, which proves minimality on its own."""
        return len(self.certificate) == self.size

    def to_report(self) -> HittingSetReport:
        return HittingSetReport(
            mask=self.mask,
            members=variables(self.mask),
            size=self.size,
            certificate=[variables(m) for m in self.certificate],
            certified=self.certified,
        )


def maxonomials(tt: TruthTable) -> MaxonomialSet:
    d = degree(tt)
    if d == 0:
        raise ConstantFunction("a constant function has no maxonomial of positive size")
    masks = support(tt)
    top = masks[popcounts(tt.arity)[masks] == d]
    return MaxonomialSet(d, tuple(top.tolist()))


def _maxonomial_masks(tt: TruthTable) -> t.Tuple[int, ...]:
    """Maxonomials, or () for constants (h = 0 by convention)."""
    return () if degree(tt) == 0 else maxonomials(tt).masks


# ---------- Branch and bound set cover ------------------------------------------
def _most_frequent(sets: t.Sequence[int], allowed: int) -> int:
    """Bit of the allowed variable hitting the most sets; lowest index wins ties."""
    counts: t.Dict[int, int] = {}
    for s in sets:
        for i in iter_bits(s & allowed):
            counts[i] = counts.get(i, 0) + 1
    best = min(counts, key=lambda i: (-counts[i], i))
    return 1 << (best - 1)


def _greedy_cover(sets: t.Sequence[int]) -> int:
    chosen = 0
    unhit = list(sets)
    while unhit:
        bit = _most_frequent(unhit, ~0)
        chosen |= bit
        unhit = [s for s in unhit if not s & bit]
    return chosen


class _HittingSetSearch:
    def __init__(self, sets: t.Sequence[int]) -> None:
        self.sets = list(sets)
        self.best = _greedy_cover(self.sets)
        self.nodes = 0

    def run(self) -> int:
        self._branch(self.sets, 0, 0)
        return self.best

    def _branch(self, unhit: t.List[int], chosen: int, forbidden: int) -> None:
        self.nodes += 1
        if not unhit:
            if popcount(chosen) < popcount(self.best):
                self.best = chosen
            return
        allowed_parts = [s & ~forbidden for s in unhit]
        if any(part == 0 for part in allowed_parts):
            return
        # every disjoint allowed part needs its own new variable
        if popcount(chosen) + len(greedy_packing(allowed_parts)) >= popcount(self.best):
            return
        bit = _most_frequent(unhit, ~forbidden)
        self._branch([s for s in unhit if not s & bit], chosen | bit, forbidden)
        self._branch(unhit, chosen, forbidden | bit)


def min_hitting_set(tt: TruthTable) -> HittingSetResult:
    """Exact h(f) with a deterministic minimum set and, when one exists, a disjoint-maxonomial certificate."""
    sets = _maxonomial_masks(tt)
    if not sets:
        return HittingSetResult(0, 0, ())
    search = _HittingSetSearch(sets)
    best = search.run()
    size = popcount(best)
    certificate = tuple(max_disjoint_packing(sets, limit=size))
    logger.debug("[min_hitting_set] %s h=%d nodes=%d", format_table(tt), size, search.nodes)
    return HittingSetResult(best, size, certificate)


def hitting_number(tt: TruthTable) -> int:
    return min_hitting_set(tt).size


def verify_hitting_set(tt: TruthTable, hitting_mask: int) -> bool:
    return all(m & hitting_mask for m in _maxonomial_masks(tt))


# ---------- Weight decomposition around a minimum hitting set ----------------------
def check_lemma1_decomposition(tt: TruthTable, hitting_mask: int) -> DecompositionReport:
    """
    With H a minimum hitting set and d = deg(f), check:
    deg_i(f) = d on H; W(f) = 2^-d |H| + sum_{i not in H} w_i(f);
    sum_{i not in H} w_i(f) <= 2^-|H| sum_{alpha in PA(H)} W(f_alpha);
    and deg(f_alpha) <= d - 1 for every alpha in PA(H).
    """
    d = degree(tt)
    if d == 0:
        raise ConstantFunction("the decomposition needs a non-constant function")
    for m in maxonomials(tt).masks:
        if not m & hitting_mask:
            raise NotAHittingSet(hitting_mask, m)
    minimum = min_hitting_set(tt)
    if popcount(hitting_mask) > minimum.size:
        raise NotMinimum(popcount(hitting_mask), minimum.size)

    profile = degree_profile(tt)
    weights = weight_total(tt)
    members = set(iter_bits(hitting_mask))
    hitting_part = DyadicRational(len(members), d)
    rest = dyadic_sum(w for k, w in enumerate(weights.weights, start=1) if k not in members)

    restricted = [restrict(tt, pa) for pa in partial_assignments(hitting_mask)]
    restricted_average = dyadic_sum(total_weight(r) for r in restricted).scale(-len(members))
    max_restricted_degree = max(degree(r) for r in restricted)

    return DecompositionReport(
        table=format_table(tt),
        degree=d,
        hitting_set=sorted(members),
        weight_total=weights.total,
        hitting_part=hitting_part,
        rest=rest,
        restricted_average=restricted_average,
        max_restricted_degree=max_restricted_degree,
        hitting_vars_full_degree=all(profile[i - 1] == d for i in members),
        decomposition_exact=weights.total == hitting_part + rest,
        rest_bounded=rest <= restricted_average,
        restrictions_lower_degree=max_restricted_degree <= d - 1,
    )
