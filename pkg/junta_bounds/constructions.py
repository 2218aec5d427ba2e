# ──────────────────────────────────────────────────────────────
# junta_bounds/constructions.py
# Selector combination, read-once selector chains, the Xi family,
# AND-splitting of a variable, and block composition.
#
# Layouts are fixed: the selector variable comes first, composition
# is row-major ((i, j) -> (i-1)*m + j), and Xi_d is (s, t, x-block, y-block).
# ──────────────────────────────────────────────────────────────
import logging
import typing as t
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityOverflow, IndexOutOfRange, IrrelevantVariable
from junta_bounds.measures.dyadic import DyadicRational
from junta_bounds.measures.weights import degree_profile, total_weight
from junta_bounds.reports import WeightComparison
from junta_bounds.tables.codec import format_table
from junta_bounds.tables.multilinear import degree, relevant_count, relevant_vars
from junta_bounds.tables.truth_table import TruthTable, point_indices

logger = logging.getLogger(__name__)


def _check_arity(arity: int) -> None:
    limit = get_settings().n_max
    if arity > limit:
        raise ArityOverflow(arity, limit)


def _low(points: np.ndarray, shift: int, width: int) -> np.ndarray:
    return (points >> shift) & ((1 << width) - 1)


# ---------- Selector ------------------------------------------
def selector(f: TruthTable, g: TruthTable) -> TruthTable:
    """z*f + (1-z)*g on (z, f-block, g-block): f when z = 1, g when z = 0."""
    arity = 1 + f.arity + g.arity
    _check_arity(arity)
    points = point_indices(arity)
    z = points & 1
    out = np.where(z == 1, f.array[_low(points, 1, f.arity)], g.array[points >> (1 + f.arity)])
    return TruthTable.from_array(arity, out)


def iterate_selector(d: int) -> TruthTable:
    """Read-once decision tree of depth d: degree d on 2^d - 1 relevant variables."""
    if d < 1:
        raise ValueError(f"depth must be at least 1, got {d}")
    _check_arity((1 << d) - 1)
    table = TruthTable.variable(1, 1)
    for _ in range(d - 1):
        table = selector(table, table)
    return table


# ---------- Xi family ------------------------------------------
def xi_length(d: int) -> int:
    """l(d) = 3 * 2^(d-1) - 2."""
    if d < 1:
        raise ValueError(f"level must be at least 1, got {d}")
    return 3 * (1 << (d - 1)) - 2


@dataclass(frozen=True)
class XiFunction:
    level: int
    table: TruthTable

    @property
    def length(self) -> int:
        return xi_length(self.level)

    @property
    def x_block(self) -> range:
        """1-based indices of the x block (empty at level 1)."""
        if self.level == 1:
            return range(0)
        inner = xi_length(self.level - 1)
        return range(3, 3 + inner)

    @property
    def y_block(self) -> range:
        if self.level == 1:
            return range(0)
        inner = xi_length(self.level - 1)
        return range(3 + inner, 3 + 2 * inner)


@lru_cache(maxsize=8)
def _xi_bits(d: int) -> np.ndarray:
    # bit b encodes the +-1 value 1 - 2b, so products of +-1 values are XORs of bits
    if d == 1:
        values = np.array([0, 1], dtype=np.uint8)
    else:
        inner = _xi_bits(d - 1)
        width = xi_length(d - 1)
        points = point_indices(2 + 2 * width)
        s = points & 1
        same = s == ((points >> 1) & 1)
        chosen = np.where(same, inner[_low(points, 2, width)], inner[points >> (2 + width)])
        values = (s ^ chosen).astype(np.uint8)
    values.flags.writeable = False
    return values


def xi(d: int) -> XiFunction:
    _check_arity(xi_length(d))
    table = TruthTable.from_array(xi_length(d), _xi_bits(d))
    logger.debug("[xi] level %d on %d variables", d, table.arity)
    return XiFunction(d, table)


def xi_pm(d: int, inputs: t.Sequence[int]) -> int:
    """Evaluate Xi_d directly over {-1, 1} by (s+t)/2 * Xi(x) + (s-t)/2 * Xi(y)."""
    if len(inputs) != xi_length(d):
        raise ValueError(f"Xi_{d} takes {xi_length(d)} inputs, got {len(inputs)}")
    if d == 1:
        return inputs[0]
    s, u = inputs[0], inputs[1]
    width = xi_length(d - 1)
    x_val = xi_pm(d - 1, inputs[2 : 2 + width])
    y_val = xi_pm(d - 1, inputs[2 + width :])
    doubled = (s + u) * x_val + (s - u) * y_val
    return doubled // 2


def to_pm(point: int, arity: int) -> t.List[int]:
    """The +-1 vector of a 0/1 point under b -> 1 - 2b."""
    return [1 - 2 * ((point >> k) & 1) for k in range(arity)]


# ---------- AND-splitting ------------------------------------------
def and_split(f: TruthTable, i: int) -> TruthTable:
    """Replace x_i by y AND z: y keeps position i, z becomes variable n+1."""
    if not 1 <= i <= f.arity:
        raise IndexOutOfRange(i, f.arity)
    if not (relevant_vars(f) >> (i - 1)) & 1:
        raise IrrelevantVariable(i)
    arity = f.arity + 1
    _check_arity(arity)
    points = point_indices(arity)
    bit = 1 << (i - 1)
    y = (points >> (i - 1)) & 1
    z = points >> f.arity
    base = points & (f.full_mask & ~bit)
    return TruthTable.from_array(arity, f.array[base | ((y & z) << (i - 1))])


def compare_and_split_weights(f: TruthTable, i: int) -> WeightComparison:
    """W(f) against W(g) for g = and_split(f, i), with the split's structural invariants."""
    g = and_split(f, i)
    before = degree_profile(f)
    after = degree_profile(g)
    d_i = before[i - 1]
    assert d_i is not None  # and_split rejected irrelevant variables
    split_weight = DyadicRational.power_of_two(-(d_i + 1))
    split_weights_ok = all(
        d is not None and DyadicRational.power_of_two(-d) == split_weight for d in (after[i - 1], after[f.arity])
    )
    other_degrees_ok = all(
        (b is None and a is None) or (b is not None and a in (b, b + 1))
        for k, (b, a) in enumerate(zip(before, after[: f.arity]), start=1)
        if k != i
    )
    w_before, w_after = total_weight(f), total_weight(g)
    relation = "equal" if w_after == w_before else ("decrease" if w_after < w_before else "increase")
    return WeightComparison(
        table=format_table(f),
        split_variable=i,
        split_table=format_table(g),
        degree_before=degree(f),
        degree_after=degree(g),
        deg_i=d_i,
        relevant_before=relevant_count(f),
        relevant_after=relevant_count(g),
        weight_before=w_before,
        weight_after=w_after,
        relation=relation,
        split_weights_ok=split_weights_ok,
        other_degrees_ok=other_degrees_ok,
    )


# ---------- Composition ------------------------------------------
def compose(f: TruthTable, g: TruthTable) -> TruthTable:
    """f(g(t_1,1 .. t_1,m), ..., g(t_n,1 .. t_n,m)) on n*m variables, row-major."""
    arity = f.arity * g.arity
    _check_arity(arity)
    points = point_indices(arity)
    inner = np.zeros_like(points)
    for block in range(f.arity):
        values = g.array[_low(points, block * g.arity, g.arity)].astype(np.int64)
        inner |= values << block
    return TruthTable.from_array(arity, f.array[inner])


def self_compose(f: TruthTable, k: int) -> TruthTable:
    """The k-fold composition f o f o ... o f."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    _check_arity(f.arity**k)
    return reduce(compose, [f] * (k - 1), f)
