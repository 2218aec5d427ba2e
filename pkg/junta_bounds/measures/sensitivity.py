# ──────────────────────────────────────────────────────────────
# junta_bounds/measures/sensitivity.py
# Exact block sensitivity.
# ──────────────────────────────────────────────────────────────
import typing as t

import numpy as np

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityTooLargeForExact, PointOutOfRange
from junta_bounds.measures.packing import max_disjoint_packing
from junta_bounds.tables.truth_table import TruthTable, point_indices


def minimal_sensitive_blocks(tt: TruthTable, x: int) -> t.List[int]:
    """Inclusion-minimal blocks B with f(x xor B) != f(x)."""
    if not 0 <= x < tt.size:
        raise PointOutOfRange(x, tt.arity)
    sensitive = tt.array[point_indices(tt.arity) ^ x] != tt.array[x]
    # below[B]: some subset of B (B included) is sensitive
    below = sensitive.copy()
    strictly_below = np.zeros_like(sensitive)
    for i in range(tt.arity):
        view = below.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    for i in range(tt.arity):
        below_view = below.reshape(-1, 2, 1 << i)
        strictly_below.reshape(-1, 2, 1 << i)[:, 1, :] |= below_view[:, 0, :]
    return np.flatnonzero(sensitive & ~strictly_below).tolist()


def block_sensitivity_at(tt: TruthTable, x: int) -> t.List[int]:
    """A maximum family of disjoint sensitive blocks at input x."""
    return max_disjoint_packing(minimal_sensitive_blocks(tt, x), limit=tt.arity)


def block_sensitivity(tt: TruthTable) -> int:
    return block_sensitivity_witness(tt)[1]


def block_sensitivity_witness(tt: TruthTable) -> t.Tuple[int, int, t.List[int]]:
    """(input, bs, blocks) for the first input attaining bs(f)."""
    limit = get_settings().bs_max_arity
    if tt.arity > limit:
        raise ArityTooLargeForExact(tt.arity, limit)
    best_x, best = 0, []
    if tt.is_constant():
        return best_x, 0, best
    for x in range(tt.size):
        blocks = block_sensitivity_at(tt, x)
        if len(blocks) > len(best):
            best_x, best = x, blocks
            if len(best) == tt.arity:
                break
    return best_x, len(best), best
