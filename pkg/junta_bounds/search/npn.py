# ──────────────────────────────────────────────────────────────
# junta_bounds/search/npn.py
# NPN canonical forms (input permutation, input complementation,
# output negation) and class enumeration by orbit marking.
# ──────────────────────────────────────────────────────────────
import itertools
import logging
import typing as t
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityTooLargeForSearch
from junta_bounds.tables.truth_table import TruthTable, deposit, point_indices

logger = logging.getLogger(__name__)

_SCAN_CHUNK = 1 << 20  # tables examined per sweep of the seen-bitmap


def check_search_arity(arity: int) -> None:
    limit = get_settings().search_max_arity
    if arity > limit:
        raise ArityTooLargeForSearch(arity, limit)


@lru_cache(maxsize=8)
def group_point_maps(arity: int) -> np.ndarray:
    """
    One row per (permutation, input-complement mask): row[x] is the point
    of f read by the transformed function at x. Shape (n! * 2^n, 2^n).
    """
    points = point_indices(arity)
    rows = []
    for perm in itertools.permutations(range(arity)):
        moved = deposit(points, perm)
        for flips in range(1 << arity):
            rows.append(moved ^ flips)
    maps = np.stack(rows)
    maps.flags.writeable = False
    return maps


def _pack_rows(rows: np.ndarray) -> np.ndarray:
    """Rows of bits (width <= 64) to unsigned integers, bit k of a row -> bit k of the value."""
    packed = np.packbits(rows.astype(np.uint8), axis=1, bitorder="little")
    padded = np.zeros((rows.shape[0], 8), dtype=np.uint8)
    padded[:, : packed.shape[1]] = packed
    return padded.view("<u8").ravel()


def orbit_values(tt: TruthTable) -> np.ndarray:
    """Sorted distinct tables (as integers) in the NPN orbit of tt."""
    check_search_arity(tt.arity)
    values = _pack_rows(tt.array[group_point_maps(tt.arity)])
    full = np.uint64((1 << tt.size) - 1)
    return np.unique(np.concatenate([values, values ^ full]))


def npn_canonical(tt: TruthTable) -> TruthTable:
    """The numerically smallest table in the orbit; idempotent."""
    return TruthTable(tt.arity, int(orbit_values(tt)[0]))


@dataclass(frozen=True)
class NpnClass:
    representative: TruthTable
    size: int


def _mark(seen: np.ndarray, values: np.ndarray) -> None:
    bytes_ = (values >> np.uint64(3)).astype(np.int64)
    bits = (np.uint8(1) << (values & np.uint64(7)).astype(np.uint8)).astype(np.uint8)
    np.bitwise_or.at(seen, bytes_, bits)


def enumerate_classes(arity: int) -> t.Iterator[NpnClass]:
    """
    Every NPN class on `arity` variables exactly once, in increasing order of
    the canonical table. Tables are scanned in increasing order and whole
    orbits are marked seen, so the first unseen table of each orbit is its
    minimum.
    """
    check_search_arity(arity)
    total = 1 << (1 << arity)
    seen = np.zeros((total + 7) // 8, dtype=np.uint8)
    emitted = covered = 0
    for start in range(0, total, _SCAN_CHUNK):
        stop = min(total, start + _SCAN_CHUNK)
        window = np.unpackbits(seen[start // 8 : (stop + 7) // 8], bitorder="little")[: stop - start]
        for offset in np.flatnonzero(window == 0).tolist():
            value = start + offset
            if (seen[value >> 3] >> (value & 7)) & 1:
                continue
            orbit = orbit_values(TruthTable(arity, value))
            _mark(seen, orbit)
            emitted += 1
            covered += len(orbit)
            yield NpnClass(TruthTable(arity, value), len(orbit))
    logger.info("[enumerate_classes] n=%d classes=%d tables=%d", arity, emitted, covered)
