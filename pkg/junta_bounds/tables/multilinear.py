# ──────────────────────────────────────────────────────────────
# junta_bounds/tables/multilinear.py
# Multilinear (Möbius) representation over the reals, degree and
# relevant variables.
# ──────────────────────────────────────────────────────────────
import typing as t
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from junta_bounds.errors import NotBooleanValued, PointOutOfRange
from junta_bounds.tables.truth_table import TruthTable, point_indices


@dataclass(frozen=True)
class MultilinearPoly:
    """sum_S a_S prod_{i in S} x_i, stored as {subset mask: nonzero integer a_S}."""

    arity: int
    coefficients: t.Dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for mask, coeff in self.coefficients.items():
            if mask < 0 or mask >> self.arity:
                raise ValueError(f"monomial {mask:#x} uses variables outside 1..{self.arity}")
            if coeff:
                cleaned[int(mask)] = int(coeff)
        object.__setattr__(self, "coefficients", dict(sorted(cleaned.items())))

    __hash__ = None  # type: ignore[assignment]

    @property
    def degree(self) -> int:
        return max((bin(mask).count("1") for mask in self.coefficients), default=0)

    def monomials(self, size: t.Optional[int] = None) -> t.List[int]:
        return [m for m in self.coefficients if size is None or bin(m).count("1") == size]

    def to_array(self) -> np.ndarray:
        coeffs = np.zeros(1 << self.arity, dtype=np.int64)
        for mask, coeff in self.coefficients.items():
            coeffs[mask] = coeff
        return coeffs


# ---------- Subset transforms ------------------------------------------
def _subset_sum(values: np.ndarray, arity: int, sign: int) -> np.ndarray:
    """In-place zeta (sign=+1) or Möbius (sign=-1) transform over the subset lattice."""
    for i in range(arity):
        view = values.reshape(-1, 2, 1 << i)
        if sign > 0:
            view[:, 1, :] += view[:, 0, :]
        else:
            view[:, 1, :] -= view[:, 0, :]
    return values


CACHED_ARITY = 16  # 2^16 int64 coefficients, 512 KiB per cached table


def _coefficients(tt: TruthTable) -> np.ndarray:
    coeffs = _subset_sum(tt.array.astype(np.int64), tt.arity, -1)
    coeffs.flags.writeable = False
    return coeffs


_cached_coefficients = lru_cache(maxsize=256)(_coefficients)


def coefficient_array(tt: TruthTable) -> np.ndarray:
    """a_S for every mask S (zeros included); read-only, memoized for tables of at most CACHED_ARITY variables."""
    if tt.arity <= CACHED_ARITY:
        return _cached_coefficients(tt)
    return _coefficients(tt)


@lru_cache(maxsize=32)
def popcounts(arity: int) -> np.ndarray:
    counts = np.zeros(1 << arity, dtype=np.int64)
    points = point_indices(arity)
    for i in range(arity):
        counts += (points >> i) & 1
    counts.flags.writeable = False
    return counts


def support(tt: TruthTable) -> np.ndarray:
    """Masks with nonzero coefficient, ascending."""
    return np.flatnonzero(coefficient_array(tt))


def mobius(tt: TruthTable) -> MultilinearPoly:
    coeffs = coefficient_array(tt)
    masks = np.flatnonzero(coeffs)
    return MultilinearPoly(tt.arity, dict(zip(masks.tolist(), coeffs[masks].tolist())))


def poly_values(poly: MultilinearPoly) -> np.ndarray:
    return _subset_sum(poly.to_array(), poly.arity, +1)


def poly_evaluate(poly: MultilinearPoly, point: int) -> int:
    if not 0 <= point < (1 << poly.arity):
        raise PointOutOfRange(point, poly.arity)
    return sum(coeff for mask, coeff in poly.coefficients.items() if mask & ~point == 0)


def _submasks(mask: int) -> t.List[int]:
    out, sub = [], mask
    while True:
        out.append(sub)
        if sub == 0:
            return sorted(out)
        sub = (sub - 1) & mask


def _oversized_value(poly: MultilinearPoly) -> t.Optional[t.Tuple[int, int]]:
    """
    A point below the first mask with |a_S| > 2^|S| where poly leaves {0, 1};
    a 0/1-valued poly has no such coefficient. None if every |a_S| is in range.
    """
    oversized = [m for m, c in poly.coefficients.items() if abs(c) > 1 << bin(m).count("1")]
    if not oversized:
        return None
    top = min(oversized)
    for point in _submasks(top):
        value = poly_evaluate(poly, point)
        if value not in (0, 1):
            return point, value
    raise AssertionError(f"coefficient of {top:#x} out of range yet every value below it is 0/1")


def is_boolean_poly(poly: MultilinearPoly) -> bool:
    if _oversized_value(poly) is not None:
        return False
    values = poly_values(poly)
    return bool(np.all((values == 0) | (values == 1)))


def unmobius(poly: MultilinearPoly) -> TruthTable:
    found = _oversized_value(poly)
    if found is not None:
        raise NotBooleanValued(*found)
    values = poly_values(poly)
    bad = np.flatnonzero((values != 0) & (values != 1))
    if bad.size:
        point = int(bad[0])
        raise NotBooleanValued(point, int(values[point]))
    return TruthTable.from_array(poly.arity, values)


# ---------- Degree and relevance ------------------------------------------
def degree(tt: TruthTable) -> int:
    masks = support(tt)
    if masks.size == 0:
        return 0
    return int(popcounts(tt.arity)[masks].max())


def relevant_vars(tt: TruthTable) -> int:
    """Union of the monomials with nonzero coefficient, as a variable mask; R(f) is its popcount."""
    masks = support(tt)
    if masks.size == 0:
        return 0
    return int(np.bitwise_or.reduce(masks))


def sensitive_vars(tt: TruthTable) -> int:
    """Variables i such that flipping x_i changes f at some input."""
    points = point_indices(tt.arity)
    mask = 0
    for k in range(tt.arity):
        if np.any(tt.array != tt.array[points ^ (1 << k)]):
            mask |= 1 << k
    return mask


def relevant_count(tt: TruthTable) -> int:
    return bin(relevant_vars(tt)).count("1")


def is_junta(tt: TruthTable, size: int) -> bool:
    return relevant_count(tt) <= size
