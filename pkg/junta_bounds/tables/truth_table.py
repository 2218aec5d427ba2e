# ──────────────────────────────────────────────────────────────
# junta_bounds/tables/truth_table.py
# Packed truth tables, partial assignments and restriction.
#
# Bit layout: variable i (1-based) is bit i-1 of a point index, and
# bit k of the table is f at point k.
# ──────────────────────────────────────────────────────────────
import typing as t
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityOverflow, IndexOutOfRange, PointOutOfRange


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> t.Iterator[int]:
    """Yield the 1-based variable indices set in `mask`, lowest first."""
    index = 1
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def mask_of(variables: t.Iterable[int]) -> int:
    mask = 0
    for i in variables:
        mask |= 1 << (i - 1)
    return mask


def bits_to_array(bits: int, size: int) -> np.ndarray:
    raw = bits.to_bytes(max(1, (size + 7) // 8), "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]


def array_to_bits(values: np.ndarray) -> int:
    packed = np.packbits(np.asarray(values, dtype=np.uint8) & 1, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def deposit(values: np.ndarray, positions: t.Sequence[int]) -> np.ndarray:
    """Scatter the low bits of `values` into the 0-based bit `positions` (a vectorised pdep)."""
    out = np.zeros_like(values)
    for k, pos in enumerate(positions):
        out |= ((values >> k) & 1) << pos
    return out


def point_indices(arity: int) -> np.ndarray:
    return np.arange(1 << arity, dtype=np.int64)


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function on `arity` variables stored as a 2^arity-bit integer."""

    arity: int
    bits: int

    def __post_init__(self) -> None:
        limit = get_settings().n_max
        if self.arity < 0:
            raise ValueError(f"arity must be nonnegative, got {self.arity}")
        if self.arity > limit:
            raise ArityOverflow(self.arity, limit)
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"table {self.bits:#x} has bits beyond 2^{self.arity}")

    # -------- constructors --------
    @classmethod
    def constant(cls, arity: int, value: int) -> "TruthTable":
        return cls(arity, ((1 << (1 << arity)) - 1) if value else 0)

    @classmethod
    def variable(cls, arity: int, i: int) -> "TruthTable":
        """The dictator x_i on `arity` variables."""
        if not 1 <= i <= arity:
            raise IndexOutOfRange(i, arity)
        return cls.from_array(arity, (point_indices(arity) >> (i - 1)) & 1)

    @classmethod
    def from_array(cls, arity: int, values: np.ndarray) -> "TruthTable":
        values = np.asarray(values)
        if values.shape != (1 << arity,):
            raise ValueError(f"expected {1 << arity} values, got shape {values.shape}")
        return cls(arity, array_to_bits(values))

    @classmethod
    def from_function(cls, arity: int, fn: t.Callable[[t.Tuple[int, ...]], int]) -> "TruthTable":
        """Tabulate `fn`, called with the tuple (x_1, ..., x_n) of each point."""
        bits = 0
        for point in range(1 << arity):
            xs = tuple((point >> k) & 1 for k in range(arity))
            if fn(xs):
                bits |= 1 << point
        return cls(arity, bits)

    # -------- views --------
    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def full_mask(self) -> int:
        return (1 << self.arity) - 1

    @cached_property
    def array(self) -> np.ndarray:
        values = bits_to_array(self.bits, self.size)
        values.flags.writeable = False
        return values

    def is_constant(self) -> bool:
        return self.bits == 0 or self.bits == (1 << self.size) - 1

    def evaluate(self, point: int) -> int:
        if not 0 <= point < self.size:
            raise PointOutOfRange(point, self.arity)
        return (self.bits >> point) & 1

    # -------- NPN group actions --------
    def negate(self) -> "TruthTable":
        return TruthTable(self.arity, self.bits ^ ((1 << self.size) - 1))

    def flip_input(self, i: int) -> "TruthTable":
        """g(x) = f(x with x_i complemented)."""
        if not 1 <= i <= self.arity:
            raise IndexOutOfRange(i, self.arity)
        return TruthTable.from_array(self.arity, self.array[point_indices(self.arity) ^ (1 << (i - 1))])

    def permute(self, perm: t.Sequence[int]) -> "TruthTable":
        """Rename variables: variable i of the result is variable perm[i-1] of self."""
        if sorted(perm) != list(range(1, self.arity + 1)):
            raise ValueError(f"{list(perm)} is not a permutation of 1..{self.arity}")
        points = deposit(point_indices(self.arity), [p - 1 for p in perm])
        return TruthTable.from_array(self.arity, self.array[points])

    def __str__(self) -> str:
        from junta_bounds.tables.codec import format_table

        return format_table(self)


def evaluate(tt: TruthTable, point: int) -> int:
    return tt.evaluate(point)


# ---------- Partial assignments ------------------------------------------
@dataclass(frozen=True)
class PartialAssignment:
    """alpha: the variables in fixed_mask are set, to 1 where value_mask has a bit."""

    fixed_mask: int
    value_mask: int = 0

    def __post_init__(self) -> None:
        if self.fixed_mask < 0 or self.value_mask < 0:
            raise ValueError("masks must be nonnegative")
        if self.value_mask & ~self.fixed_mask:
            raise ValueError(
                f"value mask {self.value_mask:#x} sets variables outside fixed mask {self.fixed_mask:#x}"
            )

    @classmethod
    def from_dict(cls, values: t.Mapping[int, int]) -> "PartialAssignment":
        fixed = mask_of(values)
        ones = mask_of(i for i, b in values.items() if b)
        return cls(fixed, ones)

    @property
    def size(self) -> int:
        return popcount(self.fixed_mask)

    def as_dict(self) -> t.Dict[int, int]:
        return {i: (self.value_mask >> (i - 1)) & 1 for i in iter_bits(self.fixed_mask)}

    def merge(self, other: "PartialAssignment") -> "PartialAssignment":
        if self.fixed_mask & other.fixed_mask:
            raise ValueError("cannot merge assignments with overlapping fixed sets")
        return PartialAssignment(self.fixed_mask | other.fixed_mask, self.value_mask | other.value_mask)

    def compress(self, removed_mask: int) -> "PartialAssignment":
        """Renumber into the variable numbering left after the variables of removed_mask are fixed away."""
        if self.fixed_mask & removed_mask:
            raise ValueError("assignment fixes a removed variable")
        fixed = value = 0
        for i in iter_bits(self.fixed_mask):
            j = i - popcount(removed_mask & ((1 << (i - 1)) - 1))
            fixed |= 1 << (j - 1)
            value |= ((self.value_mask >> (i - 1)) & 1) << (j - 1)
        return PartialAssignment(fixed, value)


def partial_assignments(fixed_mask: int) -> t.Iterator[PartialAssignment]:
    """PA(J): all 2^|J| assignments fixing exactly the variables of `fixed_mask`."""
    positions = [i - 1 for i in iter_bits(fixed_mask)]
    for k in range(1 << len(positions)):
        value = 0
        for bit, pos in enumerate(positions):
            if (k >> bit) & 1:
                value |= 1 << pos
        yield PartialAssignment(fixed_mask, value)


def restrict(tt: TruthTable, pa: PartialAssignment) -> TruthTable:
    """f_alpha on the surviving variables, renumbered densely in increasing original order."""
    if pa.fixed_mask >> tt.arity:
        raise IndexOutOfRange(pa.fixed_mask.bit_length(), tt.arity)
    free = [k for k in range(tt.arity) if not (pa.fixed_mask >> k) & 1]
    points = deposit(point_indices(len(free)), free) | pa.value_mask
    return TruthTable.from_array(len(free), tt.array[points])


def restrict_variable(tt: TruthTable, i: int, value: int) -> TruthTable:
    return restrict(tt, PartialAssignment(1 << (i - 1), (1 << (i - 1)) if value else 0))
