# ──────────────────────────────────────────────────────────────
# junta_bounds/search/extremal.py
# Exhaustive per-degree maxima of R, W and h at a fixed arity.
# ──────────────────────────────────────────────────────────────
import csv
import hashlib
import io
import logging
import multiprocessing as mp
import time
import typing as t
from dataclasses import dataclass, field
from functools import reduce

from junta_bounds.bounds import nisan_szegedy_bound
from junta_bounds.measures.dyadic import ZERO, DyadicRational
from junta_bounds.measures.maxonomials import hitting_number
from junta_bounds.measures.weights import total_weight
from junta_bounds.reports import WeightDensityReport, WeightStepReport
from junta_bounds.search.npn import check_search_arity, enumerate_classes
from junta_bounds.tables.codec import format_table, parse_table
from junta_bounds.tables.multilinear import degree, relevant_count
from junta_bounds.tables.truth_table import TruthTable

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "n",
    "degree",
    "maxR",
    "maxW_num",
    "maxW_exp",
    "maxH",
    "witness",
    "witness_W",
    "witness_H",
    "count",
]


@dataclass(frozen=True)
class DegreeExtremes:
    """Maxima over every function of one degree; each witness is the smallest table attaining its maximum."""

    degree: int
    max_r: int
    witness_r: TruthTable
    max_w: DyadicRational
    witness_w: TruthTable
    max_h: int
    witness_h: TruthTable
    count: int = 1

    @classmethod
    def single(cls, tt: TruthTable, d: int, r: int, w: DyadicRational, h: int, count: int) -> "DegreeExtremes":
        return cls(d, r, tt, w, tt, h, tt, count)

    def merge(self, other: "DegreeExtremes") -> "DegreeExtremes":
        """Associative and commutative: larger value wins, then the smaller witness table."""
        if other.degree != self.degree:
            raise ValueError("cannot merge extremes of different degrees")
        max_r, witness_r = _better((self.max_r, self.witness_r), (other.max_r, other.witness_r))
        max_w, witness_w = _better((self.max_w, self.witness_w), (other.max_w, other.witness_w))
        max_h, witness_h = _better((self.max_h, self.witness_h), (other.max_h, other.witness_h))
        return DegreeExtremes(
            self.degree, max_r, witness_r, max_w, witness_w, max_h, witness_h, self.count + other.count
        )


def _better(a: t.Tuple[t.Any, TruthTable], b: t.Tuple[t.Any, TruthTable]) -> t.Tuple[t.Any, TruthTable]:
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a if a[1].bits <= b[1].bits else b


@dataclass(frozen=True)
class ExtremalRecord:
    arity: int
    by_degree: t.Dict[int, DegreeExtremes] = field(default_factory=dict)

    def merge(self, other: "ExtremalRecord") -> "ExtremalRecord":
        if other.arity != self.arity:
            raise ValueError("cannot merge records of different arity")
        merged = dict(self.by_degree)
        for d, extremes in other.by_degree.items():
            merged[d] = merged[d].merge(extremes) if d in merged else extremes
        return ExtremalRecord(self.arity, dict(sorted(merged.items())))

    def max_r(self, d: int) -> int:
        return self.by_degree[d].max_r

    def max_w(self, d: int) -> DyadicRational:
        return self.by_degree[d].max_w

    def max_h(self, d: int) -> int:
        return self.by_degree[d].max_h

    def max_w_upto(self, d: int) -> DyadicRational:
        """max W over functions of degree at most d."""
        return max((e.max_w for k, e in self.by_degree.items() if k <= d), default=ZERO)

    def max_r_upto(self, d: int) -> int:
        return max((e.max_r for k, e in self.by_degree.items() if k <= d), default=0)

    def c_d(self, d: int) -> DyadicRational:
        """max R over degree <= d, times 2^-d (C_d at this arity)."""
        return DyadicRational(self.max_r_upto(d), d)

    def check_weight_step(self, d: int) -> WeightStepReport:
        """W_d <= W_{d-1} + h_d 2^-d, with h_d the largest hitting number at degree exactly d."""
        if d < 1 or d not in self.by_degree:
            raise ValueError(f"no degree-{d} functions at n={self.arity}")
        below = self.max_w_upto(d - 1)
        bound = below + DyadicRational(self.max_h(d), d)
        upto = self.max_w_upto(d)
        return WeightStepReport(
            arity=self.arity,
            degree=d,
            weight_upto=upto,
            weight_below=below,
            max_hitting=self.max_h(d),
            bound=bound,
            holds=upto <= bound,
        )

    def check_weight_density(self, d: int) -> WeightDensityReport:
        """W_d against C_d at this arity."""
        if d < 1 or d not in self.by_degree:
            raise ValueError(f"no degree-{d} functions at n={self.arity}")
        upto, density = self.max_w_upto(d), self.c_d(d)
        return WeightDensityReport(
            arity=self.arity,
            degree=d,
            weight_upto=upto,
            density=density,
            dominates=upto >= density,
            equal=upto == density,
            equality_expected=self.arity >= nisan_szegedy_bound(d),
        )

    def total_count(self) -> int:
        return sum(e.count for e in self.by_degree.values())

    # -------- CSV --------
    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for d, e in self.by_degree.items():
            writer.writerow(
                [
                    self.arity,
                    d,
                    e.max_r,
                    e.max_w.numerator,
                    e.max_w.exponent,
                    e.max_h,
                    format_table(e.witness_r),
                    format_table(e.witness_w),
                    format_table(e.witness_h),
                    e.count,
                ]
            )
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ExtremalRecord":
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty extremal CSV")
        arity = int(rows[0]["n"])
        by_degree = {}
        for row in rows:
            d = int(row["degree"])
            by_degree[d] = DegreeExtremes(
                degree=d,
                max_r=int(row["maxR"]),
                witness_r=parse_table(row["witness"]),
                max_w=DyadicRational(int(row["maxW_num"]), int(row["maxW_exp"])),
                witness_w=parse_table(row["witness_W"]),
                max_h=int(row["maxH"]),
                witness_h=parse_table(row["witness_H"]),
                count=int(row["count"]),
            )
        return cls(arity, by_degree)


# ---------- Measurement ------------------------------------------
def measure(tt: TruthTable, count: int = 1) -> DegreeExtremes:
    """deg, R, W, h of one table packaged as single-member extremes."""
    return DegreeExtremes.single(
        tt, degree(tt), relevant_count(tt), total_weight(tt), hitting_number(tt), count
    )


def shard_of(tt: TruthTable, jobs: int) -> int:
    """Fixed assignment of a canonical table to one of `jobs` shards."""
    digest = hashlib.sha256(format_table(tt).encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big") % jobs


def _scan_shard(payload: t.Tuple[int, t.Optional[int], t.List[t.Tuple[int, int]]]) -> ExtremalRecord:
    arity, only_degree, items = payload
    record = ExtremalRecord(arity)
    for bits, count in items:
        tt = TruthTable(arity, bits)
        d = degree(tt)
        if only_degree is not None and d != only_degree:
            continue
        record = record.merge(ExtremalRecord(arity, {d: measure(tt, count)}))
    return record


def _items(arity: int, brute_force: bool) -> t.List[t.Tuple[int, int]]:
    if brute_force:
        return [(bits, 1) for bits in range(1 << (1 << arity))]
    return [(c.representative.bits, c.size) for c in enumerate_classes(arity)]


def extremal_table(
    arity: int, degree_filter: t.Optional[int] = None, jobs: int = 1, brute_force: bool = False
) -> ExtremalRecord:
    """
    Exact per-degree maxima of R, W and h over all functions on `arity` variables.

    NPN classes are measured once each (all four measures are class
    invariants); `brute_force` measures every table instead. The result does
    not depend on `jobs`.
    """
    check_search_arity(arity)
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    started = time.perf_counter()
    items = _items(arity, brute_force)
    shards: t.List[t.List[t.Tuple[int, int]]] = [[] for _ in range(jobs)]
    for bits, count in items:
        shards[shard_of(TruthTable(arity, bits), jobs)].append((bits, count))
    payloads = [(arity, degree_filter, shard) for shard in shards]

    if jobs == 1:
        partials = [_scan_shard(p) for p in payloads]
    else:
        with mp.Pool(jobs) as pool:
            partials = pool.map(_scan_shard, payloads)

    record = reduce(ExtremalRecord.merge, partials, ExtremalRecord(arity))
    logger.info(
        "[extremal_table] n=%d items=%d jobs=%d brute_force=%s finished in %.2fs",
        arity,
        len(items),
        jobs,
        brute_force,
        time.perf_counter() - started,
    )
    return record