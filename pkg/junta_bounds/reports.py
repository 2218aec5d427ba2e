# ──────────────────────────────────────────────────────────────
# junta_bounds/reports.py
# Report models shared by the library and the command tools.
# Exact values serialize as "num/den" strings.
# ──────────────────────────────────────────────────────────────
import typing as t

from pydantic import BaseModel, ConfigDict, Field

from junta_bounds.measures.dyadic import DyadicRational


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    def to_kv(self, prefix: str = "") -> str:
        """Render as `key=value` lines; nested models use dotted keys, lists are comma separated."""
        return "\n".join(_kv_lines(self.model_dump(mode="json"), prefix))


def _kv_value(value: t.Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join("{" + _kv_value(v) + "}" if isinstance(v, list) else _kv_value(v) for v in value)
    return str(value)


def _kv_lines(data: t.Mapping[str, t.Any], prefix: str) -> t.Iterator[str]:
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _kv_lines(value, f"{name}.")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for k, item in enumerate(value):
                yield from _kv_lines(item, f"{name}.{k}.")
        else:
            yield f"{name}={_kv_value(value)}"


def variables(mask: int) -> t.List[int]:
    """1-based variable list of a mask, for human-readable report fields."""
    return [k + 1 for k in range(mask.bit_length()) if (mask >> k) & 1]


# ---------- Measures ------------------------------------------
class ClaimReport(Report):
    table: str
    fixed: t.List[int]
    variable: int
    lhs: DyadicRational
    rhs: DyadicRational
    holds: bool


class DecompositionReport(Report):
    table: str
    degree: int
    hitting_set: t.List[int]
    weight_total: DyadicRational
    hitting_part: DyadicRational
    rest: DyadicRational
    restricted_average: DyadicRational
    max_restricted_degree: int
    hitting_vars_full_degree: bool
    decomposition_exact: bool
    rest_bounded: bool
    restrictions_lower_degree: bool

    @property
    def holds(self) -> bool:
        return (
            self.hitting_vars_full_degree
            and self.decomposition_exact
            and self.rest_bounded
            and self.restrictions_lower_degree
        )


class WeightComparison(Report):
    """W(f) against W(g) where g replaces x_i by y AND z."""

    table: str
    split_variable: int
    split_table: str
    degree_before: int
    degree_after: int
    deg_i: int
    relevant_before: int
    relevant_after: int
    weight_before: DyadicRational
    weight_after: DyadicRational
    relation: t.Literal["equal", "decrease", "increase"]
    split_weights_ok: bool
    other_degrees_ok: bool

    @property
    def invariants_hold(self) -> bool:
        return (
            self.relevant_after == self.relevant_before + 1
            and self.degree_after == max(self.degree_before, self.deg_i + 1)
            and self.split_weights_ok
            and self.other_degrees_ok
            and self.relation != "increase"
        )


class HittingSetReport(Report):
    mask: int
    members: t.List[int]
    size: int
    certificate: t.List[t.List[int]] = Field(default_factory=list)
    certified: bool


class AnalysisReport(Report):
    table: str
    arity: int
    degree: int
    relevant: t.List[int]
    relevant_count: int
    deg_i: t.List[t.Optional[int]]
    weights: t.List[DyadicRational]
    weight_total: DyadicRational
    maxonomials: t.List[t.List[int]]
    hitting_set: HittingSetReport
    block_sensitivity: t.Optional[int] = None
    h_le_d3: bool
    weight_ge_scaled_r: bool
    ns_junta: bool
    h_le_d_bs: t.Optional[bool] = None


# ---------- Search records ------------------------------------------
class WeightStepReport(Report):
    """W_d <= W_{d-1} + h_d 2^-d over the functions searched at one arity."""

    arity: int
    degree: int
    weight_upto: DyadicRational
    weight_below: DyadicRational
    max_hitting: int
    bound: DyadicRational
    holds: bool


class WeightDensityReport(Report):
    """
    W_d against C_d = R_d 2^-d at one arity. W_d >= C_d always; equality is
    only expected once the arity leaves room for d 2^(d-1) relevant variables.
    """

    arity: int
    degree: int
    weight_upto: DyadicRational
    density: DyadicRational
    dominates: bool
    equal: bool
    equality_expected: bool

    @property
    def holds(self) -> bool:
        return self.dominates and (self.equal or not self.equality_expected)


# ---------- Verification ------------------------------------------
class Counterexample(Report):
    table: str
    detail: str


class SuiteResult(Report):
    suite: str
    scope: int
    checked: int
    failures: t.List[Counterexample] = Field(default_factory=list)
    notes: t.Dict[str, str] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


class VerifySummary(Report):
    results: t.List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)
