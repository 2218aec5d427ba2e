# ──────────────────────────────────────────────────────────────
# junta_bounds/tools/suites.py
# Verification suites: each one sweeps a family of instances and
# records every instance that breaks its inequality.
# ──────────────────────────────────────────────────────────────
import itertools
import typing as t
from dataclasses import dataclass

import numpy as np

from junta_bounds.bounds import cd_lower, nisan_szegedy_bound
from junta_bounds.constructions import (
    compare_and_split_weights,
    compose,
    iterate_selector,
    self_compose,
    to_pm,
    xi,
    xi_length,
    xi_pm,
)
from junta_bounds.errors import UnknownSuite
from junta_bounds.measures.dyadic import DyadicRational, dyadic_sum
from junta_bounds.measures.maxonomials import check_lemma1_decomposition, maxonomials, min_hitting_set
from junta_bounds.measures.sensitivity import block_sensitivity
from junta_bounds.measures.weights import (
    all_full_degree,
    degree_profile,
    profile_weights,
    renumber,
    weight_lower_bound_holds,
    weight_total,
)
from junta_bounds.reports import Counterexample, SuiteResult
from junta_bounds.search.extremal import extremal_table
from junta_bounds.search.npn import npn_canonical
from junta_bounds.tables.codec import format_table
from junta_bounds.tables.multilinear import degree, relevant_count, relevant_vars
from junta_bounds.tables.truth_table import (
    TruthTable,
    iter_bits,
    partial_assignments,
    popcount,
    restrict,
)

_EXHAUSTIVE_LIMIT = 1 << 16  # tables per arity enumerated in full; larger arities are sampled
_MAX_DUMPED = 50
_SELF_COMPOSE_MAX_ARITY = 8
_RECORD_MAX_ARITY = 4


@dataclass(frozen=True)
class SuiteOptions:
    samples: int = 200
    seed: int = 0


class _Collector:
    """Counts checked instances and keeps the first failures for replay."""

    def __init__(self, suite: str, scope: int) -> None:
        self.suite = suite
        self.scope = scope
        self.checked = 0
        self.failed = 0
        self.failures: t.List[Counterexample] = []
        self.notes: t.Dict[str, str] = {}

    def check(self, ok: bool, tt: TruthTable, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < _MAX_DUMPED:
                self.failures.append(Counterexample(table=format_table(tt), detail=detail))

    def result(self) -> SuiteResult:
        if self.failed > len(self.failures):
            self.notes["failures_total"] = str(self.failed)
        return SuiteResult(
            suite=self.suite, scope=self.scope, checked=self.checked, failures=self.failures, notes=self.notes
        )


def tables_upto(scope: int, options: SuiteOptions, exhaustive_arity: int = 4) -> t.Iterator[TruthTable]:
    """All tables for n <= min(scope, exhaustive_arity); seeded random samples above that."""
    rng = np.random.default_rng(options.seed)
    for n in range(scope + 1):
        if n <= exhaustive_arity and (1 << (1 << n)) <= _EXHAUSTIVE_LIMIT:
            for bits in range(1 << (1 << n)):
                yield TruthTable(n, bits)
        else:
            for _ in range(options.samples):
                yield TruthTable.from_array(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


# ---------- Restriction inequality ------------------------------------------
def suite_claim_wi(scope: int, options: SuiteOptions) -> SuiteResult:
    """w_i(f) <= 2^-|J| sum_{alpha in PA(J)} w_i(f_alpha) for every nonempty J and i outside J."""
    out = _Collector("claim-wi", scope)
    for tt in tables_upto(scope, options, exhaustive_arity=3):
        lhs = profile_weights(degree_profile(tt))
        for fixed in range(1, 1 << tt.arity):
            restricted = [profile_weights(degree_profile(restrict(tt, pa))) for pa in partial_assignments(fixed)]
            for i in range(1, tt.arity + 1):
                if (fixed >> (i - 1)) & 1:
                    continue
                j = renumber(i, fixed)
                rhs = dyadic_sum(w[j - 1] for w in restricted).scale(-popcount(fixed))
                out.check(lhs[i - 1] <= rhs, tt, f"J={fixed:#x} i={i} lhs={lhs[i - 1]} rhs={rhs}")
    return out.result()


def suite_claim_base(scope: int, options: SuiteOptions) -> SuiteResult:
    """w_i(f) <= (w_i(f_{x_j=0}) + w_i(f_{x_j=1})) / 2 for all j != i."""
    out = _Collector("claim-base", scope)
    for tt in tables_upto(scope, options):
        lhs = profile_weights(degree_profile(tt))
        for j in range(1, tt.arity + 1):
            fixed = 1 << (j - 1)
            zero, one = (profile_weights(degree_profile(restrict(tt, pa))) for pa in partial_assignments(fixed))
            for i in range(1, tt.arity + 1):
                if i == j:
                    continue
                k = renumber(i, fixed)
                rhs = (zero[k - 1] + one[k - 1]).scale(-1)
                out.check(lhs[i - 1] <= rhs, tt, f"j={j} i={i} lhs={lhs[i - 1]} rhs={rhs}")
    return out.result()


def suite_lemma1_decomposition(scope: int, options: SuiteOptions) -> SuiteResult:
    out = _Collector("lemma1-decomposition", scope)
    for tt in tables_upto(scope, options, exhaustive_arity=3):
        if tt.is_constant():
            continue
        report = check_lemma1_decomposition(tt, min_hitting_set(tt).mask)
        out.check(report.holds, tt, report.to_kv().replace("\n", ";"))
    return out.result()


# ---------- Hitting set bounds ------------------------------------------
def suite_hcube(scope: int, options: SuiteOptions) -> SuiteResult:
    """h(f) <= deg(f)^3."""
    out = _Collector("hcube", scope)
    for tt in tables_upto(scope, options):
        d, h = degree(tt), min_hitting_set(tt).size
        out.check(h <= d**3, tt, f"h={h} d={d}")
    return out.result()


def suite_hbs(scope: int, options: SuiteOptions) -> SuiteResult:
    """h(f) <= deg(f) * bs(f)."""
    out = _Collector("hbs", scope)
    for tt in tables_upto(scope, options):
        d, h, bs = degree(tt), min_hitting_set(tt).size, block_sensitivity(tt)
        out.check(h <= d * bs, tt, f"h={h} d={d} bs={bs}")
    return out.result()


def suite_bs_degree(scope: int, options: SuiteOptions) -> SuiteResult:
    """bs(f) <= 2 deg(f)^2."""
    out = _Collector("bs-degree", scope)
    for tt in tables_upto(scope, options):
        d, bs = degree(tt), block_sensitivity(tt)
        out.check(bs <= 2 * d * d, tt, f"bs={bs} d={d}")
    return out.result()


def suite_ns_junta(scope: int, options: SuiteOptions) -> SuiteResult:
    """R(f) <= deg(f) 2^(deg(f)-1), and W(f) >= R(f) 2^-deg(f) with equality iff every deg_i = deg."""
    out = _Collector("ns-junta", scope)
    for tt in tables_upto(scope, options):
        d, r = degree(tt), relevant_count(tt)
        out.check(r <= nisan_szegedy_bound(d), tt, f"R={r} d={d}")
        profile = degree_profile(tt)
        w = dyadic_sum(profile_weights(profile))
        full = all_full_degree(profile, d)
        tight = w == DyadicRational(r, d)
        out.check(weight_lower_bound_holds(tt, d, r) and tight == full, tt, f"W={w} R={r} d={d} all_full={full}")
    return out.result()


# ---------- Invariance under the NPN group ------------------------------------------
def _measures(tt: TruthTable) -> t.Tuple[int, int, int, DyadicRational, t.List[DyadicRational]]:
    profile = weight_total(tt)
    return degree(tt), relevant_count(tt), min_hitting_set(tt).size, profile.total, sorted(profile.weights)


def _pulled_back(masks: t.Iterable[int], perm: t.Sequence[int]) -> t.List[int]:
    """Masks over f's variables rewritten over the variables of f.permute(perm)."""
    position = {p: i for i, p in enumerate(perm, start=1)}
    out = []
    for m in masks:
        out.append(sum(1 << (position[v] - 1) for v in iter_bits(m)))
    return sorted(out)


def suite_npn_invariance(scope: int, options: SuiteOptions) -> SuiteResult:
    """deg, R, h, W, the weight multiset and the maxonomials are invariant under the NPN group."""
    out = _Collector("npn-invariance", scope)
    rng = np.random.default_rng(options.seed)
    for tt in tables_upto(min(scope, 4), options, exhaustive_arity=3):
        base = _measures(tt)
        canon = npn_canonical(tt)
        out.check(_measures(canon) == base, tt, f"canonical {format_table(canon)} differs")

        perm = [int(p) + 1 for p in rng.permutation(tt.arity)]
        moved = tt.permute(perm)
        for k in iter_bits(int(rng.integers(0, 1 << tt.arity))):
            moved = moved.flip_input(k)
        if rng.integers(0, 2):
            moved = moved.negate()
        out.check(_measures(moved) == base, tt, f"image {format_table(moved)} under perm={perm} differs")
        if not tt.is_constant():
            expected = _pulled_back(maxonomials(tt).masks, perm)
            out.check(sorted(maxonomials(moved).masks) == expected, tt, f"maxonomials move wrongly under perm={perm}")

    # class-reduced search must agree with measuring every table
    for n in range(1, min(scope, 3) + 1):
        reduced, raw = extremal_table(n), extremal_table(n, brute_force=True)
        out.check(reduced.to_csv() == raw.to_csv(), TruthTable.constant(n, 0), f"n={n} class-reduced search differs")
    return out.result()


# ---------- Constructions ------------------------------------------
def suite_composition(scope: int, options: SuiteOptions) -> SuiteResult:
    """deg(f o g) = deg f deg g and h(f o g) = h f h g over all non-constant pairs on `scope` variables."""
    out = _Collector("composition-multiplicativity", scope)
    tables = [TruthTable(scope, b) for b in range(1 << (1 << scope))]
    tables = [tt for tt in tables if not tt.is_constant()]
    facts = {tt: (degree(tt), min_hitting_set(tt).size) for tt in tables}
    for f, g in itertools.product(tables, tables):
        fg = compose(f, g)
        (df, hf), (dg, hg) = facts[f], facts[g]
        d, h = degree(fg), min_hitting_set(fg).size
        out.check(d == df * dg and h == hf * hg, f, f"g={format_table(g)} deg={d} vs {df * dg} h={h} vs {hf * hg}")
    for f in tables:
        df, hf = facts[f]
        for k in (2, 3):
            if scope**k > _SELF_COMPOSE_MAX_ARITY:
                break
            power = self_compose(f, k)
            d, h = degree(power), min_hitting_set(power).size
            out.check(d == df**k and h == hf**k, f, f"k={k} deg={d} vs {df**k} h={h} vs {hf**k}")
    return out.result()


def suite_extremal_identities(scope: int, options: SuiteOptions) -> SuiteResult:
    """Per-arity search records: the W_d step bound, and W_d against C_d."""
    out = _Collector("extremal-identities", scope)
    for n in range(1, min(scope, _RECORD_MAX_ARITY) + 1):
        record = extremal_table(n)
        for d in record.by_degree:
            if d < 1:
                continue
            step = record.check_weight_step(d)
            witness = record.by_degree[d].witness_w
            out.check(step.holds, witness, f"n={n} d={d} W_d={step.weight_upto} bound={step.bound}")
            density = record.check_weight_density(d)
            out.check(
                density.holds,
                witness,
                f"n={n} d={d} W_d={density.weight_upto} C_d={density.density} expected_equal={density.equality_expected}",
            )
            if density.equality_expected:
                out.notes[f"n{n}_d{d}_weight_equals_density"] = "true" if density.equal else "false"
    return out.result()


def suite_prop1_weight_report(scope: int, options: SuiteOptions) -> SuiteResult:
    """AND-splitting a relevant variable: structural invariants, with W(f) vs W(g) tallied."""
    out = _Collector("prop1-weight-report", scope)
    tallies = {"equal": 0, "decrease": 0, "increase": 0}
    below_degree_decrease = 0
    witness = "-"
    for tt in tables_upto(scope, options, exhaustive_arity=3):
        for i in iter_bits(relevant_vars(tt)):
            report = compare_and_split_weights(tt, i)
            tallies[report.relation] += 1
            if report.relation == "decrease" and report.deg_i < report.degree_before:
                below_degree_decrease += 1
                if witness == "-":
                    witness = f"{report.table}@x{i}"
            out.check(report.invariants_hold, tt, report.to_kv().replace("\n", ";"))
    out.notes.update({f"weight_{k}": str(v) for k, v in tallies.items()})
    out.notes["decrease_with_deg_i_below_degree"] = str(below_degree_decrease)
    out.notes["first_such_witness"] = witness
    return out.result()


def suite_xi_construction(scope: int, options: SuiteOptions) -> SuiteResult:
    """deg(Xi_d) = d, R(Xi_d) = l(d), and the +-1 case identity (exhaustive for d <= 3)."""
    out = _Collector("xi-construction", scope)
    for d in range(1, scope + 1):
        table = xi(d).table
        r = relevant_count(table)
        out.check(degree(table) == d and r == xi_length(d), table, f"d={d} deg={degree(table)} R={r}")
        if d > 3:
            continue
        mismatches = [
            p for p in range(table.size) if 1 - 2 * table.evaluate(p) != xi_pm(d, to_pm(p, table.arity))
        ]
        out.check(not mismatches, table, f"d={d} differs from the +-1 recursion at {mismatches[:5]}")
    return out.result()


def suite_selector_chain(scope: int, options: SuiteOptions) -> SuiteResult:
    """iterate_selector(d): degree d, 2^d - 1 relevant variables, R 2^-d = 1 - 2^-d."""
    out = _Collector("selector-chain", scope)
    for d in range(1, scope + 1):
        table = iterate_selector(d)
        r = relevant_count(table)
        density = DyadicRational(r, d).as_fraction()
        out.check(
            degree(table) == d and r == (1 << d) - 1 and density == cd_lower(d),
            table,
            f"d={d} deg={degree(table)} R={r}",
        )
    return out.result()


# name -> (suite, default scope)
SUITES: t.Dict[str, t.Tuple[t.Callable[[int, SuiteOptions], SuiteResult], int]] = {
    "claim-wi": (suite_claim_wi, 3),
    "claim-base": (suite_claim_base, 4),
    "lemma1-decomposition": (suite_lemma1_decomposition, 3),
    "hcube": (suite_hcube, 4),
    "hbs": (suite_hbs, 4),
    "bs-degree": (suite_bs_degree, 4),
    "ns-junta": (suite_ns_junta, 4),
    "npn-invariance": (suite_npn_invariance, 3),
    "composition-multiplicativity": (suite_composition, 2),
    "prop1-weight-report": (suite_prop1_weight_report, 3),
    "extremal-identities": (suite_extremal_identities, 3),
    "xi-construction": (suite_xi_construction, 3),
    "selector-chain": (suite_selector_chain, 4),
}


def get_suite(name: str) -> t.Tuple[t.Callable[[int, SuiteOptions], SuiteResult], int]:
    if name not in SUITES:
        raise UnknownSuite(name, SUITES)
    return SUITES[name]
