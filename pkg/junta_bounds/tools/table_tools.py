# junta_bounds/tools/table_tools.py
import logging
from typing import Any, Dict, Optional

from junta_bounds.bounds import nisan_szegedy_bound
from junta_bounds.config import get_settings
from junta_bounds.constructions import and_split, compose, iterate_selector, self_compose, xi
from junta_bounds.errors import ArityTooLargeForExact, JuntaBoundsError
from junta_bounds.measures.maxonomials import maxonomials, min_hitting_set
from junta_bounds.measures.sensitivity import block_sensitivity
from junta_bounds.measures.weights import degree_profile, weight_lower_bound_holds, weight_total
from junta_bounds.reports import AnalysisReport, variables
from junta_bounds.tables.codec import format_table, read_table
from junta_bounds.tables.multilinear import degree, relevant_vars
from junta_bounds.tables.truth_table import TruthTable, popcount

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ("xi", "selector-chain", "compose", "and-split", "self-compose")


def analyze(tt: TruthTable, with_bs: bool = False) -> AnalysisReport:
    """Every measure of one table, plus the inequalities that tie them together."""
    d = degree(tt)
    relevant = relevant_vars(tt)
    r = popcount(relevant)
    weights = weight_total(tt)
    hitting = min_hitting_set(tt)
    maxos = [] if d == 0 else [variables(m) for m in maxonomials(tt).masks]

    bs: Optional[int] = None
    if with_bs:
        bs = block_sensitivity(tt)
    return AnalysisReport(
        table=format_table(tt),
        arity=tt.arity,
        degree=d,
        relevant=variables(relevant),
        relevant_count=r,
        deg_i=degree_profile(tt),
        weights=list(weights.weights),
        weight_total=weights.total,
        maxonomials=maxos,
        hitting_set=hitting.to_report(),
        block_sensitivity=bs,
        h_le_d3=hitting.size <= d**3,
        weight_ge_scaled_r=weight_lower_bound_holds(tt, d, r),
        ns_junta=r <= nisan_szegedy_bound(d),
        h_le_d_bs=None if bs is None else hitting.size <= d * bs,
    )


def cmd_analyze(source: str, with_bs: bool = False) -> Dict[str, Any]:
    """
    Analyze a table given as a bf:v1 literal or a file holding one.

    Block sensitivity is exponential in the arity; asking for it above the
    configured limit is an error rather than a silent skip.
    """
    try:
        logger.info("[cmd_analyze] Analyzing %s", source[:60])
        tt = read_table(source)
        if with_bs and tt.arity > get_settings().bs_max_arity:
            raise ArityTooLargeForExact(tt.arity, get_settings().bs_max_arity)
        report = analyze(tt, with_bs)
        logger.info("[cmd_analyze] deg=%d R=%d h=%d", report.degree, report.relevant_count, report.hitting_set.size)
        return {"status": "success", "report": report, "text": report.to_kv()}
    except (JuntaBoundsError, OSError) as e:
        logger.error("[cmd_analyze] Error: %s", e)
        return {"status": "error", "message": str(e), "error": type(e).__name__}


def build(
    kind: str,
    d: Optional[int] = None,
    f: Optional[str] = None,
    g: Optional[str] = None,
    i: Optional[int] = None,
    k: Optional[int] = None,
) -> TruthTable:
    if kind == "xi":
        return xi(_required("d", d)).table
    if kind == "selector-chain":
        return iterate_selector(_required("d", d))
    if kind == "compose":
        return compose(read_table(_required("f", f)), read_table(_required("g", g)))
    if kind == "and-split":
        return and_split(read_table(_required("f", f)), _required("i", i))
    if kind == "self-compose":
        return self_compose(read_table(_required("f", f)), _required("k", k))
    raise ValueError(f"unknown construction {kind!r}; expected one of {', '.join(CONSTRUCTIONS)}")


def _required(name: str, value: Any) -> Any:
    if value is None:
        raise ValueError(f"--{name} is required for this construction")
    return value


def cmd_construct(kind: str, **params: Any) -> Dict[str, Any]:
    """Build one of the named constructions and return its bf:v1 text."""
    try:
        logger.info("[cmd_construct] Building %s with %s", kind, {k: v for k, v in params.items() if v is not None})
        tt = build(kind, **params)
        logger.info("[cmd_construct] %s has %d variables", kind, tt.arity)
        return {"status": "success", "table": tt, "text": format_table(tt)}
    except (ValueError, OSError) as e:
        logger.error("[cmd_construct] Error: %s", e)
        return {"status": "error", "message": str(e), "error": type(e).__name__}
