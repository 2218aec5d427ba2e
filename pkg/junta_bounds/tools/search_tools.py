# junta_bounds/tools/search_tools.py
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from junta_bounds.bounds import bounds_table, threshold_report
from junta_bounds.cache_service import ResultCache, atomic_write
from junta_bounds.search.extremal import ExtremalRecord, extremal_table

logger = logging.getLogger(__name__)


def cmd_search(
    n: int,
    degree: Optional[int] = None,
    jobs: int = 1,
    out: Optional[str] = None,
    brute_force: bool = False,
    cache: Optional[ResultCache] = None,
) -> Dict[str, Any]:
    """
    Per-degree extremal table at arity n as CSV.

    Results are cached by (n, degree, brute_force); `jobs` only changes how
    the work is split, never the output, so it is not part of the key.
    """
    try:
        logger.info("[cmd_search] n=%d degree=%s jobs=%d", n, degree, jobs)
        cache = cache or ResultCache()
        text = cache.get_or_compute(
            "search",
            {"n": n, "degree": degree, "brute_force": brute_force},
            lambda: extremal_table(n, degree, jobs=jobs, brute_force=brute_force).to_csv(),
        )
        record = ExtremalRecord.from_csv(text) if text.count("\n") > 1 else ExtremalRecord(n)
        if out:
            atomic_write(out, text)
            logger.info("[cmd_search] Wrote %d degree rows to %s", len(record.by_degree), out)
        return {"status": "success", "record": record, "text": text}
    except (ValueError, OSError) as e:
        logger.error("[cmd_search] Error: %s", e)
        return {"status": "error", "message": str(e), "error": type(e).__name__}


def cmd_bounds(
    dmax: int = 20, table: bool = False, out: Optional[str] = None, digits: Optional[int] = None
) -> Dict[str, Any]:
    """Threshold report for the C* minimization, optionally with the per-d CSV."""
    try:
        report = threshold_report(max(dmax, 12), digits)
        if report.best_d != 12:
            logger.warning(
                "[cmd_bounds] C* bound is minimized at d=%d (%s); d=12 gives %s",
                report.best_d,
                report.best_decimal,
                report.d12_decimal,
            )
        csv_text = bounds_table(dmax, digits) if table else None
        if csv_text is not None and out:
            atomic_write(Path(out), csv_text)
            logger.info("[cmd_bounds] Wrote d=1..%d to %s", dmax, out)
        return {"status": "success", "report": report, "csv": csv_text, "text": report.to_kv()}
    except (ValueError, OSError) as e:
        logger.error("[cmd_bounds] Error: %s", e)
        return {"status": "error", "message": str(e), "error": type(e).__name__}
