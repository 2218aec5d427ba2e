# junta_bounds/tools/verify_tools.py
import logging
import time
from typing import Any, Dict, List, Optional

from junta_bounds.reports import SuiteResult, VerifySummary
from junta_bounds.tools.suites import SUITES, SuiteOptions, get_suite

logger = logging.getLogger(__name__)


def before_suite_cb(name: str, scope: int) -> float:
    logger.info("[before_suite] %s scope=%d", name, scope)
    return time.perf_counter()


def after_suite_cb(result: SuiteResult, started: float) -> None:
    dt = time.perf_counter() - started
    verdict = "passed" if result.passed else f"FAILED ({len(result.failures)} dumped)"
    logger.info("[after_suite] %s checked=%d %s in %.2fs", result.suite, result.checked, verdict, dt)
    for failure in result.failures[:3]:
        logger.warning("[after_suite] %s counterexample %s %s", result.suite, failure.table, failure.detail)


def run_suite(name: str, scope: Optional[int] = None, options: Optional[SuiteOptions] = None) -> SuiteResult:
    suite, default_scope = get_suite(name)
    scope = default_scope if scope is None else scope
    started = before_suite_cb(name, scope)
    result = suite(scope, options or SuiteOptions())
    after_suite_cb(result, started)
    return result


def cmd_verify(
    suite: str, scope: Optional[int] = None, samples: int = 200, seed: int = 0
) -> Dict[str, Any]:
    """
    Run one named suite, or every suite for "all" (each at its own default
    scope when none is given). Output is independent of timing and of the
    order suites finish in.
    """
    try:
        names: List[str] = list(SUITES) if suite == "all" else [suite]
        options = SuiteOptions(samples=samples, seed=seed)
        summary = VerifySummary(results=[run_suite(name, scope, options) for name in names])
        return {"status": "success", "passed": summary.passed, "summary": summary, "text": summary.to_kv()}
    except ValueError as e:
        logger.error("[cmd_verify] Error: %s", e)
        return {"status": "error", "message": str(e), "error": type(e).__name__}
