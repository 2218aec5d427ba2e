import pytest

from junta_bounds.cache_service import ResultCache, atomic_write
from junta_bounds.constructions import xi
from junta_bounds.measures.dyadic import DyadicRational
from junta_bounds.reports import SuiteResult
from junta_bounds.tables import format_table, parse_table
from junta_bounds.tools import suites
from junta_bounds.tools.search_tools import cmd_bounds, cmd_search
from junta_bounds.tools.suites import SuiteOptions, get_suite, tables_upto
from junta_bounds.tools.table_tools import cmd_analyze, cmd_construct
from junta_bounds.tools.verify_tools import cmd_verify, run_suite


# ---------- analyze ----------
def test_analyze_and():
    result = cmd_analyze("bf:v1:n=2:0x8")
    assert result["status"] == "success"
    report = result["report"]
    assert (report.degree, report.relevant_count, report.hitting_set.size) == (2, 2, 1)
    assert report.weight_total == DyadicRational(1, 1)
    assert report.maxonomials == [[1, 2]]
    assert report.h_le_d3 and report.weight_ge_scaled_r and report.ns_junta
    assert report.block_sensitivity is None
    assert "weight_total=1/2" in result["text"].splitlines()
    assert "hitting_set.members=1" in result["text"].splitlines()


def test_analyze_xi_three_from_a_file(tmp_path):
    path = tmp_path / "xi3.bf"
    path.write_text(format_table(xi(3).table) + "\n", encoding="utf-8")
    report = cmd_analyze(str(path))["report"]
    assert (report.degree, report.relevant_count) == (3, 10)


def test_analyze_with_block_sensitivity():
    report = cmd_analyze("bf:v1:n=3:0xe8", with_bs=True)["report"]
    assert report.block_sensitivity == 2
    assert report.h_le_d_bs


def test_analyze_reports_parse_errors():
    result = cmd_analyze("bf:v1:n=2:0xg")
    assert result["status"] == "error"
    assert result["error"] == "ParseError"
    assert "at byte 12" in result["message"]


def test_analyze_missing_file():
    result = cmd_analyze("/nonexistent/table.bf")
    assert result["status"] == "error"


# ---------- construct ----------
def test_construct_xi_two():
    result = cmd_construct("xi", d=2)
    assert result["status"] == "success"
    assert result["text"].startswith("bf:v1:n=4:")
    assert parse_table(result["text"]) == xi(2).table


def test_construct_needs_its_arguments():
    result = cmd_construct("compose", f="bf:v1:n=2:0x8")
    assert result["status"] == "error"
    assert "--g" in result["message"]
    assert cmd_construct("and-split", f="bf:v1:n=2:0x8", i=1)["text"] == "bf:v1:n=3:0x80"
    assert cmd_construct("self-compose", f="bf:v1:n=2:0x8", k=2)["text"] == "bf:v1:n=4:0x8000"


# ---------- search / bounds ----------
def test_search_is_cached_byte_for_byte(tmp_path):
    cache = ResultCache(tmp_path / "cache")
    first = cmd_search(3, cache=cache, out=str(tmp_path / "n3.csv"))
    second = cmd_search(3, jobs=2, cache=cache)
    assert first["status"] == second["status"] == "success"
    assert first["text"] == second["text"]
    assert (tmp_path / "n3.csv").read_text(encoding="utf-8") == first["text"]
    assert len(list((tmp_path / "cache").rglob("*.txt"))) == 1


def test_search_rejects_bad_jobs(tmp_path):
    result = cmd_search(2, jobs=0, cache=ResultCache(tmp_path))
    assert result["status"] == "error"


def test_bounds_table_and_report(tmp_path):
    result = cmd_bounds(30, table=True, out=str(tmp_path / "bounds.csv"))
    assert result["report"].best_d == 11
    written = (tmp_path / "bounds.csv").read_text(encoding="utf-8")
    assert written == result["csv"]
    assert ",6.614" in written.splitlines()[11]


def test_atomic_write_replaces_without_leftovers(tmp_path):
    target = tmp_path / "out" / "x.txt"
    atomic_write(target, "one")
    atomic_write(target, "two")
    assert target.read_text(encoding="utf-8") == "two"
    assert [p.name for p in target.parent.iterdir()] == ["x.txt"]


def test_cache_key_ignores_parameter_order(tmp_path):
    cache = ResultCache(tmp_path)
    assert cache.key("search", {"n": 3, "degree": None}) == cache.key("search", {"degree": None, "n": 3})
    assert cache.key("search", {"n": 3}) != ResultCache(tmp_path, version="0").key("search", {"n": 3})


# ---------- verify ----------
@pytest.mark.parametrize(
    "name, scope",
    [
        ("claim-wi", 3),
        ("lemma1-decomposition", 3),
        ("hcube", 3),
        ("hbs", 3),
        ("bs-degree", 3),
        ("ns-junta", 3),
        ("npn-invariance", 3),
        ("composition-multiplicativity", 2),
        ("xi-construction", 3),
        ("selector-chain", 4),
        ("extremal-identities", 3),
    ],
)
def test_suites_pass(name, scope):
    result = run_suite(name, scope)
    assert result.checked > 0
    assert result.failures == []


def test_weight_report_counts_relations():
    result = run_suite("prop1-weight-report", 3)
    assert result.passed
    assert result.notes["weight_increase"] == "0"
    assert int(result.notes["weight_equal"]) + int(result.notes["weight_decrease"]) > 0


def test_sampled_arities_are_reproducible():
    options = SuiteOptions(samples=5, seed=11)
    first = [tt.bits for tt in tables_upto(5, options, exhaustive_arity=2) if tt.arity == 5]
    again = [tt.bits for tt in tables_upto(5, options, exhaustive_arity=2) if tt.arity == 5]
    assert len(first) == 5
    assert first == again


def test_verify_unknown_suite():
    result = cmd_verify("no-such-suite")
    assert result["status"] == "error"
    assert result["error"] == "UnknownSuite"


def test_verify_dumps_counterexamples(monkeypatch):
    def always_fails(scope, options):
        out = suites._Collector("always-fails", scope)
        out.check(False, parse_table("bf:v1:n=1:0x2"), "forced")
        return out.result()

    monkeypatch.setitem(suites.SUITES, "always-fails", (always_fails, 1))
    result = cmd_verify("always-fails")
    assert result["status"] == "success"
    assert not result["passed"]
    assert "results.0.failures.0.table=bf:v1:n=1:0x2" in result["text"].splitlines()
    assert isinstance(result["summary"].results[0], SuiteResult)
    assert get_suite("always-fails")[1] == 1


@pytest.mark.slow
@pytest.mark.parametrize("name", ["claim-base", "hcube", "hbs"])
def test_four_variable_suites(name):
    assert run_suite(name, 4).passed
