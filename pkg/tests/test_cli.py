"""Command line, tool server and the ambient config/logging/cache layers."""

import io
import json
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from oddcolor_lab.__main__ import build_parser, run
from oddcolor_lab.cache import ResultCache
from oddcolor_lab.config import Config, get_config, set_config
from oddcolor_lab.exceptions import (
    ConfigurationError,
    GraphFormatError,
    InputKindError,
    InvalidParameterError,
)
from oddcolor_lab.logging_config import (
    JSONFormatter,
    log_performance,
    resolve_log_level,
    setup_logging,
)
from oddcolor_lab.server import TOOL_DEFS, handle_call_tool, handle_list_tools
from oddcolor_lab.utils import format_error_response, fraction_to_str, parse_fraction
from oddcolor_lab.validators import (
    DEFAULT_QUANTITIES,
    DischargeRequest,
    GenerateRequest,
    QueryRequest,
    VerifyRequest,
    validate_request,
)


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)


def run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.usefixtures("restore_root_logger")
class TestCommandLine:
    def test_query(self, capsys):
        code, result = run_json(capsys, ["query", "--graph6", "Dhc", "--mad", "--girth"])
        assert code == 0
        assert result == {"graph6": "Dhc", "n": 5, "m": 5, "mad": "2", "girth": 5}

    def test_query_findings_context(self, capsys):
        code, result = run_json(capsys, ["query", "--family", "cycle:6", "--findings", "odd4"])
        assert code == 0
        assert [f["rule"] for f in result["findings"]] == ["four-thread"]

    def test_query_table_goes_to_stderr(self, capsys):
        assert run(["query", "--graph6", "Dhc", "--mad", "--table"]) == 0
        captured = capsys.readouterr()
        assert json.loads(captured.out)["mad"] == "2"
        assert "Quantity" in captured.err

    def test_query_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("Dhc\n# comment\nC~\n"))
        code, result = run_json(capsys, ["query", "--stdin", "--girth"])
        assert code == 0
        assert [r["girth"] for r in result["records"]] == [5, 3]

    def test_query_error(self, capsys):
        code, result = run_json(capsys, ["query", "--graph6", "!!", "--mad"])
        assert code == 2
        assert result["error"]["code"] == "PARSE_ERROR"

    def test_discharge_exit_codes(self, capsys):
        code, report = run_json(capsys, ["discharge", "--family", "sk:6", "--rules", "pcf5"])
        assert code == 0
        assert report["violations"] == []
        code, report = run_json(
            capsys, ["discharge", "--plane-fixture", "dodecahedron", "--rules", "planar6"]
        )
        assert code == 1
        assert report["paired_property"] is True

    def test_discharge_kind_mismatch(self, capsys):
        code, report = run_json(capsys, ["discharge", "--graph6", "Dhc", "--rules", "planar6"])
        assert code == 2
        assert report["error"]["code"] == "INPUT_KIND_MISMATCH"

    def test_verify(self, capsys, tmp_path):
        rows = tmp_path / "records.csv"
        argv = [
            "verify",
            "--theorem",
            "thm-pcf",
            "--family",
            "cycle:5",
            "--family",
            "sk:6",
            "--csv",
            str(rows),
        ]
        code, report = run_json(capsys, argv)
        assert code == 0
        assert report["summary"]["counterexamples"] == 0
        assert len(rows.read_text(encoding="utf-8").splitlines()) == 3

    def test_verify_with_a_bad_palette(self, capsys):
        code, report = run_json(
            capsys, ["verify", "--theorem", "thm-pcf", "--c", "4", "--family", "cycle:5"]
        )
        assert code == 2
        assert report["error"]["code"] == "INVALID_PARAMETER"

    def test_verify_reports_errors_with_exit_code_two(self, capsys):
        code, report = run_json(capsys, ["verify", "--theorem", "thm-planar6", "--family", "sk:4"])
        assert code == 2
        assert report["summary"]["errors"] == 1

    def test_gen(self, capsys):
        assert run(["gen", "cycle:5"]) == 0
        assert capsys.readouterr().out == "Dhc\n"

    def test_gen_to_file(self, tmp_path):
        target = tmp_path / "c5.pg"
        assert run(["gen", "plane:c5", "--format", "planegraph", "--out", str(target)]) == 0
        assert target.read_text(encoding="ascii").startswith("planegraph 5 5 2")

    def test_gen_error(self, capsys):
        code, result = run_json(capsys, ["gen", "foo:1"])
        assert code == 2
        assert result["error"]["code"] == "PARSE_ERROR"

    def test_configuration_error(self, capsys):
        assert run(["query", "--graph6", "Dhc", "--mad", "--jobs", "0"]) == 2
        assert "Configuration error" in capsys.readouterr().err

    def test_overrides_reach_the_global_config(self, capsys):
        assert run(["query", "--graph6", "Dhc", "--mad", "--budget-ms", "500"]) == 0
        capsys.readouterr()
        assert get_config().budget_ms == 500

    def test_argument_errors(self):
        parser = build_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(["query", "--mad"])
        with pytest.raises(SystemExit):
            parser.parse_args(["verify", "--theorem", "thm-nope"])
        with pytest.raises(SystemExit):
            parser.parse_args([])


class TestServer:
    @pytest.mark.asyncio
    async def test_list_tools(self):
        tools = await handle_list_tools()
        assert {tool.name for tool in tools} == {
            "oc_query",
            "oc_verify_theorem",
            "oc_discharge",
            "oc_generate",
        }
        assert len(tools) == len(TOOL_DEFS)

    @pytest.mark.asyncio
    async def test_generate_tool(self):
        content = await handle_call_tool("oc_generate", {"family": "cycle:5"})
        assert json.loads(content[0].text)["graph6"] == "Dhc"

    @pytest.mark.asyncio
    async def test_query_tool_reports_errors_in_band(self):
        content = await handle_call_tool("oc_query", {"graph6": "Dhc", "quantities": ["x"]})
        assert json.loads(content[0].text)["error"]["code"] == "INVALID_PARAMETER"

    @pytest.mark.asyncio
    async def test_unknown_tool(self):
        with pytest.raises(ValueError):
            await handle_call_tool("oc_nope", {})


class TestConfig:
    def test_defaults(self):
        config = get_config()
        assert config.to_dict() == {
            "log_level": "WARNING",
            "budget_ms": 10_000,
            "jobs": 1,
            "max_enum_vertices": 7,
            "seed": 0,
            "cache_results": True,
        }

    def test_from_env(self, monkeypatch):
        monkeypatch.setenv("ODDCOLOR_BUDGET_MS", "250")
        monkeypatch.setenv("ODDCOLOR_JOBS", "4")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        config = get_config()
        assert (config.budget_ms, config.jobs, config.log_level) == (250, 4, "DEBUG")

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv("ODDCOLOR_SEED", "seven")
        with pytest.raises(ConfigurationError):
            Config.from_env()
        monkeypatch.delenv("ODDCOLOR_SEED")
        monkeypatch.setenv("LOG_LEVEL", "chatty")
        with pytest.raises(ConfigurationError):
            get_config()

    def test_with_overrides(self):
        config = Config().with_overrides(seed=9, jobs=None)
        assert (config.seed, config.jobs) == (9, 1)
        with pytest.raises(ConfigurationError):
            Config().with_overrides(max_enum_vertices=10)
        with pytest.raises(ConfigurationError):
            set_config(Config(budget_ms=0))


class TestLogging:
    def test_resolve_log_level(self):
        assert resolve_log_level() == "WARNING"
        assert resolve_log_level(explicit_level="info", verbose=2) == "INFO"
        assert resolve_log_level(verbose=1) == "INFO"
        assert resolve_log_level(verbose=2) == "DEBUG"
        assert resolve_log_level(quiet=1) == "ERROR"
        assert resolve_log_level(quiet=2) == "CRITICAL"

    def test_json_formatter_carries_context_fields(self):
        record = logging.LogRecord("oddcolor_lab.test", logging.INFO, __file__, 1, "hi", (), None)
        record.campaign = "thm-pcf"
        record.index = 3
        payload = json.loads(JSONFormatter().format(record))
        assert payload["message"] == "hi"
        assert payload["level"] == "INFO"
        assert payload["campaign"] == "thm-pcf"
        assert payload["index"] == 3
        assert "graph6" not in payload

    @pytest.mark.usefixtures("restore_root_logger")
    def test_setup_logging_writes_json(self):
        stream = io.StringIO()
        setup_logging(level="INFO", format_json=True, stream=stream)
        logging.getLogger("oddcolor_lab.test").info("ran", extra={"ruleset": "pcf5"})
        payload = json.loads(stream.getvalue().splitlines()[-1])
        assert payload["ruleset"] == "pcf5"

    def test_log_performance(self, caplog):
        logger = logging.getLogger("oddcolor_lab.test")

        @log_performance(logger, "double")
        def double(x):
            return 2 * x

        with caplog.at_level(logging.INFO, logger="oddcolor_lab.test"):
            assert double(4) == 8
        assert "double completed" in caplog.text

    def test_log_performance_reports_failures(self, caplog):
        logger = logging.getLogger("oddcolor_lab.test")

        @log_performance(logger, "explode")
        def explode():
            raise InvalidParameterError("x", "boom")

        with caplog.at_level(logging.INFO, logger="oddcolor_lab.test"):
            with pytest.raises(InvalidParameterError):
                explode()
        assert "explode failed" in caplog.text

    @pytest.mark.asyncio
    async def test_log_performance_wraps_coroutines(self, caplog):
        logger = logging.getLogger("oddcolor_lab.test")

        @log_performance(logger, "wait")
        async def wait():
            return "done"

        with caplog.at_level(logging.INFO, logger="oddcolor_lab.test"):
            assert await wait() == "done"
        assert "wait completed" in caplog.text


class TestResultCache:
    def test_hits_and_misses(self):
        cache = ResultCache()
        calls = []
        for _ in range(3):
            cache.get_or_compute("Dhc", "mad", lambda: calls.append(1) or "2")
        assert calls == [1]
        assert cache.stats() == {"entries": 1, "hits": 2, "misses": 1}
        cache.clear()
        assert cache.stats() == {"entries": 0, "hits": 0, "misses": 0}

    def test_oldest_entry_is_evicted(self):
        cache = ResultCache(max_entries=2)
        for quantity in ("a", "b", "c"):
            cache.get_or_compute("Dhc", quantity, lambda: quantity)
        assert cache.stats()["entries"] == 2
        assert cache.get_or_compute("Dhc", "a", lambda: "recomputed") == "recomputed"

    def test_concurrent_callers_agree(self):
        cache = ResultCache()
        barrier = threading.Barrier(8)

        def compute():
            return object()

        def worker(_):
            barrier.wait()
            return cache.get_or_compute("Dhc", "chi_odd", compute)

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(worker, range(8)))
        assert all(result is results[0] for result in results)
        assert cache.stats()["entries"] == 1


class TestValidation:
    def test_query_defaults(self):
        request = validate_request(QueryRequest, {"graph6": "Dhc"})
        assert request.quantities == list(DEFAULT_QUANTITIES)
        assert request.c == 5

    def test_query_rejections(self):
        with pytest.raises(InvalidParameterError):
            validate_request(QueryRequest, {"graph6": "Dhc", "c": 0})
        with pytest.raises(InvalidParameterError):
            validate_request(QueryRequest, {"graph6": "Dhc", "girth_corollary": 4})
        with pytest.raises(InvalidParameterError):
            validate_request(QueryRequest, {"graph6": "Dhc", "rules": "pcf4"})

    def test_verify_request(self):
        request = validate_request(VerifyRequest, {"theorem": "lemma-odd"})
        assert request.count == 100 and request.corpus is None
        with pytest.raises(InvalidParameterError):
            validate_request(VerifyRequest, {"theorem": "lemma-odd", "max_n": 10})

    def test_discharge_request(self):
        request = validate_request(DischargeRequest, {"family": "sk:6", "rules": "pcf5"})
        assert request.scope == "all" and request.include_transfers
        with pytest.raises(InvalidParameterError):
            validate_request(DischargeRequest, {"family": "sk:6", "rules": "pcf5", "bound": "1.5"})

    def test_generate_request(self):
        assert validate_request(GenerateRequest, {"family": "sk:4"}).format == "graph6"
        with pytest.raises(InvalidParameterError) as info:
            validate_request(GenerateRequest, {"family": "sk:4", "format": "dot"})
        assert info.value.details == {"parameter": "format"}


class TestErrors:
    def test_error_payloads(self):
        assert format_error_response(GraphFormatError("bad", line=3)) == {
            "code": "PARSE_ERROR",
            "message": "bad",
            "line": 3,
        }
        mismatch = format_error_response(InputKindError("plane graph", "graph"))
        assert mismatch["code"] == "INPUT_KIND_MISMATCH"
        assert mismatch["details"] == {"expected": "plane graph", "received": "graph"}

    def test_foreign_exceptions(self):
        payload = format_error_response(ValueError("boom"))
        assert payload == {"code": "INTERNAL_ERROR", "message": "ValueError: boom"}

    def test_rationals(self):
        assert parse_fraction("22/9") == Fraction(22, 9)
        assert parse_fraction(" 0.25 ") == Fraction(1, 4)
        assert fraction_to_str(parse_fraction("6/3")) == "2"
        assert fraction_to_str(Fraction(-12)) == "-12"
        with pytest.raises(InvalidParameterError):
            parse_fraction("two")
        with pytest.raises(InvalidParameterError):
            parse_fraction("1/0")
