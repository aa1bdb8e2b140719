import json
from pathlib import Path

import pytest

import catx
from catx.errors import InputError, ResourceGuardError
from catx.verify import (
    CHECKS,
    REPORT_SCHEMA_ID,
    SuiteConfig,
    default_types,
    report_dumps,
    report_to_csv,
    run_suite,
)


def strip_run_dependent(report: dict) -> dict:
    out = json.loads(json.dumps(report))
    out.pop("generated_at")
    for rec in out["records"]:
        rec.pop("wall_time_s")
    return out


def test_default_types():
    assert default_types(1) == ("A1",)
    assert default_types(2) == ("A1", "A2", "B2", "C2", "G2")
    assert "C3" in default_types(3) and "F4" in default_types(4)


def test_suite_config_validation():
    with pytest.raises(InputError):
        SuiteConfig(checks=("nope",))
    with pytest.raises(InputError):
        SuiteConfig(checks=())
    with pytest.raises(InputError):
        SuiteConfig(itheta_mode="some")
    with pytest.raises(InputError):
        SuiteConfig(max_rank=0)
    with pytest.raises(ResourceGuardError):
        SuiteConfig(max_rank=5)
    with pytest.raises(InputError):
        SuiteConfig(types=("A4",), max_rank=3)
    cfg = SuiteConfig(max_rank=2)
    assert cfg.types == default_types(2)


def test_run_suite_a1_all_checks():
    report = run_suite(SuiteConfig(types=("A1",), max_rank=1))
    assert report["report_schema"] == REPORT_SCHEMA_ID
    assert report["tool_version"] == catx.__version__
    assert report["overall_status"] == "pass"
    assert set(report["config"]["checks"]) == set(CHECKS)
    records = report["records"]
    # 1 biclosed + (4 + 8) filtration + 4 order + 20 algebra
    assert len(records) == 37
    assert all(r["passed"] for r in records)
    assert all(r["counterexample"] is None for r in records)
    assert all(isinstance(r["wall_time_s"], float) for r in records)
    keys = [(r["check"], json.dumps(r["params"], sort_keys=True)) for r in records]
    assert keys == sorted(keys)


def test_run_suite_record_counts_rank2():
    report = run_suite(SuiteConfig(max_rank=2, sample_triples=200))
    assert len(report["records"]) == 217
    assert report["overall_status"] == "pass"


def test_full_only_mode():
    cfg = SuiteConfig(types=("A2",), checks=("filtration",), itheta_mode="full-only")
    report = run_suite(cfg)
    assert len(report["records"]) == 16
    assert all(r["params"]["itheta"] == [1, 2] for r in report["records"])


def test_rejected_convention_reported_as_failure():
    cfg = SuiteConfig(
        types=("A2",), checks=("filtration",), jprime_convention="i-minus-j"
    )
    report = run_suite(cfg)
    assert report["overall_status"] == "fail"
    failing = [r for r in report["records"] if not r["passed"]]
    assert failing
    assert all(r["counterexample"] is not None for r in failing)


def test_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        (Path(catx.__file__).parent / "report_schema.json").read_text()
    )
    report = run_suite(SuiteConfig(types=("A1",), max_rank=1))
    jsonschema.validate(report, schema)
    bad = dict(report)
    bad.pop("overall_status")
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, schema)


def test_report_deterministic_modulo_timestamps():
    cfg1 = SuiteConfig(types=("A2",), checks=("filtration", "order-axioms"))
    cfg2 = SuiteConfig(types=("A2",), checks=("filtration", "order-axioms"))
    r1 = strip_run_dependent(run_suite(cfg1))
    r2 = strip_run_dependent(run_suite(cfg2))
    assert r1 == r2


def test_report_dumps_and_csv():
    report = run_suite(SuiteConfig(types=("A1",), checks=("biclosed",)))
    text = report_dumps(report)
    assert text.endswith("\n")
    assert json.loads(text) == report
    csv_text = report_to_csv(report)
    lines = csv_text.strip().split("\n")
    assert lines[0] == "check,params,passed,counterexample,wall_time_s"
    assert len(lines) == 1 + len(report["records"])
    assert lines[1].startswith("biclosed,")
    assert ",pass," in lines[1]
