import io
import json
import subprocess
import sys

import pytest

from catx.charcalc import FormalCharacter, costandard_character
from catx.chario import character_dumps, module_dumps
from catx.cli import main
from catx.incidence import build_incidence_algebra, interval_module
from catx.rootsystem import build_root_system


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text_and_json(capsys, tmp_path):
    code, out, err = run_cli(capsys, "roots", "--type", "A2")
    assert code == 0
    assert "3 positive roots" in out and "group order 6" in out
    target = tmp_path / "roots.json"
    code, out, _ = run_cli(capsys, "roots", "--type", "B2", "--json", "--out", str(target))
    assert code == 0 and out == ""
    payload = json.loads(target.read_text())
    assert payload["count"] == 4 and payload["weyl_order"] == 8
    assert [1, 1] in payload["positive_roots"]


def test_weyl_biclosed_json(capsys):
    code, out, _ = run_cli(capsys, "weyl", "--type", "G2", "--biclosed", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 12
    assert payload["longest_word"] == [2, 1, 2, 1, 2, 1]
    assert payload["biclosed"] == {
        "count": 12,
        "witnessed": 12,
        "matches_group": True,
    }


def test_weyl_elements_listing(capsys):
    code, out, _ = run_cli(capsys, "weyl", "--type", "A2", "--elements", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["elements"]) == 6
    assert [] in payload["elements"]


def test_char_matches_library(capsys):
    code, out, _ = run_cli(
        capsys,
        "char", "--type", "A2", "--kind", "nabla", "--itheta", "all", "--j", "1",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    rs = build_root_system("A2")
    th = FormalCharacter("theta", frozenset([1, 2]))
    expected = json.loads(character_dumps(rs, costandard_character(rs, th, [1])))
    assert payload == expected


def test_char_text_output(capsys):
    code, out, _ = run_cli(
        capsys, "char", "--type", "B2", "--kind", "E", "--itheta", "1,2", "--j", ""
    )
    assert code == 0
    assert "E(theta, J=[])" in out and "1 weights" in out


def test_char_decompose_pipeline(capsys, tmp_path):
    char_file = tmp_path / "nabla.json"
    code, _, _ = run_cli(
        capsys,
        "char", "--type", "B2", "--kind", "nabla", "--itheta", "all", "--j", "1,2",
        "--json", "--out", str(char_file),
    )
    assert code == 0
    code, out, err = run_cli(
        capsys, "decompose", "--in", str(char_file), "--json"
    )
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["remainder_total"] == 0
    assert [f["j"] for f in payload["factors"]] == [[], [1], [2], [1, 2]]
    assert all(f["mult"] == 1 for f in payload["factors"])


def test_decompose_tie_breaks_agree(capsys, tmp_path):
    char_file = tmp_path / "full.json"
    run_cli(
        capsys,
        "char", "--type", "A2", "--kind", "M", "--itheta", "all", "--j", "",
        "--json", "--out", str(char_file),
    )
    payloads = []
    for tb in ("0", "1", "2"):
        code, out, _ = run_cli(
            capsys, "decompose", "--in", str(char_file), "--json", "--tie-break", tb
        )
        assert code == 0
        payloads.append(json.loads(out))
    assert payloads[0] == payloads[1] == payloads[2]


def test_decompose_partial_character_exits_1(capsys, tmp_path):
    bad = tmp_path / "partial.json"
    bad.write_text(
        json.dumps(
            {
                "type": "A2",
                "label": "theta",
                "itheta": [1, 2],
                "weights": [{"coset_rep": [], "v": [1], "mult": 1}],
            }
        )
    )
    code, out, _ = run_cli(capsys, "decompose", "--in", str(bad), "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["diagnostic"]
    assert payload["remainder_total"] >= 1


def test_decompose_lenient_vs_strict(capsys, tmp_path):
    # the rep word [1] is inside the stabilizer, so it canonicalizes away
    f = tmp_path / "noncanonical.json"
    f.write_text(
        json.dumps(
            {
                "type": "A2",
                "label": "theta",
                "itheta": [1, 2],
                "weights": [{"coset_rep": [1], "v": [], "mult": 1}],
            }
        )
    )
    code, out, err = run_cli(capsys, "decompose", "--in", str(f), "--json")
    assert code == 0
    assert "warning:" in err and "not canonical" in err
    assert json.loads(out)["ok"] is True
    code, _, err = run_cli(capsys, "decompose", "--in", str(f), "--strict")
    assert code == 2
    assert "error:" in err


def test_decompose_stdin(capsys, monkeypatch):
    rs = build_root_system("A1")
    th = FormalCharacter("theta", frozenset([1]))
    text = character_dumps(rs, costandard_character(rs, th, [1]))
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run_cli(capsys, "decompose", "--in", "-", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_decompose_type_crosscheck(capsys, tmp_path):
    f = tmp_path / "char.json"
    f.write_text(
        json.dumps(
            {"type": "A2", "label": "theta", "itheta": [], "weights": []}
        )
    )
    code, _, err = run_cli(capsys, "decompose", "--in", str(f), "--type", "B2")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "decompose", "--in", str(tmp_path / "nope.json"))
    assert code == 2 and "no such file" in err


def test_input_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "roots", "--type", "Z9")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "roots", "--type", "E8")
    assert code == 2 and "guard" in err
    code, _, err = run_cli(
        capsys, "char", "--type", "A2", "--kind", "M", "--itheta", "1", "--j", "2"
    )
    assert code == 2
    code, _, err = run_cli(capsys, "algebra", "--n", "9")
    assert code == 2


def test_argparse_rejections(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["char", "--type", "A2"])  # missing --kind
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--in", "x", "--tie-break", "7"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_quick_pass(capsys, tmp_path):
    report_file = tmp_path / "report.json"
    csv_file = tmp_path / "report.csv"
    code, out, _ = run_cli(
        capsys,
        "verify", "--types", "A1", "--max-rank", "1",
        "--out", str(report_file), "--csv", str(csv_file),
    )
    assert code == 0
    assert "overall: pass" in out
    assert "biclosed: 1 checks, all pass" in out
    report = json.loads(report_file.read_text())
    assert report["overall_status"] == "pass"
    assert len(report["records"]) == 37
    csv_lines = csv_file.read_text().strip().split("\n")
    assert csv_lines[0] == "check,params,passed,counterexample,wall_time_s"
    assert len(csv_lines) == 38


def test_verify_failing_convention(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--types", "A2", "--checks", "filtration",
        "--jprime-convention", "i-minus-j",
    )
    assert code == 1
    assert "overall: fail" in out
    assert "FAILED" in out


def test_verify_rejects_bad_check(capsys):
    code, _, err = run_cli(capsys, "verify", "--checks", "bogus")
    assert code == 2 and "unknown checks" in err


def test_algebra_regular_json(capsys):
    code, out, _ = run_cli(capsys, "algebra", "--n", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 3
    assert payload["radical_series"] == [1, 0]
    assert payload["cartan_determinant"] == "1"
    assert payload["heredity_passed"] is True
    assert [(s["total_dim"], s["multiplicity"], s["is_certified_local"])
            for s in payload["summands"]] == [(2, 1, True), (1, 1, True)]


def test_algebra_module_file(capsys, tmp_path):
    a = build_incidence_algebra(2)
    mod = interval_module(a, frozenset(), frozenset({1, 2}))
    f = tmp_path / "mod.json"
    f.write_text(module_dumps(mod))
    code, out, _ = run_cli(capsys, "algebra", "--n", "2", "--module", str(f), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["decomposed"].startswith("module file")
    assert [(s["total_dim"], s["multiplicity"]) for s in payload["summands"]] == [(4, 1)]
    code, _, err = run_cli(capsys, "algebra", "--n", "1", "--module", str(f))
    assert code == 2 and "over n=2" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catx.cli", "roots", "--type", "A2", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 3
