"""Command line behaviour: exit codes, text and JSON output, witnesses."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from omlkit import cli, corpus, structfile
from omlkit.rlse import check_rlse, derived_lattice, is_boolean_ring

DATA = Path(__file__).resolve().parent.parent / "data"
SCHEMA = json.loads((resources.files("omlkit") / "report_schema.json").read_text())


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run_cli(*argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


def test_check_oml_pass():
    code, out, err = run_cli("check-oml", "boolean_3")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "check-oml boolean_3: PASS"
    assert all(line.startswith("  [ok]") for line in lines[1:])


def test_check_oml_failure_exit_code():
    code, out, _ = run_cli("check-oml", "o6")
    assert code == 1
    assert out.splitlines()[0] == "check-oml o6: FAIL"
    assert "orthomodular-law" in out


def test_unknown_target_is_usage_error():
    code, out, err = run_cli("check-oml", "no_such_thing")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_malformed_file_is_usage_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("KIND oml\nELEMENTS\n")
    code, _, err = run_cli("check-oml", str(bad))
    assert code == 2
    assert "error:" in err


def test_wrong_structure_kind_for_command():
    code, _, err = run_cli("check-rlse", "mo2")
    assert code == 2
    assert "rlse" in err


@pytest.mark.parametrize("argv", [
    ("check-oml", "boolean_2"),
    ("check-oml", "o6"),
    ("check-rlse", "paper-example-2set"),
    ("derive", "paper-example-2set"),
    ("construct", "mo2", "--plus", "t1"),
    ("terms-enumerate",),
    ("terms-filter",),
    ("states-find", "mo2"),
    ("boolean-test", "mo2", "--witnesses"),
])
def test_json_reports_validate_against_schema(argv):
    run_json(*argv)


def test_text_and_json_verdicts_agree():
    for target, want in (("boolean_2", 0), ("o6", 1)):
        text_code, out, _ = run_cli("check-oml", target)
        json_code, report = run_json("check-oml", target)
        assert text_code == json_code == want
        assert report["passed"] == (want == 0)
        assert ("PASS" in out.splitlines()[0]) == report["passed"]


def test_witnesses_stripped_by_default():
    _, report = run_json("check-oml", "o6")
    assert all(c["witness"] is None for c in report["checks"])


def test_witnesses_flag_includes_assignment():
    _, report = run_json("check-oml", "o6", "--witnesses")
    failed = [c for c in report["checks"] if not c["passed"]]
    assert failed[0]["name"] == "orthomodular-law"
    assert set(failed[0]["witness"]) == {"x", "y"}


def test_check_rlse_runs_all_follow_up_checks():
    code, report = run_json("check-rlse", "paper-example-2set")
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert len(names) == 17
    assert "orthogonal-addition-form" in names
    assert names[-1] == "correspondence-verdicts-agree"


def test_derive_emits_the_ring_lattice():
    code, out, _ = run_cli("derive", "paper-example-2set")
    assert code == 0
    sf = structfile.parse_structure(out)
    poset, comp = structfile.to_oml_input(sf)
    from omlkit.lattice import check_oml
    report = check_oml(poset, comp)
    assert report.passed
    assert report.oml == corpus.builtin("boolean_2")


def test_derive_rejects_an_invalid_ring(tmp_path):
    # corrupting 0+0 breaks R4 at (x={1,2}, y={})
    lines = (DATA / "paper-example-2set.txt").read_text().splitlines()
    pos = lines.index("OPLUS") + 1
    lines[pos] = "{1}" + lines[pos][len("{}"):]
    bad = tmp_path / "mutant.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli("derive", str(bad))
    assert code == 1
    assert "[FAIL] R4" in out


def test_construct_t1_yields_a_boolean_ring():
    code, out, _ = run_cli("construct", "boolean_2", "--plus", "t1")
    assert code == 0
    ring = structfile.to_rlse(structfile.parse_structure(out))
    assert check_rlse(ring).passed
    assert is_boolean_ring(ring).is_boolean_ring


def test_construct_custom_plus_reproduces_the_shipped_ring():
    code, out, _ = run_cli("construct", "boolean_2", "--plus",
                           "custom=" + str(DATA / "paper-example-2set.txt"))
    assert code == 0
    ring = structfile.to_rlse(structfile.parse_structure(out))
    assert ring == corpus.builtin("paper-example-2set")


def test_construct_rejects_a_bad_custom_plus(tmp_path):
    labels = corpus.builtin("boolean_2").elements
    n = len(labels)
    rows = "\n".join(" ".join("{}" for _ in range(n)) for _ in range(n))
    custom = tmp_path / "allzero.txt"
    custom.write_text("KIND rlse\nELEMENTS\n" + " ".join(labels) +
                      f"\nOPLUS\n{rows}\nTIMES\n{rows}\n")
    code, out, _ = run_cli("construct", "boolean_2", "--plus",
                           "custom=" + str(custom))
    assert code == 1
    assert "FAIL" in out


def test_bad_plus_value():
    code, _, err = run_cli("construct", "boolean_2", "--plus", "t3")
    assert code == 2
    assert "t3" in err


def test_terms_enumerate_lists_all_96():
    code, out, _ = run_cli("terms-enumerate")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 98
    assert "96 terms" in lines[1]


def test_terms_filter_default_corpus():
    code, out, _ = run_cli("terms-filter")
    assert code == 0
    assert "surviving classes: 2" in out
    assert "eliminated candidates: 94" in out


def test_terms_filter_unknown_name():
    code, _, err = run_cli("terms-filter", "--corpus", "boolean_2,nope")
    assert code == 2
    assert "nope" in err


def test_states_find_emits_a_checkable_file(tmp_path):
    code, out, _ = run_cli("states-find", "mo2")
    assert code == 0
    sf = structfile.parse_structure(out)
    assert len(sf.states) == 4
    saved = tmp_path / "mo2_states.txt"
    saved.write_text(out)
    code, out, _ = run_cli("states-check-full", str(saved))
    assert code == 0
    assert "order-determining" in out


def test_states_find_reports_lattice_failure_first():
    code, out, _ = run_cli("states-find", "o6")
    assert code == 1
    assert "orthomodular-law" in out


def _boolean_2_with_states(rows):
    oml = corpus.builtin("boolean_2")
    base = structfile.serialize_structure(structfile.from_oml(oml))
    idx = {lab: i for i, lab in enumerate(oml.elements)}
    lines = []
    for row in rows:
        vals = ["0"] * len(oml.elements)
        for lab, v in row.items():
            vals[idx[lab]] = v
        lines.append(" ".join(vals))
    return base + "STATES\n" + "\n".join(lines) + "\n"


def test_states_check_full_detects_a_broken_state(tmp_path):
    text = _boolean_2_with_states([{"{1}": "1", "{2}": "1", "{1,2}": "1"}])
    bad = tmp_path / "broken.txt"
    bad.write_text(text)
    code, out, _ = run_cli("states-check-full", str(bad))
    assert code == 1
    assert "state 0 fails orthogonal-additivity" in out


def test_states_check_full_passes_a_good_pair(tmp_path):
    text = _boolean_2_with_states([
        {"{1}": "1", "{1,2}": "1"},
        {"{2}": "1", "{1,2}": "1"},
    ])
    good = tmp_path / "good.txt"
    good.write_text(text)
    code, out, _ = run_cli("states-check-full", str(good))
    assert code == 0


def test_states_check_full_needs_a_states_section():
    code, _, err = run_cli("states-check-full", "boolean_2")
    assert code == 2
    assert "STATES" in err


def test_boolean_test_on_the_shipped_ring():
    code, report = run_json("boolean-test", "paper-example-2set", "--witnesses")
    assert code == 1
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["valid-ring"]["passed"]
    assert not by_name["boolean-ring"]["passed"]
    assert by_name["identity-route"]["passed"] == by_name["ring-route"]["passed"]


def test_boolean_test_on_mo2_names_the_witness():
    code, report = run_json("boolean-test", "mo2", "--witnesses")
    assert code == 1
    failed = [c for c in report["checks"] if not c["passed"]]
    assert failed[0]["name"] == "ring-inequality"
    w = failed[0]["witness"]
    assert {w["p"], w["q"]} == {"a", "b"}
    assert w["value"] == "2"


def test_boolean_test_on_a_boolean_lattice():
    code, report = run_json("boolean-test", "boolean_3")
    assert code == 0
    assert report["passed"]


def test_boolean_test_on_an_events_file(tmp_path):
    _, found, _ = run_cli("states-find", "boolean_2")
    sf = structfile.parse_structure(found)
    poset, comp = structfile.to_oml_input(sf)
    from omlkit.lattice import check_oml
    from omlkit.states import State, events_from_states
    oml = check_oml(poset, comp).oml
    ev = events_from_states(oml, [State(v) for v in sf.states])
    path = tmp_path / "events.txt"
    path.write_text(structfile.serialize_structure(structfile.from_events(ev)))
    code, out, _ = run_cli("boolean-test", str(path))
    assert code == 0
    assert "ring-inequality" in out


def test_corpus_dir_lookup(tmp_path, monkeypatch):
    (tmp_path / "local_ring.txt").write_text(
        (DATA / "paper-example-2set.txt").read_text())
    monkeypatch.setenv("OMLKIT_CORPUS_DIR", str(tmp_path))
    for name in ("local_ring", "local_ring.txt"):
        code, _, _ = run_cli("check-rlse", name)
        assert code == 0


def test_verify_all_passes():
    code, report = run_json("verify-all")
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert names == [f"criterion-{i}" for i in range(1, 10)]
    assert all(c["passed"] for c in report["checks"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "omlkit.cli", "check-oml", "boolean_2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
