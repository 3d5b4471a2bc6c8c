import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from specalg.cli import main
from specalg.specfile import parse_spec

PQ = str(FIXTURES / "pq.spec")
FA_FILE = str(FIXTURES / "fa.spec")
MTS_FILE = str(FIXTURES / "mts.spec")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("mode,code", [("optimistic", 0), ("pessimistic", 1), ("component", 1)])
def test_compat_pattern(capsys, mode, code):
    assert run(capsys, "compat", PQ, "--left", "P", "--right", "Q", "--mode", mode)[0] == code


def test_compat_with_receiver(capsys):
    for mode in ("optimistic", "pessimistic", "component"):
        assert run(capsys, "compat", PQ, "--left", "P", "--right", "Q2", "--mode", mode)[0] == 0


def test_refine_exit_codes(capsys):
    assert run(capsys, "refine", FA_FILE, "--left", "A", "--right", "U")[:2] == (0, "true\n")
    assert run(capsys, "refine", FA_FILE, "--left", "U", "--right", "A")[:2] == (1, "false\n")


def test_undefined_operations_exit_4(capsys):
    code, _, err = run(capsys, "conjoin", FA_FILE, "--left", "A", "--right", "C")
    assert code == 4 and "alphabet mismatch" in err
    assert run(capsys, "compose", PQ, "--left", "P", "--right", "P3")[0] == 4
    assert run(capsys, "refine", PQ, "--left", "P", "--right", "Q")[0] == 4
    assert run(capsys, "compat", PQ, "--left", "P", "--right", "P3", "--mode", "optimistic")[0] == 4
    assert run(capsys, "conjoin", PQ, "--left", "P", "--right", "Q")[0] == 4
    assert run(capsys, "quotient", MTS_FILE, "--left", "M", "--right", "N", "--kind", "conj")[0] == 4


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "refine", FA_FILE, "--left", "A")[0] == 2
    assert run(capsys, "refine", FA_FILE, "--left", "A", "--right", "Z")[0] == 2
    assert run(capsys, "refine", str(tmp_path / "missing"), "--left", "A", "--right", "U")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "enumerate", "--theory", "fa", "--max-states", "3")[0] == 2


def test_parse_error_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.spec"
    bad.write_text("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nt s a q\nend\n")
    code, _, err = run(capsys, "refine", str(bad), "--left", "A", "--right", "A")
    assert code == 3 and "line 6" in err


def test_operation_output_roundtrips(capsys, tmp_path):
    for rule, musts in (("join", 1), ("meet", 0)):
        code, out, _ = run(capsys, "compose", MTS_FILE, "--left", "M", "--right", "W", "--mts-rule", rule)
        assert code == 0
        (value,) = parse_spec(out).specs.values()
        assert len(value.may) == 1 and len(value.must) == musts
    dest = tmp_path / "q.spec"
    assert run(capsys, "quotient", FA_FILE, "--left", "A", "--right", "U", "--kind", "par", "-o", str(dest))[0] == 0
    assert "theory nfa" in dest.read_text()
    code, out, _ = run(capsys, "conjoin", MTS_FILE, "--left", "M", "--right", "N")
    assert code == 0 and "inconsistent" in out
    assert run(capsys, "disjoin", MTS_FILE, "--left", "B", "--right", "N")[0] == 0


def test_audit_ia_json(capsys):
    code, out, _ = run(capsys, "audit", "--theory", "ia", "--samples", "500", "--seed", "7", "--format", "json")
    assert code == 1
    report = json.loads(out)
    par_total = next(v for v in report["verdicts"] if v["law"] == "PAR_TOTAL")
    assert par_total["status"] == "fails" and len(par_total["witness"]) == 2


def test_audit_text_and_exit_zero(capsys):
    code, out, _ = run(capsys, "audit", "--theory", "fa", "--samples", "100", "--seed", "2")
    assert code == 0 and "PRECONG" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--theory", "mts", "--max-states", "1", "--alphabet-size", "1")
    assert code == 0
    assert len(parse_spec(out).specs) == 4


def test_no_universal(capsys):
    code, out, _ = run(capsys, "no-universal", "--max-states", "1", "--format", "json")
    assert code == 0
    table = json.loads(out)
    assert table["candidates"] == table["defeated"] == 49


def test_determinization_cap_env(capsys, monkeypatch, tmp_path):
    n = 8
    lines = ["spec Big", "theory nfa", "alphabet a,b", "states " + ",".join(f"q{i}" for i in range(n)),
             "initial q0", f"accepting q{n - 1}", "t q0 a q0", "t q0 b q0", "t q0 a q1"]
    lines += [f"t q{i} {x} q{i + 1}" for i in range(1, n - 1) for x in "ab"]
    lines += ["end", "spec U", "theory nfa", "alphabet a,b", "states u", "initial u", "accepting u",
              "t u a u", "t u b u", "end"]
    f = tmp_path / "big.spec"
    f.write_text("\n".join(lines) + "\n")
    # a true inclusion explores every reachable subset of Big
    argv = ("refine", str(f), "--left", "Big", "--right", "Big")
    assert run(capsys, *argv)[0] == 0
    monkeypatch.setenv("SPECALG_MAX_DET_STATES", "8")
    code, _, err = run(capsys, *argv)
    assert code == 4 and "blow-up" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "specalg", "compat", PQ, "--left", "P", "--right", "Q", "--mode", "pessimistic"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1 and proc.stdout.strip() == "incompatible"
