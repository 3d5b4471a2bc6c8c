"""Acceptance gate: one test per criterion, each at its stated tolerance.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import itertools
import json
import subprocess
import sys
import time

import pytest

from conftest import FIXTURES
from specalg import fa, ia
from specalg.algebra import LawId, Status
from specalg.audit import audit, check_law
from specalg.cli import main
from specalg.generate import GenConfig, enumerate_all, gen_random
from specalg.theories import get_theory

FA = get_theory("fa")


def cli_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def by_law(report):
    return {v["law"]: v for v in report["verdicts"]}


@pytest.mark.criterion(1, "FA audit: all 23 laws hold, PRECONG premise hits >= 50, < 60 s")
def test_fa_full_audit(capsys):
    t0 = time.perf_counter()
    code, report = cli_json(capsys, "audit", "--theory", "fa", "--samples", "1000", "--seed", "1",
                            "--max-states", "3", "--alphabet-size", "2")
    elapsed = time.perf_counter() - t0
    verdicts = by_law(report)
    assert len(verdicts) == 23
    assert {v["status"] for v in verdicts.values()} == {"holds"}
    assert verdicts["PRECONG"]["premiseHits"] >= 50
    assert code == 0
    assert elapsed < 60


@pytest.mark.criterion(2, "A|B <= A&B for every FA pair (<= 2 states, 1 symbol), < 10 s")
def test_thm1_exhaustive():
    t0 = time.perf_counter()
    v = check_law(FA, LawId.THM1, GenConfig("fa", max_states=2, alphabet_size=1, mode="exhaustive"))
    elapsed = time.perf_counter() - t0
    assert v.samples_checked == 196 ** 2
    assert v.inapplicable_count == 0
    assert v.status is Status.HOLDS
    assert elapsed < 10


@pytest.mark.slow
@pytest.mark.criterion(3, "MTS/meet exhaustive: unit law fails on a one-state must-loop, THM1 fails, both cross-checked")
def test_meet_unit_law_and_thm1():
    T = get_theory("mts", "meet")
    report = audit(T, GenConfig("mts", max_states=2, alphabet_size=1, mode="exhaustive", mts_rule="meet"))
    unit = report.verdict(LawId.PAR_UNIT)
    assert unit.status is Status.FAILS
    (w,) = unit.witness
    assert len(w.states) == 1 and len(w.must) == 1 and w.may == w.must
    (s, _, d), = w.must
    assert s == d
    assert report.verdict(LawId.THM1).status is Status.FAILS
    cross = report.thm2_cross_check
    assert cross["parUnitFailed"] and cross["thm1CounterexampleFound"]
    assert cross["parUnit"] == "fails" and cross["thm1"] == "fails"
    assert cross["thm1AtUnitWitness"] is False


@pytest.mark.criterion(4, "MTS/join: unit law holds on 1000 samples (seed 1)")
def test_join_unit_law(capsys):
    _, report = cli_json(capsys, "audit", "--theory", "mts", "--mts-rule", "join",
                         "--samples", "1000", "--seed", "1")
    unit = by_law(report)["PAR_UNIT"]
    assert unit["status"] == "holds"
    assert unit["samplesChecked"] == 1000
    assert report["config"]["mtsRule"] == "join"


@pytest.mark.criterion(5, "FA quotient: A&(B/A) <= B on 500 triples; X <= B/A for 500 premise-satisfying X, < 60 s")
def test_quotient_laws():
    t0 = time.perf_counter()
    cfg = GenConfig("fa", seed=5)
    triples = [tuple(gen_random(cfg, 3 * i + j) for j in range(3)) for i in range(500)]
    assert sum(fa.refines(fa.conjoin(a, fa.conj_quotient(b, a)), b) for a, b, _ in triples) == 500

    # rejection sampling: keep the first 500 X with A & X <= B
    kept = 0
    for i in itertools.count():
        a, b, x = (gen_random(cfg, 3 * (500 + i) + j) for j in range(3))
        if fa.refines(fa.conjoin(a, x), b):
            assert fa.refines(x, fa.conj_quotient(b, a))
            kept += 1
            if kept == 500:
                break
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(6, "associativity: THM5/THM6 on FA, THM5 on MTS (meet and join), 500 triples each")
def test_associativity():
    cases = [("fa", "meet", LawId.THM5_ASSOC), ("fa", "meet", LawId.THM6_ASSOC),
             ("mts", "meet", LawId.THM5_ASSOC), ("mts", "join", LawId.THM5_ASSOC)]
    for theory, rule, law in cases:
        v = check_law(get_theory(theory, rule), law, GenConfig(theory, sample_count=500, seed=6, mts_rule=rule))
        assert v.status is Status.HOLDS, (theory, rule, law)
        assert v.samples_checked == 500


@pytest.mark.criterion(7, "P/Q compat exit codes: optimistic 0, pessimistic 1, component 1")
def test_duality_pattern(capsys):
    codes = []
    for mode in ("optimistic", "pessimistic", "component"):
        codes.append(main(["compat", str(FIXTURES / "pq.spec"), "--left", "P", "--right", "Q", "--mode", mode]))
    capsys.readouterr()
    assert codes == [0, 1, 1]


@pytest.mark.criterion(8, "no universal interface automaton: every candidate (<= 2 states, 2 actions) defeated, < 120 s")
def test_no_universal():
    t0 = time.perf_counter()
    rows = ia.no_universal_witness(2, ("a", "b"))
    elapsed = time.perf_counter() - t0
    family = list(ia.enumerate_family(2, ("a", "b")))
    assert [r.candidate for r in rows] == family
    assert all(r.witness is not None and r.reason != "undefeated" for r in rows)
    assert elapsed < 120


@pytest.mark.criterion(9, "reproducibility: identical flags give byte-identical JSON modulo durationMs")
def test_reproducible_json():
    def body(argv):
        out = subprocess.run([sys.executable, "-m", "specalg", *argv], capture_output=True, text=True).stdout
        lines = out.splitlines()
        assert sum('"durationMs"' in ln for ln in lines) == 1
        return "\n".join(ln for ln in lines if '"durationMs"' not in ln)

    for theory in ("fa", "mts", "ia"):
        argv = ["audit", "--theory", theory, "--samples", "300", "--seed", "11", "--format", "json"]
        first, second = body(argv), body(argv)
        assert first and first == second, theory


def _oracle_disagreements(bound):
    autos = list(enumerate_all(GenConfig("fa", max_states=2, alphabet_size=2, mode="exhaustive")))
    langs = [fa.words_upto(a, bound) for a in autos]
    bad = []
    for i, a in enumerate(autos):
        for j, b in enumerate(autos):
            if fa.refines(a, b) != (langs[i] <= langs[j]):
                bad.append((i, j))
    return autos, langs, bad


@pytest.mark.slow
@pytest.mark.criterion(10, "refinement agrees with the length-6 word oracle on all FA pairs (<= 2 states, 2 symbols)")
def test_oracle_agreement_bound_6():
    # Expected to fail: an inclusion counterexample between two 2-state NFAs
    # can need length 7 (2 states x 4 subsets in the product), so the
    # length-6 oracle misses a few strict non-inclusions.
    autos, langs, bad = _oracle_disagreements(6)
    for i, j in bad[:3]:
        extra = sorted(fa.words_upto(autos[i], 7) - fa.words_upto(autos[j], 7), key=len)[0]
        print(f"disagreement on pair ({i}, {j}): shortest separating word {''.join(extra)!r}")
    assert not bad, f"{len(bad)} disagreements"


@pytest.mark.slow
def test_oracle_agreement_at_sound_bound():
    _, _, bad = _oracle_disagreements(7)
    assert not bad
