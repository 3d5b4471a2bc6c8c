"""Law auditing: sample or enumerate argument tuples, evaluate each law,
shrink the first counterexample, and assemble a per-theory verdict report."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product as _cartesian
from typing import Optional

from .algebra import (
    IMPLICATIONS,
    INAPPLICABLE,
    LawId,
    Status,
    TheoryHandle,
    evaluate,
    law_arity,
    law_predicate,
)
from .generate import GenConfig

# Minimum number of instances whose premise held before an implication law
# may be reported as holding.
PREMISE_MINIMUM = {LawId.PRECONG: 50}
DEFAULT_PREMISE_MINIMUM = 1

THM2_NOTE = (
    "thm2CrossCheck is a report-level operationalization: the necessity of the "
    "unit law for 'A|B <= A&B' is a statement about theories, so the audit only "
    "records the observed pattern (unit-law verdict, THM1 verdict, and THM1 "
    "evaluated at the unit-law witness paired with the universal)."
)


@dataclass(frozen=True)
class LawVerdict:
    law: LawId
    status: Status
    samples_checked: int
    inapplicable_count: int
    premise_hits: Optional[int] = None
    witness: Optional[tuple] = None
    witness_index: Optional[int] = None

    def as_dict(self, render) -> dict:
        d = {
            "law": self.law.value,
            "status": self.status.value,
            "samplesChecked": self.samples_checked,
            "inapplicableCount": self.inapplicable_count,
        }
        if self.premise_hits is not None:
            d["premiseHits"] = self.premise_hits
        if self.witness is not None:
            d["witnessIndex"] = self.witness_index
            d["witness"] = [render(w, f"w{i + 1}") for i, w in enumerate(self.witness)]
        return d


@dataclass
class AuditReport:
    theory: str
    config: GenConfig
    verdicts: list
    thm2_cross_check: dict
    duration_ms: int
    render: object = None

    def verdict(self, law) -> LawVerdict:
        law = LawId(law)
        return next(v for v in self.verdicts if v.law is law)

    @property
    def failed(self):
        return [v for v in self.verdicts if v.status is Status.FAILS]

    def as_dict(self) -> dict:
        config = {"theory": self.theory, **self.config.as_dict()}
        if self.config.mode == "exhaustive":
            config["sampleCount"] = None
        return {
            "config": config,
            "verdicts": [v.as_dict(self.render) for v in self.verdicts],
            "thm2CrossCheck": self.thm2_cross_check,
            "durationMs": self.duration_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        c = self.config
        head = f"audit {self.theory}  mode={c.mode} max-states={c.max_states} alphabet-size={c.alphabet_size}"
        if c.mode == "random":
            head += f" samples={c.sample_count} seed={c.seed}"
        lines = [head, f"{'LAW':<15}{'STATUS':<14}{'CHECKED':>9}{'INAPPL':>9}{'PREMISE':>9}"]
        for v in self.verdicts:
            hits = "-" if v.premise_hits is None else str(v.premise_hits)
            lines.append(f"{v.law.value:<15}{v.status.value:<14}{v.samples_checked:>9}"
                         f"{v.inapplicable_count:>9}{hits:>9}")
        for v in self.failed:
            lines.append("")
            lines.append(f"counterexample for {v.law.value} (sample {v.witness_index}):")
            for i, w in enumerate(v.witness):
                lines.extend("  " + ln for ln in self.render(w, f"w{i + 1}").splitlines())
        lines.append("")
        lines.append("thm2 cross-check: " + self.thm2_cross_check["observation"])
        lines.append(f"duration: {self.duration_ms} ms")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=1 << 16)
def _sample(generate, config: GenConfig, index: int):
    return generate(config, index)


def _tuples(T: TheoryHandle, config: GenConfig, arity: int):
    if config.mode == "exhaustive":
        pool = list(T.enumerate(config))
        yield from enumerate(_cartesian(pool, repeat=arity))
    else:
        for i in range(config.sample_count):
            yield i, tuple(_sample(T.generate, config, i * arity + j) for j in range(arity))


def check_law(T: TheoryHandle, law: LawId, config: GenConfig) -> LawVerdict:
    """Evaluate ``law`` on every drawn tuple; the first false instance (by
    sample index) is shrunk and reported."""
    law = LawId(law)
    arity = law_arity(law)
    implication = law in IMPLICATIONS
    checked = inapplicable = hits = 0
    for index, args in _tuples(T, config, arity):
        checked += 1
        result, premise = evaluate(T, law, args)
        if result is INAPPLICABLE:
            inapplicable += 1
            continue
        if premise:
            hits += 1
        if result is False:
            return LawVerdict(law, Status.FAILS, checked, inapplicable,
                              hits if implication else None, shrink(T, law, args), index)
    status = Status.HOLDS
    if checked == inapplicable:
        status = Status.INAPPLICABLE
    elif implication and hits < PREMISE_MINIMUM.get(law, DEFAULT_PREMISE_MINIMUM):
        status = Status.INAPPLICABLE
    return LawVerdict(law, status, checked, inapplicable, hits if implication else None)


def shrink(T: TheoryHandle, law: LawId, witness: tuple) -> tuple:
    """Greedy, deterministic reduction of a falsifying tuple to a locally
    minimal one: delete transitions, delete or merge non-initial states, drop
    unused symbols."""
    args = list(witness)
    if T.reductions is None:
        return tuple(args)
    while True:
        step = _first_reduction(T, law, args)
        if step is None:
            return tuple(args)
        args = step


def _still_fails(T, law, args):
    return law_predicate(T, law, tuple(args)) is False


def _first_reduction(T, law, args):
    for i, a in enumerate(args):
        for smaller in T.reductions(a):
            trial = args[:i] + [smaller] + args[i + 1:]
            if _still_fails(T, law, trial):
                return trial
    if T.shared_alphabet and T.drop_symbol is not None:
        alphabet = args[0].alphabet
        if len(alphabet) > 1:
            for x in sorted(alphabet):
                if not any(T.uses_symbol(a, x) for a in args):
                    trial = [T.drop_symbol(a, x) for a in args]
                    if _still_fails(T, law, trial):
                        return trial
    return None


def _thm2_cross_check(T: TheoryHandle, verdicts: dict) -> dict:
    unit, thm1 = verdicts[LawId.PAR_UNIT], verdicts[LawId.THM1]
    out = {
        "note": THM2_NOTE,
        "parUnit": unit.status.value,
        "thm1": thm1.status.value,
        "parUnitFailed": unit.status is Status.FAILS,
        "thm1Applicable": thm1.status is not Status.INAPPLICABLE,
        "thm1CounterexampleFound": thm1.status is Status.FAILS,
        "thm1AtUnitWitness": None,
    }
    if unit.status is Status.INAPPLICABLE:
        out["observation"] = "unit law inapplicable (no universal specification); nothing to cross-check"
    elif unit.status is Status.FAILS:
        if thm1.status is Status.INAPPLICABLE:
            out["observation"] = "unit law fails; THM1 inapplicable (no conjunction)"
        else:
            (a,) = unit.witness
            at = law_predicate(T, LawId.THM1, (a, T.universal(a)))
            out["thm1AtUnitWitness"] = at if isinstance(at, bool) else at.value
            found = "found" if thm1.status is Status.FAILS else "not found within budget"
            out["observation"] = (
                f"unit law fails and a THM1 counterexample was {found}; "
                f"THM1 at (unit witness, universal) evaluates to {out['thm1AtUnitWitness']}"
            )
    else:
        out["observation"] = f"unit law holds; THM1 {thm1.status.value}"
        if thm1.status is Status.FAILS:
            broken = [l.value for l in (LawId.PRECONG, LawId.PAR_COMM, LawId.CONJ_LB, LawId.CONJ_GLB)
                      if verdicts[l].status is Status.FAILS]
            out["otherPremisesFailing"] = broken
            out["observation"] += "; other premises failing: " + (", ".join(broken) or "none within budget")
    return out


def _check_in_worker(theory_name, law, config):
    from .theories import get_theory

    return check_law(get_theory(theory_name), law, config)


def audit(T: TheoryHandle, config: GenConfig, jobs: int = 1) -> AuditReport:
    """Check all laws; ``jobs > 1`` spreads laws over worker processes (the
    report is identical either way)."""
    start = time.perf_counter()
    laws = list(LawId)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_in_worker, [T.name] * len(laws), laws, [config] * len(laws)))
    else:
        results = [check_law(T, law, config) for law in laws]
    verdicts = {v.law: v for v in results}
    report = AuditReport(
        theory=T.name,
        config=replace(config),
        verdicts=results,
        thm2_cross_check=_thm2_cross_check(T, verdicts),
        duration_ms=round((time.perf_counter() - start) * 1000),
        render=T.render,
    )
    return report
