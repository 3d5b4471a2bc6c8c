"""Seeded random generation and exhaustive enumeration of specifications."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from itertools import product as _cartesian

from . import fa, ia, mts
from .errors import EnumerationBoundError

THEORIES = ("fa", "mts", "ia")
EXHAUSTIVE_MAX_STATES = 2
EXHAUSTIVE_MAX_ALPHABET = 2


@dataclass(frozen=True)
class GenConfig:
    theory: str
    max_states: int = 3
    alphabet_size: int = 2
    sample_count: int = 1000
    seed: int = 0
    mode: str = "random"
    mts_rule: str = "meet"

    def __post_init__(self):
        if self.theory not in THEORIES:
            raise ValueError(f"unknown theory {self.theory!r}")
        if self.max_states < 0:
            raise ValueError("max_states must be nonnegative")
        if not 1 <= self.alphabet_size <= 26:
            raise ValueError("alphabet_size must be between 1 and 26")
        if self.mode not in ("random", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mts_rule not in ("meet", "join"):
            raise ValueError(f"unknown MTS rule {self.mts_rule!r}")

    @property
    def alphabet(self):
        return tuple(string.ascii_lowercase[: self.alphabet_size])

    def as_dict(self):
        return {
            "theory": self.theory,
            "mtsRule": self.mts_rule if self.theory == "mts" else None,
            "maxStates": self.max_states,
            "alphabetSize": self.alphabet_size,
            "sampleCount": self.sample_count,
            "seed": self.seed,
            "mode": self.mode,
        }


def _states(n):
    return tuple(f"s{i}" for i in range(n))


def _rng(config: GenConfig, index: int) -> random.Random:
    # str seeds are hashed with SHA-512, so streams are stable across runs
    return random.Random(f"{config.theory}:{config.seed}:{index}")


def _random_fa(rng, n, alphabet):
    states = _states(n)
    density = rng.choice((0.15, 0.3, 0.5))
    return fa.Nfa(
        alphabet,
        states,
        {states[0]} | {s for s in states[1:] if rng.random() < 0.25},
        {s for s in states if rng.random() < 0.5},
        {(s, x, d) for s in states for x in alphabet for d in states if rng.random() < density},
    )


def _random_mts(rng, n, alphabet):
    if rng.random() < 0.05:
        return mts.bottom(alphabet)
    states = _states(n)
    may, must = set(), set()
    for s in states:
        for x in alphabet:
            kind = rng.randrange(3)
            if kind == 0:
                continue
            t = (s, x, rng.choice(states))
            may.add(t)
            if kind == 2:
                must.add(t)
    initial = {states[0]} | {s for s in states[1:] if rng.random() < 0.2}
    return mts.Mts(alphabet, states, initial, may, must)


def _random_ia(rng, n, alphabet):
    roles = rng.choices(ia.ROLES, weights=(0.2, 0.35, 0.35, 0.1), k=len(alphabet))
    pick = lambda r: {x for x, rr in zip(alphabet, roles) if rr == r}  # noqa: E731
    states = _states(n)
    sig = [x for x, r in zip(alphabet, roles) if r != "absent"]
    trans = {(s, x, rng.choice(states)) for s in states for x in sig if rng.random() < 0.6}
    return ia.InterfaceAutomaton(pick("input"), pick("output"), pick("internal"), states, states[0], trans)


_RANDOM = {"fa": _random_fa, "mts": _random_mts, "ia": _random_ia}


def gen_random(config: GenConfig, index: int):
    """Deterministic function of (theory, seed, index)."""
    if config.max_states < 1:
        raise ValueError("random generation needs max_states >= 1")
    rng = _rng(config, index)
    n = rng.randint(1, config.max_states)
    return _RANDOM[config.theory](rng, n, config.alphabet)


def _subsets(items, nonempty=False):
    for mask in range(1 if nonempty else 0, 1 << len(items)):
        yield {x for i, x in enumerate(items) if (mask >> i) & 1}


def _enum_fa(max_states, alphabet):
    for n in range(1, max_states + 1):
        states = _states(n)
        triples = [(s, x, d) for s in states for x in alphabet for d in states]
        for init in _subsets(states, nonempty=True):
            for acc in _subsets(states):
                for trans in _subsets(triples):
                    yield fa.Nfa(alphabet, states, init, acc, trans)


def _enum_mts(max_states, alphabet):
    if max_states < 1:
        return
    yield mts.bottom(alphabet)
    for n in range(1, max_states + 1):
        states = _states(n)
        slots = [(s, x) for s in states for x in alphabet]
        options = [None] + [(kind, d) for d in states for kind in ("may", "must")]
        for init in _subsets(states, nonempty=True):
            for choice in _cartesian(options, repeat=len(slots)):
                may, must = set(), set()
                for (s, x), opt in zip(slots, choice):
                    if opt is None:
                        continue
                    kind, d = opt
                    may.add((s, x, d))
                    if kind == "must":
                        must.add((s, x, d))
                yield mts.Mts(alphabet, states, init, may, must)


def enumerate_all(config: GenConfig):
    """Every structurally valid specification within the bounds, once each,
    in canonical order.  Deterministic MTS only."""
    if config.max_states > EXHAUSTIVE_MAX_STATES or config.alphabet_size > EXHAUSTIVE_MAX_ALPHABET:
        raise EnumerationBoundError()
    if config.theory == "fa":
        return _enum_fa(config.max_states, config.alphabet)
    if config.theory == "mts":
        return _enum_mts(config.max_states, config.alphabet)
    return ia.enumerate_family(config.max_states, config.alphabet)
