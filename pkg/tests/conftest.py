import itertools
import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from specalg import fa, ia, mts
from specalg.generate import GenConfig, gen_random

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(__file__).parent / "fixtures"


# -- acceptance summary -----------------------------------------------------

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or rep.failed):
        number, title = marker.args
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")


# -- builders ---------------------------------------------------------------

def nfa(alphabet, states, initial, accepting, edges):
    return fa.Nfa(alphabet, states, initial, accepting, edges)


def star_a():
    """a* over {a}."""
    return nfa("a", ["x"], ["x"], ["x"], [("x", "a", "x")])


def star_a2():
    """a* over {a}, with two states."""
    return nfa("a", ["x", "y"], ["x"], ["x", "y"], [("x", "a", "y"), ("y", "a", "x")])


def even_a():
    """(aa)* over {a}."""
    return nfa("a", ["e", "o"], ["e"], ["e"], [("e", "a", "o"), ("o", "a", "e")])


def just(word, alphabet="a"):
    states = [f"w{i}" for i in range(len(word) + 1)]
    edges = [(states[i], x, states[i + 1]) for i, x in enumerate(word)]
    return nfa(alphabet, states, [states[0]], [states[-1]], edges)


def mts_sys(alphabet, states, initial, may=(), must=()):
    must = set(must)
    return mts.Mts(alphabet, states, initial, set(may) | must, must)


def must_loop(x="a"):
    return mts_sys(x, ["m"], ["m"], must=[("m", x, "m")])


def may_loop(x="a"):
    return mts_sys(x, ["m"], ["m"], may=[("m", x, "m")])


def iface(inputs=(), outputs=(), internals=(), states=("s0",), initial="s0", edges=()):
    return ia.InterfaceAutomaton(inputs, outputs, internals, states, initial, edges)


def fixture_p():
    return iface(["go"], ["msg"], states=["p0", "p1", "p2"], initial="p0",
                 edges=[("p0", "go", "p1"), ("p1", "msg", "p2")])


def fixture_q():
    return iface(["msg"], states=["q0"], initial="q0")


def fixture_q2():
    return iface(["msg"], states=["q0", "q1"], initial="q0", edges=[("q0", "msg", "q1")])


# -- oracles ----------------------------------------------------------------

def language(a, n):
    """Words of length <= n accepted by ``a``, by brute-force path search."""
    out = set()
    for k in range(n + 1):
        for word in itertools.product(sorted(a.alphabet), repeat=k):
            frontier = set(a.initial)
            for x in word:
                frontier = {d for (s, y, d) in a.transitions if s in frontier and y == x}
            if frontier & a.accepting:
                out.add(word)
    return out


# -- strategies -------------------------------------------------------------

def specs(theory, max_states=3, alphabet_size=2, seed=0):
    config = GenConfig(theory, max_states=max_states, alphabet_size=alphabet_size, seed=seed)
    return st.integers(0, 10**6).map(lambda i: gen_random(config, i))

