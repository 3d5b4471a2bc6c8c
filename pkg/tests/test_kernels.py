"""The compiled kernels and the pure-Python fallback must agree exactly."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nfa, specs
from specalg import fa, kernels

ext = kernels.ext
py = kernels.py
needs_ext = pytest.mark.skipif(ext is None, reason="compiled kernels not built")


@st.composite
def raw_graph(draw, max_n=8, max_k=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    masks = st.integers(0, (1 << n) - 1)
    return n, k, draw(st.lists(masks, min_size=n * k, max_size=n * k)), masks


@needs_ext
@given(specs("fa", max_states=4), specs("fa", max_states=4), st.sampled_from([2, 4, 64]))
def test_inclusion_twins(a, b, cap):
    na, sa, ia_, aa = a.encoded
    nb, sb, ib, ab = b.encoded
    if a.alphabet != b.alphabet:
        return
    k = len(a.symbols)
    args = (na, nb, k, sa, ia_, aa, sb, ib, ab, cap)
    assert ext.nfa_included(*args) == py.nfa_included(*args)


@needs_ext
@given(specs("fa", max_states=5, alphabet_size=3), st.sampled_from([3, 8, 4096]))
def test_determinize_twins(a, cap):
    n, succ, init, _ = a.encoded
    args = (n, len(a.symbols), succ, init, cap)
    r1, r2 = ext.determinize(*args), py.determinize(*args)
    if r1 is None or r2 is None:
        assert r1 is r2 is None
    else:
        assert list(r1[0]) == list(r2[0]) and list(r1[1]) == list(r2[1])


@needs_ext
@given(raw_graph(), st.data())
def test_simulation_twins(g, data):
    n, k, fwd_a, masks = g
    m = data.draw(st.integers(1, 8))
    other = st.integers(0, (1 << m) - 1)
    bwd_a = data.draw(st.lists(masks, min_size=n * k, max_size=n * k))
    fwd_b = data.draw(st.lists(other, min_size=m * k, max_size=m * k))
    bwd_b = data.draw(st.lists(other, min_size=m * k, max_size=m * k))
    args = (n, m, k, fwd_a, bwd_a, fwd_b, bwd_b)
    assert list(ext.simulation(*args)) == list(py.simulation(*args))


@needs_ext
@given(raw_graph(), st.data())
def test_attractor_twins(g, data):
    n, k, succ, masks = g
    ctrl = data.draw(st.integers(0, (1 << k) - 1))
    seed = data.draw(masks)
    assert ext.attractor(n, k, succ, ctrl, seed) == py.attractor(n, k, succ, ctrl, seed)


@needs_ext
@given(specs("mts"), specs("mts"), st.booleans())
def test_det_product_twins(a, b, both):
    if a.inconsistent or b.inconsistent:
        return
    _, da, ra, ia_ = a.det_encoded
    nb, db, rb, ib = b.det_encoded
    args = (nb, len(a.symbols), da, ra, ia_, db, rb, ib, both)
    r1, r2 = ext.det_product(*args), py.det_product(*args)
    assert [list(map(tuple, r1[0])), list(r1[1]), list(r1[2]), sorted(r1[3])] == \
        [list(map(tuple, r2[0])), list(r2[1]), list(r2[2]), sorted(r2[3])]


def test_wide_automata_use_fallback():
    # more states than fit in a machine word
    n = 70
    states = [f"q{i:02d}" for i in range(n)]
    chain = [(states[i], "a", states[i + 1]) for i in range(n - 1)]
    long_word = nfa("a", states, [states[0]], [states[-1]], chain)
    assert fa.refines(long_word, fa.universal("a"))
    assert not fa.refines(fa.universal("a"), long_word)
    assert fa.words_upto(long_word, n - 1) == {("a",) * (n - 1)}


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (ext is not None)
