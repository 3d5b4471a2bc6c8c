import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIXTURES, fixture_p, fixture_q, specs
from specalg import ia, mts
from specalg.errors import ParseError
from specalg.specfile import parse_spec, render_file, render_spec

any_spec = st.one_of(specs("fa"), specs("mts"), specs("ia"), specs("fa", 2, 3), specs("ia", 3, 4))


@given(any_spec)
def test_roundtrip(x):
    text = render_spec(x, "x")
    assert parse_spec(text)["x"] == x
    assert render_spec(parse_spec(text)["x"], "x") == text


@given(st.lists(any_spec, min_size=1, max_size=4))
def test_file_roundtrip(xs):
    mapping = {f"s{i}": x for i, x in enumerate(xs)}
    parsed = parse_spec(render_file(mapping))
    assert parsed.names() == list(mapping)
    assert all(parsed[k] == v for k, v in mapping.items())


def test_bottom_renders_marker():
    text = render_spec(mts.bottom("ab"), "bot")
    assert text.splitlines() == ["spec bot", "theory mts", "alphabet a,b", "inconsistent", "end"]
    assert parse_spec(text)["bot"].inconsistent


def test_transitions_sorted():
    text = render_spec(fixture_p(), "P")
    edges = [ln for ln in text.splitlines() if ln[:2] in ("i ", "o ", "h ")]
    assert edges == sorted(edges, key=lambda ln: tuple(ln.split()[1:]))


def test_pq_fixture_matches_library_values():
    f = parse_spec((FIXTURES / "pq.spec").read_text())
    assert f["P"] == fixture_p() and f["Q"] == fixture_q()
    assert ia.optimistic_compose(f["P"], f["Q"]) is not ia.INCOMPATIBLE


def test_comments_and_blank_lines_ignored():
    text = "# header\n\nspec A   # trailing\ntheory nfa\nalphabet a\nstates s\ninitial s\nend\n"
    assert parse_spec(text)["A"].states == {"s"}


BAD = {
    "undeclared state": ("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nt s a q\nend\n", 6),
    "undeclared action": ("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nt s b s\nend\n", 6),
    "duplicate spec": ("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nend\n"
                       "spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nend\n", 7),
    "duplicate state": ("spec A\ntheory nfa\nalphabet a\nstates s,s\ninitial s\nend\n", 4),
    "wrong edge kind": ("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\nmust s a s\nend\n", 6),
    "missing end": ("spec A\ntheory nfa\nalphabet a\nstates s\ninitial s\n", 5),
    "unknown theory": ("spec A\ntheory petri\nend\n", 2),
    "ia nondeterminism": ("spec A\ntheory ia\ninputs a\nstates s,t\ninitial s\ni s a s\ni s a t\nend\n", 8),
}


@pytest.mark.parametrize("case", sorted(BAD))
def test_parse_errors_carry_line(case):
    text, line = BAD[case]
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")
