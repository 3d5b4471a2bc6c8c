"""Line-oriented text format for specifications.

A file holds named blocks::

    spec NAME
    theory nfa|mts|ia
    alphabet a,b          # nfa, mts
    inputs go             # ia
    outputs msg           # ia
    internals tau         # ia
    states s0,s1
    initial s0            # comma list for nfa/mts, single state for ia
    accepting s1          # nfa
    t s0 a s1             # nfa transition
    may s0 a s1           # mts
    must s0 a s1          # mts, implies may
    i s0 go s1            # ia input
    o s0 msg s1           # ia output
    h s0 tau s1           # ia internal
    inconsistent          # mts: the inconsistent specification
    end

``#`` starts a comment.  Rendering is canonical: declarations and
transitions sorted, empty declarations omitted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .fa import Nfa
from .ia import InterfaceAutomaton
from .mts import Mts

_LISTS = {"alphabet", "inputs", "outputs", "internals", "states", "initial", "accepting"}
_EDGES = {"nfa": {"t"}, "mts": {"may", "must"}, "ia": {"i", "o", "h"}}
_ALLOWED = {
    "nfa": {"alphabet", "states", "initial", "accepting"},
    "mts": {"alphabet", "states", "initial", "inconsistent"},
    "ia": {"inputs", "outputs", "internals", "states", "initial"},
}


@dataclass
class SpecFile:
    specs: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.specs[name]

    def __contains__(self, name):
        return name in self.specs

    def names(self):
        return list(self.specs)


class _Block:
    def __init__(self, name, line):
        self.name = name
        self.line = line
        self.theory = None
        self.decl = {}
        self.decl_line = {}
        self.edges = []
        self.inconsistent = False

    def listed(self, key):
        return self.decl.get(key, ())

    def build(self, end_line):
        if self.theory is None:
            raise ParseError(f"spec {self.name} has no theory line", end_line)
        states = set(self.listed("states"))
        if self.theory in ("nfa", "mts"):
            actions = set(self.listed("alphabet"))
        else:
            actions = {x for k in ("inputs", "outputs", "internals") for x in self.listed(k)}
        for key in ("initial", "accepting"):
            for s in self.listed(key):
                if s not in states:
                    raise ParseError(f"undeclared state {s!r}", self.decl_line[key])
        ia_kind = {"i": "inputs", "o": "outputs", "h": "internals"}
        for kind, src, act, dst, ln in self.edges:
            for s in (src, dst):
                if s not in states:
                    raise ParseError(f"undeclared state {s!r}", ln)
            if kind in ia_kind:
                if act not in self.listed(ia_kind[kind]):
                    raise ParseError(f"action {act!r} is not declared in {ia_kind[kind]}", ln)
            elif act not in actions:
                raise ParseError(f"undeclared action {act!r}", ln)
        try:
            return self._value(states)
        except ValueError as e:
            raise ParseError(f"spec {self.name}: {e}", end_line) from None

    def _value(self, states):
        edges = lambda *kinds: {(s, a, d) for k, s, a, d, _ in self.edges if k in kinds}  # noqa: E731
        if self.theory == "nfa":
            return Nfa(self.listed("alphabet"), states, self.listed("initial"),
                       self.listed("accepting"), edges("t"))
        if self.theory == "mts":
            if self.inconsistent:
                return Mts(self.listed("alphabet"), states, self.listed("initial"),
                           edges("may", "must"), edges("must"), True)
            return Mts(self.listed("alphabet"), states, self.listed("initial"),
                       edges("may", "must"), edges("must"))
        init = self.listed("initial")
        if len(init) != 1:
            raise ValueError("an interface automaton has exactly one initial state")
        return InterfaceAutomaton(self.listed("inputs"), self.listed("outputs"),
                                  self.listed("internals"), states, init[0], edges("i", "o", "h"))


def parse_spec(text: str) -> SpecFile:
    out = SpecFile()
    block = None
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        key, args = tokens[0], tokens[1:]
        if key == "spec":
            if block is not None:
                raise ParseError(f"missing 'end' for spec {block.name}", lineno)
            if len(args) != 1:
                raise ParseError("expected 'spec NAME'", lineno)
            if args[0] in out.specs:
                raise ParseError(f"duplicate spec name {args[0]!r}", lineno)
            block = _Block(args[0], lineno)
            continue
        if block is None:
            raise ParseError(f"{key!r} outside a spec block", lineno)
        if key == "end":
            if args:
                raise ParseError("unexpected tokens after 'end'", lineno)
            out.specs[block.name] = block.build(lineno)
            block = None
        elif key == "theory":
            if len(args) != 1 or args[0] not in _EDGES:
                raise ParseError("expected 'theory nfa|mts|ia'", lineno)
            if block.theory is not None:
                raise ParseError("duplicate theory line", lineno)
            block.theory = args[0]
        elif block.theory is None:
            raise ParseError("the theory line must come first", lineno)
        elif key in _LISTS:
            if key not in _ALLOWED[block.theory]:
                raise ParseError(f"{key!r} is not valid for theory {block.theory}", lineno)
            if key in block.decl:
                raise ParseError(f"duplicate {key!r} declaration", lineno)
            names = tuple(x for x in ",".join(args).split(",") if x)
            dup = next((x for i, x in enumerate(names) if x in names[:i]), None)
            if dup is not None:
                raise ParseError(f"duplicate name {dup!r} in {key!r}", lineno)
            block.decl[key] = names
            block.decl_line[key] = lineno
        elif key == "inconsistent":
            if block.theory != "mts" or args:
                raise ParseError("'inconsistent' is only valid, bare, in an mts spec", lineno)
            block.inconsistent = True
        elif key in _EDGES[block.theory]:
            if len(args) != 3:
                raise ParseError(f"expected '{key} SRC ACTION DST'", lineno)
            block.edges.append((key, *args, lineno))
        else:
            raise ParseError(f"unknown keyword {key!r} for theory {block.theory}", lineno)
    if block is not None:
        raise ParseError(f"missing 'end' for spec {block.name}", lineno)
    return out


def _join(items):
    return ",".join(sorted(items))


def render_spec(value, name: str = "spec") -> str:
    lines = [f"spec {name}"]
    if isinstance(value, Nfa):
        lines += ["theory nfa", f"alphabet {_join(value.alphabet)}", f"states {_join(value.states)}",
                  f"initial {_join(value.initial)}"]
        if value.accepting:
            lines.append(f"accepting {_join(value.accepting)}")
        lines += [f"t {s} {a} {d}" for s, a, d in sorted(value.transitions)]
    elif isinstance(value, Mts):
        lines += ["theory mts", f"alphabet {_join(value.alphabet)}"]
        if value.inconsistent:
            lines.append("inconsistent")
        else:
            lines += [f"states {_join(value.states)}", f"initial {_join(value.initial)}"]
            lines += [f"may {s} {a} {d}" for s, a, d in sorted(value.may - value.must)]
            lines += [f"must {s} {a} {d}" for s, a, d in sorted(value.must)]
    elif isinstance(value, InterfaceAutomaton):
        lines.append("theory ia")
        for key, acts in (("inputs", value.inputs), ("outputs", value.outputs),
                          ("internals", value.internals)):
            if acts:
                lines.append(f"{key} {_join(acts)}")
        lines += [f"states {_join(value.states)}", f"initial {value.initial}"]
        kind = lambda a: "i" if a in value.inputs else "o" if a in value.outputs else "h"  # noqa: E731
        lines += [f"{kind(a)} {s} {a} {d}" for s, a, d in sorted(value.transitions)]
    else:
        raise TypeError(f"cannot render {type(value).__name__}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def render_file(specs) -> str:
    """Render a mapping of name -> specification as one file."""
    return "\n".join(render_spec(v, n) for n, v in specs.items())
