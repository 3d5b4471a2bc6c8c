"""Finite automata over a fixed alphabet, refined by language inclusion.

Every operation requires both operands to share one alphabet; mismatches
raise :class:`~specalg.errors.AlphabetMismatch` instead of being equalized.
Equivalence of automata is always mutual inclusion, never structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian

from . import kernels
from ._util import Value, det_cap, mask_of, masks_by_action, pair_names
from .errors import AlphabetMismatch, StateBlowUp

Word = tuple


@dataclass(frozen=True, eq=False)
class Nfa(Value):
    """Nondeterministic automaton with a set of initial states."""

    _fields = ("alphabet", "states", "initial", "accepting", "transitions")

    alphabet: frozenset
    states: frozenset
    initial: frozenset
    accepting: frozenset
    transitions: frozenset

    def __post_init__(self):
        for name in ("alphabet", "states", "initial", "accepting", "transitions"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        if not self.initial:
            raise ValueError("initial state set must be nonempty")
        if not self.initial <= self.states:
            raise ValueError("initial states must be declared states")
        if not self.accepting <= self.states:
            raise ValueError("accepting states must be declared states")
        for src, act, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"transition {src} {act} {dst} references an undeclared state")
            if act not in self.alphabet:
                raise ValueError(f"transition {src} {act} {dst} uses an undeclared action")
        self._seal()

    @cached_property
    def order(self):
        return tuple(sorted(self.states))

    @cached_property
    def symbols(self):
        return tuple(sorted(self.alphabet))

    @cached_property
    def encoded(self):
        """(n, succ masks, initial mask, accepting mask) in kernel layout."""
        return (
            len(self.order),
            masks_by_action(self.order, self.symbols, self.transitions),
            mask_of(self.order, self.initial),
            mask_of(self.order, self.accepting),
        )

    @cached_property
    def delta(self):
        """(state, symbol) -> tuple of successors."""
        out = {}
        for s, a, d in sorted(self.transitions):
            out.setdefault((s, a), []).append(d)
        return {k: tuple(v) for k, v in out.items()}

    def successors(self, state, symbol):
        return self.delta.get((state, symbol), ())


def _same_alphabet(a: Nfa, b: Nfa):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch()


def universal(alphabet) -> Nfa:
    alphabet = frozenset(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    return Nfa(alphabet, {"u"}, {"u"}, {"u"}, {("u", x, "u") for x in alphabet})


def empty(alphabet) -> Nfa:
    alphabet = frozenset(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    return Nfa(alphabet, {"z"}, {"z"}, set(), set())


def refines(a: Nfa, b: Nfa, cap: int | None = None) -> bool:
    """True iff L(a) is included in L(b)."""
    _same_alphabet(a, b)
    n_a, succ_a, init_a, acc_a = a.encoded
    n_b, succ_b, init_b, acc_b = b.encoded
    r = kernels.nfa_included(
        n_a, n_b, len(a.symbols), succ_a, init_a, acc_a, succ_b, init_b, acc_b,
        det_cap() if cap is None else cap,
    )
    if r < 0:
        raise StateBlowUp()
    return bool(r)


def _product(a: Nfa, b: Nfa) -> Nfa:
    _same_alphabet(a, b)
    start = {(p, q) for p in a.initial for q in b.initial}
    seen = set(start)
    todo = list(start)
    edges = []
    while todo:
        p, q = todo.pop()
        for x in a.symbols:
            for p2 in a.successors(p, x):
                for q2 in b.successors(q, x):
                    edges.append(((p, q), x, (p2, q2)))
                    if (p2, q2) not in seen:
                        seen.add((p2, q2))
                        todo.append((p2, q2))
    names = pair_names(seen)
    return Nfa._trusted(
        a.alphabet,
        frozenset(names.values()),
        frozenset(names[s] for s in start),
        frozenset(names[s] for s in seen if s[0] in a.accepting and s[1] in b.accepting),
        frozenset((names[s], x, names[d]) for s, x, d in edges),
    )


def conjoin(a: Nfa, b: Nfa) -> Nfa:
    """Synchronous product over the reachable state pairs: L = L(a) & L(b)."""
    return _product(a, b)


def compose(a: Nfa, b: Nfa) -> Nfa:
    # Same construction as conjoin; kept separate so the audit checks the
    # composition laws on their own operator.
    return _product(a, b)


def disjoin(a: Nfa, b: Nfa) -> Nfa:
    """Disjoint union with the union of initial sets: L = L(a) | L(b)."""
    _same_alphabet(a, b)
    left = {s: f"1.{s}" for s in a.states}
    right = {s: f"2.{s}" for s in b.states}
    return Nfa._trusted(
        a.alphabet,
        frozenset(left.values()) | frozenset(right.values()),
        frozenset({left[s] for s in a.initial} | {right[s] for s in b.initial}),
        frozenset({left[s] for s in a.accepting} | {right[s] for s in b.accepting}),
        frozenset({(left[s], x, left[d]) for s, x, d in a.transitions}
                  | {(right[s], x, right[d]) for s, x, d in b.transitions}),
    )


def complement(a: Nfa, cap: int | None = None) -> Nfa:
    """Complete deterministic automaton for the complement language."""
    n, succ, init, acc = a.encoded
    k = len(a.symbols)
    res = kernels.determinize(n, k, succ, init, det_cap() if cap is None else cap)
    if res is None:
        raise StateBlowUp()
    subsets, table = res
    names = [f"d{i}" for i in range(len(subsets))]
    return Nfa._trusted(
        a.alphabet,
        frozenset(names),
        frozenset({names[0]}),
        frozenset(names[i] for i, m in enumerate(subsets) if not m & acc),
        frozenset((names[i], a.symbols[x], names[table[i * k + x]])
                  for i in range(len(subsets)) for x in range(k)),
    )


def conj_quotient(b: Nfa, a: Nfa) -> Nfa:
    """Largest X (by language) with L(a) & L(X) included in L(b)."""
    _same_alphabet(a, b)
    return complement(conjoin(a, complement(b)))


def par_quotient(b: Nfa, a: Nfa) -> Nfa:
    _same_alphabet(a, b)
    return complement(compose(a, complement(b)))


def accepts(a: Nfa, word: Word) -> bool:
    """Direct NFA simulation, no determinization."""
    current = set(a.initial)
    for x in word:
        current = {d for s, y, d in a.transitions if s in current and y == x}
        if not current:
            return False
    return bool(current & a.accepting)


def words_upto(a: Nfa, n: int) -> frozenset:
    """All accepted words of length at most n, by explicit enumeration of the
    alphabet's words and direct simulation.  Words are tuples of symbols."""
    if n < 0:
        raise ValueError("length bound must be nonnegative")
    out = set()
    for length in range(n + 1):
        for word in _cartesian(a.symbols, repeat=length):
            if accepts(a, word):
                out.add(word)
    return frozenset(out)


# -- shrinking support ------------------------------------------------------

def reductions(a: Nfa):
    """Single-step reductions in canonical order (for counterexample shrinking)."""
    for t in sorted(a.transitions):
        yield Nfa._trusted(a.alphabet, a.states, a.initial, a.accepting, a.transitions - {t})
    for s in sorted(a.states - a.initial):
        yield Nfa._trusted(
            a.alphabet, a.states - {s}, a.initial, a.accepting - {s},
            frozenset(t for t in a.transitions if s not in (t[0], t[2])),
        )
    if len(a.initial) > 1:
        for s in sorted(a.initial):
            yield Nfa._trusted(a.alphabet, a.states, a.initial - {s}, a.accepting, a.transitions)
    for s in sorted(a.states - a.initial):
        for keep in sorted(a.states - {s}):
            ren = lambda q: keep if q == s else q  # noqa: E731
            yield Nfa._trusted(
                a.alphabet, a.states - {s}, a.initial, a.accepting - {s},
                frozenset((ren(p), x, ren(q)) for p, x, q in a.transitions),
            )


def uses_symbol(a: Nfa, x) -> bool:
    return any(t[1] == x for t in a.transitions)


def drop_symbol(a: Nfa, x) -> Nfa:
    return Nfa(a.alphabet - {x}, a.states, a.initial, a.accepting, a.transitions)
