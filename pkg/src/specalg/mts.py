"""Modal transition systems under modal refinement.

An :class:`Mts` carries may- and must-transitions (must implies may) and a set
of initial states.  The inconsistent specification, written ``⊥`` below, is a
first-class value so that conjunction stays total.  Conjunction and parallel
composition need deterministic operands: at most one may-successor per state
and action.  Initial-state sets may still hold several states.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from . import kernels
from ._util import Value, mask_of, masks_by_action, pair_names
from .errors import AlphabetMismatch, NondeterministicError


class Rule(str, Enum):
    """Must-rule of parallel composition."""

    MEET = "meet"  # must needs a must on both sides
    JOIN = "join"  # must from either side, provided both sides allow it


@dataclass(frozen=True, eq=False)
class Mts(Value):
    _fields = ("alphabet", "states", "initial", "may", "must", "inconsistent")

    alphabet: frozenset
    states: frozenset
    initial: frozenset
    may: frozenset
    must: frozenset
    inconsistent: bool = False

    def __post_init__(self):
        for name in ("alphabet", "states", "initial", "may", "must"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        if self.inconsistent:
            if self.states or self.initial or self.may or self.must:
                raise ValueError("the inconsistent specification has no states or transitions")
            self._seal()
            return
        if not self.initial:
            raise ValueError("initial state set must be nonempty")
        if not self.initial <= self.states:
            raise ValueError("initial states must be declared states")
        if not self.must <= self.may:
            raise ValueError("every must-transition must also be a may-transition")
        for src, act, dst in self.may:
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
        return (
            len(self.order),
            masks_by_action(self.order, self.symbols, self.may),
            masks_by_action(self.order, self.symbols, self.must),
            mask_of(self.order, self.initial),
        )

    @cached_property
    def delta(self):
        """(state, action) -> may-successor, for deterministic systems."""
        out = {}
        for s, x, d in sorted(self.may):
            out.setdefault((s, x), d)
        return out

    @cached_property
    def det_encoded(self):
        """(n, successor index or -1, must flag, initial indices) per slot
        ``state * k + action``; meaningful for deterministic systems only."""
        idx = {s: i for i, s in enumerate(self.order)}
        aidx = {x: i for i, x in enumerate(self.symbols)}
        k = len(self.symbols)
        delta = [-1] * (len(self.order) * k)
        req = [0] * (len(self.order) * k)
        for s, x, d in self.may:
            delta[idx[s] * k + aidx[x]] = idx[d]
        for s, x, _ in self.must:
            req[idx[s] * k + aidx[x]] = 1
        return len(self.order), delta, req, sorted(idx[s] for s in self.initial)

    @property
    def deterministic(self):
        return len(self.delta) == len(self.may)


def universal(alphabet) -> Mts:
    alphabet = frozenset(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    return Mts(alphabet, {"u"}, {"u"}, {("u", x, "u") for x in alphabet}, set())


def bottom(alphabet) -> Mts:
    alphabet = frozenset(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    return Mts._trusted(alphabet, frozenset(), frozenset(), frozenset(), frozenset(), True)


def _same_alphabet(a: Mts, b: Mts):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch()


def _deterministic(*systems):
    for m in systems:
        if not m.inconsistent and not m.deterministic:
            raise NondeterministicError()


def refines(a: Mts, b: Mts) -> bool:
    """Modal refinement: mays of ``a`` are simulated by ``b``, musts of ``b`` are
    matched by ``a``; every initial state of ``a`` must be related to an
    initial state of ``b``.  ``⊥`` refines everything and only ``⊥`` refines it."""
    _same_alphabet(a, b)
    if a.inconsistent:
        return True
    if b.inconsistent:
        return False
    n_a, may_a, must_a, init_a = a.encoded
    n_b, may_b, must_b, init_b = b.encoded
    rel = kernels.simulation(n_a, n_b, len(a.symbols), may_a, must_a, may_b, must_b)
    return all(rel[i] & init_b for i in range(n_a) if (init_a >> i) & 1)


def prune(a: Mts, bad) -> Mts:
    """Remove ``bad`` and every state with a must-transition into the removed
    set; may-transitions into removed states are deleted.  Returns ``⊥`` when
    no initial state survives."""
    if a.inconsistent:
        return a
    bad = frozenset(bad)
    if not bad:
        return a
    n, _, must, _ = a.encoded
    k = len(a.symbols)
    removed_mask = kernels.attractor(n, k, must, (1 << k) - 1, mask_of(a.order, bad))
    removed = {s for i, s in enumerate(a.order) if (removed_mask >> i) & 1}
    if a.initial <= removed:
        return bottom(a.alphabet)
    keep = lambda t: t[0] not in removed and t[2] not in removed  # noqa: E731
    return Mts._trusted(
        a.alphabet,
        a.states - removed,
        a.initial - removed,
        frozenset(t for t in a.may if keep(t)),
        frozenset(t for t in a.must if keep(t)),
        False,
    )


def _product(a: Mts, b: Mts, both: bool):
    """Reachable synchronous product on the integer encoding.

    Returns ``(pairs, delta, req, clash, n_init)``; see
    :func:`specalg.kernels.det_product`.  The first ``n_init`` pairs are the
    initial ones."""
    _, da, ra, ia = a.det_encoded
    nb, db, rb, ib = b.det_encoded
    pairs, delta, req, clash = kernels.det_product(nb, len(a.symbols), da, ra, ia, db, rb, ib, both)
    return pairs, delta, req, clash, len(ia) * len(ib)


def _build(a: Mts, b: Mts, pairs, delta, req, n_init, removed=0) -> Mts:
    k = len(a.symbols)
    names = pair_names([(a.order[p], b.order[q]) for p, q in pairs])
    label = [names[(a.order[p], b.order[q])] for p, q in pairs]
    may, must = [], []
    for i in range(len(pairs)):
        if (removed >> i) & 1:
            continue
        base = i * k
        for x in range(k):
            j = delta[base + x]
            if j < 0 or (removed >> j) & 1:
                continue
            t = (label[i], a.symbols[x], label[j])
            may.append(t)
            if req[base + x]:
                must.append(t)
    return Mts._trusted(
        a.alphabet,
        frozenset(label[i] for i in range(len(pairs)) if not (removed >> i) & 1),
        frozenset(label[i] for i in range(n_init) if not (removed >> i) & 1),
        frozenset(may),
        frozenset(must),
        False,
    )


def conjoin(a: Mts, b: Mts) -> Mts:
    """Greatest lower bound: may iff both may, must iff either must, with
    inconsistent pairs pruned backward along must-transitions."""
    _same_alphabet(a, b)
    if a.inconsistent or b.inconsistent:
        return bottom(a.alphabet)
    _deterministic(a, b)
    pairs, delta, req, clash, n_init = _product(a, b, both=False)
    removed = 0
    if clash:
        k = len(a.symbols)
        must_succ = [(1 << j) if r and j >= 0 else 0 for j, r in zip(delta, req)]
        seed = 0
        for i in clash:
            seed |= 1 << i
        removed = kernels.attractor(len(pairs), k, must_succ, (1 << k) - 1, seed)
        if all((removed >> i) & 1 for i in range(n_init)):
            return bottom(a.alphabet)
    return _build(a, b, pairs, delta, req, n_init, removed)


def compose(a: Mts, b: Mts, rule: Rule | str = Rule.MEET) -> Mts:
    """Synchronous product without consistency pruning; see :class:`Rule`."""
    rule = Rule(rule)
    _same_alphabet(a, b)
    if a.inconsistent or b.inconsistent:
        return bottom(a.alphabet)
    _deterministic(a, b)
    pairs, delta, req, _, n_init = _product(a, b, both=rule is Rule.MEET)
    return _build(a, b, pairs, delta, req, n_init)


def disjoin(a: Mts, b: Mts) -> Mts:
    """Disjoint union with the union of initial sets."""
    _same_alphabet(a, b)
    if a.inconsistent:
        return b
    if b.inconsistent:
        return a
    left = lambda s: f"1.{s}"  # noqa: E731
    right = lambda s: f"2.{s}"  # noqa: E731
    edges = lambda ts, f: frozenset((f(s), x, f(d)) for s, x, d in ts)  # noqa: E731
    return Mts._trusted(
        a.alphabet,
        frozenset({left(s) for s in a.states} | {right(s) for s in b.states}),
        frozenset({left(s) for s in a.initial} | {right(s) for s in b.initial}),
        edges(a.may, left) | edges(b.may, right),
        edges(a.must, left) | edges(b.must, right),
        False,
    )


# -- shrinking support ------------------------------------------------------

def reductions(a: Mts):
    if a.inconsistent:
        return
    for t in sorted(a.must):
        yield Mts._trusted(a.alphabet, a.states, a.initial, a.may, a.must - {t}, False)
    for t in sorted(a.may):
        yield Mts._trusted(a.alphabet, a.states, a.initial, a.may - {t}, a.must - {t}, False)
    for s in sorted(a.states - a.initial):
        drop = lambda ts: frozenset(t for t in ts if s not in (t[0], t[2]))  # noqa: E731
        yield Mts._trusted(a.alphabet, a.states - {s}, a.initial, drop(a.may), drop(a.must), False)
    if len(a.initial) > 1:
        for s in sorted(a.initial):
            yield Mts._trusted(a.alphabet, a.states, a.initial - {s}, a.may, a.must, False)
    for s in sorted(a.states - a.initial):
        for keep in sorted(a.states - {s}):
            merged = _merge(a, s, keep)
            if merged.deterministic:
                yield merged


def _merge(a: Mts, s, keep) -> Mts:
    """Redirect every transition at ``s`` to ``keep`` and drop ``s``."""
    ren = lambda q: keep if q == s else q  # noqa: E731
    move = lambda ts: frozenset((ren(p), x, ren(q)) for p, x, q in ts)  # noqa: E731
    return Mts._trusted(a.alphabet, a.states - {s}, a.initial, move(a.may), move(a.must), False)


def uses_symbol(a: Mts, x) -> bool:
    return any(t[1] == x for t in a.may)


def drop_symbol(a: Mts, x) -> Mts:
    return Mts(a.alphabet - {x}, a.states, a.initial, a.may, a.must, a.inconsistent)
