"""Interface automata: a two-player theory with partial composition.

Actions split into inputs (chosen by the environment), outputs and internal
actions (chosen by the component).  Two automata compose only when their
controllable actions do not clash.  A composable pair may still be
``INCOMPATIBLE`` once the error states of the product are pruned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product as _cartesian

from . import kernels
from ._util import Value, mask_of, masks_by_action, pair_names
from .errors import ControlConflict, SignatureMismatch


class _Incompatible(Enum):
    INCOMPATIBLE = "incompatible"

    def __repr__(self):
        return "INCOMPATIBLE"


INCOMPATIBLE = _Incompatible.INCOMPATIBLE


@dataclass(frozen=True, eq=False)
class InterfaceAutomaton(Value):
    _fields = ("inputs", "outputs", "internals", "states", "initial", "transitions")

    inputs: frozenset
    outputs: frozenset
    internals: frozenset
    states: frozenset
    initial: str
    transitions: frozenset

    def __post_init__(self):
        for name in ("inputs", "outputs", "internals", "states", "transitions"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.inputs & self.outputs or self.inputs & self.internals or self.outputs & self.internals:
            raise ValueError("input, output and internal actions must be disjoint")
        if self.initial not in self.states:
            raise ValueError("initial state must be a declared state")
        seen = set()
        for src, act, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"transition {src} {act} {dst} references an undeclared state")
            if act not in self.signature:
                raise ValueError(f"transition {src} {act} {dst} uses an undeclared action")
            if (src, act) in seen:
                raise ValueError(f"nondeterministic on ({src}, {act})")
            seen.add((src, act))
        self._seal()

    @property
    def signature(self):
        return self.inputs | self.outputs | self.internals

    @property
    def controlled(self):
        return self.outputs | self.internals

    def same_signature(self, other) -> bool:
        return (self.inputs, self.outputs, self.internals) == (other.inputs, other.outputs, other.internals)

    @cached_property
    def delta(self):
        return {(s, x): d for s, x, d in self.transitions}

    @cached_property
    def order(self):
        return tuple(sorted(self.states))

    @cached_property
    def actions(self):
        return tuple(sorted(self.signature))

    @cached_property
    def encoded(self):
        """Succ masks split into component moves and environment moves."""
        ctrl = [t for t in self.transitions if t[1] not in self.inputs]
        env = [t for t in self.transitions if t[1] in self.inputs]
        return (
            len(self.order),
            masks_by_action(self.order, self.actions, ctrl),
            masks_by_action(self.order, self.actions, env),
            self.order.index(self.initial),
        )


@dataclass(frozen=True)
class ProductWithErrors:
    automaton: InterfaceAutomaton
    error_states: frozenset
    provenance: dict = field(compare=False, hash=False, repr=False)


def composable(a: InterfaceAutomaton, b: InterfaceAutomaton) -> bool:
    """No shared outputs, and neither side's internals touch the other's signature."""
    return (
        not a.outputs & b.outputs
        and not a.internals & b.signature
        and not b.internals & a.signature
    )


def product(a: InterfaceAutomaton, b: InterfaceAutomaton) -> ProductWithErrors:
    """Reachable product.  An output of one side matched by an input of the
    other synchronizes and becomes internal; inputs common to both sides
    synchronize and stay inputs; everything else interleaves.  A state is an
    error when one side can emit a shared action the other cannot accept."""
    if not composable(a, b):
        raise ControlConflict()
    shared = (a.inputs & b.outputs) | (a.outputs & b.inputs)
    both = a.signature & b.signature
    start = (a.initial, b.initial)
    seen = {start}
    todo = [start]
    edges = []
    errors = set()
    actions = sorted(a.signature | b.signature)
    while todo:
        p, q = todo.pop()
        for x in actions:
            pa = a.delta.get((p, x))
            qb = b.delta.get((q, x))
            if x in both:
                if x in shared and ((x in a.outputs and pa is not None and qb is None)
                                    or (x in b.outputs and qb is not None and pa is None)):
                    errors.add((p, q))
                if pa is None or qb is None:
                    continue
                tgt = (pa, qb)
            elif x in a.signature:
                if pa is None:
                    continue
                tgt = (pa, q)
            else:
                if qb is None:
                    continue
                tgt = (p, qb)
            edges.append(((p, q), x, tgt))
            if tgt not in seen:
                seen.add(tgt)
                todo.append(tgt)
    names = pair_names(seen)
    auto = InterfaceAutomaton(
        (a.inputs | b.inputs) - shared,
        (a.outputs | b.outputs) - shared,
        a.internals | b.internals | shared,
        names.values(),
        names[start],
        {(names[s], x, names[d]) for s, x, d in edges},
    )
    return ProductWithErrors(auto, frozenset(names[s] for s in errors), {v: k for k, v in names.items()})


def _remove(auto: InterfaceAutomaton, bad) -> InterfaceAutomaton:
    """Drop ``bad`` states, edges touching them, and anything left unreachable."""
    live = {t for t in auto.transitions if t[0] not in bad and t[2] not in bad}
    reach = {auto.initial}
    todo = [auto.initial]
    while todo:
        s = todo.pop()
        for src, _, dst in live:
            if src == s and dst not in reach:
                reach.add(dst)
                todo.append(dst)
    return InterfaceAutomaton(
        auto.inputs, auto.outputs, auto.internals, reach, auto.initial,
        {t for t in live if t[0] in reach},
    )


def _attractor(auto: InterfaceAutomaton, seed, players):
    """States that can be forced into ``seed`` by moves on the ``players`` actions."""
    if not seed:
        return frozenset()
    order = auto.order
    k = len(auto.actions)
    succ = masks_by_action(order, auto.actions, auto.transitions)
    ctrl = 0
    for i, x in enumerate(auto.actions):
        if x in players:
            ctrl |= 1 << i
    m = kernels.attractor(len(order), k, succ, ctrl, mask_of(order, seed))
    return frozenset(s for i, s in enumerate(order) if (m >> i) & 1)


def env_prune(prod: ProductWithErrors):
    """Optimistic pruning: the environment avoids every state from which the
    component alone can force an error; returns ``INCOMPATIBLE`` when that
    region contains the initial state."""
    auto = prod.automaton
    bad = _attractor(auto, prod.error_states, auto.controlled)
    if auto.initial in bad:
        return INCOMPATIBLE
    return _remove(auto, bad)


def comp_prune(prod: ProductWithErrors):
    """Dual pruning: the component avoids every state from which the
    environment can force an error."""
    auto = prod.automaton
    bad = _attractor(auto, prod.error_states, auto.inputs)
    if auto.initial in bad:
        return INCOMPATIBLE
    return _remove(auto, bad)


def optimistic_compose(a: InterfaceAutomaton, b: InterfaceAutomaton):
    return env_prune(product(a, b))


def pessimistic_compose(a: InterfaceAutomaton, b: InterfaceAutomaton):
    """Keep only states from which no error is reachable at all."""
    prod = product(a, b)
    auto = prod.automaton
    bad = _attractor(auto, prod.error_states, auto.signature)
    if auto.initial in bad:
        return INCOMPATIBLE
    return _remove(auto, bad)


def refines(a: InterfaceAutomaton, b: InterfaceAutomaton) -> bool:
    """Alternating simulation: ``a`` accepts every input ``b`` accepts and emits
    only outputs (and internal moves) that ``b`` can also take."""
    if not a.same_signature(b):
        raise SignatureMismatch()
    n_a, ctrl_a, env_a, i_a = a.encoded
    n_b, ctrl_b, env_b, i_b = b.encoded
    rel = kernels.simulation(n_a, n_b, len(a.actions), ctrl_a, env_a, ctrl_b, env_b)
    return bool((rel[i_a] >> i_b) & 1)


# -- enumeration and the universal-element search ---------------------------

ROLES = ("absent", "input", "output", "internal")


def signatures(actions):
    """Every assignment of a role to each action, in canonical order."""
    for roles in _cartesian(ROLES, repeat=len(actions)):
        sig = {r: frozenset(x for x, rr in zip(actions, roles) if rr == r) for r in ROLES}
        yield sig["input"], sig["output"], sig["internal"]


def enumerate_family(max_states, actions):
    """All deterministic interface automata with 1..max_states states named
    s0, s1, ... over the given actions (each action absent or assigned a role)."""
    actions = tuple(sorted(actions))
    for n in range(1, max_states + 1):
        states = tuple(f"s{i}" for i in range(n))
        for ins, outs, ints in signatures(actions):
            sig = sorted(ins | outs | ints)
            slots = [(s, x) for s in states for x in sig]
            for init in states:
                for targets in _cartesian((None,) + states, repeat=len(slots)):
                    yield InterfaceAutomaton(
                        ins, outs, ints, states, init,
                        {(s, x, d) for (s, x), d in zip(slots, targets) if d is not None},
                    )


@dataclass(frozen=True)
class WitnessRow:
    index: int
    candidate: InterfaceAutomaton
    witness: InterfaceAutomaton | None
    reason: str


def defeat(candidate: InterfaceAutomaton, family) -> tuple:
    """Find a member of ``family`` showing ``candidate`` is not universal.

    Reasons, strongest first: ``not-refined`` (same signature, does not refine
    the candidate); ``unit-*`` (composition with the candidate is undefined,
    changes the signature, or does not refine the original); and
    ``signature-mismatch`` (refinement against the candidate is undefined).
    """
    for a in family:
        if a.same_signature(candidate) and not refines(a, candidate):
            return a, "not-refined"
    for a in family:
        if not composable(a, candidate):
            continue
        res = optimistic_compose(a, candidate)
        if res is INCOMPATIBLE:
            return a, "unit-incompatible"
        if not res.same_signature(a):
            return a, "unit-signature-changes"
        if not refines(res, a):
            return a, "unit-not-refined"
    for a in family:
        if not a.same_signature(candidate):
            return a, "signature-mismatch"
    return None, "undefeated"


def no_universal_witness(max_states=2, actions=("a", "b")) -> list:
    """Exhaustive table: for each candidate in the bounded family, a defeating
    automaton from the same family together with the reason."""
    family = list(enumerate_family(max_states, actions))
    rows = []
    for i, c in enumerate(family):
        w, why = defeat(c, family)
        rows.append(WitnessRow(i, c, w, why))
    return rows


# -- shrinking support ------------------------------------------------------

def reductions(a: InterfaceAutomaton):
    for t in sorted(a.transitions):
        yield InterfaceAutomaton(a.inputs, a.outputs, a.internals, a.states, a.initial, a.transitions - {t})
    for s in sorted(a.states - {a.initial}):
        yield InterfaceAutomaton(
            a.inputs, a.outputs, a.internals, a.states - {s}, a.initial,
            {t for t in a.transitions if s not in (t[0], t[2])},
        )
    used = {t[1] for t in a.transitions}
    for x in sorted(a.signature - used):
        yield InterfaceAutomaton(
            a.inputs - {x}, a.outputs - {x}, a.internals - {x}, a.states, a.initial, a.transitions
        )
