import os
from operator import attrgetter


def det_cap():
    """Determinization cap, overridable through SPECALG_MAX_DET_STATES."""
    return int(os.environ.get("SPECALG_MAX_DET_STATES", "4096"))


def pair_names(pairs):
    """Readable, collision-free state names for product states.

    Pairs are named ``left.right``; if two pairs would collide (possible when
    operand state names already contain dots) every pair gets a numbered name.
    """
    names = {p: f"{p[0]}.{p[1]}" for p in pairs}
    if len(set(names.values())) == len(names):
        return names
    return {p: f"q{i}" for i, p in enumerate(sorted(pairs))}


def masks_by_action(states, actions, edges):
    """Flat successor-mask table ``succ[s * k + x]`` for (src, act, dst) edges."""
    sidx = {s: i for i, s in enumerate(states)}
    aidx = {a: i for i, a in enumerate(actions)}
    k = len(actions)
    succ = [0] * (len(states) * k)
    for src, act, dst in edges:
        succ[sidx[src] * k + aidx[act]] |= 1 << sidx[dst]
    return succ


def mask_of(states, subset):
    sidx = {s: i for i, s in enumerate(states)}
    m = 0
    for s in subset:
        m |= 1 << sidx[s]
    return m


class Value:
    """Hashable immutable specification value with a precomputed hash.

    Subclasses are frozen dataclasses declared with ``eq=False`` that list
    their fields in ``_fields`` and call ``_seal()`` at the end of
    ``__post_init__``.  ``_trusted`` builds an instance from already
    normalized fields without re-validating (for results of operations).
    """

    _fields = ()

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        cls._key_of = staticmethod(attrgetter(*cls._fields))

    def _key(self):
        return self._key_of(self)

    def _seal(self):
        self.__dict__["_hash"] = hash(self._key())

    def __eq__(self, other):
        if self is other:
            return True
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self._hash == other._hash and self._key_of(self) == self._key_of(other)

    def __hash__(self):
        return self._hash

    @classmethod
    def _trusted(cls, *values):
        obj = object.__new__(cls)
        d = obj.__dict__
        d.update(zip(cls._fields, values))
        d["_hash"] = hash(values)
        return obj
