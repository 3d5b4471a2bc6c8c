"""Abstract specification-theory interface and the catalogue of checkable laws.

A theory is a :class:`TheoryHandle`: a bundle of operations over some
universe of specification values.  Each :class:`LawId` names one algebraic
law; :func:`law_predicate` evaluates a single instance of it on explicit
arguments.  Partiality is a third outcome, ``INAPPLICABLE``, never a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional

from .errors import AlphabetMismatch, UndefinedOperation


class LawId(str, Enum):
    REFL = "REFL"
    TRANS = "TRANS"
    UNIV = "UNIV"
    CONJ_TOTAL = "CONJ_TOTAL"
    CONJ_COMM = "CONJ_COMM"
    CONJ_LB = "CONJ_LB"
    CONJ_GLB = "CONJ_GLB"
    PAR_TOTAL = "PAR_TOTAL"
    PAR_COMM = "PAR_COMM"
    PRECONG = "PRECONG"
    PAR_UNIT = "PAR_UNIT"
    THM1 = "THM1"
    CONJ_QUOT_DEF = "CONJ_QUOT_DEF"
    PAR_QUOT_DEF = "PAR_QUOT_DEF"
    THM3 = "THM3"
    CONJ_NULL = "CONJ_NULL"
    DISJ_LUB = "DISJ_LUB"
    DISJ_UB = "DISJ_UB"
    DISTRIB = "DISTRIB"
    THM4_MAX = "THM4_MAX"
    THM5_ASSOC = "THM5_ASSOC"
    PAR_IDEMP = "PAR_IDEMP"
    THM6_ASSOC = "THM6_ASSOC"


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INAPPLICABLE = "inapplicable"


INAPPLICABLE = Status.INAPPLICABLE

Op = Optional[Callable[..., Any]]


@dataclass(frozen=True)
class TheoryHandle:
    """Capabilities of one specification theory.

    ``universal`` and ``null`` take a specification and return the constant
    over that specification's alphabet.  The trailing hooks are filled in
    when the audit harness wires a theory up.
    """

    name: str
    refines: Callable[[Any, Any], bool]
    composable: Callable[[Any, Any], bool]
    conjoin: Op = None
    compose: Op = None
    universal: Op = None
    null: Op = None
    disjoin: Op = None
    conj_quotient: Op = None
    par_quotient: Op = None
    # audit hooks
    generate: Op = None
    enumerate: Op = None
    reductions: Op = None
    uses_symbol: Op = None
    drop_symbol: Op = None
    shared_alphabet: bool = True
    render: Op = None


def equiv(T: TheoryHandle, a, b) -> bool:
    return T.refines(a, b) and T.refines(b, a)


class _Missing(Exception):
    """A capability the law needs is absent from the theory."""


def _need(op):
    if op is None:
        raise _Missing
    return op


def _defined(fn, *args):
    # Alphabet mismatch means the arguments live in different universes, so
    # totality says nothing about them.
    try:
        fn(*args)
    except AlphabetMismatch:
        raise
    except UndefinedOperation:
        return False
    return True


# Every law returns (verdict, premise_hit); premise_hit is None for laws that
# are not implications.

def _refl(T, a):
    return T.refines(a, a), None


def _trans(T, a, b, c):
    p = T.refines(a, b) and T.refines(b, c)
    return (not p or T.refines(a, c)), p


def _univ(T, a):
    return T.refines(a, _need(T.universal)(a)), None


def _conj_total(T, a, b):
    return _defined(_need(T.conjoin), a, b), None


def _conj_comm(T, a, b):
    conj = _need(T.conjoin)
    return T.refines(conj(a, b), conj(b, a)), None


def _conj_lb(T, a, b):
    ab = _need(T.conjoin)(a, b)
    return T.refines(ab, a) and T.refines(ab, b), None


def _conj_glb(T, a, b, c):
    conj = _need(T.conjoin)
    p = T.refines(c, a) and T.refines(c, b)
    return (not p or T.refines(c, conj(a, b))), p


def _par_total(T, a, b):
    comp = _need(T.compose)
    return T.composable(a, b) and _defined(comp, a, b), None


def _par_comm(T, a, b):
    comp = _need(T.compose)
    return T.refines(comp(a, b), comp(b, a)), None


def _precong(T, a, b, c):
    comp = _need(T.compose)
    p = T.refines(a, b)
    return (not p or T.refines(comp(a, c), comp(b, c))), p


def _par_unit(T, a):
    u = _need(T.universal)(a)
    return T.refines(_need(T.compose)(a, u), a), None


def _thm1(T, a, b):
    comp, conj = _need(T.compose), _need(T.conjoin)
    return T.refines(comp(a, b), conj(a, b)), None


def _conj_quot_def(T, a, b):
    q = _need(T.conj_quotient)(b, a)
    return T.refines(_need(T.conjoin)(a, q), b), None


def _par_quot_def(T, a, b):
    q = _need(T.par_quotient)(b, a)
    return T.refines(_need(T.compose)(a, q), b), None


def _thm3(T, a, b):
    cq, pq = _need(T.conj_quotient), _need(T.par_quotient)
    return T.refines(cq(b, a), pq(b, a)), None


def _conj_null(T, a):
    z = _need(T.null)(a)
    return T.refines(_need(T.conjoin)(a, z), z), None


def _disj_lub(T, a, b, c):
    disj = _need(T.disjoin)
    p = T.refines(a, c) and T.refines(b, c)
    return (not p or T.refines(disj(a, b), c)), p


def _disj_ub(T, a, b):
    ab = _need(T.disjoin)(a, b)
    return T.refines(a, ab) and T.refines(b, ab), None


def _distrib(T, a, x1, x2):
    # Instantiated at the tightest right-hand side B = (A&X1) | (A&X2); any
    # larger B then follows by transitivity.
    conj, disj = _need(T.conjoin), _need(T.disjoin)
    return T.refines(conj(a, disj(x1, x2)), disj(conj(a, x1), conj(a, x2))), None


def _thm4_max(T, a, b, x):
    q = _need(T.conj_quotient)
    p = T.refines(_need(T.conjoin)(a, x), b)
    return (not p or T.refines(x, q(b, a))), p


def _thm5(T, a, b, c):
    conj = _need(T.conjoin)
    return T.refines(conj(conj(a, b), c), conj(a, conj(b, c))), None


def _par_idemp(T, a):
    return T.refines(a, _need(T.compose)(a, a)), None


def _thm6(T, a, b, c):
    comp = _need(T.compose)
    return T.refines(comp(comp(a, b), c), comp(a, comp(b, c))), None


_LAWS = {
    LawId.REFL: (1, _refl),
    LawId.TRANS: (3, _trans),
    LawId.UNIV: (1, _univ),
    LawId.CONJ_TOTAL: (2, _conj_total),
    LawId.CONJ_COMM: (2, _conj_comm),
    LawId.CONJ_LB: (2, _conj_lb),
    LawId.CONJ_GLB: (3, _conj_glb),
    LawId.PAR_TOTAL: (2, _par_total),
    LawId.PAR_COMM: (2, _par_comm),
    LawId.PRECONG: (3, _precong),
    LawId.PAR_UNIT: (1, _par_unit),
    LawId.THM1: (2, _thm1),
    LawId.CONJ_QUOT_DEF: (2, _conj_quot_def),
    LawId.PAR_QUOT_DEF: (2, _par_quot_def),
    LawId.THM3: (2, _thm3),
    LawId.CONJ_NULL: (1, _conj_null),
    LawId.DISJ_LUB: (3, _disj_lub),
    LawId.DISJ_UB: (2, _disj_ub),
    LawId.DISTRIB: (3, _distrib),
    LawId.THM4_MAX: (3, _thm4_max),
    LawId.THM5_ASSOC: (3, _thm5),
    LawId.PAR_IDEMP: (1, _par_idemp),
    LawId.THM6_ASSOC: (3, _thm6),
}

IMPLICATIONS = frozenset({LawId.TRANS, LawId.CONJ_GLB, LawId.PRECONG, LawId.DISJ_LUB, LawId.THM4_MAX})


def law_arity(law: LawId) -> int:
    return _LAWS[LawId(law)][0]


def evaluate(T: TheoryHandle, law: LawId, args) -> tuple:
    """Like :func:`law_predicate` but also reports whether an implication's
    premise held (``None`` for laws that are not implications)."""
    arity, fn = _LAWS[LawId(law)]
    if len(args) != arity:
        raise ValueError(f"{law} takes {arity} arguments, got {len(args)}")
    try:
        return fn(T, *args)
    except (_Missing, UndefinedOperation):
        return INAPPLICABLE, None


def law_predicate(T: TheoryHandle, law: LawId, args):
    """True, False or ``INAPPLICABLE`` for one instance of ``law``."""
    return evaluate(T, law, args)[0]
