"""Wiring of the concrete theories into :class:`TheoryHandle` values."""

from __future__ import annotations

from functools import lru_cache

from . import fa, ia, mts
from .algebra import TheoryHandle
from .errors import IncompatibleInterfaces
from .generate import enumerate_all, gen_random

NAMES = ("fa", "mts/meet", "mts/join", "ia")

_CACHE_SIZE = 1 << 18


def _memo(fn):
    return lru_cache(maxsize=_CACHE_SIZE)(fn)


def _ia_compose(a, b):
    res = ia.optimistic_compose(a, b)
    if res is ia.INCOMPATIBLE:
        raise IncompatibleInterfaces()
    return res


def _render(value, name="spec"):
    from .specfile import render_spec

    return render_spec(value, name)


def _fa_handle():
    return TheoryHandle(
        name="fa",
        refines=_memo(fa.refines),
        composable=lambda a, b: True,
        conjoin=_memo(fa.conjoin),
        compose=_memo(fa.compose),
        universal=lambda a: fa.universal(a.alphabet),
        null=lambda a: fa.empty(a.alphabet),
        disjoin=_memo(fa.disjoin),
        conj_quotient=_memo(fa.conj_quotient),
        par_quotient=_memo(fa.par_quotient),
        generate=gen_random,
        enumerate=enumerate_all,
        reductions=fa.reductions,
        uses_symbol=fa.uses_symbol,
        drop_symbol=fa.drop_symbol,
        render=_render,
    )


def _mts_handle(rule):
    rule = mts.Rule(rule)
    return TheoryHandle(
        name=f"mts/{rule.value}",
        refines=_memo(mts.refines),
        composable=lambda a, b: True,
        conjoin=_memo(mts.conjoin),
        compose=_memo(lambda a, b: mts.compose(a, b, rule)),
        universal=lambda a: mts.universal(a.alphabet),
        null=lambda a: mts.bottom(a.alphabet),
        disjoin=_memo(mts.disjoin),
        generate=gen_random,
        enumerate=enumerate_all,
        reductions=mts.reductions,
        uses_symbol=mts.uses_symbol,
        drop_symbol=mts.drop_symbol,
        render=_render,
    )


def _ia_handle():
    # No conjunction, universal, null, disjunction or quotients here.
    return TheoryHandle(
        name="ia",
        refines=_memo(ia.refines),
        composable=ia.composable,
        compose=_memo(_ia_compose),
        generate=gen_random,
        enumerate=enumerate_all,
        reductions=ia.reductions,
        shared_alphabet=False,
        render=_render,
    )


def get_theory(name: str, mts_rule: str = "meet") -> TheoryHandle:
    """Handle for ``fa``, ``ia``, ``mts`` (with ``mts_rule``) or ``mts/<rule>``."""
    if name == "fa":
        return _fa_handle()
    if name == "ia":
        return _ia_handle()
    if name == "mts":
        return _mts_handle(mts_rule)
    if name.startswith("mts/"):
        return _mts_handle(name.split("/", 1)[1])
    raise ValueError(f"unknown theory {name!r}")
