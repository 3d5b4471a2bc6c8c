"""Command-line frontend.

Exit codes: 0 success / refinement holds / all laws hold; 1 refinement
false / some law fails / incompatible; 2 usage error; 3 parse error;
4 undefined operation (control conflict, signature or alphabet mismatch,
nondeterministic input, determinization blow-up).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fa, ia, mts
from .audit import audit
from .errors import (
    EnumerationBoundError,
    NondeterministicError,
    ParseError,
    StateBlowUp,
    UndefinedOperation,
)
from .generate import GenConfig, enumerate_all
from .specfile import parse_spec, render_file, render_spec
from .theories import get_theory

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PARSE, EXIT_UNDEFINED = range(5)


class _Usage(Exception):
    pass


def _load(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise _Usage(f"cannot read {path}: {e.strerror}") from None
    return parse_spec(text)


def _pick(specs, name):
    if name not in specs:
        raise _Usage(f"no spec named {name!r}")
    return specs[name]


def _pair(args):
    specs = _load(args.file)
    left, right = _pick(specs, args.left), _pick(specs, args.right)
    if type(left) is not type(right):
        raise UndefinedOperation("operands belong to different theories")
    return left, right


def _emit(value, name, out):
    text = render_spec(value, name)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_refine(args):
    a, b = _pair(args)
    module = {fa.Nfa: fa, mts.Mts: mts, ia.InterfaceAutomaton: ia}[type(a)]
    holds = module.refines(a, b)
    print("true" if holds else "false")
    return EXIT_OK if holds else EXIT_FALSE


def cmd_binary(args):
    a, b = _pair(args)
    op = args.command
    if isinstance(a, fa.Nfa):
        result = getattr(fa, op)(a, b)
    elif isinstance(a, mts.Mts):
        result = mts.compose(a, b, args.mts_rule) if op == "compose" else getattr(mts, op)(a, b)
    else:
        if op != "compose":
            raise UndefinedOperation(f"{op} is not defined for interface automata")
        result = ia.optimistic_compose(a, b)
        if result is ia.INCOMPATIBLE:
            print("incompatible", file=sys.stderr)
            return EXIT_FALSE
    _emit(result, f"{args.left}_{op}_{args.right}", args.output)
    return EXIT_OK


def cmd_quotient(args):
    b, a = _pair(args)
    if not isinstance(a, fa.Nfa):
        raise UndefinedOperation("quotients are only defined for finite automata")
    op = fa.conj_quotient if args.kind == "conj" else fa.par_quotient
    _emit(op(b, a), f"{args.left}_{args.kind}quot_{args.right}", args.output)
    return EXIT_OK


def cmd_compat(args):
    a, b = _pair(args)
    if not isinstance(a, ia.InterfaceAutomaton):
        raise UndefinedOperation("compatibility is defined for interface automata only")
    if args.mode == "optimistic":
        result = ia.optimistic_compose(a, b)
    elif args.mode == "pessimistic":
        result = ia.pessimistic_compose(a, b)
    else:
        result = ia.comp_prune(ia.product(a, b))
    if result is ia.INCOMPATIBLE:
        print("incompatible")
        return EXIT_FALSE
    _emit(result, f"{args.left}_{args.mode}_{args.right}", args.output)
    return EXIT_OK


def _config(args, mode=None):
    return GenConfig(
        theory=args.theory,
        max_states=args.max_states,
        alphabet_size=args.alphabet_size,
        sample_count=getattr(args, "samples", 0),
        seed=getattr(args, "seed", 0),
        mode=mode or args.mode,
        mts_rule=args.mts_rule,
    )


def cmd_audit(args):
    config = _config(args)
    report = audit(get_theory(args.theory, args.mts_rule), config, jobs=args.jobs)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_FALSE if report.failed else EXIT_OK


def cmd_enumerate(args):
    config = _config(args, mode="exhaustive")
    specs = {f"e{i}": v for i, v in enumerate(enumerate_all(config))}
    sys.stdout.write(render_file(specs))
    print(f"{len(specs)} specifications", file=sys.stderr)
    return EXIT_OK


def cmd_no_universal(args):
    actions = tuple(x for x in args.actions.split(",") if x)
    rows = ia.no_universal_witness(args.max_states, actions)
    defeated = sum(r.witness is not None for r in rows)
    if args.format == "json":
        out = {
            "maxStates": args.max_states,
            "actions": list(actions),
            "candidates": len(rows),
            "defeated": defeated,
            "rows": [
                {
                    "index": r.index,
                    "reason": r.reason,
                    "candidate": render_spec(r.candidate, f"c{r.index}"),
                    "witness": None if r.witness is None else render_spec(r.witness, f"w{r.index}"),
                }
                for r in rows
            ],
        }
        print(json.dumps(out, indent=2))
    else:
        for r in rows:
            print(f"# candidate {r.index}: {r.reason}")
            sys.stdout.write(render_spec(r.candidate, f"c{r.index}"))
            if r.witness is not None:
                sys.stdout.write(render_spec(r.witness, f"w{r.index}"))
        print(f"# {defeated}/{len(rows)} candidates defeated")
    return EXIT_OK if defeated == len(rows) else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(prog="specalg", description="Specification-theory workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    def operands(sp):
        sp.add_argument("file")
        sp.add_argument("--left", required=True)
        sp.add_argument("--right", required=True)

    sp = sub.add_parser("refine", help="check left <= right")
    operands(sp)
    sp.set_defaults(func=cmd_refine)

    for name in ("conjoin", "compose", "disjoin"):
        sp = sub.add_parser(name, help=f"{name} two specifications")
        operands(sp)
        sp.add_argument("-o", "--output")
        sp.add_argument("--mts-rule", choices=("meet", "join"), default="meet")
        sp.set_defaults(func=cmd_binary)

    sp = sub.add_parser("quotient", help="largest X with right (op) X <= left (finite automata)")
    operands(sp)
    sp.add_argument("--kind", choices=("conj", "par"), required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("compat", help="compatibility of two interface automata")
    operands(sp)
    sp.add_argument("--mode", choices=("optimistic", "pessimistic", "component"), required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_compat)

    def bounds(sp, max_states):
        sp.add_argument("--theory", choices=("fa", "mts", "ia"), required=True)
        sp.add_argument("--mts-rule", choices=("meet", "join"), default="meet")
        sp.add_argument("--max-states", type=int, default=max_states)
        sp.add_argument("--alphabet-size", type=int, default=2)

    sp = sub.add_parser("audit", help="check every law against a theory")
    bounds(sp, 3)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("enumerate", help="list every specification within small bounds")
    bounds(sp, 1)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("no-universal", help="bounded search showing no universal interface automaton")
    sp.add_argument("--max-states", type=int, default=2)
    sp.add_argument("--actions", default="a,b")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_no_universal)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as e:
        print(f"{args.file}: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (UndefinedOperation, NondeterministicError, StateBlowUp) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (_Usage, EnumerationBoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
