"""Command line interface: ``heckoid <command> ...``.

Exit codes: 0 success, 1 counterexample found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .algebra import are_conjugate, classify, to_cyclic_normal_form, to_normal_form
from .farey_orbit import reduce_slope
from .harness import ORACLES, SWEEPS, RunConfig, write_report
from .hecke_rep import classify_matrix, rho
from .riley import cs_of_slope, riley_word
from .slopes import Slope
from .words import Word

_WORD_TOKEN = re.compile(r"[abAB]*")


class UsageError(Exception):
    pass


def parse_slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def parse_word_or_slope(text: str) -> Word:
    """A token over ``abAB`` is a word; anything else must be a slope (-> u_s)."""
    if _WORD_TOKEN.fullmatch(text):
        return Word(text)
    s = parse_slope(text)
    if s.is_infinite:
        raise UsageError("u_s is undefined for s = ∞")
    return riley_word(s).word


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(text)


def cmd_word(args) -> int:
    s = parse_slope(args.slope)
    if s.is_infinite:
        raise UsageError("u_s is undefined for s = ∞")
    print(riley_word(s).word.letters)
    return 0


def cmd_cs(args) -> int:
    s = parse_slope(args.slope)
    try:
        runs = list(cs_of_slope(s).canonical)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(runs, args.format, "((" + ",".join(map(str, runs)) + "))")
    return 0


def cmd_reduce(args) -> int:
    s = parse_slope(args.slope)
    tr = reduce_slope(s, args.index)
    obj = {"canonical": tr.canonical.to_json(), "steps": [st.to_json() for st in tr.steps]}
    if args.trace:
        obj["pierces"] = tr.pierces
        gw = tr.generator_word()
        obj["generators"] = gw if len(gw) <= 10_000 else None
    lines = [f"canonical: {tr.canonical}"]
    if args.trace:
        lines += [f"  {st.label}^{st.power} -> {st.result}" for st in tr.steps]
    _emit(obj, args.format, "\n".join(lines))
    return 0


def cmd_decide(args) -> int:
    w = parse_word_or_slope(args.word)
    cls = classify(w, args.index)
    cyc, _ = to_cyclic_normal_form(w, args.index)
    obj = cls.to_json()
    obj["detail"]["normal_form"] = to_normal_form(w, args.index).to_json()
    obj["detail"]["cyclic_normal_form"] = cyc.to_json()
    _emit(obj, args.format, f"{cls}  [cyclic normal form {cyc}]")
    return 0


def cmd_conjugate(args) -> int:
    w1 = parse_word_or_slope(args.w1)
    w2 = parse_word_or_slope(args.w2)
    same = are_conjugate(w1, w2, args.index)
    either = same or are_conjugate(w1, ~w2, args.index)
    _emit({"conjugate": same, "up_to_inversion": either}, args.format,
          f"conjugate: {same}\nup to inversion: {either}")
    return 0


def cmd_rep(args) -> int:
    w = parse_word_or_slope(args.word)
    m = rho(w, args.index)
    tc = classify_matrix(m)
    _emit({"trace": tc.trace, "class": tc.kind, "matrix": m.to_list()}, args.format,
          f"trace {tc.trace:.12g}: {tc.kind}")
    return 0


def cmd_verify(args) -> int:
    sweeps = list(SWEEPS) if args.sweep == "all" else [args.sweep]
    kwargs = {"index": args.index, "seed": args.seed, "oracle": args.oracle}
    for opt in ("max_denominator", "pair_denominator", "samples"):
        v = getattr(args, opt)
        if v is not None:
            kwargs[opt] = v
    try:
        cfg = RunConfig(**kwargs, out=args.out)
    except ValueError as e:
        raise UsageError(str(e)) from None
    reports = [SWEEPS[name](cfg) for name in sweeps]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_report(reports, fh, args.format, args.timing)
    else:
        write_report(reports, sys.stdout, args.format, args.timing)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckoid", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json")
    idx = argparse.ArgumentParser(add_help=False)
    idx.add_argument("--index", "-n", type=int, required=True, help="n >= 2")

    p = sub.add_parser("word", help="print the slope word u_s")
    p.add_argument("slope")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("cs", parents=[fmt], help="cyclic S-sequence of a slope in (0, 1]")
    p.add_argument("slope")
    p.set_defaults(func=cmd_cs)

    p = sub.add_parser("reduce", parents=[fmt, idx], help="reduce a slope to [1/n, 1] ∪ {∞, 0}")
    p.add_argument("slope")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("decide", parents=[fmt, idx], help="classify a word or slope word")
    p.add_argument("word")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("conjugate", parents=[fmt, idx], help="conjugacy of two words")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("rep", parents=[fmt, idx], help="Hecke matrix of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", parents=[fmt, idx], help="run verification sweeps")
    p.add_argument("sweep", choices=(*SWEEPS, "all"))
    p.add_argument("--max-denominator", type=int)
    p.add_argument("--pair-denominator", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--oracle", choices=ORACLES, default="all")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte reproducibility)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "index", 2) < 2:
        parser.error("--index must be >= 2")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"heckoid {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
