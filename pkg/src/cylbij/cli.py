"""Command-line front end: ``cylbij verify|map|unmap|series|hooks|local-rule|render``.

Exit codes: 0 success, 1 verification counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bijection import phi, psi
from .diagram import ALCD, alcd_weight, boxes_up_to_hook, depth, diag_weights, hook
from .growth import from_cpp, from_pair, render
from .local_rule import LocalRuleError, burge_down, burge_up
from .partitions import cpp_weight, parse_profile
from .serialize import (
    InputError,
    alcd_from_json,
    cpp_from_json,
    cpp_to_json,
    dumps,
    loads,
    pair_from_json,
    pair_to_json,
    parse_partition_text,
)
from .series import borodin_rhs_series, enumerate_cpp_series, enumerate_pairs_series
from .verify import verify_profile


def _profile_arg(text: str):
    try:
        return parse_profile(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"truncation order must be an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("truncation order must be non-negative")
    return n


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"input: cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_verify(args) -> int:
    report = verify_profile(args.profile, args.N, args.bound)
    if args.format == "json":
        _write(args.output, dumps(report.as_json()))
    else:
        _write(args.output, report.as_text() + "\n")
    return 0 if report.passed else 1


def cmd_map(args) -> int:
    gamma, d = pair_from_json(loads(_read(args.input), "input"))
    _write(args.output, dumps(cpp_to_json(psi(gamma, d))))
    return 0


def cmd_unmap(args) -> int:
    c = cpp_from_json(loads(_read(args.input), "input"))
    gamma, d = phi(c)
    _write(args.output, dumps(pair_to_json(gamma, d)))
    return 0


def cmd_series(args) -> int:
    sides = {"lhs": enumerate_cpp_series, "pairs": enumerate_pairs_series, "rhs": borodin_rhs_series}
    chosen = list(sides) if args.side == "all" else [args.side]
    values = {name: list(sides[name](args.profile, args.N)) for name in chosen}
    if args.format == "json":
        _write(args.output, dumps({"profile": args.profile.bits, "N": args.N, **values}))
    else:
        lines = [f"{'w':>3}" + "".join(f" {name:>12}" for name in chosen)]
        for w in range(args.N + 1):
            lines.append(f"{w:>3}" + "".join(f" {values[name][w]:>12}" for name in chosen))
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_hooks(args) -> int:
    rows = [(c.i, c.j, c.k, hook(args.profile, c)) for c in boxes_up_to_hook(args.profile, args.N)]
    if args.format == "json":
        _write(args.output, dumps([list(r) for r in rows]))
    else:
        lines = [f"{'i':>3} {'j':>3} {'k':>3} {'hook':>5}"] + [f"{i:>3} {j:>3} {k:>3} {h:>5}" for i, j, k, h in rows]
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_local_rule(args) -> int:
    alpha = parse_partition_text(args.alpha, "alpha")
    beta = parse_partition_text(args.beta, "beta")
    try:
        if args.lam is not None:
            ell, nu = burge_down(alpha, beta, parse_partition_text(args.lam, "lambda"))
            out = {"ell": ell, "nu": list(nu)}
        else:
            if args.ell is None or args.nu is None:
                raise InputError("local-rule: give either --lambda or both --ell and --nu")
            lam = burge_up(alpha, beta, args.ell, parse_partition_text(args.nu, "nu"))
            out = {"lambda": list(lam)}
    except LocalRuleError as exc:
        raise InputError(f"local-rule: {exc}") from None
    _write(args.output, dumps(out))
    return 0


def render_alcd(d: ALCD) -> str:
    """One line per cylindric row ``i``: ``j/k:hook=label`` for each labelled box."""
    lines = [f"ALCD over {d.profile}   weight {alcd_weight(d)}   depth {depth(d)}",
             "diagonal weights " + " ".join(str(w) for w in diag_weights(d))]
    by_row: dict[int, list[str]] = {}
    for c, lab in d.labels:
        by_row.setdefault(c.i, []).append(f"({c.i},{c.j},{c.k}) h={hook(d.profile, c)}: {lab}")
    for i in sorted(by_row):
        lines.append(f"row {i}: " + "   ".join(by_row[i]))
    return "\n".join(lines)


def cmd_render(args) -> int:
    obj = loads(_read(args.input), "input")
    if isinstance(obj, dict) and "slices" in obj:
        c = cpp_from_json(obj)
        text = f"CPP {c} weight {cpp_weight(c)}\n" + render(from_cpp(c))
    elif isinstance(obj, dict) and "gamma" in obj:
        gamma, d = pair_from_json(obj)
        text = render_alcd(d) + "\n" + render(from_pair(gamma, d))
    elif isinstance(obj, dict) and "labels" in obj:
        text = render_alcd(alcd_from_json(obj))
    else:
        raise InputError("input: expected a CPP ('slices'), a pair ('gamma') or an ALCD ('labels')")
    _write(args.output, text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylbij", description="Cylindric plane partitions: bijection and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_profile(p):
        p.add_argument("-p", "--profile", type=_profile_arg, required=True, help="binary profile, e.g. 10100")

    def add_output(p, formats=True):
        p.add_argument("-o", "--output", help="output file (default stdout)")
        if formats:
            p.add_argument("--format", choices=["json", "text"], default="text")

    p = sub.add_parser("verify", help="series agreement and bijection round trips")
    add_profile(p)
    p.add_argument("-N", type=_order_arg, default=10, help="truncation order (default 10)")
    p.add_argument("--bound", type=_order_arg, default=None, help="round-trip weight bound (default min(N, 8))")
    add_output(p)
    p.set_defaults(func=cmd_verify)

    for name, func, text in (("map", cmd_map, "pair -> CPP"), ("unmap", cmd_unmap, "CPP -> pair")):
        p = sub.add_parser(name, help=text)
        p.add_argument("-i", "--input", help="input JSON file (default stdin)")
        add_output(p, formats=False)
        p.set_defaults(func=func)

    p = sub.add_parser("series", help="coefficients of the generating series")
    add_profile(p)
    p.add_argument("-N", type=_order_arg, default=10)
    p.add_argument("--side", choices=["lhs", "rhs", "pairs", "all"], default="all")
    add_output(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("hooks", help="cylindric hook lengths up to N")
    add_profile(p)
    p.add_argument("-N", type=_order_arg, default=10)
    add_output(p)
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("local-rule", help="apply the Burge local rule once")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--lambda", dest="lam", help="top partition: apply the forward rule")
    p.add_argument("--ell", type=_order_arg, help="face label for the inverse rule")
    p.add_argument("--nu", help="bottom partition for the inverse rule")
    add_output(p, formats=False)
    p.set_defaults(func=cmd_local_rule)

    p = sub.add_parser("render", help="ASCII view of a CPP, pair or ALCD")
    p.add_argument("-i", "--input", help="input JSON file (default stdin)")
    add_output(p, formats=False)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"cylbij: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
