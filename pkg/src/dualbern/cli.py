"""Command-line surface: point/grid evaluation, accuracy sweeps, projections.

All output is deterministic CSV-style text; values are printed with 17
significant digits so binary64 round-trips exactly.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .dual import dual_all_at_point, dual_all_multi
from .errors import DomainError, UndefinedAcc, UnsupportedParams
from .jacobi import WeightParams
from .projection import INTEGRANDS, project
from .reference import run_experiment

PRESETS = {
    "legendre": (0.0, 0.0),
    "chebyshev": (-0.5, -0.5),
    "paper-nonstd": (-0.33, 5.6),
}

_BINARY64_EQUIV_DIGITS = 16


@dataclass
class RunConfig:
    """Resolved invocation: command plus every knob the handlers consume."""

    command: str
    n_list: list
    alpha: float
    beta: float
    points: list = field(default_factory=list)
    precisions: list = field(default_factory=list)
    ref_digits: int = 512
    fn: str = ""
    quad: int = 0
    x: float = 0.0
    output: str = ""


def _fmt(v):
    return "%.16e" % v


def _resolve_params(args):
    if args.preset is not None:
        if args.alpha is not None or args.beta is not None:
            raise DomainError("give either --preset or --alpha/--beta, not both")
        return PRESETS[args.preset]
    if args.alpha is None or args.beta is None:
        raise DomainError("need --alpha and --beta (or --preset)")
    return args.alpha, args.beta


def _parse_grid(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError("grid spec must be start:stop:step, got %r" % spec)
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError("grid spec must be numeric, got %r" % spec) from None
    if step <= 0:
        raise DomainError("grid step must be positive")
    if not (0 <= start <= stop <= 1):
        raise DomainError("grid must lie inside [0, 1]")
    count = int((stop - start) / step + 1e-9) + 1
    return [start + i * step for i in range(count)]


def _parse_precisions(spec):
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if tok == "binary64":
            out.append("binary64")
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise DomainError("precision must be binary64 or a digit count, got %r" % tok) from None
    return out


def _precision_digits(p):
    return _BINARY64_EQUIV_DIGITS if p == "binary64" else p


def _cmd_eval(cfg):
    params = WeightParams(cfg.alpha, cfg.beta)
    table = dual_all_at_point(cfg.n_list[0], params, cfg.x)
    return ["%d,%s" % (i, _fmt(v)) for i, v in enumerate(table.values)]


def _cmd_grid(cfg):
    params = WeightParams(cfg.alpha, cfg.beta)
    tables = dual_all_multi(cfg.n_list[0], params, cfg.points)
    lines = ["x,i,value"]
    for x, table in zip(cfg.points, tables):
        for i, v in enumerate(table.values):
            lines.append("%s,%d,%s" % (_fmt(x), i, _fmt(v)))
    return lines


def _cmd_experiment(cfg):
    limit = 2 * max(_precision_digits(p) for p in cfg.precisions)
    if cfg.ref_digits <= limit:
        raise DomainError(
            "reference digits (%d) must exceed twice the largest working precision (%d)"
            % (cfg.ref_digits, limit)
        )
    params = WeightParams(cfg.alpha, cfg.beta)
    reports = run_experiment(cfg.n_list, [params], cfg.precisions, cfg.points, cfg.ref_digits)
    lines = ["n,alpha,beta,precision,mean_acc,p1_acc,min_acc"]
    for r in reports:
        lines.append(
            "%d,%r,%r,%s,%.4f,%.4f,%.4f"
            % (r.n, cfg.alpha, cfg.beta, r.precision, r.mean_acc, r.p1_acc, r.min_acc)
        )
    return lines


def _cmd_project(cfg):
    if cfg.alpha < 0 or cfg.beta < 0:
        raise UnsupportedParams("projection needs alpha >= 0 and beta >= 0")
    if cfg.fn not in INTEGRANDS:
        raise DomainError(
            "unknown integrand %r; choose from %s" % (cfg.fn, ", ".join(sorted(INTEGRANDS)))
        )
    params = WeightParams(cfg.alpha, cfg.beta)
    result = project(INTEGRANDS[cfg.fn], cfg.n_list[0], params, cfg.quad)
    lines = ["k,I_k"]
    lines += ["%d,%s" % (k, _fmt(c)) for k, c in enumerate(result.coeffs)]
    lines.append("error_sq,%s" % _fmt(result.error_sq))
    return lines


def _add_param_flags(sub):
    sub.add_argument("--alpha", type=float, default=None, help="weight exponent at x=1")
    sub.add_argument("--beta", type=float, default=None, help="weight exponent at x=0")
    sub.add_argument("--preset", choices=sorted(PRESETS), default=None,
                     help="named (alpha, beta) pair")
    sub.add_argument("--output", default=None, help="write output here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="dualbern",
                                     description="Dual Bernstein basis toolbox")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="all dual values at one point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    _add_param_flags(p)

    p = subs.add_parser("grid", help="all dual values on a grid, as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", required=True, help="grid spec start:stop:step")
    _add_param_flags(p)

    p = subs.add_parser("experiment", help="digit-accuracy sweep against a high-precision reference")
    p.add_argument("--n-list", required=True, help="comma-separated degrees")
    p.add_argument("--precisions", default="binary64",
                   help="comma-separated: binary64 and/or decimal digit counts")
    p.add_argument("--ref-digits", type=int, default=512)
    p.add_argument("--grid", default="0.01:0.99:0.01", help="grid spec start:stop:step")
    _add_param_flags(p)

    p = subs.add_parser("project", help="weighted least-squares fit of a named integrand")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fn", required=True, help="integrand name")
    p.add_argument("--quad", type=int, default=None, help="quadrature node count")
    _add_param_flags(p)

    return parser


_HANDLERS = {
    "eval": _cmd_eval,
    "grid": _cmd_grid,
    "experiment": _cmd_experiment,
    "project": _cmd_project,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        alpha, beta = _resolve_params(args)
        if args.command == "eval":
            cfg = RunConfig("eval", [args.n], alpha, beta, x=args.x, output=args.output)
        elif args.command == "grid":
            cfg = RunConfig("grid", [args.n], alpha, beta,
                            points=_parse_grid(args.points), output=args.output)
        elif args.command == "experiment":
            cfg = RunConfig(
                "experiment",
                [int(t) for t in args.n_list.split(",")],
                alpha,
                beta,
                points=_parse_grid(args.grid),
                precisions=_parse_precisions(args.precisions),
                ref_digits=args.ref_digits,
                output=args.output,
            )
        else:
            cfg = RunConfig("project", [args.n], alpha, beta,
                            fn=args.fn, quad=args.quad, output=args.output)
        lines = _HANDLERS[cfg.command](cfg)
    except (DomainError, UnsupportedParams, UndefinedAcc, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    text = "\n".join(lines) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run():
    sys.exit(main())
