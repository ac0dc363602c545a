"""Command-line front end: ``malmsten eval | integrate | verify``.

Exit codes: 0 success, 1 verification failed, 2 domain/pole error,
3 convergence failure, 4 malformed grid override.
"""

import argparse
import json
import math
import re
import sys

from . import __version__
from .dirichlet import Acceleration, FunctionId, SeriesSettings, evaluate
from .errors import ConvergenceError, DomainError, MalmstenError
from .identities import INTEGRANDS, IdentityId, ParamGrid, integrand, run_grid
from .quadrature import QuadratureSettings
from .report import encode_value, format_complex

EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_BAD_GRID = 4

_COMPLEX_CHARS = re.compile(r"^[0-9eE.+-]+i?$")


def parse_complex(text):
    """Parse 'RE', 'RE+IMi', 'RE-IMi' or 'IMi' (no spaces)."""
    if not _COMPLEX_CHARS.match(text):
        raise ValueError(f"cannot parse {text!r} as a number of the form a or a+bi")
    body = text[:-1] + "j" if text.endswith("i") else text
    if body == "j" or body.endswith(("+j", "-j")):
        body = body[:-1] + "1j"
    try:
        z = complex(body)
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as a number of the form a or a+bi") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{text!r} is not finite")
    return z


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _series_settings(args):
    kwargs = {}
    if args.eps is not None:
        kwargs["target_eps"] = args.eps
    if args.max_terms is not None:
        kwargs["max_terms"] = args.max_terms
    if getattr(args, "no_accel", False):
        kwargs["acceleration"] = Acceleration.NONE
    return SeriesSettings(**kwargs)


def _quad_settings(args):
    kwargs = {}
    if args.eps is not None:
        kwargs["target_eps"] = args.eps
    if args.max_level is not None:
        kwargs["max_level"] = args.max_level
    return QuadratureSettings(**kwargs)


def _format_result(label, result, args, extra=()):
    if args.format == "json":
        payload = {k: encode_value(v) for k, v in extra}
        payload.update(
            value=encode_value(complex(result.value)),
            err_estimate=result.err_estimate,
            method=result.method.value,
            work=result.work,
        )
        return json.dumps(payload, indent=2) + "\n"
    rows = [(k, v if isinstance(v, str) else format_complex(v, args.precision)) for k, v in extra]
    rows += [
        ("value", format_complex(result.value, args.precision)),
        ("err_estimate", f"{result.err_estimate:.3g}"),
        ("method", result.method.value),
        (label, str(result.work)),
    ]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def cmd_eval(args):
    try:
        s = parse_complex(args.s)
    except ValueError as exc:
        raise _Fail(EXIT_DOMAIN, str(exc)) from None
    result = evaluate(args.function, s, _series_settings(args))
    return _format_result("work", result, args, (("function", args.function), ("s", s))), 0


def _integrand_params(args):
    names = INTEGRANDS[args.name][2]
    params = {}
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            raise _Fail(EXIT_DOMAIN, f"integrand {args.name!r} needs --{name}")
        try:
            if name == "n":
                params[name] = int(raw)
            elif name == "a":
                params[name] = float(raw)
            else:
                params[name] = parse_complex(raw)
        except ValueError as exc:
            raise _Fail(EXIT_DOMAIN, f"--{name}: {exc}") from None
    return params


def cmd_integrate(args):
    params = _integrand_params(args)
    result = integrand(args.name, _quad_settings(args), **params)
    extra = (("integrand", args.name),) + tuple(
        (k, v if isinstance(v, complex) else complex(v)) for k, v in params.items()
    )
    return _format_result("nodes", result, args, extra), 0


def _split(raw, convert, flag):
    try:
        values = [convert(part) for part in raw.split(",") if part != ""]
    except ValueError as exc:
        raise _Fail(EXIT_BAD_GRID, f"{flag}: {exc}") from None
    if not values:
        raise _Fail(EXIT_BAD_GRID, f"{flag}: empty list")
    return values


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise ValueError(f"{n} is not a positive integer")
    return n


def _grid_from_args(args):
    defaults = ParamGrid()
    a_values = defaults.a_values
    s_values = defaults.s_values
    n_values = defaults.n_values
    fe_values = defaults.fe_s_values
    if args.a is not None:
        a_values = _split(args.a, float, "--a")
        bad = [a for a in a_values if not 0.0 < a < math.pi]
        if bad:
            raise _Fail(EXIT_BAD_GRID, f"--a: {bad[0]:g} is outside (0, pi)")
    if args.s is not None:
        s_values = _split(args.s, parse_complex, "--s")
        bad = [s for s in s_values if not 0.0 < s.real < 1.0]
        if bad:
            raise _Fail(EXIT_BAD_GRID, f"--s: {bad[0]} is outside the strip 0 < Re s < 1")
    if args.n is not None:
        n_values = _split(args.n, _positive_int, "--n")
    if args.fe_s is not None:
        fe_values = _split(args.fe_s, parse_complex, "--fe-s")
    return ParamGrid(a_values, s_values, n_values, fe_values)


def cmd_verify(args):
    ids = args.ids or ["all"]
    if "all" in ids:
        ids = list(IdentityId)
    grid = _grid_from_args(args)
    report = run_grid(grid, ids, _quad_settings(args), _series_settings(args), workers=args.workers)
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "table":
        text = report.to_table(args.precision)
    else:
        text = report.to_json() + "\n"
    return text, 0 if report.overall_pass else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, help="target absolute tolerance")
    common.add_argument("--max-level", type=int, help="quadrature refinement levels (1-12)")
    common.add_argument("--max-terms", type=int, help="series term budget")
    common.add_argument("--precision", type=int, default=15, help="significant digits shown")

    parser = argparse.ArgumentParser(
        prog="malmsten", description="Dirichlet series and Malmstén's integral identities."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate eta, lambda, beta or zeta")
    p.add_argument("function", choices=[f.value for f in FunctionId])
    p.add_argument("s", help="argument, e.g. 2, 0.5+14.1i (use -- before negative values)")
    p.add_argument("--no-accel", action="store_true", help="plain partial sums")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("integrate", parents=[common], help="integrate a named integrand")
    p.add_argument("name", choices=sorted(INTEGRANDS))
    p.add_argument("--a")
    p.add_argument("--s")
    p.add_argument("--n")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(handler=cmd_integrate)

    p = sub.add_parser("verify", parents=[common], help="check identities over a grid")
    # validated in main(): argparse rejects an empty list when nargs="*" has choices
    p.add_argument("ids", nargs="*", metavar="ID", help="identity names or 'all' (default)")
    p.add_argument("--a", help="comma-separated a values in (0, pi)")
    p.add_argument("--s", help="comma-separated s values for the strip identities")
    p.add_argument("--n", help="comma-separated positive integers")
    p.add_argument("--fe-s", dest="fe_s", help="comma-separated s values for the series identities")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        known = {"all"} | {i.value for i in IdentityId}
        unknown = [i for i in args.ids if i not in known]
        if unknown:
            parser.error(f"unknown identity {unknown[0]!r} (choose from {', '.join(sorted(known))})")
    try:
        text, code = args.handler(args)
    except _Fail as exc:
        print(f"error: {exc}", file=stderr)
        return exc.code
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except (ConvergenceError, OverflowError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONVERGENCE
    except MalmstenError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONVERGENCE
    stdout.write(text)
    return code


def run():
    sys.exit(main())
