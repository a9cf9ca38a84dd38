"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure or route
disagreement.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import render
from .bench import run_bench
from .eulerian import eq4_verify, eulerian_table, higher_eulerian_poly
from .identities import SweepSummary, VerificationReport, sweep, theorem2_verify, theorem3_verify
from .triangle import ROUTES, routes_cross_check

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2

K_ENV = "EULERIAN_ODE_K"
FORMATS = ("plain", "json", "csv", "latex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_K(environ=os.environ) -> int:
    raw = environ.get(K_ENV)
    if raw is None:
        return 100
    try:
        K = int(raw)
    except ValueError:
        raise UsageError(f"{K_ENV} must be an integer, got {raw!r}") from None
    if K < 0:
        raise UsageError(f"{K_ENV} must be >= 0")
    return K


@dataclass
class CliConfig:
    subcommand: str
    params: dict = field(default_factory=dict)
    format: str = "plain"
    out: str | None = None
    jobs: int = 1
    fail_fast: bool = False
    default_K: int = 100

    def validate(self):
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        for key, v in self.params.items():
            if isinstance(v, int) and not isinstance(v, bool):
                floor = 1 if key in ("m", "reps") else 0
                if v < floor:
                    raise UsageError(f"{key} must be >= {floor}, got {v}")
            elif isinstance(v, list) and all(isinstance(x, int) for x in v):
                if any(x < 0 for x in v):
                    raise UsageError(f"{key} values must be >= 0")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--fail-fast", action="store_true", help="stop a sweep at its first failure")

    p = _Parser(prog="eulerian-ode", description="Eulerian polynomials and the ODE coefficient triangle.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    e = sub.add_parser("eulerian", parents=[common], help="A_n(t)")
    e.add_argument("n", type=int)
    e.add_argument("--table", action="store_true", help="print A_0 .. A_n")

    h = sub.add_parser("higher", parents=[common], help="higher-order A_n^(m)(t)")
    h.add_argument("m", type=int)
    h.add_argument("n", type=int)
    h.add_argument("--table", action="store_true", help="print A_0^(m) .. A_n^(m)")

    t = sub.add_parser("triangle", parents=[common], help="coefficient triangle a_i(N, t)")
    t.add_argument("N_max", type=int)
    t.add_argument("--route", choices=[*ROUTES, "all"], default="recurrence")

    v = sub.add_parser("verify", parents=[common], help="check an identity")
    v.add_argument("identity", choices=["thm2", "thm3", "eq4", "routes"])
    v.add_argument("--n", type=int)
    v.add_argument("--N", type=int)
    v.add_argument("--K", type=int, help=f"series order (default from ${K_ENV}, else 100)")
    v.add_argument("--N-max", dest="N_max", type=int, help="rows for 'routes'")
    v.add_argument("--sweep", type=int, nargs="+", metavar="BOUND",
                   help="n_max N_max (eq4 takes n_max only)")

    b = sub.add_parser("bench", parents=[common], help="time the triangle routes")
    b.add_argument("--N-max", dest="N_max", type=int, required=True)
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--route", action="append", choices=list(ROUTES),
                   help="restrict to these routes (repeatable)")
    b.add_argument("--sizes", type=int, nargs="+", help="row counts to time (default: N_max)")
    return p


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    skip = {"subcommand", "format", "out", "jobs", "fail_fast"}
    params = {k: v for k, v in vars(ns).items() if k not in skip}
    return CliConfig(ns.subcommand, params, ns.format, ns.out, ns.jobs, ns.fail_fast)


# -- subcommands ------------------------------------------------------------


def _render_poly_table(polys, fmt: str, single: bool, label: str) -> str:
    if single:
        p = polys[-1]
        if fmt == "json":
            return render.dumps(render.poly_to_json(p))
        if fmt == "csv":
            return render.poly_csv(p).rstrip("\n")
        if fmt == "latex":
            return render.poly_latex(p)
        return render.poly_plain(p)
    if fmt == "json":
        return render.dumps([render.poly_to_json(p) for p in polys])
    if fmt == "csv":
        return "\n".join(f"{n},{k},{c}" for n, p in enumerate(polys) for k, c in enumerate(p.coeffs))
    if fmt == "latex":
        return render.table_latex(polys, label)
    return render.table_plain(polys, label)


def cmd_eulerian(cfg: CliConfig) -> tuple[int, str]:
    polys = eulerian_table(cfg.params["n"])
    return EXIT_OK, _render_poly_table(polys, cfg.format, not cfg.params["table"], "A")


def cmd_higher(cfg: CliConfig) -> tuple[int, str]:
    m, n = cfg.params["m"], cfg.params["n"]
    polys = [higher_eulerian_poly(m, k) for k in range(n + 1)]
    return EXIT_OK, _render_poly_table(polys, cfg.format, not cfg.params["table"], f"A^{{({m})}}")


def _render_triangle(rows, fmt: str) -> str:
    if fmt == "json":
        return render.dumps(render.triangle_to_json(rows))
    if fmt == "csv":
        return render.triangle_csv(rows).rstrip("\n")
    if fmt == "latex":
        return render.triangle_latex(rows)
    return render.triangle_plain(rows)


def cmd_triangle(cfg: CliConfig) -> tuple[int, str]:
    N_max, route = cfg.params["N_max"], cfg.params["route"]
    if route == "all":
        check = routes_cross_check(N_max)
        if not check.passed:
            print(check.summary(), file=sys.stderr)
            return EXIT_FAIL, ""
        route = "recurrence"
    return EXIT_OK, _render_triangle(ROUTES[route](N_max), cfg.format)


def _route_report(N_max: int) -> VerificationReport:
    check = routes_cross_check(N_max)
    if check.passed:
        return VerificationReport("routes", {"N_max": N_max}, True)
    name, N, i, want, got = check.mismatch
    return VerificationReport("routes", {"N_max": N_max}, False, None, want, got,
                              {"route": name, "N": N, "i": i})


def _require(params: dict, *names: str):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    p = cfg.params
    ident = p["identity"]
    K = p["K"] if p["K"] is not None else cfg.default_K
    bounds = p["sweep"]

    if bounds is not None:
        if ident == "routes":
            raise UsageError("'routes' takes --N-max, not --sweep")
        want = 1 if ident == "eq4" else 2
        if len(bounds) != want:
            raise UsageError(f"--sweep for {ident} takes {want} bound(s)")
        if ident == "eq4":
            summary = SweepSummary((bounds[0], 0, K))
            for n in range(bounds[0] + 1):
                rep = eq4_verify(n, K)
                summary.reports.append(rep)
                if cfg.fail_fast and not rep.passed:
                    summary.stopped_early = True
                    break
        else:
            summary = sweep(bounds[0], bounds[1], K if ident == "thm3" else None,
                            identities=(ident,), fail_fast=cfg.fail_fast, jobs=cfg.jobs)
        reports = summary.reports
        if cfg.format == "json":
            text = render.dumps([r.to_json() for r in reports])
            print(summary.summary(), file=sys.stderr)
        else:
            text = "\n".join(r.summary() for r in reports) + "\n" + summary.summary()
        return (EXIT_OK if summary.passed else EXIT_FAIL), text

    if ident == "thm2":
        _require(p, "n", "N")
        rep = theorem2_verify(p["n"], p["N"])
    elif ident == "thm3":
        _require(p, "n", "N")
        rep = theorem3_verify(p["n"], p["N"], K)
    elif ident == "eq4":
        _require(p, "n")
        rep = eq4_verify(p["n"], K)
    else:
        N_max = p["N_max"] if p["N_max"] is not None else p["N"]
        if N_max is None:
            raise UsageError("routes needs --N-max")
        rep = _route_report(N_max)
    text = render.dumps(rep.to_json()) if cfg.format == "json" else rep.summary()
    return (EXIT_OK if rep.passed else EXIT_FAIL), text


def cmd_bench(cfg: CliConfig) -> tuple[int, str]:
    p = cfg.params
    result = run_bench(p["N_max"], p["reps"], p["route"], p["sizes"])
    if cfg.format == "json":
        text = render.dumps(result)
    else:
        lines = [f"N_max={result['N_max']} reps={result['reps']} sizes={result['sizes']}"]
        for name, r in result["routes"].items():
            lines.append(f"  {name:<11} " + "  ".join(f"{s:.6f}s" for s in r["median_seconds"]))
        lines.append(f"  agree: {result['agree']}")
        lines.append("  bits: " + ", ".join(f"{k}={v}" for k, v in result["bits"].items()))
        text = "\n".join(lines)
    return (EXIT_OK if result["agree"] else EXIT_FAIL), text


COMMANDS = {
    "eulerian": cmd_eulerian,
    "higher": cmd_higher,
    "triangle": cmd_triangle,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        cfg.default_K = default_K()
        cfg.validate()
        code, text = COMMANDS[cfg.subcommand](cfg)
    except (UsageError, ValueError) as exc:
        print(f"eulerian-ode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if text:
        if cfg.out:
            with open(cfg.out, "w") as fh:
                fh.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
