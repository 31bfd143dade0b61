"""Command-line front end; every verification is a reproducible command.

Subcommands
    bound <family>            certified maximization report
    gamma <family> --c1 ...   closed-form vs series-oracle gamma_3
    verify-carlson            coefficient-bound fuzzing over random products
    search <family>           randomized lower-bound search + gap record
    milin                     Milin functional of a reference function

Output is UTF-8 text (default), a single JSON object, or CSV (grid dumps
from ``bound`` only).  Numbers print with 12 significant digits so
comparison against published decimals is direct.  All randomness flows
from ``--seed``; identical configuration gives byte-identical output.

Exit status: 0 on success, 1 on usage errors, 2 when a verification or
invariant fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import families as fam
from . import optimize, search, schwarz
from .objective import value_xy
from .series import TruncatedSeries
from .config import DEFAULT_ORDER


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str):
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: fam.Family | None = None
    grid_step: float = 0.05
    newton_tol: float = 1e-12
    iterations: int = 100_000
    seed: int = 1
    max_degree: int = 4
    real_only: bool = False
    fmt: str = "text"
    c1: complex = 0j
    c2: complex = 0j
    c3: complex = 0j
    samples: int = 100_000
    function: str = "koebe"
    n: int = 3


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _json_complex(z: complex) -> dict:
    return {"re": _round12(z.real), "im": _round12(z.imag)}


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _bound_json(report: optimize.BoundReport) -> dict:
    return {
        "family": report.family.tag,
        "interior_points": [
            {"x": _round12(p.x), "y": _round12(p.y), "value": _round12(v)}
            for p, v in report.interior_points
        ],
        "edge_maxima": [
            {"edge": e, "argmax": _round12(t), "value": _round12(v)}
            for e, t, v in report.edge_maxima
        ],
        "global_max": _round12(report.global_max),
        "gamma3_bound": _round12(report.gamma3_bound),
        "grid_max": _round12(report.grid_max),
        "notes": list(report.notes),
    }


def _cmd_bound(cfg: RunConfig) -> int:
    report = optimize.global_bound(cfg.family, cfg.grid_step, cfg.newton_tol)
    if cfg.fmt == "json":
        _emit_json(_bound_json(report))
    elif cfg.fmt == "csv":
        print("x,y,value")
        step = cfg.grid_step
        nx = int(round(1.0 / step))
        for i in range(nx + 1):
            x = min(i * step, 1.0)
            ymax = 1.0 - x * x
            ys = [j * step for j in range(int(ymax / step) + 1) if j * step < ymax - 1e-12]
            ys.append(ymax)
            for y in ys:
                print(f"{_fmt(x)},{_fmt(y)},{_fmt(value_xy(cfg.family, x, y))}")
    else:
        print(f"family {report.family.tag}")
        for p, v in report.interior_points:
            print(f"  interior critical point ({_fmt(p.x)}, {_fmt(p.y)})  value {_fmt(v)}")
        for e, t, v in report.edge_maxima:
            print(f"  edge {e:<6} argmax {_fmt(t)}  value {_fmt(v)}")
        print(f"  global max   {_fmt(report.global_max)}")
        print(f"  grid check   {_fmt(report.grid_max)}")
        print(f"  gamma3 bound {_fmt(report.gamma3_bound)}")
        for note in report.notes:
            print(f"  note: {note}")
    return 0


def _cmd_gamma(cfg: RunConfig) -> int:
    triple = schwarz.SchwarzTriple(cfg.c1, cfg.c2, cfg.c3)
    closed = fam.gamma3_closed_form(cfg.family, triple)
    w = TruncatedSeries.from_polynomial((0.0, cfg.c1, cfg.c2, cfg.c3), DEFAULT_ORDER)
    f = fam.member_series(cfg.family, w, DEFAULT_ORDER)
    oracle = fam.gamma_sequence(f, 3)[2]
    delta = abs(closed - oracle)
    ok = delta <= 1e-9
    if cfg.fmt == "json":
        _emit_json(
            {
                "family": cfg.family.tag,
                "c1": _json_complex(cfg.c1),
                "c2": _json_complex(cfg.c2),
                "c3": _json_complex(cfg.c3),
                "closed_form": _json_complex(closed),
                "series_oracle": _json_complex(oracle),
                "delta": _round12(delta),
                "status": "pass" if ok else "fail",
            }
        )
    else:
        print(f"family {cfg.family.tag}")
        print(f"  closed_form   {_fmt(closed.real)} {closed.imag:+.12g}i")
        print(f"  series_oracle {_fmt(oracle.real)} {oracle.imag:+.12g}i")
        print(f"  delta         {_fmt(delta)}")
        print(f"  {'pass' if ok else 'fail'}")
    return 0 if ok else 2


def _cmd_verify_carlson(cfg: RunConfig) -> int:
    worst = [float("inf")] * 3
    for i in range(cfg.samples):
        degree = 1 + i % 6
        b = schwarz.sample_schwarz(cfg.seed + i, degree, cfg.real_only)
        slacks = schwarz.carlson_check(schwarz.triple_of_blaschke(b))
        for k in range(3):
            worst[k] = min(worst[k], slacks[k])
    ok = all(s >= -1e-9 for s in worst)
    if cfg.fmt == "json":
        _emit_json(
            {
                "samples": cfg.samples,
                "seed": cfg.seed,
                "degrees": [1, 2, 3, 4, 5, 6],
                "worst_slacks": [_round12(s) for s in worst],
                "status": "pass" if ok else "fail",
            }
        )
    else:
        print(f"{'pass' if ok else 'fail'}  worst slacks "
              f"({_fmt(worst[0])}, {_fmt(worst[1])}, {_fmt(worst[2])})")
    return 0 if ok else 2


def _cmd_search(cfg: RunConfig) -> int:
    result = search.search_lower_bound(
        cfg.family, cfg.iterations, cfg.seed, cfg.real_only, cfg.max_degree
    )
    gap = search.gap_report(cfg.family, result)
    if cfg.fmt == "json":
        _emit_json(
            {
                "family": result.family.tag,
                "best_value": _round12(result.best_value),
                "witness": {
                    "degree": result.witness.degree,
                    "zeros": [_json_complex(z) for z in result.witness.zeros],
                    "rotation": _json_complex(result.witness.rotation),
                },
                "iterations": result.iterations,
                "real_only": result.real_only,
                "upper_bound": _round12(result.upper_bound),
                "remark_value": (
                    None if result.remark_value is None else _round12(result.remark_value)
                ),
                "gap": _round12(gap.gap),
                "relative_gap": _round12(gap.relative_gap),
            }
        )
    else:
        print(f"family {result.family.tag}  (real_only={str(result.real_only).lower()})")
        print(f"  best |gamma3|  {_fmt(result.best_value)}")
        print(f"  upper bound    {_fmt(result.upper_bound)}")
        if result.remark_value is not None:
            print(f"  sharp real-a2  {_fmt(result.remark_value)}")
        print(f"  gap            {_fmt(gap.gap)}  (relative {_fmt(gap.relative_gap)})")
        zeros = ", ".join(f"{_fmt(z.real)}{z.imag:+.6g}i" for z in result.witness.zeros)
        print(f"  witness degree {result.witness.degree}  zeros [{zeros}]")
    return 0


def _cmd_milin(cfg: RunConfig) -> int:
    f = fam.koebe_series(DEFAULT_ORDER) if cfg.function == "koebe" else fam.identity_series(DEFAULT_ORDER)
    value = fam.milin_functional(f, cfg.n)
    if cfg.fmt == "json":
        _emit_json({"function": cfg.function, "n": cfg.n, "value": _round12(value)})
    else:
        print(f"milin functional of {cfg.function} at n={cfg.n}: {_fmt(value)}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="gamma3lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, family=True):
        if family:
            p.add_argument("family", choices=["f1", "f2", "f3"])
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p_bound = sub.add_parser("bound", help="certified maximization report")
    add_common(p_bound)
    p_bound.add_argument("--grid-step", type=float, default=0.05)
    p_bound.add_argument("--newton-tol", type=float, default=1e-12)

    p_gamma = sub.add_parser("gamma", help="closed form vs series oracle")
    add_common(p_gamma)
    p_gamma.add_argument("--c1", type=complex, default=0j)
    p_gamma.add_argument("--c2", type=complex, default=0j)
    p_gamma.add_argument("--c3", type=complex, default=0j)

    p_carlson = sub.add_parser("verify-carlson", help="coefficient-bound fuzzing")
    add_common(p_carlson, family=False)
    p_carlson.add_argument("--samples", type=int, default=100_000)
    p_carlson.add_argument("--seed", type=int, default=1)
    p_carlson.add_argument("--real-only", action="store_true")

    p_search = sub.add_parser("search", help="extremal lower-bound search")
    add_common(p_search)
    p_search.add_argument("--iterations", type=int, default=100_000)
    p_search.add_argument("--seed", type=int, default=1)
    p_search.add_argument("--max-degree", type=int, default=4)
    p_search.add_argument("--real-only", action="store_true")

    p_milin = sub.add_parser("milin", help="Milin functional of a reference function")
    p_milin.add_argument("--function", choices=["koebe", "identity"], default="koebe")
    p_milin.add_argument("--n", type=int, default=3)
    p_milin.add_argument("--format", choices=["text", "json", "csv"], default="text")

    return parser


def _validate(cfg: RunConfig) -> None:
    if cfg.fmt == "csv" and cfg.command != "bound":
        raise _UsageError("csv output is only available for 'bound'")
    if not 0.0 < cfg.grid_step <= 0.1:
        raise _UsageError("--grid-step must lie in (0, 0.1]")
    if cfg.newton_tol < 1e-15:
        raise _UsageError("--newton-tol below 1e-15 is not resolvable")
    if cfg.iterations < 1:
        raise _UsageError("--iterations must be >= 1")
    if cfg.max_degree < 1:
        raise _UsageError("--max-degree must be >= 1")
    if cfg.samples < 1:
        raise _UsageError("--samples must be >= 1")
    if not 1 <= cfg.n <= DEFAULT_ORDER - 1:
        raise _UsageError(f"--n must lie in 1..{DEFAULT_ORDER - 1}")


def run(cfg: RunConfig) -> int:
    _validate(cfg)
    handlers = {
        "bound": _cmd_bound,
        "gamma": _cmd_gamma,
        "verify-carlson": _cmd_verify_carlson,
        "search": _cmd_search,
        "milin": _cmd_milin,
    }
    return handlers[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = RunConfig(
            command=ns.command,
            family=fam.family_by_tag(ns.family) if hasattr(ns, "family") else None,
            grid_step=getattr(ns, "grid_step", 0.05),
            newton_tol=getattr(ns, "newton_tol", 1e-12),
            iterations=getattr(ns, "iterations", 100_000),
            seed=getattr(ns, "seed", 1),
            max_degree=getattr(ns, "max_degree", 4),
            real_only=getattr(ns, "real_only", False),
            fmt=ns.format,
            c1=getattr(ns, "c1", 0j),
            c2=getattr(ns, "c2", 0j),
            c3=getattr(ns, "c3", 0j),
            samples=getattr(ns, "samples", 100_000),
            function=getattr(ns, "function", "koebe"),
            n=getattr(ns, "n", 3),
        )
        return run(cfg)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 1
    except (optimize.CertificationMismatch, ValueError) as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
