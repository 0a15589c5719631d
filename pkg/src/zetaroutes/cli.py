"""Command-line front end: every route, cross-check and table.

Output is a list of records rendered as plain text (default), JSON, CSV or
Markdown. Exact values stay exact unless --as-float is passed. Exit status:
0 success and all checks passing, 1 a verification failed, 2 usage error
(including the pole at argument 1).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import abel
from .exact import PiValue, format_rational, parse_rational
from .bernoulli import bernoulli_via_recurrence, bernoulli_via_series
from .numeric import (
    ContourSpec,
    NearPole,
    NumericConfig,
    TooCloseToPositiveIntegerPole,
    cotangent_check,
    cotangent_tail_bound,
    default_contour,
    funceq_residual,
    inverted_contour_bound,
    inverted_contour_check,
    zeta_em,
    zeta_hankel,
)
from .zeta_exact import (
    PoleArgument,
    Route,
    funceq_exact_check,
    routes_for_argument,
    simple_funceq_check,
    zeta_classical,
)

CONFIG_ENV_VAR = "ZETAROUTES_CONFIG"

KINDS = ("exact_rational", "exact_pi_monomial", "numeric_complex", "boolean_check", "residual")


@dataclass(frozen=True)
class OutputRecord:
    kind: str
    payload: object
    route: str
    argument: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        if self.kind.startswith("exact") and isinstance(self.payload, float):
            raise ValueError("exact records never carry floating payloads")
        if self.kind in ("numeric_complex", "residual") and isinstance(
            self.payload, (Fraction, PiValue)
        ):
            raise ValueError("numeric records never carry exact payloads")


def rational_record(value: Fraction, route: str, argument) -> OutputRecord:
    return OutputRecord("exact_rational", value, route, str(argument))


def pi_record(value: PiValue, route: str, argument) -> OutputRecord:
    return OutputRecord("exact_pi_monomial", value, route, str(argument))


def complex_record(value: complex, route: str, argument) -> OutputRecord:
    return OutputRecord("numeric_complex", complex(value), route, str(argument))


def bool_record(value: bool, route: str, argument) -> OutputRecord:
    return OutputRecord("boolean_check", bool(value), route, str(argument))


def residual_record(value: float, route: str, argument) -> OutputRecord:
    return OutputRecord("residual", float(value), route, str(argument))


# -- rendering ---------------------------------------------------------------


def _payload_json(record: OutputRecord):
    p = record.payload
    if record.kind == "exact_rational":
        return format_rational(p)
    if record.kind == "exact_pi_monomial":
        return p.to_json()
    if record.kind == "numeric_complex":
        return {"re": p.real, "im": p.imag}
    return p


def _payload_text(record: OutputRecord) -> str:
    p = record.payload
    if record.kind == "exact_rational":
        return format_rational(p)
    if record.kind == "exact_pi_monomial":
        return str(p)
    if record.kind == "numeric_complex":
        if p.imag == 0.0:
            return repr(p.real)
        sign = "+" if p.imag >= 0 else "-"
        return f"({p.real!r}{sign}{abs(p.imag)!r}j)"
    if record.kind == "boolean_check":
        return "pass" if p else "fail"
    return repr(p)


def records_to_dicts(records) -> list[dict]:
    return [
        {
            "kind": r.kind,
            "payload": _payload_json(r),
            "route": r.route,
            "argument": r.argument,
        }
        for r in records
    ]


def records_from_dicts(dicts) -> list[OutputRecord]:
    out = []
    for d in dicts:
        kind, payload = d["kind"], d["payload"]
        if kind == "exact_rational":
            payload = parse_rational(payload)
        elif kind == "exact_pi_monomial":
            payload = PiValue.from_json(payload)
        elif kind == "numeric_complex":
            payload = complex(payload["re"], payload["im"])
        out.append(OutputRecord(kind, payload, d["route"], d["argument"]))
    return out


def render(records, fmt: str = "plain") -> str:
    """Render records; JSON/CSV/Markdown are byte-stable for fixed inputs."""
    records = list(records)
    if fmt == "json":
        return json.dumps(records_to_dicts(records), indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "argument", "route", "payload"])
        for r in records:
            writer.writerow(
                [r.kind, r.argument, r.route, json.dumps(_payload_json(r))]
            )
        return buf.getvalue().rstrip("\n")
    if fmt == "md":
        lines = [
            "| kind | argument | route | payload |",
            "| --- | --- | --- | --- |",
        ]
        for r in records:
            lines.append(
                f"| {r.kind} | {r.argument} | {r.route} | {_payload_text(r)} |"
            )
        return "\n".join(lines)
    if fmt == "plain":
        return "\n".join(_payload_text(r) for r in records)
    raise ValueError(f"unknown format {fmt!r}")


def _floated(records) -> list[OutputRecord]:
    """Exact records become numeric ones (--as-float)."""
    out = []
    for r in records:
        if r.kind == "exact_rational":
            out.append(complex_record(complex(float(r.payload)), r.route, r.argument))
        elif r.kind == "exact_pi_monomial":
            out.append(complex_record(complex(r.payload.to_float()), r.route, r.argument))
        else:
            out.append(r)
    return out


# -- numeric configuration -----------------------------------------------------

_CONFIG_KEYS = {
    "em_terms_N": int,
    "em_terms_J": int,
    "target_tol": float,
    "radius": float,
    "x_max": float,
    "panels_ray": int,
    "panels_arc": int,
    "nodes_per_panel": int,
}


def _read_config_file(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _CONFIG_KEYS[key](val.strip())
    return values


def _numeric_options(args) -> tuple[NumericConfig, dict]:
    """Defaults, overridden by the config file, overridden by flags."""
    values: dict = {}
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if path:
        values.update(_read_config_file(path))
    flag_map = {
        "em_terms_N": "em_n",
        "em_terms_J": "em_j",
        "target_tol": "tol",
        "radius": "radius",
        "x_max": "x_max",
        "panels_ray": "panels_ray",
        "panels_arc": "panels_arc",
        "nodes_per_panel": "nodes_per_panel",
    }
    for key, attr in flag_map.items():
        flag = getattr(args, attr, None)
        if flag is not None:
            values[key] = flag
    cfg = NumericConfig(
        em_terms_N=values.get("em_terms_N", NumericConfig.em_terms_N),
        em_terms_J=values.get("em_terms_J", NumericConfig.em_terms_J),
        target_tol=values.get("target_tol", NumericConfig.target_tol),
    )
    contour_overrides = {
        k: values[k]
        for k in ("radius", "x_max", "panels_ray", "panels_arc", "nodes_per_panel")
        if k in values
    }
    return cfg, contour_overrides


def _contour_for(s: complex, overrides: dict) -> ContourSpec:
    return replace(default_contour(s), **overrides) if overrides else default_contour(s)


# -- subcommand handlers -------------------------------------------------------


def _emit(args, records) -> None:
    if getattr(args, "as_float", False):
        records = _floated(records)
    print(render(records, args.format))


def _cmd_bernoulli(args) -> int:
    if args.max < 0:
        print("error: --max must be nonnegative", file=sys.stderr)
        return 2
    methods = {
        "series": (("series", bernoulli_via_series),),
        "recurrence": (("recurrence", bernoulli_via_recurrence),),
        "both": (
            ("series", bernoulli_via_series),
            ("recurrence", bernoulli_via_recurrence),
        ),
    }[args.method]
    records = []
    for name, fn in methods:
        table = fn(args.max)
        records.extend(
            rational_record(table[n], name, f"B_{n}") for n in range(args.max + 1)
        )
    _emit(args, records)
    return 0


def _cmd_zeta_exact(args) -> int:
    k = args.argument
    if k == 1:
        print("error: zeta(1) is a pole; no value exists", file=sys.stderr)
        return 2
    if k > 1 and k % 2:
        print(
            f"error: argument {k}: positive classical points are the even integers",
            file=sys.stderr,
        )
        return 2
    if args.route == "all":
        routes = routes_for_argument(k)
    else:
        routes = (Route(args.route),)
        if routes[0] not in routes_for_argument(k):
            print(
                f"error: route {args.route!r} does not apply at argument {k}",
                file=sys.stderr,
            )
            return 2
    records = []
    for route in routes:
        cv = zeta_classical(k, route)
        if cv.value.pi_exp == 0:
            records.append(rational_record(cv.value.coeff, route.value, k))
        else:
            records.append(pi_record(cv.value, route.value, k))
    _emit(args, records)
    return 0


def _cmd_zeta_numeric(args) -> int:
    s = complex(args.re, args.im)
    cfg, overrides = _numeric_options(args)
    if abs(s - 1) < 1e-6:
        print("error: zeta(1) is a pole; no value exists", file=sys.stderr)
        return 2
    methods = []
    if args.method in ("hankel", "both"):
        methods.append("hankel")
    if args.method in ("em", "both"):
        methods.append("em")
    records = []
    for method in methods:
        if method == "hankel":
            try:
                value = zeta_hankel(s, _contour_for(s, overrides), tol=cfg.target_tol * 10)
            except TooCloseToPositiveIntegerPole as exc:
                if args.method == "both":
                    continue  # fall back to the em record
                print(f"error: {exc}", file=sys.stderr)
                return 2
        else:
            try:
                value = zeta_em(s, cfg)
            except NearPole as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        records.append(complex_record(value, method, _format_complex_arg(s)))
    _emit(args, records)
    return 0


def _cmd_abel(args) -> int:
    if args.m < 0:
        print("error: M must be nonnegative", file=sys.stderr)
        return 2
    exact = abel.abel_sum_exact(args.m)
    records = [rational_record(exact, "abel", args.m)]
    status = 0
    if args.numeric_oracle:
        est = abel.abel_numeric_estimate(args.m)
        diff = abs(est - float(exact))
        records.append(residual_record(diff, "abel-numeric", args.m))
        records.append(bool_record(diff <= 1e-6, "abel-numeric", args.m))
        if diff > 1e-6:
            status = 1
    _emit(args, records)
    return status


def _parse_grid(spec: str):
    parts = spec.split(":")
    if len(parts) != 5:
        raise ValueError("grid must be RE0:RE1:IM0:IM1:STEPS")
    re0, re1, im0, im1 = map(float, parts[:4])
    steps = int(parts[4])
    if steps < 1:
        raise ValueError("grid STEPS must be positive")
    points = []
    for i in range(steps):
        fr = i / (steps - 1) if steps > 1 else 0.0
        for j in range(steps):
            fi = j / (steps - 1) if steps > 1 else 0.0
            points.append(complex(re0 + fr * (re1 - re0), im0 + fi * (im1 - im0)))
    return points


def _format_complex_arg(s: complex) -> str:
    if s.imag == 0:
        return repr(s.real)
    return f"{s.real!r},{s.imag!r}"


def _cmd_verify_funceq(args) -> int:
    cfg, _ = _numeric_options(args)
    records = []
    ok = True
    for n in range(1, args.exact_max + 1):
        passed = funceq_exact_check(2 * n)
        ok &= passed
        records.append(bool_record(passed, "funceq-exact", 2 * n))
    for m in range(args.exact_max):
        passed = simple_funceq_check(m)
        ok &= passed
        records.append(bool_record(passed, "funceq-simple", m))
    if args.grid:
        try:
            points = _parse_grid(args.grid)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        for s in points:
            res = funceq_residual(s, cfg)
            ok &= res <= args.grid_tol
            records.append(residual_record(res, "funceq-residual", _format_complex_arg(s)))
    _emit(args, records)
    return 0 if ok else 1


def _cmd_verify_cotangent(args) -> int:
    try:
        x = parse_rational(args.x)
    except (ValueError, ZeroDivisionError):
        print(f"error: --x must be a rational like 1/4, got {args.x!r}", file=sys.stderr)
        return 2
    if not 0 < x < 1:
        print("error: --x must lie strictly between 0 and 1", file=sys.stderr)
        return 2
    diff = cotangent_check(x, args.terms)
    bound = cotangent_tail_bound(x, args.terms)
    passed = diff <= bound
    records = [
        residual_record(diff, "cotangent", format_rational(x)),
        bool_record(passed, "cotangent", format_rational(x)),
    ]
    _emit(args, records)
    return 0 if passed else 1


def _cmd_verify_contour_inversion(args) -> int:
    try:
        parts = args.s.split(",")
        s = complex(float(parts[0]), float(parts[1]) if len(parts) > 1 else 0.0)
    except (ValueError, IndexError):
        print(f"error: --s must be RE or RE,IM, got {args.s!r}", file=sys.stderr)
        return 2
    if s.real > -0.5:
        print("error: contour inversion requires Re(s) <= -0.5", file=sys.stderr)
        return 2
    cfg, _ = _numeric_options(args)
    diff = inverted_contour_check(s, args.poles, cfg)
    bound = inverted_contour_bound(s, args.poles)
    passed = diff <= bound
    records = [
        residual_record(diff, "contour-inversion", _format_complex_arg(s)),
        bool_record(passed, "contour-inversion", _format_complex_arg(s)),
    ]
    _emit(args, records)
    return 0 if passed else 1


def _cmd_table_classical(args) -> int:
    if args.max < 0:
        print("error: --max must be nonnegative", file=sys.stderr)
        return 2
    records = []
    for k in range(-args.max, 1):
        cv = zeta_classical(k, Route.CLOSED_FORM)
        records.append(rational_record(cv.value.coeff, Route.CLOSED_FORM.value, k))
    for k in range(2, args.max + 1, 2):
        cv = zeta_classical(k, Route.CLOSED_FORM)
        records.append(pi_record(cv.value, Route.CLOSED_FORM.value, k))
    _emit(args, records)
    return 0


# -- parser --------------------------------------------------------------------


def _add_format_options(p, default="plain") -> None:
    p.add_argument(
        "--format",
        choices=("plain", "json", "csv", "md"),
        default=default,
        help="output rendering (default %(default)s)",
    )
    p.add_argument(
        "--as-float",
        action="store_true",
        help="render exact values as floats (exactness is the product; off by default)",
    )


def _add_numeric_options(p) -> None:
    p.add_argument("--config", help=f"key=value config file (or ${CONFIG_ENV_VAR})")
    p.add_argument("--em-n", type=int, help="Dirichlet partial-sum cutoff")
    p.add_argument("--em-j", type=int, help="number of Bernoulli correction terms")
    p.add_argument("--tol", type=float, help="target tolerance")
    p.add_argument("--radius", type=float, help="contour radius (0, 2pi)")
    p.add_argument("--x-max", type=float, help="contour ray truncation")
    p.add_argument("--panels-ray", type=int, help="quadrature panels per ray")
    p.add_argument("--panels-arc", type=int, help="quadrature panels on the arc")
    p.add_argument("--nodes-per-panel", type=int, help="Gauss-Legendre nodes per panel")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaroutes",
        description="Classical zeta values by independent exact routes, "
        "numeric continuation by Hankel-contour quadrature, and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="Bernoulli number table")
    p.add_argument("--max", type=int, required=True, help="largest index")
    p.add_argument(
        "--method", choices=("series", "recurrence", "both"), default="series"
    )
    _add_format_options(p)
    p.set_defaults(func=_cmd_bernoulli)

    zeta = sub.add_parser("zeta", help="zeta values, exact or numeric")
    zsub = zeta.add_subparsers(dest="zeta_command", required=True)

    p = zsub.add_parser("exact", help="exact classical value (K <= 0 or even K >= 2)")
    p.add_argument("argument", type=int, metavar="K")
    p.add_argument(
        "--route",
        choices=("closed", "residue", "genfun", "abel", "all"),
        default="closed",
    )
    _add_format_options(p)
    p.set_defaults(func=_cmd_zeta_exact)

    p = zsub.add_parser("numeric", help="numeric zeta at complex s")
    p.add_argument("re", type=float, metavar="RE")
    p.add_argument("im", type=float, nargs="?", default=0.0, metavar="IM")
    p.add_argument("--method", choices=("hankel", "em", "both"), default="both")
    _add_format_options(p)
    _add_numeric_options(p)
    p.set_defaults(func=_cmd_zeta_numeric)

    p = sub.add_parser("abel", help="Abel sum of 1^M - 2^M + 3^M - ...")
    p.add_argument("m", type=int, metavar="M")
    p.add_argument(
        "--numeric-oracle",
        action="store_true",
        help="also run the Richardson-extrapolated numeric limit (M <= 8)",
    )
    _add_format_options(p)
    p.set_defaults(func=_cmd_abel)

    verify = sub.add_parser("verify", help="identity checks")
    vsub = verify.add_subparsers(dest="verify_command", required=True)

    p = vsub.add_parser("funceq", help="functional equation, exact and numeric")
    p.add_argument("--exact-max", type=int, default=15)
    p.add_argument("--grid", help="numeric residual grid RE0:RE1:IM0:IM1:STEPS")
    p.add_argument("--grid-tol", type=float, default=1e-9,
                   help="residual tolerance on the grid (default %(default)s)")
    _add_format_options(p)
    _add_numeric_options(p)
    p.set_defaults(func=_cmd_verify_funceq)

    p = vsub.add_parser("cotangent", help="partial-fraction cotangent identity")
    p.add_argument("--x", required=True, help="rational in (0,1), e.g. 1/4")
    p.add_argument("--terms", type=int, required=True)
    _add_format_options(p)
    p.set_defaults(func=_cmd_verify_cotangent)

    p = vsub.add_parser("contour-inversion", help="inside-out residue sum check")
    p.add_argument("--s", required=True, help="RE or RE,IM with RE <= -0.5")
    p.add_argument("--poles", type=int, required=True)
    _add_format_options(p)
    _add_numeric_options(p)
    p.set_defaults(func=_cmd_verify_contour_inversion)

    table = sub.add_parser("table", help="value tables")
    tsub = table.add_subparsers(dest="table_command", required=True)
    p = tsub.add_parser("classical", help="all classical values up to |K| <= M")
    p.add_argument("--max", type=int, required=True)
    _add_format_options(p, default="json")
    p.set_defaults(func=_cmd_table_classical)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (NearPole, PoleArgument, TooCloseToPositiveIntegerPole) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
