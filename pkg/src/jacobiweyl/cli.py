"""Command-line front end.

Subcommands: simulate, response, weyl, takagi, region, verify.  All
output is deterministic: fixed column order, floats printed with 17
significant digits (round-trip exact for doubles), complex values as
separate re/im columns in CSV and [re, im] pairs in JSON.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import verify as verify_mod
from .core import (
    JacobiCoefficients,
    assemble_finite,
    free_coefficients,
    load_coefficients,
)
from .dynamics import ControlSequence, delta_control, response_vector, simulate
from .errors import DegenerateSpectrum, JacobiWeylError
from .series import compare_methods
from .takagi import spectral_data, takagi_factorize
from .transform import RegionD, in_region_d, lambda_to_z, region_boundary

__all__ = ["main", "emit"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def emit(columns, rows, fmt: str, path) -> None:
    """Write a tabular report.

    ``rows`` holds per-row values aligned with ``columns``; complex
    values are split into <name>_re/<name>_im (CSV) or emitted as
    [re, im] (JSON); None becomes an empty CSV cell / JSON null.
    """
    if fmt == "csv":
        is_complex = [any(isinstance(row[j], complex) for row in rows)
                      for j in range(len(columns))]
        header = []
        for name, cplx in zip(columns, is_complex):
            header += [name + "_re", name + "_im"] if cplx else [name]
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                out = []
                for value, cplx in zip(row, is_complex):
                    if cplx:
                        if value is None:
                            out += ["", ""]
                        else:
                            value = complex(value)
                            out += [_fmt(value.real), _fmt(value.imag)]
                    elif isinstance(value, float):
                        out.append(_fmt(value))
                    elif value is None:
                        out.append("")
                    else:
                        out.append(str(value))
                writer.writerow(out)
    elif fmt == "json":
        payload_rows = []
        for row in rows:
            out = []
            for value in row:
                if isinstance(value, complex):
                    out.append([value.real, value.imag])
                else:
                    out.append(value)
            payload_rows.append(out)
        with open(path, "w") as fh:
            json.dump({"columns": list(columns), "rows": payload_rows}, fh, indent=1)
            fh.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _coeffs_from_args(args) -> JacobiCoefficients:
    if args.config:
        return load_coefficients(args.config)
    if args.free is not None:
        return free_coefficients(args.free, tail="free")
    raise SystemExit("pass --config FILE or --free LENGTH")


def _lambda_grid(args):
    lams = []
    for point in args.lam or []:
        re, _, im = point.partition(",")
        lams.append(complex(float(re), float(im or 0.0)))
    if args.grid:
        re0, re1, im0, im1, n_re, n_im = args.grid
        for x in np.linspace(re0, re1, int(n_re)):
            for y in np.linspace(im0, im1, int(n_im)):
                lams.append(complex(x, y))
    if not lams:
        raise SystemExit("no lambda points: pass --lambda or --grid")
    return lams


def _out_path(args, default_name):
    out = args.output
    if out is None:
        out = os.path.join(os.environ.get("JACOBIWEYL_OUTDIR", "."), default_name)
    return out


def _add_common(sub):
    sub.add_argument("--config", help="coefficient config JSON")
    sub.add_argument("--free", type=int, metavar="L",
                     help="use the free operator (a_n=1, b_n=0) with L stored entries")
    sub.add_argument("--output", help="output file path")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")


def cmd_simulate(args) -> int:
    coeffs = _coeffs_from_args(args)
    if args.horizon < 1:
        print("error: horizon must be >= 1", file=sys.stderr)
        return 2
    if args.control == "delta":
        f = delta_control(args.horizon)
    else:
        with open(args.control) as fh:
            f = ControlSequence([complex(re, im) for re, im in json.load(fh)])
    wf = simulate(coeffs, f, geometry=args.geometry, n=args.n)
    columns = ["t"] + [f"n{n}" for n in range(wf.n_max + 1)]
    rows = []
    for t in range(-1, wf.horizon + 1):
        rows.append([t] + [wf.at(n, t) for n in range(wf.n_max + 1)])
    path = _out_path(args, f"wavefield.{args.format}")
    emit(columns, rows, args.format, path)
    print(f"wrote {path}")
    return 0


def cmd_response(args) -> int:
    coeffs = _coeffs_from_args(args)
    geoms = ["halfline", "interval"] if args.geometry == "both" else [args.geometry]
    results = {}
    for g in geoms:
        results[g] = response_vector(coeffs, args.horizon, geometry=g,
                                     n=args.n if g == "interval" else None)
    columns = ["t"] + [f"r_{g}" for g in geoms]
    rows = [[t] + [complex(results[g].r[t]) for g in geoms]
            for t in range(args.horizon)]
    path = _out_path(args, f"response.{args.format}")
    emit(columns, rows, args.format, path)
    print(f"wrote {path}")
    if args.check_finite_speed:
        if len(geoms) < 2:
            print("finite-speed check needs --geometry both", file=sys.stderr)
            return 2
        if args.n is None:
            print("finite-speed check needs --n", file=sys.stderr)
            return 2
        diff = np.abs(results["halfline"].r - results["interval"].r)
        limit = 2 * args.n - 2  # guaranteed agreement window
        measured = int(np.argmax(diff > 1e-13)) - 1 if np.any(diff > 1e-13) \
            else args.horizon - 1
        ok = bool(np.all(diff[:limit + 1] <= 1e-13))
        if ok:
            print(f"agree through t={limit}"
                  f" (measured agreement through t={measured})")
        else:
            print(f"finite-speed violation inside t<={limit}:"
                  f" first difference at t={measured + 1}")
            return 1
    return 0


def cmd_weyl(args) -> int:
    coeffs = _coeffs_from_args(args)
    lams = _lambda_grid(args)
    rows_raw = compare_methods(coeffs, lams, n=args.n, horizon=args.horizon)
    method_cols = {
        "resolvent": ["m_resolvent", "m_resolvent_semiinf"],
        "series": ["m_series_interval", "m_series_halfline"],
        "measure": ["m_measure"],
    }
    cols = (method_cols[args.method] if args.method != "all"
            else sum(method_cols.values(), []))
    columns = ["lambda", "z", "qR", "in_region_d"] + cols + ["flags"]
    rows = []
    for rec in rows_raw:
        flags = ";".join(v for k, v in sorted(rec.items())
                         if k.endswith("_error") and k[:-6] in cols)
        rows.append([rec["lambda"], rec["z"], rec["qR"], rec["in_region_d"]]
                    + [rec.get(c) for c in cols] + [flags])
    path = _out_path(args, f"weyl.{args.format}")
    emit(columns, rows, args.format, path)
    print(f"wrote {path}")
    return 0


def cmd_takagi(args) -> int:
    coeffs = _coeffs_from_args(args)
    try:
        fact = takagi_factorize(assemble_finite(coeffs, args.n))
    except DegenerateSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    data = spectral_data(fact, a0=coeffs.a0)
    print(f"residual_unitary  = {fact.residual_unitary:.3e}")
    print(f"residual_diag     = {fact.residual_diag:.3e}")
    print(f"residual_coneigen = {fact.residual_coneigen:.3e}")
    columns = ["k", "omega", "weight", "d", "d_eff", "rho"]
    rows = [[k + 1, complex(data.omega[k]), float(data.weights[k]),
             float(fact.d[k]), complex(data.d_eff[k]), float(data.rho[k])]
            for k in range(data.n)]
    path = _out_path(args, f"measure.{args.format}")
    emit(columns, rows, args.format, path)
    print(f"wrote {path}")
    return 0


def cmd_region(args) -> int:
    region = RegionD(args.bound_b)
    phis = np.linspace(np.pi, 2.0 * np.pi, args.phi_count + 2)[1:-1]
    boundary = region_boundary(region, phis)
    columns = ["phi", "lambda_re", "lambda_im", "abs_z"]
    rows = [[float(phi), float(lam.real), float(lam.imag),
             float(abs(lambda_to_z(lam)))]
            for phi, lam in zip(phis, boundary)]
    path = _out_path(args, f"region.{args.format}")
    emit(columns, rows, args.format, path)
    print(f"wrote {path}")
    if args.grid:
        re0, re1, im0, im1, n_re, n_im = args.grid
        columns = ["lambda", "abs_z", "in_region_d"]
        rows = []
        for x in np.linspace(re0, re1, int(n_re)):
            for y in np.linspace(im0, im1, int(n_im)):
                lam = complex(x, y)
                rows.append([lam, float(abs(lambda_to_z(lam))),
                             in_region_d(lam, region)])
        path2 = _out_path(args, f"region_map.{args.format}") \
            if args.output is None else args.output + ".map"
        emit(columns, rows, args.format, path2)
        print(f"wrote {path2}")
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_all(seed=args.seed)
    print(f"# acceptance run, seed={args.seed}")
    hard_fail = False
    for res in results:
        print(f"criterion {res.number:2d} [{res.status:>15s}] {res.name}: {res.detail}")
        if res.hard and not res.passed:
            hard_fail = True
    print("RESULT:", "FAIL" if hard_fail else "PASS")
    return 1 if hard_fail else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobiweyl",
        description="Weyl m-functions of complex Jacobi matrices by "
                    "resolvent, response-series and Takagi-measure routes.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("simulate", help="run the boundary-control simulation")
    _add_common(p)
    p.add_argument("--geometry", choices=("halfline", "interval"), default="halfline")
    p.add_argument("--n", type=int, help="interval block size")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--control", default="delta",
                   help='"delta" or a JSON file of [re,im] pairs')
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("response", help="compute response vectors")
    _add_common(p)
    p.add_argument("--geometry", choices=("halfline", "interval", "both"),
                   default="both")
    p.add_argument("--n", type=int, help="interval block size")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--check-finite-speed", action="store_true")
    p.set_defaults(func=cmd_response)

    p = subs.add_parser("weyl", help="evaluate m(lambda) over a grid")
    _add_common(p)
    p.add_argument("--method", choices=("resolvent", "series", "measure", "all"),
                   default="all")
    p.add_argument("--n", type=int, required=True, help="finite block size")
    p.add_argument("--horizon", type=int, default=260)
    p.add_argument("--lambda", dest="lam", action="append", metavar="RE,IM")
    p.add_argument("--grid", type=float, nargs=6,
                   metavar=("RE0", "RE1", "IM0", "IM1", "NRE", "NIM"))
    p.set_defaults(func=cmd_weyl)

    p = subs.add_parser("takagi", help="factorization residuals and measure export")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_takagi)

    p = subs.add_parser("region", help="region-D boundary and membership map")
    p.add_argument("--bound-b", type=float, required=True)
    p.add_argument("--phi-count", type=int, default=100)
    p.add_argument("--grid", type=float, nargs=6,
                   metavar=("RE0", "RE1", "IM0", "IM1", "NRE", "NIM"))
    p.add_argument("--output", help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_region)

    p = subs.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (JacobiWeylError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
