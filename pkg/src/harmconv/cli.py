"""Command line driver: ``harmconv {shear,convolve,certify,zeros,render,examples}``.

Exit status is 0 on success, 1 when a certification fails and 2 on usage
errors.  Relative output paths are resolved against ``$HARMCONV_OUTPUT_DIR``
when it is set.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import certify as cert
from .convolution import convolve
from .errors import BoundaryAmbiguous, HarmconvError, IllConditioned
from .formats import format_dump, read_config, read_dump, reports_csv
from .harmonic import (EXAMPLE_NAMES, Mobius, Monomial, RightHalfPlane, SlantedHalfPlane,
                       VerticalStrip, example_map, shear, zero_dilatation)
from .render import RenderSpec, render_map
from .series import ComplexPolynomial, poly_roots_oracle
from .zerocheck import count_zeros_in_disk, schur_cohn

OUTPUT_DIR_ENV = "HARMCONV_OUTPUT_DIR"
GRID_DEFAULTS = {"r_max": 0.999, "n_radii": 40, "angles": 256, "order": 256}


class UsageError(Exception):
    pass


def _out_path(path) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit(text: str, out):
    if out:
        _out_path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _settings(args) -> dict:
    s = dict(GRID_DEFAULTS)
    if getattr(args, "config", None):
        s.update(read_config(args.config))
    for key in GRID_DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            s[key] = v
    return s


def _grid(s) -> cert.SweepGrid:
    return cert.SweepGrid.uniform(s["r_max"], s["n_radii"], s["angles"])


def _load_map(ref: str, order: int):
    if ref in EXAMPLE_NAMES or ref == "identity":
        return example_map(ref, order)
    if Path(ref).exists():
        return read_dump(ref)
    raise UsageError(f"{ref!r} is neither a named map nor a dump file")


def _dilatation(args, order):
    kind = args.dilatation
    if kind == "monomial":
        return Monomial(args.theta, args.n)
    if kind == "mobius":
        return Mobius(args.a)
    return zero_dilatation(order)


def _target(args):
    if args.target == "rhp":
        return RightHalfPlane()
    if args.target == "slanted":
        return SlantedHalfPlane(args.gamma)
    return VerticalStrip(args.alpha)


# subcommands --------------------------------------------------------------

def cmd_shear(args) -> int:
    s = _settings(args)
    target, w = _target(args), _dilatation(args, s["order"])
    f = shear(target, w, s["order"], name="shear")
    _emit(format_dump(f, target=repr(target), dilatation=repr(w)), args.out)
    return 0


def cmd_convolve(args) -> int:
    s = _settings(args)
    f, F = _load_map(args.first, s["order"]), _load_map(args.second, s["order"])
    _emit(format_dump(convolve(f, F), factors=f"{args.first} * {args.second}"), args.out)
    return 0


def cmd_certify(args) -> int:
    s = _settings(args)
    grid = _grid(s)
    if args.remark is not None:
        if args.remark != 1:
            raise UsageError("only remark 1 has a witness")
        report = cert.remark1_report(args.n or 3)
    elif args.region:
        report = cert.region_membership(args.region, grid, s["order"])
    elif args.level:
        report = cert.level_curve_constancy(args.level, args.c, r_max=s["r_max"])
    elif args.theorem == "1":
        f1 = shear(SlantedHalfPlane(args.gamma1), zero_dilatation(s["order"]), s["order"])
        f2 = shear(SlantedHalfPlane(args.gamma2), zero_dilatation(s["order"]), s["order"])
        report = cert.convexity_in_direction(convolve(f1, f2), -(args.gamma1 + args.gamma2), grid)
    elif args.theorem:
        thetas = args.theta or None
        report = cert.certify_theorem(args.theorem, grid, n=args.n, a=args.a or None,
                                      alphas=args.alpha or None, thetas=thetas)
    else:
        raise UsageError("choose one of --theorem, --remark, --region, --level")
    _emit(reports_csv([report]), args.csv)
    if args.csv:
        sys.stdout.write(reports_csv([report]))
    return 0 if report.passed else 1


def cmd_zeros(args) -> int:
    try:
        coeffs = [complex(c.replace("i", "j")) for c in args.coefficients]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p = ComplexPolynomial(coeffs)
    roots = poly_roots_oracle(p)
    print(f"degree: {p.degree}")
    try:
        zc = count_zeros_in_disk(p)
        print(f"inside: {zc.count} ({zc.method})")
        print(f"on circle: {zc.on_circle}")
        print(f"closed disk: {zc.count + zc.on_circle}")
    except BoundaryAmbiguous as exc:
        print(f"inside: ambiguous ({exc})")
    try:
        sc = schur_cohn(p)
        for nu, m in enumerate(sc.determinants, 1):
            print(f"M_{nu}: {m:.17g}")
        print(f"all inside (Schur-Cohn): {sc.all_inside}")
    except IllConditioned as exc:
        print(f"Schur-Cohn: {exc}")
    for r in sorted(roots, key=lambda r: (abs(r), np.angle(r))):
        print(f"root: {r.real:.17g} {r.imag:.17g} |{abs(r):.17g}|")
    return 0


def cmd_render(args) -> int:
    s = _settings(args)
    if args.radii:
        radii = tuple(args.radii)
    else:
        radii = tuple(np.round(np.linspace(args.rmax_circle / args.circles, args.rmax_circle,
                                           args.circles), 12))
    out = _out_path(args.out or f"{args.map}.svg")
    spec = RenderSpec(args.map, radii, args.rays, args.samples,
                      tuple(args.viewport) if args.viewport else None, str(out), order=s["order"])
    render_map(spec)
    print(out)
    return 0


def cmd_examples(args) -> int:
    s = _settings(args)
    outdir = _out_path(Path(args.outdir) / "placeholder").parent
    for name in ("F1", "F2", "F3"):
        path = outdir / f"{name}.txt"
        path.write_text(format_dump(example_map(name, s["order"])))
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="harmconv", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file with grid defaults")
    common.add_argument("--order", type=int, help="series truncation order")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("shear", parents=[common], help="shear a target along a dilatation")
    sp.add_argument("--target", choices=["rhp", "slanted", "strip"], default="rhp")
    sp.add_argument("--gamma", type=float, default=0.0)
    sp.add_argument("--alpha", type=float, default=math.pi / 2)
    sp.add_argument("--dilatation", choices=["monomial", "mobius", "zero"], default="monomial")
    sp.add_argument("--theta", type=float, default=0.0)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--a", type=float, default=0.0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_shear)

    sp = sub.add_parser("convolve", parents=[common], help="harmonic convolution of two maps")
    sp.add_argument("first", help="map name (f0, f1, ..., F3, identity) or dump file")
    sp.add_argument("second")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_convolve)

    sp = sub.add_parser("certify", parents=[common], help="grid certification of a claim")
    sp.add_argument("--theorem", choices=["1"] + list(cert.THEOREMS))
    sp.add_argument("--remark", type=int)
    sp.add_argument("--region", choices=sorted(cert.REGIONS))
    sp.add_argument("--level", choices=sorted(cert.LEVEL_SCALE))
    sp.add_argument("--c", type=float, default=math.pi / 8)
    sp.add_argument("--n", type=int)
    sp.add_argument("--theta", type=float, action="append")
    sp.add_argument("--a", type=float, action="append")
    sp.add_argument("--alpha", type=float, action="append")
    sp.add_argument("--gamma1", type=float, default=math.pi / 4)
    sp.add_argument("--gamma2", type=float, default=math.pi / 4)
    sp.add_argument("--r-max", dest="r_max", type=float)
    sp.add_argument("--n-radii", dest="n_radii", type=int)
    sp.add_argument("--angles", type=int)
    sp.add_argument("--csv", help="also write the report to this file")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("zeros", help="zeros of a0 + a1 z + ... + an z^n relative to the unit circle")
    sp.add_argument("coefficients", nargs="+", help="ascending coefficients, e.g. 0.5 0.5+0.1j 1")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("render", parents=[common], help="SVG of concentric circle images")
    sp.add_argument("--map", default="f0", choices=list(EXAMPLE_NAMES) + ["identity"])
    sp.add_argument("--radii", type=float, nargs="+")
    sp.add_argument("--circles", type=int, default=9)
    sp.add_argument("--rmax-circle", type=float, default=0.9)
    sp.add_argument("--rays", type=int, default=0)
    sp.add_argument("--samples", type=int, default=512)
    sp.add_argument("--viewport", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("examples", parents=[common], help="write F1/F2/F3 coefficient fixtures")
    sp.add_argument("--outdir", default=".")
    sp.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, HarmconvError, ValueError) as exc:
        print(f"harmconv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
