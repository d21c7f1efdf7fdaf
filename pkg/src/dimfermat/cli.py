"""Command line driver: build configurations, run checks, print certificates."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence

from . import arrangements as arr
from .certificate import Certificate, emit
from .cyclotomic import ambient_field
from .linsys import generation_check, unexpectedness_check
from .multipoly import format_poly
from .unexpected import (bpf_case_analysis_m3, bpf_check, default_n_max, dual_expansion_check,
                         gamma, gamma_membership, lambda_system, mult_certificate)

ALL_CHECKS = ("configuration", "scene", "generators", "generation", "unexpected",
              "membership", "mult", "dual", "bpf")


@dataclass
class RunConfig:
    m: int
    commands: Sequence[str] = ALL_CHECKS
    trials: int = 3
    seed: int = 0
    d_max_generation: Optional[int] = None
    n_max_bpf: Optional[int] = None
    output: str = "text"
    degree: Optional[int] = None
    mult: int = 3

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if self.d_max_generation is None:
            self.d_max_generation = 2 * (2 * self.m + 1)
        if self.n_max_bpf is None:
            self.n_max_bpf = default_n_max(self.m)


# -- individual checks ---------------------------------------------------------------

def configuration_certificate(m: int) -> Certificate:
    field_ = ambient_field(m)
    W = arr.fermat_grid(m, field_)
    Y = arr.grid_difference(m, field_)
    X = arr.coordinate_points(field_)
    Z = arr.diminished_set(m, field_)
    counts = {"W": len(W), "Y": len(Y), "X": len(X), "Z": len(Z)}
    disjoint = not (set(W) & set(Y)) and not (set(X) & set(Y))
    ok = (counts == {"W": m * m, "Y": 3 * m * m, "X": 3, "Z": 3 * m * m + 3}
          and disjoint and set(Z) == set(Y) | set(X))
    return Certificate("configuration", {"m": m, "conductor": field_.n},
                       "pass" if ok else "fail", {"counts": counts, "disjoint": disjoint})


def scene_certificate() -> Certificate:
    scene = arr.inflection_scene()
    on_curves = all(scene.fermat.evaluate(p.coords).is_zero()
                    and scene.hessian.evaluate(p.coords).is_zero() for p in scene.points)
    product = reduce(lambda p, q: p * q, [l.poly for l in scene.lines]) == scene.g3
    contacts = [arr.contact_order(scene.fermat, l, p) for l, p in zip(scene.lines, scene.points)]
    cross = arr.double_points_crosscheck(scene.lines)
    ok = on_curves and product and contacts == [3] * 9 and cross["ok"]
    return Certificate("scene-crosscheck", {"m": 3}, "pass" if ok else "fail",
                       {"inflection_points_on_F_and_H": on_curves,
                        "lines_product_is_g3": product, "contact_orders": contacts,
                        "double_points": cross["double_points"],
                        "triple_points": cross["triple_points"],
                        "double_points_equal_W6_minus_W3": cross["ok"]})


def generators_certificates(m: int) -> List[Certificate]:
    field_ = ambient_field(m)
    Y = arr.grid_difference(m, field_)
    W = arr.fermat_grid(m, field_)
    Z = arr.diminished_set(m, field_)
    fs = arr.generators_Y(m, field_)
    hs = arr.generators_Z(m, field_)
    f_vanish = [arr.vanishes_on(f, Y) for f in fs]
    f3_nonzero = all(not fs[2].evaluate(p.coords).is_zero() for p in W)
    h_vanish = [arr.vanishes_on(h, Z) for h in hs]
    return [
        Certificate("lemma-generators-Y", {"m": m}, "pass" if all(f_vanish) and f3_nonzero else "fail",
                    {"vanish_on_Y": f_vanish, "f3_nonzero_on_W": f3_nonzero,
                     "generators": [format_poly(f) for f in fs]}),
        Certificate("lemma-generators-Z", {"m": m}, "pass" if all(h_vanish) else "fail",
                    {"vanish_on_Z": h_vanish, "generators": [format_poly(h) for h in hs]}),
    ]


def generation_certificates(m: int, d_max: int) -> List[Certificate]:
    field_ = ambient_field(m)
    Y = arr.grid_difference(m, field_)
    Z = arr.diminished_set(m, field_)
    return [
        generation_check(arr.generators_Y(m, field_), Y, 2 * m, 4 * m, claim="generation-Y"),
        generation_check(arr.generators_Z(m, field_), Z, 2 * m + 1, d_max, claim="generation-Z"),
    ]


def unexpected_certificate(m: int, degree: Optional[int], mult: int, trials: int, seed: int) -> Certificate:
    report = unexpectedness_check(m, degree, mult, trials, seed)
    cert = report.certificate()
    cert.params["claimed_by_theorem"] = m >= 3 and report.d == 2 * m + 1 and mult == 3
    return cert


def mult_certificates(m: int) -> List[Certificate]:
    curve = gamma(m)
    return [mult_certificate(curve, side).certificate(m) for side in ("xyz", "abc")]


def bpf_certificates(m: int, n_max: int) -> List[Certificate]:
    system = lambda_system(m)
    certs = [bpf_check(system, n_max)]
    if m == 3:
        certs.append(bpf_case_analysis_m3(system))
    return certs


def run_report(config: RunConfig) -> List[Certificate]:
    m = config.m
    certs: List[Certificate] = []
    chosen = set(config.commands)
    if "configuration" in chosen:
        certs.append(configuration_certificate(m))
    if "scene" in chosen and m == 3:
        certs.append(scene_certificate())
    if "generators" in chosen:
        certs.extend(generators_certificates(m))
    if "generation" in chosen:
        certs.extend(generation_certificates(m, config.d_max_generation))
    if "unexpected" in chosen:
        certs.append(unexpected_certificate(m, config.degree, config.mult, config.trials, config.seed))
    if "membership" in chosen:
        certs.append(gamma_membership(m, config.trials, config.seed))
    if "mult" in chosen:
        certs.extend(mult_certificates(m))
    if "dual" in chosen:
        certs.append(dual_expansion_check(m))
    if "bpf" in chosen:
        certs.extend(bpf_certificates(m, config.n_max_bpf))
    return certs


def exit_code(certs: Sequence[Certificate]) -> int:
    return 0 if all(c.passed for c in certs) else 1


# -- argument parsing ------------------------------------------------------------------

def _sweep(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"bad sweep range {text!r}")
    return range(lo_i, hi_i + 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="parameter m >= 1")
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", choices=("text", "json", "json-like"), default="text")
    common.add_argument("--d-max", type=int, default=None, help="top degree for generation checks")
    common.add_argument("--n-max", type=int, default=None, help="top degree for the bpf search")

    parser = argparse.ArgumentParser(prog="dimfermat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("points", parents=[common], help="print a point configuration")
    p.add_argument("--set", dest="which", choices=("W", "X", "S", "Y", "Z"), default="Z")
    sub.add_parser("gamma", parents=[common], help="print gamma_m")
    sub.add_parser("ideal-check", parents=[common], help="generator vanishing and generation")
    p = sub.add_parser("unexpected-check", parents=[common], help="fat point dimension count")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--mult", type=int, default=3)
    p = sub.add_parser("mult-cert", parents=[common], help="triple point certificate for gamma_m")
    p.add_argument("--side", choices=("xyz", "abc"), default="xyz")
    sub.add_parser("dual-check", parents=[common], help="compare with the dual display")
    sub.add_parser("bpf-check", parents=[common], help="base point freeness of Lambda_m")
    p = sub.add_parser("report", parents=[common], help="run the whole pipeline")
    p.add_argument("--sweep", type=_sweep, default=None, help="range of m, e.g. 3..6")
    return parser


def _points_text(m: int, which: str) -> str:
    field_ = ambient_field(m)
    conf = {
        "W": lambda: arr.fermat_grid(m, field_),
        "X": lambda: arr.coordinate_points(field_),
        "S": lambda: arr.singular_points(m, field_),
        "Y": lambda: arr.grid_difference(m, field_),
        "Z": lambda: arr.diminished_set(m, field_),
    }[which]()
    return conf.serialize() + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ms: Sequence[int]
    if getattr(args, "sweep", None) is not None:
        ms = list(args.sweep)
    else:
        if args.m is None:
            parser.error("--m is required")
        ms = [args.m]
    if any(m < 1 for m in ms):
        parser.error("--m must be at least 1")
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    fmt = "json" if args.output == "json-like" else args.output

    if args.command == "points":
        sys.stdout.write(_points_text(ms[0], args.which))
        return 0
    if args.command == "gamma":
        m = ms[0]
        curve = gamma(m)
        ok = curve.bidegree == (2 * m + 1, 2 * m - 1)
        if fmt == "text":
            sys.stdout.write(format_poly(curve.poly) + "\n")
        else:
            cert = Certificate("gamma", {"m": m}, "pass" if ok else "fail",
                               {"bidegree": list(curve.bidegree or ()), "terms": len(curve.poly),
                                "poly": format_poly(curve.poly)})
            sys.stdout.write(emit([cert], fmt))
        return 0 if ok else 1

    certs: List[Certificate] = []
    for m in ms:
        d_max = args.d_max if args.d_max is not None else 2 * (2 * m + 1)
        n_max = args.n_max if args.n_max is not None else default_n_max(m)
        if args.command == "ideal-check":
            certs.extend(generators_certificates(m))
            certs.extend(generation_certificates(m, d_max))
        elif args.command == "unexpected-check":
            certs.append(unexpected_certificate(m, args.degree, args.mult, args.trials, args.seed))
        elif args.command == "mult-cert":
            certs.append(mult_certificate(gamma(m), args.side).certificate(m))
        elif args.command == "dual-check":
            certs.append(dual_expansion_check(m))
        elif args.command == "bpf-check":
            certs.extend(bpf_certificates(m, n_max))
        elif args.command == "report":
            config = RunConfig(m, trials=args.trials, seed=args.seed, d_max_generation=d_max,
                               n_max_bpf=n_max, output=fmt)
            certs.extend(run_report(config))
    sys.stdout.write(emit(certs, fmt))
    return exit_code(certs)


if __name__ == "__main__":
    sys.exit(main())
