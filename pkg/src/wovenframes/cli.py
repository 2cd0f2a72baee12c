"""
Command-line front end.

Reports are deterministic JSON on stdout (or ``--out``); diagnostics go to
stderr. Exit codes:

==  ===========================================================
0   ok / certificate holds / pair woven
1   unreadable or malformed input
2   an input that must be a frame is not one
3   negative verdict (certificate fails, pair not woven)
4   too many partitions for exhaustive enumeration
5   soundness violation: certificate holds but oracle disagrees
6   frame generation failed
==  ===========================================================
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .angles import riesz_compatibility, woven_angle_sup
from .certificates import (
    Certificate,
    check_dual_perturbation,
    check_operator_perturbation,
    check_pair_operator_perturbation,
    check_perturbation,
    check_scaled_dual,
    check_scaled_dual_llhl,
    cross_check,
)
from .errors import InvalidConstant, NotAFrame, SingularOperator, TooManyPartitions
from .frames import is_frame, optimal_bounds
from .generate import GenerationError, perturb, random_frame, tight_frame
from .linalg import RankTolerance, rank
from .prng import SplitMix64
from .serialization import FileFormatError, digest, dumps, frame_to_dict, read_frame, read_matrix
from .weaving import DEFAULT_CAP, woven_constants

EXIT_OK = 0
EXIT_IO = 1
EXIT_NOT_FRAME = 2
EXIT_NEGATIVE = 3
EXIT_TOO_MANY = 4
EXIT_UNSOUND = 5
EXIT_GENERATION = 6


class _Run:
    """Collects input digests and flags for one invocation's report."""

    def __init__(self, args, command: str):
        self.args = args
        self.command = command
        self.files: dict[str, str] = {}
        self.tol = RankTolerance(relative=args.tol_rel) if args.tol_rel is not None else RankTolerance()

    def frame(self, role: str, path):
        self.files[role] = digest(path)
        return read_frame(path)

    def matrix(self, role: str, path):
        self.files[role] = digest(path)
        return read_matrix(path)

    def emit(self, results: dict, code: int) -> int:
        flags = {k: v for k, v in sorted(vars(self.args).items())
                 if k not in _PATH_ARGS and k != "func" and v is not None}
        report = {
            "command": self.command,
            "inputs": {"files": self.files, "flags": flags},
            "results": results,
            "tool_version": __version__,
        }
        _write(dumps(report), self.args.out)
        return code


_PATH_ARGS = {"frame", "f", "g", "op", "u", "v", "base", "out"}


def _write(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _weaving_results(report, per_sigma: bool) -> dict:
    res = {
        "n": report.n,
        "woven": report.woven,
        "uniform_lower": report.uniform_lower,
        "uniform_upper": report.uniform_upper,
        "worst_sigma": report.worst_sigma,
        "worst_sigma_bits": format(report.worst_sigma, f"0{report.n}b"),
    }
    if per_sigma and report.lower_sigma is not None:
        res["per_sigma"] = [
            {"sigma": m, "lower": float(report.lower_sigma[m]),
             "upper": float(report.upper_sigma[m]), "is_frame": bool(report.frame_sigma[m])}
            for m in range(len(report.lower_sigma))
        ]
    return res


def cmd_bounds(args):
    run = _Run(args, "bounds")
    f = run.frame("frame", args.frame)
    ok = is_frame(f, run.tol)
    res = {"dim": f.dim, "n": f.n, "rank": rank(f.matrix, run.tol), "is_frame": ok}
    if not ok:
        print(f"error: {args.frame}: not a frame", file=sys.stderr)
        return run.emit(res, EXIT_NOT_FRAME)
    b = optimal_bounds(f, run.tol)
    res.update(lower=b.lower, upper=b.upper, ratio=b.ratio)
    return run.emit(res, EXIT_OK)


def cmd_woven(args):
    run = _Run(args, "woven")
    f, g = run.frame("f", args.f), run.frame("g", args.g)
    report = woven_constants(f, g, run.tol, cap=args.cap,
                             store_per_sigma=True if args.per_sigma else None)
    return run.emit(_weaving_results(report, args.per_sigma),
                    EXIT_OK if report.woven else EXIT_NEGATIVE)


def _woven_lower(run, f, g):
    report = woven_constants(f, g, run.tol, cap=run.args.cap)
    if not report.woven:
        raise InvalidConstant("the base pair is not woven, so no positive lower constant exists")
    return report.uniform_lower


def _certificate(run) -> Certificate:
    a, kind = run.args, run.args.theorem
    f = run.frame("f", a.f)
    if kind == "epa":
        return check_perturbation(f, run.frame("g", a.g), run.tol)
    if kind == "invertible":
        return check_operator_perturbation(f, run.matrix("op", a.op), run.tol)
    if kind == "llhl":
        return check_scaled_dual_llhl(f, run.tol)
    if kind == "scaled":
        return check_scaled_dual(f, a.alpha, run.tol)
    g = run.frame("g", a.g)
    c = a.c if a.c is not None else _woven_lower(run, f, g)
    if kind == "pair":
        return check_pair_operator_perturbation(
            f, g, run.matrix("u", a.u), run.matrix("v", a.v), c, run.tol)
    return check_dual_perturbation(f, g, c, run.tol)


def cmd_certify(args):
    run = _Run(args, f"certify {args.theorem}")
    cert = _certificate(run)
    res = {
        "theorem": cert.theorem_id.name,
        "holds": cert.holds,
        "measured": cert.measured,
        "predicted_lower": cert.predicted_lower,
        "predicted_upper": cert.predicted_upper,
    }
    code = EXIT_OK if cert.holds else EXIT_NEGATIVE
    if args.verify:
        report, consistent = cross_check(cert, run.tol, cap=args.cap)
        res["oracle"] = _weaving_results(report, False)
        res["consistent"] = consistent
        if cert.predicted_lower is not None:
            res["predicted_lower_respected"] = report.uniform_lower >= cert.predicted_lower - 1e-8
            res["predicted_upper_respected"] = report.uniform_upper <= cert.predicted_upper + 1e-8
        if not consistent:
            print("error: certificate holds but the oracle finds a non-woven weaving",
                  file=sys.stderr)
            code = EXIT_UNSOUND
    return run.emit(res, code)


def cmd_angles(args):
    run = _Run(args, f"angles {args.which}")
    f = run.frame("f", args.f)
    if args.which == "woven-sup":
        sup, arg = woven_angle_sup(f, run.frame("g", args.g), run.tol, cap=args.cap)
    else:
        sup, arg = riesz_compatibility(f, run.tol, cap=args.cap)
    res = {"sup_cosine": sup, "argmax_sigma": arg.sigma, "argmax_sigma_bits": arg.bits(),
           "below_one": sup < 1.0}
    return run.emit(res, EXIT_OK)


def cmd_gen(args):
    tol = RankTolerance(relative=args.tol_rel) if args.tol_rel is not None else RankTolerance()
    rng = SplitMix64(args.seed)
    if args.kind == "random":
        f = random_frame(args.dim, args.count, rng, tol,
                         name=f"random(d={args.dim},n={args.count},seed={args.seed})")
    elif args.kind == "tight":
        f = tight_frame(args.dim, args.count)
    else:
        if args.base is None or args.target is None:
            raise FileFormatError("--kind perturb needs --base and --target")
        f = perturb(read_frame(args.base), args.target, rng, tol)
    _write(dumps(frame_to_dict(f)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest number of vectors for exhaustive enumeration")
    common.add_argument("--tol-rel", type=float, default=None,
                        help="relative rank tolerance (default: machine epsilon)")
    common.add_argument("--out", help="write the output here instead of stdout")

    p = argparse.ArgumentParser(prog="wovenframes", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="optimal frame bounds")
    s.add_argument("frame")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("woven", parents=[common], help="exhaustive woven check of a pair")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--per-sigma", action="store_true", help="include the full subset table")
    s.set_defaults(func=cmd_woven)

    s = sub.add_parser("certify", help="sufficient-condition certificates")
    cs = s.add_subparsers(dest="theorem", required=True)
    verify = argparse.ArgumentParser(add_help=False)
    verify.add_argument("--verify", action="store_true",
                        help="also run the exhaustive oracle on the certified pair")
    for name, needs_g in (("epa", True), ("invertible", False), ("pair", True),
                          ("dual", True), ("llhl", False), ("scaled", False)):
        c = cs.add_parser(name, parents=[common, verify])
        c.add_argument("f")
        if needs_g:
            c.add_argument("g")
        c.set_defaults(func=cmd_certify)
        if name == "invertible":
            c.add_argument("--op", required=True, help="matrix file for T")
        elif name == "pair":
            c.add_argument("--u", required=True, help="matrix file for U")
            c.add_argument("--v", required=True, help="matrix file for V")
        elif name == "scaled":
            c.add_argument("--alpha", type=float, required=True)
        if name in ("pair", "dual"):
            c.add_argument("--c", type=float, default=None,
                           help="woven lower constant of (f, g); computed by the oracle if omitted")

    s = sub.add_parser("angles", help="angle suprema over all subsets")
    a_sub = s.add_subparsers(dest="which", required=True)
    a = a_sub.add_parser("woven-sup", parents=[common])
    a.add_argument("f")
    a.add_argument("g")
    a.set_defaults(func=cmd_angles)
    a = a_sub.add_parser("riesz", parents=[common])
    a.add_argument("f")
    a.set_defaults(func=cmd_angles)

    s = sub.add_parser("gen", parents=[common], help="write a seeded frame file")
    s.add_argument("--kind", choices=("random", "tight", "perturb"), default="random")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--count", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--base", help="frame file to perturb")
    s.add_argument("--target", type=float, help="perturbation size relative to sqrt(A)")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NotAFrame as exc:
        print(f"error: not a frame: {exc}", file=sys.stderr)
        return EXIT_NOT_FRAME
    except (InvalidConstant, SingularOperator) as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except TooManyPartitions as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_MANY
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
