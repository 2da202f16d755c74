"""``polysparse`` command line.

Exit codes: 0 success, 1 check failure, 2 input error, 3 resource refusal.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .closure import CutSet, InvalidCutError, budgeted_closure, sparse_closure, symmetrize
from .core.dd import facets
from .core.io import FormatError, format_poly, read_poly
from .core.linalg import q
from .core.polytope import HPolytope, VPolytope
from .experiments.common import ResourceRefusal
from .experiments.dense_budget import run_dense_budget
from .experiments.directional import run_directional
from .experiments.lp_relax import run_lp_relax
from .experiments.report import to_jsonable
from .experiments.rotation import run_rotation
from .experiments.verify import verify_suite
from .families import make_qn, make_simplex_family, make_symmetric_closure, make_symmetric_family
from .metrics import gap, hausdorff_sq

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_h(path: str) -> HPolytope:
    P = read_poly(path)
    if isinstance(P, VPolytope):
        P = facets(P)
    return P


def _emit_poly(P, args) -> int:
    if args.format == "json":
        if isinstance(P, HPolytope):
            doc = {"dim": P.dim, "ineqs": [{"a": h.a, "b": h.b} for h in P.ineqs]}
        else:
            doc = {"dim": P.dim, "vertices": P.vertices}
        _emit(json.dumps(to_jsonable(doc), sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(format_poly(P), args.out)
    return EXIT_OK


def _emit_json(doc, args) -> None:
    _emit(json.dumps(to_jsonable(doc), sort_keys=True, indent=2) + "\n", args.out)


def cmd_family(args) -> int:
    name = args.name
    if name == "simplex":
        P = make_simplex_family(q(args.t), args.n)
    elif name == "qn":
        P = make_qn(args.n)
    elif name == "symmetric":
        P = make_symmetric_family(q(args.t), args.n)
    else:
        P = make_symmetric_closure(q(args.t), args.n, args.k)
    return _emit_poly(P, args)


def cmd_closure(args) -> int:
    return _emit_poly(sparse_closure(_read_h(args.poly), args.k), args)


def cmd_symmetrize(args) -> int:
    return _emit_poly(symmetrize(_read_h(args.poly), args.method), args)


def cmd_budgeted(args) -> int:
    P = _read_h(args.poly)
    cuts = read_poly(args.cuts)
    if not isinstance(cuts, HPolytope):
        raise InputError("cut file must be an H file")
    return _emit_poly(budgeted_closure(P, args.k, CutSet.certified(P, cuts.ineqs, args.cuts)), args)


def cmd_hausdorff(args) -> int:
    d = hausdorff_sq(read_poly(args.inner), read_poly(args.outer))
    _emit_json({"sq_dist": d.sq_dist, "dist_float": d.dist, "witness_outer": d.witness_outer,
                "witness_inner": d.witness_inner}, args)
    return EXIT_OK


def cmd_gap(args) -> int:
    c = [q(tok) for tok in args.direction.replace(",", " ").split()]
    g = gap(read_poly(args.inner), read_poly(args.outer), c)
    _emit_json({"direction": g.direction, "support_outer": g.support_outer,
                "support_inner": g.support_inner, "gap": g.gap}, args)
    return EXIT_OK


def _emit_report(report, args) -> int:
    _emit(report.render(args.format), args.out)
    status = "passed" if report.passed else "FAILED"
    print(f"{report.name}: {status} ({report.wall_time:.2f}s)", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_lp_relax(args) -> int:
    return _emit_report(run_lp_relax(args.n), args)


def cmd_dense_budget(args) -> int:
    cuts = None
    if args.cuts:
        D = read_poly(args.cuts)
        if not isinstance(D, HPolytope):
            raise InputError("cut file must be an H file")
        cuts = D.ineqs
    r = run_dense_budget(args.n, args.k, args.d, args.samples, args.seed, cuts=cuts,
                         exhaustive=args.exhaustive)
    return _emit_report(r, args)


def cmd_rotation(args) -> int:
    r = run_rotation(args.n, args.t, args.k, args.rotations, args.seed, args.skew_bound)
    return _emit_report(r, args)


def cmd_directional(args) -> int:
    r = run_directional(args.n, args.t, args.k, args.samples, args.seed,
                        workers=args.workers, crosscheck_count=args.crosscheck)
    return _emit_report(r, args)


def cmd_verify(args) -> int:
    return _emit_report(verify_suite(args.max_n, inject_bug=args.inject_bug), args)


def _input_arg(p: argparse.ArgumentParser, name: str) -> None:
    """A file argument given either positionally or as ``--<name>``."""
    flag = "--input" if name == "poly" else f"--{name}"
    p.add_argument(name, nargs="?")
    p.add_argument(flag, dest=f"{name}_flag", metavar="PATH")


def _resolve_inputs(args) -> None:
    for name in ("poly", "inner", "outer"):
        if hasattr(args, name):
            value = getattr(args, name) or getattr(args, f"{name}_flag")
            if value is None:
                flag = "--input" if name == "poly" else f"--{name}"
                raise InputError(f"missing input file ({name} or {flag})")
            setattr(args, name, value)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")

    geo = argparse.ArgumentParser(add_help=False, parents=[common])
    geo.add_argument("--format", choices=["poly", "json"], default="poly")

    exp = argparse.ArgumentParser(add_help=False, parents=[common])
    exp.add_argument("--format", choices=["json", "jsonl", "csv"], default="jsonl")
    exp.add_argument("--seed", type=_u64, default=0)
    exp.add_argument("--samples", type=int, default=10000)

    p = argparse.ArgumentParser(prog="polysparse", description="Exact sparse cutting-plane closures.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", parents=[geo], help="emit a named polytope family")
    f.add_argument("name", choices=["simplex", "qn", "symmetric", "symmetric-closure"])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--t", default="1")
    f.add_argument("--k", type=int, default=1)
    f.set_defaults(func=cmd_family)

    c = sub.add_parser("closure", parents=[geo], help="k-sparse closure")
    _input_arg(c, "poly")
    c.add_argument("-k", "--k", type=int, required=True)
    c.set_defaults(func=cmd_closure)

    s = sub.add_parser("symmetrize", parents=[geo], help="orthant symmetrisation")
    _input_arg(s, "poly")
    s.add_argument("--method", choices=["auto", "fast", "generic"], default="auto")
    s.set_defaults(func=cmd_symmetrize)

    b = sub.add_parser("budgeted-closure", parents=[geo], help="k-sparse closure plus a cut file")
    _input_arg(b, "poly")
    b.add_argument("-k", "--k", type=int, required=True)
    b.add_argument("--cuts", required=True)
    b.set_defaults(func=cmd_budgeted)

    h = sub.add_parser("hausdorff", parents=[common], help="exact squared Hausdorff distance")
    _input_arg(h, "inner")
    _input_arg(h, "outer")
    h.set_defaults(func=cmd_hausdorff)

    g = sub.add_parser("gap", parents=[common], help="support-function gap along a direction")
    _input_arg(g, "inner")
    _input_arg(g, "outer")
    g.add_argument("--direction", required=True, help='e.g. "1 -2 3/4"')
    g.set_defaults(func=cmd_gap)

    e = sub.add_parser("experiment", help="seeded experiments")
    esub = e.add_subparsers(dest="experiment", required=True)

    lr = esub.add_parser("lp-relax", parents=[exp])
    lr.add_argument("--n", type=int, required=True)
    lr.set_defaults(func=cmd_lp_relax)

    db = esub.add_parser("dense-budget", parents=[exp])
    db.add_argument("--n", type=int, required=True)
    db.add_argument("--k", type=int, required=True)
    db.add_argument("--d", type=int, default=50, help="number of generated cuts")
    db.add_argument("--cuts", help="H file of cuts replacing the generator")
    db.add_argument("--exhaustive", action="store_true", help="enumerate all 2^n sign vectors")
    db.set_defaults(func=cmd_dense_budget)

    ro = esub.add_parser("rotation", parents=[exp])
    ro.add_argument("--n", type=int, required=True)
    ro.add_argument("--t", type=int, default=1)
    ro.add_argument("--k", type=int, required=True)
    ro.add_argument("--rotations", type=int, default=20)
    ro.add_argument("--skew-bound", type=int, default=3)
    ro.set_defaults(func=cmd_rotation)

    di = esub.add_parser("directional", parents=[exp])
    di.add_argument("--n", type=int, required=True)
    di.add_argument("--t", type=int, required=True)
    di.add_argument("--k", type=int, required=True)
    di.add_argument("--workers", type=int, default=1)
    di.add_argument("--crosscheck", type=int, default=0, help="exact cross-check directions (n <= 20)")
    di.set_defaults(func=cmd_directional)

    v = sub.add_parser("verify", parents=[exp], help="run every exact invariant check")
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--inject-bug", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        _resolve_inputs(args)
        return args.func(args)
    except ResourceRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except InvalidCutError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (InputError, FormatError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
