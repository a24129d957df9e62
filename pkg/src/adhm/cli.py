"""Command-line front end.

Every command reads or writes the JSON datum format from :mod:`adhm.io`.
Reports are ``key: value`` lines with sorted keys, or one JSON object with
``--json``.  Exit status is 0 when every check in scope passes, 1 when a
check fails and 2 on usage, I/O or validation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .acceptance import SweepConfig, run_sweep
from .classify import classify
from .core import NotASolutionError, is_solution, mu
from .experiments import remark_experiment
from .io import DatumFormatError, datum_to_dict, load_datum, matrix_to_json, serialize_datum
from .monad import (
    PointP2,
    evaluate_fiber,
    h0_twisted,
    perverse_invariants,
    singular_support,
)
from .ratmat import make_rng
from .strata import SamplingError, audit_dimensions, sample_stratum
from .uhlenbeck import uhlenbeck_image, uhlenbeck_invariants

SEED_ENV = "ADHM_SEED"


class CommandError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _plain(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render(doc: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(doc, sort_keys=True, indent=2)
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list) and all(isinstance(v, str) for v in value):
            lines.append(f"{key}:")
            lines.extend(f"  {v}" for v in value)
        else:
            lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines)


def _emit(args, doc: dict):
    print(render(doc, args.json))


def resolve_seed(seed: int) -> int:
    env = os.environ.get(SEED_ENV)
    if env is None or env == "":
        return seed
    try:
        return int(env)
    except ValueError:
        raise CommandError(f"{SEED_ENV} must be an integer, got {env!r}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    X = load_datum(args.infile)
    ok = is_solution(X)
    _emit(args, {"solution": ok, "mu": matrix_to_json(mu(X)), "r": X.r, "c": X.c})
    return 0 if ok else 1


def cmd_classify(args) -> int:
    X = load_datum(args.infile)
    _emit(args, classify(X).as_dict())
    return 0


def cmd_sample(args) -> int:
    seed = resolve_seed(args.seed)
    rng = make_rng(seed)
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        X = sample_stratum(args.r, args.c, args.s, rng, conjugate=args.conjugate).X
        if out:
            path = out / f"datum_r{args.r}_c{args.c}_s{args.s}_{k:03d}.json"
            path.write_text(serialize_datum(X, indent=2) + "\n", encoding="utf-8")
            print(path)
        else:
            print(serialize_datum(X))
    return 0


def cmd_audit(args) -> int:
    rows = sorted(audit_dimensions(args.rmax, args.cmax), key=lambda a: (a.r, a.c, a.s))
    if args.json:
        print(json.dumps([dict(r=a.r, c=a.c, s=a.s, formula=a.formula,
                               parametrization=a.parametrization, equal=a.equal) for a in rows],
                         indent=2))
    else:
        print(f"{'r':>3} {'c':>3} {'s':>3} {'formula':>8} {'param':>8} equal")
        for a in rows:
            print(f"{a.r:>3} {a.c:>3} {a.s:>3} {a.formula:>8} {a.parametrization:>8} {_plain(a.equal)}")
    return 0 if all(a.equal for a in rows) else 1


def cmd_monad(args) -> int:
    X = load_datum(args.infile)
    if args.action == "fiber":
        try:
            P = PointP2.parse(args.point)
        except ValueError as exc:
            raise CommandError(f"--point: {exc}") from None
        f = evaluate_fiber(X, P)
        doc = {"point": str(f.point), "rank_alpha": f.rank_alpha, "rank_beta": f.rank_beta,
               "h0_fiber": f.h0_fiber, "h1_fiber": f.h1_fiber, "alpha_injective": f.alpha_injective}
    elif args.action == "support":
        sup = singular_support(X)
        doc = {"points": [str(p) for p in sup], "length": sup.size, "located": sup.total,
               "complete": sup.complete, "residue_degrees": list(sup.residue_degrees)}
    elif args.action == "h0":
        if args.n < 0:
            raise CommandError("--n must be non-negative")
        doc = {"n": args.n, "h0": h0_twisted(X, args.n)}
    else:
        inv = perverse_invariants(X)
        doc = {"rank": inv.rank, "charge": inv.charge, "length": inv.length,
               "chern_character": list(inv.chern_character)}
    _emit(args, doc)
    return 0


def cmd_uhlenbeck(args) -> int:
    X = load_datum(args.infile)
    img = uhlenbeck_image(X)
    fp = uhlenbeck_invariants(img)
    if args.out:
        Path(args.out).write_text(serialize_datum(img.regular_part, indent=2) + "\n", encoding="utf-8")
    doc = {"regular_part": datum_to_dict(img.regular_part), "charge": fp.charge, "rank": fp.rank,
           "cloud_size": img.cloud.n, "points": [str(p) for p in img.points],
           "complete": img.points.complete}
    _emit(args, doc)
    return 0


def cmd_remark(args) -> int:
    docs = []
    for f in remark_experiment():
        rep = f.report
        docs.append({
            "family": f.label,
            "params": {k: str(v) for k, v in f.params.items()},
            "mu_vanishes": f.mu_vanishes,
            "jacobian_rank": f.jacobian_rank,
            "stabilizer_lie_dim": len(f.stabilizer_basis),
            "stabilizer_lie_basis": [matrix_to_json(y) for y in f.stabilizer_basis],
            "witness": matrix_to_json(f.witness) if f.witness is not None else None,
            "stable": rep.stable, "costable": rep.costable, "sj": rep.sj, "ts": rep.ts,
        })
    if args.json:
        print(json.dumps(docs, sort_keys=True, indent=2))
    else:
        print("\n\n".join(render(d, False) for d in docs))
    return 0


def cmd_sweep(args) -> int:
    seed = resolve_seed(args.seed)
    cfg = SweepConfig.quick(seed) if args.quick else SweepConfig(seed=seed)
    results = run_sweep(cfg, args.only)
    if args.json:
        print(json.dumps([dict(number=r.number, name=r.name, passed=r.passed, checks=r.checks,
                               detail=r.detail) for r in results], indent=2))
    else:
        for r in results:
            print(r.line(), flush=True)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def datum_in(p):
        p.add_argument("--in", dest="infile", required=True, metavar="PATH", help="datum file (JSON)")

    parser = argparse.ArgumentParser(prog="adhm", description="Exact computations with ADHM data.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("check", parents=[common], help="evaluate [A,B] + IJ")
    datum_in(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="stability and smoothness report")
    datum_in(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", parents=[common], help="sample solutions from a stratum")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--conjugate", action=argparse.BooleanOptionalAction, default=False,
                   help="apply a random change of basis")
    p.add_argument("--out", metavar="DIR", help="write one file per sample instead of JSON lines")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("audit-dimensions", parents=[common], help="stratum dimension table")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("monad", help="monad complex on the projective plane")
    datum_in(p)
    actions = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    a = actions.add_parser("fiber", parents=[common], help="fiber ranks at a point")
    a.add_argument("--point", required=True, help='homogeneous coordinates "x,y,z"')
    actions.add_parser("support", parents=[common], help="support of the torsion part")
    a = actions.add_parser("h0", parents=[common], help="global sections of the n-th twist")
    a.add_argument("--n", type=int, required=True)
    actions.add_parser("invariants", parents=[common], help="rank, charge, length")
    p.set_defaults(func=cmd_monad)

    p = sub.add_parser("uhlenbeck", parents=[common], help="regular part plus point cloud")
    datum_in(p)
    p.add_argument("--out", metavar="PATH", help="also write the regular part to a datum file")
    p.set_defaults(func=cmd_uhlenbeck)

    p = sub.add_parser("remark-experiment", parents=[common], help="two-parameter-family findings")
    p.set_defaults(func=cmd_remark)

    p = sub.add_parser("sweep", parents=[common], help="run the acceptance sweeps")
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--quick", action="store_true", help="reduced sample counts")
    p.add_argument("--only", type=int, action="append", choices=range(1, 15), metavar="N",
                   help="run criterion N only (repeatable)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, DatumFormatError, NotASolutionError, SamplingError, CommandError, ValueError) as exc:
        print(f"adhm {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
