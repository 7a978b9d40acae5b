"""Command-line front-end: seed-stamped, byte-reproducible pipelines.

Subcommands: cameras, focals, complex, matroid, verify, basecase.  All
outputs are JSON or JSON-lines and echo the seed and prime used, so any run
can be replayed exactly.  Exit codes: 0 all verdicts pass, 1 some verdict
failed, 2 usage error.  The environment variable FOCAL_UGB_PRIME overrides
the default prime.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cameras import enumerate_focals, focal_count, sample_generic_cameras
from .complexes import (census_delta_tilde, count_facets_delta,
                        count_facets_delta_tilde, facets_delta_n,
                        facets_delta_tilde)
from .fields import DEFAULT_PRIME
from .matroids import MinorMatroid, delta_matroid, delta_tilde_matroid
from .serialize import dump_json, dump_jsonl, facet_names, focal_to_json
from .varspace import VarSpace
from .verify import base_case_groebner, verify_hl


def _prime_from_env(value):
    if value is not None:
        return value
    env = os.environ.get("FOCAL_UGB_PRIME")
    return int(env) if env else DEFAULT_PRIME


def _emit(payload, out):
    text = dump_json(payload, out)
    if not out:
        sys.stdout.write(text)


def cmd_cameras(args) -> int:
    cfg = sample_generic_cameras(args.n, args.seed)
    _emit({
        "n": cfg.n,
        "seed": cfg.seed,
        "matrices": [[list(r) for r in cam] for cam in cfg.matrices],
        "generic": cfg.generic,
        "minors_checked": cfg.minors_checked,
    }, args.out)
    return 0 if cfg.generic else 1


def cmd_focals(args) -> int:
    if args.mode == "numeric":
        cams = sample_generic_cameras(args.n, args.seed)
        focals = enumerate_focals(cams=cams, mode="numeric")
    else:
        focals = enumerate_focals(mode="symbolic", n=args.n)
    payload = {
        "n": args.n,
        "mode": args.mode,
        "seed": args.seed,
        "count": len(focals),
        "expected_count": focal_count(args.n),
        "focals": [focal_to_json(f) for f in focals],
    }
    _emit(payload, args.out)
    return 0 if len(focals) == focal_count(args.n) else 1


def cmd_complex(args) -> int:
    if args.which == "delta":
        if args.counts or not args.facets:
            _emit({"n": args.n, "which": "delta",
                   "count": count_facets_delta(args.n)}, args.out)
            return 0
        fs = facets_delta_n(args.n)
        count = dump_jsonl((facet_names(m, fs.space) for m in fs.masks),
                           args.facets)
        sys.stdout.write(f"{count}\n")
        return 0
    # the universal complex
    if args.census:
        report = census_delta_tilde(args.n)
        _emit(report, args.out)
        return 0 if report["ok"] else 1
    if args.counts or not args.facets:
        _emit({"n": args.n, "which": "delta-tilde",
               "count": count_facets_delta_tilde(args.n)}, args.out)
        return 0
    if not args.materialize:
        raise SystemExit("facet output for the universal complex requires "
                         "--materialize (n = 4 only)")
    fs = facets_delta_tilde(args.n, materialize=True)
    count = dump_jsonl((facet_names(m, fs.space) for m in fs.masks),
                       args.facets)
    sys.stdout.write(f"{count}\n")
    return 0


def _parse_vars(names_arg, space):
    if not names_arg:
        return []
    return [space.index_of(nm.strip()) for nm in names_arg.split(",")]


def cmd_matroid(args) -> int:
    if args.which == "delta":
        M = delta_matroid(args.n)
        space = VarSpace.multiview(args.n)
    else:
        M = delta_tilde_matroid(args.n)
        space = VarSpace.universal(args.n)
    payload = {"n": args.n, "which": args.which,
               "ground_rank": M.full_rank()}
    ok = True
    if args.independent is not None:
        X = _parse_vars(args.independent, space)
        payload["query"] = sorted(space.name(v) for v in X)
        payload["independent"] = M.independent(X)
        payload["rank"] = M.rank(X)
    if args.u24_witness:
        if args.which != "delta" or args.n != 4:
            raise SystemExit("--u24-witness applies to the delta matroid at n=4")
        delete = [space.x_index(i, 1) for i in (2, 3, 4)]
        contract = [space.x_index(1, 1), space.x_index(1, 2),
                    space.x_index(2, 2), space.x_index(3, 2),
                    space.x_index(4, 2)]
        minor = MinorMatroid(M, delete, contract)
        from itertools import combinations
        g = sorted(minor.ground)
        two_ok = all(minor.independent(p) for p in combinations(g, 2))
        three_ok = all(not minor.independent(t) for t in combinations(g, 3))
        payload["u24_witness"] = {
            "ground": [space.name(v) for v in g],
            "pairs_independent": two_ok,
            "triples_dependent": three_ok,
        }
        ok = two_ok and three_ok
    _emit(payload, args.out)
    return 0 if ok else 1


def _str2bool(value: str) -> bool:
    low = value.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {value!r}")


def cmd_verify(args) -> int:
    prime = _prime_from_env(args.prime)
    report = verify_hl(args.n, which=args.which, seed=args.seed,
                       exhaustive=args.exhaustive, prime=prime)
    payload = report.to_json_dict()
    ok = report.all_pass
    if args.basecase_orders:
        base = base_case_groebner(n=args.n, orders=args.basecase_orders,
                                  seed=args.seed, prime=prime,
                                  prune=args.prune)
        payload["base_case"] = base.to_json_dict()
        ok = ok and base.all_pass
    _emit(payload, args.out)
    return 0 if ok else 1


def cmd_basecase(args) -> int:
    prime = _prime_from_env(args.prime)
    report = base_case_groebner(n=args.n, orders=args.orders, seed=args.seed,
                                prime=prime, prune=args.prune)
    _emit(report.to_json_dict(), args.out)
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="focal-ugb",
        description="Focal polynomials of (universal) multiview ideals: "
                    "complexes, matroids, and universal Groebner basis "
                    "certification with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cameras", help="sample a generic camera configuration")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_cameras)

    f = sub.add_parser("focals", help="enumerate the 2-/3-/4-focals")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--mode", choices=("numeric", "symbolic"), default="numeric")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--out")
    f.set_defaults(fn=cmd_focals)

    x = sub.add_parser("complex", help="facets of the multiview/universal complex")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--which", choices=("delta", "tilde"), default="delta")
    x.add_argument("--counts", action="store_true")
    x.add_argument("--facets", metavar="OUT_JSONL")
    x.add_argument("--census", action="store_true",
                   help="stream-verify the universal facet family (tilde)")
    x.add_argument("--materialize", action="store_true")
    x.add_argument("--out")
    x.set_defaults(fn=cmd_complex)

    m = sub.add_parser("matroid", help="independence/rank queries and the "
                                       "U_{2,4} minor witness")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--which", choices=("delta", "tilde"), default="delta")
    m.add_argument("--independent", metavar="VARS",
                   help="comma-separated variable names")
    m.add_argument("--u24-witness", action="store_true")
    m.add_argument("--out")
    m.set_defaults(fn=cmd_matroid)

    v = sub.add_parser("verify", help="dominance + lifting certificates")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--which", choices=("multiview", "universal"),
                   default="multiview")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--exhaustive", type=_str2bool, nargs="?", const=True,
                   default=False, metavar="BOOL")
    v.add_argument("--basecase-orders", type=int, default=0,
                   help="embed a base-case report (n = 4 only)")
    v.add_argument("--prune", choices=("coprime", "gm", "none"),
                   default="coprime")
    v.add_argument("--prime", type=int)
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    b = sub.add_parser("basecase", help="the four-camera Groebner base case")
    b.add_argument("--n", type=int, default=4)
    b.add_argument("--orders", type=int, default=20)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--prime", type=int)
    b.add_argument("--prune", choices=("coprime", "gm", "none"),
                   default="coprime")
    b.add_argument("--out")
    b.set_defaults(fn=cmd_basecase)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except (ValueError, KeyError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
