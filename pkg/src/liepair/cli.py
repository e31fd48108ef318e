"""Command-line interface: ``liepair tangent|mc|gauge|catalog|verify``.

Pairs and coefficient algebras are referenced by catalog name or by a path
to a canonical-JSON document.  All output is deterministic given the inputs
and the seed; every emitted witness or element has been re-verified through
the library before printing.

Exit codes: 0 success (witness found, checks passed), 1 negative verdict
(Maurer-Cartan check failed, orbits distinct, a verify suite failed),
2 parse/validation/I-O error, 3 gauge search inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .artin import ArtinError
from .catalog import algebra_names, get_algebra, get_entry, get_pair, pair_names
from .cohomology import h1_semistrict, h1_weak, h_ce
from .deform import DeformError, equiv_decide, std_check
from .liealg import LieError
from .mc import MCError, gauge_act, is_mc, mc_extend, mc_residual
from .sampling import random_mc
from .serialize import (
    FormatError,
    canonical_dumps,
    gauge_from_obj,
    gauge_to_obj,
    mc_from_obj,
    mc_to_obj,
    omega_to_obj,
    pair_from_obj,
    report_to_obj,
    resolve_algebra,
    small_aut_to_obj,
)
from .verify import SUITE_NAMES, run_suites

USER_ERRORS = (FormatError, ArtinError, LieError, MCError, DeformError, KeyError, OSError,
               json.JSONDecodeError, ValueError, IndexError)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _resolve_pair(ref):
    try:
        return get_pair(ref)
    except KeyError:
        if os.path.exists(ref):
            return pair_from_obj(_load_json(ref))
        raise


def _resolve_algebra_ref(ref):
    try:
        return get_algebra(ref)
    except KeyError:
        if os.path.exists(ref):
            return resolve_algebra(_load_json(ref))
        raise


def _emit(obj, fmt, table_lines):
    if fmt == "table":
        print("\n".join(table_lines))
    else:
        sys.stdout.write(canonical_dumps(obj))


def _add_common(p, pair=True, algebra=False, seed=False, mode=False):
    if pair:
        p.add_argument("--pair", required=True, help="catalog pair name or JSON file")
    if algebra:
        p.add_argument("--algebra", required=True, help="catalog algebra name or JSON file")
    if seed:
        p.add_argument("--seed", type=int, default=0)
    if mode:
        p.add_argument("--mode", choices=["weak", "semistrict", "matched"], default="weak")
    p.add_argument("--format", choices=["json", "table"], default="json")


def cmd_tangent(args):
    pair = _resolve_pair(args.pair)
    if args.functor == "ce":
        report = h_ce(pair, 1, args.pair)
    elif args.functor == "weak":
        report = h1_weak(pair, args.pair)
    else:
        report = h1_semistrict(pair, args.pair)
    obj = report_to_obj(report)
    lines = [
        f"pair: {args.pair}",
        f"functor: {args.functor}",
        f"tangent dimension: {report.dimension}",
        f"representatives: {len(report.representatives)}",
    ]
    _emit(obj, args.format, lines)
    return 0


def cmd_mc(args):
    pair = _resolve_pair(args.pair)
    algebra = _resolve_algebra_ref(args.algebra)
    if args.action == "random":
        rng = random.Random(args.seed)
        xi = random_mc(pair, algebra, rng)
        obj = mc_to_obj(xi)
        obj["verified"] = True
        _emit(obj, args.format, [f"random Maurer-Cartan element over {args.algebra}:",
                                 canonical_dumps(mc_to_obj(xi)).strip()])
        return 0
    if not args.element:
        raise FormatError("this action needs --element FILE")
    xi = mc_from_obj(pair, _load_json(args.element), algebra)
    if args.action == "check":
        mc_ok = is_mc(xi)
        closure_ok = std_check(xi)
        res = mc_residual(xi)
        obj = {
            "maurer_cartan": mc_ok,
            "closure_equation": closure_ok,
            "residual_order": res.min_mdegree(),
        }
        _emit(obj, args.format, [f"maurer_cartan: {mc_ok}", f"closure_equation: {closure_ok}"])
        return 0 if mc_ok else 1
    # extend
    outcome = mc_extend(xi)
    obj = {"status": outcome.status}
    if outcome.element is not None:
        obj["element"] = mc_to_obj(outcome.element)
        obj["maurer_cartan"] = is_mc(outcome.element)
    if outcome.order is not None:
        obj["order"] = outcome.order
    if outcome.obstruction:
        obj["obstruction"] = [
            {"m_index": i, "class_representative": omega_to_obj(el)}
            for i, el in outcome.obstruction
        ]
    _emit(obj, args.format, [f"status: {outcome.status}"])
    return 0


def cmd_gauge(args):
    pair = _resolve_pair(args.pair)
    algebra = _resolve_algebra_ref(args.algebra)
    xi = mc_from_obj(pair, _load_json(args.xi), algebra)
    if args.action == "act":
        if not args.delta:
            raise FormatError("gauge act needs --delta FILE")
        delta = gauge_from_obj(pair, _load_json(args.delta), algebra)
        eta = gauge_act(delta, xi)
        _emit(mc_to_obj(eta), args.format, ["gauge action result:", canonical_dumps(mc_to_obj(eta)).strip()])
        return 0
    if not args.eta:
        raise FormatError("gauge solve needs --eta FILE")
    eta = mc_from_obj(pair, _load_json(args.eta), algebra)
    outcome = equiv_decide(xi, eta, args.mode)
    if outcome.status == "equivalent":
        obj = {
            "status": "equivalent",
            "delta": gauge_to_obj(outcome.delta),
            "exp_delta": small_aut_to_obj(outcome.witness),
        }
        _emit(obj, args.format, ["status: equivalent (witness re-verified)"])
        return 0
    if outcome.status == "not_equivalent":
        _emit({"status": "not_equivalent"}, args.format, ["status: not_equivalent"])
        return 1
    obj = {"status": "unknown"}
    if outcome.order is not None:
        obj["blocked_at_order"] = outcome.order
    _emit(obj, args.format, [f"status: unknown (blocked at order {outcome.order})"])
    return 3


def cmd_catalog(args):
    pairs = []
    for name in pair_names():
        entry = get_entry(name)
        pairs.append(
            {
                "name": name,
                "dim": entry.pair.lie.dim,
                "subalgebra_rank": entry.pair.rank,
                "matched": entry.pair.is_matched(),
                "note": entry.note,
                "golden": entry.golden,
            }
        )
    obj = {"pairs": pairs, "algebras": algebra_names()}
    lines = ["pairs:"]
    for p in pairs:
        lines.append(
            f"  {p['name']:14s} dim {p['dim']}, rank {p['subalgebra_rank']},"
            f" matched {p['matched']}: {p['note']}"
        )
    lines.append("algebras: " + ", ".join(algebra_names()))
    _emit(obj, args.format, lines)
    return 0


def cmd_verify(args):
    names = SUITE_NAMES if args.suite == "all" else [args.suite]
    ok, results = run_suites(names, seed=args.seed)
    obj = {
        "ok": ok,
        "seed": args.seed,
        "checks": [
            {"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
    }
    lines = []
    for r in results:
        status = "pass" if r.ok else "FAIL"
        lines.append(f"[{status}] {r.suite}: {r.name}" + (f" ({r.detail})" if r.detail else ""))
    lines.append(f"verify: {'all checks passed' if ok else 'FAILURES PRESENT'}")
    _emit(obj, args.format, lines)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liepair",
        description="Exact deformation theory of Lie algebra pairs over Artinian coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tangent", help="tangent-space dimension and representatives")
    p.add_argument("--functor", choices=["ce", "weak", "semistrict"], required=True)
    _add_common(p)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("mc", help="Maurer-Cartan element operations")
    p.add_argument("action", choices=["check", "extend", "random"])
    p.add_argument("--element", help="element file (for check/extend)")
    _add_common(p, algebra=True, seed=True)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("gauge", help="gauge action and equivalence decision")
    p.add_argument("action", choices=["act", "solve"])
    p.add_argument("--xi", required=True, help="first element file")
    p.add_argument("--eta", help="second element file (solve)")
    p.add_argument("--delta", help="gauge parameter file (act)")
    _add_common(p, algebra=True, seed=True, mode=True)
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("catalog", help="list built-in pairs and algebras")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run exact property suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USER_ERRORS as exc:
        print(f"liepair: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
