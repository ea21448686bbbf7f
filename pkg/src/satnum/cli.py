"""Command-line front end.

Subcommands::

    satnum compute  (--family EXPR | --graph PATH) [options]
    satnum generate EXPR OUT
    satnum audit    [--claim ID ...] [--manifest PATH] [options]

Exit codes: 0 success, 1 audit/manifest mismatch, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import claims, formulas, solver
from .errors import ResourceLimitError, SatnumError
from .families import FamilySpec, build, parse_family
from .graph import Graph, read_edgelist, write_edgelist
from .solver import SolverCaps


def _caps_from_args(args) -> SolverCaps:
    caps = solver.DEFAULT_CAPS
    if getattr(args, "cap_n", None):
        caps = replace(
            caps,
            max_n_exact=args.cap_n,
            max_n_matching=max(caps.max_n_matching, args.cap_n),
        )
    if getattr(args, "cap_edges", None):
        caps = replace(caps, max_edges_brute=args.cap_edges)
    return caps


def _link_cycle_claim_id(m: int, d: int) -> str:
    r = m % 3
    if r == 0:
        return "prop-link-cycles-m0"
    if r == 1:
        return "prop-link-cycles-m1-d134" if d in (1, 3, 4) else "prop-link-cycles-m1-d25"
    return "prop-link-cycles-m2-d14" if d in (1, 4) else "prop-link-cycles-m2-d235"


def _chain_cycle_claim_id(m: int, d: int) -> str:
    r = m % 3
    if r == 0:
        return "obs-chain-cycles-m0-d3" if d == 3 else "obs-chain-cycles-m0-d1245"
    if r == 1:
        return "obs-chain-cycles-m1-d15"
    return "obs-chain-cycles-m2-d14" if d in (1, 4) else "obs-chain-cycles-m2-d235"


def formula_for_spec(
    spec: FamilySpec, caps: SolverCaps, backend: str | None
) -> tuple[str, int] | None:
    """Closed form matching the expression, as (claim id, value), or None."""
    name, args = spec.name, spec.args
    try:
        if name == "path":
            return "s-path", formulas.s_path(args[0])
        if name == "cycle":
            return "s-cycle", formulas.s_cycle(args[0])
        if name == "wheel" and args[0] >= 4:
            return "s-wheel", formulas.s_wheel(args[0])
        if name == "tri":
            return "thm-tn", formulas.s_tri(args[0])
        if name == "sq":
            return "thm-on", formulas.s_sq(args[0])
        if name == "linkpath":
            return "prop-link-paths", formulas.s_link_paths(args[0], args[1])
        if name == "chainpath":
            return "obs-chain-paths", formulas.s_chain_paths(args[0], args[1])
        if name in ("linkcyc", "chaincyc"):
            m, k, d = args
            if k == 1:
                # a one-block link/chain is the bare cycle; the chain case rows
                # are wrong there (see the expected-discrepancy manifest)
                return "s-cycle", formulas.s_cycle(m)
            if name == "linkcyc":
                return _link_cycle_claim_id(m, d), formulas.s_link_cycles(m, k, d)
            return _chain_cycle_claim_id(m, d), formulas.s_chain_cycles(m, k, d)
        if name == "union":
            left = formula_for_spec(args[0], caps, backend)
            right = formula_for_spec(args[1], caps, backend)
            if left and right:
                return "lemma-union", left[1] + right[1]
            return None
        if name == "corona":
            core, sat = args
            if sat.name in ("empty", "path", "cycle"):
                stats = formulas.CoronaStats.from_graph(build(core), caps, backend)
                if sat.name == "empty":
                    return "thm-corona-empty", formulas.s_corona_empty(stats, sat.args[0])
                if sat.name == "path":
                    return "thm-corona-path", formulas.s_corona_path(stats, sat.args[0])
                return "thm-corona-cycle", formulas.s_corona_cycle(stats, sat.args[0])
            if core.name == "empty":
                cone = FamilySpec("corona", (FamilySpec("complete", (1,)), sat))
                inner = solver.saturation_exact(build(cone), caps, backend).value
                return "prop-kbar-corona", formulas.s_kbar_corona(core.args[0], inner)
            return None
        if name == "deledge":
            base, u, v = args
            if base.name == "path" and abs(u - v) == 1:
                i = min(u, v) + 1
                return "prop-2.2-ii-exact", formulas.s_path_minus_edge_exact(base.args[0], i)
            if base.name == "cycle":
                return "prop-2.2-i", formulas.s_cycle_minus_edge(base.args[0])
            return None
    except (formulas.DomainError, formulas.UnsupportedParameterError):
        return None
    return None


def _compute_report(
    g: Graph, s_value: int, witness, method: str, caps: SolverCaps, backend
) -> dict:
    alpha_prime, _ = solver.matching_number(g, caps, backend)
    alpha = (
        solver.independence_number(g, caps, backend)
        if g.n <= caps.max_n_independence
        else None
    )
    from fractions import Fraction

    return {
        "n": g.n,
        "edge_count": g.edge_count,
        "saturation": s_value,
        "matching_number": alpha_prime,
        "unsaturated": g.n - 2 * alpha_prime,
        "bounds": {
            "half_alpha_prime": str(Fraction(alpha_prime, 2)),
            "independence": None if alpha is None else str(Fraction(g.n - alpha, 2)),
        },
        "witness": None if witness is None else [list(e) for e in witness.edge_list()],
        "method": method,
    }


def _print_compute(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    print(f"n: {report['n']}   edges: {report['edge_count']}")
    print(f"saturation: {report['saturation']}")
    print(
        f"matching number: {report['matching_number']}   "
        f"unsaturated: {report['unsaturated']}"
    )
    b = report["bounds"]
    indep = b["independence"] if b["independence"] is not None else "n/a"
    print(f"lower bounds: alpha'/2 = {b['half_alpha_prime']}, (n - alpha)/2 = {indep}")
    if report["witness"] is None:
        print("witness: n/a")
    else:
        print("witness:", " ".join(f"({u},{v})" for u, v in report["witness"]))
    print(f"method: {report['method']}")


def cmd_compute(args) -> int:
    caps = _caps_from_args(args)
    backend = args.backend
    spec = None
    if args.family is not None:
        spec = parse_family(args.family)
        g = build(spec)
    else:
        g = read_edgelist(args.graph)

    method = args.method
    if method in ("auto", "formula"):
        hit = formula_for_spec(spec, caps, backend) if spec is not None else None
        if hit is not None:
            claim_id, value = hit
            report = _compute_report(g, value, None, f"formula({claim_id})", caps, backend)
            _print_compute(report, args.format)
            return 0
        if method == "formula":
            what = args.family if args.family is not None else "an edge-list input"
            raise SatnumError(f"no closed form applies to {what}")
        method = "exact"

    if method == "exact":
        result = solver.saturation_exact(g, caps, backend)
        report = _compute_report(g, result.value, result.witness, "exact", caps, backend)
    else:
        value = solver.saturation_bruteforce(g, caps)
        report = _compute_report(g, value, None, "brute_force", caps, backend)
    _print_compute(report, args.format)
    return 0


def cmd_generate(args) -> int:
    g = build(parse_family(args.family))
    write_edgelist(g, args.out)
    return 0


def cmd_audit(args) -> int:
    config = claims.AuditConfig(
        caps=_caps_from_args(args),
        backend=args.backend,
        jobs=args.jobs,
        seed=args.seed,
        claim_ids=tuple(args.claim) if args.claim else None,
    )
    try:
        result = claims.run_all(config)
    except KeyError as exc:
        raise SatnumError(str(exc)) from exc
    entries = claims.load_manifest(args.manifest)
    if config.claim_ids is not None:
        entries = tuple(e for e in entries if e.claim in config.claim_ids)
    unexpected, missing = claims.compare_with_manifest(result, entries)
    ok = not unexpected and not missing

    if args.format == "json":
        doc = result.to_json_dict()
        doc["manifest"] = {
            "ok": ok,
            "unexpected": [
                {"claim": r.claim_id, "params": r.params_dict()} for r in unexpected
            ],
            "missing": [
                {"claim": e.claim, "params": dict(e.params)} for e in missing
            ],
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        doc = result.to_json_dict()
        for entry in doc["claims"]:
            t = entry["totals"]
            print(
                f"{entry['id']:32s} kind={entry['kind']:11s} "
                f"agree={t['agree']:4d} disagree={t['disagree']:3d} "
                f"skipped={t['skipped']:3d}"
            )
        t = doc["summary"]
        print(
            f"total: rows={t['rows']} agree={t['agree']} "
            f"disagree={t['disagree']} skipped={t['skipped']}"
        )
        for row in result.discrepancies():
            p = ", ".join(f"{k}={v}" for k, v in row.params)
            print(f"  counterexample {row.claim_id}({p}): formula={row.formula} exact={row.exact}")
        if ok:
            print("manifest: clean (observed discrepancies match expectations)")
        else:
            for r in unexpected:
                p = ", ".join(f"{k}={v}" for k, v in r.params)
                print(f"manifest: UNEXPECTED {r.claim_id}({p}) formula={r.formula} exact={r.exact}")
            for e in missing:
                p = ", ".join(f"{k}={v}" for k, v in e.params)
                print(f"manifest: MISSING {e.claim}({p}) (expected but not observed)")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satnum",
        description="Saturation numbers: exact solver, family formulas, claims audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap-n", type=int, default=None, metavar="INT",
                       help="exact-solver vertex cap (default 32)")
        p.add_argument("--cap-edges", type=int, default=None, metavar="INT",
                       help="brute-force edge cap (default 24)")
        p.add_argument("--backend", choices=("numba", "python"), default=None,
                       help="kernel backend (default: numba when available)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized generation (reserved)")

    p = sub.add_parser("compute", help="compute s(G) for a family expression or edge list")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", metavar="EXPR", help="family expression, e.g. 'corona(cycle(4),path(3))'")
    src.add_argument("--graph", metavar="PATH", help="edge-list file")
    p.add_argument("--method", choices=("auto", "exact", "brute", "formula"), default="auto")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a family instance as an edge-list file")
    p.add_argument("family", metavar="EXPR")
    p.add_argument("out", metavar="OUT")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("audit", help="sweep the claims catalog against the exact solver")
    p.add_argument("--claim", action="append", metavar="ID",
                   help="restrict to one claim id (repeatable)")
    p.add_argument("--manifest", default=None, metavar="PATH",
                   help="expected-discrepancy manifest (default: packaged)")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="parallel row evaluations per claim")
    common(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SatnumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
