"""Catalog of closed-form claims, audited row by row against the exact solver.

Each claim binds an instance builder to a formula and sweeps a parameter
range.  Disagreement is data, not failure: the audit reports every row, and
a checked-in manifest of expected discrepancies decides whether an audit run
is clean.  ``observation`` claims explore families with unspecified
attachment choices; their rows are informational and never counted against
the manifest.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from importlib import resources
from typing import Callable, Iterable, Iterator, Mapping

from . import formulas, solver
from .errors import SatnumError
from .families import build, parse_family
from .graph import Graph, link
from .solver import DEFAULT_CAPS, SolverCaps

ParamValue = int | str
Params = tuple[tuple[str, ParamValue], ...]
FormulaValue = int | tuple[int, int]

#: core graphs used by the corona claims
CORE_GRAPHS = (
    "path(2)", "path(3)", "path(4)", "path(5)", "path(6)",
    "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)",
    "complete(1)", "empty(2)", "empty(3)",
)

FIGURE_VALUES = {(6, 5, 1): 10, (7, 5, 3): 13, (7, 5, 2): 11, (8, 5, 1): 13}


@dataclass(frozen=True)
class AuditConfig:
    """Knobs for an audit run; defaults fit a laptop-scale sweep."""

    caps: SolverCaps = DEFAULT_CAPS
    backend: str | None = None
    jobs: int = 1
    seed: int = 0  # reserved for randomized claims; the stock catalog has none
    claim_ids: tuple[str, ...] | None = None


@dataclass(frozen=True)
class ClaimRow:
    claim_id: str
    params: Params
    formula: FormulaValue | None
    exact: int | None
    agree: bool | None
    skipped: str | None = None
    witness: tuple[tuple[int, int], ...] | None = None

    def params_dict(self) -> dict[str, ParamValue]:
        return dict(self.params)

    def to_json_dict(self) -> dict:
        f = list(self.formula) if isinstance(self.formula, tuple) else self.formula
        return {
            "params": self.params_dict(),
            "formula": f,
            "exact": self.exact,
            "agree": self.agree,
            "skipped": self.skipped,
        }


class _AuditContext:
    """Memoized solver access shared by a claim's rows."""

    def __init__(self, config: AuditConfig, caps: SolverCaps):
        self.config = config
        self.caps = caps
        self._sat: dict[str, int] = {}
        self._stats: dict[str, formulas.CoronaStats] = {}

    def saturation(self, expr: str) -> int:
        if expr not in self._sat:
            g = build(parse_family(expr))
            self._sat[expr] = solver.saturation_exact(
                g, self.caps, self.config.backend
            ).value
        return self._sat[expr]

    def stats(self, expr: str) -> formulas.CoronaStats:
        if expr not in self._stats:
            g = build(parse_family(expr))
            self._stats[expr] = formulas.CoronaStats.from_graph(
                g, self.caps, self.config.backend
            )
        return self._stats[expr]


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # "equality" | "bounds" | "observation"
    notes: str
    param_names: tuple[str, ...]
    default_ranges: Mapping[str, tuple]
    assignments: Callable[[Mapping[str, tuple]], Iterator[dict]]
    instance: Callable[[dict], Graph]
    formula: Callable[[dict, _AuditContext], FormulaValue]
    min_exact_cap: int = 0


def _product(param_names, ranges, keep=None) -> Iterator[dict]:
    def rec(i, acc):
        if i == len(param_names):
            if keep is None or keep(acc):
                yield dict(acc)
            return
        name = param_names[i]
        for v in ranges[name]:
            acc[name] = v
            yield from rec(i + 1, acc)
        acc.pop(name, None)

    yield from rec(0, {})


def _expr(template: str, params: dict) -> Graph:
    return build(parse_family(template.format(**params)))


def _edge_index_assignments(ranges) -> Iterator[dict]:
    i_filter = set(ranges["i"]) if "i" in ranges else None
    for n in ranges["n"]:
        for i in range(1, n):
            if i_filter is None or i in i_filter:
                yield {"n": n, "i": i}


def _cycle_parts_assignments(pairs: tuple[tuple[int, int], ...]):
    def gen(ranges) -> Iterator[dict]:
        md = set(ranges.get("m", ())) if "m" in ranges else None
        dd = set(ranges.get("d", ())) if "d" in ranges else None
        for m, d in pairs:
            if md is not None and m not in md:
                continue
            if dd is not None and d not in dd:
                continue
            for n in ranges["n"]:
                yield {"m": m, "n": n, "d": d}

    return gen


def _claim(id, kind, notes, param_names, default_ranges, instance, formula,
           assignments=None, min_exact_cap=0) -> Claim:
    if assignments is None:
        names = tuple(param_names)

        def assignments(ranges, _names=names):
            return _product(_names, ranges)

    return Claim(
        id=id,
        kind=kind,
        notes=notes,
        param_names=tuple(param_names),
        default_ranges=dict(default_ranges),
        assignments=assignments,
        instance=instance,
        formula=formula,
        min_exact_cap=min_exact_cap,
    )


def _mixed_link_instance(blocks: tuple[str, ...]):
    """Builder for a fixed block sequence with attach vertices as params.

    Cycle blocks are taken up to rotation: a lone used anchor sits at 0, a
    used pair sits at (0, d).  Path anchors are swept literally.
    """

    def make(params: dict) -> Graph:
        parts = []
        for idx, kind in enumerate(blocks):
            g = build(parse_family(kind))
            first, last = idx == 0, idx == len(blocks) - 1
            if kind.startswith("cycle"):
                if first:
                    x, y = 0, 0
                elif last:
                    x, y = params.get(f"x{idx + 1}", 0), 0
                else:
                    x, y = 0, params[f"d{idx + 1}"]
            else:
                x = 0 if first else params[f"x{idx + 1}"]
                y = 0 if last else params[f"y{idx + 1}"]
            parts.append((g, x, y))
        return link(parts)

    return make


def _catalog() -> tuple[Claim, ...]:
    claims: list[Claim] = []
    add = claims.append

    add(_claim(
        "s-path", "equality",
        "closed form for the saturation number of a path",
        ("n",), {"n": tuple(range(1, 19))},
        lambda p: _expr("path({n})", p),
        lambda p, ctx: formulas.s_path(p["n"]),
    ))
    add(_claim(
        "s-cycle", "equality",
        "closed form for the saturation number of a cycle",
        ("n",), {"n": tuple(range(3, 19))},
        lambda p: _expr("cycle({n})", p),
        lambda p, ctx: formulas.s_cycle(p["n"]),
    ))
    add(_claim(
        "s-wheel", "equality",
        "wheel value via the path closed form on the rim minus a dominated stretch",
        ("n",), {"n": tuple(range(4, 15))},
        lambda p: _expr("wheel({n})", p),
        lambda p, ctx: formulas.s_wheel(p["n"]),
    ))
    add(_claim(
        "lemma-union", "equality",
        "saturation is additive over disjoint unions (path + cycle sweep)",
        ("n1", "n2"), {"n1": tuple(range(1, 9)), "n2": tuple(range(3, 9))},
        lambda p: _expr("union(path({n1}),cycle({n2}))", p),
        lambda p, ctx: formulas.s_path(p["n1"]) + formulas.s_cycle(p["n2"]),
    ))
    add(_claim(
        "prop-2.2-i", "equality",
        "deleting any cycle edge leaves a path with the path value",
        ("n",), {"n": tuple(range(3, 15))},
        lambda p: _expr("deledge(cycle({n}),0,1)", p),
        lambda p, ctx: formulas.s_cycle_minus_edge(p["n"]),
    ))
    add(_claim(
        "prop-2.2-ii-paper", "equality",
        "published three-case rule for deleting the i-th path edge; its case "
        "table is incomplete and the manifest lists the counterexamples",
        ("n", "i"), {"n": tuple(range(3, 15))},
        lambda p: _expr("deledge(path({n}),{u},{i})", {**p, "u": p["i"] - 1}),
        lambda p, ctx: formulas.s_path_minus_edge_paper(p["n"], p["i"]),
        assignments=_edge_index_assignments,
    ))
    add(_claim(
        "prop-2.2-ii-exact", "equality",
        "split decomposition for deleting the i-th path edge (ground truth)",
        ("n", "i"), {"n": tuple(range(3, 19))},
        lambda p: _expr("deledge(path({n}),{u},{i})", {**p, "u": p["i"] - 1}),
        lambda p, ctx: formulas.s_path_minus_edge_exact(p["n"], p["i"]),
        assignments=_edge_index_assignments,
    ))
    add(_claim(
        "thm-corona-empty", "equality",
        "corona with edgeless satellites: matching number plus unmatched count, "
        "independent of the satellite order",
        ("g", "m"), {"g": CORE_GRAPHS, "m": (1, 2, 3, 4)},
        lambda p: _expr("corona({g},empty({m}))", p),
        lambda p, ctx: formulas.s_corona_empty(ctx.stats(p["g"]), p["m"]),
    ))
    add(_claim(
        "cor-corona-pn-cn-kbar", "equality",
        "paths and cycles with edgeless satellites reach ceil(n/2)",
        ("base", "n", "m"),
        {"base": ("path", "cycle"), "n": (3, 4, 5, 6), "m": (3, 4, 5)},
        lambda p: _expr("corona({base}({n}),empty({m}))", p),
        lambda p, ctx: -(-p["n"] // 2),
    ))
    add(_claim(
        "thm-corona-path", "equality",
        "corona with path satellites: n*s_path(m) plus a correction when "
        "m = 1 mod 3",
        ("g", "m"), {"g": CORE_GRAPHS, "m": (1, 2, 3, 4, 5, 6)},
        lambda p: _expr("corona({g},path({m}))", p),
        lambda p, ctx: formulas.s_corona_path(ctx.stats(p["g"]), p["m"]),
    ))
    add(_claim(
        "thm-corona-cycle", "equality",
        "corona with cycle satellites: n*s_cycle(m) plus a correction when "
        "m = 0 mod 3",
        ("g", "m"), {"g": CORE_GRAPHS, "m": (3, 4, 5, 6)},
        lambda p: _expr("corona({g},cycle({m}))", p),
        lambda p, ctx: formulas.s_corona_cycle(ctx.stats(p["g"]), p["m"]),
    ))
    add(_claim(
        "prop-k1-sandwich", "bounds",
        "single-vertex core sandwich: s(G) <= s(K1 corona G) <= 1 + s(G)",
        ("g",), {"g": CORE_GRAPHS + ("wheel(4)", "wheel(5)", "wheel(6)")},
        lambda p: _expr("corona(complete(1),{g})", p),
        lambda p, ctx: formulas.s_k1_corona_bounds(ctx.saturation(p["g"])),
    ))
    add(_claim(
        "ex-k1-path", "equality",
        "single-vertex core over a path: exact two-case rule",
        ("n",), {"n": tuple(range(1, 11))},
        lambda p: _expr("corona(complete(1),path({n}))", p),
        lambda p, ctx: formulas.s_k1_corona_path(p["n"]),
    ))
    add(_claim(
        "ex-k1-cycle", "equality",
        "single-vertex core over a cycle: exact two-case rule",
        ("n",), {"n": tuple(range(3, 11))},
        lambda p: _expr("corona(complete(1),cycle({n}))", p),
        lambda p, ctx: formulas.s_k1_corona_cycle(p["n"]),
    ))
    add(_claim(
        "ex-k1-wheel", "equality",
        "single-vertex core over a wheel: exact two-case rule",
        ("n",), {"n": tuple(range(4, 11))},
        lambda p: _expr("corona(complete(1),wheel({n}))", p),
        lambda p, ctx: formulas.s_k1_corona_wheel(p["n"]),
    ))
    add(_claim(
        "prop-kbar-corona", "equality",
        "edgeless core splits into disjoint single-vertex coronas",
        ("g", "m"), {"g": CORE_GRAPHS, "m": (1, 2, 3)},
        lambda p: _expr("corona(empty({m}),{g})", p),
        lambda p, ctx: formulas.s_kbar_corona(
            p["m"], ctx.saturation(f"corona(complete(1),{p['g']})")
        ),
    ))
    add(_claim(
        "cor-corona-bounds", "bounds",
        "general corona sandwich between n*s(G2) and n*s(G2) + alpha' + l",
        ("g1", "g2"),
        {"g1": ("complete(1)", "path(2)", "path(3)", "cycle(4)"),
         "g2": ("path(2)", "path(3)", "path(4)", "cycle(3)", "cycle(4)")},
        lambda p: _expr("corona({g1},{g2})", p),
        lambda p, ctx: formulas.corona_bounds(
            ctx.stats(p["g1"]).n,
            ctx.saturation(p["g2"]),
            ctx.stats(p["g1"]).alpha_prime,
            ctx.stats(p["g1"]).l,
        ),
    ))
    add(_claim(
        "prop-link-paths", "equality",
        "link of n order-m paths (equals a single path of order m*n)",
        ("m", "n"), {"m": tuple(range(1, 7)), "n": tuple(range(1, 7))},
        lambda p: _expr("linkpath({m},{n})", p),
        lambda p, ctx: formulas.s_link_paths(p["m"], p["n"]),
        assignments=lambda r: _product(("m", "n"), r, keep=lambda a: a["m"] * a["n"] <= 18),
    ))
    add(_claim(
        "obs-chain-paths", "equality",
        "chain of n order-m paths (equals a single path of order n(m-1)+1)",
        ("m", "n"), {"m": tuple(range(2, 7)), "n": tuple(range(1, 7))},
        lambda p: _expr("chainpath({m},{n})", p),
        lambda p, ctx: formulas.s_chain_paths(p["m"], p["n"]),
        assignments=lambda r: _product(("m", "n"), r, keep=lambda a: a["n"] * (a["m"] - 1) + 1 <= 18),
    ))

    link_inst = lambda p: _expr("linkcyc({m},{n},{d})", p)
    link_form = lambda p, ctx: formulas.s_link_cycles(p["m"], p["n"], p["d"])
    chain_inst = lambda p: _expr("chaincyc({m},{n},{d})", p)
    chain_form = lambda p, ctx: formulas.s_chain_cycles(p["m"], p["n"], p["d"])
    nrange = {"n": (1, 2, 3)}
    for cid, pairs, notes in (
        ("prop-link-cycles-m0", ((3, 1), (6, 1), (6, 2), (6, 3)),
         "linked cycles, order divisible by 3: no correction for d <= 5"),
        ("prop-link-cycles-m1-d134", ((4, 1), (7, 1), (7, 3)),
         "linked cycles, order 1 mod 3, d in {1,3,4} (a printed typo '3.4' is "
         "read as 3,4): subtract floor(n/2)"),
        ("prop-link-cycles-m1-d25", ((4, 2), (7, 2)),
         "linked cycles, order 1 mod 3, d in {2,5}: subtract n-1"),
        ("prop-link-cycles-m2-d14", ((5, 1), (8, 1), (8, 4)),
         "linked cycles, order 2 mod 3, d in {1,4}: subtract ceil((n-1)/3)"),
        ("prop-link-cycles-m2-d235", ((5, 2), (8, 2), (8, 3)),
         "linked cycles, order 2 mod 3, d in {2,3,5}: subtract floor(n/2)"),
    ):
        add(_claim(cid, "equality", notes, ("m", "n", "d"), nrange,
                   link_inst, link_form,
                   assignments=_cycle_parts_assignments(pairs)))
    for cid, pairs, notes in (
        ("obs-chain-cycles-m0-d1245", ((3, 1), (6, 1), (6, 2)),
         "chained cycles, order divisible by 3, d in {1,2,4,5}: subtract "
         "floor((n-1)/2)"),
        ("obs-chain-cycles-m0-d3", ((6, 3),),
         "chained cycles, order divisible by 3, d = 3: no correction"),
        ("obs-chain-cycles-m1-d15", ((4, 1), (4, 2), (7, 1), (7, 2), (7, 3)),
         "chained cycles, order 1 mod 3: subtract n-1 for d <= 5"),
        ("obs-chain-cycles-m2-d14", ((5, 1), (8, 1), (8, 4)),
         "chained cycles, order 2 mod 3, d in {1,4}: subtract ceil(n/2); the "
         "one-block case degenerates to the bare cycle and the manifest "
         "carries those rows"),
        ("obs-chain-cycles-m2-d235", ((5, 2), (8, 2), (8, 3)),
         "chained cycles, order 2 mod 3, d in {2,3,5}: subtract n-1"),
    ):
        add(_claim(cid, "equality", notes, ("m", "n", "d"), nrange,
                   chain_inst, chain_form,
                   assignments=_cycle_parts_assignments(pairs)))

    add(_claim(
        "thm-tn", "equality",
        "chain of n triangles: floor((n-2)/2) + 2",
        ("n",), {"n": tuple(range(1, 9))},
        lambda p: _expr("tri({n})", p),
        lambda p, ctx: formulas.s_tri(p["n"]),
    ))
    add(_claim(
        "thm-on", "equality",
        "chain of n squares attached at opposite vertices: n + 1",
        ("n",), {"n": tuple(range(1, 7))},
        lambda p: _expr("sq({n})", p),
        lambda p, ctx: formulas.s_sq(p["n"]),
    ))
    add(_claim(
        "fig-captions", "equality",
        "the four drawn five-block linked-cycle instances and their stated "
        "values (10, 13, 11, 13)",
        ("m", "n", "d"), {"n": (5,)},
        lambda p: _expr("linkcyc({m},{n},{d})", p),
        lambda p, ctx: FIGURE_VALUES[(p["m"], p["n"], p["d"])],
        assignments=_cycle_parts_assignments(((6, 1), (7, 3), (7, 2), (8, 1))),
        min_exact_cap=40,
    ))

    add(_claim(
        "ex-link-mixed-cpp", "observation",
        "three-block mixed link (cycle, path, path): stated value 5 = 2+2+1; "
        "attachment vertices are unspecified, so all inequivalent choices are "
        "solved and rows record which realize it (lone cycle anchors sit at 0 "
        "up to rotation)",
        ("x2", "y2", "x3"),
        {"x2": tuple(range(5)), "y2": tuple(range(5)), "x3": tuple(range(4))},
        _mixed_link_instance(("cycle(4)", "path(5)", "path(4)")),
        lambda p, ctx: 5,
    ))
    add(_claim(
        "ex-link-mixed-cpc", "observation",
        "three-block mixed link (cycle, path, cycle): stated value 5 = 2+2+2-1",
        ("x2", "y2"), {"x2": tuple(range(5)), "y2": tuple(range(5))},
        _mixed_link_instance(("cycle(4)", "path(5)", "cycle(4)")),
        lambda p, ctx: 5,
    ))
    add(_claim(
        "ex-link-mixed-cpcp", "observation",
        "four-block mixed link (cycle, path, cycle, path): stated value "
        "6 = 2+2+2+2-2; interior cycle anchors sit at (0, d3) up to rotation",
        ("x2", "y2", "d3", "x4"),
        {"x2": tuple(range(5)), "y2": tuple(range(5)), "d3": (0, 1, 2),
         "x4": tuple(range(5))},
        _mixed_link_instance(("cycle(4)", "path(5)", "cycle(4)", "path(5)")),
        lambda p, ctx: 6,
    ))

    return tuple(claims)


_CATALOG: tuple[Claim, ...] | None = None


def catalog() -> tuple[Claim, ...]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _catalog()
    return _CATALOG


def claim_by_id(claim_id: str) -> Claim:
    for c in catalog():
        if c.id == claim_id:
            return c
    raise KeyError(f"unknown claim id {claim_id!r}")


# ---------------------------------------------------------------------------
# engine


def _effective_caps(claim: Claim, config: AuditConfig) -> SolverCaps:
    if claim.min_exact_cap > config.caps.max_n_exact:
        caps = replace(config.caps, max_n_exact=claim.min_exact_cap)
        if caps.max_n_matching < caps.max_n_exact:
            caps = replace(caps, max_n_matching=caps.max_n_exact)
        return caps
    return config.caps


def _evaluate_row(claim: Claim, params: dict, ctx: _AuditContext) -> ClaimRow:
    key = tuple((name, params[name]) for name in claim.param_names)
    g = claim.instance(params)
    if g.n > ctx.caps.max_n_exact:
        return ClaimRow(claim.id, key, None, None, None,
                        skipped=f"cap-skipped: n={g.n} > {ctx.caps.max_n_exact}")
    result = solver.saturation_exact(g, ctx.caps, ctx.config.backend)
    value = claim.formula(params, ctx)
    if isinstance(value, tuple):
        agree = value[0] <= result.value <= value[1]
    else:
        agree = value == result.value
    witness = None if agree else result.witness.edge_list()
    return ClaimRow(claim.id, key, value, result.value, agree, witness=witness)


def run_claim(
    claim_id: str | Claim,
    config: AuditConfig = AuditConfig(),
    overrides: Mapping[str, Iterable[int | str]] | None = None,
) -> list[ClaimRow]:
    """Evaluate one claim over its (possibly overridden) parameter ranges.

    Rows come back sorted by parameter tuple regardless of execution order.
    """
    claim = claim_by_id(claim_id) if isinstance(claim_id, str) else claim_id
    ranges = {k: tuple(v) for k, v in claim.default_ranges.items()}
    if overrides:
        for name, values in overrides.items():
            if name not in claim.param_names:
                raise KeyError(f"claim {claim.id!r} has no parameter {name!r}")
            ranges[name] = tuple(values)
    ctx = _AuditContext(config, _effective_caps(claim, config))
    assignments = list(claim.assignments(ranges))
    if config.jobs > 1 and len(assignments) > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(lambda p: _evaluate_row(claim, p, ctx), assignments))
    else:
        rows = [_evaluate_row(claim, p, ctx) for p in assignments]
    rows.sort(key=lambda r: tuple(v for _, v in r.params))
    return rows


@dataclass
class AuditResult:
    rows: tuple[ClaimRow, ...]
    claim_order: tuple[str, ...]

    def rows_for(self, claim_id: str) -> list[ClaimRow]:
        return [r for r in self.rows if r.claim_id == claim_id]

    def totals(self) -> dict[str, int]:
        agree = sum(1 for r in self.rows if r.agree is True)
        disagree = sum(1 for r in self.rows if r.agree is False)
        skipped = sum(1 for r in self.rows if r.skipped is not None)
        return {"rows": len(self.rows), "agree": agree,
                "disagree": disagree, "skipped": skipped}

    def discrepancies(self) -> list[ClaimRow]:
        """Disagreeing rows that count against the manifest (observation
        claims are exploratory and excluded)."""
        kinds = {c.id: c.kind for c in catalog()}
        return [
            r for r in self.rows
            if r.agree is False and kinds.get(r.claim_id) != "observation"
        ]

    def to_json_dict(self) -> dict:
        by_claim: dict[str, list[ClaimRow]] = {cid: [] for cid in self.claim_order}
        for r in self.rows:
            by_claim.setdefault(r.claim_id, []).append(r)
        claims_json = []
        meta = {c.id: c for c in catalog()}
        for cid in self.claim_order:
            rows = by_claim.get(cid, [])
            claims_json.append({
                "id": cid,
                "kind": meta[cid].kind if cid in meta else "equality",
                "notes": meta[cid].notes if cid in meta else "",
                "totals": {
                    "agree": sum(1 for r in rows if r.agree is True),
                    "disagree": sum(1 for r in rows if r.agree is False),
                    "skipped": sum(1 for r in rows if r.skipped is not None),
                },
                "rows": [r.to_json_dict() for r in rows],
            })
        return {"claims": claims_json, "summary": self.totals()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def run_all(config: AuditConfig = AuditConfig()) -> AuditResult:
    """Run every claim (or the configured subset) and aggregate the rows."""
    selected = catalog()
    if config.claim_ids is not None:
        wanted = set(config.claim_ids)
        unknown = wanted - {c.id for c in selected}
        if unknown:
            raise KeyError(f"unknown claim id(s): {sorted(unknown)}")
        selected = tuple(c for c in selected if c.id in wanted)
    rows: list[ClaimRow] = []
    for claim in selected:
        rows.extend(run_claim(claim, config))
    return AuditResult(tuple(rows), tuple(c.id for c in selected))


# ---------------------------------------------------------------------------
# expected-discrepancy manifest


@dataclass(frozen=True)
class ManifestEntry:
    claim: str
    params: Params
    reason: str

    def key(self) -> tuple:
        return (self.claim, self.params)


def _row_key(row: ClaimRow) -> tuple:
    return (row.claim_id, row.params)


def load_manifest(path=None) -> tuple[ManifestEntry, ...]:
    """Load the expected-discrepancy manifest (packaged default)."""
    if path is None:
        text = (
            resources.files("satnum")
            .joinpath("data/expected_discrepancies.json")
            .read_text(encoding="utf-8")
        )
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
        entries = []
        for item in doc["entries"]:
            params = tuple(sorted(item["params"].items()))
            entries.append(ManifestEntry(item["claim"], params, item.get("reason", "")))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise SatnumError(f"malformed manifest: {exc}") from exc
    return tuple(entries)


def compare_with_manifest(
    result: AuditResult, entries: tuple[ManifestEntry, ...]
) -> tuple[list[ClaimRow], list[ManifestEntry]]:
    """Return (unexpected discrepancies, manifest entries not observed).

    The audit is clean exactly when both lists are empty.
    """
    observed: dict[tuple, ClaimRow] = {}
    for row in result.discrepancies():
        observed[(row.claim_id, tuple(sorted(row.params)))] = row
    expected = {e.key(): e for e in entries}
    unexpected = [row for key, row in sorted(observed.items()) if key not in expected]
    missing = [e for key, e in sorted(expected.items()) if key not in observed]
    return unexpected, missing
