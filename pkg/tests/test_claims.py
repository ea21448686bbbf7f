"""Claims catalog: coverage, determinism, manifest comparison."""

import pytest

from satnum import claims
from satnum.claims import (
    AuditConfig,
    catalog,
    claim_by_id,
    compare_with_manifest,
    load_manifest,
    run_all,
    run_claim,
)

EXPECTED_CLAIM_IDS = (
    "s-path",
    "s-cycle",
    "s-wheel",
    "lemma-union",
    "prop-2.2-i",
    "prop-2.2-ii-paper",
    "prop-2.2-ii-exact",
    "thm-corona-empty",
    "cor-corona-pn-cn-kbar",
    "thm-corona-path",
    "thm-corona-cycle",
    "prop-k1-sandwich",
    "ex-k1-path",
    "ex-k1-cycle",
    "ex-k1-wheel",
    "prop-kbar-corona",
    "cor-corona-bounds",
    "prop-link-paths",
    "obs-chain-paths",
    "prop-link-cycles-m0",
    "prop-link-cycles-m1-d134",
    "prop-link-cycles-m1-d25",
    "prop-link-cycles-m2-d14",
    "prop-link-cycles-m2-d235",
    "obs-chain-cycles-m0-d1245",
    "obs-chain-cycles-m0-d3",
    "obs-chain-cycles-m1-d15",
    "obs-chain-cycles-m2-d14",
    "obs-chain-cycles-m2-d235",
    "thm-tn",
    "thm-on",
    "fig-captions",
    "ex-link-mixed-cpp",
    "ex-link-mixed-cpc",
    "ex-link-mixed-cpcp",
)


class TestCatalog:
    def test_complete_and_ordered(self):
        assert tuple(c.id for c in catalog()) == EXPECTED_CLAIM_IDS

    def test_every_claim_has_notes(self):
        for c in catalog():
            assert c.notes.strip(), c.id

    def test_kinds(self):
        kinds = {c.id: c.kind for c in catalog()}
        assert kinds["prop-k1-sandwich"] == "bounds"
        assert kinds["cor-corona-bounds"] == "bounds"
        assert kinds["ex-link-mixed-cpp"] == "observation"
        assert kinds["s-path"] == "equality"

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            claim_by_id("nope")


class TestRunClaim:
    def test_cycle_override_ten_rows(self):
        rows = run_claim("s-cycle", overrides={"n": range(3, 13)})
        assert len(rows) == 10
        assert all(r.agree for r in rows)

    def test_paper_rule_has_the_known_counterexample(self):
        rows = run_claim("prop-2.2-ii-paper", overrides={"n": range(3, 15)})
        bad = {(r.params_dict()["n"], r.params_dict()["i"]) for r in rows if r.agree is False}
        assert (14, 4) in bad
        row = next(r for r in rows if r.params_dict() == {"n": 14, "i": 4})
        assert row.formula == 5 and row.exact == 4
        assert row.witness is not None and len(row.witness) == 4

    def test_exact_rule_always_agrees(self):
        rows = run_claim("prop-2.2-ii-exact", overrides={"n": range(3, 19)})
        assert all(r.agree for r in rows)

    def test_unknown_override_name(self):
        with pytest.raises(KeyError):
            run_claim("s-path", overrides={"q": [1]})

    def test_cap_skip_marker(self):
        rows = run_claim("s-path", AuditConfig(caps=claims.SolverCaps(max_n_exact=10)))
        skipped = [r for r in rows if r.skipped]
        assert skipped and all("cap-skipped" in r.skipped for r in skipped)
        assert all(r.params_dict()["n"] > 10 for r in skipped)

    def test_bounds_rows_carry_interval(self):
        rows = run_claim("prop-k1-sandwich", overrides={"g": ["cycle(6)", "path(6)"]})
        for r in rows:
            lo, hi = r.formula
            assert lo <= r.exact <= hi and r.agree
        by_g = {r.params_dict()["g"]: r for r in rows}
        assert by_g["cycle(6)"].exact == 3
        assert by_g["path(6)"].exact == 2


@pytest.fixture(scope="module")
def result():
    return run_all(AuditConfig())


class TestRunAll:
    def test_clean_against_manifest(self, result):
        unexpected, missing = compare_with_manifest(result, load_manifest())
        assert unexpected == [] and missing == []

    def test_byte_identical_reruns(self, result):
        again = run_all(AuditConfig())
        assert result.to_json() == again.to_json()

    def test_parallel_rows_identical(self, result):
        parallel = run_all(AuditConfig(jobs=4))
        assert result.to_json() == parallel.to_json()

    def test_figure_caption_rows(self, result):
        rows = result.rows_for("fig-captions")
        got = {tuple(r.params_dict()[k] for k in ("m", "n", "d")): r.exact for r in rows}
        assert got == {(6, 5, 1): 10, (7, 5, 3): 13, (7, 5, 2): 11, (8, 5, 1): 13}
        assert all(r.agree for r in rows)

    def test_tn_agrees_through_eight(self, result):
        rows = result.rows_for("thm-tn")
        assert [r.params_dict()["n"] for r in rows] == list(range(1, 9))
        assert all(r.agree for r in rows)

    def test_observations_realize_stated_values(self, result):
        for cid in ("ex-link-mixed-cpp", "ex-link-mixed-cpc", "ex-link-mixed-cpcp"):
            rows = result.rows_for(cid)
            assert any(r.agree for r in rows), cid

    def test_observations_not_counted_as_discrepancies(self, result):
        assert all(
            not r.claim_id.startswith("ex-link-mixed") for r in result.discrepancies()
        )

    def test_claim_subset(self):
        res = run_all(AuditConfig(claim_ids=("s-path", "s-cycle")))
        assert res.claim_order == ("s-path", "s-cycle")
        assert res.totals()["disagree"] == 0

    def test_unknown_subset_id(self):
        with pytest.raises(KeyError):
            run_all(AuditConfig(claim_ids=("bogus",)))

    def test_empty_catalog_subset(self):
        res = run_all(AuditConfig(claim_ids=()))
        assert res.totals() == {"rows": 0, "agree": 0, "disagree": 0, "skipped": 0}


class TestManifest:
    def test_packaged_manifest_contents(self):
        entries = load_manifest()
        keys = {(e.claim, dict(e.params).get("n"), dict(e.params).get("i")) for e in entries}
        assert ("prop-2.2-ii-paper", 14, 4) in keys
        assert all(e.reason for e in entries)

    def test_external_manifest(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text('{"entries": []}')
        assert load_manifest(p) == ()

    def test_malformed_manifest(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text('{"nope": 1}')
        from satnum import SatnumError

        with pytest.raises(SatnumError):
            load_manifest(p)

    def test_every_manifest_entry_is_a_true_discrepancy(self):
        # guards against the manifest masking solver regressions
        from satnum import build_family, saturation_bruteforce
        from satnum.formulas import s_chain_cycles, s_path_minus_edge_paper

        for e in load_manifest():
            params = dict(e.params)
            if e.claim == "prop-2.2-ii-paper":
                n, i = params["n"], params["i"]
                g = build_family(f"deledge(path({n}),{i - 1},{i})")
                assert s_path_minus_edge_paper(n, i) != saturation_bruteforce(g)
            elif e.claim == "obs-chain-cycles-m2-d14":
                m, n, d = params["m"], params["n"], params["d"]
                g = build_family(f"chaincyc({m},{n},{d})")
                assert s_chain_cycles(m, n, d) != saturation_bruteforce(g)
            else:
                raise AssertionError(f"unexpected manifest claim {e.claim}")
