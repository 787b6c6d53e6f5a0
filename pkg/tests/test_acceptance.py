"""Acceptance gate: one test per criterion, each at its stated tolerance.

Criteria 1-3 share a single standard sweep (5 families, p in {1,2,3}, all
multi-indices with |n| <= 5, 25 seeded random parameter draws per (family, p),
identity permutation plus extra permutations, 3 at p = 3).  Every exact
criterion uses tolerance 0 (exact rational equality); the float criteria pin
the stated tolerances.  Run with ``pytest -v -s tests/test_acceptance.py`` to
see one pass/fail line per criterion.
"""

import time

import pytest

from mopoly import verify

SWEEP_SEED = 2026
_STATE = {}


def _line(number, ok, text):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {text}")


@pytest.fixture(scope="module")
def oracle_sweep():
    if "sweep" not in _STATE:
        t0 = time.time()
        report = verify.run_closed_vs_oracle("standard", seed=SWEEP_SEED)
        report["elapsed_seconds"] = time.time() - t0
        _STATE["sweep"] = report
    return _STATE["sweep"]


def test_criterion_1_type2_exact_equivalence(oracle_sweep):
    mism = [m for f in oracle_sweep["families"].values()
            for m in f["mismatches"] if m["check"] == "type2"]
    counts = {f: s["type2"] for f, s in oracle_sweep["families"].items()}
    ok = not mism and all(c >= 25 * (6 + 21 + 56) for c in counts.values())
    _line(1, ok, f"type II closed form == oracle exactly; comparisons {counts}, "
                 f"sweep took {oracle_sweep['elapsed_seconds']:.0f}s (< 300s "
                 f"required: {oracle_sweep['elapsed_seconds'] < 300})")
    assert not mism, mism[:5]
    assert all(c >= 25 * (6 + 21 + 56) for c in counts.values())
    assert oracle_sweep["elapsed_seconds"] < 300


def test_criterion_2_type1_exact_equivalence(oracle_sweep):
    mism = [m for f in oracle_sweep["families"].values()
            for m in f["mismatches"] if m["check"] == "type1"]
    adj = oracle_sweep["adjudications"]
    prefactor_records = [r for r in adj if "prefactor" in r["question"]]
    ok = (not mism and len(prefactor_records) == 2
          and all(r["verdict"] == "boxed formula confirmed" for r in prefactor_records))
    _line(2, ok, "type I mass-normalized closed forms == oracle exactly; "
                 f"adjudication records emitted: "
                 f"{[r['verdict'] for r in prefactor_records]}")
    assert not mism, mism[:5]
    assert len(prefactor_records) == 2
    for rec in prefactor_records:
        assert rec["verdict"] == "boxed formula confirmed"
        assert rec["boxed_matches_oracle"] and not rec["display_variant_matches_oracle"]


def test_criterion_3_recurrence_exact_equivalence(oracle_sweep):
    mism = [m for f in oracle_sweep["families"].values()
            for m in f["mismatches"] if m["check"].startswith("recurrence")]
    counts = {f: (s["recurrence"], s["recurrence_identity"])
              for f, s in oracle_sweep["families"].items()}
    ok = not mism and all(a > 0 and b > 0 for a, b in counts.values())
    _line(3, ok, "nnrc == oracle_nnrc exactly (>= 3 permutations at p = 3) and "
                 f"the type II relation residual is the zero polynomial; "
                 f"(coefficient, identity) trial counts {counts}")
    assert not mism, mism[:5]


def test_criterion_4_biorthogonality():
    report = verify.run_biorthogonality(seed=SWEEP_SEED, n_max=4)
    checked = {f: s["checked"] for f, s in report["families"].items()}
    _line(4, report["passed"], f"0/1/0 pairing table exact for |n|,|m| <= 4, "
                               f"p <= 2, all families; cases {checked}")
    assert report["passed"], report


def test_criterion_5_identity_suites():
    report = verify.run_identity_suite("all", trials=200, seed=SWEEP_SEED)
    results = {k: v["passed"] for k, v in report["results"].items()}
    _line(5, report["passed"], f"200 seeded exact trials per identity: {results}")
    assert report["passed"], {k: v["failures"][:2] for k, v in report["results"].items()
                              if v["failures"]}
    assert set(results) == {"chu_vandermonde", "gauss", "pfaff_saalschutz",
                            "lemma1", "lemma2", "lemma3"}


def test_criterion_6_representation_equalities():
    report = verify.run_representation_equalities(seed=SWEEP_SEED, n_max=4)
    counts = {k: v["checked"] for k, v in report["results"].items()}
    _line(6, report["passed"], f"weighted-pFq, alternative-form and Rodrigues "
                               f"equalities exact; cases {counts}")
    assert report["passed"], report


def test_criterion_7_integral_representations():
    t0 = time.time()
    report = verify.run_integral_suite(seed=SWEEP_SEED, nodes=256,
                                       rel_tol=1e-8, doubling_tol=1e-10, x_max=5)
    elapsed = time.time() - t0
    worst = max(v["worst_rel_err"] for v in report["results"].values())
    worst_dbl = max(v["worst_doubling_change"] for v in report["results"].values())
    ok = report["passed"] and elapsed < 120
    _line(7, ok, f"ten contour theorems vs closed forms: worst rel err "
                 f"{worst:.2e} (< 1e-8), worst node-doubling change "
                 f"{worst_dbl:.2e} (< 1e-10), {elapsed:.0f}s (< 120s)")
    assert report["passed"], report
    assert elapsed < 120


def test_criterion_8_askey_limits():
    report = verify.run_limit_suite(seed=SWEEP_SEED, hermite_tol=1e-6)
    slopes = {e: {c: round(v["slope"], 2) for c, v in d.items()}
              for e, d in report["edges"].items()}
    _line(8, report["passed"],
          f"all edges in slope band [-1.3, -0.7]; Hermite routes pairwise "
          f"{report['hermite_routes']['pairwise_max']:.2e} (< 1e-6); {slopes}")
    assert report["passed"], report


def test_criterion_9_moment_validation():
    report = verify.run_moment_validation(seed=SWEEP_SEED, jmax=10, rel_tol=1e-20)
    worst = {f: v["worst_rel_err"] for f, v in report["families"].items()}
    _line(9, report["passed"], f"closed-form moments vs truncated sums, j <= 10, "
                               f"worst rel errors {worst} (< 1e-20)")
    assert report["passed"], report
