"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines alongside the pytest verdicts.
"""

import json
import math
import time

import pytest

from optfront import benchmark as B
from optfront import cli, pareto, suites
from optfront.finset import set_equal
from optfront.quickprop import Outcome

N = 10_000
SEED = 137


def _report(num: int, text: str) -> None:
    print(f"[criterion {num:2d}] PASS - {text}")


def _assert_all_ok(rows):
    bad = [
        f"{r.suite}/{r.name}: {r.result.summary()} (expected {r.expect})"
        for r in rows
        if not r.ok
    ]
    assert not bad, bad


def _by_name(rows):
    return {r.name: r for r in rows}


def test_criterion_1_min_argmin_spec_suites():
    t0 = time.perf_counter()
    rows = suites.run_suite("core", N, SEED)
    elapsed = time.perf_counter() - t0
    pool_rows = [
        r
        for r in rows
        if r.name.startswith(("min-lower-bound[", "argmin-sound[", "argmin-complete["))
    ]
    assert len(pool_rows) == 3 * len(suites.FUNCTION_POOL)
    for r in pool_rows:
        assert r.result.outcome is Outcome.PASSED, f"{r.name}: {r.result.summary()}"
        assert r.result.cases == N
    _assert_all_ok(rows)
    assert elapsed < 5.0, f"core suite took {elapsed:.2f}s"
    _report(1, f"{len(pool_rows)} defining-property runs x {N} cases in {elapsed:.2f}s")


def test_criterion_2_relation_suite():
    rows = _by_name(suites.run_suite("relations", N, SEED))
    assert rows["dominance-anti-reflexive"].result.outcome is Outcome.PASSED
    assert rows["dominance-transitive"].result.outcome is Outcome.PASSED
    for name in ("dominance-not-total", "indifference-not-transitive"):
        res = rows[name].result
        assert res.outcome is Outcome.FALSIFIED, f"{name}: {res.summary()}"
        assert res.witness is not None
        assert res.failed_at <= N
    _report(2, "dominance laws pass; totality and indifference-transitivity refuted with witnesses")


def test_criterion_3_toy_front_oracle():
    points = list(suites.TOY_POINTS.values())
    expected = [suites.TOY_POINTS[n] for n in suites.TOY_FRONT_NAMES]
    assert set_equal(pareto.pareto_front(points), expected)
    for statement, want, got in suites.toy_caption_checks():
        assert got == want, statement
    _report(3, "seven-point front equals the four optimal points; all dominance statements reproduce")


def test_criterion_4_bruteforce_equivalence():
    rows = _by_name(suites.run_suite("front", 1000, SEED))
    for name in (
        "front-matches-pairwise-scan-2d",
        "front-matches-pairwise-scan-3d",
        "merge-law-small-vectors",
    ):
        res = rows[name].result
        assert res.outcome is Outcome.PASSED, f"{name}: {res.summary()}"
        assert res.cases == 1000
    _report(4, "incremental front matches the exhaustive pairwise oracle; merge law holds")


def test_criterion_5_front_and_moo_properties():
    front_rows = suites.run_suite("front", N, SEED)
    moo_rows = suites.run_suite("moo", N, SEED)
    _assert_all_ok(front_rows)
    _assert_all_ok(moo_rows)
    by = _by_name(front_rows) | _by_name(moo_rows)
    passing = (
        "bump-subset",
        "bump-keeps-indifference",
        "bump-keeps-domination",
        "front-is-pareto",
        "front-of-image",
        "argfront-sound",
        "argfront-complete",
        "single-objective-front",
        "single-objective-argfront",
        "component-min-attained",
    )
    for name in passing:
        assert by[name].result.outcome is Outcome.PASSED, name
    refuted = by["component-argmin-subset"].result
    assert refuted.outcome is Outcome.FALSIFIED
    assert refuted.witness is not None
    _report(5, "insertion and front properties pass; componentwise-argmin refinement refuted")


def test_criterion_6_monotonicity_table():
    expected = {
        ("m1-seq", "pointwise-monotone[length]"): Outcome.PASSED,
        ("m1-seq", "pointwise-monotone[const-3]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[length]"): Outcome.FALSIFIED,
        ("m2-seq", "dominance-monotone[const-3]"): Outcome.FALSIFIED,
        ("m1-seq", "pointwise-monotone[sum]"): Outcome.PASSED,
        ("m1-seq", "pointwise-monotone[average]"): Outcome.PASSED,
        ("m1-seq", "pointwise-monotone[head]"): Outcome.PASSED,
        ("m1-seq", "pointwise-monotone[best]"): Outcome.PASSED,
        ("m1-seq", "pointwise-monotone[worst]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[sum]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[average]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[head]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[best]"): Outcome.PASSED,
        ("m2-seq", "dominance-monotone[worst]"): Outcome.PASSED,
        ("m2-sp", "dominance-monotone[expected-value]"): Outcome.PASSED,
        ("m2-sp", "dominance-monotone[best]"): Outcome.PASSED,
        ("m2-sp", "dominance-monotone[worst]"): Outcome.PASSED,
        ("m1-sp", "pointwise-monotone[most-likely]"): Outcome.FALSIFIED,
        ("m2-sp", "dominance-monotone[most-likely]"): Outcome.PASSED,
        ("m2-interval", "dominance-monotone[sum]"): Outcome.PASSED,
        ("m2-interval", "dominance-monotone[average]"): Outcome.PASSED,
        ("m2-interval", "dominance-monotone[best]"): Outcome.PASSED,
        ("m2-interval", "dominance-monotone[worst]"): Outcome.PASSED,
        ("m2-interval", "dominance-monotone[width]"): Outcome.FALSIFIED,
        ("m2-pdf", "dominance-monotone[expected-value]"): Outcome.PASSED,
        ("m1-pdf", "pointwise-monotone[most-likely]"): Outcome.PASSED,
    }
    observed = {}
    for suite in ("m1-seq", "m2-seq", "m1-sp", "m2-sp", "m1-interval",
                  "m2-interval", "m1-pdf", "m2-pdf", "m1-id", "m2-id"):
        rows = suites.run_suite(suite, N, SEED)
        _assert_all_ok(rows)
        for r in rows:
            observed[(suite, r.name)] = r.result.outcome
    for key, want in expected.items():
        assert observed[key] is want, f"{key}: got {observed[key]}, want {want}"
    _report(6, f"monotonicity verdict table reproduced for {len(expected)} listed pairs at n={N}")


def test_criterion_7_functorial_soundness():
    refuted = {
        "minu-seq": {"never-dominated[length]", "never-dominated[const-3]"},
        "minu-sp": {"never-dominated[const-3]"},
        "minu-interval": {"never-dominated[width]", "never-dominated[const-3]"},
        "minu-pdf": {"never-dominated[const-3]"},
    }
    for suite, want_falsified in refuted.items():
        rows = suites.run_suite(suite, N, SEED)
        _assert_all_ok(rows)
        for r in rows:
            if r.name in want_falsified:
                assert r.result.outcome is Outcome.FALSIFIED, f"{suite}/{r.name}"
            elif r.name.startswith(
                ("result-nonempty-subset[", "argmin-sound[", "argmin-complete[")
            ):
                assert r.result.outcome is Outcome.PASSED, f"{suite}/{r.name}"
            elif r.name.startswith("never-dominated["):
                assert r.result.outcome is Outcome.PASSED, f"{suite}/{r.name}"
    id_rows = suites.run_suite("minu-id", N, SEED)
    _assert_all_ok(id_rows)
    by = _by_name(id_rows)
    for prop in ("reduces-to-singleton", "reduces-to-min", "reduces-to-argmin"):
        assert by[f"{prop}[unwrap]"].result.outcome is Outcome.PASSED
        assert by[f"{prop}[const-7]"].result.outcome is Outcome.FALSIFIED
    _report(7, "soundness passes for dominance-monotone measures and is refuted for the structural ones")


def test_criterion_8_sampling_benchmark():
    t0 = time.perf_counter()
    _labeled, m = B.run_sampling(B.BenchConfig(seed=SEED, sample_size=250_000))
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"sampling took {elapsed:.1f}s"
    assert m["evaluations"] == 250_000
    assert 4.200 <= m["f1min"] <= 4.205
    ax, ay = m["argmin_f1"]
    assert math.hypot(ax - math.pi, ay - math.pi) <= 0.05
    assert m["f2min"] <= 1e-4
    bx, by = m["argmin_f2"]
    assert min(math.hypot(bx - u, by - v) for u, v in B.SECOND_OBJECTIVE_MINIMA) <= 0.05
    f1_at_argmin_f2 = float(B.f1(bx, by))
    assert 5.0 <= f1_at_argmin_f2 <= 5.2
    f2_at_argmin_f1 = float(B.f2(ax, ay))
    assert 0.30 <= f2_at_argmin_f1 <= 0.50
    # the sample minimum of the second objective is far below the safety line
    assert m["f2min"] <= 0.15
    _report(
        8,
        f"250k sample in {elapsed:.1f}s: f1min={m['f1min']:.4f}, f2min={m['f2min']:.2e}, "
        f"f1@argmin_f2={f1_at_argmin_f2:.3f}, f2@argmin_f1={f2_at_argmin_f1:.3f}",
    )


def test_criterion_9_evolution_benchmark():
    t0 = time.perf_counter()
    state, m = B.run_evolution(B.BenchConfig(seed=SEED, grid_side=50, iterations=22_500))
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"evolution took {elapsed:.1f}s"
    assert m["evaluations"] == 25_000
    assert B.front_invariant_holds(state), "front contract fails on full recomputation"
    assert m["f1min"] <= 4.21
    assert m["f2min"] <= 1e-3
    _report(
        9,
        f"25k-evaluation run in {elapsed:.1f}s: invariant holds, "
        f"f1min={m['f1min']:.4f}, f2min={m['f2min']:.2e}, front={m['front_size']}",
    )


def test_criterion_10_cli_determinism(tmp_path, capsys):
    pairs = []
    for tag, argv in (
        ("sample", ["sample", "--n", "2000", "--seed", "5", "--out", None]),
        ("evolve", ["evolve", "--grid", "8", "--iters", "300", "--seed", "5", "--out", None]),
    ):
        outs = []
        for run in ("a", "b"):
            out = tmp_path / f"{tag}-{run}"
            argv2 = [a if a is not None else str(out) for a in argv]
            assert cli.main(argv2) == 0
            outs.append(out)
        pairs.append(outs)
    capsys.readouterr()
    for a, b in pairs:
        for name in ("control.csv", "operational.csv", "front.csv", "metrics.json",
                     "operational.png", "control.png"):
            assert (a / name).read_bytes() == (b / name).read_bytes(), f"{a.name}/{name}"
    # stdout reports repeat byte-for-byte as well
    assert cli.main(["figure1"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["figure1"]) == 0
    second = capsys.readouterr().out
    assert first == second
    _report(10, "repeated invocations produced byte-identical CSV, JSON and PNG outputs")
