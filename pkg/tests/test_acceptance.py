"""Acceptance gate: runs every criterion at its stated tolerance and
prints one pass/fail line per criterion (run with -s to see them)."""

import json
import random
import time

import jsonschema

from oracles import count_partitions_into_blocks
from superosc import cli
from superosc.classical import bernstein, hermite, hermite_generating_series, hermite_via_gould_hopper
from superosc.coeffs import convergence_profile, f_eval, f_eval_fourier
from superosc.combinat import stirling2, stirling2_alt_sum
from superosc.exact import Poly
from superosc.genfun import (
    DEFAULT_ALPHA_SET,
    GenFunParams,
    g_series,
    run_suite,
    s1_series,
    s2_series,
)
from superosc.hyper import HyperSpec, kummer_integral, pfq_eval_float
from superosc.report import PRINTED_MISMATCH, REPORT_SCHEMA, VERIFIED, Divergence, IdentityReport, MISMATCH
from superosc.shift import EntireFnSpec, IDENTITY_FN, ONE_FN, dpf_eval, limit_profile, y_eval, z_eval


def _finish(name, ok, detail=""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def _all_verified(reports):
    return all(r.status == VERIFIED for r in reports)


def test_criterion_1_exact_identity_suite():
    t0 = time.time()
    problems = []

    def expect(label, condition):
        if not condition:
            problems.append(label)

    expect("g-closed-form", _all_verified(run_suite("g-closed-form", max_k=6)))
    expect("recurrence", _all_verified(run_suite("recurrence", max_n=10)))
    expect("derivative", _all_verified(run_suite("derivative", max_n=10)))

    # S1 = S2 = alpha0 * G_k at m = 0
    for k in range(7):
        for a0 in DEFAULT_ALPHA_SET:
            p = GenFunParams(m=0, k=k, n=1, alphas=(a0,))
            expected = g_series(k, 12).scale(a0)
            expect(f"m0-collapse k={k}", s1_series(p, 12) == expected and s2_series(p, 12) == expected)

    expect("s2-stirling", _all_verified(run_suite("s2-stirling", max_n=10, max_k=6)))
    expect("ay-2", _all_verified(run_suite("ay-2", max_n=10, max_k=6)))
    expect("b2-k1", _all_verified(run_suite("b2-k1", max_n=10)))

    # corrected closed forms verify; printed forms flagged for k >= 2
    # (every alpha in the test set is nonzero, so the affected alpha is too)
    for suite in ("s1-m1", "s1-m2"):
        for report in run_suite(suite, max_n=10, max_k=6):
            k = int(report.params["k"])
            if report.status == MISMATCH:
                expect(f"{suite} corrected k={k}", False)
            if k >= 2:
                expect(f"{suite} printed flag k={k}", report.status == PRINTED_MISMATCH)

    expect("miller-paris", _all_verified(run_suite("miller-paris")))
    expect("16a", _all_verified(run_suite("16a")))

    expect("bernstein-map", _all_verified(run_suite("bernstein-map")))
    for v in range(9):
        acc = Poly()
        for k in range(v + 1):
            acc = acc + bernstein(k, v)
        expect(f"bernstein-unity v={v}", acc == Poly([1]))

    expect("hermite-conv", _all_verified(run_suite("hermite-conv", max_n=10)))
    expect("heat-equation", _all_verified(run_suite("heat-equation")))
    series = hermite_generating_series(12)
    for n in range(13):
        expect(
            f"hermite-triple n={n}",
            hermite(n) == hermite_via_gould_hopper(n) == series.coefficient(n),
        )
    expect("hermite-kummer", _all_verified(run_suite("hermite-kummer")))

    elapsed = time.time() - t0
    _finish(
        "criterion-1 exact identity suite (V=12, zero tolerance)",
        not problems,
        f"{elapsed:.1f}s" + (f"; failed: {problems[:5]}" if problems else ""),
    )


def test_criterion_2_stirling_oracle():
    bad = []
    for c in range(11):
        for d in range(c + 1):
            rec = stirling2(c, d)
            alt = stirling2_alt_sum(c, d)
            brute = count_partitions_into_blocks(c, d)
            if not (rec == alt == brute):
                bad.append((c, d))
    _finish("criterion-2 Stirling triple oracle (c <= 10, exact)", not bad, str(bad[:3]) if bad else "")


def test_criterion_3_convergence_ratios():
    t0 = time.time()
    n_list = [100, 200, 400, 800]
    profile = convergence_profile(n_list, 2.0, -1.0, 1.0, 101)
    errs = profile.sup_errors_in_order(n_list)
    ratios = [errs[i] / errs[i + 1] for i in range(len(errs) - 1)]
    ok = all(1.8 <= r <= 2.2 for r in ratios)
    exact = convergence_profile(n_list, 1.0, -1.0, 1.0, 101)
    ok = ok and all(e < 1e-12 for e in exact.sup_error.values())
    elapsed = time.time() - t0
    _finish(
        "criterion-3 convergence (a=2 ratios in [1.8,2.2]; a=1 exact)",
        ok,
        f"ratios={[f'{r:.3f}' for r in ratios]}, {elapsed:.1f}s",
    )


def test_criterion_4_dual_evaluation():
    rng = random.Random(20240901)
    worst = 0.0
    ok = True
    for _ in range(100):
        n = rng.randint(1, 200)
        a = rng.uniform(-4.0, 4.0)
        x = rng.uniform(-3.0, 3.0)
        product = f_eval(n, a, x)
        fourier = f_eval_fourier(n, a, x)
        rel = abs(product - fourier) / abs(fourier)
        worst = max(worst, rel)
        if rel > 1e-10:
            ok = False
    _finish(
        "criterion-4 dual evaluation (100 random points, 1e-10 relative)",
        ok,
        f"worst rel diff {worst:.2e}",
    )


def test_criterion_5_kummer_vs_series():
    worst = 0.0
    ok = True
    for k in range(1, 6):
        spec = HyperSpec((k,), (k + 1,))
        for u in range(-4, 5):
            quad_val = kummer_integral(k, k + 1, float(u))
            series_val = pfq_eval_float(spec, float(u), 1e-14)
            diff = abs(quad_val - series_val)
            worst = max(worst, diff)
            if diff > 1e-9:
                ok = False
    _finish(
        "criterion-5 Kummer integral vs series (mu=1..5, u=-4..4, 1e-9)",
        ok,
        f"worst abs diff {worst:.2e}",
    )


def test_criterion_6_supershift_sweeps():
    g = EntireFnSpec((0.0, 0.0, 1.0))
    h = EntireFnSpec((1.0, 1.0))
    profile = limit_profile("y", 1.5, [50, 100, 200], -0.5, 0.5, 51, g=g, h=h)
    sups = profile.sup_errors_in_order([50, 100, 200])
    ok = sups[0] > sups[1] > sups[2]

    chain_ok = True
    for (n, a, x) in [(40, 1.7, 0.9), (60, 1.5, -0.3), (25, 2.5, 0.2)]:
        base = f_eval(n, a, x)
        d0 = dpf_eval(n, a, x, 0)
        z0 = z_eval(n, a, x, 1, 0)
        y0 = y_eval(n, a, x, IDENTITY_FN, ONE_FN)
        spread = max(abs(d0 - base), abs(z0 - d0), abs(y0 - z0))
        if spread >= 1e-12:
            chain_ok = False
    _finish(
        "criterion-6 supershift sweep decreasing + reduction chain < 1e-12",
        ok and chain_ok,
        f"sup errors {[f'{s:.3e}' for s in sups]}",
    )


def test_criterion_7_cli_contract(capsys, monkeypatch):
    golden = "k,value\n0,4\n1,-4\n2,1\n"
    ok = True
    notes = []

    code = cli.main(["coeffs", "--n", "2", "--a", "3"])
    first = capsys.readouterr().out
    cli.main(["coeffs", "--n", "2", "--a", "3"])
    second = capsys.readouterr().out
    if not (code == 0 and first == golden and first.encode() == second.encode()):
        ok = False
        notes.append("coeffs golden/stability")

    code = cli.main(["verify", "--suite", "g-closed-form", "--max-k", "3"])
    out = capsys.readouterr().out
    payload = json.loads(out)
    try:
        for report in payload:
            jsonschema.validate(report, REPORT_SCHEMA)
    except jsonschema.ValidationError:
        ok = False
        notes.append("schema")
    if code != 0 or not all(r["status"] == "verified" for r in payload):
        ok = False
        notes.append("verify exit 0")

    if cli.main(["verify", "--suite", "no-such"]) != 2:
        ok = False
        notes.append("usage exit 2")
    if cli.main(["eval", "--n", "5", "--a", "2", "--x-min", "1", "--x-max", "0"]) != 2:
        ok = False
        notes.append("eval usage exit 2")
    capsys.readouterr()

    fake = IdentityReport(
        "recurrence", {"k": 0, "n": 0}, 12, MISMATCH, Divergence(v=0, lhs="1", rhs="2")
    )
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [fake])
    if cli.main(["verify", "--suite", "recurrence"]) != 1:
        ok = False
        notes.append("mismatch exit 1")
    capsys.readouterr()

    with capsys.disabled():
        _finish(
            "criterion-7 CLI goldens, schema, exit codes {0,1,2}",
            ok,
            "; ".join(notes) if notes else "golden byte-stable",
        )
