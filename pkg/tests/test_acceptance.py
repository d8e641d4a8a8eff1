"""Exit criteria for the package.

Each test prints one ``ACCEPTANCE <id> PASS|FAIL`` line.  Run alone with

    pytest tests/test_acceptance.py -v
"""

import subprocess
import sys
import time

import pytest

from derangements.identities import VerifyConfig, abel_residual, run_all
from derangements.polys import (
    cosine_derangement,
    derangement_poly,
    fixed_point_enumerator,
    sine_derangement,
)
from derangements.probability import (
    exact_moment,
    mc_moments,
    moment_identity_exact,
    shifted_moment,
    trig_moment_identity_exact,
    z_score,
)
from derangements.sequences import (
    bell_number,
    brute_force_derangements,
    derangement_number,
)
from derangements.series import bell_egf, derangement_egf, trig_derangement_egf

from conftest import F

LISTED = [1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961]


@pytest.fixture
def verdict(capsys):
    def emit(criterion: str, ok: bool, detail: str = ""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {criterion:28} {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, f"{criterion}: {detail}"

    return emit


def test_1_derangement_sequence(verdict):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "derangements", "seq", "derangement", "--n-max", "10"],
        capture_output=True,
        text=True,
    )
    elapsed = time.perf_counter() - start
    values = [int(line.split("\t")[1]) for line in proc.stdout.splitlines()]
    verdict(
        "1-derangement-sequence",
        proc.returncode == 0 and values == LISTED and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_2_oracle_equivalence(verdict):
    start = time.perf_counter()
    counts_ok = all(brute_force_derangements(n) == derangement_number(n) for n in range(10))
    polys_ok = all(fixed_point_enumerator(n) == derangement_poly(n).poly for n in range(9))
    elapsed = time.perf_counter() - start
    verdict("2-oracle-equivalence", counts_ok and polys_ok and elapsed < 10.0, f"{elapsed:.3f}s")


EXACT_IDS = [
    "appell-derivative",
    "bell-derangement-numbers",
    "bell-derangement-roundtrip",
    "bell-from-derangement",
    "complex-evaluation",
    "cosine-parity-sum",
    "cosine-recurrence",
    "cosine-shift",
    "derangement-closed-forms",
    "derangement-from-bell",
    "poly-recurrence",
    "rising-binomial-compositions",
    "sine-parity-sum",
    "sine-shift",
    "trig-expansions",
    "trig-parity",
]


def test_3_identity_suite(verdict):
    cfg = VerifyConfig(n_max=20, r_max=5, composition_n_max=10)
    start = time.perf_counter()
    reports = run_all(cfg, only=EXACT_IDS)
    elapsed = time.perf_counter() - start
    failed = [(r.check_id, r.witness) for r in reports if not r.passed]
    verdict(
        "3-identity-suite",
        not failed and len(reports) == len(EXACT_IDS) and elapsed < 60.0,
        f"{len(reports)} checks, {elapsed:.2f}s, failed={failed}",
    )


def test_4_abel_regularized(verdict):
    points = [F(0), F(1, 2), F(1), F(2)]
    worst = 0.0
    monotone = True
    for n in range(7):
        for x in points:
            r60 = abel_residual(n, x, 60)
            r120 = abel_residual(n, x, 120)
            worst = max(worst, r60)
            monotone &= r120 <= r60 + 1e-12
    report = run_all(VerifyConfig(n_max=20, tolerance=1e-6, tail_terms=60), only=["euler-bell-abel"])[0]
    verdict(
        "4-abel-regularized",
        worst < 1e-6 and monotone and report.passed,
        f"max residual {worst:.3g}, monotone={monotone}",
    )


def test_5_exact_moments(verdict):
    plain_grid = [F(-2), F(-1, 2), F(0), F(1, 2), F(1), F(3)]
    trig_grid = [F(-1), F(0), F(1, 2), F(2)]
    plain_ok = all(moment_identity_exact(p, n).passed for p in plain_grid for n in range(21))
    trig_ok = all(
        trig_moment_identity_exact(p, q, n).passed
        for p in trig_grid
        for q in trig_grid
        for n in range(16)
    )
    spot_ok = shifted_moment(0, 4) == 9 and all(
        derangement_poly(n).poly(1) == shifted_moment(1, n) for n in range(21)
    )
    verdict("5-exact-moments", plain_ok and trig_ok and spot_ok, f"plain={plain_ok} trig={trig_ok}")


MC_SEEDS = range(20260, 20280)
MC_CASES = [
    (F(0), F(0), "plain"),
    (F(1, 2), F(0), "plain"),
    (F(1, 2), F(1, 2), "cosine"),
    (F(1, 2), F(1, 2), "sine"),
]


def test_6_monte_carlo(verdict):
    start = time.perf_counter()
    worst_hits = 20
    details = []
    for p, q, kind in MC_CASES:
        hits = [0] * 6
        for seed in MC_SEEDS:
            ests = mc_moments(float(p), float(q), range(6), kind, samples=1_000_000, seed=seed)
            for n, est in enumerate(ests):
                hits[n] += abs(z_score(est, exact_moment(p, q, n, kind))) <= 4
        worst_hits = min(worst_hits, min(hits))
        details.append(f"({p},{q},{kind}):{min(hits)}/20")
    elapsed = time.perf_counter() - start
    verdict(
        "6-monte-carlo",
        worst_hits >= 19 and elapsed < 60.0,
        f"{elapsed:.1f}s " + " ".join(details),
    )


def test_7_generating_functions(verdict):
    order = 20
    ok = derangement_egf(order).egf() == [derangement_number(n) for n in range(order + 1)]
    x = F(3, 7)
    ok &= derangement_egf(order, x).egf() == [derangement_poly(n).poly(x) for n in range(order + 1)]
    ok &= bell_egf(order, 1).egf() == [bell_number(n) for n in range(order + 1)]
    y = F(2, 3)
    for xv in (F(3, 7), F(0), F(-1), F(5, 2)):
        cos_s, sin_s = trig_derangement_egf(order, xv, y)
        ok &= cos_s.egf() == [cosine_derangement(n).poly.eval(xv, y) for n in range(order + 1)]
        ok &= sin_s.egf() == [sine_derangement(n).poly.eval(xv, y) for n in range(order + 1)]
    verdict("7-generating-functions", ok, f"orders 0..{order}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
