"""Acceptance criteria 1-10, one test each.

Every test records a one-line PASS/FAIL verdict; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script::

    python tests/test_acceptance.py
"""
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import random_jet_pair  # noqa: E402

from pseudopairs import spectral  # noqa: E402
from pseudopairs.algebra import cauchy_root_bound, poly_gcd_degree  # noqa: E402
from pseudopairs.chain import chain_cleared, chain_numeric, leading_audit, p1_p2  # noqa: E402
from pseudopairs.cli import main  # noqa: E402
from pseudopairs.conditions import (DerivJet, mobius_derivs, monomial_derivs, p_poly,  # noqa: E402
                                    powers_identity_checks, s_poly, star_identity_residual,
                                    star_value)
from pseudopairs.construct import (ConstructionInput, brute_force_mu, build_pair,  # noqa: E402
                                   kill_residuals, lemma_samples)
from pseudopairs.errors import ChainDegenerate  # noqa: E402
from pseudopairs.nilpotent import CtParams, ct_build, materialize, power_jet  # noqa: E402

TOL = 1e-9
RESULTS = {}


def record(n, ok, detail):
    RESULTS[n] = (bool(ok), detail)
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    assert ok, line


SWEEP = [(n, m) for n in range(2, 10) for m in range(n + 1, 10)]
_cache = {}


def sweep():
    """All 2 <= n < m <= 9 at M = 100, built once and timed."""
    if "sweep" not in _cache:
        t0 = time.perf_counter()
        pairs = {nm: build_pair(ConstructionInput("powers", 100, n=nm[0], m=nm[1])) for nm in SWEEP}
        _cache["sweep"] = (pairs, time.perf_counter() - t0)
    return _cache["sweep"]


def cli_construct(tmp, n, m, M):
    out, rep = tmp / f"pair_{n}_{m}.json", tmp / f"report_{n}_{m}.json"
    t0 = time.perf_counter()
    code = main(["construct", "--powers", str(n), str(m), "-M", str(M),
                 "--out", str(out), "--report", str(rep)])
    elapsed = time.perf_counter() - t0
    return code, json.loads(rep.read_text()) if rep.exists() else None, elapsed


def check_construct_report(code, rep, M):
    v = rep["verification"]
    ps = v["pseudospectra"]
    ok = (code == 0 and rep["passed"] and v["dense_ratios"]["f"] > M and v["dense_ratios"]["g"] > M
          and ps["samples"] >= 250 and ps["rel_tol"] == TOL and ps["max_rel_diff"] <= TOL)
    return ok, ps


def test_criterion_01_powers_2_3(tmp_path):
    code, rep, dt = cli_construct(tmp_path, 2, 3, 1e4)
    ok, ps = check_construct_report(code, rep, 1e4)
    v = rep["verification"]["dense_ratios"]
    record(1, ok and dt < 10,
           f"(2,3) M=1e4: exit {code}, ratios {v['f']:.3g}/{v['g']:.3g}, "
           f"max rel diff {ps['max_rel_diff']:.1e} over {ps['samples']} z, {dt:.2f}s")


def test_criterion_02_fallback_2_7(tmp_path):
    code, rep, dt = cli_construct(tmp_path, 2, 7, 1e3)
    ok, ps = check_construct_report(code, rep, 1e3)
    deg = chain_cleared(power_jet(2), power_jet(7)).Jp.degree
    v = rep["verification"]["dense_ratios"]
    record(2, ok and s_poly(2, 7) == 0 and deg == 74 and dt < 10,
           f"(2,7) M=1e3 with s=0: exit {code}, deg Jp={deg}, ratios {v['f']:.3g}/{v['g']:.3g}, "
           f"max rel diff {ps['max_rel_diff']:.1e} over {ps['samples']} z, {dt:.2f}s")


def test_criterion_03_grid_sweep():
    t0 = time.perf_counter()
    pairs, build_time = sweep()
    bad = [nm for nm, p in pairs.items() if not p.passed]
    degs = {}
    for n, m in SWEEP:
        degs[(n, m)] = chain_cleared(power_jet(n), power_jet(m)).Jp.degree
    wrong = [nm for nm, d in degs.items() if d != (74 if s_poly(*nm) == 0 else 75)]
    s_zero = [nm for nm in SWEEP if s_poly(*nm) == 0]
    total = build_time + (time.perf_counter() - t0)
    record(3, not bad and not wrong and s_zero == [(2, 7)] and total < 120,
           f"{len(SWEEP)} pairs at M=100, failures {bad}, degree mismatches {wrong}, "
           f"deg-74 pairs {s_zero}, {total:.1f}s")


def test_criterion_04_lemma_soundness():
    pairs, _ = sweep()
    worst, n_checks = np.inf, 0
    zs = lemma_samples(200, seed=2024)
    for p in pairs.values():
        base = CtParams(Fraction(1), p.u, *p.c)
        for t in sorted({Fraction(1), Fraction(2), Fraction(10), Fraction(p.t)}):
            rep = spectral.lemma_lower_bound_check(base.with_t(t), p.mu, zs, TOL, raise_on_fail=False)
            worst = min(worst, rep["worst_rel_margin"])
            n_checks += rep["samples"]
    record(4, worst >= -TOL,
           f"{n_checks} resolvent bounds over {len(pairs)} instances, worst relative margin {worst:.3e}")


def test_criterion_05_coefficient_kill():
    pairs, _ = sweep()
    bad = []
    for nm, p in pairs.items():
        base = CtParams(Fraction(1), p.u, *p.c)
        for t in (Fraction(1), Fraction(p.t)):
            if kill_residuals(power_jet(nm[0]), power_jet(nm[1]), base.with_t(t)) != [0, 0, 0, 0]:
                bad.append(nm)
    record(5, not bad, f"S^6/S^7 coefficients of f(C_t), g(C_t) exactly 0 for {len(pairs)} "
                       f"instances at t=1 and t_found; failures {bad}")


def test_criterion_06_certificate_soundness():
    rng = random.Random(6)
    agree = 0
    while agree < 100:
        args = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)]
        if args[0] == 0:
            continue
        try:
            cv = chain_numeric(*args)
        except ChainDegenerate:
            continue
        if not cv.certified:
            continue
        assert poly_gcd_degree(cv.P1, cv.P2) == 0, args
        agree += 1
    pairs, _ = sweep()
    worst = 0.0
    for p in pairs.values():
        P1, P2 = p1_p2(p.u, *p.c)
        R = max(cauchy_root_bound(P1), cauchy_root_bound(P2))
        brute = brute_force_mu(P1, P2, R, n=2000)
        assert 0 < p.mu <= brute, (p.mu, brute)
        worst = max(worst, p.mu / brute)
    record(6, True, f"{agree} random certified chains all coprime by PRS gcd; "
                    f"0 < mu' <= 2000x2000 grid minimum in {len(pairs)} cases (max mu'/grid {worst:.3f})")


def test_criterion_07_integer_identities():
    rep = powers_identity_checks(grid=25, search=50)
    record(7, rep["passed"] and p_poly(2, 3) == 1344,
           f"p = qs + r and the corrected division identity on {rep['pairs_checked']} pairs; "
           f"no common zero of s, p for 2 <= n != m <= 50; p(2,3) = {p_poly(2, 3)}")


def test_criterion_08_star_identity():
    rng = random.Random(8)

    def R():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    res = [star_identity_residual(DerivJet(tuple(R() for _ in range(5))),
                                  DerivJet(tuple(R() for _ in range(5)))) for _ in range(20)]
    mob = []
    while len(mob) < 10:
        a, b, c, d, z0 = (R() for _ in range(5))
        if a * d - b * c == 0 or c * z0 + d == 0:
            continue
        f = mobius_derivs(a, b, c, d, z0)
        g = DerivJet(tuple(R() for _ in range(5)))
        mob.append(star_value(f, g) if len(mob) % 2 else star_value(g, f))
    mono = [star_value(monomial_derivs(2, z0), monomial_derivs(7, z0)) for z0 in (1, 2, Fraction(-1, 3))]
    record(8, all(r == 0 for r in res) and all(v == 0 for v in mob) and all(v == 0 for v in mono),
           "Schwarzian identity residual exactly 0 on 20 random rational jets; star = 0 on "
           "10 Mobius pairs and on (z^2, z^7)")


def test_criterion_09_sanity_bounds():
    pairs, _ = sweep()
    norm_ok = all(spectral.norm_comparison_check(p.A, p.B, TOL)["passed"] for p in pairs.values())
    tests = {"shift S (8x8)": np.eye(8, k=1), "zero (10x10)": np.zeros((10, 10))}
    p23 = pairs[(2, 3)]
    tests["C_1 for (2,3)"] = materialize(ct_build(CtParams(1.0, complex(p23.u), *map(complex, p23.c))))
    A1 = p23.A - np.eye(10)
    A1[np.abs(A1) > 1] = 0  # keep a 10x10 nilpotent with moderate entries
    tests["A_t - I truncated"] = A1
    rng = np.random.default_rng(9)
    tests["random strictly upper 10x10"] = np.triu(rng.standard_normal((10, 10)), 1) * 0.5
    kreiss = {k: spectral.kreiss_sanity(a) for k, a in tests.items()}
    ok = norm_ok and all(r["passed"] for r in kreiss.values())
    worst = max(r["sup_power_norm"] / r["upper_bound"] for r in kreiss.values())
    record(9, ok, f"||A|| <= 2||B|| and ||B|| <= 2||A|| for {len(pairs)} pairs; Kreiss chain on "
                  f"{len(tests)} nilpotent matrices (max sup/upper {worst:.3f})")


def test_criterion_10_audit_honesty(capsys):
    assert main(["chain-audit", "--powers", "2", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    lead = {e["name"]: e for e in out["leading"]}
    rng = random.Random(10)
    u_ratios, struct_ok = [], True
    for _ in range(3):
        f, g = random_jet_pair(rng)
        cc = chain_cleared(f, g)
        audit = {e.name: e for e in leading_audit(cc, f, g)}
        u_ratios.append(audit["U"].ratio)
        struct_ok &= (cc.U.degree, cc.Ap.degree, cc.Ep.degree, cc.Jp.degree) == (1, 5, 13, 75)
    reported = all(lead[k]["ratio"] is not None for k in ("U", "b5", "Ap", "Ep", "Jp"))
    degs = out["degrees"]
    struct_ok &= (degs["U"], degs["Ap"], degs["Ep"], degs["Jp"]) == (1, 5, 13, 75)
    record(10, lead["U"]["ratio"] == "1" and all(r == 1 for r in u_ratios) and reported and struct_ok,
           f"U ratio 1 ((2,3) and 3 random jets); reported ratios b5={lead['b5']['ratio']}, "
           f"A'={lead['Ap']['ratio']}, E'={lead['Ep']['ratio']}, J'={lead['Jp']['ratio']}; "
           f"degrees U/A'/E'/J' = {degs['U']}/{degs['Ap']}/{degs['Ep']}/{degs['Jp']}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
