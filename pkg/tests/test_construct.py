import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_jet_pair
from pseudopairs import spectral
from pseudopairs.algebra import Poly, cauchy_root_bound
from pseudopairs.chain import chain_numeric, p1_p2
from pseudopairs.construct import (N, ConstructionInput, assemble_pair, block_norms,
                                   brute_force_mu, build_pair, choose_u, critical_samples,
                                   kill_residuals, mu_lower_bound, solve_c_system, t_search)
from pseudopairs.errors import (CertificationFailed, ExponentTooSmall, JetInvariantError,
                                NmEqual, NoAdmissibleU, SingularSystem, StarConditionSuspected)
from pseudopairs.nilpotent import CtParams, Jet, power_jet

MOBIUS = Jet(tuple([Fraction(0)] + [Fraction(1)] * 7))       # z / (1 - z)


def params_for(f, g, u):
    c4, c5, c6, c7, _ = solve_c_system(f, g, u)
    return CtParams(Fraction(1), u, c4, c5, c6, c7)


def test_solve_c_system_powers_exact():
    f, g = power_jet(2), power_jet(3)
    c4, c5, c6, c7, U = solve_c_system(f, g, Fraction(1))
    assert (c4, c5, c6, c7) == (Fraction(-1, 2), 0, Fraction(-1, 2), 1)
    assert U != 0
    for t in (Fraction(1), Fraction(3), Fraction(17, 2)):
        assert kill_residuals(f, g, params_for(f, g, Fraction(1)).with_t(t)) == [0, 0, 0, 0]


def test_solve_c_system_random_jets_kill():
    rng = random.Random(3)
    for _ in range(5):
        f, g = random_jet_pair(rng)
        u = Fraction(rng.randint(1, 9))
        try:
            p = params_for(f, g, u)
        except SingularSystem:
            continue
        assert kill_residuals(f, g, p.with_t(Fraction(5))) == [0, 0, 0, 0]


def test_equal_jets_singular():
    f = power_jet(4)
    for u in (1, 2, 5):
        with pytest.raises(SingularSystem):
            solve_c_system(f, f, Fraction(u))


def test_float_solve_kills_to_tolerance():
    f, g = power_jet(2).to_complex(), power_jet(5).to_complex()
    c4, c5, c6, c7, _ = solve_c_system(f, g, 1.5 + 0.5j)
    res = kill_residuals(f, g, CtParams(4.0, 1.5 + 0.5j, c4, c5, c6, c7))
    scale = 4.0**7 * max(1.0, max(abs(c) for c in (c4, c5, c6, c7)))
    assert max(abs(r) for r in res) <= 1e-10 * scale


def test_choose_u_powers():
    u, sol, cv, rejected = choose_u(power_jet(2), power_jet(3))
    assert isinstance(u, Fraction) and u.denominator == 1 and 1 <= u <= 64
    assert cv.certified
    u, _, cv, _ = choose_u(power_jet(2), power_jet(7))
    assert cv.certified


def test_choose_u_star_jets_exhausts():
    g = Jet((0, 1, 3, Fraction(1, 2), 2, 5, -1, 7))
    with pytest.raises(NoAdmissibleU):
        choose_u(MOBIUS, g, budget=8)


def test_mu_constant_and_monomial():
    mu = mu_lower_bound(Poly([2]), Poly.monomial(5))
    assert 0.5 < mu <= 1.0


def test_mu_common_root_rejected():
    with pytest.raises(CertificationFailed):
        mu_lower_bound(Poly.monomial(6), Poly.monomial(5))


def test_mu_below_brute_force_grid():
    for n, m in ((2, 3), (2, 7), (3, 5)):
        u, sol, _, _ = choose_u(power_jet(n), power_jet(m))
        P1, P2 = p1_p2(u, *sol[:4])
        cert = mu_lower_bound(P1, P2, full=True)
        R = max(cauchy_root_bound(P1), cauchy_root_bound(P2))
        assert 0 < cert.mu <= brute_force_mu(P1, P2, R, n=2000)


def test_mu_random_admissible_chains():
    rng = random.Random(8)
    done = 0
    while done < 5:
        args = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(5)]
        if args[0] == 0:
            continue
        try:
            if not chain_numeric(*args).certified:
                continue
        except Exception:
            continue
        P1, P2 = p1_p2(*args)
        R = max(cauchy_root_bound(P1), cauchy_root_bound(P2))
        assert 0 < mu_lower_bound(P1, P2) <= brute_force_mu(P1, P2, R, n=1000)
        done += 1


def test_assemble_pair_structure():
    p = CtParams(3.0, 1.0, -0.5, 0.0, -0.5, 1.0)
    A, B = assemble_pair(p, 0.0)
    np.testing.assert_array_equal(A, B)
    A, B = assemble_pair(p, 0.25)
    diff = np.argwhere(A != B)
    assert diff.tolist() == [[8, 9]]
    assert A[8, 9] == 0.25 * 3.0**6
    np.testing.assert_array_equal(A[:8, :8], B[:8, :8])
    assert not np.tril(A, 0).any()


def test_t_search_zero_threshold():
    f, g = power_jet(2), power_jet(3)
    p = params_for(f, g, Fraction(1))
    t, rf, rg = t_search(f, g, p, 0.1, 0.0)
    assert t == 1 and rf > 0 and rg > 0


def test_t_search_finds_ratio():
    f, g = power_jet(2), power_jet(3)
    p = params_for(f, g, Fraction(1))
    t, rf, rg = t_search(f, g, p, 0.1, 100.0)
    assert rf > 100 and rg > 100


def test_monotone_escape():
    f, g = power_jet(2), power_jet(3)
    p = params_for(f, g, Fraction(1))
    for t in (Fraction(8), Fraction(64), Fraction(512)):
        for h in (f, g):
            a1, b1 = block_norms(h, p.with_t(t), 0.1)
            a4, b4 = block_norms(h, p.with_t(4 * t), 0.1)
            assert a4 / b4 > a1 / b1


def test_input_validation():
    with pytest.raises(NmEqual):
        ConstructionInput("powers", 10, n=3, m=3)
    with pytest.raises(ExponentTooSmall):
        ConstructionInput("powers", 10, n=1, m=3)
    with pytest.raises(JetInvariantError):
        ConstructionInput("jets", 10, f=Jet((0, 0, 1, 0, 0, 0, 0, 0)), g=power_jet(3))
    with pytest.raises(JetInvariantError):
        ConstructionInput("jets", 10, f=power_jet(3), g=power_jet(3))


def test_build_pair_powers(pair_23_m100):
    p = pair_23_m100
    r = p.report
    assert p.passed
    assert r["block_ratios"]["f"] > 100 and r["block_ratios"]["g"] > 100
    assert r["verification"]["dense_ratios"]["passed"]
    assert r["verification"]["pseudospectra"]["max_rel_diff"] <= 1e-9
    assert r["pseudospectra_2t"]["passed"]
    assert all(x["passed"] for x in r["lemma_bound"])
    assert r["coefficient_kill"]["residuals"] == [0, 0, 0, 0]
    assert r["chain"]["gcd_degree_P1_P2"] == 0
    # powers mode hands back I + A_t, I + B_t
    np.testing.assert_array_equal(np.diag(p.A), np.ones(N))
    assert np.argwhere(p.A != p.B).tolist() == [[8, 9]]


def test_shift_invariance(pair_23_m100):
    p = pair_23_m100
    A0, B0 = p.A - np.eye(N), p.B - np.eye(N)
    s = np.concatenate([spectral.standard_samples(0),
                        critical_samples(p.u, p.c)])
    assert spectral.pseudospectra_equal_sampled(A0, B0, s)["passed"]


def test_build_pair_fallback(pair_27):
    assert pair_27.passed
    assert pair_27.report["block_ratios"]["f"] > 1e3


def test_build_pair_float_backend():
    p = build_pair(ConstructionInput("powers", 100, n=2, m=5, backend="float"))
    assert p.passed and isinstance(p.u, complex)


def test_build_pair_jets_mode():
    rng = random.Random(12)
    f, g = random_jet_pair(rng)
    p = build_pair(ConstructionInput("jets", 50, f=f, g=g))
    assert p.passed
    fc = Jet(tuple(complex(x) * (1 + 0.5j) for x in f.coeffs))
    p = build_pair(ConstructionInput("jets", 50, f=fc, g=g.to_complex(), backend="float"))
    assert p.passed


def test_build_pair_star_jets():
    g = Jet((0, 1, 3, Fraction(1, 2), 2, 5, -1, 7))
    with pytest.raises(StarConditionSuspected):
        build_pair(ConstructionInput("jets", 10, f=MOBIUS, g=g))


def test_critical_samples_are_resolvent_hotspots(pair_23):
    # scaling the (9,10) entry by 7 pushes the 2x2 block above the C_t block here
    p = pair_23
    A = p.A.copy()
    A[8, 9] *= 7
    crit = critical_samples(p.u, p.c, 1.0)
    assert not spectral.pseudospectra_equal_sampled(A, p.B, crit)["passed"]
