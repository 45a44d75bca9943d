"""Construction of 10x10 pairs with identical pseudospectra and large norm ratios.

Pipeline: choose ``u`` -> solve for ``c4..c7`` so that the S^6 and S^7
coefficients of ``f(C_t)`` and ``g(C_t)`` vanish -> certify the coprimality of
the resolvent cofactors -> certify a lower bound ``mu'`` on
``(1/2) inf_z max(|P1(z)|, |P2(z)|)`` -> search ``t`` -> assemble

    A_t = C_t (+) [[0, mu' t^6], [0, 0]],    B_t = C_t (+) 0.

For powers the pair is shifted to ``I + A_t, I + B_t`` so that
``f(z) = (1+z)^n`` turns into ``A^n``.
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import optimize

from . import spectral
from .algebra import Poly, cauchy_root_bound, is_exact, poly_gcd_degree
from .chain import (ChainValues, chain_cleared, chain_numeric, h, leading_audit, p1_p2)
from .errors import (CertificationFailed, ChainDegenerate, ExponentTooSmall,
                     JetInvariantError, NmEqual, NoAdmissibleU, PreconditionError,
                     SingularSystem, StarConditionSuspected, TSearchExhausted)
from .nilpotent import DIM, CtParams, Jet, ct_build, materialize, power_jet, series_apply

log = logging.getLogger(__name__)

N = DIM + 2
U_BUDGET = 64
FLOAT_NONZERO_TOL = 1e-8
FLOAT_KILL_TOL = 1e-10
T_SCHEDULE_MAX = 60
OVERFLOW_GUARD = 1e150
MU_BOX_BUDGET = 4_000_000

FLOAT_U_CANDIDATES = tuple(
    [complex(k) for k in (1, 2, 3)]
    + [complex(a, b) for a in range(1, 5) for b in (1, -1, 2, -2)]
    + [complex(k) for k in range(4, 100)]
)[:U_BUDGET]


# --- c-system ----------------------------------------------------------------

def _numeric_system(f: Jet, g: Jet, u):
    rows, rhs = [], []
    for hh in (f, g):
        rows.append([hh[1], 2 * hh[2], 3 * hh[3], 4 * hh[4] + 2 * u * hh[2]])
        rows.append([0 * hh[1], hh[1], 2 * hh[2], 3 * hh[3]])
        rhs.append(-(3 * hh[3] * u * u + 5 * u * hh[5] + hh[7]))
        rhs.append(-(hh[2] * u * u + 4 * u * hh[4] + hh[6]))
    order = (0, 1, 3, 2)
    return [rows[i] for i in order], [rhs[i] for i in order]


def _det_scalar(m):
    """Fraction-exact determinant by Gaussian elimination."""
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            fac = m[r][col] / m[col][col]
            if fac:
                m[r] = [a - fac * b for a, b in zip(m[r], m[col])]
    return det


def solve_c_system(f: Jet, g: Jet, u):
    """Solve the 4x4 linear system killing the S^6 and S^7 coefficients.

    Returns ``(c4, c5, c6, c7, U)`` where ``U`` is the system determinant.
    Exact jets and exact ``u`` give exact rationals via Cramer's rule.
    """
    exact = f.exact and g.exact and is_exact(u)
    if exact:
        u = Fraction(u)
        rows, rhs = _numeric_system(f, g, u)
        U = _det_scalar(rows)
        if U == 0:
            raise SingularSystem(f"system determinant U({u}) = 0")
        sol = []
        for col in range(4):
            mm = [[rhs[i] if j == col else rows[i][j] for j in range(4)] for i in range(4)]
            sol.append(_det_scalar(mm) / U)
        c7, c6, c5, c4 = sol
        return c4, c5, c6, c7, U
    fc, gc = f.to_complex(), g.to_complex()
    rows, rhs = _numeric_system(fc, gc, complex(u))
    a = np.array(rows, dtype=complex)
    U = complex(np.linalg.det(a))
    scale = float(np.prod(np.linalg.norm(a, axis=1)))
    if abs(U) <= FLOAT_NONZERO_TOL * scale:
        raise SingularSystem(f"system determinant U({u}) ~ 0 (|U| = {abs(U):.3e})")
    c7, c6, c5, c4 = (complex(x) for x in np.linalg.solve(a, np.array(rhs, dtype=complex)))
    return c4, c5, c6, c7, U


def kill_residuals(f: Jet, g: Jet, params: CtParams):
    """S^6 and S^7 coefficients of ``f(C_t)`` and ``g(C_t)``."""
    C = ct_build(params)
    out = []
    for hh in (f, g):
        fc = series_apply(hh, C)
        out.extend([fc[6], fc[7]])
    return out


# --- choice of u -------------------------------------------------------------

def _term_scale(*terms):
    return sum(abs(complex(x)) for x in terms)


def _float_admissible(cv: ChainValues, u, c4, c5, c6, c7) -> bool:
    A, B, C, E, F, G, H, I, J = (cv.A, cv.B, cv.C, cv.E, cv.F, cv.G, cv.H, cv.I, cv.J)
    sA = _term_scale(2 * u**3, c5 * u, c4**2)
    sE = _term_scale(A**2 * (2 * u**2 + c5), A * C * u, B**2 * u, A * B * c4)
    sJ = _term_scale(E * I**2, F * H * I, G * H**2)
    return (abs(A) > FLOAT_NONZERO_TOL * sA and abs(E) > FLOAT_NONZERO_TOL * sE
            and abs(J) > FLOAT_NONZERO_TOL * sJ)


def choose_u(f: Jet, g: Jet, budget: int = U_BUDGET):
    """First admissible ``u``: ``U(u) != 0`` and ``A E J != 0``.

    Returns ``(u, (c4, c5, c6, c7, U), chain_values, rejected)``.
    """
    if h(f, g, 1, 2) == 0:
        raise PreconditionError("h_{1,2} = f1 g2 - f2 g1 must be nonzero")
    exact = f.exact and g.exact
    candidates = [Fraction(k) for k in range(1, budget + 1)] if exact else FLOAT_U_CANDIDATES[:budget]
    rejected = []
    for u in candidates:
        try:
            sol = solve_c_system(f, g, u)
            cv = chain_numeric(u, *sol[:4])
        except SingularSystem:
            rejected.append((u, "U"))
            continue
        except ChainDegenerate as e:
            rejected.append((u, e.which))
            continue
        if exact:
            if cv.certified:
                return u, sol, cv, rejected
        elif _float_admissible(cv, u, *sol[:4]):
            return u, sol, cv, rejected
        rejected.append((u, "J"))
    raise NoAdmissibleU(f"no admissible u among {len(candidates)} candidates")


# --- certified mu ---------------------------------------------------------------

def _taylor_abs(coeffs: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """``|P^(k)(c) / k!|`` for every center; shape ``(len(centers), deg + 1)``."""
    d = len(coeffs) - 1
    work = np.broadcast_to(coeffs[::-1], (len(centers), d + 1)).astype(complex).copy()
    out = np.empty((len(centers), d + 1))
    # repeated synthetic division by (z - c) yields Taylor coefficients
    for k in range(d + 1):
        acc = work[:, 0].copy()
        for i in range(1, d + 1 - k):
            acc = acc * centers + work[:, i]
            work[:, i] = acc
        out[:, k] = np.abs(work[:, d - k])
    return out


def _disk_lower_bound(coeffs: np.ndarray, centers: np.ndarray, rho: float) -> np.ndarray:
    """Rigorous (up to rounding) lower bound of ``|P|`` on disks ``|z - c| <= rho``."""
    if len(coeffs) == 0:
        return np.zeros(len(centers))
    tay = _taylor_abs(coeffs, centers)
    powers = rho ** np.arange(tay.shape[1])
    tail = tay[:, 1:] @ powers[1:]
    absc = np.abs(coeffs) @ ((np.abs(centers)[:, None] + rho) ** np.arange(len(coeffs))).T
    return tay[:, 0] - tail - 1e-13 * absc


def _outer_bound(coeffs: np.ndarray, r: float) -> float:
    """Lower bound of ``|P(z)|`` on ``|z| = r``; nondecreasing past its first positive value."""
    d = len(coeffs) - 1
    if d < 1:
        return abs(coeffs[0]) if d == 0 else 0.0
    return abs(coeffs[-1]) * r**d - float(np.abs(coeffs[:-1]) @ r ** np.arange(d))


def _estimate_inf(c1, c2, R):
    def objective(x):
        z = complex(x[0], x[1])
        return max(abs(np.polyval(c1[::-1], z)), abs(np.polyval(c2[::-1], z)))

    xs = np.linspace(-R, R, 301)
    zz = xs[None, :] + 1j * xs[:, None]
    vals = np.maximum(np.abs(np.polyval(c1[::-1], zz)), np.abs(np.polyval(c2[::-1], zz)))
    best = float(vals.min())
    flat = np.argsort(vals, axis=None)[:12]
    for idx in flat:
        z0 = zz.flat[idx]
        res = optimize.minimize(objective, [z0.real, z0.imag], method="Nelder-Mead",
                                options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 2000})
        best = min(best, float(res.fun))
    # roots of each polynomial are candidates for the minimiser of the max
    for c in (c1, c2):
        if len(c) > 1:
            for z in np.roots(c[::-1]):
                best = min(best, objective([z.real, z.imag]))
    return best


@dataclass
class MuCertificate:
    mu: float
    mu_estimate: float
    radius: float
    boxes: int
    outer_bound: float

    def as_dict(self):
        return {"mu_certified": self.mu, "mu_estimate": self.mu_estimate,
                "radius": self.radius, "boxes": self.boxes, "outer_bound": self.outer_bound}


def mu_lower_bound(P1: Poly, P2: Poly, box_budget: int = MU_BOX_BUDGET,
                   full: bool = False):
    """Certified ``0 < mu' <= (1/2) inf_z max(|P1(z)|, |P2(z)|)``.

    Outside a radius ``R`` the leading term of the higher-degree polynomial
    dominates.  Inside, a quadtree over ``[-R, R]^2`` bounds both moduli from
    below on each box by a Taylor expansion at its center; boxes are split
    until every bound reaches half the estimated infimum.
    """
    c1, c2 = P1.to_numpy(), P2.to_numpy()
    if len(c1) == 0 and len(c2) == 0:
        raise CertificationFailed("both polynomials are zero")
    if len(c1) <= 1 and len(c2) <= 1:
        m = max(abs(c1[0]) if len(c1) else 0.0, abs(c2[0]) if len(c2) else 0.0)
        cert = MuCertificate(m / 2, m / 2, 0.0, 0, m)
        return cert if full else cert.mu
    hi = c1 if len(c1) >= len(c2) else c2
    R0 = max(cauchy_root_bound(p) for p in (P1, P2) if p.degree >= 1)
    m_hat = _estimate_inf(c1, c2, R0)
    scale = max(np.abs(c1).max(initial=0.0), np.abs(c2).max(initial=0.0))
    if not m_hat > 1e-13 * scale:
        raise CertificationFailed(f"max(|P1|, |P2|) nearly vanishes (estimate {m_hat:.3e}); "
                                  "common root suspected")
    R = R0
    while _outer_bound(hi, R) < m_hat:
        R *= 2
    outer = _outer_bound(hi, R)
    target = m_hat / 2
    # boxes: (center, half-side); process level by level
    centers = np.array([0j])
    half = R
    certified = math.inf
    boxes = 0
    while len(centers):
        boxes += len(centers)
        if boxes > box_budget:
            raise CertificationFailed(f"box budget {box_budget} exhausted at half-side {half:.3e}")
        rho = half * math.sqrt(2)
        # drop boxes entirely outside the outer disk (covered by the outer bound)
        keep = np.abs(centers) - rho <= R
        centers = centers[keep]
        lb = np.maximum(_disk_lower_bound(c1, centers, rho), _disk_lower_bound(c2, centers, rho))
        ok = lb >= target
        if ok.any():
            certified = min(certified, float(lb[ok].min()))
        bad = centers[~ok]
        if len(bad):
            vals = np.maximum(np.abs(np.polyval(c1[::-1], bad)), np.abs(np.polyval(c2[::-1], bad)))
            if vals.min() < target:
                # the estimate was too optimistic; lower it and keep refining
                m_hat = float(vals.min())
                target = m_hat / 2
                if not m_hat > 1e-13 * scale:
                    raise CertificationFailed("max(|P1|, |P2|) nearly vanishes inside the disk")
        half /= 2
        q = half
        centers = np.concatenate([bad + q * (sx + 1j * sy) for sx in (-1, 1) for sy in (-1, 1)])
    inf_lb = min(certified, outer)
    mu = inf_lb / 2
    if not mu > 0:
        raise CertificationFailed("certified bound is not positive")
    cert = MuCertificate(mu, m_hat / 2, R, boxes, outer)
    return cert if full else cert.mu


def brute_force_mu(P1: Poly, P2: Poly, radius: float, n: int = 2000) -> float:
    """``(1/2) min max(|P1|, |P2|)`` over an ``n x n`` grid on ``[-radius, radius]^2``."""
    c1, c2 = P1.to_numpy()[::-1], P2.to_numpy()[::-1]
    xs = np.linspace(-radius, radius, n)
    best = math.inf
    for chunk in np.array_split(xs, 20):
        zz = xs[None, :] + 1j * chunk[:, None]
        v = np.maximum(np.abs(np.polyval(c1, zz)), np.abs(np.polyval(c2, zz)))
        best = min(best, float(v.min()))
    return best / 2


# --- assembly and t search ------------------------------------------------------

def assemble_pair(params: CtParams, mu: float):
    """``A_t = C_t (+) [[0, mu t^6], [0, 0]]`` and ``B_t = C_t (+) 0`` as 10x10 arrays."""
    C = materialize(ct_build(params))
    A = np.zeros((N, N), dtype=complex)
    A[:DIM, :DIM] = C
    B = A.copy()
    A[DIM, DIM + 1] = mu * float(params.t) ** 6
    return A, B


def _two_by_two_norm(a0, w) -> float:
    return spectral.operator_norm(np.array([[a0, w], [0, a0]], dtype=complex))


def block_norms(f: Jet, params: CtParams, mu: float):
    """``(||f(A_t)||, ||f(B_t)||)`` through the block structure.

    ``f(B_t) = f(C_t) (+) f_0 I`` and ``f(A_t) = f(C_t) (+) [[f_0, f_1 mu t^6], [0, f_0]]``.
    """
    fc = spectral.operator_norm(materialize(series_apply(f, ct_build(params))))
    f0, f1 = complex(f[0]), complex(f[1])
    nb = max(fc, abs(f0))
    na = max(fc, _two_by_two_norm(f0, f1 * mu * float(params.t) ** 6))
    return na, nb


def t_schedule():
    return [Fraction(2) ** j for j in range(T_SCHEDULE_MAX + 1)]


def t_search(f: Jet, g: Jet, params: CtParams, mu: float, M: float):
    """Smallest ``t = 2^j`` with both norm ratios above ``M``.

    Returns ``(t, ratio_f, ratio_g)``.
    """
    last_safe = None
    for t in t_schedule():
        p = params.with_t(t if params_exact(params) else float(t))
        top = max(abs(complex(x)) for x in ct_build(p).a)
        if top > OVERFLOW_GUARD or mu * float(t) ** 6 > OVERFLOW_GUARD:
            raise TSearchExhausted(f"overflow guard reached; largest safe t = {last_safe}")
        last_safe = t
        fa, fb = block_norms(f, p, mu)
        ga, gb = block_norms(g, p, mu)
        rf, rg = fa / fb, ga / gb
        if rf > M and rg > M:
            return t, rf, rg
    raise TSearchExhausted(f"no t <= 2^{T_SCHEDULE_MAX} reached ratio {M}")


def params_exact(p: CtParams) -> bool:
    return all(is_exact(x) for x in (p.u,) + p.c)


# --- full pipeline -------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionInput:
    mode: str                     # "powers" or "jets"
    M: float
    n: int | None = None
    m: int | None = None
    f: Jet | None = None
    g: Jet | None = None
    backend: str = "exact"
    seed: int = 0
    tol: float = 1e-9
    samples: int = spectral.SAMPLE_RANDOM
    lemma_samples: int = 200

    def __post_init__(self):
        if self.mode not in ("powers", "jets"):
            raise PreconditionError(f"unknown mode {self.mode!r}")
        if self.backend not in ("exact", "float"):
            raise PreconditionError(f"unknown backend {self.backend!r}")
        if not self.M > 0 and self.M != 0:
            raise PreconditionError("M must be positive")
        if self.mode == "powers":
            if self.n is None or self.m is None:
                raise PreconditionError("powers mode needs n and m")
            if self.n < 2 or self.m < 2:
                raise ExponentTooSmall(f"exponents must be >= 2, got ({self.n}, {self.m})")
            if self.n == self.m:
                raise NmEqual("n == m is the single-function case, handled by earlier "
                              "single-power constructions; not built here")
        else:
            if self.f is None or self.g is None:
                raise PreconditionError("jets mode needs f and g")
            if self.f[1] == 0 or self.g[1] == 0:
                raise JetInvariantError("f'(0) and g'(0) must be nonzero")
            if h(self.f, self.g, 1, 2) == 0:
                raise JetInvariantError("h_{1,2} = f1 g2 - f2 g1 must be nonzero")

    def jets(self):
        if self.mode == "powers":
            f, g = power_jet(self.n), power_jet(self.m)
        else:
            f, g = self.f, self.g
        if self.backend == "float":
            f, g = f.to_complex(), g.to_complex()
        elif not (f.exact and g.exact):
            raise PreconditionError("exact backend needs rational jets")
        return f, g


@dataclass
class CounterexamplePair:
    A: np.ndarray
    B: np.ndarray
    t: object
    u: object
    c: tuple
    mu: float
    report: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.report.get("passed", False))


def _f_of_dense(f: Jet, X: np.ndarray, shift: bool) -> np.ndarray:
    """Dense ``f`` of a nilpotent 10x10 (or of ``I + nilpotent`` when ``shift``)."""
    Y = X - np.eye(len(X)) if shift else X
    acc = complex(f[DIM - 1]) * np.eye(len(X), dtype=complex)
    for k in range(DIM - 2, -1, -1):
        acc = acc @ Y + complex(f[k]) * np.eye(len(X))
    return acc


def verify_pair(A, B, f: Jet, g: Jet, M: float, shift: bool, samples, tol: float) -> dict:
    """Sampled pseudospectra equality, norm comparison and dense norm ratios."""
    ps = spectral.pseudospectra_equal_sampled(A, B, samples, tol)
    nc = spectral.norm_comparison_check(A, B)
    fa = spectral.operator_norm(_f_of_dense(f, A, shift))
    fb = spectral.operator_norm(_f_of_dense(f, B, shift))
    ga = spectral.operator_norm(_f_of_dense(g, A, shift))
    gb = spectral.operator_norm(_f_of_dense(g, B, shift))
    ratios = {"f": fa / fb, "g": ga / gb, "M": M,
              "passed": bool(fa / fb > M and ga / gb > M)}
    return {"pseudospectra": ps, "norm_comparison": nc, "dense_ratios": ratios,
            "passed": bool(ps["passed"] and nc["passed"] and ratios["passed"])}


def critical_samples(u, c, center: complex = 0j) -> np.ndarray:
    """Points where the 2x2 block comes closest to dominating the resolvent.

    For large ``t`` the norm of ``(I - zC_t)^{-1}`` is smallest relative to
    ``mu t^6 |z|`` near the roots of P1 (and of P2).  In the ``w`` variable of
    ``(wI - A)^{-1}`` these sit at ``w = center + 1/z``.
    """
    P1, P2 = p1_p2(u, *c)
    zs = np.concatenate([np.roots(P.to_numpy()[::-1]) for P in (P1, P2)])
    zs = zs[np.abs(zs) > 1e-12]
    return center + 1.0 / zs


def lemma_samples(n: int, seed: int, radius: float = 10.0):
    rng = np.random.default_rng(seed + 1)
    rad = radius * np.sqrt(rng.uniform(size=n))
    return rad * np.exp(2j * np.pi * rng.uniform(size=n))


def build_pair(inp: ConstructionInput) -> CounterexamplePair:
    """Run the whole construction and attach a verification report."""
    t0 = time.perf_counter()
    f, g = inp.jets()
    try:
        u, sol, cv, rejected = choose_u(f, g)
    except NoAdmissibleU as e:
        raise StarConditionSuspected(
            "no admissible u: the jets appear to satisfy the cubic star condition") from e
    c4, c5, c6, c7, Uval = sol
    exact = f.exact
    base = CtParams(Fraction(1) if exact else 1.0, u, c4, c5, c6, c7)

    kill = kill_residuals(f, g, base)
    if exact:
        kill_ok = all(r == 0 for r in kill)
    else:
        kscale = max(abs(complex(x)) for x in kill + [1.0])
        kill_ok = all(abs(r) <= FLOAT_KILL_TOL * kscale * 1e3 for r in kill)
    if not kill_ok:
        raise CertificationFailed("S^6/S^7 coefficients did not vanish after solving")

    P1, P2 = p1_p2(u, c4, c5, c6, c7)
    gcd_deg = poly_gcd_degree(P1, P2)
    if gcd_deg != 0:
        raise CertificationFailed(f"AEJ != 0 but gcd(P1, P2) has degree {gcd_deg}")
    cert = mu_lower_bound(P1, P2, full=True)
    mu = cert.mu

    t, rf, rg = t_search(f, g, base, mu, inp.M)
    params = base.with_t(t if exact else float(t))
    A, B = assemble_pair(params, mu)
    shift = inp.mode == "powers"
    if shift:
        A = A + np.eye(N)
        B = B + np.eye(N)

    center = 1.0 if shift else 0.0
    samples = np.concatenate([spectral.standard_samples(inp.seed, inp.samples, center),
                              critical_samples(u, (c4, c5, c6, c7), center)])
    ver = verify_pair(A, B, f, g, inp.M, shift, samples, inp.tol)
    A2, B2 = assemble_pair(base.with_t(2 * params.t), mu)
    if shift:
        A2, B2 = A2 + np.eye(N), B2 + np.eye(N)
    ps2 = spectral.pseudospectra_equal_sampled(A2, B2, samples, inp.tol)

    zs = lemma_samples(inp.lemma_samples, inp.seed)
    lemma = []
    for tt in sorted({Fraction(1), Fraction(2), Fraction(10), Fraction(t)}):
        lp = base.with_t(tt if exact else float(tt))
        lemma.append(spectral.lemma_lower_bound_check(lp, mu, zs, inp.tol, raise_on_fail=False))
    lemma_ok = all(r["passed"] for r in lemma)

    report = {
        "input": {"mode": inp.mode, "n": inp.n, "m": inp.m, "M": inp.M,
                  "backend": inp.backend, "seed": inp.seed, "tol": inp.tol,
                  "samples": inp.samples, "sample_center": center,
                  "f": list(f.coeffs), "g": list(g.coeffs)},
        "u": u, "rejected_u": [[x, why] for x, why in rejected],
        "U_value": Uval,
        "coefficient_kill": {"residuals": kill, "exact": exact, "passed": kill_ok},
        "chain": {"A": cv.A, "E": cv.E, "J": cv.J, "AEJ_nonzero": cv.certified,
                  "gcd_degree_P1_P2": gcd_deg},
        "mu": cert.as_dict(),
        "t": t,
        "block_ratios": {"f": rf, "g": rg, "M": inp.M},
        "verification": ver,
        "pseudospectra_2t": ps2,
        "lemma_bound": lemma,
        "elapsed_s": None,
    }
    report["passed"] = bool(kill_ok and ver["passed"] and ps2["passed"] and lemma_ok
                            and cv.certified)
    report["elapsed_s"] = time.perf_counter() - t0
    log.info("built pair: u=%s t=%s mu=%.3e ratios=(%.3e, %.3e)", u, t, mu, rf, rg)
    return CounterexamplePair(A, B, t, u, (c4, c5, c6, c7), mu, report)


def chain_audit(f: Jet, g: Jet, powers: tuple | None = None) -> dict:
    """Degrees and leading coefficients of the cleared chain versus predictions."""
    from .conditions import p_poly, s_poly
    cc = chain_cleared(f, g)
    entries = [e.as_dict() for e in leading_audit(cc, f, g)]
    out = {"degrees": {k: int(getattr(cc, k).degree) if not getattr(cc, k).is_zero() else -1
                       for k in ("U", "b4", "b5", "b6", "b7", "Ap", "Bp", "Cp", "Dp",
                                 "Ep", "Fp", "Gp", "Hp", "Ip", "Jp")},
           "leading": entries}
    if powers is not None:
        n, m = powers
        pref = ((m - 1) * m**58 * (m + 1) * (n - 1) * n**58 * (n + 1) * (n - m) ** 58)
        pred75 = pref * Fraction(-29296875, 131072) * s_poly(n, m)
        pred74 = pref * Fraction(1953125, 1572864) * p_poly(n, m)
        c75, c74 = cc.Jp.coeff(75), cc.Jp.coeff(74)
        out["powers"] = {
            "n": n, "m": m, "s": s_poly(n, m), "p": p_poly(n, m),
            "Jp_u75": str(c75), "Jp_u74": str(c74),
            "predicted_u75": str(pred75), "predicted_u74": str(pred74),
            "match_u75": c75 == pred75, "match_u74": c74 == pred74,
        }
    return out
