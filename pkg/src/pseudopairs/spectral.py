"""Dense matrix numerics for resolvent norms and pseudospectra.

All matrices here are tiny (at most 10x10); singular values come from a full
SVD, except that resolvents of upper-triangular matrices are formed by
back-substitution first.  Reports are plain dicts so they serialize directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import (BoundViolated, DimensionMismatch, NonFinite,
                     PrecondSpectralRadius)
from .nilpotent import CtParams, ShiftPoly, ct_build, materialize, resolvent_neumann

INF_THRESHOLD = 1e-300
SAMPLE_RADII = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0)
SAMPLE_ANGLES = 32
SAMPLE_RANDOM = 40
KREISS_SLACK = 0.05


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has non-finite entries")
    return a


def operator_norm(m) -> float:
    """Spectral norm (largest singular value)."""
    a = _as_matrix(m)
    if a.size == 0:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def operator_norm_power(m, maxiter: int = 20000, rtol: float = 1e-15, seed: int = 0) -> float:
    """Spectral norm by power iteration on ``m^H m``; independent of the SVD path."""
    a = _as_matrix(m)
    if not a.any():
        return 0.0
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(a.shape[1]) + 1j * rng.standard_normal(a.shape[1])
    x /= np.linalg.norm(x)
    est = 0.0
    for _ in range(maxiter):
        y = a.conj().T @ (a @ x)
        ny = np.linalg.norm(y)
        if ny == 0.0:
            return 0.0
        x = y / ny
        new = math.sqrt(ny)
        if abs(new - est) <= rtol * new:
            est = new
            break
        est = new
    # final Rayleigh quotient is sharper than the iterate norm
    return float(np.linalg.norm(a @ x))


def sigma_min(m) -> float:
    a = _as_matrix(m)
    return float(np.linalg.svd(a, compute_uv=False)[-1])


def is_upper_triangular(a) -> bool:
    return not np.tril(a, -1).any()


def shifted_sigma_mins(zs, a) -> np.ndarray:
    """``sigma_min(zI - a)`` for every ``z`` in ``zs`` (any shape).

    Upper-triangular ``a`` goes through the inverse, ``1 / ||(zI - a)^{-1}||``:
    with entries as large as ``1e40`` an SVD of ``zI - a`` loses ``sigma_min``
    entirely, while back-substitution keeps errors relative to the large
    entries of the inverse.  (LU with partial pivoting performs no row swaps on
    a nonsingular upper-triangular matrix, so the batched solve below is plain
    back-substitution.)
    """
    a = _as_matrix(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionMismatch("resolvent of a non-square matrix")
    zs = np.asarray(zs, dtype=complex)
    stack = zs.reshape(-1, 1, 1) * np.eye(n) - a
    if not is_upper_triangular(a):
        return np.linalg.svd(stack, compute_uv=False)[:, -1].reshape(zs.shape)
    out = np.zeros(len(stack))
    diag = np.diagonal(stack, axis1=1, axis2=2)
    ok = np.all(diag != 0, axis=1)
    if ok.any():
        with np.errstate(over="ignore", invalid="ignore"):
            inv = np.linalg.solve(stack[ok], np.broadcast_to(np.eye(n, dtype=complex), stack[ok].shape))
        finite = np.all(np.isfinite(inv), axis=(1, 2))
        norms = np.full(len(inv), np.inf)
        if finite.any():
            norms[finite] = np.linalg.svd(inv[finite], compute_uv=False)[:, 0]
        out[ok] = 1.0 / norms
    return out.reshape(zs.shape)


def shifted_sigma_min(z, a) -> float:
    """``sigma_min(zI - a)`` at a single point; see :func:`shifted_sigma_mins`."""
    return float(shifted_sigma_mins([z], a)[0])


def resolvent_norms(zs, a) -> np.ndarray:
    """``||(zI - a)^{-1}||`` at every ``z``; ``inf`` where ``sigma_min < 1e-300``."""
    s = shifted_sigma_mins(zs, a)
    with np.errstate(divide="ignore"):
        return np.where(s < INF_THRESHOLD, np.inf, 1.0 / np.maximum(s, INF_THRESHOLD))


def resolvent_norm(z, a) -> float:
    """``||(zI - a)^{-1}|| = 1 / sigma_min(zI - a)``; ``math.inf`` below ``1e-300``."""
    return float(resolvent_norms([z], a)[0])


def standard_samples(seed: int = 0, n_random: int = SAMPLE_RANDOM, center: complex = 0j) -> np.ndarray:
    """Concentric circles (7 radii x 32 angles) plus random points in |z| <= 10, about ``center``."""
    ang = np.exp(2j * np.pi * np.arange(SAMPLE_ANGLES) / SAMPLE_ANGLES)
    rings = np.concatenate([r * ang for r in SAMPLE_RADII])
    rng = np.random.default_rng(seed)
    rad = 10.0 * np.sqrt(rng.uniform(size=n_random))
    rnd = rad * np.exp(2j * np.pi * rng.uniform(size=n_random))
    return np.concatenate([rings, rnd]) + center


def lemma_lower_bound_check(params: CtParams, mu: float, z_samples, rel_slack: float = 1e-9,
                            raise_on_fail: bool = True) -> dict:
    """Check ``||(I - zC_t)^{-1}|| >= 1 + mu t^6 |z|`` and the half-max bound.

    The second check is ``||(I - zC_t)^{-1}|| >= 1 + max_k |r_k| / 2`` over the
    superdiagonal coefficients ``r_k`` of the resolvent; it holds for any
    unipotent upper-triangular Toeplitz matrix because the 2x2 compression
    ``[[1, r_k], [0, 1]]`` has norm ``(|r_k| + sqrt(|r_k|^2 + 4)) / 2``.
    """
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    C = ct_build(params)
    C = ShiftPoly(tuple(complex(x) for x in C.a))   # samples are complex anyway
    t6 = float(params.t) ** 6
    worst = math.inf
    worst_z = None
    worst_half = math.inf
    n = 0
    for z in np.asarray(z_samples, dtype=complex).ravel():
        R = resolvent_neumann(complex(z), C)
        lhs = operator_norm(materialize(R))
        rhs = 1.0 + mu * t6 * abs(z)
        half = 1.0 + 0.5 * max(abs(c) for c in R.a[1:])
        margin = (lhs - rhs) / rhs
        margin_half = (lhs - half) / half
        if margin < worst:
            worst, worst_z = margin, complex(z)
        worst_half = min(worst_half, margin_half)
        n += 1
        if raise_on_fail and (margin < -rel_slack or margin_half < -rel_slack):
            raise BoundViolated(complex(z), lhs, max(rhs, half))
    passed = worst >= -rel_slack and worst_half >= -rel_slack
    return {"t": float(params.t), "mu": mu, "samples": n, "rel_slack": rel_slack,
            "worst_rel_margin": worst, "worst_z": _cjson(worst_z),
            "worst_rel_margin_halfmax": worst_half, "passed": bool(passed)}


def _cjson(z):
    return None if z is None else [z.real, z.imag]


def _rel_diff(x: float, y: float) -> float:
    if math.isinf(x) or math.isinf(y):
        return 0.0 if x == y else math.inf
    return abs(x - y) / max(abs(x), abs(y), INF_THRESHOLD)


def pseudospectra_equal_sampled(a, b, samples, rel_tol: float = 1e-9) -> dict:
    """Largest relative gap between the resolvent norms of ``a`` and ``b`` over samples.

    The equality being checked is for every complex z; the report records that
    only the listed samples were examined.
    """
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    zs = np.asarray(samples, dtype=complex).ravel()
    ra, rb = resolvent_norms(zs, a), resolvent_norms(zs, b)
    worst, wz = 0.0, None
    n = len(zs)
    for z, x, y in zip(zs, ra, rb):
        d = _rel_diff(float(x), float(y))
        if d > worst or wz is None:
            worst, wz = max(d, worst), complex(z)
    return {"samples": n, "rel_tol": rel_tol, "max_rel_diff": worst,
            "witness_z": _cjson(wz), "passed": bool(worst <= rel_tol),
            "note": "sampled check; equality is asserted only at the listed points"}


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int
    eps_levels: tuple = ()

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("grid window must have re_min < re_max and im_min < im_max")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs nx, ny >= 2")
        if any(e <= 0 for e in self.eps_levels):
            raise ValueError("eps levels must be positive")

    def nodes(self) -> np.ndarray:
        """Complex grid nodes, shape ``(ny, nx)``; row index runs over Im."""
        xs = np.linspace(self.re_min, self.re_max, self.nx)
        ys = np.linspace(self.im_min, self.im_max, self.ny)
        return xs[None, :] + 1j * ys[:, None]


def pseudospectrum_grid(a, g: GridSpec) -> np.ndarray:
    """``sigma_min(zI - a)`` at each grid node, shape ``(ny, nx)``.

    ``z`` lies in the eps-pseudospectrum iff the value is below eps.
    """
    return shifted_sigma_mins(g.nodes(), a)


def _spectral_radius(a) -> float:
    return float(np.max(np.abs(np.linalg.eigvals(a)))) if a.size else 0.0


def kreiss_constant(a, n_radii: int = 60, n_angles: int = 64) -> tuple[float, complex]:
    """Estimate ``sup_{|z|>1} (|z| - 1) ||(zI - a)^{-1}||`` by sampling and local refinement."""
    a = _as_matrix(a)

    def val(r, th):
        z = r * np.exp(1j * th)
        rn = resolvent_norm(z, a)
        return (r - 1.0) * rn

    radii = 1.0 + np.logspace(-4, 4, n_radii)
    angles = 2 * np.pi * np.arange(n_angles) / n_angles
    best, arg = -math.inf, (radii[0], 0.0)
    for r in radii:
        for th in angles:
            v = val(r, th)
            if v > best:
                best, arg = v, (r, th)

    def neg(x):
        return -val(1.0 + math.exp(x[0]), x[1])

    res = optimize.minimize(neg, [math.log(arg[0] - 1.0), arg[1]], method="Nelder-Mead",
                            options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 4000})
    if -res.fun > best:
        best = -res.fun
        arg = (1.0 + math.exp(res.x[0]), res.x[1])
    return float(best), complex(arg[0] * np.exp(1j * arg[1]))


def kreiss_sanity(a, k_max: int = 200, slack: float = KREISS_SLACK) -> dict:
    """Check ``r(a) <= sup_k ||a^k|| <= e N r(a)`` with a sampled Kreiss constant."""
    a = _as_matrix(a)
    n = a.shape[0]
    nilpotent = not np.linalg.matrix_power(a, n).any() if n else True
    if not nilpotent and _spectral_radius(a) >= 1.0:
        raise PrecondSpectralRadius("Kreiss check needs spectral radius < 1 or a nilpotent matrix")
    r_hat, z_at = kreiss_constant(a)
    p = np.eye(n, dtype=complex)
    sup = 1.0 if n else 0.0
    k_at = 0
    for k in range(1, k_max + 1):
        p = p @ a
        nk = operator_norm(p)
        if nk > sup:
            sup, k_at = nk, k
        if not p.any():
            break
    upper = math.e * n * r_hat * (1.0 + slack)
    return {"kreiss_estimate": r_hat, "kreiss_argmax": _cjson(z_at), "sup_power_norm": sup,
            "sup_power_k": k_at, "upper_bound": upper, "slack": slack,
            "passed": bool(r_hat <= sup * (1.0 + 1e-9) and sup <= upper)}


def norm_comparison_check(a, b, rel_slack: float = 1e-9) -> dict:
    """Check ``||a|| <= 2||b||`` and ``||b|| <= 2||a||``."""
    na, nb = operator_norm(a), operator_norm(b)
    ok = na <= 2 * nb * (1 + rel_slack) and nb <= 2 * na * (1 + rel_slack)
    return {"norm_a": na, "norm_b": nb, "ratio": na / nb if nb else math.inf,
            "rel_slack": rel_slack, "passed": bool(ok)}
