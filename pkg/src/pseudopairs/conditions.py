"""The cubic star condition, its Schwarzian form, and the integer identities
used for the powers construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import is_exact
from .errors import IdentityFailed, IndexOutOfRange, PreconditionError
from .nilpotent import Jet


def _norm(vals):
    vals = tuple(vals)
    if all(is_exact(v) for v in vals):
        return tuple(Fraction(v) for v in vals)
    return tuple(complex(v) for v in vals)


@dataclass(frozen=True)
class DerivJet:
    """Raw derivatives ``f(z0), f'(z0), ..., f''''(z0)``."""

    d: tuple

    def __post_init__(self):
        if len(self.d) != 5:
            raise PreconditionError(f"DerivJet needs 5 derivatives, got {len(self.d)}")
        object.__setattr__(self, "d", _norm(self.d))

    def __getitem__(self, k):
        return self.d[k]

    @classmethod
    def from_jet(cls, f: Jet) -> "DerivJet":
        return cls(tuple(factorial(k) * f[k] for k in range(5)))

    def to_taylor(self) -> tuple:
        """Taylor coefficients ``f^(k)(z0) / k!`` for ``k <= 4``."""
        return tuple(self.d[k] / factorial(k) for k in range(5))

    def __add__(self, other):
        return DerivJet(tuple(a + b for a, b in zip(self.d, other.d)))

    def scale(self, c):
        return DerivJet(tuple(c * a for a in self.d))


def monomial_derivs(n: int, z0) -> DerivJet:
    """Derivatives of ``z^n`` at ``z0``."""
    out = []
    for k in range(5):
        if k > n:
            out.append(0)
        else:
            out.append(Fraction(factorial(n), factorial(n - k)) * z0 ** (n - k))
    return DerivJet(tuple(out))


def mobius_derivs(a, b, c, d, z0) -> DerivJet:
    """Derivatives of ``(a z + b) / (c z + d)`` at ``z0``.

    ``f^(k) = (ad - bc) (-1)^(k+1) k! c^(k-1) / (c z0 + d)^(k+1)``.
    """
    vals = (a, b, c, d, z0)
    if all(is_exact(v) for v in vals):
        a, b, c, d, z0 = (Fraction(v) for v in vals)
    w = c * z0 + d
    if w == 0:
        raise PreconditionError("pole at z0")
    det = a * d - b * c
    out = [(a * z0 + b) / w]
    for k in range(1, 5):
        out.append(det * (-1) ** (k + 1) * factorial(k) * c ** (k - 1) / w ** (k + 1))
    return DerivJet(tuple(out))


def h_tilde(i: int, j: int, f: DerivJet, g: DerivJet):
    """``(f^(i) g^(j) - f^(j) g^(i)) / (i! j!)``."""
    if not (1 <= i <= 4 and 1 <= j <= 4):
        raise IndexOutOfRange(f"h_tilde indices must lie in 1..4, got ({i}, {j})")
    num = f[i] * g[j] - f[j] * g[i]
    den = factorial(i) * factorial(j)
    return Fraction(num) / den if is_exact(num) else num / den


def star_value(f: DerivJet, g: DerivJet):
    """The cubic bracket; ``f, g`` satisfy the star condition iff this is 0."""
    h = lambda i, j: h_tilde(i, j, f, g)  # noqa: E731
    return (h(1, 2) * (h(2, 4) ** 2 - h(3, 4) * (2 * h(2, 3) + h(1, 4)))
            + h(1, 3) * (h(1, 3) * h(3, 4) - h(2, 3) * h(2, 4)) + h(2, 3) ** 3)


def schwarzian_bracket(f: DerivJet):
    """``(Sf, Sf', F)`` with ``Sf = 2f'f''' - 3f''^2`` and ``F = f''f''''/48 - f'''^2/36``."""
    _, d1, d2, d3, d4 = f.d
    sf = 2 * d1 * d3 - 3 * d2**2
    dsf = 2 * d1 * d4 - 4 * d2 * d3
    if is_exact(d2) and is_exact(d3) and is_exact(d4):
        F = Fraction(d2 * d4, 48) - Fraction(d3**2, 36)
    else:
        F = d2 * d4 / 48 - d3**2 / 36
    return sf, dsf, F


# The star bracket equals minus the Schwarzian combination below; the printed
# form of this identity has the opposite sign (checked exactly on random jets).
SCHWARZIAN_FORM_FACTOR = -1


def star_schwarzian_form(f: DerivJet, g: DerivJet):
    """The Schwarzian combination as printed (its overall sign is flipped).

    ``star_value(f, g) == SCHWARZIAN_FORM_FACTOR * star_schwarzian_form(f, g)``.
    Every term carries ``Sf``, ``Sf'`` or ``F`` of f, and likewise for g, so
    the bracket vanishes whenever f or g is a Mobius transformation.
    """
    h = lambda i, j: h_tilde(i, j, f, g)  # noqa: E731
    sf, dsf, F = schwarzian_bracket(f)
    sg, dsg, G = schwarzian_bracket(g)
    exact = all(is_exact(x) for x in (sf, dsf, F, sg, dsg, G))
    q = (lambda k: Fraction(1, k)) if exact else (lambda k: 1.0 / k)
    return (q(12) * (h(1, 4) - h(2, 3)) * (sf * G + F * sg)
            - q(576) * h(2, 4) * (sf * dsg + dsf * sg)
            - q(48) * h(1, 3) * (dsf * G + F * dsg)
            + q(72) * h(3, 4) * sf * sg
            + q(1152) * h(2, 3) * dsf * dsg
            + 2 * h(1, 2) * F * G)


def star_identity_residual(f: DerivJet, g: DerivJet):
    """``star_value + (Schwarzian combination)``; identically zero."""
    return star_value(f, g) - SCHWARZIAN_FORM_FACTOR * star_schwarzian_form(f, g)


# --- integer polynomials for the powers construction -------------------------

def s_poly(n, m):
    return n * n - 4 * m * n + m * m + 3


def p_poly(n, m):
    return (446 * n**4 - 2649 * m * n**3 - 60 * n**3 + 4412 * m**2 * n**2 + 180 * m * n**2
            + 982 * n**2 - 2649 * m**3 * n + 180 * m**2 * n - 1411 * m * n - 180 * n
            + 446 * m**4 - 60 * m**3 + 982 * m**2 - 180 * m - 828)


def q_poly(n, m):
    return 446 * n**2 + (-865 * m - 60) * n + 506 * m**2 - 60 * m - 356


def r_poly(n, m):
    return 60 * (m - 1) * (m + 1) * (4 * m * n - m**2 - 4)


def r_factor(n, m):
    """The factor ``4mn - m^2 - 4`` of ``r``."""
    return 4 * m * n - m**2 - 4


def powers_identity_checks(grid: int = 25, search: int = 50) -> dict:
    """Verify the division identities and the no-common-zero conclusion.

    (i)   ``p = q s + r`` on ``1 <= n, m <= grid``;
    (ii)  ``16 m^2 s = (4mn - 15m^2 + 4)(4mn - m^2 - 4) + (m^4 - 8m^2 + 16)``
          on the same grid, i.e. division of ``s`` by the factor of ``r``;
    (iii) no ``2 <= n != m <= search`` has ``s = p = 0``;
    (iv)  ``r = 0`` with ``m >= 2`` and ``s = 0`` forces ``m = 2, n = 1``.
    """
    n_checked = 0
    for n in range(1, grid + 1):
        for m in range(1, grid + 1):
            n_checked += 1
            if p_poly(n, m) != q_poly(n, m) * s_poly(n, m) + r_poly(n, m):
                raise IdentityFailed("p = q s + r", (n, m))
            lhs = 16 * m * m * s_poly(n, m)
            rhs = (4 * m * n - 15 * m * m + 4) * r_factor(n, m) + (m**4 - 8 * m * m + 16)
            if lhs != rhs:
                raise IdentityFailed("16 m^2 s = (4mn - 15m^2 + 4)(4mn - m^2 - 4) + (m^2 - 4)^2",
                                     (n, m))
    common = [(n, m) for n in range(2, search + 1) for m in range(2, search + 1)
              if n != m and s_poly(n, m) == 0 and p_poly(n, m) == 0]
    if common:
        raise IdentityFailed("no common zero of s and p", common[0])
    # deduction chain: s = 0 and 4mn - m^2 - 4 = 0 forces (m^2 - 4)^2 = 0
    deduction = [(n, m) for n in range(-search, search + 1) for m in range(-search, search + 1)
                 if m != 0 and s_poly(n, m) == 0 and r_factor(n, m) == 0]
    if any(abs(m) != 2 for _, m in deduction):
        raise IdentityFailed("s = 0 and r = 0 force m = +-2", deduction)
    s_zeros = [(n, m) for n in range(2, search + 1) for m in range(2, search + 1)
               if n != m and s_poly(n, m) == 0]
    return {"grid": grid, "pairs_checked": n_checked, "search": search,
            "common_zeros": common, "s_zero_pairs": s_zeros,
            "deduction_solutions": deduction, "passed": True}
