"""The 8x8 algebra generated by the unilateral shift.

An element ``a_0 I + a_1 S + ... + a_7 S^7`` is stored as its 8 coefficients.
Since ``S^8 = 0`` the algebra is the truncated power-series ring
``K[x]/(x^8)``, so holomorphic functional calculus of a strictly nilpotent
element only needs the first 8 Taylor coefficients of the function.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .algebra import is_exact
from .errors import JetLengthError, NonNilpotentArgument, TTooSmall

DIM = 8


def _norm_coeffs(values):
    vals = list(values)
    if all(is_exact(v) for v in vals):
        return tuple(Fraction(v) for v in vals)
    return tuple(complex(v) for v in vals)


@dataclass(frozen=True)
class Jet:
    """Taylor coefficients ``f_0..f_7`` at the expansion point 0."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if len(cs) != DIM:
            raise JetLengthError(f"a jet has exactly {DIM} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", _norm_coeffs(cs))

    def __getitem__(self, k):
        return self.coeffs[k]

    @property
    def exact(self) -> bool:
        return isinstance(self.coeffs[0], Fraction)

    def to_complex(self) -> "Jet":
        return Jet(tuple(complex(c) for c in self.coeffs))

    def __mul__(self, other: "Jet") -> "Jet":
        """Jet of the pointwise product (truncated Cauchy product)."""
        return Jet(_convolve(self.coeffs, other.coeffs))

    def __add__(self, other: "Jet") -> "Jet":
        return Jet(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "Jet":
        return Jet(tuple(c * a for a in self.coeffs))


def power_jet(n: int) -> Jet:
    """Jet of ``(1 + z)^n`` at 0: binomial coefficients."""
    return Jet(tuple(Fraction(comb(n, k)) for k in range(DIM)))


def polynomial_jet(coeffs, center=0) -> Jet:
    """Jet at ``center`` of the polynomial ``sum coeffs[k] z^k``.

    Re-expands by the binomial theorem; the result is the jet of
    ``w -> p(center + w)`` at ``w = 0``.
    """
    cs = list(coeffs)
    out = []
    for j in range(DIM):
        acc = 0
        for k in range(j, len(cs)):
            acc += comb(k, j) * cs[k] * center ** (k - j)
        out.append(acc)
    return Jet(tuple(out))


def _convolve(a, b):
    out = []
    for k in range(DIM):
        acc = 0 * a[0]
        for i in range(k + 1):
            acc += a[i] * b[k - i]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ShiftPoly:
    """``a_0 I + sum_{k>=1} a_k S^k`` on C^8."""

    a: tuple

    def __post_init__(self):
        cs = tuple(self.a)
        if len(cs) != DIM:
            raise ValueError(f"ShiftPoly needs {DIM} coefficients, got {len(cs)}")
        object.__setattr__(self, "a", _norm_coeffs(cs))

    def __getitem__(self, k):
        return self.a[k]

    @classmethod
    def identity(cls):
        return cls((1,) + (0,) * (DIM - 1))

    @classmethod
    def shift(cls):
        return cls((0, 1) + (0,) * (DIM - 2))

    @property
    def nilpotent(self) -> bool:
        return self.a[0] == 0

    def __add__(self, other):
        return ShiftPoly(tuple(x + y for x, y in zip(self.a, other.a)))

    def __sub__(self, other):
        return ShiftPoly(tuple(x - y for x, y in zip(self.a, other.a)))

    def __mul__(self, other):
        if isinstance(other, ShiftPoly):
            return ShiftPoly(_convolve(self.a, other.a))
        return ShiftPoly(tuple(x * other for x in self.a))

    __rmul__ = __mul__


@dataclass(frozen=True)
class CtParams:
    t: object
    u: object
    c4: object
    c5: object
    c6: object
    c7: object

    def __post_init__(self):
        if self.t < 1:
            raise TTooSmall(f"t must be >= 1, got {self.t!r}")

    @property
    def c(self):
        return (self.c4, self.c5, self.c6, self.c7)

    def with_t(self, t) -> "CtParams":
        return CtParams(t, self.u, self.c4, self.c5, self.c6, self.c7)


def ct_build(p: CtParams) -> ShiftPoly:
    """``C_t = tS + u t^3 S^3 + c4 t^4 S^4 + ... + c7 t^7 S^7``."""
    t = p.t
    return ShiftPoly((0, t, 0, p.u * t**3, p.c4 * t**4, p.c5 * t**5,
                      p.c6 * t**6, p.c7 * t**7))


def series_apply(f: Jet, C: ShiftPoly) -> ShiftPoly:
    """``f(C) = sum_k f_k C^k`` for strictly nilpotent ``C`` (Horner)."""
    if not C.nilpotent:
        raise NonNilpotentArgument("series_apply needs a_0 == 0")
    acc = ShiftPoly((f[DIM - 1],) + (0,) * (DIM - 1))
    for k in range(DIM - 2, -1, -1):
        acc = acc * C
        acc = ShiftPoly((acc.a[0] + f[k],) + acc.a[1:])
    return acc


def resolvent_neumann(z, C: ShiftPoly) -> ShiftPoly:
    """``(I - zC)^{-1} = sum_{k<8} (zC)^k``, exact because ``C^8 = 0``."""
    if not C.nilpotent:
        raise NonNilpotentArgument("resolvent_neumann needs a_0 == 0")
    zc = C * z
    acc = ShiftPoly.identity()
    for _ in range(DIM - 1):
        acc = ShiftPoly.identity() + acc * zc
    return acc


def materialize(p: ShiftPoly) -> np.ndarray:
    """Dense upper-triangular Toeplitz matrix, ``a_k`` on the k-th superdiagonal."""
    m = np.zeros((DIM, DIM), dtype=complex)
    for k, ak in enumerate(p.a):
        if ak != 0:
            m += complex(ak) * np.eye(DIM, k=k)
    return m
