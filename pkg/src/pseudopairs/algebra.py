"""Scalars and dense univariate polynomials.

Two coefficient backends share one polynomial type:

* exact: ``fractions.Fraction`` (ints are promoted), arithmetic is exact;
* float: Python ``complex``; trailing coefficients below
  ``DROP_TOL * max|coeff|`` are dropped on construction.

A :class:`Poly` is exact when every coefficient is rational.  Mixing an exact
polynomial with a float one yields a float polynomial.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import BothZero, DivisorZero, NonFinite, ZeroPolynomial

DROP_TOL = 1e-12
ROOT_SEP_TOL = 1e-7


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def to_scalar(x, exact: bool = True):
    """Coerce ``x`` to the backend's scalar type."""
    if exact:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Rational):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot represent {x!r} exactly")
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFinite(f"non-finite scalar {x!r}")
    return z


def _check_finite(z):
    if not is_exact(z) and not cmath.isfinite(z):
        raise NonFinite(f"non-finite coefficient {z!r}")
    return z


class Poly:
    """Immutable dense polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        exact = all(is_exact(c) for c in cs)
        if exact:
            cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            cs = [_check_finite(complex(c)) for c in cs]
            scale = max((abs(c) for c in cs), default=0.0)
            while cs and abs(cs[-1]) <= DROP_TOL * scale:
                cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    @property
    def degree(self):
        """Degree; ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        zero = 0
        return Poly([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
                     for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, z):
        return poly_eval(self, z)

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic form")
        lc = self.lc
        return Poly([c / lc for c in self.coeffs])

    def to_complex(self):
        return Poly([complex(c) for c in self.coeffs])

    def to_numpy(self):
        """Coefficient array in ascending order (complex128)."""
        return np.array([complex(c) for c in self.coeffs], dtype=complex)


def _as_poly(x):
    return x if isinstance(x, Poly) else Poly([x])


def poly_divmod(dividend: Poly, divisor: Poly):
    """Quotient and remainder with ``deg(rem) < deg(divisor)``."""
    if divisor.is_zero():
        raise DivisorZero("division by the zero polynomial")
    r = list(dividend.coeffs)
    d = divisor.coeffs
    dd = len(d) - 1
    lc = d[-1]
    if len(r) - 1 < dd:
        return Poly(), Poly(r)
    q = [0] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        coef = r[k] / lc
        q[k - dd] = coef
        if coef == 0:
            continue
        for i in range(dd + 1):
            r[k - dd + i] -= coef * d[i]
        r[k] = 0 * coef
    return Poly(q), Poly(r[:dd] if dd > 0 else [])


def poly_rem(dividend: Poly, divisor: Poly) -> Poly:
    return poly_divmod(dividend, divisor)[1]


def poly_eval(p: Poly, z):
    """Horner evaluation."""
    acc = 0 if p.exact and is_exact(z) else 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    if p.exact and is_exact(z):
        return Fraction(acc)
    return acc


def cauchy_root_bound(p: Poly) -> float:
    """``1 + max |a_k / a_deg|``; every root satisfies ``|z| < R``."""
    if p.is_zero():
        raise ZeroPolynomial("root bound of the zero polynomial")
    lc = abs(complex(p.lc))
    rest = [abs(complex(c)) / lc for c in p.coeffs[:-1]]
    return 1.0 + max(rest, default=0.0)


def _integer_primitive(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Integer pseudo-remainder ``lc(b)^(da-db+1) a mod b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i in range(db + 1):
            r[shift + i] -= lr * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _exact_gcd_degree(p: Poly, q: Poly) -> int:
    a, b = _integer_primitive(p), _integer_primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a = b
        if r:
            g = 0
            for c in r:
                g = math.gcd(g, c)
            r = [c // g for c in r]
        b = r
    return len(a) - 1


def _roots(p: Poly) -> np.ndarray:
    if p.degree < 1:
        return np.zeros(0, dtype=complex)
    return np.roots(p.to_numpy()[::-1])


def _float_gcd_degree(p: Poly, q: Poly) -> int:
    if p.degree < 1 or q.degree < 1:
        return 0
    scale = max(cauchy_root_bound(p), cauchy_root_bound(q))
    tol = ROOT_SEP_TOL * scale
    rp = list(_roots(p))
    rq = list(_roots(q))
    count = 0
    for r in rp:
        if not rq:
            break
        dists = [abs(r - s) for s in rq]
        k = int(np.argmin(dists))
        if dists[k] < tol:
            count += 1
            rq.pop(k)
    return count


def poly_gcd_degree(p: Poly, q: Poly) -> int:
    """Degree of ``gcd(p, q)``.

    Exact inputs go through a primitive pseudo-remainder sequence; float inputs
    are decided by pairing companion-matrix roots closer than
    ``ROOT_SEP_TOL`` times the larger Cauchy bound.  The float answer is a
    numerical judgement: roots of multiplicity > 1 spread by ``eps^(1/k)`` and
    distinct roots closer than the tolerance are merged.
    """
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if p.is_zero():
        return int(q.degree)
    if q.is_zero():
        return int(p.degree)
    if p.exact and q.exact:
        return _exact_gcd_degree(p, q)
    return _float_gcd_degree(p.to_complex(), q.to_complex())
