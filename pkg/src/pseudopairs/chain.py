"""Coprimality certificate for the two resolvent cofactor polynomials.

For ``C_t = tS + u t^3 S^3 + c4 t^4 S^4 + ... + c7 t^7 S^7`` the S^7 and S^6
coefficients of ``(I - zC_t)^{-1}`` are ``t^7 z P1(z)`` and ``t^6 z P2(z)``.
A scaled Euclidean remainder sequence

    P3 = P1 mod P2,  P4 = u^2 P2 mod P3,  P5 = A^2 P3 mod P4,  P6 = E^2 P4 mod P5

ends in ``J = E I^2 - F H I + G H^2``; ``A E J != 0`` certifies
``gcd(P1, P2) = 1``.

Everything is computed twice: by literal remainders and by closed-form
coefficient formulas, and the two are cross-checked.

The cleared chain treats ``u`` as an indeterminate: with
``c_k = b_k(u) / U(u)`` from Cramer's rule, ``A' = U^2 A``, ``E' = U^5 E``,
``H' = U^12 H`` and ``J' = U^29 J`` are polynomials in ``u``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .algebra import Poly, is_exact, poly_rem
from .errors import CertificationError, ChainDegenerate, H12Zero, UZero
from .nilpotent import Jet

FLOAT_REL_TOL = 1e-9


def p1_p2(u, c4, c5, c6, c7):
    """The cofactors of ``z`` in the S^7 and S^6 resolvent coefficients (t = 1).

    P1 has no z^5 term; P2 is monic of degree 5.
    """
    p1 = Poly([c7, 2 * (u * c4 + c6), 3 * (u * u + c5), 4 * c4, 5 * u, 0, 1])
    p2 = Poly([c6, u * u + 2 * c5, 3 * c4, 4 * u, 0, 1])
    return p1, p2


def closed_forms(u, c4, c5, c6, c7) -> dict:
    """Closed-form chain quantities A..J as functions of ``u, c4..c7``.

    ``B`` uses ``-c6 u`` in its middle term (the remainder forces it).
    """
    A = 2 * u**3 - c5 * u + c4**2
    B = 3 * c4 * u**2 - c6 * u + c4 * c5
    C = u**4 + 2 * c5 * u**2 + (2 * c4**2 - c7) * u + c4 * c6
    D = c6 * u**2 + c4 * c7
    E = A**2 * (2 * u**2 + c5) - A * C * u + B**2 * u - A * B * c4
    F = A**2 * (2 * c4 * u + c6) + C * (B * u - A * c4) - A * D * u
    G = D * (B * u - A * c4) + A**2 * c7
    H = -A * E * G + A * F**2 - B * E * F + C * E**2
    I = (A * F - B * E) * G + D * E**2
    J = E * I**2 - F * H * I + G * H**2
    return dict(A=A, B=B, C=C, D=D, E=E, F=F, G=G, H=H, I=I, J=J)


@dataclass(frozen=True)
class ChainValues:
    P1: Poly
    P2: Poly
    P3: Poly
    P4: Poly
    P5: Poly
    P6: Poly
    A: object
    B: object
    C: object
    D: object
    E: object
    F: object
    G: object
    H: object
    I: object
    J: object

    @property
    def AEJ(self):
        return self.A * self.E * self.J

    @property
    def certified(self) -> bool:
        return self.AEJ != 0


def _agree(x, y, scale) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(complex(x) - complex(y)) <= FLOAT_REL_TOL * max(scale, 1e-300)


def _float_zero(x, scale) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= FLOAT_REL_TOL * scale


def chain_numeric(u, c4, c5, c6, c7, check: bool = True) -> ChainValues:
    """Run the scaled remainder sequence for numeric parameters.

    Raises :class:`ChainDegenerate` if ``A`` or ``E`` vanishes, which makes
    the next division ill-defined.  ``J == 0`` is not an error; it simply
    leaves the certificate unproven.
    """
    if u == 0:
        raise UZero("the remainder chain needs u != 0")
    P1, P2 = p1_p2(u, c4, c5, c6, c7)
    P3 = poly_rem(P1, P2)
    P4 = poly_rem(P2 * (u * u), P3)
    A, B, C, D = (P4.coeff(k) for k in (3, 2, 1, 0))
    scale4 = max((abs(complex(c)) for c in P2.coeffs), default=1.0) * abs(complex(u)) ** 2
    if _float_zero(A, scale4):
        raise ChainDegenerate("A")
    P5 = poly_rem(P3 * (A * A), P4)
    E, F, G = (P5.coeff(k) for k in (2, 1, 0))
    scale5 = max((abs(complex(c)) for c in P3.coeffs), default=1.0) * abs(complex(A)) ** 2
    if _float_zero(E, scale5):
        raise ChainDegenerate("E")
    P6 = poly_rem(P4 * (E * E), P5)
    H, I = P6.coeff(1), P6.coeff(0)
    J = E * I**2 - F * H * I + G * H**2
    cv = ChainValues(P1, P2, P3, P4, P5, P6, A, B, C, D, E, F, G, H, I, J)
    if check:
        cf = closed_forms(u, c4, c5, c6, c7)
        for name, val in cf.items():
            got = getattr(cv, name)
            scale = max(abs(complex(val)), abs(complex(got)))
            if not _agree(got, val, scale):
                raise CertificationError(
                    f"closed form for {name} disagrees with the remainder: {got!r} vs {val!r}")
    return cv


# --- cleared chain: polynomials in u ---------------------------------------

def _det(m):
    """Leibniz determinant; entries may be Poly or scalars."""
    n = len(m)
    total = Poly()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Poly([-1 if inv % 2 else 1])
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def system_matrix(f: Jet, g: Jet):
    """Coefficient matrix (unknowns ordered c7, c6, c5, c4) and right-hand side.

    Rows: S^7 and S^6 coefficients of f(C_t), then S^6 and S^7 of g(C_t).
    Entries are polynomials in ``u``.
    """
    u = Poly.x()
    rows, rhs = [], []
    for h in (f, g):
        rows.append([Poly([h[1]]), Poly([2 * h[2]]), Poly([3 * h[3]]),
                     Poly([4 * h[4]]) + u * (2 * h[2])])
        rows.append([Poly(), Poly([h[1]]), Poly([2 * h[2]]), Poly([3 * h[3]])])
        rhs.append(-(u * u * (3 * h[3]) + u * (5 * h[5]) + h[7]))
        rhs.append(-(u * u * h[2] + u * (4 * h[4]) + h[6]))
    # equation order f:S^7, f:S^6, g:S^6, g:S^7 fixes the sign of U as 4 h12^2 u + O(1)
    order = (0, 1, 3, 2)
    return [rows[i] for i in order], [rhs[i] for i in order]


def _cramer_numerators(rows, rhs):
    U = _det(rows)
    nums = []
    for col in range(4):
        m = [[rhs[i] if j == col else rows[i][j] for j in range(4)] for i in range(4)]
        nums.append(_det(m))
    b7, b6, b5, b4 = nums
    return U, b4, b5, b6, b7


def h(f: Jet, g: Jet, i: int, j: int):
    """``h_{i,j} = f_i g_j - f_j g_i`` on Taylor coefficients."""
    return f[i] * g[j] - f[j] * g[i]


@dataclass(frozen=True)
class ClearedChain:
    U: Poly
    b4: Poly
    b5: Poly
    b6: Poly
    b7: Poly
    Ap: Poly
    Bp: Poly
    Cp: Poly
    Dp: Poly
    Ep: Poly
    Fp: Poly
    Gp: Poly
    Hp: Poly
    Ip: Poly
    Jp: Poly

    # cleared quantity -> power of U it carries
    SCALINGS = {"Ap": 2, "Bp": 2, "Cp": 2, "Dp": 2, "Ep": 5, "Fp": 5, "Gp": 5,
                "Hp": 12, "Ip": 12, "Jp": 29}

    def c_at(self, u0):
        """``(c4, c5, c6, c7, U(u0))`` at a numeric ``u0``."""
        Uv = self.U(u0)
        return tuple(b(u0) / Uv for b in (self.b4, self.b5, self.b6, self.b7)) + (Uv,)


def chain_cleared(f: Jet, g: Jet) -> ClearedChain:
    """Exact cleared chain for rational jets."""
    if not (f.exact and g.exact):
        raise TypeError("chain_cleared needs exact rational jets")
    if h(f, g, 1, 2) == 0:
        raise H12Zero("h_{1,2} = f1 g2 - f2 g1 must be nonzero")
    rows, rhs = system_matrix(f, g)
    U, b4, b5, b6, b7 = _cramer_numerators(rows, rhs)
    u = Poly.x()
    Ap = U * U * (u**3 * 2) - U * b5 * u + b4 * b4
    Bp = U * b4 * (u * u * 3) - U * b6 * u + b4 * b5
    Cp = U * U * u**4 + U * b5 * (u * u * 2) + (b4 * b4 * 2 - U * b7) * u + b4 * b6
    Dp = U * b6 * (u * u) + b4 * b7
    UBu_Ab4 = Bp * u * U - Ap * b4          # U^3 (B u - A c4)
    Ep = (Ap * Ap * (U * (u * u * 2) + b5) - Ap * Cp * u * U + Bp * Bp * u * U
          - Ap * Bp * b4)
    Fp = Ap * Ap * (b4 * u * 2 + b6) + Cp * UBu_Ab4 - Ap * Dp * u * U
    Gp = Dp * UBu_Ab4 + Ap * Ap * b7
    Hp = -(Ap * Ep * Gp) + Ap * Fp * Fp - Bp * Ep * Fp + Cp * Ep * Ep
    Ip = (Ap * Fp - Bp * Ep) * Gp + Dp * Ep * Ep
    Jp = Ep * Ip * Ip - Fp * Hp * Ip + Gp * Hp * Hp
    return ClearedChain(U, b4, b5, b6, b7, Ap, Bp, Cp, Dp, Ep, Fp, Gp, Hp, Ip, Jp)


# --- leading-term audit ------------------------------------------------------

STAR_CONST_A = 6144
STAR_CONST_B = 301989888


def star_bracket_h(f: Jet, g: Jet):
    """The cubic star bracket written in the Taylor-coefficient ``h_{i,j}``."""
    H = lambda i, j: h(f, g, i, j)  # noqa: E731
    return (H(1, 2) * (H(2, 4) ** 2 - H(3, 4) * (2 * H(2, 3) + H(1, 4)))
            + H(1, 3) * (H(1, 3) * H(3, 4) - H(2, 3) * H(2, 4)) + H(2, 3) ** 3)


def predicted_leading(f: Jet, g: Jet) -> dict:
    """Predicted ``(degree, leading coefficient)`` for the audited quantities."""
    f1, f2, f3, f4 = f[1], f[2], f[3], f[4]
    g1, g2, g3, g4 = g[1], g[2], g[3], g[4]
    h12 = h(f, g, 1, 2)
    return {
        "U": (1, 4 * h12**2),
        "b4": (2, -(3 * f1**2 * g2 * g3 - 3 * f1 * f2 * g1 * g3
                    + f3 * (3 * f2 * g1**2 - 3 * f1 * g1 * g2))),
        "b5": (3, -(2 * f1**2 * g2**2 - 4 * f1 * f2 * g1 * g2 + 2 * f2**2 * g1**2)),
        "b6": (2, f1 * f2 * (16 * g2 * g4 - 9 * g3**2) - 16 * f2**2 * g1 * g4
               + f3 * (9 * f1 * g2 * g3 + 9 * f2 * g1 * g3)
               + f4 * (16 * f2 * g1 * g2 - 16 * f1 * g2**2) - 9 * f3**2 * g1 * g2),
        "b7": (3, 6 * f1 * f2 * g2 * g3 - 6 * f2**2 * g1 * g3
               + f3 * (6 * f2 * g1 * g2 - 6 * f1 * g2**2)),
        "Ap": (5, 32 * h12**4),
        "Ep": (13, STAR_CONST_A * h12**10),
        "Jp": (75, STAR_CONST_A * STAR_CONST_B**2 * h12**55 * star_bracket_h(f, g)),
    }


@dataclass
class AuditEntry:
    name: str
    degree: int
    leading: Fraction
    predicted_degree: int
    predicted_leading: Fraction
    ratio: Fraction | None
    coeff_at_predicted_degree: Fraction = field(default=Fraction(0))

    def as_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)
        return {"name": self.name, "degree": self.degree, "leading": s(self.leading),
                "predicted_degree": self.predicted_degree,
                "predicted_leading": s(self.predicted_leading),
                "coeff_at_predicted_degree": s(self.coeff_at_predicted_degree),
                "ratio": s(self.ratio),
                "ratio_float": None if self.ratio is None else float(self.ratio)}


def leading_audit(cc: ClearedChain, f: Jet, g: Jet) -> list[AuditEntry]:
    """Measured degree and leading coefficient against the predicted leading term.

    ``ratio`` is (coefficient at the predicted degree) / (predicted value), or
    ``None`` when the prediction is 0.  Nothing is asserted here.
    """
    pred = predicted_leading(f, g)
    out = []
    for name, (pdeg, plead) in pred.items():
        p = getattr(cc, name)
        at = p.coeff(pdeg)
        ratio = Fraction(at) / plead if plead != 0 else None
        out.append(AuditEntry(name, int(p.degree) if not p.is_zero() else -1, p.lc,
                              pdeg, Fraction(plead), ratio, at))
    return out
