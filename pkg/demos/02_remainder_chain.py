"""The Euclidean remainder chain behind the coprimality certificate."""
from fractions import Fraction

from pseudopairs import chain_numeric, p1_p2, poly_gcd_degree

u, c4, c5, c6, c7 = Fraction(1), Fraction(-1, 2), Fraction(0), Fraction(-1, 2), Fraction(1)
P1, P2 = p1_p2(u, c4, c5, c6, c7)
print("P1 =", [str(c) for c in P1.coeffs])
print("P2 =", [str(c) for c in P2.coeffs])

cv = chain_numeric(u, c4, c5, c6, c7)
for name in ("P3", "P4", "P5", "P6"):
    print(name, "=", [str(c) for c in getattr(cv, name).coeffs])
print("A, E, J =", cv.A, cv.E, cv.J)
print("AEJ != 0:", cv.certified, "  gcd degree (independent PRS):", poly_gcd_degree(P1, P2))

# Force a shared root z0 = 2 by solving P2(z0) = P1(z0) = 0 for c6, c7:
# the certificate must then fail.
z0 = Fraction(2)
c6 = -((u * u + 2 * c5) * z0 + 3 * c4 * z0**2 + 4 * u * z0**3 + z0**5)
c7 = -(2 * (u * c4 + c6) * z0 + 3 * (u * u + c5) * z0**2 + 4 * c4 * z0**3 + 5 * u * z0**4 + z0**6)
cv = chain_numeric(u, c4, c5, c6, c7)
print("\nwith a common root at 2:  AEJ =", cv.AEJ,
      "  gcd degree:", poly_gcd_degree(cv.P1, cv.P2))
