"""The cubic star condition on derivative jets and its Schwarzian form."""
import random
from fractions import Fraction

from pseudopairs import DerivJet, schwarzian_bracket, star_value
from pseudopairs.conditions import mobius_derivs, monomial_derivs, star_schwarzian_form

# z^2 and z^7 satisfy the condition at every point
for z0 in (1, 2, Fraction(-1, 3)):
    print(f"star(z^2, z^7) at {z0}:", star_value(monomial_derivs(2, z0), monomial_derivs(7, z0)))
print("star(z^2, z^3) at 1:", star_value(monomial_derivs(2, 1), monomial_derivs(3, 1)))

# a Mobius map has vanishing Schwarzian data, so pairs containing one satisfy it
f = mobius_derivs(1, 2, 3, 4, Fraction(1, 5))
print("\nSchwarzian data (Sf, Sf', F) of a Mobius map:", schwarzian_bracket(f))
rng = random.Random(0)
g = DerivJet(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)))
print("star(Mobius, random):", star_value(f, g))

# the Schwarzian combination reproduces the bracket up to sign
f = DerivJet(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)))
print("\nstar           :", star_value(f, g))
print("Schwarzian form:", star_schwarzian_form(f, g))
