import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudopairs.conditions import (DerivJet, h_tilde, mobius_derivs, monomial_derivs, p_poly,
                                    powers_identity_checks, q_poly, r_factor, r_poly,
                                    s_poly, schwarzian_bracket, star_identity_residual,
                                    star_schwarzian_form, star_value)
from pseudopairs.errors import IndexOutOfRange, PreconditionError

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
deriv_jets = st.lists(rationals, min_size=5, max_size=5).map(lambda d: DerivJet(tuple(d)))


def R(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def random_deriv(rng):
    return DerivJet(tuple(R(rng) for _ in range(5)))


def random_mobius(rng):
    while True:
        a, b, c, d = (R(rng) for _ in range(4))
        if a * d - b * c != 0 and d != 0:
            return mobius_derivs(a, b, c, d, 0)


def test_deriv_jet_length():
    with pytest.raises(PreconditionError):
        DerivJet((1, 2, 3))


def test_h_tilde_examples():
    f, g = DerivJet((0, 1, 0, 0, 0)), DerivJet((0, 0, 2, 0, 0))
    assert h_tilde(1, 2, f, g) == 1
    assert h_tilde(3, 3, f, g) == 0
    with pytest.raises(IndexOutOfRange):
        h_tilde(0, 2, f, g)
    with pytest.raises(IndexOutOfRange):
        h_tilde(1, 5, f, g)


def test_mobius_derivs_of_geometric_series():
    # 1 / (1 - z) at 0 has derivatives k!
    assert mobius_derivs(0, 1, -1, 1, 0).d == (1, 1, 2, 6, 24)


def test_star_examples():
    rng = random.Random(1)
    f = random_deriv(rng)
    assert star_value(f, f) == 0
    geo = DerivJet((1, 1, 2, 6, 24))
    for _ in range(5):
        assert star_value(geo, random_deriv(rng)) == 0


def test_monomials_two_seven_satisfy_star_everywhere():
    for z0 in (Fraction(1), Fraction(2), Fraction(-3, 2), Fraction(5, 7)):
        assert star_value(monomial_derivs(2, z0), monomial_derivs(7, z0)) == 0
    assert star_value(monomial_derivs(2, 1), monomial_derivs(3, 1)) != 0


def test_schwarzian_examples():
    assert schwarzian_bracket(DerivJet((1, 1, 2, 6, 24))) == (0, 0, 0)
    for z0 in (Fraction(1), Fraction(-2, 3)):
        assert schwarzian_bracket(monomial_derivs(2, z0))[0] == -12
    sf, _, F = schwarzian_bracket(DerivJet((3, 5, 0, 0, 0)))
    assert sf == 0 and F == 0


def test_identity_residual_exact_random():
    rng = random.Random(2)
    for _ in range(20):
        assert star_identity_residual(random_deriv(rng), random_deriv(rng)) == 0


def test_identity_residual_float_random():
    rng = random.Random(3)
    for _ in range(20):
        f = DerivJet(tuple(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(5)))
        g = DerivJet(tuple(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(5)))
        scale = max(1.0, max(abs(x) for x in f.d + g.d)) ** 6
        assert abs(star_identity_residual(f, g)) <= 1e-10 * scale


def test_printed_form_has_flipped_sign():
    # the combination as printed equals -star, not star
    rng = random.Random(4)
    f, g = random_deriv(rng), random_deriv(rng)
    assert star_value(f, g) != 0
    assert star_schwarzian_form(f, g) == -star_value(f, g)


def test_mobius_both_sides_zero():
    rng = random.Random(5)
    for _ in range(5):
        f, g = random_mobius(rng), random_deriv(rng)
        assert star_value(f, g) == 0 and star_schwarzian_form(f, g) == 0


def test_integer_polynomial_values():
    assert s_poly(1, 2) == 0 and r_poly(1, 2) == 0
    assert p_poly(2, 3) == 1344
    assert q_poly(2, 3) == 492 and s_poly(2, 3) == -8 and r_poly(2, 3) == 5280
    assert q_poly(2, 3) * s_poly(2, 3) + r_poly(2, 3) == 1344
    assert s_poly(2, 7) == 0
    assert 16 * 9 * s_poly(2, 3) == -1152 == (8 * 3 - 135 + 4) * r_factor(2, 3) + 25


def test_powers_identity_checks():
    rep = powers_identity_checks()
    assert rep["passed"] and rep["pairs_checked"] == 625
    assert rep["common_zeros"] == []
    assert (2, 7) in rep["s_zero_pairs"]
    assert all(abs(m) == 2 for _, m in rep["deduction_solutions"])


@settings(max_examples=50, deadline=None)
@given(deriv_jets, deriv_jets)
def test_star_antisymmetric(f, g):
    assert star_value(g, f) == -star_value(f, g)


@settings(max_examples=50, deadline=None)
@given(deriv_jets, deriv_jets, rationals)
def test_star_invariant_under_adding_multiple(f, g, c):
    assert star_value(f + g.scale(c), g) == star_value(f, g)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 9), st.integers(2, 9), rationals.filter(bool))
def test_monomial_homogeneity(n, m, z0):
    lhs = star_value(monomial_derivs(n, z0), monomial_derivs(m, z0))
    rhs = z0 ** (3 * (n + m) - 15) * star_value(monomial_derivs(n, 1), monomial_derivs(m, 1))
    assert lhs == rhs
