import random
from fractions import Fraction

import pytest

from rrcf5.exactmath import (
    CycloElem,
    ExactDomainError,
    MoebiusMap,
    Poly,
    RatFunc,
    golden_unit,
    golden_unit_conj,
    lift_to_cyclo,
    moebius_act_on_poly,
    poly_compose_rational,
    poly_discriminant,
    poly_gcd,
    poly_resultant,
)

rng = random.Random(20260823)


def rand_poly(deg, lo=-9, hi=9):
    cs = [rng.randint(lo, hi) for _ in range(deg + 1)]
    if cs[-1] == 0:
        cs[-1] = 1
    return Poly(cs)


# ---------------------------------------------------------------- CycloElem


def test_zeta5_minimal_polynomial():
    z = CycloElem.zeta(5)
    assert z**5 == 1
    assert z**4 + z**3 + z**2 + z + 1 == 0


def test_zeta20_minimal_polynomial():
    z = CycloElem.zeta(20)
    assert z**20 == 1
    # Phi_20 = x^8 - x^6 + x^4 - x^2 + 1
    assert z**8 - z**6 + z**4 - z**2 + 1 == 0


def test_sqrt5_squares_to_five():
    for order in (5, 20):
        s = CycloElem.sqrt5(order)
        assert s * s == 5


def test_golden_unit_relations():
    eps = golden_unit()
    epsbar = golden_unit_conj()
    assert eps * epsbar == -1
    assert eps + epsbar == -1
    # epsilon satisfies x^2 + x - 1 = 0
    assert eps**2 + eps - 1 == 0
    # the fifth powers: epsilon^5 = (-11 + 5 sqrt 5)/2
    assert eps**5 == (CycloElem.sqrt5() * 5 - 11) * Fraction(1, 2)
    assert epsbar**5 == (CycloElem.sqrt5() * -5 - 11) * Fraction(1, 2)


def test_inverse_random():
    for _ in range(40):
        order = rng.choice([5, 20])
        e = CycloElem(order, [rng.randint(-5, 5) for _ in range(8 if order == 20 else 4)])
        if not e:
            continue
        assert e * e.inverse() == 1


def test_embed_consistency():
    z5 = CycloElem.zeta(5)
    e = (3 * z5**2 - z5 + 7) / (z5**3 + 2)
    big = e.embed(20)
    # zeta_5 = zeta_20^4 inside Q(zeta_20)
    z = CycloElem.zeta(20)
    assert big == (3 * z**8 - z**4 + 7) / (z**12 + 2)


def test_galois_fixes_rationals_and_flips_sqrt5():
    s = CycloElem.sqrt5()
    assert s.galois(2) == -s
    assert s.galois(4) == s
    e = CycloElem.from_rational(5, Fraction(22, 7))
    assert e.galois(3) == e


def test_division_by_zero():
    z = CycloElem.from_rational(5, 0)
    with pytest.raises(ZeroDivisionError):
        z.inverse()


# --------------------------------------------------------------------- Poly


def test_poly_basic_arithmetic():
    x = Poly.x()
    p = (x + 1) * (x - 1)
    assert p == x**2 - 1
    assert p(3) == 8
    assert p.degree == 2


def test_poly_divmod_random():
    for _ in range(40):
        a = rand_poly(rng.randint(0, 8))
        b = rand_poly(rng.randint(0, 4))
        q, r = divmod(a.map_coeffs(Fraction), b.map_coeffs(Fraction))
        assert b * q + r == a.map_coeffs(Fraction)
        assert r.degree < b.degree


def test_exact_div_raises_on_remainder():
    x = Poly.x()
    with pytest.raises(ExactDomainError):
        (x**2 + 1).exact_div(x - 1)


def test_gcd():
    x = Poly.x().map_coeffs(Fraction)
    a = (x - 1) ** 2 * (x + 3)
    b = (x - 1) * (x + 5)
    assert poly_gcd(a, b) == x - 1


def test_reversed_and_subst_pow():
    p = Poly((1, 2, 3))
    assert p.reversed_poly() == Poly((3, 2, 1))
    assert p.subst_x_pow(3) == Poly((1, 0, 0, 2, 0, 0, 3))


def test_poly_over_cyclo_coeffs():
    z = CycloElem.zeta(5)
    p = Poly((z, 1))  # x + zeta
    q = p * p.map_coeffs(lambda c: c.galois(2) if isinstance(c, CycloElem) else c)
    # (x + z)(x + z^2) = x^2 + (z + z^2) x + z^3
    assert q == Poly((z**3, z + z**2, CycloElem.from_rational(5, 1)))


# --------------------------------------------------- resultant/discriminant


def test_resultant_multiplicativity():
    for _ in range(15):
        a = rand_poly(rng.randint(1, 4))
        b = rand_poly(rng.randint(1, 4))
        c = rand_poly(rng.randint(1, 4))
        assert poly_resultant(a * b, c) == poly_resultant(a, c) * poly_resultant(b, c)


def test_resultant_as_product_of_root_differences():
    # Res(x^2 - 2, x^2 - 3) = (s2-s3)(s2+s3)(-s2-s3)(-s2+s3) = (2-3)^2 = 1
    assert poly_resultant(Poly((-2, 0, 1)), Poly((-3, 0, 1))) == 1


def test_discriminant_quadratic_cubic():
    # ax^2+bx+c -> b^2-4ac
    assert poly_discriminant(Poly((5, -3, 2))) == 9 - 40
    # x^3 + px + q -> -4p^3 - 27q^2
    p, q = 4, -7
    assert poly_discriminant(Poly((q, p, 0, 1))) == -4 * p**3 - 27 * q**2


def test_discriminant_with_rational_coeffs():
    p = Poly((Fraction(1, 2), Fraction(-3, 4), 1))
    assert poly_discriminant(p) == Fraction(9, 16) - 4 * Fraction(1, 2)


def test_compose_rational_cleared():
    # den^h H(num/den) for H = x^2 - 5x + 1
    H = Poly((1, -5, 1))
    num = Poly((1, 2))
    den = Poly((-1, 0, 1))
    got = poly_compose_rational(H, num, den, 2)
    x = Fraction(7)
    assert got(x) == (den(x) ** 2) * H(num(x) / den(x))


# ------------------------------------------------------------------ RatFunc


def test_ratfunc_reduction_and_equality():
    x = Poly.x().map_coeffs(Fraction)
    f = RatFunc((x**2 - 1), (x - 1))
    assert f == RatFunc(x + 1)
    assert f(Fraction(5)) == 6


def test_ratfunc_field_ops():
    x = Poly.x().map_coeffs(Fraction)
    f = RatFunc(x, x + 1)
    g = RatFunc(1, x)
    assert f * g == RatFunc(Poly((Fraction(1),)), x + 1)
    assert (f + g) - g == f
    assert (f / g) * g == f


def test_ratfunc_substitute():
    x = Poly.x().map_coeffs(Fraction)
    f = RatFunc(x**2 + 1, x)
    g = RatFunc(x - 1, x + 1)
    h = f.substitute(g)
    for v in (Fraction(2), Fraction(5), Fraction(-3, 7)):
        assert h(v) == f(g(v))


# --------------------------------------------------------------- MoebiusMap


def test_moebius_canonical_form_and_equality():
    m1 = MoebiusMap(2, 4, 0, 2)
    m2 = MoebiusMap(1, 2, 0, 1)
    assert m1 == m2
    assert hash(m1) == hash(m2)


def test_moebius_group_laws():
    z = CycloElem.zeta(5)
    S = MoebiusMap(z, 0, 0, 1)
    T = MoebiusMap(golden_unit(), 1, 1, -golden_unit())  # an involution up to scalar
    assert S.element_order() == 5
    assert (S * S.inverse()) == MoebiusMap.identity()
    assert (T * T).entries() == MoebiusMap.identity().entries() or (T * T) == MoebiusMap.identity()
    x = CycloElem.from_rational(5, Fraction(3, 2))
    assert S.inverse().apply(S.apply(x)) == x
    assert (S * T).apply(x) == S.apply(T.apply(x))


def test_moebius_poly_action_matches_roots():
    # the pullback of p under M has roots M^{-1}(root)
    p = Poly((Fraction(-6), Fraction(1), Fraction(1)))  # (x-2)(x+3)
    M = MoebiusMap(1, 1, 1, -1)
    q = moebius_act_on_poly(M, p)
    for root in (Fraction(2), Fraction(-3)):
        pre = M.inverse().apply(CycloElem.from_rational(5, root))
        assert not q(pre)


def test_moebius_poly_action_is_antihomomorphic():
    p = Poly((Fraction(1), Fraction(-4), Fraction(0), Fraction(1)))
    z = CycloElem.zeta(5)
    A = MoebiusMap(z, 1, 0, 1)
    B = MoebiusMap(0, 1, 1, 0)
    lhs = moebius_act_on_poly(B, moebius_act_on_poly(A, p))
    rhs = moebius_act_on_poly(A * B, p)
    assert lhs == rhs


def test_lift_to_cyclo():
    p = Poly((1, Fraction(1, 2)))
    q = lift_to_cyclo(p)
    assert isinstance(q.coeffs[0], CycloElem)
    assert q.coeffs[1].as_fraction() == Fraction(1, 2)
