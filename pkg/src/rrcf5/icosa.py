"""The order-60 Moebius group generated by S(z) = zeta_5 z and
T(z) = (-(1+sqrt5)z+2)/(2z+1+sqrt5), its invariant rational function f5, the
orbit/stabilizer action on minimal polynomials, the exact Q(zeta_20) corpus
for d = 4, and numeric verification of the two worked radical examples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from . import tables
from .exactmath import (
    CycloElem,
    MoebiusMap,
    Poly,
    RatFunc,
    lift_to_cyclo,
    moebius_act_on_poly,
    poly_discriminant,
)
from .hpnum import rr_r
from .pipeline import build_F_G


class IcosaError(ValueError):
    pass


def _c(n, order=5):
    return CycloElem.from_rational(order, n)


def S_map() -> MoebiusMap:
    return MoebiusMap(CycloElem.zeta(5), 0, 0, 1)


def T_map() -> MoebiusMap:
    s5 = CycloElem.sqrt5()
    return MoebiusMap(-(1 + s5), _c(2), _c(2), 1 + s5)


def U_map() -> MoebiusMap:
    return MoebiusMap(0, _c(-1), _c(1), 0)


def T2_map() -> MoebiusMap:
    s5 = CycloElem.sqrt5()
    return MoebiusMap(-(1 - s5), _c(2), _c(2), 1 - s5)


@dataclass(frozen=True)
class G60Group:
    elements: tuple
    S: MoebiusMap
    T: MoebiusMap

    def __len__(self):
        return len(self.elements)

    def order_census(self):
        census = {}
        for m in self.elements:
            n = m.element_order()
            census[n] = census.get(n, 0) + 1
        return census


def generate_g60() -> G60Group:
    """Closure of {S, T} under composition; must stop at 60 elements."""
    S, T = S_map(), T_map()
    seen = {MoebiusMap.identity(), S, T}
    frontier = [S, T]
    while frontier:
        nxt = []
        for m in frontier:
            for g in (S, T):
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > 60:
                        raise IcosaError("closure exceeded 60 elements")
        frontier = nxt
    if len(seen) != 60:
        raise IcosaError(f"closure stopped at {len(seen)} elements")
    return G60Group(elements=tuple(seen), S=S, T=T)


def f5_ratfunc() -> RatFunc:
    """f5(z) = (1+228z^5+494z^10-228z^15+z^20)^3 / (z^5 (1-11z^5-z^10)^5),
    over Q(zeta_5)."""
    num = lift_to_cyclo(Poly((1, 228, 494, -228, 1)).subst_x_pow(5)) ** 3
    x5 = Poly([_c(0)] * 5 + [_c(1)])
    den = x5 * lift_to_cyclo(Poly((1, -11, -1)).subst_x_pow(5)) ** 5
    return RatFunc(num, den, reduce=False)


def _map_as_ratfunc(m: MoebiusMap) -> RatFunc:
    return RatFunc(Poly((m.b, m.a)), Poly((m.d, m.c)), reduce=False)


def verify_f5_invariance() -> bool:
    """f5 o S = f5 and f5 o T = f5 exactly; invariance under the generators
    gives invariance under the whole group."""
    f5 = f5_ratfunc()
    for m in (S_map(), T_map()):
        if f5.substitute(_map_as_ratfunc(m)) != f5:
            return False
    # negative control: a translation is not in the symmetry group
    shifted = f5.substitute(RatFunc(Poly((_c(1), _c(1)))))
    return shifted != f5


def orbit_and_stabilizer(p: Poly, group: G60Group, Gd5: Poly):
    """Orbit of p under the pullback action and its stabilizer.

    Every orbit element must divide Gd5 exactly over Q(zeta_5); a division
    failure raises IcosaError.  Returns (orbit, stabilizer) with the orbit a
    frozenset of canonical monic polynomials over Q(zeta_5).
    """
    base = moebius_act_on_poly(MoebiusMap.identity(), p)
    lifted_G = lift_to_cyclo(Gd5)
    orbit = set()
    stabilizer = []
    for m in group.elements:
        image = moebius_act_on_poly(m, p)
        if image.degree != p.degree:
            raise IcosaError("degenerate pullback in orbit computation")
        orbit.add(image)
        if image == base:
            stabilizer.append(m)
        quo, rem = divmod(lifted_G, image)
        if not rem.is_zero():
            raise IcosaError("orbit element does not divide G_d(x^5)")
    return frozenset(orbit), frozenset(stabilizer)


def expected_stabilizer() -> frozenset:
    return frozenset((MoebiusMap.identity(), T_map(), U_map(), T2_map()))


def group_structure_report(group: G60Group) -> dict:
    """The printed relations among S, T, U, T2."""
    S, T, U, T2 = group.S, group.T, U_map(), T2_map()
    zeta = CycloElem.zeta(5)
    out = {}
    S2, S3 = S * S, S * S * S
    out["U_from_generators"] = (T * S2 * T * S3 * T * S2) == U
    out["orders"] = (S.element_order(), T.element_order(), U.element_order(),
                     T2.element_order()) == (5, 2, 2, 2)
    out["klein_four"] = T * U == T2 and U * T == T2 and T2 * T2 == MoebiusMap.identity()
    conj = S.inverse() * U * S
    out["conjugate_is_printed"] = conj == MoebiusMap(0, -(zeta**3), _c(1), 0)
    out["conjugate_not_in_H"] = conj not in expected_stabilizer()
    out["census"] = group.order_census() == {1: 1, 2: 15, 3: 20, 5: 24}
    return out


# ---------------------------------------------------------------------------
# the d = 4 cyclotomic corpus
# ---------------------------------------------------------------------------


def _z20(coords) -> CycloElem:
    return CycloElem(20, tuple(Fraction(c) for c in coords))


def verify_d4_corpus() -> dict:
    """All exact Q(zeta_20) facts for the degenerate discriminant d = 4."""
    out = {}
    H4 = Poly(tables.H_TABLE[4])
    _, Gx5 = build_F_G(H4, 1)
    printed = Poly((1,))
    for fac in tables.G4_FACTORS:
        printed = printed * Poly(fac) ** 2
    out["G4_printed_product"] = Gx5 == printed

    # Q_4(x^5) = x^10 + 1 = (x^2+1)(x^8-x^6+x^4-x^2+1)
    out["Q4_factorization"] = (
        Poly((1, 0, 1)).subst_x_pow(5)
        == Poly((1, 0, 1)) * Poly((1, 0, -1, 0, 1, 0, -1, 0, 1))
    )

    # x_1, x_2, x_3 are roots of the quartic and the two octic factors
    root_checks = []
    for coords, fac in zip(tables.G4_FACTOR_ROOTS_Z20, tables.G4_FACTORS[1:]):
        val = lift_to_cyclo(Poly(fac), order=20)(_z20(coords))
        root_checks.append(not val)
    out["G4_factor_roots"] = all(root_checks)

    # the quartic square factor f_4 of F_4 and its four zeta_20 roots
    f4 = lift_to_cyclo(Poly(tables.F4_FACTORS[1]), order=20)
    alphas = [_z20(c) for c in tables.F4_QUARTIC_ROOTS_Z20]
    out["f4_roots"] = all(not f4(a) for a in alphas)

    # fifth-power relations among the roots
    a1, a2, a3, a4 = alphas
    w12, _, w14 = tables.F4_FIFTH_POWER_BASES
    out["fifth_power_a1a22"] = a1 * a2 * a2 == _z20(w12) ** 5
    out["a1a3_is_minus_one"] = a1 * a3 == _c(-1, order=20)
    out["fifth_power_a1a43"] = a1 * a4**3 == _z20(w14) ** 5

    # disc(f_4(x^5)) = 2^40 3^20 5^35
    disc = poly_discriminant(Poly(tables.F4_FACTORS[1]).subst_x_pow(5))
    out["disc_f4_x5"] = disc == 2**40 * 3**20 * 5**35
    return out


# ---------------------------------------------------------------------------
# the two worked radical examples
# ---------------------------------------------------------------------------


def _poly_at(coeffs, val):
    acc = mpc(0)
    for c in reversed(tuple(coeffs)):
        acc = acc * val + mpc(c)
    return acc


def nested_radical_example1(prec: int = 384):
    """The real value (-8-3s5-sqrt(125+60 s5)+sqrt(250+108 s5+(16+6 s5)
    sqrt(125+60 s5)))/4, taking the positive branch of every radical."""
    with mp.workprec(prec):
        s5 = mpmath.sqrt(mpf(5))
        t = mpmath.sqrt(125 + 60 * s5)
        inner = mpmath.sqrt(250 + 108 * s5 + (16 + 6 * s5) * t)
        return (-8 - 3 * s5 - t + inner) / 4


def ramanujan_r3i(prec: int = 384):
    """sqrt(c^2+1) - c with 2c = sqrt5 (q+2-sqrt3+sqrt5)/(q-2+sqrt3-sqrt5) + 1,
    q = 60^(1/4)."""
    with mp.workprec(prec):
        s3, s5 = mpmath.sqrt(mpf(3)), mpmath.sqrt(mpf(5))
        q = mpf(60) ** Fraction(1, 4)
        c = (s5 * (q + 2 - s3 + s5) / (q - 2 + s3 - s5) + 1) / 2
        return mpmath.sqrt(c * c + 1) - c


def t_fixed_point_check(ds, prec: int = 256) -> bool:
    """z1 = (-1-sqrt5+sqrt(10+2 sqrt5))/2 is fixed by T but is never a root
    of p_d: |p_d(z1)| stays far from zero for every tabulated d."""
    with mp.workprec(prec):
        s5 = mpmath.sqrt(mpf(5))
        z1 = (-1 - s5 + mpmath.sqrt(10 + 2 * s5)) / 2
        t_of_z1 = (-(1 + s5) * z1 + 2) / (2 * z1 + 1 + s5)
        if abs(t_of_z1 - z1) > mpf(2) ** (-(prec - 32)):
            return False
        floor = mpf(2) ** (-32)
        return all(abs(_poly_at(tables.P_TABLE[d], z1)) > floor for d in ds)


def verify_worked_examples(prec: int = 384) -> dict:
    """Exact and numeric checks for the two worked examples (d = 19, 36)."""
    out = {}
    tol = mpf(10) ** (-60)

    # Example 1: the nested radical is a root of the printed degree-8 poly
    with mp.workprec(prec):
        alpha = nested_radical_example1(prec)
        out["ex1_radical_root"] = abs(_poly_at(tables.P19_TILDE_NEG, alpha)) < tol

        # -alpha is a root of q_19(T(zeta^2 x))
        zeta = mpmath.exp(2j * mp.pi / 5)
        s5 = mpmath.sqrt(mpf(5))
        arg = zeta**2 * (-alpha)
        val = (-(1 + s5) * arg + 2) / (2 * arg + 1 + s5)
        out["ex1_q19_root"] = abs(_poly_at(tables.Q19_COFACTOR, val)) < tol

    # ptilde_19(x) divides G_19(x^5) exactly over Q
    ptilde = Poly([(-1) ** k * c for k, c in enumerate(tables.P19_TILDE_NEG)])
    _, G19x5 = build_F_G(Poly(tables.H_TABLE[19]), 1)
    out["ex1_ptilde_divides_G19"] = ptilde.map_coeffs(Fraction).divides(
        G19x5.map_coeffs(Fraction)
    )

    # Example 2: r(3i) equals the Ramanujan radical
    with mp.workprec(prec):
        r3i = rr_r(mpc(0, 3), prec)
        out["ex2_r3i_radical"] = abs(r3i - ramanujan_r3i(prec)) < tol
        out["ex2_r3i_min_poly"] = abs(_poly_at(tables.M36, r3i)) < tol

    # m(x) divides G_36(x^5) exactly
    m = Poly(tables.M36)
    _, G36x5 = build_F_G(Poly(tables.H_TABLE[36]), 2)
    out["ex2_m_divides_G36"] = m.map_coeffs(Fraction).divides(
        G36x5.map_coeffs(Fraction)
    )

    # m = m1 * conj(m1) over Q(sqrt5)
    s5e = CycloElem.sqrt5()

    def sqrt5_poly(pairs):
        return Poly([_c(r) + s * s5e for r, s in pairs])

    m1 = sqrt5_poly(tables.M36_FACTOR_SQRT5)
    out["ex2_m1_conj_product"] = m1 * m1.map_coeffs(lambda c: c.galois(2)) == lift_to_cyclo(m)

    # m1(x) = x^4 m2(x - 1/x)
    m2 = sqrt5_poly(tables.M36_QUARTIC_SQRT5)
    lifted = Poly()
    num, den = Poly((_c(-1), _c(0), _c(1))), Poly((_c(0), _c(1)))
    npow = Poly((_c(1),))
    for k, coeff in enumerate(m2.coeffs):
        lifted = lifted + npow * den ** (4 - k) * coeff
        if k < 4:
            npow = npow * num
    out["ex2_m1_from_m2"] = lifted == m1

    # m2 = (x^2 + (19+11s5)/2 x + (27+11s5)/2)^2 - 75 ((1+s5)/2)^4 (x+1)^2
    half = Fraction(1, 2)
    A = Poly(((27 + 11 * s5e) * half, (19 + 11 * s5e) * half, _c(1)))
    B = Poly((_c(1), _c(1)))
    eps4 = ((1 + s5e) * half) ** 4
    out["ex2_m2_difference_of_squares"] = A * A - B * B * (75 * eps4) == m2

    # the T fixed point avoids every tabulated p_d
    out["t_fixed_point_never_root"] = t_fixed_point_check(sorted(tables.P_TABLE))
    return out


def orbit_root_match(d: int, orbit, prec: int = 256):
    """Numerically locate the orbit element vanishing at zeta^j r(-1/w);
    returns the (element index, j) found or None."""
    from .classdata import choose_v, reduced_forms

    cd = reduced_forms(d)
    v, _ = choose_v(d, cd.f)
    with mp.workprec(prec + 64):
        w = (v + mpmath.sqrt(mpc(-d))) / 2
        Y = rr_r(-1 / w, prec)
        zeta = mpmath.exp(2j * mp.pi / 5)
        tol = mpf(2) ** (-(prec // 2))
        for idx, q in enumerate(sorted(orbit, key=repr)):
            for j in range(5):
                val = zeta**j * Y
                acc = mpc(0)
                for c in reversed(q.coeffs):
                    acc = acc * val + c.evaluate(zeta)
                if abs(acc) < tol * max(1, abs(val)) ** q.degree:
                    return idx, j
    return None
