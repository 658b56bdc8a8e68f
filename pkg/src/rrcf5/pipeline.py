"""The polynomial tower for an admissible discriminant -d: conjugate eta
quotient values, their integer minimal polynomials R_d and S_d, the lifted
polynomials Q_d, p_d, q_d, the big class-equation composites F_d and
G_d(x^5), exact invariance identities, and the discriminant factorization
report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from mpmath import mp, mpc, mpf

from . import tables
from .classdata import ClassData, choose_v, class_poly, n_system, reduced_forms
from .exactmath import (
    CycloElem,
    Poly,
    lift_to_cyclo,
    poly_compose_rational,
    poly_discriminant,
)
from .hpnum import PrecisionError, PrecisionPolicy, eta, reconstruct_int_poly


class PipelineIntegrityError(RuntimeError):
    """A certified exactness check failed; names the failing stage."""


# j-invariant of the 5-isogeny pair as rational functions of b
# (numerator/denominator pairs, coefficients lowest degree first)
J5_NUM = Poly((1, -12, 14, 12, 1)) ** 3
J5_DEN = Poly((0, 0, 0, 0, 0, 1)) * Poly((1, -11, -1))
J55_NUM = Poly((1, 228, 494, -228, 1)) ** 3
J55_DEN = Poly((0, 1)) * Poly((1, -11, -1)) ** 5


def _z_from_x1_cubed(c):
    return -11 - c


def compute_z_values(args, prec: int):
    """z(w) = -11 - (eta(w/5)/eta(w))^6 at each argument, plus conjugates."""
    values = []
    with mp.workprec(prec + 32):
        for arg in args:
            w = arg.w(prec + 32)
            x1c = (eta(w / 5, prec) / eta(w, prec)) ** 6
            z = _z_from_x1_cubed(x1c)
            values.append(z)
        values += [mpc(z.real, -z.imag) for z in values]
    return values


def compute_s_values(args, prec: int, z_values=None):
    """s(w) = -1 - eta(w/25)/eta(w) plus conjugates; cross-checked against
    the z-values through z = s^5 + 5 s^3 + 5 s."""
    values = []
    with mp.workprec(prec + 32):
        for arg in args:
            w = arg.w(prec + 32)
            s = -1 - eta(w / 25, prec) / eta(w, prec)
            values.append(s)
        values += [mpc(s.real, -s.imag) for s in values]
        if z_values is None:
            z_values = compute_z_values(args, prec)
        tol = mpf(2) ** (-(prec // 2))
        for s, z in zip(values, z_values):
            lift = s**5 + 5 * s**3 + 5 * s
            if abs(lift - z) > tol * max(1, abs(z)):
                raise PrecisionError("s-value failed the z cross-link")
    return values


def build_R(d: int, policy: PrecisionPolicy | None = None):
    """Monic integral minimal polynomial of the z-conjugates (degree 2h)."""
    cd = reduced_forms(d)
    if policy is None:
        policy = PrecisionPolicy.for_discriminant(d, cd.h)
    v, _ = choose_v(d, cd.f)
    args = n_system(cd, v, N=25)
    last = None
    for bits in policy.ladder():
        try:
            zs = compute_z_values(args, bits)
            return Poly(reconstruct_int_poly(zs, bits))
        except PrecisionError as e:
            last = e
    raise PrecisionError(f"R for d={d}: {last}")


def build_S(d: int, policy: PrecisionPolicy | None = None):
    """Monic integral minimal polynomial of the s-conjugates (degree 2h)."""
    cd = reduced_forms(d)
    if policy is None:
        policy = PrecisionPolicy.for_discriminant(d, cd.h)
    v, _ = choose_v(d, cd.f)
    args = n_system(cd, v, N=25)
    last = None
    for bits in policy.ladder():
        try:
            ss = compute_s_values(args, bits)
            return Poly(reconstruct_int_poly(ss, bits))
        except PrecisionError as e:
            last = e
    raise PrecisionError(f"S for d={d}: {last}")


def _lift_through_x_minus_inv(S: Poly) -> Poly:
    """x^deg(S) * S(x - 1/x): doubles the degree, preserves integrality."""
    n = S.degree
    return poly_compose_rational(S, Poly((-1, 0, 1)), Poly((0, 1)), n)


def build_Q(R: Poly) -> Poly:
    """Q(x) = x^{2h} R(x - 1/x); rejects R with zero constant term, which
    would break the anti-palindromic symmetry."""
    if R.is_zero() or not R.coeffs[0]:
        raise PipelineIntegrityError("R must have a nonzero constant term")
    return _lift_through_x_minus_inv(R)


def build_p_q(S: Poly, Q: Poly):
    """p(x) = x^{2h} S(x - 1/x) and the exact cofactor q = Q(x^5) / p."""
    p = _lift_through_x_minus_inv(S)
    Qx5 = Q.subst_x_pow(5)
    quo, rem = divmod(Qx5, p)
    if not rem.is_zero():
        raise PipelineIntegrityError("p does not divide Q(x^5) exactly")
    if not quo.is_integral():
        raise PipelineIntegrityError("cofactor q is not integral")
    return p, quo.map_coeffs(lambda c: int(Fraction(c)))


def build_F_G(H: Poly, h: int):
    """F(x) = x^{5h} (1-11x-x^2)^h H(j5(x)) of degree 12h, and
    G(x^5) = x^{5h} (1-11x^5-x^10)^{5h} H(j55(x^5)) of degree 60h."""
    if h != H.degree:
        raise PipelineIntegrityError("h must equal deg H")
    F = poly_compose_rational(H, J5_NUM, J5_DEN, h)
    G_in_y = poly_compose_rational(H, J55_NUM, J55_DEN, h)
    Gx5 = G_in_y.subst_x_pow(5)
    return F, Gx5


def verify_cor42(R: Poly, h: int) -> bool:
    """(z+11)^{2h} R((-11z+4)/(z+11)) = 5^{3h} R(z) as an exact identity."""
    n = R.degree
    lhs = poly_compose_rational(R, Poly((4, -11)), Poly((11, 1)), n)
    return lhs == R * (5 ** (3 * h))


def verify_T_invariance(p: Poly, h: int) -> bool:
    """(2z+1+sqrt5)^{4h} p(T(z)) = 2^{4h} ((5+sqrt5)/2)^{2h} p(z) over
    Q(sqrt5), with T(z) = (-(1+sqrt5)z+2)/(2z+1+sqrt5)."""
    s5 = CycloElem.sqrt5()
    one = CycloElem.from_rational(5, 1)
    pc = lift_to_cyclo(p)
    n = p.degree
    num = Poly((2 * one, -(1 + s5)))
    den = Poly((1 + s5, 2 * one))
    lhs = poly_compose_rational(pc, num, den, n)
    scale = (2 ** (4 * h)) * ((5 + s5) * Fraction(1, 2)) ** (2 * h)
    return lhs == pc * scale


def _primes_up_to(n: int):
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(2, n + 1) if sieve[i]]


@dataclass(frozen=True)
class DiscReport:
    disc: int
    factors: tuple  # ((prime, exponent), ...)
    cofactor: int
    exact_power_ok: bool  # every prime q | d with q > 5 appears to power 2h
    smooth_ok: bool  # no prime factor exceeds d


def disc_conjecture_check(p: Poly, d: int, h: int) -> DiscReport:
    disc = poly_discriminant(p)
    if isinstance(disc, Fraction):
        assert disc.denominator == 1
        disc = disc.numerator
    n = abs(disc)
    bound = max(d, 10_000)
    factors = []
    for q in _primes_up_to(bound):
        if n == 1:
            break
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            factors.append((q, e))
    fdict = dict(factors)
    # prime divisors of d itself
    rest, q, dprimes = d, 2, set()
    while q * q <= rest:
        if rest % q == 0:
            dprimes.add(q)
            while rest % q == 0:
                rest //= q
        q += 1
    if rest > 1:
        dprimes.add(rest)
    exact_ok = all(fdict.get(q, 0) == 2 * h for q in dprimes if q > 5)
    smooth_ok = n == 1 and all(q <= d for q, _ in factors)
    return DiscReport(
        disc=disc,
        factors=tuple(factors),
        cofactor=n,
        exact_power_ok=exact_ok,
        smooth_ok=smooth_ok,
    )


def irreducibility_proxy(p: Poly, prec: int = 320) -> bool:
    """No proper subset of the numeric roots multiplies out to a monic
    integral factor (subset search; intended for degrees <= 12)."""
    from itertools import combinations

    from .hpnum import poly_complex_roots

    coeffs = p.int_coeffs()
    roots = poly_complex_roots(coeffs, prec)
    n = len(roots)
    if n > 12:
        raise ValueError("subset search is limited to degree 12")
    with mp.workprec(prec):
        tol = mpf(2) ** (-32)
        for k in range(1, n):
            for subset in combinations(range(n), k):
                cs = [mpc(1)]
                for i in subset:
                    nxt = [mpc(0)] + cs
                    for j, c in enumerate(cs):
                        nxt[j] -= roots[i] * c
                    cs = nxt
                if all(
                    abs(c.imag) < tol and abs(c.real - mp.nint(c.real)) < tol
                    for c in cs
                ):
                    return False
    return True


def _antipalindromic(p: Poly) -> bool:
    n = p.degree
    cs = p.coeffs
    return all(cs[n - k] == (cs[k] if k % 2 == 0 else -cs[k]) for k in range(n + 1))


@dataclass(frozen=True)
class PipelineResult:
    d: int
    f: int
    h: int
    v: int
    v_relaxed: bool
    H: Poly
    R: Poly
    S: Poly
    Q: Poly
    p: Poly
    q: Poly
    F_check: bool
    G_check: bool
    div_check: bool
    cor42_check: bool
    T_check: bool
    heegner_check: bool
    disc_report: DiscReport
    precision_used: int

    @property
    def all_ok(self) -> bool:
        return all(
            (
                self.F_check,
                self.G_check,
                self.div_check,
                self.cor42_check,
                self.T_check,
                self.heegner_check,
                self.disc_report.exact_power_ok,
                self.disc_report.smooth_ok,
            )
        )


def _heegner_numeric_check(H: Poly, z_values, prec: int) -> bool:
    """j5(b) and j55(b), written as rational functions of z, are roots of H."""
    with mp.workprec(prec + 32):
        tol = mpf(2) ** (-(prec // 4))
        for z in z_values:
            j5 = -((z**2 + 12 * z + 16) ** 3) / (z + 11)
            j55 = -((z**2 - 228 * z + 496) ** 3) / (z + 11) ** 5
            for j in (j5, j55):
                scale = sum(abs(mpc(c)) * max(1, abs(j)) ** k for k, c in enumerate(H.coeffs))
                val = sum(mpc(c) * j**k for k, c in enumerate(H.coeffs))
                if abs(val) > tol * scale:
                    return False
    return True


def run_pipeline(d: int, policy: PrecisionPolicy | None = None) -> PipelineResult:
    if d == 4:
        raise PipelineIntegrityError(
            "d = 4 produces square factors; use the cyclotomic corpus instead"
        )
    cd = reduced_forms(d)
    h = cd.h
    if policy is None:
        policy = PrecisionPolicy.for_discriminant(d, h)
    v, relaxed = choose_v(d, cd.f)
    args = n_system(cd, v, N=25)

    H = Poly(class_poly(cd, policy))

    last = None
    for bits in policy.ladder():
        try:
            zs = compute_z_values(args, bits)
            ss = compute_s_values(args, bits, z_values=zs)
            R = Poly(reconstruct_int_poly(zs, bits))
            S = Poly(reconstruct_int_poly(ss, bits))
            Q = build_Q(R)
            p, q = build_p_q(S, Q)
            used = bits
            break
        except (PrecisionError, PipelineIntegrityError) as e:
            last = e
    else:
        raise PrecisionError(f"pipeline for d={d} exhausted precision: {last}")

    if p.degree != 4 * h or q.degree != 16 * h:
        raise PipelineIntegrityError("degree bookkeeping failed")
    if abs(p.coeffs[0]) != 1:
        raise PipelineIntegrityError("constant term of p is not a unit")
    if not (_antipalindromic(p) and _antipalindromic(q) and _antipalindromic(Q.subst_x_pow(5))):
        raise PipelineIntegrityError("anti-palindromic symmetry violated")

    F, Gx5 = build_F_G(H, h)
    F_check = Q.divides(F)
    G_check = p.divides(Gx5)
    div_check = True  # certified inside build_p_q
    cor42 = verify_cor42(R, h)
    t_check = verify_T_invariance(p, h)
    heegner = _heegner_numeric_check(H, zs, used)
    report = disc_conjecture_check(p, d, h)

    return PipelineResult(
        d=d, f=cd.f, h=h, v=v, v_relaxed=relaxed,
        H=H, R=R, S=S, Q=Q, p=p, q=q,
        F_check=F_check, G_check=G_check, div_check=div_check,
        cor42_check=cor42, T_check=t_check, heegner_check=heegner,
        disc_report=report, precision_used=used,
    )
