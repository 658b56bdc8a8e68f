"""Arbitrary-precision numerics: Dedekind eta, the Rogers-Ramanujan
continued fraction r(tau), the modular j-invariant, complex root finding,
and reconstruction of integer polynomials from floating root lists.

All precision arguments are in bits.  mpmath supplies the underlying
floating type; every public function sets its own working precision and
restores the caller's on exit.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf


class PrecisionError(ArithmeticError):
    """Raised when a computation cannot be certified at the working precision."""


@dataclass(frozen=True)
class PrecisionPolicy:
    """Escalation schedule for precision-sensitive computations."""

    initial_bits: int
    max_bits: int = 1 << 20
    growth: int = 2

    def ladder(self):
        bits = self.initial_bits
        while bits <= self.max_bits:
            yield bits
            bits *= self.growth

    @classmethod
    def for_discriminant(cls, d: int, h: int, max_bits: int = 1 << 20):
        # coefficient sizes grow roughly like exp(pi sqrt(d) * (class-number
        # sums)); the constant below is generous and the ladder doubles
        base = int(4.6 * (d**0.5) * h) + 96 * h + 128
        return cls(initial_bits=base, max_bits=max_bits)


TWO_PI_I = None  # computed lazily at working precision


def _qtau(tau, prec):
    """q = exp(2 pi i tau) at the given precision (caller sets workprec)."""
    return mpmath.exp(2j * mp.pi * tau)


def eta(tau, prec: int):
    """Dedekind eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), Im(tau) > 0."""
    with mp.workprec(prec + 64):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise ValueError("eta requires Im(tau) > 0")
        q = _qtau(tau, prec)
        prefactor = mpmath.exp(1j * mp.pi * tau / 12)
        prod = mpf(1)
        qn = mpc(1)
        tiny = mpf(2) ** (-(prec + 64))
        for _ in range(1, 10_000_000):
            qn = qn * q
            prod = prod * (1 - qn)
            if abs(qn) < tiny:
                break
        else:
            raise PrecisionError("eta product did not converge")
        result = prefactor * prod
    with mp.workprec(prec):
        return mpc(result)


def rr_r(tau, prec: int):
    """The Rogers-Ramanujan continued fraction
    r(tau) = q^{1/5} prod_{n>=1} (1 - q^n)^{(n|5)}   with (n|5) the Legendre symbol.
    """
    legendre = (0, 1, -1, -1, 1)  # (n|5) by n mod 5
    with mp.workprec(prec + 64):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise ValueError("r(tau) requires Im(tau) > 0")
        q = _qtau(tau, prec)
        prefactor = mpmath.exp(2j * mp.pi * tau / 5)
        num = mpc(1)
        den = mpc(1)
        qn = mpc(1)
        tiny = mpf(2) ** (-(prec + 64))
        for n in range(1, 10_000_000):
            qn = qn * q
            s = legendre[n % 5]
            if s == 1:
                num = num * (1 - qn)
            elif s == -1:
                den = den * (1 - qn)
            if abs(qn) < tiny:
                break
        else:
            raise PrecisionError("r(tau) product did not converge")
        result = prefactor * num / den
    with mp.workprec(prec):
        return mpc(result)


def weber_x1(tau, prec: int):
    """The eta quotient x1(tau) = (eta(tau/5)/eta(tau))^2."""
    with mp.workprec(prec + 32):
        return eta(mpc(tau) / 5, prec + 32) ** 2 / eta(tau, prec + 32) ** 2


def j_from_tau(tau, prec: int, cross_check: bool = True):
    """Modular j-invariant via the level-5 eta quotient:

        j = (x1^6 + 10 x1^3 + 5)^3 / x1^3,   x1 = (eta(tau/5)/eta(tau))^2.

    With cross_check=True the value is recomputed from r(tau) through

        j = (r^20 - 228 r^15 + 494 r^10 + 228 r^5 + 1)^3 / (r^5 (1 - 11 r^5 - r^10)^5)

    and the two routes must agree to relative 2^(32-prec).
    """
    with mp.workprec(prec + 64):
        x1 = weber_x1(tau, prec + 64)
        c = x1**3
        j1 = (c**2 + 10 * c + 5) ** 3 / c
        if cross_check:
            r = rr_r(tau, prec + 64)
            r5 = r**5
            num = (r5**4 - 228 * r5**3 + 494 * r5**2 + 228 * r5 + 1) ** 3
            den = r5 * (1 - 11 * r5 - r5**2) ** 5
            j2 = num / den
            scale = max(abs(j1), mpf(1))
            if abs(j1 - j2) / scale > mpf(2) ** (32 - prec):
                raise PrecisionError("j-invariant routes disagree; raise the precision")
        out = j1
    with mp.workprec(prec):
        return mpc(out)


def _squarefree_check(coeffs):
    """True if the integer polynomial is squarefree (gcd with derivative trivial)."""
    from fractions import Fraction

    from .exactmath import Poly, poly_gcd

    p = Poly([Fraction(c) for c in coeffs])
    g = poly_gcd(p, p.derivative())
    return g.degree <= 0


def poly_complex_roots(coeffs, prec: int, require_squarefree: bool = True):
    """All complex roots of an integer polynomial, certified by residuals.

    coeffs is lowest-degree first.  Roots come back sorted lexicographically
    by (real, imag) after rounding at 2^(-prec/4), so the order is stable
    across precisions.  Raises PrecisionError when any residual is larger
    than 2^(-prec/2) * max|coeff|.
    """
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        raise ValueError("need a nonconstant polynomial")
    if require_squarefree and not _squarefree_check(cs):
        raise ValueError("polynomial has repeated roots; deflate first")
    with mp.workprec(prec + 96):
        roots = mpmath.polyroots(list(reversed(cs)), maxsteps=200, extraprec=prec // 2 + 64)
        maxc = max(abs(c) for c in cs)
        bound = mpf(2) ** (-(prec // 2)) * maxc
        for r in roots:
            val = mpmath.polyval(list(reversed(cs)), r)
            if abs(val) > bound:
                raise PrecisionError("root residual too large; raise the precision")
        grid = mpf(2) ** (-(prec // 4))

        def key(r):
            return (mpmath.nint(r.real / grid), mpmath.nint(r.imag / grid))

        roots = sorted((mpc(r) for r in roots), key=key)
    with mp.workprec(prec):
        return [mpc(r) for r in roots]


def reconstruct_int_poly(roots, prec: int, leading: int = 1, tol_bits: int = 32):
    """Expand leading * prod (x - root) and round to the nearest integers.

    Raises PrecisionError when any coefficient sits farther than 2^-tol_bits
    from an integer, or when the imaginary parts do not cancel.
    """
    with mp.workprec(prec + 64):
        coeffs = [mpc(leading)]  # lowest-degree first throughout
        for r in roots:
            r = mpc(r)
            nxt = [mpc(0)] + coeffs  # multiply by x
            for i, c in enumerate(coeffs):
                nxt[i] -= r * c      # subtract r * p
            coeffs = nxt
        tol = mpf(2) ** (-tol_bits)
        out = []
        for c in coeffs:
            if abs(c.imag) > tol:
                raise PrecisionError("imaginary parts failed to cancel")
            n = int(mpmath.nint(c.real))
            if abs(c.real - n) > tol:
                raise PrecisionError("coefficient too far from an integer")
            out.append(n)
    return tuple(out)


def as_mpc(value, prec: int):
    with mp.workprec(prec):
        return mpc(value)


def close(a, b, bits: int):
    """|a - b| < 2^-bits, evaluated at a safe working precision."""
    with mp.workprec(bits + 64):
        return abs(mpc(a) - mpc(b)) < mpf(2) ** (-bits)


def rel_close(a, b, bits: int):
    """Relative closeness with floor 1 to avoid division blowups near zero."""
    with mp.workprec(bits + 64):
        scale = max(abs(mpc(a)), abs(mpc(b)), mpf(1))
        return abs(mpc(a) - mpc(b)) / scale < mpf(2) ** (-bits)
