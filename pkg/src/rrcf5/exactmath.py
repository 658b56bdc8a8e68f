"""Exact arithmetic core: dense polynomials over a field, cyclotomic field
elements for Q(zeta_5) and Q(zeta_20), reduced rational functions, and
projective Moebius maps acting on polynomials.

Every value is immutable and every operation is a pure function; nothing in
this module ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class ExactDomainError(ValueError):
    """Raised when an operation is applied outside its exact-arithmetic domain."""


# ---------------------------------------------------------------------------
# cyclotomic field elements
# ---------------------------------------------------------------------------

# minimal polynomials of zeta_n, lowest-degree coefficient first
_CYCLO_POLY = {
    5: (1, 1, 1, 1, 1),
    20: (1, 0, -1, 0, 1, 0, -1, 0, 1),
}
_PHI = {5: 4, 20: 8}


def _power_table(n):
    """Vectors of zeta_n^k in the power basis, for k = 0 .. 2*phi(n)-2."""
    phi = _PHI[n]
    mod = _CYCLO_POLY[n]
    rows = [tuple(1 if i == k else 0 for i in range(phi)) for k in range(phi)]
    for _ in range(phi - 1):
        prev = rows[-1]
        shifted = [0] + list(prev[:-1])
        top = prev[-1]
        if top:
            # zeta^phi = -(mod[0] + mod[1] z + ...)
            shifted = [s - top * m for s, m in zip(shifted, mod[:phi])]
        rows.append(tuple(shifted))
    return rows


_POWERS = {n: _power_table(n) for n in _CYCLO_POLY}


class CycloElem:
    """Element of Q(zeta_n), n in {5, 20}, as coordinates in the power basis."""

    __slots__ = ("order", "coords")

    def __init__(self, order, coords):
        if order not in _CYCLO_POLY:
            raise ExactDomainError(f"unsupported cyclotomic order {order}")
        phi = _PHI[order]
        cs = tuple(coords)
        if len(cs) != phi:
            raise ExactDomainError(f"need {phi} coordinates for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, *a):
        raise AttributeError("CycloElem is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeta(cls, order):
        phi = _PHI[order]
        return cls(order, tuple(1 if i == 1 else 0 for i in range(phi)))

    @classmethod
    def from_rational(cls, order, value):
        phi = _PHI[order]
        return cls(order, (value,) + (0,) * (phi - 1))

    @classmethod
    def sqrt5(cls, order=5):
        """The Gauss sum zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4."""
        z = cls.zeta(5)
        s = z - z**2 - z**3 + z**4
        if order == 20:
            s = s.embed(20)
        return s

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise ExactDomainError("mixed cyclotomic orders; embed first")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_rational(self.order, other)
        return NotImplemented

    def embed(self, order):
        """Embed Q(zeta_5) into Q(zeta_20) via zeta_5 = zeta_20^4."""
        if order == self.order:
            return self
        if not (self.order == 5 and order == 20):
            raise ExactDomainError("only the embedding Q(zeta_5) -> Q(zeta_20) is supported")
        z4 = CycloElem.zeta(20) ** 4
        acc = CycloElem.from_rational(20, 0)
        for c in reversed(self.coords):
            acc = acc * z4 + CycloElem.from_rational(20, c)
        return acc

    # -- ring structure -----------------------------------------------------

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, o.coords))

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.coords[0]))
        return hash((self.order,) + tuple(Fraction(c) for c in self.coords))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloElem(self.order, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloElem(self.order, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, tuple(c * other for c in self.coords))
        if not isinstance(other, CycloElem):
            return NotImplemented
        if other.order != self.order:
            raise ExactDomainError("mixed cyclotomic orders; embed first")
        phi = _PHI[self.order]
        a, b = self.coords, other.coords
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        powers = _POWERS[self.order]
        out = [0] * phi
        for k, ck in enumerate(conv):
            if ck:
                row = powers[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += ck * row[i]
        return CycloElem(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # extended Euclid of the coordinate polynomial against the minimal
        # polynomial of zeta_n, over Q
        mod = [Fraction(c) for c in _CYCLO_POLY[self.order]]
        a = [Fraction(c) for c in self.coords]
        r0, r1 = mod, _trim(a)
        s0, s1 = [], [Fraction(1)]
        while _deg(r1) > 0:
            q, r = _list_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _list_sub(s0, _list_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("not invertible (should not happen in a field)")
        inv_c = 1 / r1[0]
        coeffs = [c * inv_c for c in s1]
        phi = _PHI[self.order]
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        return CycloElem(self.order, tuple(coeffs[:phi]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloElem.from_rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure queries --------------------------------------------------

    def is_rational(self):
        return not any(self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ExactDomainError("not a rational element")
        return Fraction(self.coords[0])

    def galois(self, k):
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        if _igcd(k, self.order) != 1:
            raise ExactDomainError("automorphism exponent must be a unit")
        zk = CycloElem.zeta(self.order) ** k
        acc = CycloElem.from_rational(self.order, 0)
        for c in reversed(self.coords):
            acc = acc * zk + CycloElem.from_rational(self.order, c)
        return acc

    def evaluate(self, zeta_value):
        """Numeric value given a numeric primitive root of unity."""
        acc = 0
        for c in reversed(self.coords):
            f = Fraction(c)
            acc = acc * zeta_value + f.numerator / (zeta_value * 0 + f.denominator)
        return acc

    def __repr__(self):
        return f"CycloElem({self.order}, {self.coords})"


def golden_unit(order=5):
    """epsilon = (-1 + sqrt(5))/2, a fundamental unit of Q(sqrt(5))."""
    return (CycloElem.sqrt5(order) - 1) * Fraction(1, 2)


def golden_unit_conj(order=5):
    """epsilon-bar = (-1 - sqrt(5))/2."""
    return (-CycloElem.sqrt5(order) - 1) * Fraction(1, 2)


# small helpers on bare coefficient lists (used by CycloElem.inverse)

def _trim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _deg(cs):
    return len(cs) - 1


def _list_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _list_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _list_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] * inv
        q[k] = coef
        if coef:
            for j, y in enumerate(b):
                a[k + j] -= coef * y
    return _trim(q), _trim(a)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _inv_coeff(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Poly):
        # nested coefficients: only division by a monic-in-the-unit sense
        # leading coefficient of 1 is exact
        if c == 1:
            return c
        raise ExactDomainError("leading coefficient is not a unit")
    return 1 / c


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first.

    Coefficients may be ints, Fractions, CycloElem, or any commutative ring
    element supporting +, -, * and truth testing.  The zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ExactDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(Fraction(c) if isinstance(c, int) else c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            if not other:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, inv = other.degree, _inv_coeff(other.lc)
        if len(rem) < len(other.coeffs):
            return Poly(), self
        q = [0] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            coef = rem[k + db] * inv
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - coef * b
        return Poly(q), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ExactDomainError("division is not exact")
        return q

    def divides(self, other):
        """True if self divides other exactly."""
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner):
        """self(inner) for a polynomial inner."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(c)
        return acc

    def subst_x_pow(self, k):
        """Substitute x -> x^k by spreading coefficients."""
        if self.is_zero():
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(out)

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def reversed_poly(self):
        """x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    def monic(self):
        if self.is_zero():
            return self
        inv = _inv_coeff(self.lc)
        return Poly([c * inv for c in self.coeffs])

    def is_integral(self):
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
                   for c in self.coeffs)

    def int_coeffs(self):
        if not self.is_integral():
            raise ExactDomainError("polynomial is not integral")
        return tuple(int(c) for c in self.coeffs)

    def content(self):
        """Positive rational content (coefficients must be int/Fraction)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            f = Fraction(c)
            num = _igcd(num, f.numerator)
            den = den * f.denominator // _igcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self):
        c = self.content()
        if not c:
            return self
        return self.map_coeffs(lambda a: Fraction(a) / c)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*x^{i}" if i else f"({c})")
        return "Poly(" + " + ".join(parts) + ")"


def poly_gcd(p, q):
    """Monic gcd over the coefficient field."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def lift_to_cyclo(p, order=5):
    """Lift a rational-coefficient polynomial to CycloElem coefficients."""
    return p.map_coeffs(lambda c: CycloElem.from_rational(order, c))


# ---------------------------------------------------------------------------
# resultants and discriminants (over Q, via the subresultant PRS)
# ---------------------------------------------------------------------------


def _clear_denominators(p):
    """Return (integer coefficient list, clearing factor c) with c*p integral."""
    den = 1
    for c in p.coeffs:
        d = Fraction(c).denominator
        den = den * d // _igcd(den, d)
    return [int(Fraction(c) * den) for c in p.coeffs], den


def _resultant_int(A, B):
    """Resultant of two nonzero integer-coefficient lists (lowest first)."""
    degA, degB = len(A) - 1, len(B) - 1
    if degA == 0 and degB == 0:
        return 1
    if degB == 0:
        return B[0] ** degA
    if degA == 0:
        return A[0] ** degB
    s = 1
    if degA < degB:
        A, B = B, A
        if degA % 2 == 1 and degB % 2 == 1:
            s = -s
        degA, degB = degB, degA
    g = h = 1
    while True:
        delta = degA - degB
        if degA % 2 == 1 and degB % 2 == 1:
            s = -s
        # pseudo-remainder lc(B)^(delta+1) * A mod B
        R = list(A)
        lb = B[-1]
        for k in range(delta, -1, -1):
            top = R[k + degB]
            R = [c * lb for c in R]
            if top:
                for j in range(degB + 1):
                    R[k + j] -= top * B[j]
            R[k + degB] = 0
        while R and R[-1] == 0:
            R.pop()
        if not R:
            return 0
        A, degA = B, degB
        divisor = g * h**delta
        B = [c // divisor for c in R]
        degB = len(B) - 1
        g = A[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if degB == 0:
            break
    return s * (B[0] ** degA // h ** (degA - 1) if degA > 1 else B[0] ** degA)


def poly_resultant(p, q):
    """Exact resultant Res(p, q) of rational-coefficient polynomials."""
    if p.is_zero() and q.is_zero():
        raise ExactDomainError("resultant of two zero polynomials")
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    A, ca = _clear_denominators(p)
    B, cb = _clear_denominators(q)
    r = _resultant_int(A, B)
    return Fraction(r) / (Fraction(ca) ** q.degree * Fraction(cb) ** p.degree)


def poly_discriminant(p):
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if n < 2:
        raise ExactDomainError("discriminant needs degree >= 2")
    res = poly_resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / Fraction(p.lc)


def poly_compose_rational(H, num, den, h):
    """Denominator-cleared composition den^h * H(num/den).

    Returns sum_k H_k * num^k * den^(h-k); integral whenever H is.
    """
    if h != H.degree:
        raise ExactDomainError("h must equal deg H")
    num_pow = Poly((1,))
    den_pows = [Poly((1,))]
    for _ in range(h):
        den_pows.append(den_pows[-1] * den)
    total = Poly()
    for k, c in enumerate(H.coeffs):
        if c:
            total = total + num_pow * den_pows[h - k] * c
        if k < h:
            num_pow = num_pow * num
    return total


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced rational function num/den over a coefficient field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly((1,))
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        inv = _inv_coeff(den.lc)
        object.__setattr__(self, "num", num * inv)
        object.__setattr__(self, "den", den * inv)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return (self.num * other.den) == (other.num * self.den)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den, self.num, reduce=False) ** (-n)
        return RatFunc(self.num**n, self.den**n, reduce=False)

    def is_zero(self):
        return self.num.is_zero()

    def substitute(self, inner):
        """Compose: self(inner(x)) for a RatFunc (or Poly) inner."""
        if isinstance(inner, Poly):
            inner = RatFunc(inner)
        n, m = self.num.degree, self.den.degree
        k = max(n, m)
        gnum, gden = inner.num, inner.den
        gden_pows = [Poly((1,))]
        for _ in range(k):
            gden_pows.append(gden_pows[-1] * gden)

        def cleared(p):
            # gden^k * p(gnum/gden)
            acc = Poly()
            gp = Poly((1,))
            for i, c in enumerate(p.coeffs):
                if c:
                    acc = acc + gp * gden_pows[k - i] * c
                if i < p.degree:
                    gp = gp * gnum
            return acc

        return RatFunc(cleared(self.num), cleared(self.den))

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def ratfunc_equal(f, g):
    """Cross-multiplication equality in the function field."""
    return f == g


# ---------------------------------------------------------------------------
# Moebius maps
# ---------------------------------------------------------------------------


def _as_cyclo(value, order):
    if isinstance(value, CycloElem):
        if value.order != order:
            raise ExactDomainError("mixed cyclotomic orders in Moebius map")
        return value
    return CycloElem.from_rational(order, value)


class MoebiusMap:
    """Projective linear fractional map z -> (az + b)/(cz + d) over Q(zeta_n).

    Entries are stored in a canonical form: the first nonzero entry of
    (a, b, c, d) is scaled to 1, which makes projective equality (and
    hashing) decidable.
    """

    __slots__ = ("order", "a", "b", "c", "d")

    def __init__(self, a, b, c, d, order=5):
        a, b, c, d = (_as_cyclo(v, order) for v in (a, b, c, d))
        if not (a * d - b * c):
            raise ExactDomainError("Moebius map must have nonzero determinant")
        for pivot in (a, b, c, d):
            if pivot:
                inv = pivot.inverse()
                a, b, c, d = a * inv, b * inv, c * inv, d * inv
                break
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *a):
        raise AttributeError("MoebiusMap is immutable")

    @classmethod
    def identity(cls, order=5):
        return cls(1, 0, 0, 1, order=order)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return isinstance(other, MoebiusMap) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __mul__(self, other):
        """Composition self o other (matrix product)."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return MoebiusMap(a, b, c, d, order=self.order)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a, order=self.order)

    def element_order(self, limit=61):
        acc = self
        for n in range(1, limit + 1):
            if acc == MoebiusMap.identity(self.order):
                return n
            acc = acc * self
        raise ExactDomainError("order exceeds limit")

    def apply(self, z):
        """Exact action on a field element z."""
        den = self.c * z + self.d
        if not den:
            raise ZeroDivisionError("pole of Moebius map")
        return (self.a * z + self.b) / den

    def apply_numeric(self, z, zeta_value):
        """Numeric action, evaluating entries at a numeric root of unity."""
        a, b, c, d = (e.evaluate(zeta_value) for e in self.entries())
        return (a * z + b) / (c * z + d)

    def __repr__(self):
        return f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def moebius_act_on_poly(M, p, normalize=True):
    """Denominator-cleared pullback (cx+d)^deg(p) * p((ax+b)/(cx+d)).

    Coefficients are lifted to Q(zeta_n).  With normalize=True the result is
    scaled to leading coefficient 1, giving a canonical projective
    representative; the action is then a right group action up to scalars.
    """
    if p.is_zero():
        raise ExactDomainError("cannot act on the zero polynomial")
    order = M.order
    p = p.map_coeffs(lambda c: _as_cyclo(c, order))
    n = p.degree
    num = Poly((M.b, M.a))
    den = Poly((M.d, M.c))
    den_pows = [Poly((CycloElem.from_rational(order, 1),))]
    for _ in range(n):
        den_pows.append(den_pows[-1] * den)
    acc = Poly()
    num_pow = Poly((CycloElem.from_rational(order, 1),))
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + num_pow * den_pows[n - k] * c
        if k < n:
            num_pow = num_pow * num
    if acc.is_zero():
        raise ExactDomainError("pullback collapsed to zero (degenerate map)")
    if normalize:
        acc = acc.monic()
    return acc
