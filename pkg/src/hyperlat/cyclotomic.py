"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are coefficient vectors over the power basis 1, z, ..., z^(phi-1)
reduced modulo the N-th cyclotomic polynomial.
"""
from fractions import Fraction
from functools import lru_cache


def _poly_divmod(num, den):
    """Quotient and remainder of integer/rational polynomials (low degree first)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            f = c / lead if not isinstance(c, int) or c % lead else c // lead
            q[i] = f
            for j, d in enumerate(den):
                num[i + j] -= f * d
    rem = num[:len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(int(c) for c in poly)


def euler_phi(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


class CyclotomicField:
    def __init__(self, order):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def reduce(self, coeffs):
        coeffs = list(coeffs)
        m = self.modulus
        d = self.degree
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                coeffs[i] = 0
                for j in range(d):
                    coeffs[i - d + j] -= c * m[j]
        coeffs = coeffs[:d] + [0] * (d - len(coeffs))
        return tuple(coeffs)

    def element(self, coeffs):
        return CyclotomicNumber(self, self.reduce(coeffs))

    def zeta(self, k=1):
        k %= self.order
        c = [0] * (k + 1)
        c[k] = 1
        return self.element(c)

    def one(self):
        return self.element([1])

    def zero(self):
        return self.element([0])


class CyclotomicNumber:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _lift(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.element([other])

    def __add__(self, other):
        o = self._lift(other)
        return CyclotomicNumber(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        prod = [0] * (2 * self.field.degree)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return self.field.element(prod)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return (self.inverse()) ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (ValueError, TypeError):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash((self.field.order, tuple(Fraction(c) for c in self.coeffs)))

    def __repr__(self):
        return "Cyc%d%s" % (self.field.order, tuple(str(c) for c in self.coeffs))

    def conjugate(self):
        """Complex conjugation, z -> z^-1."""
        F = self.field
        out = F.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + F.zeta(-k) * c
        return out

    def galois(self, j):
        """Image under z -> z^j for j coprime to the order."""
        F = self.field
        out = F.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + F.zeta(j * k) * c
        return out

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.coeffs[0])

    def is_integral_coeffs(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def inverse(self):
        """Inverse via the product of the non-identity Galois conjugates."""
        F = self.field
        prod = F.one()
        for j in range(2, F.order):
            if _gcd(j, F.order) == 1:
                prod = prod * self.galois(j)
        norm = (self * prod).rational()
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return prod * Fraction(1) * (Fraction(1) / norm)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def trace(self):
        """Absolute trace to Q."""
        F = self.field
        total = F.zero()
        for j in range(1, F.order + 1):
            if _gcd(j, F.order) == 1:
                total = total + self.galois(j)
        return total.rational()


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_prime(field, p):
    """The positive square root of a prime inside a cyclotomic field.

    Uses the quadratic Gauss sum for odd p and zeta_8 + zeta_8^-1 for p = 2.
    The field order must be divisible by 8 (p = 2) or by 4p (odd p).
    """
    N = field.order
    if p == 2:
        if N % 8:
            raise ValueError("need 8 | N for sqrt(2)")
        z = field.zeta(N // 8)
        return z + z.conjugate()
    if N % p:
        raise ValueError("need p | N")
    step = N // p
    g = field.zero()
    for k in range(1, p):
        g = g + field.zeta(step * k) * legendre(k, p)
    if p % 4 == 1:
        return g
    if N % 4:
        raise ValueError("need 4 | N for p = 3 mod 4")
    i = field.zeta(N // 4)
    return -(i * g)
