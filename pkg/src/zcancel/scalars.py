"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_m).

Rationals are ``fractions.Fraction``.  Elements of Q(zeta_m) are stored in
the power basis 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th
cyclotomic polynomial, which makes equality a plain tuple comparison.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclo",
    "cyclotomic_polynomial",
    "cyclo_reduce",
    "cyclo_add",
    "cyclo_neg",
    "cyclo_mul",
    "cyclo_inv",
    "euler_phi",
    "zeta_power",
]


# -- dense polynomials over Q, coefficient lists low -> high ----------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim(x - y for x, y in zip(a, b))


def _pdivmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b):
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, low degree first.

    Uses x^m - 1 = prod_{d | m} Phi_d with exact division.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            q, r = _pdivmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not r
            num = q
    return tuple(int(c) for c in num)


def euler_phi(m):
    return len(cyclotomic_polynomial(m)) - 1


def _reduce_dense(p, m):
    phi = [Fraction(c) for c in cyclotomic_polynomial(m)]
    _, r = _pdivmod(p, phi)
    return tuple(r) + (Fraction(0),) * (len(phi) - 1 - len(r))


class Cyclo:
    """An element of Q(zeta_m) in reduced power-basis coordinates.

    Instances are immutable.  Arithmetic with ``int`` and ``Fraction``
    operands coerces them into the field; mixing two different orders is an
    error (embed first with :meth:`embed`).
    """

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m, coeffs):
        n = euler_phi(m)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"expected {n} coordinates for order {m}, got {len(coeffs)}")
        self.m = m
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_rational(cls, m, value):
        n = euler_phi(m)
        return cls(m, (Fraction(value),) + (0,) * (n - 1))

    @classmethod
    def zero(cls, m):
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.m != self.m:
                raise ValueError(f"order mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo(self.m, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.m, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.m, (a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.coeffs) == 1:
            return Cyclo(self.m, (self.coeffs[0] * other.coeffs[0],))
        return Cyclo(self.m, _reduce_dense(_pmul(self.coeffs, other.coeffs), self.m))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        if len(self.coeffs) == 1:
            return Cyclo(self.m, (1 / self.coeffs[0],))
        # extended Euclid: s*a + t*phi = g, g a nonzero constant
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        g = r1[0]
        return Cyclo(self.m, _reduce_dense([c / g for c in s1], self.m))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, Cyclo):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def embed(self, m2):
        """Image under Q(zeta_m) -> Q(zeta_m2), zeta_m -> zeta_m2^(m2/m)."""
        if m2 % self.m:
            raise ValueError(f"{self.m} does not divide {m2}")
        step = m2 // self.m
        return cyclo_reduce({i * step: c for i, c in enumerate(self.coeffs) if c}, m2)

    def to_json(self):
        """Coordinates as strings, e.g. ``["-1/2", "1"]``."""
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"Cyclo({self.m}, {self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            z = "z" if i == 1 else f"z^{i}"
            if c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"({c})*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def cyclo_reduce(poly, m):
    """Reduce ``{exponent: coefficient}`` in zeta to canonical form.

    Exponents may be any integers; they are first taken mod m.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    dense = [Fraction(0)] * m
    for e, c in poly.items():
        dense[e % m] += Fraction(c)
    return Cyclo(m, _reduce_dense(_trim(dense), m))


@lru_cache(maxsize=None)
def _zeta_table(m):
    return tuple(cyclo_reduce({k: 1}, m) for k in range(m))


def zeta_power(m, k):
    """zeta_m ** k for any integer k."""
    return _zeta_table(m)[k % m]


def cyclo_add(a, b):
    return a + b


def cyclo_neg(a):
    return -a


def cyclo_mul(a, b):
    return a * b


def cyclo_inv(a):
    return a.inverse()


def lcm(*values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
