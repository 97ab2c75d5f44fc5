"""Sparse commutative polynomials with Q(zeta_m) coefficients.

Used for elements of a rectangular center k[x_1^a_1, ..., x_n^a_n], written
in the ambient exponent coordinates.  On such a center the normal monomials
multiply without twisting scalars, so plain polynomial arithmetic is exact.
"""

from .scalars import Cyclo

__all__ = ["Poly", "InexactDivisionError"]


class InexactDivisionError(ArithmeticError):
    pass


class Poly:
    __slots__ = ("m", "nvars", "terms")

    def __init__(self, m, nvars, terms=None):
        self.m = m
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if not isinstance(c, Cyclo):
                c = Cyclo.from_rational(m, c)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, m, nvars, c):
        return cls(m, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, m, exps, c=1):
        return cls(m, len(exps), {tuple(exps): c})

    def _new(self, terms):
        out = Poly.__new__(Poly)
        out.m, out.nvars, out.terms = self.m, self.nvars, terms
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self == Poly.constant(self.m, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Cyclo)):
            if not other:
                return self._new({})
            return self._new({k: v * other for k, v in self.terms.items()})
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                v = ca * cb
                if k in out:
                    s = out[k] + v
                    if s:
                        out[k] = s
                    else:
                        del out[k]
                else:
                    out[k] = v
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.constant(self.m, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def leading(self):
        """(monomial, coefficient) of the lexicographically greatest term."""
        mono = max(self.terms)
        return mono, self.terms[mono]

    def is_monomial(self):
        return len(self.terms) == 1

    def exact_div(self, g):
        """f / g, raising :class:`InexactDivisionError` unless g divides f."""
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        gm, gc = g.leading()
        ginv = gc.inverse()
        if g.is_monomial():
            out = {}
            for mono, c in self.terms.items():
                k = tuple(x - y for x, y in zip(mono, gm))
                if min(k, default=0) < 0:
                    raise InexactDivisionError("monomial does not divide")
                out[k] = c * ginv
            return self._new(out)
        f = self
        q = {}
        while f:
            fm, fc = f.leading()
            k = tuple(x - y for x, y in zip(fm, gm))
            if min(k, default=0) < 0:
                raise InexactDivisionError("polynomial does not divide exactly")
            c = fc * ginv
            q[k] = c
            f = f - g * Poly(self.m, self.nvars, {k: c})
        return self._new(q)

    def embed(self, nvars, offset):
        """Same polynomial with variables placed at ``offset`` in a wider ring."""
        pad = nvars - offset - self.nvars
        return Poly(self.m, nvars, {(0,) * offset + k + (0,) * pad: v for k, v in self.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"Poly({self.terms})"
