"""Exact arithmetic in a cyclotomic field Q(zeta_N).

Elements are coefficient vectors of length phi(N) over arbitrary-precision
rationals, reduced modulo the N-th cyclotomic polynomial.  The reduced
representation is canonical, so equality is coefficient-wise and hashing is
structural.  N must be divisible by 4, which guarantees a square root of -1
(zeta^(N/4)); the default N = 24 additionally contains all roots of unity of
order dividing 24.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import NotCoprimeError

try:  # gmpy2 rationals are an order of magnitude faster; Fraction works too
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

RationalLike = Union[int, Fraction]

_F0 = _Q(0)
_F1 = _Q(1)


def _add(a, b):
    return a + b


def _sub(a, b):
    return a - b


def _neg(a):
    return -a


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer."""
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _polydiv_int(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, den monic; remainder must vanish
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        out[k - dd] = c
        if c:
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_int(num, cyclotomic_polynomial(d))
    return tuple(num)


class CyclotomicField:
    """The field Q(zeta_N) for a fixed order N divisible by 4."""

    def __init__(self, order: int = 24):
        if order <= 0 or order % 4 != 0:
            raise ValueError("field order must be a positive multiple of 4")
        self.order = order
        poly = cyclotomic_polynomial(order)
        self.degree = len(poly) - 1
        self.minpoly = tuple(_Q(c) for c in poly)
        self._zero_tail = (_F0,) * (self.degree - 1)
        # zeta^k reduced mod the minimal polynomial, for k = 0 .. order-1
        table = []
        cur = [_F0] * self.degree
        cur[0] = _F1
        for _ in range(order):
            table.append(tuple(cur))
            top = cur[-1]
            nxt = [_F0] + cur[:-1]
            if top:
                for j in range(self.degree):
                    nxt[j] -= top * self.minpoly[j]
            cur = nxt
        self._zeta_pow = table
        self.zero = Cyc(self, (_F0,) + self._zero_tail)
        self.one = Cyc(self, (_F1,) + self._zero_tail)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("CyclotomicField", self.order))

    def rational(self, p: RationalLike, q: int = 1) -> "Cyc":
        """Embed the rational p/q."""
        val = _Q(p, q) if q != 1 else _Q(p)
        if val == 0:
            return self.zero
        return Cyc(self, (val,) + self._zero_tail)

    def zeta(self, k: int = 1) -> "Cyc":
        """The root of unity zeta^k, reduced."""
        return Cyc(self, self._zeta_pow[k % self.order])

    @property
    def i(self) -> "Cyc":
        """A square root of -1 (zeta^(N/4))."""
        return self.zeta(self.order // 4)

    def element(self, coeffs: Iterable[RationalLike]) -> "Cyc":
        vals = tuple(_Q(c) for c in coeffs)
        if len(vals) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients")
        return Cyc(self, vals)

    def galois(self, k: int, a: "Cyc") -> "Cyc":
        """Apply the field automorphism zeta -> zeta^k; k must be a unit mod N."""
        if gcd(k, self.order) != 1:
            raise NotCoprimeError(f"{k} is not coprime to {self.order}")
        acc = [_F0] * self.degree
        for j, c in enumerate(a.coeffs):
            if c:
                pw = self._zeta_pow[(j * k) % self.order]
                for t in range(self.degree):
                    if pw[t]:
                        acc[t] += c * pw[t]
        return Cyc(self, tuple(acc))

    def units(self) -> list[int]:
        """Residues coprime to the order, ascending; the Galois group indices."""
        return [k for k in range(1, self.order) if gcd(k, self.order) == 1]

    def _reduce_product(self, conv: list) -> tuple:
        d = self.degree
        acc = conv[:d]
        for k in range(d, len(conv)):
            c = conv[k]
            if c:
                pw = self._zeta_pow[k]
                for t in range(d):
                    if pw[t]:
                        acc[t] += c * pw[t]
        return tuple(acc)


class Cyc:
    """An element of a fixed :class:`CyclotomicField`.  Immutable."""

    __slots__ = ("field", "coeffs", "rat")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self.rat = not any(coeffs[1:])  # cached: purely rational element

    def is_zero(self) -> bool:
        return self.rat and not self.coeffs[0]

    def is_one(self) -> bool:
        return self.rat and self.coeffs[0] == 1

    def is_rational(self) -> bool:
        return self.rat

    def rational_value(self):
        if not self.rat:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.rat and self.coeffs[0].denominator == 1

    def _coerce(self, other) -> "Cyc | None":
        if isinstance(other, Cyc):
            if other.field.order != self.field.order:
                raise ValueError("mixed field orders")
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, type(_F0)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        if not isinstance(other, Cyc):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            other = o
        return Cyc(self.field, tuple(map(_add, self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Cyc):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            other = o
        return Cyc(self.field, tuple(map(_sub, self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyc(self.field, tuple(map(_neg, self.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, Cyc):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            other = o
        f = self.field
        a, b = self.coeffs, other.coeffs
        if self.rat:
            c = a[0]
            if not c:
                return f.zero
            if c == 1:
                return other
            return Cyc(f, tuple(c * x for x in b))
        if other.rat:
            c = b[0]
            if not c:
                return f.zero
            if c == 1:
                return self
            return Cyc(f, tuple(c * x for x in a))
        d = f.degree
        conv = [_F0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Cyc(f, f._reduce_product(conv))

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.rational(1 / self.coeffs[0])
        # extended Euclid against the (irreducible) minimal polynomial
        g, u = _poly_invmod(list(self.coeffs), list(self.field.minpoly))
        inv_g = 1 / g
        u = [c * inv_g for c in u]
        u += [_F0] * (self.field.degree - len(u))
        return Cyc(self.field, tuple(u[: self.field.degree]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> "Cyc":
        return self.field.galois(k, self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mon = "z" if j == 1 else f"z^{j}"
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{c}*{mon}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Cyc({self})"


def _poly_invmod(a: list, m: list) -> tuple:
    """Return (g, u) with u*a = g (mod m), g a nonzero constant."""

    def deg(p):
        d = len(p) - 1
        while d >= 0 and not p[d]:
            d -= 1
        return d

    def step(r0, r1, s0, s1):
        # one Euclid step: r0 = q*r1 + r2, s2 = s0 - q*s1
        r2 = r0[:]
        d1 = deg(r1)
        lead = r1[d1]
        q = [_F0] * (max(deg(r0) - d1 + 1, 1))
        while deg(r2) >= d1:
            d2 = deg(r2)
            c = r2[d2] / lead
            q[d2 - d1] = c
            for j in range(d1 + 1):
                r2[d2 - d1 + j] -= c * r1[j]
        s2 = s0[:] + [_F0] * max(0, len(q) + len(s1) - len(s0))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    if sc:
                        s2[i + j] -= qc * sc
        return r2, s2

    r0, r1 = m[:], a[:]
    s0, s1 = [_F0], [_F1]
    while deg(r1) > 0:
        r2, s2 = step(r0, r1, s0, s1)
        r0, r1, s0, s1 = r1, r2, s1, s2
    d = deg(r1)
    if d != 0:
        raise ZeroDivisionError("element shares a factor with the modulus")
    return r1[0], s1
