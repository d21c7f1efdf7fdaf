"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi-1) with
rational coefficients.  Everything is exact; there are no floats anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Union

Rational = Union[int, Fraction]


# -- dense univariate polynomials over Q (lists, lowest degree first) ----------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(num: Sequence[Rational], den: Sequence[Rational]):
    """Quotient and remainder of dense rational polynomials."""
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = _trim(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(num) >= len(den):
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        _trim(num)
    return _trim(q), num


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _poly_sub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _trim(out)


def poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by exact division of t^n - 1 by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            if rem:
                raise ArithmeticError(f"Phi_{d} does not divide t^{n} - 1")
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


# -- the field ----------------------------------------------------------------

class CycloField:
    """The cyclotomic field Q(zeta_n); use :func:`make_field` to get one."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.phi = len(self.modulus) - 1
        # t^phi = -(m_0 + m_1 t + ... + m_{phi-1} t^{phi-1})
        self._tail = tuple((i, c) for i, c in enumerate(self.modulus[:-1]) if c)
        self._powers = self._root_powers()

    def _root_powers(self):
        powers = []
        cur = [0] * self.phi
        cur[0] = 1
        for _ in range(self.n):
            powers.append(tuple(cur))
            cur = [0] + cur
            top = cur.pop()
            if top:
                for i, c in self._tail:
                    cur[i] -= top * c
        return tuple(powers)

    def __repr__(self):
        return f"CycloField({self.n})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.n == self.n

    def __hash__(self):
        return hash(("CycloField", self.n))

    def __reduce__(self):
        return (make_field, (self.n,))

    # constructors
    def __call__(self, value) -> "CycloElem":
        if isinstance(value, CycloElem):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value
        return self.rational(value)

    def rational(self, q: Rational) -> "CycloElem":
        coeffs = [Fraction(0)] * self.phi
        coeffs[0] = Fraction(q)
        return CycloElem(self, tuple(coeffs))

    @property
    def zero(self) -> "CycloElem":
        return CycloElem(self, (Fraction(0),) * self.phi)

    @property
    def one(self) -> "CycloElem":
        return self.rational(1)

    def root_of_unity(self, k: int) -> "CycloElem":
        return CycloElem(self, tuple(Fraction(c) for c in self._powers[k % self.n]))

    def zeta(self) -> "CycloElem":
        return self.root_of_unity(1)

    def primitive_root(self, order: int) -> "CycloElem":
        """A fixed primitive root of unity of the given order, zeta^(n/order)."""
        if order < 1 or self.n % order:
            raise ValueError(f"Q(zeta_{self.n}) has no primitive root of order {order}")
        return self.root_of_unity(self.n // order)

    def from_coeffs(self, coeffs: Sequence[Rational]) -> "CycloElem":
        """Element with the given power-basis coefficients (any length, reduced)."""
        return CycloElem(self, self._reduce([Fraction(c) for c in coeffs]))

    def _reduce(self, coeffs: list) -> tuple:
        phi = self.phi
        coeffs = list(coeffs) + [Fraction(0)] * max(0, phi - len(coeffs))
        for k in range(len(coeffs) - 1, phi - 1, -1):
            top = coeffs[k]
            if top:
                for i, c in self._tail:
                    coeffs[k - phi + i] -= top * c
        return tuple(Fraction(c) for c in coeffs[:phi])

    # integer-vector kernel used by the elimination engine
    def imul(self, a: tuple, b: tuple) -> tuple:
        """Product of two integer coefficient vectors, reduced mod Phi_n."""
        phi = self.phi
        if phi == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * phi - 1)
        nb = [(j, bj) for j, bj in enumerate(b) if bj]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in nb:
                    prod[i + j] += ai * bj
        tail = self._tail
        for k in range(2 * phi - 2, phi - 1, -1):
            top = prod[k]
            if top:
                base = k - phi
                for i, c in tail:
                    prod[base + i] -= top * c
        return tuple(prod[:phi])


@lru_cache(maxsize=None)
def make_field(n: int) -> CycloField:
    return CycloField(n)


def root_of_unity(field: CycloField, k: int) -> "CycloElem":
    return field.root_of_unity(k)


# -- elements -----------------------------------------------------------------

_CYCLO_RE = re.compile(r"^\s*cyclo\((\d+)\)\[(.*)\]\s*$")


class CycloElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.field.n != self.field.n:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return CycloElem(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            q = other.coeffs[0]
            return CycloElem(self.field, tuple(a * q for a in self.coeffs))
        if self.is_rational():
            q = self.coeffs[0]
            return CycloElem(self.field, tuple(q * b for b in other.coeffs))
        phi = self.field.phi
        prod = [Fraction(0)] * (2 * phi - 1)
        nb = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in nb:
                    prod[i + j] += a * b
        return CycloElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> "CycloElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self.field.rational(1 / self.coeffs[0])
        g, s, _ = poly_xgcd(list(self.coeffs), list(self.field.modulus))
        # Phi_n is irreducible, so a nonzero residue is coprime to it
        if len(g) != 1:
            raise ArithmeticError("representative not coprime to the modulus")
        return self.field.from_coeffs(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.field.n == other.field.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def sort_key(self):
        return self.coeffs

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return serialize(self)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def serialize(a: CycloElem) -> str:
    """Text form ``cyclo(n)[q0, q1, ...]``."""
    return f"cyclo({a.field.n})[" + ", ".join(_fmt_q(q) for q in a.coeffs) + "]"


def parse(text: str) -> CycloElem:
    match = _CYCLO_RE.match(text)
    if not match:
        raise ValueError(f"not a cyclotomic element: {text!r}")
    field = make_field(int(match.group(1)))
    parts = [p for p in match.group(2).split(",") if p.strip()]
    if len(parts) != field.phi:
        raise ValueError(f"expected {field.phi} coefficients, got {len(parts)}")
    return CycloElem(field, tuple(Fraction(p.strip()) for p in parts))


def ambient_field(m: int) -> CycloField:
    """Field used for all computations at parameter m: conductor lcm(2m, 6)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n = 2 * m * 6 // gcd(2 * m, 6)
    return make_field(n)
