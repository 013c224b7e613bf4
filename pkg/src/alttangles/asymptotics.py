"""Exact quadratic surds and the growth constants built from them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

Number = Union[int, Fraction, "QuadraticSurd"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, d)`` with ``n = k**2 * d`` and ``d`` squarefree (``n > 0``)."""
    if n <= 0:
        raise ValueError("n must be positive")
    k, d = 1, n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, d


class QuadraticSurd:
    """The number ``(p + q*sqrt(d)) / r`` with integers and squarefree ``d``.

    Values are kept normalized (``r > 0``, ``gcd(p, q, r) = 1``; ``q = 0``
    forces ``d = 1``) so equality is structural.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 1, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        if d <= 0:
            raise ValueError("radicand must be positive")
        k, d = squarefree_split(d)
        q *= k
        if d == 1:
            p, q = p + q, 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        self.p, self.q, self.d, self.r = p // g, q // g, d, r // g

    @classmethod
    def rational(cls, x: int | Fraction) -> QuadraticSurd:
        x = Fraction(x)
        return cls(x.numerator, 0, 1, x.denominator)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q:
            raise ValueError("irrational surd")
        return Fraction(self.p, self.r)

    def _lift(self, other) -> QuadraticSurd | None:
        if isinstance(other, QuadraticSurd):
            if other.q and self.q and other.d != self.d:
                raise ValueError("surds with different radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd.rational(other)
        return None

    def _radicand(self, other: QuadraticSurd) -> int:
        return self.d if self.q else other.d

    def __add__(self, other) -> QuadraticSurd:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        return QuadraticSurd(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, d, self.r * o.r)

    __radd__ = __add__

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other) -> QuadraticSurd:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadraticSurd:
        return (-self) + other

    def __mul__(self, other) -> QuadraticSurd:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        return QuadraticSurd(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d, self.r * o.r)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.p, -self.q, self.d, self.r)

    def inverse(self) -> QuadraticSurd:
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("surd is zero")
        return QuadraticSurd(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other) -> QuadraticSurd:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadraticSurd:
        return self.inverse() * other

    def sign(self) -> int:
        a, b = self.p, self.q
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare |a| with |b| sqrt(d)
        cmp = a * a - b * b * self.d
        return sa if cmp > 0 else sb

    def __eq__(self, other) -> bool:
        o = self._lift(other) if isinstance(other, (int, Fraction, QuadraticSurd)) else None
        if o is None:
            return NotImplemented
        return (self.p, self.q, self.d, self.r) == (o.p, o.q, o.d, o.r)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.d, self.r))

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return (self.p + self.q * self.d ** 0.5) / self.r

    def rounded_scaled(self, digits: int) -> int:
        """``round(value * 10**digits)`` with ties away from zero, computed exactly."""
        scale = 10 ** digits
        neg = self.sign() < 0
        x = -self if neg else self
        # floor((2 p s + r + 2 q s sqrt(d)) / (2 r))
        a = 2 * x.p * scale + x.r
        b = 2 * x.q * scale
        m = b * b * x.d
        root = isqrt(m)
        if b >= 0:
            y = root
        else:
            y = -root - (0 if root * root == m else 1)
        n = (a + y) // (2 * x.r)
        return -n if neg else n

    def decimal(self, digits: int) -> str:
        """Fixed-point rendering with ``digits`` places, correctly rounded."""
        if digits < 0:
            raise ValueError("digits must be >= 0")
        n = self.rounded_scaled(digits)
        sign = "-" if n < 0 else ""
        n = abs(n)
        if digits == 0:
            return f"{sign}{n}"
        s = str(n).rjust(digits + 1, "0")
        return f"{sign}{s[:-digits]}.{s[-digits:]}"

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        if self.q == 1:
            rad = f"sqrt({self.d})"
        elif self.q == -1:
            rad = f"-sqrt({self.d})"
        else:
            rad = f"{self.q}*sqrt({self.d})"
        if self.p == 0:
            num = rad
        else:
            num = f"{self.p}{rad if rad.startswith('-') else '+' + rad}"
        if self.r == 1:
            return num if self.p == 0 else f"({num})"
        return f"({num})/{self.r}"

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.p}, {self.q}, {self.d}, {self.r})"


def exact_decimal(x: Number, digits: int | None = None) -> str:
    """Decimal rendering; with ``digits=None`` terminating rationals print exactly."""
    s = x if isinstance(x, QuadraticSurd) else QuadraticSurd.rational(x)
    if digits is None:
        if s.is_rational:
            r = s.r
            twos = fives = 0
            while r % 2 == 0:
                r //= 2
                twos += 1
            while r % 5 == 0:
                r //= 5
                fives += 1
            if r == 1:
                return s.decimal(max(twos, fives))
        digits = 6
    return s.decimal(digits)


def quadratic_roots(a: Fraction, b: Fraction, c: Fraction) -> list[QuadraticSurd]:
    """Real roots of ``a x^2 + b x + c`` in ascending order."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    # sqrt(disc) = sqrt(P/Q) = sqrt(P*Q)/Q
    P, Q = disc.numerator, disc.denominator
    base = QuadraticSurd.rational(-b / (2 * a))
    if disc == 0:
        return [base]
    half_width = QuadraticSurd(0, 1, P * Q, Q) / (2 * a)
    roots = [base - half_width, base + half_width]
    return sorted(roots)


@dataclass(frozen=True)
class AsymptoticConstants:
    """Radius of convergence and growth constant ``b`` with ``f_n ~ C b^n n^exponent``."""

    radius: QuadraticSurd
    growth: QuadraticSurd
    exponent: Fraction = field(default=Fraction(-7, 2))

    def radius_decimal(self, digits: int | None = None) -> str:
        return exact_decimal(self.radius, digits)

    def growth_decimal(self, digits: int | None = None) -> str:
        return exact_decimal(self.growth, digits)
