"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` carries the order up to which its coefficients are
known.  Everything above that order is *unknown*, not zero, and every
operation returns only the coefficients it can vouch for.

:class:`BivariateSeries` is the two-variable analogue, truncated by total
degree ``m + n <= order``.  The first variable is called ``g`` (vertices)
and the second ``zeta`` (blobs) throughout the package.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt
from typing import Callable, Iterable, Mapping, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    """Raised when a series operation has no valid result."""


def rational_sqrt(x: Scalar) -> Fraction:
    x = Fraction(x)
    if x < 0:
        raise SeriesError("constant term not a rational square")
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise SeriesError("constant term not a rational square")
    return Fraction(rp, rq)


def _conv(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        for j in range(min(len(b), n + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class PowerSeries:
    """``c_0 + c_1 g + ... + c_N g^N + O(g^{N+1})`` with ``Fraction`` coefficients."""

    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(c) < order + 1:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c: tuple[Fraction, ...] = tuple(c[: order + 1])
        self.order = order

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([], order)

    @classmethod
    def const(cls, c: Scalar, order: int) -> PowerSeries:
        return cls([c], order)

    @classmethod
    def var(cls, order: int) -> PowerSeries:
        """The series ``g`` itself."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> PowerSeries:
        return cls([0] * k + [c], order)

    # -- access ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self._c[k]

    def __len__(self) -> int:
        return self.order + 1

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; ``order + 1`` if none is known."""
        for k, c in enumerate(self._c):
            if c:
                return k
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self._c)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1], order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.order == other.order and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self._c))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*g")
            else:
                terms.append(f"{c}*g^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(g^{self.order + 1})"

    # -- ring operations ------------------------------------------------
    def _coerce(self, other) -> PowerSeries | None:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other], self.order)
        return None

    def __add__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return PowerSeries([self._c[k] + o._c[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-c for c in self._c], self.order)

    def __sub__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self._c], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(_conv(self._c, other._c, n), n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise SeriesError("division by zero series")
            inv = 1 / Fraction(other)
            return PowerSeries([c * inv for c in self._c], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other) -> PowerSeries:
        return div(PowerSeries([other], self.order), self)

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return div(PowerSeries([1], self.order), self ** (-k))
        result = PowerSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, inner: PowerSeries) -> PowerSeries:
        return compose(self, inner)

    # -- calculus -------------------------------------------------------
    def derivative(self) -> PowerSeries:
        if self.order == 0:
            raise SeriesError("derivative of an order-0 series has no known terms")
        return PowerSeries([k * self._c[k] for k in range(1, self.order + 1)], self.order - 1)

    def integral(self, constant: Scalar = 0) -> PowerSeries:
        return PowerSeries(
            [Fraction(constant)] + [self._c[k] / (k + 1) for k in range(self.order + 1)],
            self.order + 1,
        )

    def shift(self, k: int) -> PowerSeries:
        """Multiply by ``g^k`` (exactly; the order grows by ``k``)."""
        return PowerSeries([0] * k + list(self._c), self.order + k)

    def evaluate(self, x: Scalar) -> Fraction:
        """Partial sum ``sum_{k<=order} c_k x^k``."""
        total = Fraction(0)
        for c in reversed(self._c):
            total = total * x + c
        return total

    # method spellings for the free functions below
    def sqrt(self) -> PowerSeries:
        return sqrt(self)

    def log(self) -> PowerSeries:
        return log(self)

    def exp(self) -> PowerSeries:
        return exp(self)

    def reversion(self) -> PowerSeries:
        return reversion(self)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Exact quotient ``a / b``; the lowest term of ``b`` must divide ``a``."""
    v = b.valuation()
    if v > b.order:
        raise SeriesError("division by zero series")
    if any(a._c[k] for k in range(min(v, a.order + 1))):
        raise SeriesError("valuation mismatch")
    n = min(a.order, b.order) - v
    if n < 0:
        raise SeriesError("valuation mismatch")
    num = a._c[v: v + n + 1]
    den = b._c[v: v + n + 1]
    inv0 = 1 / den[0]
    q: list[Fraction] = []
    for k in range(n + 1):
        s = num[k]
        for j in range(1, k + 1):
            if den[j]:
                s -= den[j] * q[k - j]
        q.append(s * inv0)
    return PowerSeries(q, n)


def compose(f: PowerSeries, h: PowerSeries) -> PowerSeries:
    """``f(h(g))`` for ``h(0) = 0``, truncated to the order that is actually known.

    Unknown terms of ``f`` enter at degree ``(N_f + 1) v`` and unknown terms of
    ``h`` at ``(k - 1) v + N_h + 1`` for the first ``k >= 1`` with ``f_k != 0``,
    where ``v`` is a lower bound on the valuation of ``h``.
    """
    if h._c[0]:
        raise SeriesError("inner constant term nonzero")
    v = h.valuation()
    n = (f.order + 1) * v - 1
    for k in range(1, f.order + 1):
        if f._c[k]:
            n = min(n, (k - 1) * v + h.order)
            break
    if v > h.order:
        return PowerSeries([f._c[0]], n)
    hc = list(h._c) + [Fraction(0)] * max(0, n - h.order)
    acc = [Fraction(0)] * (n + 1)
    for k in range(f.order, -1, -1):
        acc = _conv(acc, hc, n)
        acc[0] += f._c[k]
    return PowerSeries(acc, n)


def reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse by Lagrange inversion.

    ``[x^n] f^{-1} = (1/n) [z^{n-1}] (z / f(z))^n``.
    """
    if f.order < 1 or f._c[0] or not f._c[1]:
        raise SeriesError("not invertible")
    N = f.order
    # z / f(z) known through order N - 1
    quotient = div(PowerSeries([1], N - 1), PowerSeries(f._c[1:], N - 1))
    out = [Fraction(0)] * (N + 1)
    power = PowerSeries([1], N - 1)
    for n in range(1, N + 1):
        power = power * quotient
        out[n] = power[n - 1] / n
    return PowerSeries(out, N)


def sqrt(f: PowerSeries) -> PowerSeries:
    """Square root with positive constant term."""
    s0 = rational_sqrt(f._c[0])
    if s0 == 0:
        raise SeriesError("constant term not a rational square")
    N = f.order
    s = [s0]
    inv = 1 / (2 * s0)
    for k in range(1, N + 1):
        acc = f._c[k]
        for i in range(1, k):
            acc -= s[i] * s[k - i]
        s.append(acc * inv)
    return PowerSeries(s, N)


def log(f: PowerSeries) -> PowerSeries:
    if f._c[0] != 1:
        raise SeriesError("constant term not 1")
    if f.order == 0:
        return PowerSeries.zero(0)
    return div(f.derivative(), f.truncate(f.order - 1)).integral()


def exp(h: PowerSeries) -> PowerSeries:
    if h._c[0]:
        raise SeriesError("inner constant term nonzero")
    N = h.order
    e = [Fraction(1)]
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if h._c[k]:
                acc += k * h._c[k] * e[n - k]
        e.append(acc / n)
    return PowerSeries(e, N)


Coefficient = Union[PowerSeries, Scalar]


def _poly_eval(poly: Sequence, y, one):
    acc = one * 0
    for c in reversed(poly):
        acc = acc * y + c
    return acc


def _poly_derivative(poly: Sequence) -> list:
    return [k * poly[k] for k in range(1, len(poly))]


def solve_algebraic(poly: Sequence[Coefficient], y0: Scalar, order: int | None = None) -> PowerSeries:
    """Series root of ``sum_k poly[k] * y^k = 0`` with ``y(0) = y0``.

    Newton iteration on series; each step doubles the number of correct
    terms.  The seed must be a simple root of the constant-term polynomial.
    """
    orders = [c.order for c in poly if isinstance(c, PowerSeries)]
    if order is None:
        if not orders:
            raise ValueError("order required when all coefficients are scalars")
        order = min(orders)
    elif orders and order > min(orders):
        raise SeriesError("requested order exceeds coefficient order")
    coeffs = [c.truncate(order) if isinstance(c, PowerSeries) else PowerSeries([c], order) for c in poly]
    y0 = Fraction(y0)
    const = [c[0] for c in coeffs]
    if _poly_eval(const, y0, Fraction(1)) != 0:
        raise SeriesError("seed not a root")
    dpoly = _poly_derivative(coeffs)
    if _poly_eval([c[0] for c in dpoly], y0, Fraction(1)) == 0:
        raise SeriesError("degenerate root (derivative vanishes)")
    y = PowerSeries([y0], order)
    one = PowerSeries([1], order)
    correct = 1  # number of coefficients known to be right
    while correct <= order:
        y = y - div(_poly_eval(coeffs, y, one), _poly_eval(dpoly, y, one))
        correct *= 2
    return y


# ---------------------------------------------------------------------------
# Bivariate series
# ---------------------------------------------------------------------------

class BivariateSeries:
    """``sum_{m+n<=N} c_{m,n} g^m zeta^n`` truncated by total degree."""

    __slots__ = ("_rows", "order")

    def __init__(self, coeffs: Mapping[tuple[int, int], Scalar] | None = None, order: int = 0):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        # _rows[m][n] for n <= order - m
        self._rows = [[Fraction(0)] * (order - m + 1) for m in range(order + 1)]
        for (m, n), c in (coeffs or {}).items():
            if m < 0 or n < 0:
                raise ValueError("negative exponent")
            if m + n <= order:
                self._rows[m][n] = Fraction(c)

    @classmethod
    def _from_rows(cls, rows: list[list[Fraction]], order: int) -> BivariateSeries:
        b = cls.__new__(cls)
        b.order = order
        b._rows = rows
        return b

    @classmethod
    def const(cls, c: Scalar, order: int) -> BivariateSeries:
        return cls({(0, 0): c}, order)

    @classmethod
    def g(cls, order: int) -> BivariateSeries:
        return cls({(1, 0): 1}, order)

    @classmethod
    def zeta(cls, order: int) -> BivariateSeries:
        return cls({(0, 1): 1}, order)

    @classmethod
    def from_sum_kernel(cls, kernel: PowerSeries, order: int | None = None) -> BivariateSeries:
        """Expand ``K(g + zeta)`` given ``K(s)``: ``c_{m,n} = C(m+n, m) [s^{m+n}] K``."""
        N = kernel.order if order is None else order
        if N > kernel.order:
            raise SeriesError("kernel order too small")
        rows = [[comb(m + n, m) * kernel[m + n] for n in range(N - m + 1)] for m in range(N + 1)]
        return cls._from_rows(rows, N)

    @classmethod
    def from_function(cls, fn: Callable[[int, int], Scalar], order: int) -> BivariateSeries:
        rows = [[Fraction(fn(m, n)) for n in range(order - m + 1)] for m in range(order + 1)]
        return cls._from_rows(rows, order)

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        """Nonzero coefficients keyed by ``(m, n)``."""
        return {(m, n): c for m, row in enumerate(self._rows) for n, c in enumerate(row) if c}

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        m, n = key
        if m < 0 or n < 0:
            return Fraction(0)
        if m + n > self.order:
            raise IndexError(f"({m},{n}) is beyond total degree {self.order}")
        return self._rows[m][n]

    def keys(self) -> list[tuple[int, int]]:
        return [(m, d - m) for d in range(self.order + 1) for m in range(d, -1, -1)]

    def truncate(self, order: int) -> BivariateSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return BivariateSeries._from_rows([row[: order - m + 1] for m, row in enumerate(self._rows[: order + 1])], order)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariateSeries):
            return self.order == other.order and self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, tuple(map(tuple, self._rows))))

    def __repr__(self) -> str:
        terms = [f"{c}*g^{m}*z^{n}" for (m, n), c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), -kv[0][0]))]
        return f"{' + '.join(terms) if terms else '0'} + O(deg {self.order + 1})"

    def _coerce(self, other) -> BivariateSeries | None:
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariateSeries.const(other, self.order)
        return None

    def __add__(self, other) -> BivariateSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        rows = [[self._rows[m][n] + o._rows[m][n] for n in range(N - m + 1)] for m in range(N + 1)]
        return BivariateSeries._from_rows(rows, N)

    __radd__ = __add__

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries._from_rows([[-c for c in row] for row in self._rows], self.order)

    def __sub__(self, other) -> BivariateSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> BivariateSeries:
        return (-self) + other

    def __mul__(self, other) -> BivariateSeries:
        if isinstance(other, (int, Fraction)):
            return BivariateSeries._from_rows([[c * other for c in row] for row in self._rows], self.order)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        N = min(self.order, other.order)
        rows = [[Fraction(0)] * (N - m + 1) for m in range(N + 1)]
        a, b = self._rows, other._rows
        for m1 in range(N + 1):
            for n1 in range(N - m1 + 1):
                c1 = a[m1][n1]
                if not c1:
                    continue
                rem = N - m1 - n1
                for m2 in range(rem + 1):
                    brow = b[m2]
                    out = rows[m1 + m2]
                    for n2 in range(rem - m2 + 1):
                        c2 = brow[n2]
                        if c2:
                            out[n1 + n2] += c1 * c2
        return BivariateSeries._from_rows(rows, N)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BivariateSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> BivariateSeries:
        return self.reciprocal() * other

    def __pow__(self, k: int) -> BivariateSeries:
        if k < 0:
            return (self ** (-k)).reciprocal()
        result = BivariateSeries.const(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def _solve_triangular(self, s0: Fraction, rule: Callable[[int, int, list[list[Fraction]]], Fraction]) -> BivariateSeries:
        N = self.order
        rows = [[Fraction(0)] * (N - m + 1) for m in range(N + 1)]
        rows[0][0] = s0
        for d in range(1, N + 1):
            for m in range(d + 1):
                rows[m][d - m] = rule(m, d - m, rows)
        return BivariateSeries._from_rows(rows, N)

    def _partial_product(self, x: list[list[Fraction]], y: list[list[Fraction]], m: int, n: int, skip_ends: bool) -> Fraction:
        """``sum x[i][j] * y[m-i][n-j]`` excluding the two terms that involve ``(0,0)`` when asked."""
        total = Fraction(0)
        for i in range(m + 1):
            xi, yi = x[i], y[m - i]
            for j in range(n + 1):
                if skip_ends and ((i == 0 and j == 0) or (i == m and j == n)):
                    continue
                a = xi[j]
                if a:
                    b = yi[n - j]
                    if b:
                        total += a * b
        return total

    def reciprocal(self) -> BivariateSeries:
        c0 = self._rows[0][0]
        if not c0:
            raise SeriesError("division by zero series")
        inv0 = 1 / c0
        f = self._rows

        def rule(m, n, r):
            # sum over (i,j) != (0,0) of f[i][j] * r[m-i][n-j]
            total = Fraction(0)
            for i in range(m + 1):
                for j in range(n + 1):
                    if i == 0 and j == 0:
                        continue
                    a = f[i][j]
                    if a:
                        total += a * r[m - i][n - j]
            return -total * inv0

        return self._solve_triangular(inv0, rule)

    def sqrt(self) -> BivariateSeries:
        s0 = rational_sqrt(self._rows[0][0])
        if s0 == 0:
            raise SeriesError("constant term not a rational square")
        inv = 1 / (2 * s0)
        f = self._rows

        def rule(m, n, r):
            return (f[m][n] - self._partial_product(r, r, m, n, skip_ends=True)) * inv

        return self._solve_triangular(s0, rule)

    def at_zeta_zero(self) -> PowerSeries:
        """The ``g``-series obtained by setting ``zeta = 0``."""
        return PowerSeries([row[0] for row in self._rows], self.order)

    def row_in_g(self, n: int) -> PowerSeries:
        """Coefficient of ``zeta^n`` as a series in ``g`` (known to order ``N - n``)."""
        return PowerSeries([self._rows[m][n] for m in range(self.order - n + 1)], self.order - n)

    def substitute(self, zeta_of_g: PowerSeries) -> PowerSeries:
        return substitute(self, zeta_of_g)


def substitute(B: BivariateSeries, zeta_of_g: PowerSeries) -> PowerSeries:
    """``B(g, zeta(g))`` for ``zeta(0) = 0``.

    Unknown ``g^m`` terms with ``m > N`` cap the result at order ``N``; the
    truncation of ``zeta`` contributes from degree ``m + (n-1) v + N_zeta + 1``.
    """
    if zeta_of_g._c[0]:
        raise SeriesError("inner constant term nonzero")
    N = B.order
    v = zeta_of_g.valuation()
    n_out = N
    for m in range(N + 1):
        for n in range(1, N - m + 1):
            if B._rows[m][n]:
                n_out = min(n_out, m + (n - 1) * v + zeta_of_g.order)
    z = list(zeta_of_g._c) + [Fraction(0)] * max(0, n_out - zeta_of_g.order)
    acc = [Fraction(0)] * (n_out + 1)
    for n in range(N, -1, -1):
        acc = _conv(acc, z, n_out)
        for m in range(min(N - n, n_out) + 1):
            acc[m] += B._rows[m][n]
    return PowerSeries(acc, n_out)


def solve_algebraic_bivariate(poly: Sequence[BivariateSeries | Scalar], y0: Scalar, order: int) -> BivariateSeries:
    """Bivariate analogue of :func:`solve_algebraic` (Newton iteration)."""
    coeffs = [c.truncate(order) if isinstance(c, BivariateSeries) else BivariateSeries.const(c, order) for c in poly]
    y0 = Fraction(y0)
    if _poly_eval([c[0, 0] for c in coeffs], y0, Fraction(1)) != 0:
        raise SeriesError("seed not a root")
    dpoly = _poly_derivative(coeffs)
    if _poly_eval([c[0, 0] for c in dpoly], y0, Fraction(1)) == 0:
        raise SeriesError("degenerate root (derivative vanishes)")
    one = BivariateSeries.const(1, order)
    y = BivariateSeries.const(y0, order)
    correct = 1
    while correct <= order:
        y = y - _poly_eval(coeffs, y, one) / _poly_eval(dpoly, y, one)
        correct *= 2
    return y
