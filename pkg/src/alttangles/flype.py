"""Flype-equivalence classes of tangles and links.

The quotient acts only on the fully reducible templates; the 2PI
skeletons ``zeta[Gamma]`` are flype-rigid and are reused unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .asymptotics import AsymptoticConstants, quadratic_roots
from .series import BivariateSeries, PowerSeries, compose, solve_algebraic_bivariate, substitute
from .skeleton import zeta_at, zeta_of_gamma


class FixedPointError(ArithmeticError):
    pass


@dataclass(frozen=True)
class FlypeSeries:
    gamma_tilde_template: BivariateSeries
    gamma_tilde: PowerSeries
    zeta_tilde: PowerSeries
    f1_tilde: PowerSeries
    h_tilde: BivariateSeries | None = None


def _geometric_g(order: int) -> BivariateSeries:
    """``1 / (1 - g)`` as a bivariate series."""
    return BivariateSeries({(m, 0): 1 for m in range(order + 1)}, order)


@lru_cache(maxsize=None)
def gamma_tilde_template(order: int) -> BivariateSeries:
    """``((1 + g - z) - sqrt((1 - g + z)^2 - 8z - 8g^2/(1-g))) / 2``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    g, z = BivariateSeries.g(order), BivariateSeries.zeta(order)
    radicand = (1 - g + z) * (1 - g + z) - 8 * z - 8 * g * g * _geometric_g(order)
    return ((1 + g - z) - radicand.sqrt()) / 2


def gamma_tilde_template_newton(order: int) -> BivariateSeries:
    """Root of the defining quadratic through ``(0, 0)`` by bivariate Newton."""
    g, z = BivariateSeries.g(order), BivariateSeries.zeta(order)
    const = z + g * (1 + g) * _geometric_g(order)
    return solve_algebraic_bivariate([const, -(1 + g - z), 1], 0, order)


def quadratic_residual(T: BivariateSeries) -> BivariateSeries:
    """``T^2 - (1 + g - z) T + z + g (1 + g)/(1 - g)``."""
    N = T.order
    g, z = BivariateSeries.g(N), BivariateSeries.zeta(N)
    return T * T - (1 + g - z) * T + z + g * (1 + g) * _geometric_g(N)


def h_tilde_check(order: int, drop_g_gamma: bool = False) -> BivariateSeries:
    """Residual of ``V~ = D + g Gamma~ + (H~ - g)^2 / (1 - (H~ - g))`` with ``H~ = V~ = (Gamma~ + D)/2``."""
    T = gamma_tilde_template(order)
    g, z = BivariateSeries.g(order), BivariateSeries.zeta(order)
    D = g + z
    H = (T + D) / 2
    inner = H - g
    rhs = D + inner * inner / (1 - inner)
    if not drop_g_gamma:
        rhs = rhs + g * T
    return H - rhs


@lru_cache(maxsize=None)
def gamma_tilde_series(order: int) -> PowerSeries:
    """Solve ``Gamma~(g) = Gamma~{g, zeta[Gamma~(g)]}`` with ``Gamma~(0) = 0``.

    ``zeta[Gamma]`` starts at ``Gamma^5``, so every pass fixes at least four
    more coefficients.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    T = gamma_tilde_template(order)
    Z = zeta_of_gamma(order)
    current = PowerSeries.zero(order)
    max_iter = max(order, -(-order // 4) + 2)
    for _ in range(max_iter):
        nxt = substitute(T, compose(Z, current).truncate(order)).truncate(order)
        if nxt == current:
            return current
        current = nxt
    raise FixedPointError(f"fixed point not converged within {max_iter} iterations")


def fixed_point_residual(gamma_tilde: PowerSeries) -> PowerSeries:
    N = gamma_tilde.order
    zeta_tilde = compose(zeta_of_gamma(N), gamma_tilde).truncate(N)
    return gamma_tilde - substitute(gamma_tilde_template(N), zeta_tilde)


def f1_tilde_from(gamma_tilde: PowerSeries) -> PowerSeries:
    """``f~_n = [g^{n-1}] Gamma~ / (2n)``, known one order beyond ``Gamma~``."""
    N = gamma_tilde.order + 1
    return PowerSeries([0] + [gamma_tilde[n - 1] / (2 * n) for n in range(1, N + 1)], N)


def f1_tilde_series(order: int) -> PowerSeries:
    if order < 2:
        raise ValueError("order must be >= 2")
    return f1_tilde_from(gamma_tilde_series(order - 1))


def flype_series(order: int) -> FlypeSeries:
    T = gamma_tilde_template(order)
    gt = gamma_tilde_series(order)
    zt = compose(zeta_of_gamma(order), gt).truncate(order)
    g, z = BivariateSeries.g(order), BivariateSeries.zeta(order)
    return FlypeSeries(
        gamma_tilde_template=T,
        gamma_tilde=gt,
        zeta_tilde=zt,
        f1_tilde=f1_tilde_from(gt).truncate(order),
        h_tilde=(T + g + z) / 2,
    )


GAMMA_STAR = Fraction(1, 4)


def tangle_asymptotics() -> AsymptoticConstants:
    """Singular point of ``Gamma~(g)``: put ``(Gamma~, zeta) = (1/4, zeta[1/4])`` in the quadratic.

    Clearing ``1 - g`` gives ``(T + 1) g^2 + (1 - T - c) g + c = 0`` with
    ``c = T^2 - (1 - zeta) T + zeta``.
    """
    T = GAMMA_STAR
    zeta = zeta_at(T)
    c = T * T - (1 - zeta) * T + zeta
    roots = [r for r in quadratic_roots(T + 1, 1 - T - c, c) if r > 0]
    if len(roots) != 1:
        raise ArithmeticError("no root in physical interval")
    radius = roots[0]
    return AsymptoticConstants(radius=radius, growth=radius.inverse(), exponent=Fraction(-7, 2))

