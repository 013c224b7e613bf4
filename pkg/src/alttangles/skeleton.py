"""Two-particle-irreducible cores and fully reducible templates of tangles.

``Gamma(g)`` splits into channel pieces ``H = V`` and the doubly
irreducible part ``D(g) = g + zeta(g)``.  Conversely every tangle is a
fully reducible template ``Gamma{g, zeta}`` dressed with ``zeta(g)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrix_model import renormalized_model
from .series import (
    BivariateSeries,
    PowerSeries,
    SeriesError,
    compose,
    rational_sqrt,
    solve_algebraic_bivariate,
    sqrt,
    substitute,
)


class SkeletonError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SkeletonSeries:
    D: PowerSeries
    zeta: PowerSeries
    H: PowerSeries
    V: PowerSeries
    gamma_template: BivariateSeries
    g_of_gamma: PowerSeries
    zeta_of_gamma: PowerSeries


def d_series(gamma: PowerSeries) -> tuple[PowerSeries, PowerSeries]:
    """``D = Gamma (1 - Gamma) / (1 + Gamma)`` and ``zeta = D - g``."""
    if gamma[0]:
        raise SeriesError("inner constant term nonzero")
    D = gamma * (1 - gamma) / (1 + gamma)
    return D, D - PowerSeries.var(D.order)


def h_v_series(gamma: PowerSeries, D: PowerSeries) -> tuple[PowerSeries, PowerSeries]:
    H = (gamma + D) / 2
    residual = H - D - H * H / (1 - H)
    if not residual.is_zero():
        raise SkeletonError("channel decomposition inconsistent")
    return H, H


@lru_cache(maxsize=None)
def template_kernel(order: int) -> PowerSeries:
    """``K(s) = (1 - s - sqrt(1 - 6s + s^2)) / 2`` so that ``Gamma{g, zeta} = K(g + zeta)``."""
    s = PowerSeries.var(order)
    return (1 - s - sqrt(1 - 6 * s + s * s)) / 2


@lru_cache(maxsize=None)
def gamma_template(order: int) -> BivariateSeries:
    """``gamma_{m,n} = C(m+n, m) c_{m+n}`` with ``c_k = [s^k] K``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return BivariateSeries.from_sum_kernel(template_kernel(order))


def gamma_template_newton(order: int) -> BivariateSeries:
    """Same series from ``Y^2 - (1 - g - zeta) Y + (g + zeta) = 0`` without the collapse."""
    g, z = BivariateSeries.g(order), BivariateSeries.zeta(order)
    return solve_algebraic_bivariate([g + z, -(1 - g - z), 1], 0, order)


@lru_cache(maxsize=None)
def g_of_gamma(order: int) -> PowerSeries:
    """Inverse of ``Gamma(g)``: ``(1 + 10G - 2G^2 - (1 - 4G)^{3/2}) / (2 (G + 2)^3)``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    G = PowerSeries.var(order)
    w = 1 - 4 * G
    num = 1 + 10 * G - 2 * G * G - w * sqrt(w)
    return num / (2 * (G + 2) ** 3)


@lru_cache(maxsize=None)
def zeta_of_gamma(order: int) -> PowerSeries:
    """Generating function of fully 2PI skeletons: ``-2/(1+G) + 2 - G - g[G]``."""
    G = PowerSeries.var(order)
    return -2 / (1 + G) + 2 - G - g_of_gamma(order)


def g_at(gamma: Fraction) -> Fraction:
    """Exact value of ``g[Gamma]`` at a rational point where ``1 - 4 Gamma`` is a rational square."""
    G = Fraction(gamma)
    w = 1 - 4 * G
    return (1 + 10 * G - 2 * G * G - w * rational_sqrt(w)) / (2 * (G + 2) ** 3)


def zeta_at(gamma: Fraction) -> Fraction:
    G = Fraction(gamma)
    return -2 / (1 + G) + 2 - G - g_at(G)


def skeleton_series(order: int) -> SkeletonSeries:
    gamma = renormalized_model(order).gamma
    D, zeta = d_series(gamma)
    H, V = h_v_series(gamma, D)
    return SkeletonSeries(
        D=D,
        zeta=zeta,
        H=H,
        V=V,
        gamma_template=gamma_template(order),
        g_of_gamma=g_of_gamma(order),
        zeta_of_gamma=zeta_of_gamma(order),
    )


def dressing_check(order: int, zeta_perturbation: PowerSeries | None = None) -> PowerSeries:
    """``Gamma(g) - Gamma{g, zeta(g)}``; zero through ``order`` when consistent."""
    gamma = renormalized_model(order).gamma
    _, zeta = d_series(gamma)
    if zeta_perturbation is not None:
        zeta = zeta + zeta_perturbation
    return gamma - substitute(gamma_template(order), zeta)


def eta_system_check(order: int, a2: PowerSeries | None = None) -> tuple[PowerSeries, PowerSeries]:
    """Residuals of ``27 g = -eta (3 + eta)^2`` and ``Gamma = -eta (3 + 2 eta) / (3 + eta)^2``.

    ``eta = 1 - a^2(g)``; pass a different ``a2`` to probe the check.
    """
    model = renormalized_model(max(order, 1))
    if a2 is None:
        a2 = model.a2
    a2 = a2.truncate(order)
    g = PowerSeries.var(order)
    eta = 1 - a2
    r1 = 27 * g + eta * (3 + eta) ** 2
    r2 = model.gamma.truncate(order) + eta * (3 + 2 * eta) / ((3 + eta) ** 2)
    return r1, r2


def reversion_check(order: int) -> PowerSeries:
    """``reversion(Gamma(g)) - g[Gamma]`` (two independent routes)."""
    return renormalized_model(order).gamma.reversion() - g_of_gamma(order)


def inverse_check(order: int) -> PowerSeries:
    """``Gamma(g[Gamma]) - Gamma``."""
    gamma = renormalized_model(order).gamma
    return compose(gamma, g_of_gamma(order)) - PowerSeries.var(order)
