"""Planar one-matrix model generating functions and self-energy removal.

Bare quantities are taken at ``alpha = 1``; the renormalized ones use the
choice ``alpha(g)`` for which the full two-point function is exactly 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .asymptotics import AsymptoticConstants, QuadraticSurd
from .series import PowerSeries, compose, solve_algebraic


@dataclass(frozen=True)
class BareModel:
    order: int
    a2_bare: PowerSeries
    F: PowerSeries
    G2: PowerSeries
    G4: PowerSeries
    G4c: PowerSeries


@dataclass(frozen=True)
class RenormalizedModel:
    order: int
    a2: PowerSeries
    alpha: PowerSeries
    sigma: PowerSeries
    sigma_prime: PowerSeries
    gamma: PowerSeries
    f1: PowerSeries


@lru_cache(maxsize=None)
def a2_bare_series(order: int) -> PowerSeries:
    """Root of ``3 g y^2 - y + 1 = 0`` with ``y(0) = 1``."""
    g = PowerSeries.var(order)
    return solve_algebraic([1, -1, 3 * g], 1, order)


def free_energy(a2: PowerSeries) -> PowerSeries:
    return a2.log() / 2 - (a2 - 1) * (9 - a2) / 24


@lru_cache(maxsize=None)
def bare_model(order: int) -> BareModel:
    if order < 0:
        raise ValueError("order must be >= 0")
    a2 = a2_bare_series(order)
    G2 = a2 * (4 - a2) / 3
    G4 = a2 * a2 * (3 - a2)
    G4c = G4 - 2 * G2 * G2
    return BareModel(order, a2, free_energy(a2), G2, G4, G4c)


def connected_four_point_closed_form(a2: PowerSeries) -> PowerSeries:
    """``-(1/9) a^4 (a^2 - 1)(2 a^2 - 5)`` at ``alpha = 1``."""
    return -(a2 * a2 * (a2 - 1) * (2 * a2 - 5)) / 9


def closed_form_f_coeff(p: int) -> Fraction:
    """``[g^p] F(1, g) = 3^p (2p-1)! / (p! (p+2)!)``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return Fraction(3 ** p * factorial(2 * p - 1), factorial(p) * factorial(p + 2))


def renormalized_a2(order: int) -> PowerSeries:
    """``a^2(g)`` solving ``27 g = (a^2 - 1)(4 - a^2)^2`` with ``a^2(0) = 1``.

    Solved for ``u = a^2 - 1`` so that the seed is ``u = 0``:
    ``u^3 - 6u^2 + 9u - 27g = 0``.
    """
    g = PowerSeries.var(order)
    u = solve_algebraic([-27 * g, 9, -6, 1], 0, order)
    return 1 + u


@lru_cache(maxsize=None)
def renormalized_model(order: int) -> RenormalizedModel:
    if order < 1:
        raise ValueError("order must be >= 1")
    # one extra term because Gamma = Sigma'/g loses one order
    M = order + 1
    g = PowerSeries.var(M)
    a2 = renormalized_a2(M)
    alpha = a2 * (4 - a2) / 3
    sigma = alpha - 1
    sigma_prime = alpha - 1 - 2 * g
    gamma = sigma_prime / PowerSeries.var(M + 1)
    f1 = PowerSeries([0] + [sigma_prime[n] / (2 * n) for n in range(1, order + 1)], order)
    return RenormalizedModel(
        order,
        a2.truncate(order),
        alpha.truncate(order),
        sigma.truncate(order),
        sigma_prime.truncate(order),
        gamma.truncate(order),
        f1,
    )


def gamma_closed_form(a2: PowerSeries) -> PowerSeries:
    """``-(a^2 - 1)(2a^2 - 5) / (4 - a^2)^2`` for the renormalized ``a^2(g)``."""
    return -((a2 - 1) * (2 * a2 - 5)) / ((4 - a2) * (4 - a2))


def rescaled_a2(a2_bare: PowerSeries, alpha: PowerSeries) -> PowerSeries:
    """``a^2(alpha, g) = a^2(1, g / alpha^2)`` by homogeneity."""
    g = PowerSeries.var(alpha.order)
    return compose(a2_bare, g / (alpha * alpha))


def two_point_at(a2_bare: PowerSeries, alpha: PowerSeries) -> PowerSeries:
    """``G_2(alpha(g), g) = a^2 (4 - a^2) / (3 alpha)`` with ``a^2`` from rescaling."""
    a2 = rescaled_a2(a2_bare, alpha)
    return a2 * (4 - a2) / (3 * alpha)


def four_point_at(a2_bare: PowerSeries, alpha: PowerSeries) -> PowerSeries:
    """``G_4(alpha(g), g) = a^4 (3 - a^2) / alpha^2`` with ``a^2`` from rescaling."""
    a2 = rescaled_a2(a2_bare, alpha)
    return a2 * a2 * (3 - a2) / (alpha * alpha)


def alpha_by_rescaling(order: int) -> PowerSeries:
    """Solve ``G_2(alpha, g) = 1`` for ``alpha(g)`` using only the bare ``a^2(1, g)``.

    Fixed point ``alpha = a^2(1, g/alpha^2) (4 - a^2(1, g/alpha^2)) / 3``; each
    pass fixes at least one more coefficient.
    """
    a2_bare = a2_bare_series(order)
    alpha = PowerSeries.const(1, order)
    for _ in range(order + 2):
        nxt = two_point_at(a2_bare, alpha) * alpha
        if nxt == alpha:
            break
        alpha = nxt
    return alpha


def link_asymptotics() -> AsymptoticConstants:
    # g/alpha(g)^2 = 1/12 first reached at g = 4/27
    radius = QuadraticSurd.rational(Fraction(4, 27))
    return AsymptoticConstants(radius=radius, growth=radius.inverse(), exponent=Fraction(-7, 2))
