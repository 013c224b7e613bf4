"""Full consistency suite: published coefficients plus every identity the pipeline must satisfy."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import golden
from .asymptotics import QuadraticSurd
from .flype import (
    fixed_point_residual,
    gamma_tilde_series,
    gamma_tilde_template,
    gamma_tilde_template_newton,
    h_tilde_check,
    quadratic_residual,
    tangle_asymptotics,
)
from .matrix_model import (
    bare_model,
    closed_form_f_coeff,
    connected_four_point_closed_form,
    four_point_at,
    gamma_closed_form,
    link_asymptotics,
    renormalized_model,
    two_point_at,
)
from .series import PowerSeries
from .skeleton import (
    d_series,
    dressing_check,
    eta_system_check,
    g_of_gamma,
    gamma_template,
    gamma_template_newton,
    h_v_series,
    reversion_check,
    template_kernel,
    zeta_at,
    zeta_of_gamma,
)

INJECTIONS = ("zeta", "drop-g-gamma-tilde", "golden")

# the bivariate Newton cross-checks are O(N^4); they run at a capped order
NEWTON_CHECK_ORDER = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _matches(series: PowerSeries, expected: list, upto: int | None = None) -> tuple[bool, str]:
    n = min(len(expected) - 1, series.order if upto is None else upto)
    got = [series[k] for k in range(n + 1)]
    want = [Fraction(x) for x in expected[: n + 1]]
    if got == want:
        return True, f"through degree {n}"
    bad = next(k for k in range(n + 1) if got[k] != want[k])
    return False, f"degree {bad}: got {got[bad]}, expected {want[bad]}"


def _zero(series) -> tuple[bool, str]:
    if series.is_zero():
        return True, f"zero through order {series.order}"
    return False, f"nonzero residual {series!r}"


def _integral_nonneg(series: PowerSeries, positive_from: int | None = None) -> bool:
    for k, c in enumerate(series.coeffs):
        if c.denominator != 1 or c < 0:
            return False
        if positive_from is not None and k >= positive_from and c <= 0:
            return False
    return True


def run_checks(order: int, inject: str | None = None) -> list[CheckResult]:
    if order < 6:
        raise ValueError("order must be >= 6")
    if inject is not None and inject not in INJECTIONS:
        raise ValueError(f"unknown injection {inject!r}")
    N = order
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = []

    def check(name):
        def deco(fn):
            checks.append((name, fn))
            return fn
        return deco

    bare = bare_model(N)
    ren = renormalized_model(N)
    D, zeta = d_series(ren.gamma)
    gt = gamma_tilde_series(N)
    expected_gamma_tilde = list(golden.GAMMA_TILDE)
    if inject == "golden":
        expected_gamma_tilde[4] += 1

    # -- published coefficients --------------------------------------------
    golden_pairs = [
        ("a2(1,g)", bare.a2_bare, golden.A2_BARE),
        ("G2(1,g)", bare.G2, golden.G2_BARE),
        ("F(1,g)", bare.F, golden.F_BARE),
        ("alpha(g)", ren.alpha, golden.ALPHA),
        ("Gamma(g)", ren.gamma, golden.GAMMA),
        ("F1(g)", ren.f1, golden.F1),
        ("D(g)", D, golden.D),
        ("template kernel", template_kernel(N), golden.TEMPLATE_KERNEL),
        ("g[Gamma]", g_of_gamma(N), golden.G_OF_GAMMA),
        ("zeta[Gamma]", zeta_of_gamma(N), golden.ZETA_OF_GAMMA),
        ("Gamma~(g)", gt, expected_gamma_tilde),
    ]
    for label, series, expected in golden_pairs:
        checks.append((f"golden {label}", lambda s=series, e=expected: _matches(s, e)))

    @check("closed form [g^n]F(1,g) = 3^n (2n-1)!/(n!(n+2)!)")
    def _():
        for n in range(1, N + 1):
            if bare.F[n] != closed_form_f_coeff(n):
                return False, f"degree {n}"
        return True, f"n = 1..{N}"

    # -- matrix model identities ---------------------------------------------
    @check("G2(alpha(g), g) = 1 (homogeneity route)")
    def _():
        return _zero(two_point_at(bare.a2_bare, ren.alpha) - 1)

    @check("G2 = (1 + g G4) at alpha = 1")
    def _():
        g = PowerSeries.var(N)
        return _zero(bare.G2 - (1 + g * bare.G4))

    @check("G2 = (1/alpha)(1 + g G4) at alpha(g)")
    def _():
        g = PowerSeries.var(N)
        G4 = four_point_at(bare.a2_bare, ren.alpha)
        return _zero(1 - (1 + g * G4) / ren.alpha)

    @check("G4 = 4 dF/dg")
    def _():
        return _zero(bare.G4.truncate(N - 1) - 4 * bare.F.derivative())

    @check("G4c = G4 - 2 G2^2 = -(1/9) a^4 (a^2-1)(2a^2-5)")
    def _():
        return _zero(bare.G4c - connected_four_point_closed_form(bare.a2_bare))

    @check("Gamma = Sigma'/g")
    def _():
        return _zero(ren.gamma.shift(1).truncate(N) - ren.sigma_prime)

    @check("Gamma = 2 dF1/dg")
    def _():
        return _zero(ren.gamma.truncate(N - 1) - 2 * ren.f1.derivative())

    @check("Gamma = -(a^2-1)(2a^2-5)/(4-a^2)^2")
    def _():
        return _zero(ren.gamma - gamma_closed_form(ren.a2))

    @check("Gamma(g) has positive integer coefficients")
    def _():
        return _integral_nonneg(ren.gamma, positive_from=1), ""

    # -- skeleton decomposition ----------------------------------------------
    @check("H = D + H^2/(1-H) with H = V = (Gamma + D)/2")
    def _():
        h_v_series(ren.gamma, D)
        return True, ""

    @check("D(g), zeta(g) integral; zeta has valuation 5")
    def _():
        ok = _integral_nonneg(D) and _integral_nonneg(zeta) and zeta.valuation() == 5
        return ok, f"valuation {zeta.valuation()}"

    @check("dressing Gamma(g) = Gamma{g, zeta(g)}")
    def _():
        perturb = PowerSeries.monomial(5, N) if inject == "zeta" else None
        return _zero(dressing_check(N, perturb))

    @check("eta system 27g = -eta(3+eta)^2, Gamma = -eta(3+2eta)/(3+eta)^2")
    def _():
        r1, r2 = eta_system_check(N)
        ok1, d1 = _zero(r1)
        ok2, d2 = _zero(r2)
        return ok1 and ok2, f"{d1}; {d2}"

    @check("reversion(Gamma(g)) = closed-form g[Gamma]")
    def _():
        return _zero(reversion_check(N))

    @check("gamma_{m,n} nonnegative integers, gamma_{0,1} = 1")
    def _():
        T = gamma_template(N)
        ok = all(c.denominator == 1 and c >= 0 for c in T.coeffs.values()) and T[0, 1] == 1
        return ok, ""

    @check("template via s = g + zeta collapse = bivariate Newton")
    def _():
        n = min(N, NEWTON_CHECK_ORDER)
        return gamma_template(n) == gamma_template_newton(n), f"total degree {n}"

    # -- flype quotient ------------------------------------------------------
    @check("Gamma~{g,zeta} solves its quadratic")
    def _():
        return _zero(quadratic_residual(gamma_tilde_template(N)))

    @check("Gamma~{g,zeta} closed form = bivariate Newton")
    def _():
        n = min(N, NEWTON_CHECK_ORDER)
        return gamma_tilde_template(n) == gamma_tilde_template_newton(n), f"total degree {n}"

    @check("V~ = D + g Gamma~ + (H~-g)^2/(1-(H~-g))")
    def _():
        return _zero(h_tilde_check(N, drop_g_gamma=(inject == "drop-g-gamma-tilde")))

    @check("fixed point Gamma~(g) = Gamma~{g, zeta[Gamma~(g)]}")
    def _():
        return _zero(fixed_point_residual(gt))

    @check("gamma~_{m,n} <= gamma_{m,n}, equal on unmixed terms with m+n <= 2")
    def _():
        # a vertex beside a blob is one flype class, so gamma~_{1,1} = 2 < 4
        T, Tt = gamma_template(N), gamma_tilde_template(N)
        for key in T.keys():
            m, n = key
            if Tt[key] > T[key] or (m + n <= 2 and m * n == 0 and Tt[key] != T[key]):
                return False, f"at {key}"
        return Tt[1, 1] == 2, f"gamma~_(1,1) = {Tt[1, 1]}"

    @check("Gamma~ <= Gamma, equal through order 2, deficit 2 at order 3")
    def _():
        ok = all(gt[k] <= ren.gamma[k] for k in range(N + 1))
        ok = ok and all(gt[k] == ren.gamma[k] for k in range(3)) and ren.gamma[3] - gt[3] == 2
        return ok and _integral_nonneg(gt, positive_from=1), ""

    # -- asymptotics ----------------------------------------------------------
    @check("links: g* = 4/27, b = 27/4, b g* = 1")
    def _():
        a = link_asymptotics()
        ok = a.radius == Fraction(4, 27) and a.growth == Fraction(27, 4) and a.radius * a.growth == 1
        return ok, f"b = {a.growth} = {a.growth_decimal()}"

    @check("zeta[1/4] = 1/540")
    def _():
        z = zeta_at(Fraction(1, 4))
        return z == Fraction(1, 540), str(z)

    @check("tangles: g~* = (-101+sqrt(21001))/270, b~ = (101+sqrt(21001))/40 = 6.147930")
    def _():
        a = tangle_asymptotics()
        ok = (
            a.radius == QuadraticSurd(-101, 1, 21001, 270)
            and a.growth == QuadraticSurd(101, 1, 21001, 40)
            and a.growth_decimal(6) == "6.147930"
            and a.radius * a.growth == 1
            and a.growth < link_asymptotics().growth
        )
        return ok, f"b~ = {a.growth} = {a.growth_decimal(6)}"

    results = []
    for name, fn in checks:
        try:
            passed, detail = fn()
        except ArithmeticError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(passed), detail))
    return results
