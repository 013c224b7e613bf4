"""Brute-force diagram counts that the analytic series must reproduce."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .fatgraph import FatGraph
from .search import SearchConfig, count_pairings

FREE_ENERGY_CAP = 5
TWO_POINT_CAP = 4
TANGLE_CAP = 4


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class DiagramFilter:
    """Which 4-leg diagrams to keep.  Flags only ever remove diagrams."""

    connected: bool = True
    no_self_energy: bool = False
    two_pi_horizontal: bool = False
    two_pi_vertical: bool = False

    @classmethod
    def tangles(cls) -> DiagramFilter:
        return cls(no_self_energy=True)

    @classmethod
    def both_channels(cls) -> DiagramFilter:
        return cls(no_self_energy=True, two_pi_horizontal=True, two_pi_vertical=True)

    def is_stricter_than(self, other: DiagramFilter) -> bool:
        mine = (self.connected, self.no_self_energy, self.two_pi_horizontal, self.two_pi_vertical)
        theirs = (other.connected, other.no_self_energy, other.two_pi_horizontal, other.two_pi_vertical)
        return all(a or not b for a, b in zip(mine, theirs))

    def accepts(self, fg: FatGraph) -> bool:
        if self.connected and (fg.has_leg_pairing() or not fg.is_internally_connected()):
            return False
        if self.no_self_energy and fg.has_self_energy():
            return False
        if self.two_pi_horizontal and not fg.is_2pi_channel("horizontal"):
            return False
        if self.two_pi_vertical and not fg.is_2pi_channel("vertical"):
            return False
        return True


@dataclass(frozen=True)
class _FilterLeaf:
    config: SearchConfig
    diagram_filter: DiagramFilter

    def __call__(self, matching: tuple[int, ...]) -> int:
        fg = FatGraph.from_matching(self.config.n_vertices, self.config.n_external, matching)
        return 1 if self.diagram_filter.accepts(fg) else 0


def _check_cap(n: int, cap: int, lowest: int) -> None:
    if n < lowest:
        raise ValueError(f"n must be >= {lowest}")
    if n > cap:
        raise OracleCapError(f"cap exceeded: n={n} > {cap}")


def labeled_vacuum_pairings(n: int, labeled: bool = False, workers: int = 1) -> int:
    """Connected genus-0 pairings of the ``4n`` labeled half-edges of ``n`` vertices.

    With ``labeled=False`` the rooted maps are enumerated instead and the labeled
    number recovered as ``rooted * (n-1)! * 4^(n-1)``.
    """
    if labeled:
        return count_pairings(SearchConfig(n, 0, canonical=False), workers=workers)
    rooted = count_pairings(SearchConfig(n, 0, canonical=True), workers=workers)
    return rooted * factorial(n - 1) * 4 ** (n - 1)


def count_free_energy(n: int, *, cap: int = FREE_ENERGY_CAP, labeled: bool = False, workers: int = 1) -> Fraction:
    """``(1 / (n! 4^n))`` times the number of connected planar labeled pairings."""
    _check_cap(n, cap, 1)
    return Fraction(labeled_vacuum_pairings(n, labeled, workers), factorial(n) * 4 ** n)


def count_two_point(n: int, *, cap: int = TWO_POINT_CAP, labeled: bool = False, workers: int = 1) -> Fraction:
    """Planar diagrams of ``<(1/N) tr M^2>`` with ``n`` quartic vertices."""
    _check_cap(n, cap, 0)
    cfg = SearchConfig(n, 2, canonical=not labeled, forbid_leg_pairs=n > 0)
    count = count_pairings(cfg, workers=workers)
    return Fraction(count, factorial(n) * 4 ** n) if labeled else Fraction(count)


def count_tangles(
    n: int,
    diagram_filter: DiagramFilter | None = None,
    *,
    cap: int = TANGLE_CAP,
    labeled: bool = False,
    workers: int = 1,
) -> int:
    """Planar 4-leg diagrams with legs NW, NE, SE, SW on the outer face, passing the filter."""
    _check_cap(n, cap, 1)
    f = diagram_filter or DiagramFilter.tangles()
    if not f.connected:
        raise ValueError("filter must include connected-only")
    cfg = SearchConfig(n, 4, canonical=not labeled, forbid_self_loops=f.no_self_energy, forbid_leg_pairs=True)
    count = count_pairings(cfg, _FilterLeaf(cfg, f), workers=workers)
    if labeled:
        q, r = divmod(count, factorial(n) * 4 ** n)
        if r:
            raise ArithmeticError("labeled count not divisible by the relabeling group")
        return q
    return count
