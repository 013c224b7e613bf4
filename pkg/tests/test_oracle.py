from fractions import Fraction
from math import factorial

import pytest

from alttangles.matrix_model import bare_model, renormalized_model
from alttangles.oracle import (
    DiagramFilter,
    FatGraph,
    OracleCapError,
    count_free_energy,
    count_tangles,
    count_two_point,
    labeled_vacuum_pairings,
)
from alttangles.oracle.search import PairingSearch, SearchConfig
from alttangles.skeleton import d_series


def all_matchings(items):
    if not items:
        yield {}
        return
    a, rest = items[0], items[1:]
    for i, b in enumerate(rest):
        for m in all_matchings(rest[:i] + rest[i + 1:]):
            m = dict(m)
            m[a], m[b] = b, a
            yield m


def brute_force(n, k, accept):
    """Count every labeled pairing of ``k + 4n`` half-edges that passes ``accept``."""
    H = k + 4 * n
    total = 0
    for m in all_matchings(list(range(H))):
        fg = FatGraph.from_matching(n, k, tuple(m[h] for h in range(H)))
        if fg.genus() == 0 and accept(fg):
            total += 1
    return total


# -- fat graphs ------------------------------------------------------------------

def test_one_vertex_planar_pairing():
    # half-edges 0..3 in rotation order; (0 1)(2 3) has three faces
    fg = FatGraph.from_matching(1, 0, (1, 0, 3, 2))
    assert len(fg.faces()) == 3
    assert fg.genus() == 0


def test_one_vertex_crossed_pairing():
    fg = FatGraph.from_matching(1, 0, (2, 3, 0, 1))
    assert len(fg.faces()) == 1
    assert fg.genus() == 1


def test_disjoint_union_not_connected():
    fg = FatGraph.from_matching(2, 0, (1, 0, 3, 2, 5, 4, 7, 6))
    assert not fg.is_connected()
    assert fg.genus() == 0


def test_exactly_two_of_three_single_vertex_pairings_planar():
    planar = [m for m in all_matchings([0, 1, 2, 3]) if FatGraph.from_matching(1, 0, tuple(m[h] for h in range(4))).genus() == 0]
    assert len(planar) == 2
    assert labeled_vacuum_pairings(1, labeled=True) == 2


def test_invalid_matching_rejected():
    with pytest.raises(ValueError):
        FatGraph.from_matching(1, 0, (0, 1, 3, 2))


# -- brute force vs pruned search -------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_vacuum_search_matches_brute_force(n):
    want = brute_force(n, 0, FatGraph.is_connected)
    assert labeled_vacuum_pairings(n, labeled=True) == want
    assert labeled_vacuum_pairings(n, labeled=False) == want


@pytest.mark.parametrize("n", [1, 2])
def test_two_point_search_matches_brute_force(n):
    want = brute_force(n, 2, lambda fg: fg.is_connected() and not fg.has_leg_pairing())
    assert count_two_point(n, labeled=True) == Fraction(want, factorial(n) * 4**n)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("flt", [DiagramFilter(), DiagramFilter.tangles(), DiagramFilter.both_channels()])
def test_tangle_search_matches_brute_force(n, flt):
    want = brute_force(n, 4, flt.accepts)
    assert count_tangles(n, flt, labeled=True) * factorial(n) * 4**n == want
    assert count_tangles(n, flt) * factorial(n) * 4**n == want


# -- contracts against the series -----------------------------------------------------

@pytest.mark.parametrize("n, want", [(1, Fraction(1, 2)), (2, Fraction(9, 8)), (3, Fraction(9, 2))])
def test_free_energy(n, want):
    assert count_free_energy(n) == want == bare_model(n).F[n]


@pytest.mark.parametrize("n, want", [(0, 1), (1, 2), (2, 9)])
def test_two_point(n, want):
    assert count_two_point(n) == want == bare_model(max(n, 1)).G2[n]


@pytest.mark.parametrize("n, want", [(1, 1), (2, 2), (3, 6)])
def test_tangles(n, want):
    assert count_tangles(n) == want == renormalized_model(n).gamma[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_both_channel_2pi(n):
    D, _ = d_series(renormalized_model(n).gamma)
    assert count_tangles(n, DiagramFilter.both_channels()) == D[n]


def test_labeled_and_canonical_agree():
    assert count_tangles(3, labeled=True) == count_tangles(3) == 6
    assert count_free_energy(3, labeled=True) == count_free_energy(3)


def test_serial_and_parallel_agree():
    assert count_tangles(3, workers=2) == count_tangles(3)
    assert count_free_energy(4, workers=2) == count_free_energy(4)


def test_caps():
    with pytest.raises(OracleCapError):
        count_tangles(5)
    with pytest.raises(OracleCapError):
        count_free_energy(6)
    assert count_tangles(2, cap=2) == 2


def test_filter_requires_connected():
    with pytest.raises(ValueError):
        count_tangles(2, DiagramFilter(connected=False))


def test_search_prunes():
    s = PairingSearch(SearchConfig(3, 0, canonical=True))
    accepted = s.run()
    assert accepted == s.leaves
    assert accepted * factorial(2) * 4**2 == brute_force(3, 0, FatGraph.is_connected)
