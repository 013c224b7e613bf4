"""Randomized invariants; each property runs 1000 cases."""
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from alttangles.flype import gamma_tilde_series, gamma_tilde_template
from alttangles.matrix_model import renormalized_model
from alttangles.oracle import DiagramFilter, FatGraph
from alttangles.oracle.search import PairingSearch, SearchConfig
from alttangles.series import PowerSeries, compose, exp, log, reversion, sqrt
from alttangles.skeleton import gamma_template

CASES = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# drawing from a fixed pool keeps generation cheap relative to st.fractions
small = st.sampled_from(sorted({Fraction(p, q) for p in range(-8, 9) for q in (1, 2, 3)}))


@st.composite
def series(draw, constant=None, max_order=7):
    order = draw(st.integers(1, max_order))
    coeffs = draw(st.lists(small, min_size=order + 1, max_size=order + 1))
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return PowerSeries(coeffs, order)


@st.composite
def invertible(draw):
    f = draw(series(constant=0))
    lead = draw(small.filter(bool))
    return PowerSeries([0, lead, *f.coeffs[2:]], f.order)


@CASES
@given(invertible())
def test_reversion_round_trip(f):
    r = reversion(f)
    x = PowerSeries.var(f.order)
    assert compose(f, r) == x
    assert compose(r, f) == x


@CASES
@given(invertible(), series(max_order=5))
def test_compose_is_associative_with_reversion(f, h):
    # h o f o f^-1 = h
    N = min(f.order, h.order)
    f, h = f.truncate(N), h.truncate(N)
    assert compose(compose(h, f), reversion(f)) == h


@CASES
@given(series(constant=0))
def test_exp_log_round_trip(h):
    assert log(exp(h)) == h
    assert exp(log(1 + h)) == 1 + h


@CASES
@given(series(constant=1))
def test_sqrt_squares_back(f):
    r = sqrt(f * f)
    assert r == f
    assert sqrt(f) * sqrt(f) == f


# -- oracle ---------------------------------------------------------------------------

def _vacuum_matchings():
    found = []
    for n in (1, 2, 3):
        s = PairingSearch(SearchConfig(n, 0, canonical=True), leaf=lambda m, n=n: found.append((n, m)) or 1)
        s.run()
    return found


def _tangle_diagrams():
    out = []
    for n in (1, 2, 3):
        cfg = SearchConfig(n, 4, canonical=True)
        PairingSearch(cfg, leaf=lambda m, n=n: out.append(FatGraph.from_matching(n, 4, m)) or 1).run()
    return out


VACUUM = _vacuum_matchings()
TANGLES = _tangle_diagrams()


def relabel(n, matching, perm, shifts):
    """Move half-edge ``(v, i)`` to ``(perm[v], i + shifts[v])``; the standard rotation is preserved."""
    def phi(h):
        v, i = divmod(h, 4)
        return 4 * perm[v] + (i + shifts[v]) % 4

    new = [0] * (4 * n)
    for h, m in enumerate(matching):
        new[phi(h)] = phi(m)
    return tuple(new)


@CASES
@given(st.data())
def test_genus_invariant_under_relabeling(data):
    n, m = data.draw(st.sampled_from(VACUUM))
    # also exercise non-planar graphs by swapping two partners
    if data.draw(st.booleans()):
        m = list(m)
        a, b = data.draw(st.lists(st.integers(0, 4 * n - 1), min_size=2, max_size=2, unique=True))
        ma, mb = m[a], m[b]
        if ma != b and len({a, b, ma, mb}) == 4:
            m[a], m[b], m[ma], m[mb] = mb, ma, b, a
        m = tuple(m)
    perm = data.draw(st.permutations(range(n)))
    shifts = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    before = FatGraph.from_matching(n, 0, m)
    after = FatGraph.from_matching(n, 0, relabel(n, m, perm, shifts))
    assert before.genus() == after.genus()
    assert before.is_connected() == after.is_connected()


filters = st.builds(DiagramFilter, st.booleans(), st.booleans(), st.booleans(), st.booleans())


@CASES
@given(st.sampled_from(TANGLES), filters, filters)
def test_filters_only_remove(fg, a, b):
    strict = DiagramFilter(*(x or y for x, y in zip(
        (a.connected, a.no_self_energy, a.two_pi_horizontal, a.two_pi_vertical),
        (b.connected, b.no_self_energy, b.two_pi_horizontal, b.two_pi_vertical),
    )))
    assert strict.is_stricter_than(a) and strict.is_stricter_than(b)
    if strict.accepts(fg):
        assert a.accepts(fg) and b.accepts(fg)


# -- flype quotient ----------------------------------------------------------------------

TEMPLATE_ORDER = 20
T, T_TILDE = gamma_template(TEMPLATE_ORDER), gamma_tilde_template(TEMPLATE_ORDER)
SERIES_ORDER = 30
GAMMA, GAMMA_TILDE = renormalized_model(SERIES_ORDER).gamma, gamma_tilde_series(SERIES_ORDER)


@CASES
@given(st.integers(0, TEMPLATE_ORDER).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, TEMPLATE_ORDER - m))))
def test_template_quotient_termwise(key):
    m, n = key
    assert 0 <= T_TILDE[key] <= T[key]
    if m + n <= 2 and m * n == 0:
        assert T_TILDE[key] == T[key]


@CASES
@given(st.integers(0, SERIES_ORDER))
def test_gamma_tilde_below_gamma(k):
    assert GAMMA_TILDE[k] <= GAMMA[k]
    if k <= 2:
        assert GAMMA_TILDE[k] == GAMMA[k]
    else:
        assert GAMMA_TILDE[k] < GAMMA[k]
