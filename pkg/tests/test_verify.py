import pytest

from alttangles.verify import INJECTIONS, run_checks


def test_all_checks_pass_at_order_30():
    results = run_checks(30)
    assert [r.name for r in results if not r.passed] == []
    assert len({r.name for r in results}) == len(results)


@pytest.mark.parametrize("inject, culprit", [
    ("zeta", "dressing"),
    ("drop-g-gamma-tilde", "V~"),
    ("golden", "golden Gamma~"),
])
def test_each_injection_trips_its_own_check(inject, culprit):
    failed = [r.name for r in run_checks(8, inject) if not r.passed]
    assert len(failed) == 1 and failed[0].startswith(culprit)


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_checks(5)
    with pytest.raises(ValueError):
        run_checks(10, "nonsense")
    assert set(INJECTIONS) == {"zeta", "drop-g-gamma-tilde", "golden"}
