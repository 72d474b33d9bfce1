import pytest

from fracspectral.checks import CheckResult, SUITE_NAMES, run_suite


def test_suite_names():
    assert SUITE_NAMES == ("integer", "closedform", "commutator",
                           "uncertainty", "convergence", "duality")


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_passes(name):
    results = run_suite(name)
    assert results
    failed = [r for r in results if r.passed is False]
    assert not failed, [(r.name, r.measured, r.tolerance) for r in failed]


def test_all_concatenates_every_suite():
    total = run_suite("all")
    assert len(total) == sum(len(run_suite(n)) for n in SUITE_NAMES)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_result_rows_are_well_formed():
    for r in run_suite("duality"):
        assert isinstance(r, CheckResult)
        assert r.name
        assert r.passed in (True, False, None)
        if r.passed is None:
            assert r.tolerance is None       # diagnostic rows carry no bar


def test_results_are_frozen():
    row = run_suite("duality")[0]
    with pytest.raises(AttributeError):
        row.passed = False
