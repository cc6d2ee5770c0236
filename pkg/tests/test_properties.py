import pytest

from qident import properties
from qident.properties import SUITES, run_properties, run_property

ALL = [(module, name) for module, entries in SUITES.items() for name, _ in entries]


@pytest.mark.parametrize("module, name", ALL)
def test_property_holds(module, name):
    result = run_property(module, name)
    assert result.passed, result.detail
    assert result.checks > 0


def test_failures_are_reported_not_raised(monkeypatch):
    def broken():
        yield True, "first"
        yield False, "second"

    def crashing():
        yield True, "first"
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(SUITES, "scratch", [("broken", broken), ("crashing", crashing)])
    results = run_properties(["scratch"])
    assert [(r.passed, r.checks) for r in results] == [(False, 2), (False, 1)]
    assert "second" in results[0].detail and "boom" in results[1].detail


def test_unknown_property():
    with pytest.raises(KeyError):
        properties.run_property("qcore", "nope")
