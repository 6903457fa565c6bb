"""The property suites behind the `verify` subcommand must all pass."""

import pytest

from scrollcohom.verify import SUITES


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    results = SUITES[name]()
    failing = [r for r in results if not r.ok]
    assert not failing, [(r.label, r.detail) for r in failing]
