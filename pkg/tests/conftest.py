import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from helpers import RING_NAMES  # noqa: E402
from skewlin.field import make_instance  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=RING_NAMES)
def ring(request):
    return make_instance(request.param)


@pytest.fixture
def f5():
    return make_instance("F5")


@pytest.fixture
def f9():
    return make_instance("F9:frob^1")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
