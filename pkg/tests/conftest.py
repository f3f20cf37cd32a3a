from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from dgseries import _pykernels

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=9)
)


def _backends():
    mods = [pytest.param(_pykernels, id="python")]
    try:
        from dgseries import _ckernels
    except ImportError:
        mods.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    else:
        mods.append(pytest.param(_ckernels, id="cython"))
    return mods


@pytest.fixture(params=_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
