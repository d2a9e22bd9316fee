import pytest

from qorders.skein import clear_cache, get_budget, set_budget


@pytest.fixture(autouse=True)
def isolated_engine_state():
    # memoized brackets would hide budget skips that a fresh process reports
    saved = get_budget()
    clear_cache()
    yield
    set_budget(saved)
