from functools import lru_cache

import pytest

from unitalblocks.unital import build_incidence


@lru_cache(maxsize=None)
def _incidence(q):
    return build_incidence(q)


@pytest.fixture(scope="session")
def incidence():
    return _incidence
