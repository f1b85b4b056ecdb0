import functools

import pytest
from hypothesis import settings

from chevgrp.weylmod import build_module

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def module(group: str, which: str, ring: int = 0):
    return build_module(group, which, ring)


@pytest.fixture(scope="session")
def mod():
    """mod(group, which, ring) with a session-wide cache."""
    return module
