from __future__ import annotations

import random

import pytest

from support import make_rng


@pytest.fixture
def rng() -> random.Random:
    return make_rng()
