from __future__ import annotations

import pytest

from largeness import sets


@pytest.fixture
def evens():
    return sets.multiples(2)


@pytest.fixture
def nat():
    return sets.naturals()
