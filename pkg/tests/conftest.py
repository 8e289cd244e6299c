"""Shared test setup: sys.path for the helper modules, common fixtures."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dtargets.corpus import build_corpus, load_fixture  # noqa: E402

FIXTURES = ("k4", "prism", "cube", "octahedron", "pentagonal_prism")


@pytest.fixture(params=FIXTURES)
def fixture_target(request):
    return load_fixture(request.param)


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
