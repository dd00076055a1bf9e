import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from diagpa.contexts import bundled_context, context_names  # noqa: E402


@pytest.fixture(scope="session")
def contexts():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = bundled_context(name)
        return cache[name]

    return get


ALL_CONTEXTS = context_names()
