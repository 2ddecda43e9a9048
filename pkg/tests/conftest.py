from __future__ import annotations

import random

import pytest


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0A7)


@pytest.fixture(params=["default", "pure"])
def any_backend(request, monkeypatch):
    """Run a test under the import-time backend and under the pure fallback."""
    from coquat import _backend, _kernels_py

    if request.param == "pure":
        monkeypatch.setattr(_backend, "kernels", _kernels_py)
    return _backend.backend_name()
