"""Backend selection: compiled kernels when available, pure Python otherwise.

The active module is held in the ``kernels`` attribute so callers that go
through ``_backend.kernels`` can be redirected (e.g. in tests) by assigning
to it. ``backend_name()`` reports which implementation is live.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]

    kernels = _kernels
except ImportError:  # extension not built; fall back to pure Python
    kernels = _kernels_py


def backend_name() -> str:
    return kernels.NAME


def use_pure_python() -> None:
    """Force the pure-Python kernels (mainly for tests and benchmarks)."""
    global kernels
    kernels = _kernels_py


def use_default() -> None:
    """Restore the import-time backend choice."""
    global kernels
    try:
        from . import _kernels  # type: ignore[attr-defined]

        kernels = _kernels
    except ImportError:
        kernels = _kernels_py
