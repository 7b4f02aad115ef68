"""Backend selection for the coloring search kernel.

The compiled kernel is preferred when available; CONDCHROM_BACKEND=pure
forces the Python reference, CONDCHROM_BACKEND=c fails loudly if the
extension is missing. Both backends implement identical semantics.
"""

from __future__ import annotations

import os

from . import _kernel_py

FOUND = _kernel_py.FOUND
NONE = _kernel_py.NONE
BUDGET = _kernel_py.BUDGET


def _load():
    choice = os.environ.get("CONDCHROM_BACKEND", "auto")
    if choice not in ("auto", "c", "pure"):
        raise ValueError(f"CONDCHROM_BACKEND must be auto|c|pure, got {choice!r}")
    if choice in ("auto", "c"):
        try:
            from . import _kernel_cy

            return _kernel_cy, "c"
        except ImportError:
            if choice == "c":
                raise
    return _kernel_py, "pure"


_backend, BACKEND_NAME = _load()


def search_coloring(neighbors, req, k, budget=0):
    """(status, colors|None, nodes); see _kernel_py.search_coloring."""
    return _backend.search_coloring(neighbors, req, k, budget)


def backends():
    """All importable backends, for benchmarks and equivalence tests."""
    out = {"pure": _kernel_py}
    try:
        from . import _kernel_cy

        out["c"] = _kernel_cy
    except ImportError:
        pass
    return out
