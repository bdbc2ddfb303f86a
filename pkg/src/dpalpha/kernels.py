"""Kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set ``DPALPHA_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels as python

compiled = None
if not os.environ.get("DPALPHA_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

backend = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

closure = backend.closure
adjacent_pairs = backend.adjacent_pairs


def use(name: str) -> str:
    """Switch the active backend to "cython" or "python"; returns the previous one."""
    global backend, BACKEND, closure, adjacent_pairs
    if name == "cython" and compiled is None:
        raise ImportError("the compiled extension is not available")
    if name not in ("cython", "python"):
        raise ValueError(f"unknown backend {name!r}")
    previous = BACKEND
    backend = compiled if name == "cython" else python
    BACKEND = name
    closure = backend.closure
    adjacent_pairs = backend.adjacent_pairs
    return previous
