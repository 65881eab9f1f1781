"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the pure
Python implementation is used.  Set ZONOFORGE_PURE=1 to force the fallback
(useful for benchmarking and for testing backend equivalence).
"""
import os

if os.environ.get("ZONOFORGE_PURE"):
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

enumerate_maximal_cliques = _impl.enumerate_maximal_cliques
find_clique_of_size = _impl.find_clique_of_size
