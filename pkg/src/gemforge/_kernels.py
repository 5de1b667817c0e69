"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``GEMFORGE_PURE=1`` to force the fallback.
"""
import os

if os.environ.get("GEMFORGE_PURE"):
    from gemforge import _pykernels as _impl
else:
    try:
        from gemforge import _ckernels as _impl
    except ImportError:
        from gemforge import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

component_labels = _impl.component_labels
propagate = _impl.propagate
search = _impl.search
