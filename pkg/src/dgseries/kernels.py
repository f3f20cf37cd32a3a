"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module.  Setting ``DGSERIES_PURE_PYTHON=1`` forces
the fallback.
"""

import os

if os.environ.get("DGSERIES_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import apply_terms, poly_eval, recurrence_sweep

    BACKEND = "python"
else:
    try:
        from ._ckernels import apply_terms, poly_eval, recurrence_sweep

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import apply_terms, poly_eval, recurrence_sweep

        BACKEND = "python"

__all__ = ["BACKEND", "apply_terms", "poly_eval", "recurrence_sweep"]
