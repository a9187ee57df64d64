"""Selects the compiled LR kernel when available.

Set ``HORNCONE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _lrkernel_py

BACKEND = "python"
lr_fillings = _lrkernel_py.lr_fillings

if os.environ.get("HORNCONE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _lrkernel  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        lr_fillings = _lrkernel.lr_fillings
        BACKEND = "cython"

python_lr_fillings = _lrkernel_py.lr_fillings
