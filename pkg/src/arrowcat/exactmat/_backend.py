"""Kernel selection.

The compiled extension is used when it imports; set ``ARROWCAT_PURE_PYTHON=1``
to force the pure-Python kernels.
"""

import os

from . import _pykernels

if os.environ.get("ARROWCAT_PURE_PYTHON"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        kernels = _pykernels

BACKEND = "cython" if kernels is not _pykernels else "python"
