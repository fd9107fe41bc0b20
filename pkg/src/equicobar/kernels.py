"""Selects the compiled elimination kernel, falling back to pure Python.

Set ``EQUICOBAR_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
rref_mod_p = _kernels_py.rref_mod_p
rank_mod_p = _kernels_py.rank_mod_p

if os.environ.get("EQUICOBAR_PURE") != "1":
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        rref_mod_p = _ckernels.rref_mod_p
        rank_mod_p = _ckernels.rank_mod_p
        BACKEND = "cython"
