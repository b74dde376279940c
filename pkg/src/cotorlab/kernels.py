"""Backend selection for the elimination kernels.

The compiled extension (`cotorlab._ckernels`) is used when importable; the
pure-Python twin is the fallback.  Set COTORLAB_PURE=1 to force the fallback,
e.g. for the backend-comparison benchmark.  Both backends are exact and
return identical results; tests assert this.
"""

import os

from cotorlab import _kernels_py

if os.environ.get("COTORLAB_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from cotorlab import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

fp_rank = _impl.fp_rank
fp_rref = _impl.fp_rref
fp_matmul = _impl.fp_matmul
q_rank = _impl.q_rank
q_rref = _impl.q_rref
q_matmul = _impl.q_matmul
