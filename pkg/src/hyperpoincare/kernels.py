"""Select the compiled kernels when they are built, else the pure-Python ones.

``BACKEND`` is ``"cython"`` or ``"python"``.  Setting
``HYPERPOINCARE_PURE_PYTHON=1`` forces the fallback (useful for benchmarks and
for testing both paths).
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("HYPERPOINCARE_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

covered_supports = _impl.covered_supports
independent_sets = _impl.independent_sets
maximal_independent_sets = _impl.maximal_independent_sets
face_numbers = _impl.face_numbers
taylor_minimal = _impl.taylor_minimal

# mod-p products must fit in int64 inside the compiled kernel
_CKERNEL_MAX_PRIME = 3037000493


def rank_mod_p(rows, ncols: int, p: int) -> int:
    if _impl is _pykernels or p > _CKERNEL_MAX_PRIME:
        return _pykernels.rank_mod_p(rows, ncols, p)
    return _impl.rank_mod_p(rows, ncols, p)
