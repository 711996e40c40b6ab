"""Kernel backend selection.

The hot loops (proof-of-work nonce scan, Gini best-split search) exist
twice: a Cython extension (renalchain._core) and a numpy fallback
(renalchain._core_py). The compiled core is preferred when it was built;
set RENALCHAIN_PURE_KERNELS=1 to force the fallback, e.g. for the
benchmark in benchmarks/bench_kernels.py.
"""

from __future__ import annotations

import os

if os.environ.get("RENALCHAIN_PURE_KERNELS"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

BACKEND: str = _impl.BACKEND
find_proof = _impl.find_proof
best_split = _impl.best_split
