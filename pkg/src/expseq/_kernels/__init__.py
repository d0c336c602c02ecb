"""Primality kernels: compiled extension when available, pure Python otherwise.

Set EXPSEQ_PURE_KERNELS=1 to force the pure implementation.  Both expose the
same functions with bit-identical results; see benchmarks/bench_kernels.py
for the speed comparison.
"""

import os

if os.environ.get("EXPSEQ_PURE_KERNELS"):
    from . import pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

IMPL_NAME = _impl.IMPL_NAME
jacobi = _impl.jacobi
mr_round = _impl.mr_round
strong_lucas = _impl.strong_lucas
composite_mask = _impl.composite_mask
