"""Kernel backend selection: compiled extension when built, else pure Python.

Set QUADGUESS_KERNEL=python to force the fallback (used by the benchmark
and backend-parity tests).
"""

import os

if os.environ.get("QUADGUESS_KERNEL") == "python":
    from quadguess import _convolve_py as _impl
else:
    try:
        from quadguess import _convolve_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from quadguess import _convolve_py as _impl

BACKEND = _impl.BACKEND
weight = _impl.weight
quad_conv = _impl.quad_conv
