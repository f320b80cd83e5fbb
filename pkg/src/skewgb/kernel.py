"""Kernel backend selection.

The compiled extension ``_kernel_c`` (built from ``_kernel_c.pyx``) is
preferred when available; setting ``SKEWGB_PURE_PYTHON=1`` forces the
pure-Python twin.  Both implement the same ``MulKernel`` interface and
are exercised against each other in the test suite and benchmark.
"""

import os

if os.environ.get("SKEWGB_PURE_PYTHON"):
    from ._kernel_py import MulKernel

    BACKEND = "python"
else:
    try:
        from ._kernel_c import MulKernel  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build environment
        from ._kernel_py import MulKernel  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["MulKernel", "BACKEND"]
