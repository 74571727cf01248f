"""Switch between numba-compiled kernels and their pure-numpy fallbacks.

Set ``MINKSUM_NUMBA=0`` before import to force the numpy path.
"""

from __future__ import annotations

import os

_flag = os.environ.get("MINKSUM_NUMBA", "1").strip().lower()

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

USE_NUMBA = _numba is not None and _flag not in ("0", "false", "no", "off")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is usable, otherwise the identity decorator."""
    if _numba is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn
    kwargs.setdefault("cache", True)
    return _numba.njit(*args, **kwargs)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
