"""Backend selection for the hot kernels.

The compiled ``_core`` module is used when importable; ``STCI_BACKEND=python``
forces the numpy fallback. Both expose ``min_coin_tables`` and ``common_zeros``.
"""
import os

from . import _fallback

INF = int(_fallback.INF)

if os.environ.get("STCI_BACKEND", "").lower() == "python":
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback

BACKEND = "cython" if _impl is not _fallback else "python"
min_coin_tables = _impl.min_coin_tables
common_zeros = _impl.common_zeros
