"""Kernel backend selection.

The compiled extension is preferred when importable; set EQUISEQ_PURE=1 to
force the pure-Python kernels (used by the benchmark and CI cross-checks).
The compiled kernels are exact only within their length guards, so callers
dispatch per call via `count_residue` below.
"""
from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

if os.environ.get("EQUISEQ_PURE"):
    _impl = _kernels_py
    HAVE_EXT = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        HAVE_EXT = True
    except ImportError:
        _impl = _kernels_py
        HAVE_EXT = False

BACKEND_NAME = "cython" if HAVE_EXT else "python"

find_witness_scan = _impl.find_witness_scan


def count_residue(residues: Sequence[int], n: int) -> list[int]:
    """Subset-count-per-residue DP; compiled kernel when counts fit in 64 bits."""
    if HAVE_EXT and len(residues) <= 62:
        return _impl.count_residue(residues, n)
    return _kernels_py.count_residue(residues, n)
