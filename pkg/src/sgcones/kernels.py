"""Kernel selection.

The compiled extension is used when it imported cleanly; setting the
environment variable SGCONES_PURE=1 forces the pure Python twin.  Both
backends expose the same five functions over (n, flat) arguments where
flat is a C-int buffer (array('i')) of the row-major table.
"""

import os

from . import _kernels_py

if os.environ.get("SGCONES_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

first_nonassociative = _impl.first_nonassociative
left_ideal_masks = _impl.left_ideal_masks
right_ideal_masks = _impl.right_ideal_masks
regularity_witnesses = _impl.regularity_witnesses
centrality_violation = _impl.centrality_violation
