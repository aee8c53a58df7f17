"""Kernel selection: compiled LR counter if built, pure Python otherwise.

Set ``MATROID_KL_PURE=1`` to force the Python kernel.
"""
import os

from . import _lr_py

count_lr_python = _lr_py.count_lr

try:
    from ._lr_core import count_lr as count_lr_compiled
except ImportError:
    count_lr_compiled = None

if count_lr_compiled is not None and not os.environ.get("MATROID_KL_PURE"):
    count_lr = count_lr_compiled
    BACKEND = "cython"
else:
    count_lr = count_lr_python
    BACKEND = "python"
