"""Concrete arithmetic and LEB128 kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module provides the same functions. Set ``SYMWASM_PURE_PYTHON=1`` to force the
fallback at import time.
"""

import os

from symwasm._kernels import _pykernels
from symwasm._kernels._pykernels import (  # noqa: F401
    ADD, SUB, MUL, DIV_S, DIV_U, REM_S, REM_U, AND, OR, XOR, SHL, SHR_S, SHR_U, ROTL, ROTR,
    EQ, NE, LT_S, LT_U, GT_S, GT_U, LE_S, LE_U, GE_S, GE_U,
    CLZ, CTZ, POPCNT, EQZ,
    TRAP_DIV_ZERO, TRAP_OVERFLOW,
)

_impl = _pykernels
if not os.environ.get("SYMWASM_PURE_PYTHON"):
    try:
        from symwasm._kernels import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

read_uleb = _impl.read_uleb
read_sleb = _impl.read_sleb
int_binop = _impl.int_binop
int_cmp = _impl.int_cmp
int_unop = _impl.int_unop
