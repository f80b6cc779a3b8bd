"""Kernel dispatch: the compiled ``_kernels`` extension when it was built,
otherwise the pure-Python ``_kernels_py``.

Set ``PYRAMIDS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("PYRAMIDS_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

__all__ = ["BACKEND", "normal_order_word", "word_eigenvalue", "compiled_available"]


def compiled_available() -> bool:
    return _compiled is not None


if _compiled is not None:

    def normal_order_word(word: str) -> dict[tuple[int, int], tuple[int, int]]:
        out = _compiled.normal_order_word(word)
        if out is None:
            return _kernels_py.normal_order_word(word)
        return out

    def word_eigenvalue(word: str, m: int) -> tuple[int, int]:
        if m > 2**40:
            return _kernels_py.word_eigenvalue(word, m)
        out = _compiled.word_eigenvalue(word, m)
        if out is None:
            return _kernels_py.word_eigenvalue(word, m)
        return out

else:
    normal_order_word = _kernels_py.normal_order_word
    word_eigenvalue = _kernels_py.word_eigenvalue
