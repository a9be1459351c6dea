"""Kernel backend selection.

The Fermat relaxation kernel exists twice: a compiled Cython extension
(spinelab._fermat) and a pure-Python reference (spinelab._fermat_py) with
identical semantics.  The compiled one is preferred when importable; set
SPINELAB_KERNELS=python or SPINELAB_KERNELS=compiled to force a choice.
"""

import os

from . import _fermat_py

_CHOICE = os.environ.get("SPINELAB_KERNELS", "auto").strip().lower() or "auto"

if _CHOICE == "python":
    _impl = _fermat_py
elif _CHOICE == "compiled":
    from . import _fermat as _impl  # noqa: F401  (ImportError is the contract here)
elif _CHOICE == "auto":
    try:
        from . import _fermat as _impl
    except ImportError:
        _impl = _fermat_py
else:
    raise ValueError(
        f"SPINELAB_KERNELS must be 'auto', 'compiled' or 'python', got {_CHOICE!r}"
    )

BACKEND = _impl.BACKEND_NAME
fermat_relax_batch = _impl.fermat_relax_batch
relax_one = _impl.relax_one
