"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python twins take over. Set SHOTGUNWSD_PURE_PYTHON=1 to force the
fallback (the benchmark and the equivalence tests rely on this). Both
backends return bit-identical results.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SHOTGUNWSD_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "c"
    except ImportError:
        pass

enumerate_topc = _impl.enumerate_topc
lesk_overlap_ids = _impl.lesk_overlap_ids
