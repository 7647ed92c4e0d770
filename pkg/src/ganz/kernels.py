"""Select the polynomial kernel backend at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is loaded.  Setting ``GANZ_PURE_PYTHON=1``
forces the fallback.
"""

import os

if os.environ.get("GANZ_PURE_PYTHON") == "1":
    from ganz._pykernels import *  # noqa: F401,F403
    from ganz._pykernels import BACKEND
else:
    try:
        from ganz._kernels import *  # noqa: F401,F403
        from ganz._kernels import BACKEND
    except ImportError:
        from ganz._pykernels import *  # noqa: F401,F403
        from ganz._pykernels import BACKEND

__all__ = [
    "BACKEND", "trim", "padd", "psub", "pneg", "pscale", "pmul", "ppow",
    "pcontent", "pdivint", "pord", "pprem", "pprimitive", "pgcd",
    "pdivexact", "eval_terms",
]
