"""GF(p)[x] kernel selection.

The distinct-degree factorization inside the verification sweeps is the
one genuinely hot loop in this package, so it exists twice: a compiled
Cython extension (``_gfpoly_c``) and a pure-Python fallback
(``_gfpoly_py``) with identical contracts.  The compiled kernel is
preferred when it was built; set ``CLEANRING_PURE=1`` to force the
fallback.  ``benchmarks/bench_gfpoly.py`` compares the two.
"""

from __future__ import annotations

import os

if os.environ.get("CLEANRING_PURE"):
    from . import _gfpoly_py as _impl
else:
    try:
        from . import _gfpoly_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _gfpoly_py as _impl

BACKEND: str = _impl.BACKEND
ddf_degrees = _impl.ddf_degrees
poly_mul_mod_cyclic = _impl.poly_mul_mod_cyclic
poly_gcd = _impl.poly_gcd

__all__ = ["BACKEND", "ddf_degrees", "poly_gcd", "poly_mul_mod_cyclic"]
