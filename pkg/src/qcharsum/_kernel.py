"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set QCHARSUM_PURE=1 to force the pure-Python kernel (useful for timing
comparisons and for debugging the extension).
"""

import os

if os.environ.get("QCHARSUM_PURE"):
    from . import _kernel_py as impl

    HAVE_COMPILED = False
else:
    try:
        from . import _kernel_cy as impl  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        from . import _kernel_py as impl

        HAVE_COMPILED = False

IMPL_NAME = "compiled" if HAVE_COMPILED else "pure"

zz_strip = impl.zz_strip
zz_add = impl.zz_add
zz_sub = impl.zz_sub
zz_neg = impl.zz_neg
zz_mul = impl.zz_mul
zz_mul_scalar = impl.zz_mul_scalar
zz_content = impl.zz_content
zz_primitive = impl.zz_primitive
zz_divexact = impl.zz_divexact
zz_prem = impl.zz_prem
zz_gcd = impl.zz_gcd
