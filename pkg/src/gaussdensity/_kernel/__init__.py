"""Kernel selection: compiled extension if available, pure Python otherwise.

The compiled module (`_fast`, built from _fast.pyx) implements the same
functions as `fallback` on C int64 arithmetic; it is used automatically for
arguments whose coordinates fit the safe range.  Set GAUSSDENSITY_PURE_PYTHON=1
to force the pure-Python lane (used by tests and the kernel benchmark).
"""

from __future__ import annotations

import os

from . import fallback

_compiled = None
if os.environ.get("GAUSSDENSITY_PURE_PYTHON") != "1":
    try:
        from . import _fast as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None

# Compiled kernels do all arithmetic in int64; inputs below this bound keep
# every intermediate product within range.
COORD_LIMIT = 1 << 25


def _fits(*coords: int) -> bool:
    return all(-COORD_LIMIT < c < COORD_LIMIT for c in coords)


def quartic_symbol_exp(a_re: int, a_im: int, n_re: int, n_im: int) -> int:
    if _compiled is not None and _fits(a_re, a_im, n_re, n_im):
        return _compiled.quartic_symbol_exp(a_re, a_im, n_re, n_im)
    return fallback.quartic_symbol_exp(a_re, a_im, n_re, n_im)


def quadratic_symbol_exp(a_re: int, a_im: int, n_re: int, n_im: int) -> int:
    if _compiled is not None and _fits(a_re, a_im, n_re, n_im):
        return _compiled.quadratic_symbol_exp(a_re, a_im, n_re, n_im)
    return fallback.quadratic_symbol_exp(a_re, a_im, n_re, n_im)


def prime_sum(c_re: int, c_im: int, sup_exp, p_re, p_im, weights,
              quartic: bool) -> complex:
    if _compiled is not None and _fits(c_re, c_im):
        return _compiled.prime_sum(c_re, c_im, sup_exp, p_re, p_im,
                                   weights, quartic)
    return fallback.prime_sum(c_re, c_im, sup_exp, p_re, p_im,
                              weights, quartic)


def active_lane() -> str:
    return "compiled" if HAVE_COMPILED else "pure-python"
