"""Quadratic and quartic Gauss sums over Z[i].

g_2(r,n) = sum over x mod n of (x/n)   * e~(rx/n)
g_4(r,n) = sum over x mod n of (x/n)_4 * e~(rx/n)

for primary n, with the additive character e~(z) = e(Im z).  Two routes are
implemented and cross-checked everywhere:

* `gauss_sum_brute`: the literal sum over a complete residue system,
  vectorized through per-prime symbol tables;
* `g2_closed` / `g4_closed`: the prime-power evaluation tables combined
  multiplicatively (with the quartic cross-symbol factor), twisted by the
  conjugate symbol of the prime-to-the-modulus part of r.

The quartic base value g_4(w) of a prime has no elementary closed form;
it is computed by direct summation once per prime and cached.
"""

from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction

import numpy as np

from .symbols import quadratic_symbol, quartic_symbol
from .zint import (
    GFactorization,
    GInt,
    I,
    ONE,
    divexact,
    divides,
    factorize,
    norm,
)
from . import _kernel

# Gauss sums carry complex double values; symbols and norms stay exact
# until the final multiplication.
GaussSumValue = complex

_VALUE_OF_EXP = np.array([1, 1j, -1, -1j, 0], dtype=np.complex128)


def e_tilde(z: GInt, d: GInt) -> complex:
    """e~(z/d) = e(Im(z/d)), the additive character of Z[i].

    The imaginary part is an exact rational (Im(z*conj(d)) / N(d)), reduced
    mod 1 before the single transcendental call.
    """
    if d.is_zero():
        raise ZeroDivisionError("e_tilde with zero denominator")
    im = z.im * d.re - z.re * d.im
    frac = Fraction(im, d.norm()) % 1
    return cmath.exp(2j * math.pi * float(frac))


def _require_primary(n: GInt) -> None:
    if not n.is_primary():
        raise ValueError(f"modulus {n} is not primary")


def _residue_arrays(n: GInt) -> tuple[np.ndarray, np.ndarray]:
    g = math.gcd(n.re, n.im)
    width = n.norm() // g
    xr = np.repeat(np.arange(width, dtype=np.int64), g)
    xi = np.tile(np.arange(g, dtype=np.int64), width)
    return xr, xi


def _prime_exp_lookup(w: GInt):
    """Vectorized x -> exponent of (x/w)_4 (4 encodes the value 0)."""
    nw = norm(w)
    if w.im == 0:  # inert rational prime (primary associate -p)
        p = abs(w.re)
        tab = np.empty((p, p), dtype=np.int64)
        for x in range(p):
            for y in range(p):
                e = _kernel.quartic_symbol_exp(x, y, w.re, w.im)
                tab[x, y] = e if e >= 0 else 4
        return lambda xr, xi: tab[xr % p, xi % p]
    # split prime: residues are 0..N-1 on the real axis
    tab = np.empty(nw, dtype=np.int64)
    for x in range(nw):
        e = _kernel.quartic_symbol_exp(x, 0, w.re, w.im)
        tab[x] = e if e >= 0 else 4
    # lattice vector (s+ti)*w with imaginary part 1 gives the affine reduction
    g, s, t = _ext_gcd(w.im, w.re)
    assert g == 1
    w1_re = s * w.re - t * w.im
    return lambda xr, xi: tab[(xr - xi * w1_re) % nw]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def quartic_exp_table(n: GInt, fact: GFactorization | None = None):
    """Exponent of (x/n)_4 over the canonical residue system of primary n.

    Returns (xr, xi, exps) as int64 arrays; exps uses 4 for the value 0.
    """
    _require_primary(n)
    if fact is None:
        fact = factorize(n)
    xr, xi = _residue_arrays(n)
    total = np.zeros(len(xr), dtype=np.int64)
    zero = np.zeros(len(xr), dtype=bool)
    for w, l in fact.factors:
        e = _prime_exp_lookup(w)(xr, xi)
        zero |= e == 4
        total += l * e
    total = np.where(zero, 4, total % 4)
    return xr, xi, total


def gauss_sum_brute(order: int, r: GInt, n: GInt) -> GaussSumValue:
    """The literal Gauss sum of the given order (2 or 4) for primary n."""
    if order not in (2, 4):
        raise ValueError("order must be 2 or 4")
    _require_primary(n)
    if n == ONE:
        return 1 + 0j
    xr, xi, exps = quartic_exp_table(n)
    if order == 2:
        exps = np.where(exps == 4, 4, (2 * exps) % 4)
    nn = norm(n)
    # e~(r x / n) = e(Im(r * x * conj(n)) / N(n))
    w = r * n.conj()
    phase_idx = (w.re * xi + w.im * xr) % nn
    roots = np.exp(2j * np.pi * np.arange(nn) / nn)
    return complex(np.sum(_VALUE_OF_EXP[exps] * roots[phase_idx]))


def phi_prime_power(w: GInt, l: int) -> int:
    """#(Z[i]/(w^l))* = N(w)^(l-1) (N(w) - 1)."""
    nw = norm(w)
    return nw ** (l - 1) * (nw - 1)


def _valuation(r: GInt, w: GInt) -> tuple[int, GInt]:
    """(k, r / w^k) with w^k the exact power of w dividing r != 0."""
    k = 0
    while divides(w, r):
        r = divexact(r, w)
        k += 1
    return k, r


_base_cache: dict[tuple[int, int], tuple[complex, complex]] = {}
_base_lock = threading.Lock()


def g_base_prime(w: GInt) -> tuple[complex, complex]:
    """(g_2(w), g_4(w)) for a primary prime w, cached.

    g_2(w) = (i/w) N(w)^(1/2) exactly; g_4(w) is a direct N(w)-term sum.
    """
    key = (w.re, w.im)
    hit = _base_cache.get(key)
    if hit is not None:
        return hit
    g2 = quadratic_symbol(I, w).real * math.sqrt(norm(w))
    g4 = gauss_sum_brute(4, ONE, w)
    with _base_lock:
        _base_cache.setdefault(key, (complex(g2), g4))
    return _base_cache[key]


def _g2_prime_power(r: GInt, w: GInt, l: int) -> complex:
    nw = norm(w)
    if r.is_zero():
        h: float | int = l + 2  # effectively infinite
    else:
        h, cof = _valuation(r, w)
    if l <= h:
        return complex(phi_prime_power(w, l)) if l % 2 == 0 else 0j
    if l == h + 1:
        if l % 2 == 0:
            return complex(-(nw ** (l - 1)))
        sign = quadratic_symbol(I * cof, w).real
        return sign * nw ** (l - 1) * math.sqrt(nw)
    return 0j


def g2_closed(r: GInt, n: GInt,
              fact: GFactorization | None = None) -> GaussSumValue:
    """g_2(r, n) assembled from the five prime-power cases.

    Cases for w^l with h the w-valuation of r: 0 for odd l <= h;
    phi(w^l) for even l <= h; -N(w)^(l-1) for even l = h+1;
    (i r w^-h / w) N(w)^(l-1/2) for odd l = h+1; 0 for l >= h+2.
    Prime powers combine by plain multiplicativity.
    """
    _require_primary(n)
    if fact is None:
        fact = factorize(n)
    total = 1 + 0j
    for w, l in fact.factors:
        total *= _g2_prime_power(r, w, l)
        if total == 0:
            return 0j
    return total


def _g4_prime_power(r: GInt, w: GInt, l: int) -> complex:
    nw = norm(w)
    if r.is_zero():
        return complex(phi_prime_power(w, l)) if l % 4 == 0 else 0j
    k, cof = _valuation(r, w)
    if k >= l:
        core = complex(phi_prime_power(w, l)) if l % 4 == 0 else 0j
    elif l == k + 1:
        g2w, g4w = g_base_prime(w)
        if k % 4 == 0:
            core = nw**k * g4w
        elif k % 4 == 1:
            core = nw**k * g2w
        elif k % 4 == 2:
            core = nw**k * quartic_symbol(-ONE, w).value * g4w.conjugate()
        else:
            core = complex(-(nw**k))
    else:
        core = 0j
    if core == 0:
        return 0j
    twist = quartic_symbol(cof, w**l).conj().value
    return twist * core


def g4_closed(r: GInt, n: GInt,
              fact: GFactorization | None = None) -> GaussSumValue:
    """g_4(r, n) from the prime-power table and twisted multiplicativity.

    Coprime parts m, n combine as (n/m)_4 (m/n)_4 g_4(r,m) g_4(r,n); the
    prime-power values follow the six-case table relative to the base
    values g_4(w), g_2(w).
    """
    _require_primary(n)
    if fact is None:
        fact = factorize(n)
    parts = [(w, l, w**l) for w, l in fact.factors]
    total = 1 + 0j
    for idx, (w, l, power) in enumerate(parts):
        total *= _g4_prime_power(r, w, l)
        if total == 0:
            return 0j
        for _, _, earlier in parts[:idx]:
            cross = (quartic_symbol(earlier, power)
                     * quartic_symbol(power, earlier)).value
            total *= cross
    return total
