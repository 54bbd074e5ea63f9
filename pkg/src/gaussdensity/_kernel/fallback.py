"""Pure-Python residue-symbol kernels.

These are the reference implementations of the hot loops: quartic and
quadratic residue symbols on raw integer coordinates, and the per-parameter
prime sum of the explicit formula.  The compiled extension (_fast.pyx)
mirrors this module exactly; either one is selected at import time by
`gaussdensity._kernel`.

Symbol convention: the return value is the exponent e of i**e, or -1 when
the symbol vanishes (non-coprime arguments).

The evaluator is a Jacobi-style recursion driven by quartic reciprocity
for primary elements,

    (m/n)_4 = (n/m)_4 * (-1)^((N(m)-1)/4 * (N(n)-1)/4),

with unit and ramified parts of the numerator folded in through the
supplements (i/n)_4 = i^((1-a)/2) and ((1+i)/n)_4 = i^((a-b-1-b^2)/4)
for primary n = a+bi.  Denominator norms at least halve per swap, so the
recursion depth is bounded by 2*log2(N(n)).
"""

from __future__ import annotations

HAVE_COMPILED = False

_RE_OF_I_POW = (1, 0, -1, 0)
_IM_OF_I_POW = (0, 1, 0, -1)


def _primary_core(a: int, b: int) -> tuple[int, int, int]:
    """(t, a0, b0) with a+bi = i**t * (a0+b0*i) and a0+b0*i primary."""
    for t in range(4):
        ra, rb = a % 4, b % 4
        if (ra == 1 and rb == 0) or (ra == 3 and rb == 2):
            return t, a, b
        a, b = b, -a  # divide by i
    raise ValueError("no primary associate (element is even or zero)")


def _symbol_exp(a: int, b: int, c: int, d: int, quartic: bool) -> int:
    nn = c * c + d * d
    if nn == 0:
        raise ZeroDivisionError("symbol with zero denominator")
    if nn % 2 == 0:
        raise ValueError("symbol denominator must be odd")
    _, c, d = _primary_core(c, d)
    acc = 0
    steps = 0
    max_steps = 2 * max(1, nn).bit_length() + 8
    while True:
        nn = c * c + d * d
        if nn == 1:
            return acc % 4
        # reduce numerator mod denominator (balanced remainder)
        pr = a * c + b * d
        pi = b * c - a * d
        qr = (2 * pr + nn - 1) // (2 * nn)
        qi = (2 * pi + nn - 1) // (2 * nn)
        a, b = a - qr * c + qi * d, b - qr * d - qi * c
        if a == 0 and b == 0:
            return -1
        # strip (1+i)^e * i^t so the rest is primary
        e = 0
        while (a * a + b * b) % 2 == 0:
            a, b = (a + b) // 2, (b - a) // 2
            e += 1
        t, a, b = _primary_core(a, b)
        if quartic:
            acc += t * ((1 - c) // 2) + e * ((c - d - 1 - d * d) // 4)
        else:
            acc += t * (1 - c) + e * ((c - d - 1 - d * d) // 2)
        if a == 1 and b == 0:
            return acc % 4
        if quartic and ((nn - 1) // 4) & 1 and ((a * a + b * b - 1) // 4) & 1:
            acc += 2
        a, b, c, d = c, d, a, b
        steps += 1
        if steps > max_steps:  # pragma: no cover
            raise ArithmeticError("symbol recursion failed to terminate")


def quartic_symbol_exp(a_re: int, a_im: int, n_re: int, n_im: int) -> int:
    """Exponent of (a/n)_4, or -1 when gcd(a, n) != 1."""
    return _symbol_exp(a_re, a_im, n_re, n_im, True)


def quadratic_symbol_exp(a_re: int, a_im: int, n_re: int, n_im: int) -> int:
    """Exponent (0 or 2) of (a/n), or -1 when gcd(a, n) != 1."""
    return _symbol_exp(a_re, a_im, n_re, n_im, False)


def prime_sum(c_re: int, c_im: int, sup_exp, p_re, p_im, weights,
              quartic: bool) -> complex:
    """sum_j weights[j] * i**(sup_exp[j] + exp(c / primes[j])).

    Primes dividing c contribute 0.  `sup_exp` carries the per-prime
    exponent of the character's unit/ramified numerator part, so the
    summand is the full character value times the prime weight.
    """
    total_re = 0.0
    total_im = 0.0
    for j in range(len(weights)):
        e = _symbol_exp(c_re, c_im, int(p_re[j]), int(p_im[j]), quartic)
        if e < 0:
            continue
        e = (e + sup_exp[j]) & 3
        w = weights[j]
        total_re += w * _RE_OF_I_POW[e]
        total_im += w * _IM_OF_I_POW[e]
    return complex(total_re, total_im)
