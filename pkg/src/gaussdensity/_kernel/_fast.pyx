# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled residue-symbol kernels (int64), mirroring fallback.py.

Callers must keep coordinates below 2**25 so every intermediate product
fits in a signed 64-bit integer; `gaussdensity._kernel` enforces that.
"""

HAVE_COMPILED = True


cdef inline long long _round_half_down(long long p, long long q) noexcept nogil:
    # nearest integer to p/q for q > 0, ties toward -infinity
    cdef long long num = 2 * p + q - 1
    cdef long long den = 2 * q
    cdef long long r = num / den
    if num % den != 0 and (num < 0) != (den < 0):
        r -= 1
    return r


cdef inline int _mod4(long long x) noexcept nogil:
    cdef int r = <int>(x & 3)
    return r


cdef int _symbol_exp_ll(long long a, long long b, long long c, long long d,
                        bint quartic) noexcept nogil:
    cdef long long nn, pr, pi, qr, qi, t2
    cdef int t, acc, e, steps
    nn = c * c + d * d
    if nn == 0:
        return -8  # zero denominator
    if nn % 2 == 0:
        return -7  # even denominator
    # denominator to primary core, discarding the unit
    for t in range(4):
        if (_mod4(c) == 1 and _mod4(d) == 0) or (_mod4(c) == 3 and _mod4(d) == 2):
            break
        t2 = c
        c = d
        d = -t2
    acc = 0
    steps = 0
    while True:
        nn = c * c + d * d
        if nn == 1:
            return acc & 3
        pr = a * c + b * d
        pi = b * c - a * d
        qr = _round_half_down(pr, nn)
        qi = _round_half_down(pi, nn)
        t2 = a - qr * c + qi * d
        b = b - qr * d - qi * c
        a = t2
        if a == 0 and b == 0:
            return -1
        e = 0
        while ((a * a + b * b) & 1) == 0:
            t2 = (a + b) >> 1
            b = (b - a) >> 1
            a = t2
            e += 1
        for t in range(4):
            if (_mod4(a) == 1 and _mod4(b) == 0) or (_mod4(a) == 3 and _mod4(b) == 2):
                break
            t2 = a
            a = b
            b = -t2
        if quartic:
            acc += t * <int>(((1 - c) / 2) & 3) + e * <int>(((c - d - 1 - d * d) / 4) & 3)
        else:
            acc += t * <int>((1 - c) & 3) + e * <int>(((c - d - 1 - d * d) / 2) & 3)
        if a == 1 and b == 0:
            return acc & 3
        if quartic and (((nn - 1) / 4) & 1) and (((a * a + b * b - 1) / 4) & 1):
            acc += 2
        t2 = a
        a = c
        c = t2
        t2 = b
        b = d
        d = t2
        steps += 1
        if steps > 140:
            return -9  # non-termination: arithmetic bug


def quartic_symbol_exp(long long a_re, long long a_im,
                       long long n_re, long long n_im):
    """Exponent of (a/n)_4, or -1 when gcd(a, n) != 1."""
    cdef int e = _symbol_exp_ll(a_re, a_im, n_re, n_im, True)
    if e == -8:
        raise ZeroDivisionError("symbol with zero denominator")
    if e == -7:
        raise ValueError("symbol denominator must be odd")
    if e == -9:
        raise ArithmeticError("symbol recursion failed to terminate")
    return e


def quadratic_symbol_exp(long long a_re, long long a_im,
                         long long n_re, long long n_im):
    """Exponent (0 or 2) of (a/n), or -1 when gcd(a, n) != 1."""
    cdef int e = _symbol_exp_ll(a_re, a_im, n_re, n_im, False)
    if e == -8:
        raise ZeroDivisionError("symbol with zero denominator")
    if e == -7:
        raise ValueError("symbol denominator must be odd")
    if e == -9:
        raise ArithmeticError("symbol recursion failed to terminate")
    return e


def prime_sum(long long c_re, long long c_im,
              signed char[::1] sup_exp,
              long long[::1] p_re, long long[::1] p_im,
              double[::1] weights,
              bint quartic):
    """sum_j weights[j] * i**(sup_exp[j] + exp(c / primes[j]))."""
    cdef Py_ssize_t j, m = weights.shape[0]
    cdef double total_re = 0.0, total_im = 0.0, w
    cdef int e
    with nogil:
        for j in range(m):
            e = _symbol_exp_ll(c_re, c_im, p_re[j], p_im[j], quartic)
            if e < -1:
                with gil:
                    raise ArithmeticError("bad prime in prime_sum")
            if e == -1:
                continue
            e = (e + sup_exp[j]) & 3
            w = weights[j]
            if e == 0:
                total_re += w
            elif e == 1:
                total_im += w
            elif e == 2:
                total_re -= w
            else:
                total_im -= w
    return complex(total_re, total_im)
