"""Exact arithmetic in the ring of Gaussian integers Z[i].

Everything downstream (residue symbols, Gauss sums, character sums) is built
on the `GInt` type defined here: ring operations, Euclidean division with a
deterministic rounding rule, gcd, primality, factorization into primary
primes, primary decomposition and canonical residue systems.

Coordinates are exact integers, but the type enforces the working range of
the package: norms must stay below 2**63.  Desk-scale experiments need norms
up to ~1e12, so the cap is generous, and it keeps values interchangeable
with the compiled int64 kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

NORM_CAP = 1 << 63

# Residue classes of (re mod 4, im mod 4) that mark a primary element,
# i.e. an odd element congruent to 1 mod (1+i)^3.
_PRIMARY_CLASSES = ((1, 0), (3, 2))


class GIntOverflowError(OverflowError):
    """Raised when a result's norm would reach 2**63."""


class GInt:
    """A Gaussian integer re + im*i with checked 63-bit norm."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: int, im: int = 0) -> None:
        n = re * re + im * im
        if n >= NORM_CAP:
            raise GIntOverflowError(f"norm {n} of {re}{im:+}i exceeds 2**63")
        self._re = re
        self._im = im

    @property
    def re(self) -> int:
        return self._re

    @property
    def im(self) -> int:
        return self._im

    def norm(self) -> int:
        return self._re * self._re + self._im * self._im

    def conj(self) -> GInt:
        return GInt(self._re, -self._im)

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_odd(self) -> bool:
        """Odd means coprime to 1+i, i.e. odd norm."""
        return (self._re + self._im) % 2 == 1

    def is_primary(self) -> bool:
        return (self._re % 4, self._im % 4) in _PRIMARY_CLASSES

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: GInt) -> GInt:
        return GInt(self._re + other._re, self._im + other._im)

    def __sub__(self, other: GInt) -> GInt:
        return GInt(self._re - other._re, self._im - other._im)

    def __mul__(self, other: GInt) -> GInt:
        a, b, c, d = self._re, self._im, other._re, other._im
        return GInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> GInt:
        return GInt(-self._re, -self._im)

    def __pow__(self, e: int) -> GInt:
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GInt):
            return self._re == other._re and self._im == other._im
        if isinstance(other, int):
            return self._re == other and self._im == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(self._re, self._im)

    def __repr__(self) -> str:
        return f"GInt({self._re}, {self._im})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        return f"{self._re}{self._im:+}i"


ZERO = GInt(0, 0)
ONE = GInt(1, 0)
I = GInt(0, 1)
TWO_UNITS_RAMIFIED = GInt(1, 1)  # 1+i, the ramified prime
UNITS = (ONE, I, GInt(-1, 0), GInt(0, -1))


def unit_power(t: int) -> GInt:
    """i**t for any integer t."""
    return UNITS[t % 4]


def norm(z: GInt) -> int:
    """N(z) = re^2 + im^2; completely multiplicative."""
    return z.norm()


class PrimaryDecomp(NamedTuple):
    """n = i**unit_exp * core with core primary."""

    unit_exp: int
    core: GInt


def _round_half_down(p: int, q: int) -> int:
    """Nearest integer to p/q for q > 0, ties toward -infinity."""
    return (2 * p + q - 1) // (2 * q)


def divrem(n: GInt, d: GInt) -> tuple[GInt, GInt]:
    """Euclidean division n = q*d + r with norm(r) <= norm(d)/2.

    Each coordinate of n/d is rounded to the nearest integer, ties toward
    -infinity; the fixed tie rule keeps gcd paths reproducible.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero in Z[i]")
    nd = d.norm()
    # n / d = n * conj(d) / N(d)
    pr = n.re * d.re + n.im * d.im
    pi = n.im * d.re - n.re * d.im
    q = GInt(_round_half_down(pr, nd), _round_half_down(pi, nd))
    return q, n - q * d


def divexact(n: GInt, d: GInt) -> GInt:
    """n / d when d divides n exactly."""
    q, r = divrem(n, d)
    if not r.is_zero():
        raise ValueError(f"{d} does not divide {n}")
    return q


def divides(d: GInt, n: GInt) -> bool:
    if d.is_zero():
        return n.is_zero()
    return divrem(n, d)[1].is_zero()


def canonical_unit_associate(z: GInt) -> GInt:
    """The associate of z != 0 with re > 0 and im >= 0."""
    if z.is_zero():
        raise ValueError("zero has no canonical associate")
    for _ in range(4):
        if z.re > 0 and z.im >= 0:
            return z
        z = z * I
    raise AssertionError("unreachable")


def primary_decompose(n: GInt) -> PrimaryDecomp:
    """Unique (t, core) with n = i**t * core and core primary.

    Defined for odd n only; exactly one of the four associates of an odd
    Gaussian integer lands in the residue classes (1,0) or (3,2) mod 4.
    """
    if n.is_zero() or not n.is_odd():
        raise ValueError(f"primary decomposition needs an odd element, got {n}")
    cand = n
    for t in range(4):
        if cand.is_primary():
            return PrimaryDecomp(t, cand)
        # peeling one factor of i: n = i^(t+1) * (n * i^-(t+1))
        cand = GInt(cand.im, -cand.re)  # cand / i
    raise AssertionError(f"no primary associate of {n}")


def gcd(a: GInt, b: GInt) -> GInt:
    """A greatest common divisor, canonically normalized.

    Result is the primary core when odd, otherwise the associate with
    re > 0, im >= 0.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    if a.is_odd():
        return primary_decompose(a).core
    return canonical_unit_associate(a)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
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


def _box_shape(n: GInt) -> tuple[int, int]:
    """(width N/g, height g) of the canonical residue box for n != 0."""
    g = math.gcd(n.re, n.im)
    return n.norm() // g, g


def residue_system(n: GInt) -> Iterator[GInt]:
    """The canonical complete residue system mod n.

    Yields {x + yi : 0 <= x < N/g, 0 <= y < g} with g = gcd(|re|, |im|).
    The multiples of n meeting the horizontal axis form (N/g)Z and the
    image of the lattice on the y-axis is gZ, so the box is a transversal;
    the cardinality/incongruence invariants are enforced by tests.
    """
    if n.is_zero():
        raise ZeroDivisionError("no residue system mod 0")
    width, height = _box_shape(n)
    for x in range(width):
        for y in range(height):
            yield GInt(x, y)


def canonical_residue(x: GInt, n: GInt) -> GInt:
    """The unique member of residue_system(n) congruent to x mod n."""
    if n.is_zero():
        raise ZeroDivisionError("no residues mod 0")
    # Coarse reduction first so the affine step below works on small numbers.
    x = divrem(x, n)[1]
    width, height = _box_shape(n)
    # Lattice vector with imaginary part g: (s + t*i) * n, where
    # s*im + t*re = g from the extended gcd.
    g, s, t = _ext_gcd(n.im, n.re)
    w1_re = s * n.re - t * n.im
    u, v = x.re, x.im
    k = v // height
    u -= k * w1_re
    v -= k * g
    u %= width
    return GInt(u, v)


def powmod(a: GInt, e: int, n: GInt) -> GInt:
    """Canonical residue of a**e mod n by square-and-multiply.

    Intermediates are kept norm-reduced with balanced remainders (divrem),
    which bounds coordinates by ~sqrt(N(n)) instead of N(n); the canonical
    box representative is produced once at the end.
    """
    if n.is_zero():
        raise ZeroDivisionError("powmod modulus is zero")
    if e < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = divrem(a, n)[1]
    while e:
        if e & 1:
            result = divrem(result * base, n)[1]
        e >>= 1
        if e:
            base = divrem(base * base, n)[1]
    return canonical_residue(result, n)


# -- primality and factorization ------------------------------------------


def _is_prime_int(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x, y, d = 2, 2, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 over Z."""
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime_int(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = 17
        found = False
        while d * d <= m and d < 10_000:
            if m % d == 0:
                stack += [d, m // d]
                found = True
                break
            d += 2
        if not found:
            d = _pollard_rho(m)
            stack += [d, m // d]
    return out


def is_prime(n: GInt) -> bool:
    """Primality in Z[i] through the norm.

    Prime norm implies prime; otherwise only associates of rational primes
    p = 3 mod 4 (norm p^2) are prime.
    """
    if n.is_zero() or n.is_unit():
        return False
    nn = n.norm()
    if _is_prime_int(nn):
        return True
    if n.re == 0 or n.im == 0:
        p = abs(n.re) + abs(n.im)
        return p % 4 == 3 and _is_prime_int(p)
    return False


def _sqrt_minus_one(p: int) -> int:
    """A square root of -1 mod p for p = 1 mod 4."""
    for r in range(2, p):
        if pow(r, (p - 1) // 2, p) == p - 1:
            return pow(r, (p - 1) // 4, p)
    raise ArithmeticError(f"no quadratic nonresidue found mod {p}")


def gaussian_prime_above(p: int) -> GInt:
    """A Gaussian prime dividing the split rational prime p = 1 mod 4."""
    z = _sqrt_minus_one(p)
    return gcd(GInt(p, 0), GInt(z, 1))


@dataclass(frozen=True)
class GFactorization:
    """n = i**unit_exp * product of prime powers.

    Odd prime factors are primary; an even part is carried by the ramified
    prime 1+i (which has no primary associate).  Factors are sorted by
    (norm, re, im).
    """

    unit_exp: int
    factors: tuple[tuple[GInt, int], ...]

    def product(self) -> GInt:
        out = unit_power(self.unit_exp)
        for prime, mult in self.factors:
            out = out * prime**mult
        return out

    def is_squarefree(self) -> bool:
        return all(mult == 1 for _, mult in self.factors)

    def num_prime_factors(self) -> int:
        return len(self.factors)


def factorize(n: GInt) -> GFactorization:
    """Factor n != 0 into a unit and prime powers.

    Works through the factorization of N(n) over Z, extracting a Gaussian
    prime above each split rational prime by gcd.
    """
    if n.is_zero():
        raise ValueError("cannot factor 0")
    factors: list[tuple[GInt, int]] = []
    work = n
    e2 = 0
    while not work.is_odd():
        work = divexact(work, TWO_UNITS_RAMIFIED)
        e2 += 1
    if e2:
        factors.append((TWO_UNITS_RAMIFIED, e2))
    for p, ep in sorted(_factor_int(work.norm()).items()):
        if p % 4 == 3:
            prime = GInt(-p, 0)  # primary associate of the inert prime p
            mult = ep // 2
            for _ in range(mult):
                work = divexact(work, prime)
            factors.append((prime, mult))
        else:
            # split prime: decide multiplicities of the two conjugates
            pi = primary_decompose(gaussian_prime_above(p)).core
            for prime in (pi, primary_decompose(pi.conj()).core):
                mult = 0
                while divides(prime, work):
                    work = divexact(work, prime)
                    mult += 1
                if mult:
                    factors.append((prime, mult))
    if not work.is_unit():
        raise ArithmeticError(f"factorization of {n} left cofactor {work}")
    unit_exp = UNITS.index(work)
    factors.sort(key=lambda f: (f[0].norm(), f[0].re, f[0].im))
    return GFactorization(unit_exp, tuple(factors))
