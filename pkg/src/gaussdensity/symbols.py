"""Quartic and quadratic residue symbols in Z[i].

Two independent evaluation routes are provided:

* `quartic_symbol` / `quadratic_symbol`: fast Jacobi-style evaluators that
  never factor anything, driven by the reciprocity law, the supplements for
  i and 1+i, and Euclidean reduction (see `gaussdensity._kernel`).
* `quartic_symbol_prime_oracle`: the defining congruence
  a^((N(w)-1)/4) mod w for prime modulus, used to cross-check the fast
  route symbol by symbol.

For odd composite denominators the symbol is the product over the primary
prime factorization; the denominator's unit is discarded (symbols are
defined on primary elements and extended multiplicatively).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .zint import GInt, canonical_residue, norm, powmod, unit_power


@dataclass(frozen=True, slots=True)
class QuarticValue:
    """An element of {0, 1, i, -1, -i}: exp e encodes i**e, None encodes 0."""

    exp: int | None

    @classmethod
    def from_exp(cls, e: int | None) -> QuarticValue:
        return _CACHE[e & 3] if e is not None else ZERO_VALUE

    def is_zero(self) -> bool:
        return self.exp is None

    @property
    def value(self) -> complex:
        if self.exp is None:
            return 0j
        return (1 + 0j, 1j, -1 + 0j, -1j)[self.exp]

    @property
    def real(self) -> int:
        """Integer value for symbols known to be quadratic (0, +1, -1)."""
        if self.exp is None:
            return 0
        if self.exp % 2:
            raise ValueError(f"i**{self.exp} is not real")
        return 1 if self.exp == 0 else -1

    def __mul__(self, other: QuarticValue) -> QuarticValue:
        if self.exp is None or other.exp is None:
            return ZERO_VALUE
        return QuarticValue.from_exp(self.exp + other.exp)

    def __pow__(self, k: int) -> QuarticValue:
        if self.exp is None:
            return self if k else ONE_VALUE
        return QuarticValue.from_exp(self.exp * k)

    def conj(self) -> QuarticValue:
        if self.exp is None:
            return self
        return QuarticValue.from_exp(-self.exp)

    def square(self) -> QuarticValue:
        return self * self

    def __complex__(self) -> complex:
        return self.value

    def __repr__(self) -> str:
        if self.exp is None:
            return "QuarticValue(0)"
        return f"QuarticValue({('1', 'i', '-1', '-i')[self.exp]})"


_CACHE = tuple(QuarticValue(e) for e in range(4))
ZERO_VALUE = QuarticValue(None)
ONE_VALUE, I_VALUE, MINUS_ONE_VALUE, MINUS_I_VALUE = _CACHE


def quartic_symbol(a: GInt, n: GInt) -> QuarticValue:
    """(a/n)_4 for odd n != 0; 0 iff gcd(a, n) != 1, and (./1)_4 = 1."""
    e = _kernel.quartic_symbol_exp(a.re, a.im, n.re, n.im)
    return QuarticValue.from_exp(e) if e >= 0 else ZERO_VALUE


def quadratic_symbol(a: GInt, n: GInt) -> QuarticValue:
    """(a/n) in {0, 1, -1}, via its own quadratic-reciprocity recursion.

    Coincides with quartic_symbol(a, n)**2 everywhere; the two recursions
    are kept separate so they can check each other.
    """
    e = _kernel.quadratic_symbol_exp(a.re, a.im, n.re, n.im)
    return QuarticValue.from_exp(e) if e >= 0 else ZERO_VALUE


def quartic_symbol_prime_oracle(a: GInt, w: GInt) -> QuarticValue:
    """(a/w)_4 for primary prime w by the defining congruence.

    Computes a^((N(w)-1)/4) mod w and matches it against the four units;
    a mismatch means an arithmetic bug and raises.
    """
    nw = norm(w)
    if nw == 2:
        raise ValueError("oracle undefined at the ramified prime")
    r = powmod(a, (nw - 1) // 4, w)
    if r.is_zero():
        return ZERO_VALUE
    for t in range(4):
        if r == canonical_residue(unit_power(t), w):
            return QuarticValue.from_exp(t)
    raise ArithmeticError(f"a^((N-1)/4) mod {w} not a unit for a={a}")


def reciprocity_sign_exp(m: GInt, n: GInt) -> int:
    """Exponent (0 or 2) of the reciprocity sign (-1)^((N(m)-1)/4*(N(n)-1)/4)."""
    if ((norm(m) - 1) // 4) & 1 and ((norm(n) - 1) // 4) & 1:
        return 2
    return 0


def reciprocity_check(m: GInt, n: GInt) -> bool:
    """Verify the swap law on a pair of primary primes with the oracle.

    True iff oracle(m/n)_4 = oracle(n/m)_4 * (-1)^((N(n)-1)/4*(N(m)-1)/4).
    """
    lhs = quartic_symbol_prime_oracle(m, n)
    rhs = quartic_symbol_prime_oracle(n, m) * QuarticValue.from_exp(
        reciprocity_sign_exp(m, n))
    return lhs == rhs
