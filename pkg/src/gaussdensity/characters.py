"""The Kronecker-symbol Hecke characters of the two families.

For odd c the quadratic character chi_{i(1+i)^5 c} (modulus (1+i)^5 c) and
the quartic character chi_{(1+i)^7 c} (modulus (1+i)^7 c) evaluate at n by
splitting off the unit, n = i^t n0 with n0 primary, and taking the
quadratic resp. quartic residue symbol of the numerator at n0.  The unit
and ramified parts of the numerator are folded in through the closed
supplement exponents rather than symbol recursion; that pair of table
lookups is what the density experiment's inner loop evaluates millions of
times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from .symbols import ONE_VALUE, QuarticValue, ZERO_VALUE, quadratic_symbol, quartic_symbol
from .zint import (
    GInt,
    ONE,
    TWO_UNITS_RAMIFIED,
    divexact,
    factorize,
    gcd,
    norm,
    primary_decompose,
    residue_system,
)

Family = Literal["quadratic", "quartic"]

FAMILIES: tuple[Family, ...] = ("quadratic", "quartic")


class NotSquarefreeError(ValueError):
    """The parameter c of a character must be square-free."""


def supplement_exponent(family: Family, n0: GInt) -> int:
    """Exponent of the unit/ramified numerator part at primary n0.

    quadratic: (i (1+i)^5 / n0) = i^((1-a) + (a-b-1-b^2)/2)
    quartic:   ((1+i)^7 / n0)_4 = i^(7 (a-b-1-b^2)/4)

    with n0 = a+bi; both follow from the supplements (i/n0)_4 = i^((1-a)/2)
    and ((1+i)/n0)_4 = i^((a-b-1-b^2)/4).
    """
    a, b = n0.re, n0.im
    ram = a - b - 1 - b * b
    if family == "quadratic":
        return ((1 - a) + ram // 2) % 4
    return (7 * (ram // 4)) % 4


@dataclass(frozen=True)
class HeckeCharacter:
    """A member of one of the two families, fixed by (family, c)."""

    family: Family
    c: GInt
    modulus: GInt
    conjugated: bool = False

    @property
    def order(self) -> int:
        return 2 if self.family == "quadratic" else 4

    def __call__(self, n: GInt) -> QuarticValue:
        return self.eval(n)

    def eval(self, n: GInt) -> QuarticValue:
        """Character value at n; 0 unless gcd(n, modulus) = 1."""
        if n.is_zero() or not n.is_odd():
            return ZERO_VALUE
        n0 = primary_decompose(n).core
        if self.family == "quadratic":
            sym = quadratic_symbol(self.c, n0)
        else:
            sym = quartic_symbol(self.c, n0)
        if sym.is_zero():
            return ZERO_VALUE
        value = QuarticValue.from_exp(supplement_exponent(self.family, n0)) * sym
        return value.conj() if self.conjugated else value

    def conjugate(self) -> HeckeCharacter:
        return HeckeCharacter(self.family, self.c, self.modulus,
                              not self.conjugated)

    def is_primitive(self) -> bool:
        return primitive_brute(self.modulus, self.eval)

    def label(self) -> str:
        c = self.c
        return f"{self.family}[c={c}]"


def make_character(family: Family, c: GInt,
                   allow_non_squarefree: bool = False) -> HeckeCharacter:
    """Build and validate a family character for odd c.

    Non-square-free c breaks primitivity and is rejected, unless explicitly
    allowed for experiments.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if c.is_zero() or not c.is_odd():
        raise ValueError(f"character parameter {c} must be odd")
    if not factorize(c).is_squarefree() and not allow_non_squarefree:
        raise NotSquarefreeError(f"c = {c} is not square-free")
    exponent = 5 if family == "quadratic" else 7
    modulus = TWO_UNITS_RAMIFIED**exponent * c
    return HeckeCharacter(family, c, modulus)


def _proper_divisors_up_to_associates(n: GInt) -> Iterable[GInt]:
    fact = factorize(n)
    divisors = [ONE]
    for prime, mult in fact.factors:
        divisors = [d * prime**e for d in divisors for e in range(mult + 1)]
    full_norm = norm(n)
    return (d for d in divisors if norm(d) < full_norm)


def primitive_brute(modulus: GInt,
                    evaluate: Callable[[GInt], QuarticValue]) -> bool:
    """Exhaustive primitivity check for small moduli.

    The character is primitive iff for every proper divisor d of the
    modulus there are n = n' mod d, both coprime to the modulus, with
    different values; equivalently some n = 1 mod d with value != 1.
    """
    if norm(modulus) > 200_000:
        raise ValueError("modulus too large for the brute primitivity scan")
    for d in _proper_divisors_up_to_associates(modulus):
        cof = divexact(modulus, d)
        distinguished = False
        for k in residue_system(cof):
            n = ONE + d * k
            if n.is_zero() or not gcd(n, modulus).is_unit():
                continue
            if evaluate(n) != ONE_VALUE:
                distinguished = True
                break
        if not distinguished:
            return False
    return True
