import math
import random

import pytest

from gaussdensity.symbols import (
    MINUS_I_VALUE,
    MINUS_ONE_VALUE,
    ONE_VALUE,
    QuarticValue,
    ZERO_VALUE,
    I_VALUE,
    quadratic_symbol,
    quartic_symbol,
    quartic_symbol_prime_oracle,
    reciprocity_check,
    reciprocity_sign_exp,
)
from gaussdensity.zint import (
    GInt,
    I,
    ONE,
    TWO_UNITS_RAMIFIED,
    gcd,
    is_prime,
    norm,
    residue_system,
    unit_power,
)


def primary_primes(max_norm):
    out = []
    r = math.isqrt(max_norm)
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            z = GInt(a, b)
            if 2 < a * a + b * b <= max_norm and z.is_primary() and is_prime(z):
                out.append(z)
    out.sort(key=lambda z: (norm(z), z.re, z.im))
    return out


def primary_elements(max_norm):
    r = math.isqrt(max_norm)
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            z = GInt(a, b)
            if 1 <= a * a + b * b <= max_norm and z.is_primary():
                yield z


class TestQuarticValue:
    def test_multiplication_table(self):
        assert I_VALUE * I_VALUE == MINUS_ONE_VALUE
        assert MINUS_I_VALUE * I_VALUE == ONE_VALUE
        assert ZERO_VALUE * I_VALUE == ZERO_VALUE

    def test_square_lands_in_quadratic_values(self):
        for v in (ZERO_VALUE, ONE_VALUE, I_VALUE, MINUS_ONE_VALUE, MINUS_I_VALUE):
            assert v.square() in (ZERO_VALUE, ONE_VALUE, MINUS_ONE_VALUE)

    def test_conj(self):
        assert I_VALUE.conj() == MINUS_I_VALUE
        assert ZERO_VALUE.conj() == ZERO_VALUE

    def test_complex_values(self):
        assert QuarticValue.from_exp(3).value == -1j
        assert ZERO_VALUE.value == 0j


class TestQuarticSymbol:
    def test_unit_denominator(self):
        assert quartic_symbol(GInt(7, 3), ONE) == ONE_VALUE
        assert quartic_symbol(ONE, GInt(3, -2)) == ONE_VALUE

    def test_supplement_i(self):
        assert quartic_symbol(I, GInt(3, -2)) == MINUS_I_VALUE

    def test_supplement_ramified(self):
        assert quartic_symbol(TWO_UNITS_RAMIFIED, GInt(-1, 2)) == MINUS_ONE_VALUE

    def test_zero_on_common_factor(self):
        w = GInt(3, -2)
        assert quartic_symbol(w * GInt(2, 5), w) == ZERO_VALUE

    def test_denominator_unit_discarded(self):
        # (a / i^t n) = (a / n) for odd n
        n = GInt(3, -2)
        for a in (I, GInt(2, 0), GInt(4, 1)):
            want = quartic_symbol(a, n)
            for t in range(4):
                assert quartic_symbol(a, unit_power(t) * n) == want

    def test_oracle_agreement(self):
        # every primary prime of norm <= 200 against the defining congruence
        for w in primary_primes(200):
            for a in residue_system(w):
                assert quartic_symbol(a, w) == quartic_symbol_prime_oracle(a, w), \
                    (a, w)

    def test_oracle_example(self):
        assert quartic_symbol_prime_oracle(I, GInt(3, -2)) == MINUS_I_VALUE

    def test_oracle_divisible(self):
        w = GInt(-1, 2)
        assert quartic_symbol_prime_oracle(w * GInt(3, 0), w) == ZERO_VALUE

    def test_numerator_multiplicative(self):
        rng = random.Random(10)
        dens = [n for n in primary_elements(100)]
        for n in dens:
            for _ in range(30):
                a = GInt(rng.randrange(-8, 9), rng.randrange(-8, 9))
                b = GInt(rng.randrange(-8, 9), rng.randrange(-8, 9))
                assert quartic_symbol(a * b, n) == \
                    quartic_symbol(a, n) * quartic_symbol(b, n)

    def test_denominator_multiplicative(self):
        rng = random.Random(11)
        elems = list(primary_elements(60))
        for _ in range(200):
            m, n = rng.choice(elems), rng.choice(elems)
            if not gcd(m, n).is_unit():
                continue
            a = GInt(rng.randrange(-9, 10), rng.randrange(-9, 10))
            assert quartic_symbol(a, m * n) == \
                quartic_symbol(a, m) * quartic_symbol(a, n)

    def test_composite_primary_against_factored_oracle(self):
        # (a/n)_4 over a composite primary denominator equals the product of
        # prime oracles: exercises the supplements on composite denominators
        cases = [
            (GInt(3, -2), GInt(-1, 2)),
            (GInt(-1, 2), GInt(-1, -2)),
            (GInt(-3, 0), GInt(3, 2)),
            (GInt(3, -2), GInt(3, -2)),
        ]
        rng = random.Random(12)
        for w1, w2 in cases:
            n = w1 * w2
            assert n.is_primary()
            for _ in range(40):
                a = GInt(rng.randrange(-20, 21), rng.randrange(-20, 21))
                want = (quartic_symbol_prime_oracle(a, w1)
                        * quartic_symbol_prime_oracle(a, w2))
                assert quartic_symbol(a, n) == want, (a, n)

    def test_even_denominator_rejected(self):
        with pytest.raises(ValueError):
            quartic_symbol(ONE, GInt(2, 0))
        with pytest.raises(ZeroDivisionError):
            quartic_symbol(ONE, GInt(0, 0))


class TestQuadraticSymbol:
    def test_is_square_of_quartic(self):
        rng = random.Random(13)
        for n in primary_elements(80):
            for _ in range(25):
                a = GInt(rng.randrange(-10, 11), rng.randrange(-10, 11))
                assert quadratic_symbol(a, n) == quartic_symbol(a, n).square()

    def test_example(self):
        assert quadratic_symbol(I, GInt(3, -2)) == MINUS_ONE_VALUE

    def test_symmetric_for_primary(self):
        m, n = GInt(-1, 2), GInt(3, -2)
        assert quadratic_symbol(m, n) == quadratic_symbol(n, m)

    def test_values_real(self):
        rng = random.Random(14)
        for _ in range(150):
            a = GInt(rng.randrange(-15, 16), rng.randrange(-15, 16))
            n = GInt(rng.randrange(-15, 16), rng.randrange(-15, 16))
            if n.is_zero() or not n.is_odd():
                continue
            assert quadratic_symbol(a, n).real in (-1, 0, 1)


class TestReciprocity:
    def test_sign_example(self):
        m, n = GInt(-1, 2), GInt(3, -2)
        # (N(m)-1)/4 = 1 odd, (N(n)-1)/4 = 3 odd -> sign -1
        assert reciprocity_sign_exp(m, n) == 2
        assert quartic_symbol_prime_oracle(m, n) == \
            quartic_symbol_prime_oracle(n, m) * MINUS_ONE_VALUE

    def test_conjugate_pair(self):
        assert reciprocity_check(GInt(-1, 2), GInt(-1, -2))

    def test_even_sign_branch(self):
        # N(-3) - 1 = 8, (N-1)/4 even -> sign +1
        m, n = GInt(-3, 0), GInt(3, -2)
        assert reciprocity_sign_exp(m, n) == 0
        assert reciprocity_check(m, n)

    def test_all_pairs_small(self):
        primes = primary_primes(150)
        for i, m in enumerate(primes):
            for n in primes[i + 1:]:
                assert reciprocity_check(m, n), (m, n)
