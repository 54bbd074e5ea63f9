import math

import numpy as np
import pytest

from gaussdensity.sieve import (
    AnnulusSpec,
    GPrime,
    chebyshev_sum,
    mobius,
    primary_primes_upto,
    rational_primes_upto,
    squarefree_annulus,
    squarefree_count_check,
    squarefree_density_constant,
    squarefree_odd_count,
    squarefree_odd_in_range,
    two_square_decomposition,
    zeta_qi_2,
)
from gaussdensity.zint import GInt, factorize, is_prime, norm, unit_power


class TestPrimaryPrimes:
    def test_small(self):
        got = [g.value for g in primary_primes_upto(10)]
        assert got == [GInt(-1, -2), GInt(-1, 2), GInt(-3, 0)]

    def test_ramified_excluded(self):
        assert primary_primes_upto(2) == []

    def test_all_prime_primary_unique(self):
        primes = primary_primes_upto(3000)
        seen = set()
        for g in primes:
            assert g.norm == norm(g.value) <= 3000
            assert g.log_norm == pytest.approx(math.log(g.norm))
            assert g.value.is_primary()
            assert is_prime(g.value)
            assert g.value not in seen
            seen.add(g.value)

    def test_complete_against_scan(self):
        bound = 600
        primes = {g.value for g in primary_primes_upto(bound)}
        r = math.isqrt(bound)
        direct = set()
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                z = GInt(a, b)
                if 2 < norm(z) <= bound and z.is_primary() and is_prime(z):
                    direct.add(z)
        assert primes == direct

    def test_two_square(self):
        for p in rational_primes_upto(5000):
            p = int(p)
            if p % 4 == 1:
                a, b = two_square_decomposition(p)
                assert a * a + b * b == p


class TestSquarefree:
    def test_nine_excluded(self):
        cs = squarefree_odd_in_range(1, 100)
        assert GInt(9, 0) not in cs
        assert GInt(3, 0) in cs

    def test_annulus_membership(self):
        spec = AnnulusSpec(5)
        cs = squarefree_annulus(spec)
        assert GInt(2, 1) in cs
        for c in cs:
            assert 5 <= norm(c) <= 10
            assert c.is_odd()

    def test_against_factorize_filter(self):
        for X in (50, 400):
            got = set(squarefree_odd_in_range(X, 2 * X))
            r = math.isqrt(2 * X)
            want = set()
            for a in range(-r, r + 1):
                for b in range(-r, r + 1):
                    c = GInt(a, b)
                    if (X <= norm(c) <= 2 * X and c.is_odd()
                            and factorize(c).is_squarefree()):
                        want.add(c)
            assert got == want

    def test_sorted_deterministically(self):
        cs = squarefree_annulus(AnnulusSpec(200))
        keys = [(norm(c), c.re, c.im) for c in cs]
        assert keys == sorted(keys)

    def test_mobius_inversion_reproduces_count(self):
        # sum over primary l of mu(l) * #{odd c: N(c) <= X, l^2 | c}
        X = 800
        r = math.isqrt(X)
        total = 0
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                el = GInt(a, b)
                if el.is_zero() or not el.is_primary() or norm(el) ** 2 > X:
                    continue
                sq = el * el
                cap = X // norm(sq)
                cnt = 0
                dr = math.isqrt(cap)
                for x in range(-dr, dr + 1):
                    for y in range(-dr, dr + 1):
                        d = GInt(x, y)
                        if 0 < norm(d) <= cap and (sq * d).is_odd():
                            cnt += 1
                total += mobius(el) * cnt
        assert total == squarefree_odd_count(X)


class TestMobius:
    def test_unit(self):
        assert mobius(unit_power(2)) == 1

    def test_prime(self):
        assert mobius(GInt(3, -2)) == -1

    def test_two_primes(self):
        assert mobius(GInt(3, -2) * GInt(-1, 2)) == 1

    def test_square(self):
        assert mobius(GInt(9, 0)) == 0


class TestCounting:
    def test_zeta_qi_value(self):
        # zeta(2) * Catalan
        assert zeta_qi_2() == pytest.approx((math.pi**2 / 6) * 0.915965594177219,
                                            abs=1e-9)

    def test_density_constant(self):
        assert squarefree_density_constant() == pytest.approx(1.390052, abs=1e-5)

    def test_ratio_near_one(self):
        count, predicted, ratio = squarefree_count_check(10_000)
        assert count == pytest.approx(predicted, rel=0.02)
        assert ratio == count / predicted

    def test_ratio_improves(self):
        _, _, r3 = squarefree_count_check(1000)
        _, _, r4 = squarefree_count_check(10_000)
        assert abs(r4 - 1) < abs(r3 - 1) + 0.01

    def test_small_x_rejected(self):
        with pytest.raises(ValueError):
            squarefree_count_check(50)


class TestChebyshev:
    def test_monotone(self):
        primes = primary_primes_upto(5000)
        values = [chebyshev_sum(x, primes) for x in (100, 1000, 5000)]
        assert values == sorted(values)

    def test_small_x(self):
        # no primary prime has norm <= 3
        assert chebyshev_sum(3) == 0.0

    def test_tracks_log(self):
        primes = primary_primes_upto(100_000)
        for x in (1000, 10_000, 100_000):
            delta = abs(chebyshev_sum(x, primes) - math.log(x))
            assert delta <= 3 * math.log(math.log(3 * x)), x
