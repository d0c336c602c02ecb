"""Primality policy, next-prime search, and gap records."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expseq import PrimalityPolicy, cramer_ratio, gap_real, is_prime, smpr
from expseq.numeric import CertifiedReal, ConstantRep, Mode, eval_term
from expseq.primes import AmbiguousEnclosureError, trial_division_agrees
from fractions import Fraction

import gmpy2

from oracle import trial_division_is_prime


def _sieve_flags(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit, p))
    return flags


class TestIsPrime:
    def test_trivial(self):
        assert is_prime(2)
        assert not is_prime(0) and not is_prime(1)

    def test_known_composite_259(self):
        assert not is_prime(259)  # 7 * 37
        assert not trial_division_is_prime(259)

    def test_published_gap_record_prime(self):
        assert is_prime(1693182318746371)

    def test_agrees_with_sieve_below_one_million(self):
        flags = _sieve_flags(10**6)
        mismatches = [n for n in range(10**6) if is_prime(n) != bool(flags[n])]
        assert mismatches == []

    def test_agrees_with_trial_division_sample(self):
        rng = random.Random(5)
        for _ in range(500):
            n = rng.randrange(2, 10**7)
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            is_prime(-3)

    def test_big_probable_primes(self, u0_47):
        # 98-digit published term passes; agreement with gmpy2 on a neighbor.
        t = u0_47.terms[-1]
        assert is_prime(t)
        assert not is_prime(t + 1)
        bpsw = gmpy2.is_strong_prp(t + 2, 2) and gmpy2.is_strong_selfridge_prp(t + 2)
        assert is_prime(t + 2) == bool(bpsw)

    def test_policy_determinism(self):
        n = 10**30 + 57  # prime
        p1 = PrimalityPolicy(seed=7, extra_rounds=5)
        assert p1.extra_bases(n) == p1.extra_bases(n)
        assert PrimalityPolicy(seed=8).extra_bases(n) != p1.extra_bases(n)[:2]
        assert is_prime(n, p1) and is_prime(n)


class TestSmpr:
    def test_already_prime(self):
        assert smpr(7) == 7

    def test_published_examples(self):
        assert smpr(259) == 263
        assert smpr(36) == 37

    def test_floor_cases(self):
        assert smpr(2) == 2
        assert smpr(1) == 2

    @given(q=st.integers(min_value=2, max_value=10**9))
    @settings(max_examples=150, deadline=None)
    def test_interval_is_composite(self, q):
        p = smpr(q)
        assert p >= q
        assert trial_division_agrees(q, p)
        assert trial_division_is_prime(p)

    def test_scan_across_known_maximal_gap(self):
        # Record gap of 118 after 1349533 exercises the windowed scan.
        assert smpr(1349534) == 1349651

    def test_hundred_digit_scan(self):
        q = 10**99 + 1
        p = smpr(q)
        assert p > q and is_prime(p)


class TestGapReal:
    def test_simple_real_point(self):
        x = CertifiedReal(gmpy2.mpfr("10.5"), gmpy2.mpfr("10.5"), 64)
        rec = gap_real(x)
        assert rec.next_prime == 11
        assert rec.gap == "0.50000"

    def test_published_record_gap(self):
        p = 1693182318746371
        x = eval_term(
            ConstantRep(mode=Mode.C, anchor_prime=p, anchor_index=1, d_fixed=Fraction(3, 2)),
            1,
            128,
        )
        rec = gap_real(x)
        assert rec.next_prime - p == 1132

    def test_requires_x_above_two(self):
        x = CertifiedReal(gmpy2.mpfr("1.5"), gmpy2.mpfr("1.5"), 64)
        with pytest.raises(ValueError):
            gap_real(x)

    def test_ambiguous_floor_raises(self):
        x = CertifiedReal(gmpy2.mpfr("10.9"), gmpy2.mpfr("11.1"), 64)
        with pytest.raises(AmbiguousEnclosureError):
            gap_real(x)


class TestCramerRatio:
    def test_published_record_ratio(self):
        assert cramer_ratio(1693182318746371) == "0.9206385886"

    def test_small_primes_derived(self):
        # next prime after 11 is 13: 2 / ln(11)**2
        import math

        got = float(cramer_ratio(11))
        assert abs(got - 2 / math.log(11) ** 2) < 1e-9
        got13 = float(cramer_ratio(13))
        assert abs(got13 - 4 / math.log(13) ** 2) < 1e-9

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            cramer_ratio(259)
