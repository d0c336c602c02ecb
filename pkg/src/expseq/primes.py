"""Primality policy, next-prime search, and prime-gap measurement.

The policy is deterministic: below a fixed 64-bit threshold it uses a
Miller-Rabin base set proven sufficient there; above it, a base-2 strong
test plus a strong Lucas test (Baillie-PSW style) and a configurable number
of extra strong rounds whose bases derive from a fixed seed.  Terms above
the threshold are therefore probable primes, and every output that records
primality carries the policy descriptor.
"""

from __future__ import annotations

import hashlib
import random
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .intervals import IV, Rounded, floors, round_sigfigs, trunc_decimals
from .numeric import CertifiedReal

__all__ = [
    "PrimalityPolicy",
    "DEFAULT_POLICY",
    "GapRecord",
    "AmbiguousEnclosureError",
    "is_prime",
    "smpr",
    "gap_real",
    "cramer_ratio",
]

DETERMINISTIC_LIMIT = 1 << 64
# Sufficient deterministic witness set for every n < 3.317e24 > 2**64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_LIMIT = 1 << 20
_WHEEL_LIMIT = 4096


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit, p))
    return [i for i in range(limit) if flags[i]]


_SMALL_PRIMES: list[int] = _sieve(_SMALL_LIMIT)
_SMALL_SET = set(_SMALL_PRIMES)
_WHEEL_PRIMES: list[int] = _SMALL_PRIMES[: bisect_left(_SMALL_PRIMES, _WHEEL_LIMIT)]


@dataclass(frozen=True)
class PrimalityPolicy:
    """How probable primes are certified and how random bases are drawn."""

    seed: int = 1
    extra_rounds: int = 2
    deterministic_below: int = DETERMINISTIC_LIMIT

    def describe(self) -> dict:
        return {
            "deterministic_below": str(self.deterministic_below),
            "probable_prime_test": "strong base-2 + strong Lucas (Selfridge)",
            "extra_strong_rounds": self.extra_rounds,
            "seed": self.seed,
        }

    def extra_bases(self, n: int) -> list[int]:
        if self.extra_rounds <= 0 or n <= 6:
            return []
        digest = hashlib.sha256(f"{self.seed}:{n}".encode()).digest()
        rng = random.Random(int.from_bytes(digest[:16], "big"))
        return [rng.randrange(2, n - 1) for _ in range(self.extra_rounds)]


DEFAULT_POLICY = PrimalityPolicy()


class AmbiguousEnclosureError(ValueError):
    """The input enclosure is too wide; escalate precision upstream."""


def is_prime(n: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> bool:
    """Primality under the policy; deterministic below the 64-bit threshold."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < _SMALL_LIMIT:
        return n in _SMALL_SET
    for p in _WHEEL_PRIMES:
        if n % p == 0:
            return False
    return _probable_prime_presieved(n, policy)


def _probable_prime_presieved(n: int, policy: PrimalityPolicy) -> bool:
    """Strong tests only; small-factor screening must already have happened."""
    if n < policy.deterministic_below:
        return all(_kernels.mr_round(n, a) for a in _MR_BASES_64)
    if not _kernels.mr_round(n, 2):
        return False
    if not _kernels.strong_lucas(n):
        return False
    return all(_kernels.mr_round(n, a) for a in policy.extra_bases(n))


def smpr(q: int, policy: PrimalityPolicy = DEFAULT_POLICY) -> int:
    """Smallest prime >= q under the policy."""
    if q <= 2:
        return 2
    if q <= _SMALL_PRIMES[-1]:
        return _SMALL_PRIMES[bisect_left(_SMALL_PRIMES, q)]
    width = max(512, 4 * q.bit_length())
    start = q
    while True:
        mask = _kernels.composite_mask(start, width, _WHEEL_PRIMES)
        for off in range(width):
            if not mask[off] and _probable_prime_presieved(start + off, policy):
                return start + off
        start += width


def trial_division_agrees(q: int, p: int) -> bool:
    """Cheap audit: every integer in [q, p) is composite (q reasonably small)."""
    for n in range(q, p):
        if n < 2:
            continue
        if all(n % f for f in range(2, int(n**0.5) + 1)):
            return False
    return True


@dataclass(frozen=True)
class GapRecord:
    """Distance from a real point to the next prime strictly above it."""

    from_value: str
    next_prime: int
    gap: str
    cramer_ratio: str


def gap_real(
    x: CertifiedReal,
    policy: PrimalityPolicy = DEFAULT_POLICY,
    places: int = 5,
) -> GapRecord:
    """Gap record for real x > 2: next prime, gap, and gap / ln(x)**2.

    Raises AmbiguousEnclosureError when the enclosure of x cannot pin the
    floor or the requested digits; the caller should re-evaluate x at higher
    precision.
    """
    iv = x.interval
    if not iv.lo > 2:
        raise ValueError("gap_real requires x > 2")
    flo, fhi = floors(iv)
    if flo != fhi:
        raise AmbiguousEnclosureError("floor of x is ambiguous at this precision")
    nxt = smpr(flo + 1, policy)
    rnd = Rounded(max(x.precision_bits, 64))
    gap_iv = rnd.sub(rnd.exact(nxt), iv)
    ln_x = rnd.ln(iv)
    ratio_iv = rnd.div(gap_iv, rnd.mul(ln_x, ln_x))
    from_s = trunc_decimals(iv, places)
    gap_s = trunc_decimals(gap_iv, places)
    ratio_s = round_sigfigs(ratio_iv, 10)
    if from_s is None or gap_s is None or ratio_s is None:
        raise AmbiguousEnclosureError("gap digits ambiguous at this precision")
    return GapRecord(from_value=from_s, next_prime=nxt, gap=gap_s, cramer_ratio=ratio_s)


def cramer_ratio(
    p: int,
    policy: PrimalityPolicy = DEFAULT_POLICY,
    sigfigs: int = 10,
) -> str:
    """(next prime - p) / ln(p)**2, rounded to `sigfigs` significant figures."""
    if p < 2 or not is_prime(p, policy):
        raise ValueError(f"{p} is not prime under the policy")
    gap = smpr(p + 1, policy) - p
    prec = 128
    while True:
        rnd = Rounded(prec)
        ln_p = rnd.ln(rnd.exact(p))
        ratio = rnd.div(rnd.exact(gap), rnd.mul(ln_p, ln_p))
        s = round_sigfigs(ratio, sigfigs)
        if s is not None:
            return s
        prec *= 2
