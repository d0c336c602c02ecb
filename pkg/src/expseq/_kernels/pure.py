"""Pure-Python primality kernels.

Reference implementation of the hot inner loops used by the next-prime
scanner: strong probable-prime rounds, the strong Lucas test with Selfridge
parameters, and small-prime window sieving.  A compiled twin with the same
interface lives in ``_speedups``; results must be bit-identical.
"""

from __future__ import annotations

from math import isqrt

IMPL_NAME = "pure"


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mr_round(n: int, base: int) -> bool:
    """One strong probable-prime round; n odd, n > 2."""
    a = base % n
    if a in (0, 1, n - 1):
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge parameter selection.

    Assumes n odd, n > 2, with no small prime factors already ruled out.
    """
    if n % 2 == 0:
        return n == 2
    # Pick D = 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    attempts = 0
    while True:
        j = jacobi(D % n, n)
        if j == -1:
            break
        if j == 0 and abs(D) % n != 0:
            return False  # shares a factor with n
        attempts += 1
        if attempts == 5 and isqrt(n) ** 2 == n:
            return False  # perfect squares never find (D/n) = -1
        D = -D - 2 if D > 0 else -D + 2
    Q = (1 - D) // 4  # P = 1

    # Strong form: n + 1 = d * 2**s with d odd.
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    # Binary ladder for U_d, V_d (P = 1).
    U, V, Qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (U + V) % n, (V + D * U) % n
            if U % 2:
                U += n
            if V % 2:
                V += n
            U, V = U // 2 % n, V // 2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def composite_mask(start: int, width: int, primes: list[int]) -> bytearray:
    """Mark offsets o in [0, width) where `start + o` has a small prime factor.

    Assumes start is larger than every prime in `primes`.
    """
    mask = bytearray(width)
    one = b"\x01"
    for p in primes:
        first = (-start) % p
        if first < width:
            count = (width - 1 - first) // p + 1
            mask[first::p] = one * count
    return mask
