# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python primality kernels.

Same interface and bit-identical results as ``pure``.  The wins come from a
native uint64 strong-round ladder (the deterministic sub-64-bit path taken
while scanning for the next prime), C-speed window sieving, and compiled
loop bookkeeping for the big-integer paths.
"""

from libc.stdint cimport uint64_t

IMPL_NAME = "speedups"

cdef extern from *:
    # opaque alias so arithmetic happens in C's unsigned __int128
    ctypedef unsigned long long uint128_t "unsigned __int128"


cdef inline uint64_t _mulmod64(uint64_t a, uint64_t b, uint64_t m) noexcept nogil:
    return <uint64_t>((<uint128_t> a * b) % m)


cdef uint64_t _powmod64(uint64_t a, uint64_t e, uint64_t m) noexcept nogil:
    cdef uint64_t r = 1
    a %= m
    while e:
        if e & 1:
            r = _mulmod64(r, a, m)
        a = _mulmod64(a, a, m)
        e >>= 1
    return r


cdef bint _mr_round64(uint64_t n, uint64_t a) noexcept nogil:
    cdef uint64_t d = n - 1
    cdef int s = 0
    cdef int i
    cdef uint64_t x
    while d % 2 == 0:
        d >>= 1
        s += 1
    if a == 0 or a == 1 or a == n - 1:
        return True
    x = _powmod64(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for i in range(s - 1):
        x = _mulmod64(x, x, n)
        if x == n - 1:
            return True
    return False


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    cdef int result = 1
    a %= n
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


def mr_round(n, base):
    """One strong probable-prime round; n odd, n > 2."""
    a = base % n
    if n < 18446744073709551616 and n > 2:  # 2**64
        return bool(_mr_round64(<uint64_t> n, <uint64_t> a))
    if a == 0 or a == 1 or a == n - 1:
        return True
    d = n - 1
    cdef long s = 0
    cdef long i
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for i in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def strong_lucas(n):
    """Strong Lucas probable-prime test with Selfridge parameter selection.

    Assumes n odd, n > 2, with no small prime factors already ruled out.
    """
    if n % 2 == 0:
        return n == 2
    cdef long attempts = 0
    cdef int j
    D = 5
    while True:
        j = jacobi(D % n, n)
        if j == -1:
            break
        if j == 0 and abs(D) % n != 0:
            return False
        attempts += 1
        if attempts == 5:
            r = _isqrt(n)
            if r * r == n:
                return False
        D = -D - 2 if D > 0 else -D + 2
    Q = (1 - D) // 4

    d = n + 1
    cdef long s = 0
    cdef long i
    while d % 2 == 0:
        d //= 2
        s += 1

    U = 1
    V = 1
    Qk = Q % n
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
    for i in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


cdef _isqrt(n):
    import math
    return math.isqrt(n)


def composite_mask(start, width, primes):
    """Mark offsets o in [0, width) where `start + o` has a small prime factor.

    Assumes start is larger than every prime in `primes`.
    """
    cdef int w = width
    mask = bytearray(w)
    cdef unsigned char[::1] view = mask
    cdef long p, i, first
    for p_obj in primes:
        p = p_obj
        first = (-start) % p
        for i in range(first, w, p):
            view[i] = 1
    return mask
