"""Independent oracles for the test suite.

Everything here is deliberately built from a different toolbox than the
package: plain integers, Fractions, and repeated integer square roots.
Floors of c**(k**d) are decided by integer-root bracketing with exact
rational (dyadic) exponents; primality by trial division.  Nothing imports
gmpy2 or the package's numeric machinery.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime_at_least(q: int) -> int:
    n = max(q, 2)
    while not trial_division_is_prime(n):
        n += 1
    return n


def nth_root_floor(x: int, n: int) -> int:
    """floor(x**(1/n)) by Newton iteration on plain integers."""
    if x < 0 or n <= 0:
        raise ValueError
    if x in (0, 1) or n == 1:
        return x
    if n == 2:
        return isqrt(x)
    t = 1 << (x.bit_length() // n + 1)
    u = t + 1
    while t < u:
        u = t
        t = ((n - 1) * u + x // u ** (n - 1)) // n
    return u


def _cap_down(f: Fraction, scale: int) -> Fraction:
    return Fraction(f.numerator * scale // f.denominator, scale)


def _cap_up(f: Fraction, scale: int) -> Fraction:
    return Fraction(-((-f.numerator * scale) // f.denominator), scale)


def log2_brackets(x_lo: Fraction, x_hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """lo <= log2(x) <= hi for x in [x_lo, x_hi], by interval squaring."""
    assert 0 < x_lo <= x_hi
    scale = 10 ** (int(bits * 0.61) + 12)
    # normalize into [1, 2)
    t = x_lo.numerator.bit_length() - x_lo.denominator.bit_length()
    while Fraction(2) ** (t + 1) <= x_lo:
        t += 1
    while Fraction(2) ** t > x_lo:
        t -= 1
    y_lo, y_hi = x_lo / Fraction(2) ** t, x_hi / Fraction(2) ** t
    acc_lo = acc_hi = Fraction(t)
    w = Fraction(1)
    for _ in range(bits):
        if y_hi >= 2:  # interval straddles a digit boundary (or input was wide)
            break
        w /= 2
        y_lo = _cap_down(y_lo * y_lo, scale)
        y_hi = _cap_up(y_hi * y_hi, scale)
        if y_lo >= 2:
            acc_lo += w
            acc_hi += w
            y_lo /= 2
            y_hi /= 2
    # leftover log2(y) in [0, 2): contributes [0, 2w)
    return acc_lo, acc_hi + 2 * w


def pow2_brackets(e_lo: Fraction, e_hi: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """lo <= 2**e <= hi for e in [e_lo, e_hi], e >= 0, via repeated
    integer square roots (dyadic rational exponents)."""
    assert 0 <= e_lo <= e_hi
    return _pow2_one(e_lo, digits, upper=False), _pow2_one(e_hi, digits, upper=True)


def _pow2_one(e: Fraction, digits: int, upper: bool) -> Fraction:
    scale = 10**digits
    ipart = int(e)
    f = e - ipart
    maxbits = int(digits * 3.33) + 4
    acc = scale  # scaled accumulator for 2**f
    root = 2 * scale  # scaled 2**(1/2**0)
    bits_left = f
    for _ in range(maxbits):
        if bits_left == 0:
            break
        r = isqrt(root * scale)
        root = r + 1 if upper else r
        bits_left *= 2
        if bits_left >= 1:
            bits_left -= 1
            if upper:
                acc = -((-acc * root) // scale)
            else:
                acc = acc * root // scale
    if bits_left > 0 and upper:
        # residual exponent is below the current root's, so one factor bounds it
        acc = -((-acc * root) // scale)
    value = Fraction(acc, scale) * (1 << ipart)
    return value


def rational_root_brackets(r: Fraction, den: int, digits: int) -> tuple[Fraction, Fraction]:
    """lo <= r**(1/den) <= hi with exact rational endpoints."""
    scale = 10**digits
    lo = nth_root_floor(r.numerator * scale**den // r.denominator, den)
    return Fraction(lo, scale), Fraction(lo + 2, scale)


class OracleFloor:
    """Floor of a*c**(k**d)+b decided purely by bracketing arithmetic."""

    def __init__(self, mode: str, anchor_prime: int, anchor_index: int,
                 b: int = 0, d_fixed: Fraction = Fraction(3, 2)):
        self.mode = mode
        self.p = anchor_prime
        self.n = anchor_index
        self.b = b
        self.m = anchor_prime - b
        self.d_fixed = d_fixed

    def exponent_brackets(self, k: int, bits: int) -> tuple[Fraction, Fraction]:
        """Brackets of k**d / n**d (mode c) or k**d (mode d)."""
        if self.mode == "c":
            d = self.d_fixed
            r = Fraction(k, self.n) ** d.numerator
            if d.denominator == 1:
                return r, r
            return rational_root_brackets(r, d.denominator, int(bits * 0.31) + 8)
        # mode d: k**d = 2**(log2(k)/log2(n) * log2(log2(m)))
        l_lo, l_hi = log2_brackets(Fraction(self.m), Fraction(self.m), bits)
        lk_lo, lk_hi = log2_brackets(Fraction(k), Fraction(k), bits)
        ln_lo, ln_hi = log2_brackets(Fraction(self.n), Fraction(self.n), bits)
        tau_lo, tau_hi = lk_lo / ln_hi, lk_hi / ln_lo
        ll_lo, ll_hi = log2_brackets(l_lo, l_hi, bits)
        mu_lo, mu_hi = tau_lo * ll_lo, tau_hi * ll_hi
        digits = int(bits * 0.31) + 8
        return pow2_brackets(mu_lo, mu_hi, digits)

    def exact_value(self, k: int):
        """Exact integer value when the term collapses to one, else None."""
        if self.mode == "d":
            if k == 0:
                return 1 + self.b
            if k == 1:
                return 2 + self.b
            if k == self.n:
                return self.p
            return None
        d = self.d_fixed
        r = Fraction(k, self.n) ** d.numerator
        rn = nth_root_floor(r.numerator, d.denominator)
        rd = nth_root_floor(r.denominator, d.denominator)
        if rn**d.denominator != r.numerator or rd**d.denominator != r.denominator:
            return None
        e = Fraction(rn, rd)
        if e.denominator == 1:
            return self.m**e.numerator + self.b
        root = nth_root_floor(self.m, e.denominator)
        if root**e.denominator != self.m:
            return None
        return root**e.numerator + self.b

    def value_brackets(self, k: int, bits: int) -> tuple[Fraction, Fraction]:
        e_lo, e_hi = self.exponent_brackets(k, bits)
        digits = int(bits * 0.31) + 10
        if self.mode == "c":
            lm_lo, lm_hi = log2_brackets(Fraction(self.m), Fraction(self.m), bits)
            t_lo, t_hi = e_lo * lm_lo, e_hi * lm_hi
        else:
            t_lo, t_hi = e_lo, e_hi
        v_lo, v_hi = pow2_brackets(t_lo, t_hi, digits)
        return v_lo + self.b, v_hi + self.b

    def floor(self, k: int, max_bits: int = 4096) -> int:
        exact = self.exact_value(k)
        if exact is not None:
            return exact
        bits = 48
        while bits <= max_bits:
            v_lo, v_hi = self.value_brackets(k, bits)
            f_lo, f_hi = v_lo.numerator // v_lo.denominator, v_hi.numerator // v_hi.denominator
            if f_lo == f_hi:
                return f_lo
            bits *= 2
        raise RuntimeError(f"oracle could not pin the floor at index {k}")


def oracle_build(mode: str, b: int, count: int, d_fixed: Fraction = Fraction(3, 2)):
    """Independent replay of the construction: oracle floors, trial-division
    primality, naive next-prime search.  Small counts only."""
    if b:
        terms = {0: 2, 1: 3}
    else:
        terms = {1: 2}
    anchor_prime, anchor_index = 2 + b, 1
    start = 0 if b else 1

    def flo(k):
        if mode == "d" and anchor_index == 1:
            return 2**k + b  # seed d = 1
        return OracleFloor(mode, anchor_prime, anchor_index, b, d_fixed).floor(k)

    top = max(terms)
    while len(terms) < count:
        n = top + 1
        q = flo(n)
        p = next_prime_at_least(q)
        if p == q:
            terms[n] = p
            top = n
            continue
        terms[n] = p
        anchor_prime, anchor_index = p, n
        top = n
        k = 1
        while k < anchor_index:
            q2 = flo(k)
            if q2 == terms[k]:
                k += 1
                continue
            if trial_division_is_prime(q2):
                terms[k] = q2
                k += 1
                continue
            p2 = next_prime_at_least(q2)
            for i in list(terms):
                if i > k:
                    del terms[i]
            terms[k] = p2
            anchor_prime, anchor_index = p2, k
            top = k
            k = 1
    return [terms[i] for i in range(start, start + count)]
