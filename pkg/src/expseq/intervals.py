"""Directed-rounding interval arithmetic on top of gmpy2's MPFR bindings.

Every operation returns an interval [lo, hi] that is guaranteed to contain
the exact mathematical result, with endpoints rounded outward at the working
precision.  This is the substrate for all certified floor and digit
computations; nothing downstream ever trusts a single rounded float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Union

import gmpy2
from gmpy2 import mpfr

MIN_PRECISION = 64
HARD_PRECISION_BITS = 1 << 25


class PrecisionCapError(ArithmeticError):
    """Escalation exhausted the configured precision budget."""


Number = Union[int, Fraction, mpfr]


class IV(NamedTuple):
    lo: mpfr
    hi: mpfr

    def __contains__(self, value) -> bool:
        v = _to_fraction(value)
        return _to_fraction(self.lo) <= v <= _to_fraction(self.hi)

    @property
    def width(self) -> Fraction:
        return _to_fraction(self.hi) - _to_fraction(self.lo)


def _to_fraction(x) -> Fraction:
    if isinstance(x, mpfr):
        n, d = x.as_integer_ratio()
        return Fraction(int(n), int(d))
    return Fraction(x)


def floor_exact(x: mpfr) -> int:
    """Exact floor of an mpfr value, independent of working precision."""
    n, d = x.as_integer_ratio()
    return int(n) // int(d)


class Rounded:
    """A pair of MPFR contexts (round-down / round-up) at fixed precision."""

    def __init__(self, precision: int):
        if precision < MIN_PRECISION:
            raise ValueError(f"precision must be >= {MIN_PRECISION}")
        if precision > HARD_PRECISION_BITS:
            raise PrecisionCapError(
                f"requested precision {precision} exceeds hard limit {HARD_PRECISION_BITS}"
            )
        self.precision = precision
        self._dn = gmpy2.context(precision=precision, round=gmpy2.RoundDown)
        self._up = gmpy2.context(precision=precision, round=gmpy2.RoundUp)

    def exact(self, x: Number) -> IV:
        """Enclose an exact integer or rational."""
        if isinstance(x, Fraction):
            x = gmpy2.mpq(x.numerator, x.denominator)
        return IV(mpfr(x, context=self._dn), mpfr(x, context=self._up))

    def add(self, x: IV, y: IV) -> IV:
        return IV(self._dn.add(x.lo, y.lo), self._up.add(x.hi, y.hi))

    def sub(self, x: IV, y: IV) -> IV:
        return IV(self._dn.sub(x.lo, y.hi), self._up.sub(x.hi, y.lo))

    def mul(self, x: IV, y: IV) -> IV:
        lo = min(self._dn.mul(a, b) for a in x for b in y)
        hi = max(self._up.mul(a, b) for a in x for b in y)
        return IV(lo, hi)

    def div(self, x: IV, y: IV) -> IV:
        if not (y.lo > 0 or y.hi < 0):
            raise ZeroDivisionError("interval denominator straddles zero")
        lo = min(self._dn.div(a, b) for a in x for b in y)
        hi = max(self._up.div(a, b) for a in x for b in y)
        return IV(lo, hi)

    # The transcendental kernels below are all monotone increasing, so the
    # endpoint images bound the image of the interval.

    def ln(self, x: IV) -> IV:
        return IV(self._dn.log(x.lo), self._up.log(x.hi))

    def log2(self, x: IV) -> IV:
        return IV(self._dn.log2(x.lo), self._up.log2(x.hi))

    def exp(self, x: IV) -> IV:
        return IV(self._dn.exp(x.lo), self._up.exp(x.hi))

    def exp2(self, x: IV) -> IV:
        return IV(self._dn.exp2(x.lo), self._up.exp2(x.hi))

    def sqrt(self, x: IV) -> IV:
        return IV(self._dn.sqrt(x.lo), self._up.sqrt(x.hi))

    def rootn(self, x: IV, n: int) -> IV:
        return IV(self._dn.rootn(x.lo, n), self._up.rootn(x.hi, n))

    def pow(self, base: IV, expo: IV) -> IV:
        """base**expo for a strictly positive base interval."""
        if not base.lo > 0:
            raise ValueError("pow requires a positive base interval")
        return self.exp2(self.mul(expo, self.log2(base)))

    def square(self, x: IV) -> IV:
        return self.mul(x, x)


def floors(iv: IV) -> tuple[int, int]:
    return floor_exact(iv.lo), floor_exact(iv.hi)


def trunc_decimals(iv: IV, places: int) -> Optional[str]:
    """Decimal expansion truncated to `places`, or None if the interval is
    too wide to pin every requested digit."""
    scale = 10**places
    nlo, dlo = iv.lo.as_integer_ratio()
    nhi, dhi = iv.hi.as_integer_ratio()
    slo = (int(nlo) * scale) // int(dlo)
    shi = (int(nhi) * scale) // int(dhi)
    if slo != shi:
        return None
    sign = "-" if slo < 0 else ""
    ip, fp = divmod(abs(slo), scale)
    return f"{sign}{ip}.{fp:0{places}d}"


def round_sigfigs(iv: IV, sig: int) -> Optional[str]:
    """Round to `sig` significant figures (half-even), or None if ambiguous.

    Uses plain decimal notation for moderate exponents, scientific otherwise.
    """
    flo = _to_fraction(iv.lo)
    fhi = _to_fraction(iv.hi)
    if flo <= 0:
        raise ValueError("significant-figure rendering expects positive values")

    e10 = _decimal_exponent(flo)
    mlo = _round_mantissa(flo, e10, sig)
    mhi = _round_mantissa(fhi, e10, sig)
    if mlo != mhi:
        return None
    m = mlo
    if m >= 10**sig:  # rounding carried over a power of ten
        m //= 10
        e10 += 1
    digits = f"{m:0{sig}d}"
    if -4 < e10 < sig:
        if e10 >= 0:
            ip = digits[: e10 + 1]
            fp = digits[e10 + 1 :]
            return f"{ip}.{fp}" if fp else ip
        return "0." + "0" * (-e10 - 1) + digits
    return f"{digits[0]}.{digits[1:]}e{e10:+03d}" if sig > 1 else f"{digits}e{e10:+03d}"


def _decimal_exponent(v: Fraction) -> int:
    # largest e with 10**e <= v
    num, den = v.numerator, v.denominator
    e = len(str(num)) - len(str(den))
    while 10**e > v if e >= 0 else Fraction(1, 10**-e) > v:
        e -= 1
    while (10 ** (e + 1) if e + 1 >= 0 else Fraction(1, 10 ** -(e + 1))) <= v:
        e += 1
    return e


def _round_mantissa(v: Fraction, e10: int, sig: int) -> int:
    shift = sig - 1 - e10
    if shift >= 0:
        return round(v * 10**shift)
    return round(v / 10**-shift)
