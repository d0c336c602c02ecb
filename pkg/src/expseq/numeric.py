"""Exact constant representation and certified evaluation of sequence terms.

The constant of a sequence is never stored as a truncated decimal.  It is
represented symbolically by the (prime, index) pair that last anchored it:

* ``C`` mode (exponent fixed): ``c = ((p - b) / a) ** (1 / n**d)`` so that
  evaluating ``a * c**(n**d) + b`` at the anchor gives exactly ``p``.
* ``D`` mode (base fixed at 2): ``d = ln(ln((p - b) / a) / ln 2) / ln n``.

All real-valued evaluation goes through directed-rounding intervals; floors
and decimal digits are produced only once the enclosure pins them, and the
working precision escalates by doubling until it does (or a cap is hit).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import gmpy2
from gmpy2 import mpfr, mpz

from .intervals import (
    HARD_PRECISION_BITS,
    IV,
    MIN_PRECISION,
    PrecisionCapError,
    Rounded,
    floors,
    trunc_decimals,
)

__all__ = [
    "Mode",
    "ConstantRep",
    "CertifiedReal",
    "PrecisionCapError",
    "eval_term",
    "floor_certified",
    "floor_value",
    "constant_digits",
    "GUARD_BITS",
    "ESCALATION_CAP_FACTOR",
]

GUARD_BITS = 96
ESCALATION_CAP_FACTOR = 64
# Ceiling on the bit size of exact integer values we will materialize.
_EXACT_VALUE_BIT_LIMIT = 1 << 26


def set_escalation_cap_factor(factor: int) -> None:
    """Process-wide escalation budget: precision may grow to factor * start."""
    global ESCALATION_CAP_FACTOR
    if factor < 1:
        raise ValueError("escalation cap factor must be >= 1")
    ESCALATION_CAP_FACTOR = factor


class Mode(str, Enum):
    """Which constant the anchor determines."""

    C = "c"  # base c varies, exponent d is fixed
    D = "d"  # exponent d varies, base is fixed at 2


@dataclass(frozen=True)
class ConstantRep:
    """Exact symbolic representation of a sequence constant.

    `anchor_prime` is the prime that last fixed the constant and
    `anchor_index` the index at which it was assigned.  In D mode an
    `anchor_index` of 1 denotes the conventional below-range seed d = 1
    (the update formula is undefined at n = 1).
    """

    mode: Mode
    anchor_prime: int
    anchor_index: int
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)
    d_fixed: Optional[Fraction] = None

    def __post_init__(self):
        if self.a != 1:
            raise ValueError("only a = 1 is supported")
        if self.b not in (Fraction(0), Fraction(1)):
            raise ValueError("only b in {0, 1} is supported")
        if self.anchor_index < 1:
            raise ValueError("anchor_index must be >= 1")
        if self.mode is Mode.C:
            if self.d_fixed is None or self.d_fixed <= 1:
                raise ValueError("C mode requires a rational exponent d > 1")
        else:
            if self.d_fixed is not None:
                raise ValueError("D mode computes its exponent from the anchor")
            if self.anchor_index >= 2 and self.base_integer < 4:
                raise ValueError("D-mode anchor must satisfy p - b >= 4")
        if self.base_integer < 2:
            raise ValueError("anchor must satisfy (p - b) / a >= 2")

    @property
    def base_integer(self) -> int:
        """(p - b) / a, the exact integer the constant is a root/log of."""
        m = (Fraction(self.anchor_prime) - self.b) / self.a
        if m.denominator != 1:
            raise ValueError("(p - b) / a must be an integer")
        return int(m)

    @property
    def start_index(self) -> int:
        return 0 if self.b > 0 else 1

    def describe(self) -> str:
        m = self.base_integer
        n = self.anchor_index
        if self.mode is Mode.C:
            d = self.d_fixed
            return f"{m}^(1/{n}^({d.numerator}/{d.denominator}))"
        if n == 1:
            return "1 (seed)"
        return f"ln(ln({m})/ln(2))/ln({n})"


@dataclass(frozen=True)
class CertifiedReal:
    """An enclosure [lo, hi] of a real value at a stated working precision."""

    lo: mpfr
    hi: mpfr
    precision_bits: int

    @property
    def midpoint(self) -> mpfr:
        ctx = gmpy2.context(precision=self.precision_bits + 1)
        return ctx.div(ctx.add(self.lo, self.hi), 2)

    @property
    def radius(self) -> mpfr:
        up = gmpy2.context(precision=self.precision_bits, round=gmpy2.RoundUp)
        mid = self.midpoint
        return max(up.sub(self.hi, mid), up.sub(mid, self.lo))

    @property
    def interval(self) -> IV:
        return IV(self.lo, self.hi)

    def __contains__(self, value) -> bool:
        return value in self.interval

    def __float__(self) -> float:
        return float(self.midpoint)


# ---------------------------------------------------------------------------
# exact short-circuits


def exact_term(rep: ConstantRep, k: int) -> Optional[int]:
    """The exact integer value of a*c**(k**d)+b when it is one, else None.

    Covers anchors, forced indices, rational exponents that collapse to
    integer powers, and the D-mode power-of-two degeneracies.  Everything
    this returns None for is irrational, so interval escalation terminates.
    """
    b = int(rep.b)
    m = rep.base_integer
    n = rep.anchor_index
    if rep.mode is Mode.C:
        d = rep.d_fixed
        ratio = Fraction(k, n) ** d.numerator
        if d.denominator == 1:
            expo = ratio
        else:
            rn, ok_n = gmpy2.iroot(mpz(ratio.numerator), d.denominator)
            rd, ok_d = gmpy2.iroot(mpz(ratio.denominator), d.denominator)
            if not (ok_n and ok_d):
                return None
            expo = Fraction(int(rn), int(rd))
        if expo.denominator == 1:
            _check_exact_size(expo.numerator * max(m.bit_length(), 1))
            return m**expo.numerator + b
        root, ok = gmpy2.iroot(mpz(m), expo.denominator)
        if not ok:
            return None
        _check_exact_size(expo.numerator * max(int(root).bit_length(), 1))
        return int(root) ** expo.numerator + b

    # D mode: value = 2**(k**d) + b
    if k == 0:
        return 1 + b
    if k == 1:
        return 2 + b
    if n == 1:  # seed d = 1
        _check_exact_size(k)
        return 2**k + b
    if k == n:
        return rep.anchor_prime
    if m & (m - 1) == 0:  # m = 2**j, so d = ln(j)/ln(n)
        j = m.bit_length() - 1
        i, t = 0, 1
        while t < j:
            t *= n
            i += 1
        if t == j:  # d is exactly the integer i
            _check_exact_size(k**i)
            return 2 ** (k**i) + b
    return None


def _check_exact_size(bits: int) -> None:
    if bits > _EXACT_VALUE_BIT_LIMIT:
        raise PrecisionCapError(
            f"exact value would need ~{bits} bits (limit {_EXACT_VALUE_BIT_LIMIT})"
        )


# ---------------------------------------------------------------------------
# interval evaluation


def term_interval(rep: ConstantRep, k: int, rnd: Rounded) -> IV:
    """Enclosure of a*c**(k**d)+b at the working precision of `rnd`."""
    b = rep.b
    m = rep.base_integer
    n = rep.anchor_index
    if rep.mode is Mode.C:
        d = rep.d_fixed
        ratio = rnd.exact(Fraction(k, n) ** d.numerator)
        expo = ratio if d.denominator == 1 else rnd.rootn(ratio, d.denominator)
        value = rnd.exp2(rnd.mul(expo, rnd.log2(rnd.exact(m))))
    else:
        if k < 2 or n < 2:
            raise ValueError("D-mode interval path needs k >= 2 and a real anchor")
        log2_m = rnd.log2(rnd.exact(m))
        t = rnd.div(
            rnd.mul(rnd.ln(log2_m), rnd.ln(rnd.exact(k))),
            rnd.ln(rnd.exact(n)),
        )
        value = rnd.exp2(rnd.exp(t))
    if b:
        value = rnd.add(value, rnd.exact(b))
    return value


def start_precision(rep: ConstantRep, k: int) -> int:
    """Initial working precision: estimated value bits plus guard bits."""
    m = rep.base_integer
    n = rep.anchor_index
    try:
        if rep.mode is Mode.C:
            kd = float(k) ** float(rep.d_fixed)
            nd = float(n) ** float(rep.d_fixed)
            bits = kd / nd * math.log2(m)
        elif n == 1:
            bits = float(k)
        else:
            d = math.log(math.log2(m)) / math.log(n)
            bits = float(max(k, 2)) ** d
        est = int(bits) + 1
    except (OverflowError, ValueError):
        raise PrecisionCapError(f"term at index {k} is out of representable range")
    if est > HARD_PRECISION_BITS:
        raise PrecisionCapError(f"term at index {k} needs ~{est} bits")
    return max(MIN_PRECISION, est + GUARD_BITS)


# ---------------------------------------------------------------------------
# public operations


def eval_term(rep: ConstantRep, k: int, precision_bits: int) -> CertifiedReal:
    """Certified enclosure of a*c**(k**d)+b (C mode) or a*2**(k**d)+b (D mode)."""
    _validate_index(rep, k)
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")
    rnd = Rounded(precision_bits)
    exact = exact_term(rep, k)
    if exact is not None:
        iv = rnd.exact(exact)
    else:
        iv = term_interval(rep, k, rnd)
    return CertifiedReal(iv.lo, iv.hi, precision_bits)


def floor_certified(
    rep: ConstantRep,
    k: int,
    places: int = 6,
    precision_bits: Optional[int] = None,
) -> Tuple[int, str]:
    """Exact floor of the term at index k plus its fractional part.

    Returns ``(value, frac)`` where ``value = floor(a*c**(k**d)+b)`` and
    ``frac`` is the fractional part truncated to `places` decimals.  The
    working precision doubles until both are unambiguous; anchors and other
    exact-integer cases are recognized symbolically and report frac = 0.
    """
    _validate_index(rep, k)
    exact = exact_term(rep, k)
    if exact is not None:
        return exact, "0." + "0" * places

    def finish(iv: IV, rnd: Rounded) -> Optional[Tuple[int, str]]:
        flo, fhi = floors(iv)
        if flo != fhi:
            return None
        frac = rnd.sub(iv, rnd.exact(flo))
        digits = trunc_decimals(frac, places)
        if digits is None:
            return None
        return flo, digits

    return _escalate(rep, k, finish, precision_bits)


def floor_value(rep: ConstantRep, k: int, precision_bits: Optional[int] = None) -> int:
    """Exact floor only; cheaper than floor_certified inside hot loops."""
    _validate_index(rep, k)
    exact = exact_term(rep, k)
    if exact is not None:
        return exact

    def finish(iv: IV, rnd: Rounded) -> Optional[int]:
        flo, fhi = floors(iv)
        return flo if flo == fhi else None

    return _escalate(rep, k, finish, precision_bits)


def _escalate(rep, k, finish, precision_bits):
    prec = precision_bits or start_precision(rep, k)
    prec = max(prec, MIN_PRECISION)
    cap = min(prec * ESCALATION_CAP_FACTOR, HARD_PRECISION_BITS)
    while True:
        rnd = Rounded(prec)
        result = finish(term_interval(rep, k, rnd), rnd)
        if result is not None:
            return result
        if prec >= cap:
            raise PrecisionCapError(
                f"enclosure at index {k} still ambiguous at {prec} bits"
            )
        prec = min(prec * 2, cap)


def frac_interval(rep: ConstantRep, k: int, precision_bits: Optional[int] = None):
    """(floor, fractional-part interval, Rounded) for analysis-layer reuse."""
    _validate_index(rep, k)
    exact = exact_term(rep, k)
    if exact is not None:
        rnd = Rounded(precision_bits or MIN_PRECISION)
        return exact, rnd.exact(0), rnd

    def finish(iv: IV, rnd: Rounded):
        flo, fhi = floors(iv)
        if flo != fhi:
            return None
        return flo, rnd.sub(iv, rnd.exact(flo)), rnd

    return _escalate(rep, k, finish, precision_bits)


def constant_digits(rep: ConstantRep, decimal_places: int) -> str:
    """Decimal expansion of c (C mode) or d (D mode), truncated to
    `decimal_places` digits after the point."""
    if decimal_places < 1:
        raise ValueError("decimal_places must be >= 1")
    exact = _exact_constant(rep)
    if exact is not None:
        return f"{exact}." + "0" * decimal_places

    prec = max(MIN_PRECISION, int(decimal_places * 3.33) + GUARD_BITS)
    cap = min(prec * ESCALATION_CAP_FACTOR, HARD_PRECISION_BITS)
    while True:
        rnd = Rounded(prec)
        digits = trunc_decimals(_constant_interval(rep, rnd), decimal_places)
        if digits is not None:
            return digits
        if prec >= cap:
            raise PrecisionCapError(f"constant digits ambiguous at {prec} bits")
        prec = min(prec * 2, cap)


def constant_interval(rep: ConstantRep, precision_bits: int) -> CertifiedReal:
    """Certified enclosure of the constant itself."""
    rnd = Rounded(precision_bits)
    exact = _exact_constant(rep)
    iv = rnd.exact(exact) if exact is not None else _constant_interval(rep, rnd)
    return CertifiedReal(iv.lo, iv.hi, precision_bits)


def _exact_constant(rep: ConstantRep) -> Optional[int]:
    m = rep.base_integer
    n = rep.anchor_index
    if rep.mode is Mode.C:
        d = rep.d_fixed
        nd_root, ok = gmpy2.iroot(mpz(n**d.numerator), d.denominator)
        if not ok:
            return None
        c_root, ok = gmpy2.iroot(mpz(m), int(nd_root))
        return int(c_root) if ok else None
    if n == 1:
        return 1  # seed d = 1
    if m & (m - 1) == 0:
        j = m.bit_length() - 1
        i, t = 0, 1
        while t < j:
            t *= n
            i += 1
        if t == j:
            return i
    return None


def _constant_interval(rep: ConstantRep, rnd: Rounded) -> IV:
    m = rep.base_integer
    n = rep.anchor_index
    if rep.mode is Mode.C:
        d = rep.d_fixed
        nd = rnd.exact(n**d.numerator)
        if d.denominator != 1:
            nd = rnd.rootn(nd, d.denominator)
        return rnd.exp2(rnd.div(rnd.log2(rnd.exact(m)), nd))
    log2_m = rnd.log2(rnd.exact(m))
    return rnd.div(rnd.ln(log2_m), rnd.ln(rnd.exact(n)))


def _validate_index(rep: ConstantRep, k: int) -> None:
    if k < rep.start_index:
        raise ValueError(
            f"index {k} below sequence start {rep.start_index} (b = {rep.b})"
        )
