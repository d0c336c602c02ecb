"""Verification quantities for settled build states.

Fractional-part tables, the first-order shift a constant raise induces on
the top term, recheck-stability margins for every earlier index, worst-case
projections under conjectured gap bounds, the convergence tail bound, and
the minimum-length condition.  These apply to C-mode states (the varying
constant is the base); D-mode convergence follows the same mechanism but has
no published closed forms, so the lemma-style operations reject D states.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .builder import BuildState
from .intervals import (
    HARD_PRECISION_BITS,
    IV,
    PrecisionCapError,
    Rounded,
    round_sigfigs,
    trunc_decimals,
)
from .numeric import (
    ConstantRep,
    Mode,
    floor_value,
    frac_interval,
    start_precision,
    term_interval,
)
from .primes import is_prime, smpr

__all__ = [
    "DeltaReport",
    "GapAnalysis",
    "delta_table",
    "lemma1_delta",
    "lemma2_check",
    "lemma3_project",
    "theorem1_tail",
    "min_n_condition",
]

Decimal = Union[int, str, Fraction, float]


def _fraction(x: Decimal) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(str(x))


@dataclass(frozen=True)
class DeltaReport:
    """One row of a fractional-part table or stability check."""

    index: int
    delta: str
    delta_shifted: Optional[str] = None
    margin: Optional[str] = None
    passed: Optional[bool] = None


@dataclass(frozen=True)
class GapAnalysis:
    """Gap to the next prime above the candidate term and its first-order
    effect on the top term's fractional part."""

    gap: str
    delta1: str
    remainder_bound: str
    next_prime: int
    candidate_floor: int


def _require_c_anchor(state: BuildState) -> ConstantRep:
    rep = state.constant
    if rep.mode is not Mode.C:
        raise ValueError("stability analysis is defined for C-mode states")
    if rep.anchor_index != state.last_index:
        raise ValueError("state must be anchored at its last index")
    return rep


def delta_table(state: BuildState, places: int = 6) -> list[DeltaReport]:
    """Fractional parts of c**(k**d) for every built index."""
    rep = state.constant
    rows = []
    for k in state.indices():
        _, frac, rnd = frac_interval(rep, k)
        digits = trunc_decimals(frac, places)
        while digits is None:
            _, frac, rnd = frac_interval(rep, k, rnd.precision * 2)
            digits = trunc_decimals(frac, places)
        rows.append(DeltaReport(index=k, delta=digits))
    return rows


def _rational_pow(rnd: Rounded, base: Fraction, d: Fraction) -> IV:
    """Enclosure of base**d for positive rational base and rational d."""
    powered = rnd.exact(base**d.numerator)
    return powered if d.denominator == 1 else rnd.rootn(powered, d.denominator)


@dataclass(frozen=True)
class _Lemma1Intervals:
    gap: IV
    delta1: IV
    remainder: IV
    next_prime: int
    candidate_floor: int
    prime_candidate: bool


def _lemma1_intervals(state: BuildState, rnd: Rounded) -> _Lemma1Intervals:
    rep = _require_c_anchor(state)
    n = rep.anchor_index
    d = rep.d_fixed
    b = int(rep.b)
    m = rep.base_integer
    q = floor_value(rep, n + 1)
    candidate_floor = q - b
    if is_prime(q, state.spec.policy):
        zero = rnd.exact(0)
        return _Lemma1Intervals(zero, zero, zero, q, candidate_floor, True)
    nxt = smpr(q, state.spec.policy)
    x = term_interval(rep, n + 1, rnd)  # a*c**((n+1)**d) + b
    gap = rnd.sub(rnd.exact(nxt), x)
    # c**((n+1)**d - n**d) = m**(((n+1)/n)**d - 1)
    up_ratio = _rational_pow(rnd, Fraction(n + 1, n), d)
    c_pow = rnd.exp2(
        rnd.mul(rnd.sub(up_ratio, rnd.exact(1)), rnd.log2(rnd.exact(m)))
    )
    down_ratio = _rational_pow(rnd, Fraction(n, n + 1), d)
    delta1 = rnd.mul(rnd.div(gap, c_pow), down_ratio)
    x_pure = rnd.sub(x, rnd.exact(b)) if b else x  # c**((n+1)**d) itself
    remainder = rnd.div(
        rnd.square(gap),
        rnd.pow(x_pure, rnd.sub(rnd.exact(2), down_ratio)),
    )
    return _Lemma1Intervals(gap, delta1, remainder, nxt, candidate_floor, False)


def lemma1_delta(state: BuildState, places: int = 5) -> GapAnalysis:
    """Gap above the next candidate term and the first-order fractional-part
    shift a raise would leave on the current top term, with the second-order
    remainder bound used to size epsilon."""
    rep = _require_c_anchor(state)
    prec = start_precision(rep, rep.anchor_index + 1)
    while True:
        rnd = Rounded(prec)
        iv = _lemma1_intervals(state, rnd)
        if iv.prime_candidate:
            zero = "0." + "0" * places
            return GapAnalysis(zero, zero, "0", iv.next_prime, iv.candidate_floor)
        gap_s = trunc_decimals(iv.gap, places)
        delta1_s = trunc_decimals(iv.delta1, places)
        rem_s = round_sigfigs(iv.remainder, 3)
        if gap_s is not None and delta1_s is not None and rem_s is not None:
            return GapAnalysis(
                gap_s, delta1_s, rem_s, iv.next_prime, iv.candidate_floor
            )
        prec = _double(prec)


def lemma2_check(state: BuildState, places: int = 5) -> list[DeltaReport]:
    """For each earlier index, margin of the sufficient condition under which
    adding the next term leaves it unchanged; epsilon is twice the computed
    second-order remainder bound."""
    rep = _require_c_anchor(state)
    n = rep.anchor_index
    d = rep.d_fixed
    m = rep.base_integer
    prec = start_precision(rep, n + 1)
    while True:
        rnd = Rounded(prec)
        l1 = _lemma1_intervals(state, rnd)
        eps = rnd.mul(rnd.exact(2), l1.remainder)
        log2_m = rnd.log2(rnd.exact(m))
        one = rnd.exact(1)
        rows: list[Optional[DeltaReport]] = []
        for k in range(max(state.first_index, 1), n):
            _, dk, _ = frac_interval(rep, k, prec)
            kn_pow = _rational_pow(rnd, Fraction(k, n), d)
            # c**(n**d - k**d) = m**(1 - (k/n)**d)
            c_pow = rnd.exp2(rnd.mul(rnd.sub(one, kn_pow), log2_m))
            shift = rnd.mul(l1.delta1, rnd.div(kn_pow, c_pow))
            margin = rnd.sub(rnd.sub(rnd.sub(one, eps), shift), dk)
            shifted = rnd.add(dk, shift)
            delta_s = trunc_decimals(dk, places)
            shifted_s = trunc_decimals(shifted, places)
            margin_s = trunc_decimals(margin, places)
            if delta_s is None or shifted_s is None or margin_s is None:
                rows = None
                break
            if margin.lo > 0:
                passed = True
            elif margin.hi < 0:
                passed = False
            else:
                rows = None
                break
            rows.append(
                DeltaReport(
                    index=k,
                    delta=delta_s,
                    delta_shifted=shifted_s,
                    margin=margin_s,
                    passed=passed,
                )
            )
        if rows is not None:
            return rows
        prec = _double(prec)


def lemma3_project(
    state: BuildState, j: int, H: Decimal, places: int = 5
) -> list[DeltaReport]:
    """Worst-case fractional parts after j further steps, assuming every step
    raises the constant with gaps at the conjectured bound H*ln(x)**2."""
    if j < 0:
        raise ValueError("j must be >= 0")
    rep = _require_c_anchor(state)
    n = rep.anchor_index
    d = rep.d_fixed
    h = _fraction(H)
    if h < 0:
        raise ValueError("H must be >= 0")
    prec = start_precision(rep, n + j + 1)
    while True:
        rnd = Rounded(prec)
        rows = _project_rows(state, rep, n, d, h, j, places, rnd)
        if rows is not None:
            return rows
        prec = _double(prec)


def _project_rows(state, rep, n, d, h, j, places, rnd):
    # Future constants lie in [c_n, c_n + tail]; use that enclosure so the
    # projection is a certified worst case.  The raise taking the sequence
    # from n+i to n+i+1 terms shifts delta_k by
    # g(U_{n+i}) * (k/(n+i+1))**d / c**((n+i+1)**d - k**d), and under the
    # conjectured gap bound g(U_{n+i}) <= H * ((n+i+1)**d * ln c)**2.
    from .numeric import constant_interval

    c_now = constant_interval(rep, rnd.precision)
    c_iv = IV(c_now.lo, c_now.hi)
    if j > 0 and h > 0:
        tail = _tail_interval(n, d, h, Fraction(2), rnd)
        c_iv = IV(c_iv.lo, rnd.add(IV(c_iv.hi, c_iv.hi), tail).hi)
    ln2_c = rnd.square(rnd.ln(c_iv))
    h_iv = rnd.exact(h)
    rows = []
    for k in range(max(state.first_index, 1), n):
        _, dk, _ = frac_interval(rep, k, rnd.precision)
        kd = _rational_pow(rnd, Fraction(k), d)
        proj = dk
        for i in range(j):
            top = n + i + 1  # index being added by this raise
            growth = _rational_pow(rnd, Fraction(top), d)
            g = rnd.mul(h_iv, rnd.mul(rnd.square(growth), ln2_c))
            denom = rnd.pow(c_iv, rnd.sub(growth, kd))
            factor = _rational_pow(rnd, Fraction(k, top), d)
            proj = rnd.add(proj, rnd.mul(rnd.div(g, denom), factor))
        delta_s = trunc_decimals(dk, places)
        proj_s = trunc_decimals(proj, places)
        if delta_s is None or proj_s is None:
            return None
        margin = rnd.sub(rnd.exact(1), proj)
        margin_s = trunc_decimals(margin, places)
        if margin_s is None:
            return None
        rows.append(
            DeltaReport(
                index=k,
                delta=delta_s,
                delta_shifted=proj_s,
                margin=margin_s,
                passed=bool(proj.hi < 1),
            )
        )
    return rows


def theorem1_tail(
    n: int,
    d: Union[Fraction, str],
    H: Decimal,
    c_floor: Decimal = 2,
    sigfigs: int = 13,
) -> str:
    """Bound on the total future increase of the constant after index n:
    c_floor * H * ln(c_floor)**2 * sum((n+k)**d / c_floor**((n+k)**d), k >= 1).

    Requires (n+1)**d >= 1 + 2/ln 2, the regime where the summand is
    decreasing in the constant.
    """
    d = Fraction(d)
    h = _fraction(H)
    cf = _fraction(c_floor)
    if d <= 1:
        raise ValueError("d must be > 1")
    if cf < 2:
        raise ValueError("c_floor must be >= 2")
    if h < 0:
        raise ValueError("H must be >= 0")
    _check_tail_precondition(n, d)
    if h == 0:
        return "0"
    prec = 256
    while True:
        rnd = Rounded(prec)
        tail = _tail_interval(n, d, h, cf, rnd, sigfigs)
        s = round_sigfigs(tail, sigfigs)
        if s is not None:
            return s
        prec = _double(prec)


def _check_tail_precondition(n: int, d: Fraction) -> None:
    prec = 96
    while True:
        rnd = Rounded(prec)
        lhs = _rational_pow(rnd, Fraction(n + 1), d)
        rhs = rnd.add(rnd.exact(1), rnd.div(rnd.exact(2), rnd.ln(rnd.exact(2))))
        if lhs.lo >= rhs.hi:
            return
        if lhs.hi < rhs.lo:
            raise ValueError(
                f"(n+1)**d = {float(lhs.lo):.4f} violates the (n+1)**d >= 1 + 2/ln 2 precondition"
            )
        prec = _double(prec)


def _tail_interval(
    n: int, d: Fraction, h: Fraction, cf: Fraction, rnd: Rounded, sigfigs: int = 12
) -> IV:
    log2_cf = rnd.log2(rnd.exact(cf))
    partial = rnd.exact(0)
    k = 1
    cutoff_scale = Fraction(1, 10 ** (sigfigs + 10))
    while True:
        e = _rational_pow(rnd, Fraction(n + k), d)
        term = rnd.div(e, rnd.exp2(rnd.mul(e, log2_cf)))
        partial = rnd.add(partial, term)
        k += 1
        e_next = _rational_pow(rnd, Fraction(n + k), d)
        nxt = rnd.div(e_next, rnd.exp2(rnd.mul(e_next, log2_cf)))
        if Fraction(*nxt.hi.as_integer_ratio()) < cutoff_scale * Fraction(
            *partial.lo.as_integer_ratio()
        ):
            # Remaining terms decay geometrically with ratio < 1/2 in this
            # regime, so four times the next term bounds the whole rest.
            rest = rnd.mul(rnd.exact(4), nxt)
            partial = IV(partial.lo, rnd.add(partial, rest).hi)
            break
        if k > 100_000:
            raise PrecisionCapError("tail sum did not reach its cutoff")
    scale = rnd.mul(
        rnd.mul(rnd.exact(cf), rnd.exact(h)), rnd.square(rnd.ln(rnd.exact(cf)))
    )
    return rnd.mul(scale, partial)


def min_n_condition(c: Decimal, d: Union[Fraction, str], max_n: int = 10_000_000) -> int:
    """Smallest n from which c**((n+1)**d - n**d) / (n**d * (n+1)**d) > ln(c)**2
    holds for every later index.

    The inequality can hold vacuously at tiny n before the denominator growth
    overtakes it, so the ascending scan records the last failing index and
    keeps going through a stabilization window (past twice that index) before
    declaring the crossing final.
    """
    cf = _fraction(c)
    d = Fraction(d)
    if cf < 2:
        raise ValueError("c must be >= 2")
    if d <= 1:
        raise ValueError("d must be > 1")
    last_fail = 0
    for n in range(1, max_n + 1):
        if not _length_condition_holds(cf, d, n):
            last_fail = n
        elif n >= max(2 * last_fail + 256, 256):
            return last_fail + 1 if last_fail else 1
    raise ValueError(f"condition did not stabilize below n = {max_n}")


def _length_condition_holds(cf: Fraction, d: Fraction, n: int) -> bool:
    prec = 128
    while True:
        rnd = Rounded(prec)
        log2_c = rnd.log2(rnd.exact(cf))
        nd = _rational_pow(rnd, Fraction(n), d)
        n1d = _rational_pow(rnd, Fraction(n + 1), d)
        power = rnd.exp2(rnd.mul(rnd.sub(n1d, nd), log2_c))
        lhs = rnd.div(power, rnd.mul(nd, n1d))
        rhs = rnd.square(rnd.ln(rnd.exact(cf)))
        if lhs.lo > rhs.hi:
            return True
        if lhs.hi < rhs.lo:
            return False
        prec = _double(prec)


def _double(prec: int) -> int:
    nxt = prec * 2
    if nxt > HARD_PRECISION_BITS:
        raise PrecisionCapError("analysis precision escalation exhausted")
    return nxt
