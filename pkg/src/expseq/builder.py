"""Greedy construction of exponential prime sequences with backtracking.

One extension step computes the floor of the next term; if it is prime it is
appended as-is, otherwise the smallest prime above it re-anchors the
constant and a recheck sweep walks the earlier indices.  A recheck that
finds a changed composite floor jumps back: the term is bumped to the next
prime, the constant re-anchors at that index, everything above is discarded
and the sweep restarts.  A changed floor that happens to be prime replaces
the stored term in place.  The full cascade is replayable from the event
log.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .intervals import PrecisionCapError
from .numeric import ConstantRep, Mode, constant_interval, floor_value
from .primes import DEFAULT_POLICY, PrimalityPolicy, is_prime, smpr

__all__ = [
    "SequenceSpec",
    "BuildState",
    "BuildEvent",
    "EventKind",
    "CascadeLimitError",
    "VerificationReport",
    "init",
    "extend",
    "build_to",
    "verify",
]

DEFAULT_CASCADE_CAP = 1_000_000


class CascadeLimitError(RuntimeError):
    """The recheck cascade exceeded its iteration budget."""


class EventKind(str, Enum):
    ADVANCE = "advance"
    CONSTANT_RAISED = "constant_raised"
    BACKTRACK = "backtrack"


@dataclass(frozen=True)
class BuildEvent:
    kind: EventKind
    index: int
    value: int
    note: str = ""

    def render(self, letter: str) -> str:
        if self.kind is EventKind.BACKTRACK:
            return f"Back to {letter}({self.index})={self.value}"
        return f"{letter}({self.index})={self.value}"


@dataclass(frozen=True)
class SequenceSpec:
    """Configuration of one sequence family u(n) = floor(a*c**(n**d) + b)."""

    mode: Mode = Mode.C
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)
    d_fixed: Optional[Fraction] = None  # C mode only; defaults to 3/2 there
    policy: PrimalityPolicy = DEFAULT_POLICY
    cascade_cap: int = DEFAULT_CASCADE_CAP

    def __post_init__(self):
        if self.a != 1:
            raise ValueError("only a = 1 is supported")
        if self.b not in (Fraction(0), Fraction(1)):
            raise ValueError("only b in {0, 1} is supported")
        if self.mode is Mode.C:
            if self.d_fixed is None:
                object.__setattr__(self, "d_fixed", Fraction(3, 2))
            if self.d_fixed <= 1:
                raise ValueError("C mode requires a rational d > 1")
        elif self.d_fixed is not None:
            raise ValueError("D mode adjusts d; do not fix it")

    @property
    def start_index(self) -> int:
        # Sequences with b > 0 start at 0, others at 1.
        return 0 if self.b > 0 else 1

    @property
    def letter(self) -> str:
        return "u" if self.mode is Mode.C else "v"

    def initial_terms(self) -> list[int]:
        if self.b > 0:
            return [2, 3]  # indices 0 and 1, constant-independent
        return [2]  # index 1

    def initial_constant(self) -> ConstantRep:
        if self.mode is Mode.C:
            # Anchor (p, 1) gives c = p - b = 2 in both b cases.
            return ConstantRep(
                mode=Mode.C,
                anchor_prime=2 + int(self.b),
                anchor_index=1,
                a=self.a,
                b=self.b,
                d_fixed=self.d_fixed,
            )
        # D-mode seed: d = 1 by convention (anchor_index 1).
        return ConstantRep(
            mode=Mode.D,
            anchor_prime=2 + int(self.b),
            anchor_index=1,
            a=self.a,
            b=self.b,
        )


@dataclass
class Counters:
    extends: int = 0
    advances: int = 0
    rechecks: int = 0
    backtracks: int = 0
    replacements: int = 0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class BuildState:
    """Terms, the exact constant, and the full replayable event log."""

    spec: SequenceSpec
    terms: list[int]
    constant: ConstantRep
    events: list[BuildEvent] = field(default_factory=list)
    counters: Counters = field(default_factory=Counters)

    @property
    def first_index(self) -> int:
        return self.spec.start_index

    @property
    def last_index(self) -> int:
        return self.first_index + len(self.terms) - 1

    def term(self, index: int) -> int:
        return self.terms[index - self.first_index]

    def indices(self) -> range:
        return range(self.first_index, self.last_index + 1)


def init(spec: SequenceSpec) -> BuildState:
    """Fresh state holding the forced initial terms."""
    terms = spec.initial_terms()
    constant = spec.initial_constant()
    state = BuildState(spec=spec, terms=terms, constant=constant)
    for i, t in zip(state.indices(), terms):
        state.events.append(BuildEvent(EventKind.ADVANCE, i, t, note="seed"))
    return state


def _floor_at(state: BuildState, k: int) -> int:
    return floor_value(state.constant, k)


def _reanchor(state: BuildState, index: int, prime: int) -> None:
    state.constant = ConstantRep(
        mode=state.spec.mode,
        anchor_prime=prime,
        anchor_index=index,
        a=state.spec.a,
        b=state.spec.b,
        d_fixed=state.spec.d_fixed,
    )


def extend(state: BuildState) -> BuildState:
    """Add exactly one net new term, letting any backtracking cascade settle."""
    spec = state.spec
    policy = spec.policy
    target = len(state.terms) + 1
    budget = spec.cascade_cap
    state.counters.extends += 1

    while len(state.terms) < target:
        n = state.last_index + 1
        q = _floor_at(state, n)
        p = smpr(q, policy)
        if p == q:
            state.terms.append(p)
            state.events.append(BuildEvent(EventKind.ADVANCE, n, p, note="floor is prime"))
            state.counters.advances += 1
            continue

        # Constant must be raised to land on the next prime.
        state.terms.append(p)
        _reanchor(state, n, p)
        state.counters.advances += 1
        state.events.append(
            BuildEvent(EventKind.ADVANCE, n, p, note=f"floor {q} composite")
        )
        state.events.append(
            BuildEvent(EventKind.CONSTANT_RAISED, n, p, note=f"smpr({q})")
        )

        # Recheck sweep over k = 1 .. anchor-1 under the raised constant.
        k = 1
        while k < state.constant.anchor_index:
            budget -= 1
            if budget < 0:
                raise CascadeLimitError(
                    f"recheck cascade exceeded {spec.cascade_cap} iterations"
                )
            state.counters.rechecks += 1
            q2 = _floor_at(state, k)
            cur = state.term(k)
            if q2 == cur:
                k += 1
                continue
            if is_prime(q2, policy):
                # Changed but prime: accept in place, constant unchanged.
                state.terms[k - state.first_index] = q2
                state.events.append(
                    BuildEvent(
                        EventKind.BACKTRACK,
                        k,
                        q2,
                        note=f"replaced {cur} in place (floor is prime)",
                    )
                )
                state.counters.replacements += 1
                k += 1
                continue
            # Changed and composite: jump back, re-anchor here, drop the rest.
            p2 = smpr(q2, policy)
            del state.terms[k - state.first_index :]
            state.terms.append(p2)
            _reanchor(state, k, p2)
            state.events.append(
                BuildEvent(
                    EventKind.BACKTRACK,
                    k,
                    p2,
                    note=f"floor moved {cur} -> {q2} (composite); rebuilt from here",
                )
            )
            state.events.append(
                BuildEvent(EventKind.CONSTANT_RAISED, k, p2, note=f"smpr({q2})")
            )
            state.counters.backtracks += 1
            k = 1
    return state


def build_to(spec: SequenceSpec, count: int) -> BuildState:
    """Build until `count` terms exist; deterministic for a given spec."""
    state = init(spec)
    if count < len(state.terms):
        raise ValueError(f"count must be >= {len(state.terms)} forced initial terms")
    while len(state.terms) < count:
        extend(state)
    return state


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify(state: BuildState) -> VerificationReport:
    """Re-assert the construction invariants; failures become report entries."""
    checks: list[CheckResult] = []
    policy = state.spec.policy

    bad = [i for i in state.indices() if not is_prime(state.term(i), policy)]
    checks.append(
        CheckResult(
            "terms_prime",
            not bad,
            "all terms pass the primality policy" if not bad else f"composite at {bad}",
        )
    )

    increasing = all(b > a for a, b in zip(state.terms, state.terms[1:]))
    checks.append(CheckResult("terms_strictly_increasing", increasing))

    mismatches = []
    for i in state.indices():
        try:
            got = _floor_at(state, i)
        except Exception as exc:  # precision cap: report, do not crash
            mismatches.append((i, f"error: {exc}"))
            continue
        if got != state.term(i):
            mismatches.append((i, got))
    checks.append(
        CheckResult(
            "floors_reproduce_terms",
            not mismatches,
            "floors under the final constant equal stored terms"
            if not mismatches
            else f"mismatch at {mismatches[:3]}",
        )
    )

    anchor = state.constant
    anchor_ok = (
        state.first_index <= anchor.anchor_index <= state.last_index
        and state.term(anchor.anchor_index) == anchor.anchor_prime
    )
    checks.append(
        CheckResult(
            "anchor_exact",
            anchor_ok,
            f"anchored at index {anchor.anchor_index} on {anchor.anchor_prime}",
        )
    )

    checks.append(_check_constant_monotone(state))
    return VerificationReport(tuple(checks))


def _check_constant_monotone(state: BuildState) -> CheckResult:
    """Constants across raise events must strictly increase."""
    anchors = [
        (e.index, e.value)
        for e in state.events
        if e.kind is EventKind.CONSTANT_RAISED
    ]
    seed = state.spec.initial_constant()
    anchors.insert(0, (seed.anchor_index, seed.anchor_prime))
    prev = None
    for idx, prime in anchors:
        rep = ConstantRep(
            mode=state.spec.mode,
            anchor_prime=prime,
            anchor_index=idx,
            a=state.spec.a,
            b=state.spec.b,
            d_fixed=state.spec.d_fixed,
        )
        if prev is not None and not _constant_less(prev, rep):
            return CheckResult(
                "constant_monotone",
                False,
                f"constant did not increase at anchor ({idx}, {prime})",
            )
        prev = rep
    return CheckResult(
        "constant_monotone", True, f"{len(anchors)} anchors strictly increasing"
    )


def _constant_less(rep_a: ConstantRep, rep_b: ConstantRep) -> bool:
    """Certified strict comparison of two symbolic constants."""
    if (rep_a.anchor_index, rep_a.anchor_prime) == (
        rep_b.anchor_index,
        rep_b.anchor_prime,
    ):
        return False
    prec = 96
    while prec <= 1 << 20:
        iva = constant_interval(rep_a, prec)
        ivb = constant_interval(rep_b, prec)
        if iva.hi < ivb.lo:
            return True
        if ivb.hi < iva.lo:
            return False
        prec *= 2
    raise PrecisionCapError("could not separate two constants")
