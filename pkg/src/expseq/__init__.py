"""Construction and certified verification of exponential prime sequences."""

from .builder import (
    BuildEvent,
    BuildState,
    CascadeLimitError,
    EventKind,
    SequenceSpec,
    build_to,
    extend,
    init,
    verify,
)
from .intervals import PrecisionCapError
from .numeric import (
    CertifiedReal,
    ConstantRep,
    Mode,
    constant_digits,
    eval_term,
    floor_certified,
)
from .primes import (
    DEFAULT_POLICY,
    GapRecord,
    PrimalityPolicy,
    cramer_ratio,
    gap_real,
    is_prime,
    smpr,
)

__version__ = "0.1.0"

__all__ = [
    "BuildEvent",
    "BuildState",
    "CascadeLimitError",
    "CertifiedReal",
    "ConstantRep",
    "DEFAULT_POLICY",
    "EventKind",
    "GapRecord",
    "Mode",
    "PrecisionCapError",
    "PrimalityPolicy",
    "SequenceSpec",
    "build_to",
    "constant_digits",
    "cramer_ratio",
    "eval_term",
    "extend",
    "floor_certified",
    "gap_real",
    "init",
    "is_prime",
    "smpr",
    "verify",
    "__version__",
]
