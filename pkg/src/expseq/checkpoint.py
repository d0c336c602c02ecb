"""Versioned JSON checkpoints for build states.

Every arbitrary-precision number is serialized as a decimal string so files
are portable across word sizes and languages.  Loading a checkpoint and
saving it again reproduces the file byte for byte; timestamps are part of
the payload and are only stamped when a state is first checkpointed (honoring
SOURCE_DATE_EPOCH for reproducible output).
"""

from __future__ import annotations

import json
import os
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .builder import BuildEvent, BuildState, Counters, EventKind, SequenceSpec
from .numeric import ConstantRep, Mode
from .primes import PrimalityPolicy

__all__ = [
    "FORMAT_VERSION",
    "CheckpointError",
    "state_to_checkpoint",
    "checkpoint_to_state",
    "save_checkpoint",
    "load_checkpoint",
]

FORMAT_VERSION = 1


class CheckpointError(ValueError):
    """Checkpoint file is unreadable or structurally invalid."""


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch else int(time.time())
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


def state_to_checkpoint(
    state: BuildState,
    created_at: Optional[str] = None,
    updated_at: Optional[str] = None,
) -> dict:
    spec = state.spec
    now = _timestamp()
    return {
        "format_version": FORMAT_VERSION,
        "sequence": {
            "mode": spec.mode.value,
            "a": str(spec.a),
            "b": str(spec.b),
            "d_fixed": str(spec.d_fixed) if spec.d_fixed is not None else None,
            "start_index": spec.start_index,
            "cascade_cap": spec.cascade_cap,
        },
        "primality_policy": {
            "seed": spec.policy.seed,
            "extra_rounds": spec.policy.extra_rounds,
            "deterministic_below": str(spec.policy.deterministic_below),
        },
        "anchor": {
            "prime": str(state.constant.anchor_prime),
            "index": state.constant.anchor_index,
        },
        "terms": [str(t) for t in state.terms],
        "events": [
            {
                "kind": e.kind.value,
                "index": e.index,
                "value": str(e.value),
                "note": e.note,
            }
            for e in state.events
        ],
        "counters": state.counters.to_dict(),
        "created_at": created_at or now,
        "updated_at": updated_at or now,
    }


def checkpoint_to_state(data: dict) -> BuildState:
    try:
        version = data["format_version"]
        if version != FORMAT_VERSION:
            raise CheckpointError(f"unsupported checkpoint version {version!r}")
        seq = data["sequence"]
        pol = data["primality_policy"]
        spec = SequenceSpec(
            mode=Mode(seq["mode"]),
            a=Fraction(seq["a"]),
            b=Fraction(seq["b"]),
            d_fixed=Fraction(seq["d_fixed"]) if seq["d_fixed"] is not None else None,
            policy=PrimalityPolicy(
                seed=int(pol["seed"]),
                extra_rounds=int(pol["extra_rounds"]),
                deterministic_below=int(pol["deterministic_below"]),
            ),
            cascade_cap=int(seq.get("cascade_cap", 1_000_000)),
        )
        constant = ConstantRep(
            mode=spec.mode,
            anchor_prime=int(data["anchor"]["prime"]),
            anchor_index=int(data["anchor"]["index"]),
            a=spec.a,
            b=spec.b,
            d_fixed=spec.d_fixed,
        )
        events = [
            BuildEvent(
                kind=EventKind(e["kind"]),
                index=int(e["index"]),
                value=int(e["value"]),
                note=e.get("note", ""),
            )
            for e in data["events"]
        ]
        counters = Counters(**data.get("counters", {}))
        state = BuildState(
            spec=spec,
            terms=[int(t) for t in data["terms"]],
            constant=constant,
            events=events,
            counters=counters,
        )
    except CheckpointError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointError(f"malformed checkpoint: {exc}") from exc
    if state.spec.start_index + len(state.terms) - 1 < state.constant.anchor_index:
        raise CheckpointError("anchor index lies beyond the stored terms")
    return state


def render_checkpoint(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def save_checkpoint(
    source: Union[BuildState, dict], path: Union[str, Path]
) -> dict:
    data = source if isinstance(source, dict) else state_to_checkpoint(source)
    Path(path).write_text(render_checkpoint(data))
    return data


def load_checkpoint(path: Union[str, Path]) -> tuple[BuildState, dict]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    return checkpoint_to_state(data), data
