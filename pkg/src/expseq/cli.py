"""Command-line surface: build, verify, analyze, export, gapcheck.

Flags can also be supplied through EXPSEQ_-prefixed environment variables
(EXPSEQ_MODE, EXPSEQ_TERMS, ...); explicit flags win.  Exit codes: 0 success,
1 failed verification or bad input value, 2 usage error, 3 computational cap
(precision escalation or cascade budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import analysis, builder, numeric
from .builder import BuildState, CascadeLimitError, EventKind, SequenceSpec
from .checkpoint import (
    CheckpointError,
    load_checkpoint,
    render_checkpoint,
    save_checkpoint,
    state_to_checkpoint,
)
from .intervals import PrecisionCapError
from .numeric import ConstantRep, Mode, constant_digits
from .primes import PrimalityPolicy, cramer_ratio, is_prime, smpr

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CAP = 3


def _env(name: str, default=None):
    return os.environ.get("EXPSEQ_" + name, default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expseq",
        description="Construct and verify exponential prime sequences floor(a*c**(n**d)+b).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the greedy construction")
    p_build.add_argument("--mode", choices=["c", "d"], default=_env("MODE", "c"),
                         help="'c': adjust the base, fixed exponent; 'd': adjust the exponent, base 2")
    p_build.add_argument("--a", default=_env("A", "1"), help="multiplier a (only 1 supported)")
    p_build.add_argument("--b", default=_env("B", "0"), help="offset b in {0,1}")
    p_build.add_argument("--d", default=_env("D", "3/2"),
                         help="fixed rational exponent for mode c (e.g. 3/2 or 1.5)")
    p_build.add_argument("--terms", type=int, default=int(_env("TERMS", "10")),
                         help="number of terms to build")
    p_build.add_argument("--seed", type=int, default=int(_env("SEED", "1")),
                         help="seed for the extra probable-prime rounds")
    p_build.add_argument("--extra-rounds", type=int, default=int(_env("EXTRA_ROUNDS", "2")))
    p_build.add_argument("--precision-cap", type=int, default=int(_env("PRECISION_CAP", "64")),
                         help="escalation budget: max precision as a multiple of the start precision")
    p_build.add_argument("--cascade-cap", type=int, default=int(_env("CASCADE_CAP", "1000000")))
    p_build.add_argument("--checkpoint", default=_env("CHECKPOINT"), help="write state here")
    p_build.add_argument("--quiet", action="store_true", help="suppress the trace")

    p_verify = sub.add_parser("verify", help="re-check all invariants of a checkpoint")
    p_verify.add_argument("--checkpoint", required=True)

    p_an = sub.add_parser("analyze", help="emit verification quantities")
    p_an.add_argument("--checkpoint", default=_env("CHECKPOINT"))
    p_an.add_argument("--report", required=True,
                      choices=["deltas", "lemma1", "lemma2", "lemma3", "tail", "minn"])
    p_an.add_argument("--places", type=int, default=5)
    p_an.add_argument("--j", type=int, default=1, help="projection depth for lemma3")
    p_an.add_argument("--H", default="1", help="gap-bound constant")
    p_an.add_argument("--n", type=int, help="length parameter for tail")
    p_an.add_argument("--d", default="3/2", help="exponent for tail/minn")
    p_an.add_argument("--c", default="2", help="base for minn / c_floor for tail")
    p_an.add_argument("--out", help="output file (default stdout)")

    p_exp = sub.add_parser("export", help="export a checkpoint's sequence")
    p_exp.add_argument("--checkpoint", required=True)
    p_exp.add_argument("--format", required=True, choices=["bfile", "json", "csv"])
    p_exp.add_argument("--out", required=True)

    p_gap = sub.add_parser("gapcheck", help="gap and gap/ln^2 ratio after a prime")
    p_gap.add_argument("--prime", required=True)

    return parser


def _parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _spec_from_args(args) -> SequenceSpec:
    mode = Mode(args.mode)
    policy = PrimalityPolicy(seed=args.seed, extra_rounds=args.extra_rounds)
    return SequenceSpec(
        mode=mode,
        a=_parse_rational(args.a),
        b=_parse_rational(args.b),
        d_fixed=_parse_rational(args.d) if mode is Mode.C else None,
        policy=policy,
        cascade_cap=args.cascade_cap,
    )


def render_trace(state: BuildState) -> list[str]:
    """Human-readable construction trace: terms, constant updates, 'Back to' lines."""
    letter = state.spec.letter
    events = state.events
    lines = []
    for i, e in enumerate(events):
        if e.kind is EventKind.CONSTANT_RAISED:
            continue
        line = e.render(letter)
        annotate = None
        if e.note == "seed" and e.index == 1:
            annotate = "c=2" if state.spec.mode is Mode.C else "d=1"
        elif e.kind is EventKind.ADVANCE and i + 1 < len(events):
            nxt = events[i + 1]
            if nxt.kind is EventKind.CONSTANT_RAISED and nxt.index == e.index:
                annotate = _constant_annotation(state.spec, nxt.index, nxt.value)
        if annotate:
            line += ", " + annotate
        lines.append(line)
    return lines


def _constant_annotation(spec: SequenceSpec, index: int, prime: int) -> str:
    if spec.mode is Mode.C:
        m = prime - int(spec.b)
        return f"c={m}^(1/{index}^({spec.d_fixed}))"
    rep = ConstantRep(
        mode=Mode.D, anchor_prime=prime, anchor_index=index, a=spec.a, b=spec.b
    )
    return f"d={constant_digits(rep, 6)}..."


def cmd_build(args) -> int:
    numeric.set_escalation_cap_factor(args.precision_cap)
    spec = _spec_from_args(args)
    state = builder.build_to(spec, args.terms)
    if not args.quiet:
        for line in render_trace(state):
            print(line)
    if args.checkpoint:
        save_checkpoint(state, args.checkpoint)
        print(f"checkpoint written to {args.checkpoint}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    state, _ = load_checkpoint(args.checkpoint)
    report = builder.verify(state)
    out = report.to_dict()
    out["anchor"] = {
        "prime": str(state.constant.anchor_prime),
        "index": state.constant.anchor_index,
    }
    out["constant_digits"] = constant_digits(state.constant, 30)
    out["primality_policy"] = state.spec.policy.describe()
    print(json.dumps(out, indent=2))
    return EXIT_OK if report.passed else EXIT_FAIL


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    if args.report in ("tail", "minn"):
        if args.report == "tail":
            if args.n is None:
                raise SystemExit("analyze tail requires --n")
            value = analysis.theorem1_tail(args.n, Fraction(args.d), args.H,
                                           c_floor=args.c)
            payload = {"n": args.n, "d": str(Fraction(args.d)), "H": args.H,
                       "c_floor": args.c, "tail": value}
        else:
            value = analysis.min_n_condition(args.c, Fraction(args.d))
            payload = {"c": args.c, "d": str(Fraction(args.d)), "min_n": value}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK

    if not args.checkpoint:
        raise SystemExit(f"analyze {args.report} requires --checkpoint")
    state, _ = load_checkpoint(args.checkpoint)
    if args.report == "deltas":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "delta"])
        for row in analysis.delta_table(state, args.places):
            writer.writerow([row.index, row.delta])
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    if args.report == "lemma1":
        ga = analysis.lemma1_delta(state, args.places)
        payload = {
            "gap": ga.gap,
            "delta1": ga.delta1,
            "remainder_bound": ga.remainder_bound,
            "next_prime": str(ga.next_prime),
            "candidate_floor": str(ga.candidate_floor),
        }
    elif args.report == "lemma2":
        rows = analysis.lemma2_check(state, args.places)
        payload = {"all_passed": all(r.passed for r in rows),
                   "rows": [row.__dict__ for row in rows]}
    else:  # lemma3
        rows = analysis.lemma3_project(state, args.j, args.H, args.places)
        payload = {"j": args.j, "H": args.H,
                   "all_passed": all(r.passed for r in rows),
                   "rows": [row.__dict__ for row in rows]}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def _constant_changed_flags(state: BuildState) -> dict[int, bool]:
    flags: dict[int, bool] = {}
    for e in state.events:
        if e.kind is EventKind.CONSTANT_RAISED:
            flags[e.index] = True
        else:
            flags[e.index] = False
    return flags


def cmd_export(args) -> int:
    state, data = load_checkpoint(args.checkpoint)
    if args.format == "bfile":
        lines = [f"{i} {state.term(i)}" for i in state.indices()]
        text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return EXIT_OK
    if args.format == "json":
        payload = {
            "sequence": data["sequence"],
            "terms": [str(t) for t in state.terms],
            "start_index": state.first_index,
            "constant": {
                "anchor_prime": str(state.constant.anchor_prime),
                "anchor_index": state.constant.anchor_index,
                "digits": constant_digits(state.constant, 50),
            },
            "primality_policy": state.spec.policy.describe(),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    # csv
    flags = _constant_changed_flags(state)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["index", "term", "digits", "constant_changed"])
    for i in state.indices():
        t = state.term(i)
        writer.writerow([i, t, len(str(t)), str(flags.get(i, False)).lower()])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_gapcheck(args) -> int:
    p = int(args.prime)
    if p < 2 or not is_prime(p):
        print(json.dumps({"error": f"{p} is not prime under the policy"}))
        return EXIT_FAIL
    nxt = smpr(p + 1)
    payload = {
        "prime": str(p),
        "next_prime": str(nxt),
        "gap": str(nxt - p),
        "cramer_ratio": cramer_ratio(p),
        "primality_policy": PrimalityPolicy().describe(),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "build": cmd_build,
        "verify": cmd_verify,
        "analyze": cmd_analyze,
        "export": cmd_export,
        "gapcheck": cmd_gapcheck,
    }
    try:
        return handlers[args.command](args)
    except (PrecisionCapError, CascadeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CheckpointError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
