"""Command-line front end: experiment selection, CSV and plot emission.

Exit codes: 0 success, 2 validation error (nothing computed), 1 runtime
error.  CSV output is UTF-8 with LF line endings, a header line and
12-significant-digit floats, so identical invocations (including the
seed) produce byte-identical files.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiments, noise, svgplot
from .circuit import InitialStateKind, build_instance, reference_distribution

__all__ = ["parse_and_run", "write_csv", "main"]

_KINDS = {kind.value: kind for kind in InitialStateKind}


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def write_csv(rows, schema, path) -> None:
    """Write homogeneous rows under a header; floats get 12 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(schema) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _parse_values(text: str) -> list[float]:
    """Grid syntax: either 'v1,v2,...' or 'start:stop:step' (ends inclusive)."""
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise ValueError(f"bad range {text!r}, expected start:stop:step")
        start, stop, step = (float(p) for p in pieces)
        if step <= 0:
            raise ValueError("range step must be positive")
        values = []
        v = start
        while v <= stop + 1e-12:
            values.append(round(v, 12))
            v += step
        return values
    return [float(p) for p in text.split(",") if p]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixshor",
        description="Density-matrix simulation of single-control-qubit period finding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_args(p):
        p.add_argument("--n", type=int, required=True, help="number to factor, N")
        p.add_argument("--a", type=int, required=True, help="base coprime to N")

    def add_kind(p, default="pure"):
        p.add_argument("--kind", choices=sorted(_KINDS), default=default)

    p = sub.add_parser("profile", help="exact per-stage entanglement and mixedness")
    add_instance_args(p)
    add_kind(p)
    p.add_argument("--epsilon", type=float, default=0.0, help="control mixing strength")
    p.add_argument("--out", required=True)
    p.add_argument("--emit-plot", action="store_true")

    p = sub.add_parser("ensemble", help="stage profile averaged over all (N, a)")
    p.add_argument("--bits", type=int, choices=(4, 5), required=True)
    add_kind(p, default="mixed-n")
    p.add_argument("--out", required=True)
    p.add_argument("--emit-plot", action="store_true")

    p = sub.add_parser("noise", help="Monte Carlo success counts over noise levels")
    add_instance_args(p)
    add_kind(p)
    p.add_argument("--noise", choices=(noise.MEASUREMENT, noise.PAULI), required=True)
    p.add_argument("--probs", required=True, help="list v1,v2,... or range start:stop:step")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exclude-control", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--emit-plot", action="store_true")

    p = sub.add_parser("mix", help="exact success and entanglement vs control mixing")
    add_instance_args(p)
    add_kind(p)
    p.add_argument("--epsilons", required=True, help="list v1,v2,... or range start:stop:step")
    p.add_argument("--out", required=True)
    p.add_argument("--emit-plot", action="store_true")

    p = sub.add_parser("baseline", help="success probability of uniform random outcomes")
    add_instance_args(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("oracle-check", help="compare the staged engine to the closed-form oracle")
    add_instance_args(p)
    p.add_argument("--tol", type=float, default=1e-9)

    return parser


def _cmd_profile(args) -> int:
    inst = build_instance(args.n, args.a)
    result = experiments.tree_profile(inst, _KINDS[args.kind], epsilon=args.epsilon)
    rows = [(r.stage, r.kind, r.avg_logneg, r.mixedness) for r in result.reports]
    write_csv(rows, ["stage", "kind", "avg_logneg", "mixedness"], args.out)
    if args.emit_plot:
        idx = list(range(len(rows)))
        svgplot.write_line_plot(
            _plot_path(args.out),
            {
                "avg_logneg": (idx, [r.avg_logneg for r in result.reports]),
                "mixedness": (idx, [r.mixedness for r in result.reports]),
            },
            xlabel="sampling point",
            ylabel="value",
            title=f"N={args.n} a={args.a} kind={args.kind}",
        )
    return 0


def _cmd_ensemble(args) -> int:
    reports = experiments.ensemble_profile(args.bits, _KINDS[args.kind])
    rows = [(r.stage, r.kind, r.avg_logneg, r.mixedness) for r in reports]
    write_csv(rows, ["stage", "kind", "avg_logneg", "mixedness"], args.out)
    if args.emit_plot:
        idx = list(range(len(rows)))
        svgplot.write_line_plot(
            _plot_path(args.out),
            {
                "avg_logneg": (idx, [r.avg_logneg for r in reports]),
                "mixedness": (idx, [r.mixedness for r in reports]),
            },
            xlabel="sampling point",
            ylabel="value",
            title=f"{args.bits}-digit ensemble, kind={args.kind}",
        )
    return 0


def _cmd_noise(args) -> int:
    inst = build_instance(args.n, args.a)
    probs = _parse_values(args.probs)
    for p in probs:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"noise probability {p} outside [0, 1]")
    if args.runs < 1:
        raise ValueError("--runs must be at least 1")
    rows = experiments.monte_carlo_sweep(
        inst, _KINDS[args.kind], args.noise, probs, args.runs,
        exclude_control=args.exclude_control, seed=args.seed,
    )
    write_csv(
        [(r.prob, r.successes, r.runs, r.rate) for r in rows],
        ["prob", "successes", "runs", "rate"],
        args.out,
    )
    if args.emit_plot:
        svgplot.write_line_plot(
            _plot_path(args.out),
            {"success rate": ([r.prob for r in rows], [r.rate for r in rows])},
            xlabel="noise probability",
            ylabel="success rate",
            title=f"N={args.n} a={args.a} {args.noise} noise",
        )
    return 0


def _cmd_mix(args) -> int:
    inst = build_instance(args.n, args.a)
    epsilons = _parse_values(args.epsilons)
    rows = experiments.mix_sweep(inst, _KINDS[args.kind], epsilons)
    write_csv(
        [(r.epsilon, r.success_prob, r.avg_entanglement) for r in rows],
        ["epsilon", "success_prob", "avg_entanglement"],
        args.out,
    )
    if args.emit_plot:
        svgplot.write_line_plot(
            _plot_path(args.out),
            {
                "success_prob": ([r.epsilon for r in rows], [r.success_prob for r in rows]),
                "avg_entanglement": (
                    [r.epsilon for r in rows],
                    [r.avg_entanglement for r in rows],
                ),
            },
            xlabel="epsilon",
            ylabel="value",
            title=f"N={args.n} a={args.a} kind={args.kind}",
        )
    return 0


def _cmd_baseline(args) -> int:
    inst = build_instance(args.n, args.a)
    value = experiments.random_baseline(inst)
    if args.out:
        write_csv([(inst.N, inst.a, value)], ["N", "a", "baseline"], args.out)
    print(f"random baseline for N={inst.N}, a={inst.a}: {value:.12g}")
    return 0


def _cmd_oracle_check(args) -> int:
    inst = build_instance(args.n, args.a)
    worst = 0.0
    for kind in InitialStateKind:
        leaf = experiments.tree_leaf_distribution(inst, kind)
        oracle = reference_distribution(inst, kind)
        dev = float(np.max(np.abs(leaf - oracle)))
        worst = max(worst, dev)
        print(f"kind={kind.value}: max outcome deviation {dev:.3g}")
    if worst >= args.tol:
        print(f"FAIL: deviation {worst:.3g} exceeds {args.tol:.3g}")
        return 1
    print(f"OK: engine matches the closed-form distribution within {args.tol:.3g}")
    return 0


def _plot_path(out: str) -> str:
    stem = out[:-4] if out.lower().endswith(".csv") else out
    return stem + ".svg"


_COMMANDS = {
    "profile": _cmd_profile,
    "ensemble": _cmd_ensemble,
    "noise": _cmd_noise,
    "mix": _cmd_mix,
    "baseline": _cmd_baseline,
    "oracle-check": _cmd_oracle_check,
}


def parse_and_run(argv) -> int:
    """Parse arguments, validate them, then run the selected experiment."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - surface anything else as runtime failure
        print(f"runtime error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(parse_and_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
