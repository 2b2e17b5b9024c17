"""Command-line entry point.

Subcommands:

* ``props``    run named property suites and report one line per property;
* ``sample``   label a uniform random sample of the benchmark and write
               control.csv, operational.csv, front.csv, metrics.json and
               (unless ``--no-plot``) PNG figures;
* ``evolve``   run the seed-and-grow search and write the same file set;
* ``figure1``  print the seven-point toy configuration and its front.

Exit codes: 0 on success (including *expected* falsifications in ``props``),
1 on runtime failures or unexpected verdicts, 2 on usage errors.  Identical
invocations write byte-identical files; outputs are written atomically.
The default seed is 137 and can be overridden by the OPTFRONT_SEED
environment variable; explicit ``--seed`` flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from . import benchmark, pareto, suites
from .finset import set_equal


def _default_seed() -> int:
    try:
        return int(os.environ.get("OPTFRONT_SEED", "137"))
    except ValueError:
        return 137


def _parse_rect(text: str) -> benchmark.Rect2:
    try:
        parts = [float(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError
        return benchmark.Rect2((parts[0], parts[1]), (parts[2], parts[3]))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'xlo,xhi,ylo,yhi' with xlo<=xhi and ylo<=yhi, got {text!r}"
        )


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    return f"{value:.6g}"


def _write_atomic(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_outputs(outdir: str, control_rows, operational_rows, front_rows, metrics, plot: bool) -> None:
    os.makedirs(outdir, exist_ok=True)
    _write_atomic(
        os.path.join(outdir, "control.csv"),
        "x,y,safe,pareto\n"
        + "".join(f"{_fmt(x)},{_fmt(y)},{_fmt(s)},{_fmt(p)}\n" for x, y, s, p in control_rows),
    )
    _write_atomic(
        os.path.join(outdir, "operational.csv"),
        "f1,f2,safe,pareto\n"
        + "".join(f"{_fmt(a)},{_fmt(b)},{_fmt(s)},{_fmt(p)}\n" for a, b, s, p in operational_rows),
    )
    _write_atomic(
        os.path.join(outdir, "front.csv"),
        "f1,f2\n" + "".join(f"{_fmt(a)},{_fmt(b)}\n" for a, b in front_rows),
    )
    _write_atomic(
        os.path.join(outdir, "metrics.json"),
        json.dumps(metrics, indent=2, sort_keys=True) + "\n",
    )
    if plot:
        from . import plots

        plots.render_operational(operational_rows, os.path.join(outdir, "operational.png"))
        plots.render_control(control_rows, os.path.join(outdir, "control.png"))


def _cmd_props(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    unknown = [n for n in names if n not in suites.SUITES]
    if unknown:
        print(f"unknown suite: {', '.join(unknown)}", file=sys.stderr)
        print(f"available: all, {', '.join(suites.SUITES)}", file=sys.stderr)
        return 2
    rows = suites.run_suites(names, args.n, args.seed)
    width = max(len(f"{r.suite}/{r.name}") for r in rows)
    failures = 0
    for r in rows:
        marker = "ok " if r.ok else "BAD"
        expected = "expected falsification" if r.expect == suites.EXPECT_FALSIFY else "expected pass"
        print(f"[{marker}] {r.suite + '/' + r.name:<{width}}  {r.result.summary()}  ({expected})")
        if not r.ok:
            failures += 1
    print(f"{len(rows) - failures}/{len(rows)} properties met their expected verdict")
    return 0 if failures == 0 else 1


def _cmd_sample(args) -> int:
    config = benchmark.BenchConfig(
        seed=args.seed,
        rect=args.rect,
        threshold=args.threshold,
        sample_size=args.n,
    )
    labeled, metrics = benchmark.run_sampling(config)
    control_rows = [(p.control[0], p.control[1], p.safe, p.pareto) for p in labeled]
    operational_rows = [(p.objectives[0], p.objectives[1], p.safe, p.pareto) for p in labeled]
    front_rows = [(p.objectives[0], p.objectives[1]) for p in labeled if p.pareto]
    _write_outputs(args.out, control_rows, operational_rows, front_rows, metrics, args.plot)
    print(f"wrote {args.out}: {len(labeled)} points, front size {metrics['front_size']}")
    if metrics["f1min"] is not None:
        print(f"  f1min={metrics['f1min']:.3f} at {tuple(metrics['argmin_f1'])}")
        print(f"  f2min={metrics['f2min']:.3e} at {tuple(metrics['argmin_f2'])}")
    return 0


def _cmd_evolve(args) -> int:
    config = benchmark.BenchConfig(
        seed=args.seed,
        rect=args.rect,
        threshold=args.threshold,
        grid_side=args.grid,
        iterations=args.iters,
        explore_prob=args.epsilon,
        mutation_scale=args.sigma,
        invariant_check_every=args.check_every,
    )
    state, metrics = benchmark.run_evolution(config)
    front_controls = set(state.pys)
    control_rows = [
        (c[0], c[1], img[1] <= config.threshold, c in front_controls)
        for c, img in zip(state.pys + state.npys, state.pys_f + state.npys_f)
    ]
    operational_rows = [
        (img[0], img[1], img[1] <= config.threshold, c in front_controls)
        for c, img in zip(state.pys + state.npys, state.pys_f + state.npys_f)
    ]
    front_rows = list(state.pys_f)
    _write_outputs(args.out, control_rows, operational_rows, front_rows, metrics, args.plot)
    print(
        f"wrote {args.out}: {metrics['evaluations']} evaluations, "
        f"front size {metrics['front_size']}, invariant_ok={metrics['invariant_ok']}"
    )
    return 0


def _cmd_figure1(_args) -> int:
    names = list(suites.TOY_POINTS)
    for name in names:
        print(f"{name} = {suites.TOY_POINTS[name]}")
    front = pareto.pareto_front(list(suites.TOY_POINTS.values()))
    members = [n for n in names if suites.TOY_POINTS[n] in front]
    print("front:", " ".join(members))
    all_good = True
    for statement, expected, observed in suites.toy_caption_checks():
        print(f"{statement}: {str(observed).lower()}")
        all_good = all_good and (observed == expected)
    expected_front = [suites.TOY_POINTS[n] for n in suites.TOY_FRONT_NAMES]
    return 0 if set_equal(front, expected_front) and all_good else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optfront",
        description="Property suites and benchmark drivers for minimization "
        "under partial orders and uncertain values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("props", help="run property suites")
    p.add_argument("--suite", default="all", help="suite name or 'all'")
    p.add_argument("--n", type=int, default=10_000, help="cases per property")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(fn=_cmd_props)

    p = sub.add_parser("sample", help="label a uniform random sample")
    p.add_argument("--n", type=int, default=250_000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--rect", type=_parse_rect, default=benchmark.DEFAULT_RECT)
    p.add_argument("--threshold", type=float, default=benchmark.SAFETY_THRESHOLD)
    p.add_argument("--out", default="sample-out")
    p.add_argument("--no-plot", dest="plot", action="store_false")
    p.set_defaults(fn=_cmd_sample, plot=True)

    p = sub.add_parser("evolve", help="run the seed-and-grow search")
    p.add_argument("--grid", type=int, default=50, help="seed grid side length")
    p.add_argument("--iters", type=int, default=22_500)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--rect", type=_parse_rect, default=benchmark.DEFAULT_RECT)
    p.add_argument("--threshold", type=float, default=benchmark.SAFETY_THRESHOLD)
    p.add_argument("--epsilon", type=float, default=0.2, help="exploration probability")
    p.add_argument("--sigma", type=float, default=0.02, help="mutation scale (fraction of domain width)")
    p.add_argument("--check-every", type=int, default=5_000, help="invariant spot-check cadence (0: final only)")
    p.add_argument("--out", default="evolve-out")
    p.add_argument("--no-plot", dest="plot", action="store_false")
    p.set_defaults(fn=_cmd_evolve, plot=True)

    p = sub.add_parser("figure1", help="print the toy front configuration")
    p.set_defaults(fn=_cmd_figure1)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
