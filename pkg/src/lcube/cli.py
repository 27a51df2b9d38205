"""Command-line interface: ``lcube infer``, ``lcube eval`` and ``lcube gen``.

Exit codes: 0 on success (or a decision for ``infer``), 1 on errors,
2 when ``infer`` is undecided. Argument errors use argparse's usage exit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .data import FAMILIES, GeneratorConfig, generate, load_pair_file, write_dataset
from .evaluation import build_report, default_jobs, dump_report, evaluate, format_summary, load_directory
from .exceptions import LcubeError
from .score import DEFAULT_M_MAX, Direction, decide_direction

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _nonneg_float(text):
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcube", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"lcube {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="decide the causal direction of one pair file")
    p.add_argument("input", type=Path)
    p.add_argument("--x-col", type=_nonneg_int, default=0, help="0-based column of X (default 0)")
    p.add_argument("--y-col", type=_nonneg_int, default=1, help="0-based column of Y (default 1)")
    p.add_argument("--m-max", type=_positive_int, default=DEFAULT_M_MAX)
    p.add_argument("--even-only", action="store_true", help="only try even knot counts")
    p.add_argument("--json", action="store_true", help="print the result as JSON")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("eval", help="evaluate every pair of a dataset directory")
    p.add_argument("dataset", type=Path)
    p.add_argument("--meta", type=Path, default=None,
                   help="meta file (default: <dataset>/pairmeta.txt if present)")
    p.add_argument("--m-max", type=_positive_int, default=DEFAULT_M_MAX)
    p.add_argument("--even-only", action="store_true")
    p.add_argument("--jobs", type=_positive_int, default=None,
                   help="worker processes (default: $LCUBE_JOBS or 1)")
    p.add_argument("--out", type=Path, default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", help="generate a synthetic dataset directory")
    p.add_argument("--family", required=True, type=str.lower,
                   choices=[f.lower() for f in FAMILIES] + ["mn-u", "an-s", "ls-s"])
    p.add_argument("--pairs", type=_positive_int, default=100)
    p.add_argument("--samples", type=_positive_int, default=1000)
    p.add_argument("--noise", type=_nonneg_float, default=0.05)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--force", action="store_true", help="write into a non-empty directory")
    p.set_defaults(func=cmd_gen)
    return parser


def cmd_infer(args) -> int:
    pair = load_pair_file(args.input, args.x_col, args.y_col)
    res = decide_direction(pair.x, pair.y, args.m_max, args.even_only)
    if args.json:
        print(json.dumps({
            "id": pair.id, "n": len(pair),
            "score_xy": res.score_xy, "score_yx": res.score_yx,
            "best_m_xy": res.best_m_xy, "best_m_yx": res.best_m_yx,
            "decision": res.decision.value, "confidence": res.confidence,
        }, indent=2, sort_keys=True))
    else:
        print(f"pair        {pair.id} (n={len(pair)})")
        print(f"score X->Y  {res.score_xy:.6f} nats (m={res.best_m_xy})")
        print(f"score Y->X  {res.score_yx:.6f} nats (m={res.best_m_yx})")
        print(f"decision    {res.decision.value}")
        print(f"confidence  {res.confidence:.6f}")
    return EXIT_UNDECIDED if res.decision is Direction.UNDECIDED else EXIT_OK


def cmd_eval(args) -> int:
    dataset, load_skipped = load_directory(args.dataset, args.meta)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    ev = evaluate(dataset, args.m_max, args.even_only, jobs=jobs)
    ev.skipped = load_skipped + ev.skipped
    config = {
        "dataset": str(args.dataset),
        "meta": str(args.meta) if args.meta is not None else None,
        "m_max": args.m_max,
        "even_only": args.even_only,
    }
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(dump_report(build_report(ev, config)), encoding="utf-8")
    sys.stdout.write(format_summary(ev))
    if not ev.outcomes:
        print("error: no evaluable pairs", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_gen(args) -> int:
    out = args.out
    if out.exists() and not out.is_dir():
        print(f"error: {out} exists and is not a directory", file=sys.stderr)
        return EXIT_ERROR
    if out.is_dir() and any(out.iterdir()) and not args.force:
        print(f"error: {out} is not empty (use --force to overwrite)", file=sys.stderr)
        return EXIT_ERROR
    config = GeneratorConfig(args.family, args.pairs, args.samples, args.noise, args.seed)
    dataset = generate(config)
    write_dataset(dataset, out, config)
    print(f"wrote {len(dataset)} pairs ({config.family}, n={config.samples_per_pair}, "
          f"noise={config.noise_level}, seed={config.seed}) to {out}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.samples < 8:
        parser.error("--samples must be >= 8")
    try:
        return args.func(args)
    except (LcubeError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
