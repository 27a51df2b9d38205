"""Benchmark harness: score every pair of a dataset and aggregate metrics.

Report schema (JSON, keys sorted)::

    {
      "tool": "lcube", "version": str,
      "config": {"dataset": str, "meta": str|null, "m_max": int, "even_only": bool},
      "summary": {"accuracy": float, "audrc": float, "n_pairs": int,
                  "n_undecided": int, "n_skipped": int},
      "pairs": [{"id": str, "score_xy": float, "score_yx": float,
                 "best_m_xy": int, "best_m_yx": int, "decision": str,
                 "confidence": float, "truth": str, "weight": float,
                 "correct": bool}, ...],
      "skipped": [{"id": str, "reason": str, "detail": str}, ...]
    }

Scores are in nats. ``decision`` and ``truth`` take the values ``"X->Y"``,
``"Y->X"`` or ``"undecided"``. Pairs appear in input order. Wall time is
deliberately left out so reports are byte-identical across runs.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .data import Dataset, MetaEntry, PairSample, load_meta, load_pair_file
from .exceptions import LcubeError
from .metrics import EvalRecord, EvalSummary, summarize
from .score import DEFAULT_M_MAX, Direction, DirectionResult, decide_direction

__all__ = [
    "Skipped",
    "PairOutcome",
    "Evaluation",
    "load_directory",
    "evaluate",
    "build_report",
    "dump_report",
    "format_summary",
]

_SKIP_REASONS = {
    "ConstantVariable": "constant variable",
    "NoAdmissibleModel": "no admissible model",
    "TooFewSamples": "too few samples",
    "ParseError": "parse error",
}


@dataclass(frozen=True)
class Skipped:
    pair_id: str
    reason: str
    detail: str = ""


@dataclass(frozen=True)
class PairOutcome:
    pair_id: str
    truth: Direction
    weight: float
    result: DirectionResult

    @property
    def record(self) -> EvalRecord:
        return EvalRecord(self.pair_id, self.result.decision, self.result.confidence,
                          self.truth, self.weight)


@dataclass
class Evaluation:
    name: str
    outcomes: list[PairOutcome]
    skipped: list[Skipped] = field(default_factory=list)
    summary: EvalSummary | None = None
    wall_time: float | None = None

    @property
    def records(self) -> list[EvalRecord]:
        return [o.record for o in self.outcomes]


def _is_pair_file(path: Path) -> bool:
    name = path.name.lower()
    return path.suffix.lower() == ".txt" and "meta" not in name and not name.endswith("_des.txt") \
        and not name.startswith("readme")


def _find_pair_file(directory: Path, pair_id: str) -> Path | None:
    for cand in (pair_id, f"pair{pair_id}"):
        path = directory / f"{cand}.txt"
        if path.is_file():
            return path
    return None


def _load_with_meta(path: Path, entry: MetaEntry) -> PairSample:
    cx, cy = sorted((entry.cause_col - 1, entry.effect_col - 1))
    pair = load_pair_file(path, cx, cy, pair_id=path.stem)
    pair.truth = Direction.X_TO_Y if entry.cause_col < entry.effect_col else Direction.Y_TO_X
    pair.weight = entry.weight
    return pair


def load_directory(directory, meta=None) -> tuple[Dataset, list[Skipped]]:
    """Load every univariate pair of a benchmark directory.

    With a meta file (``meta`` or ``<directory>/pairmeta.txt``) pairs are
    taken in meta order, with truth and weight from the meta rows;
    multivariate rows are skipped. Without one, every ``*.txt`` pair file
    is loaded in name order as columns 1 and 2 with truth X->Y, weight 1.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    if meta is None and (directory / "pairmeta.txt").is_file():
        meta = directory / "pairmeta.txt"
    pairs, skipped = [], []

    if meta is not None:
        for entry in load_meta(meta):
            if entry.multivariate:
                skipped.append(Skipped(entry.pair_id, "multivariate",
                                       f"cause cols {entry.cause}, effect cols {entry.effect}"))
                continue
            path = _find_pair_file(directory, entry.pair_id)
            if path is None:
                skipped.append(Skipped(entry.pair_id, "missing file"))
                continue
            try:
                pairs.append(_load_with_meta(path, entry))
            except LcubeError as exc:
                skipped.append(Skipped(path.stem, _SKIP_REASONS.get(type(exc).__name__, "error"), str(exc)))
    else:
        for path in sorted(p for p in directory.iterdir() if p.is_file() and _is_pair_file(p)):
            try:
                pair = load_pair_file(path)
            except LcubeError as exc:
                skipped.append(Skipped(path.stem, _SKIP_REASONS.get(type(exc).__name__, "error"), str(exc)))
                continue
            pair.truth = Direction.X_TO_Y
            pairs.append(pair)
    return Dataset(directory.name, pairs), skipped


def _score(args):
    pair, m_max, even_only = args
    try:
        return decide_direction(pair.x, pair.y, m_max, even_only)
    except LcubeError as exc:
        return Skipped(pair.id, _SKIP_REASONS.get(type(exc).__name__, "error"), str(exc))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("LCUBE_JOBS", "1")))
    except ValueError:
        return 1


def evaluate(dataset: Dataset, m_max: int = DEFAULT_M_MAX, even_only: bool = False,
             jobs: int | None = None) -> Evaluation:
    """Score all pairs (optionally in ``jobs`` worker processes) and summarize.

    Results are collected in dataset order whatever the completion order.
    Pairs without ground truth are treated as X->Y.
    """
    jobs = default_jobs() if jobs is None else jobs
    tasks = [(p, m_max, even_only) for p in dataset.pairs]
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_score, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_score(t) for t in tasks]
    wall = time.perf_counter() - start

    outcomes, skipped = [], []
    for pair, res in zip(dataset.pairs, results):
        if isinstance(res, Skipped):
            skipped.append(res)
        else:
            outcomes.append(PairOutcome(pair.id, pair.truth or Direction.X_TO_Y, pair.weight, res))
    ev = Evaluation(dataset.name, outcomes, skipped, wall_time=wall)
    if outcomes:
        ev.summary = summarize(ev.records)
    return ev


def build_report(ev: Evaluation, config: dict) -> dict:
    summary = ev.summary
    return {
        "tool": "lcube",
        "version": __version__,
        "config": config,
        "summary": {
            "accuracy": summary.accuracy if summary else None,
            "audrc": summary.audrc if summary else None,
            "n_pairs": len(ev.outcomes),
            "n_undecided": summary.n_undecided if summary else 0,
            "n_skipped": len(ev.skipped),
        },
        "pairs": [
            {
                "id": o.pair_id,
                "score_xy": o.result.score_xy,
                "score_yx": o.result.score_yx,
                "best_m_xy": o.result.best_m_xy,
                "best_m_yx": o.result.best_m_yx,
                "decision": o.result.decision.value,
                "confidence": o.result.confidence,
                "truth": o.truth.value,
                "weight": o.weight,
                "correct": o.record.correct,
            }
            for o in ev.outcomes
        ],
        "skipped": [{"id": s.pair_id, "reason": s.reason, "detail": s.detail} for s in ev.skipped],
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def format_summary(ev: Evaluation) -> str:
    """Human-readable table row (percentages) plus skipped pairs by reason."""
    s = ev.summary
    acc = f"{100 * s.accuracy:6.1f}" if s else "     -"
    aud = f"{100 * s.audrc:6.1f}" if s else "     -"
    wall = f"{ev.wall_time:8.1f}s" if ev.wall_time is not None else ""
    lines = [
        f"{'method':<8}{'dataset':<24}{'pairs':>6}{'skip':>6}{'undec':>6}{'ACC':>7}{'AUDRC':>7}{'time':>9}",
        f"{'LCUBE':<8}{ev.name[:23]:<24}{len(ev.outcomes):>6}{len(ev.skipped):>6}"
        f"{(s.n_undecided if s else 0):>6}{acc:>7}{aud:>7}{wall:>9}",
    ]
    by_reason: dict[str, list[str]] = {}
    for sk in ev.skipped:
        by_reason.setdefault(sk.reason, []).append(sk.pair_id)
    for reason in sorted(by_reason):
        lines.append(f"skipped: {reason}: {', '.join(by_reason[reason])}")
    return "\n".join(lines) + "\n"
