"""Weighted forced-decision accuracy and area under the decision-rate curve."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import AllZeroWeights
from .score import Direction

__all__ = ["EvalRecord", "EvalSummary", "accuracy_forced", "audrc", "summarize"]


@dataclass(frozen=True)
class EvalRecord:
    pair_id: str
    decision: Direction
    confidence: float
    truth: Direction
    weight: float = 1.0

    def __post_init__(self):
        if not self.confidence >= 0:
            raise ValueError(f"{self.pair_id}: confidence must be >= 0")
        if not self.weight >= 0:
            raise ValueError(f"{self.pair_id}: weight must be >= 0")

    @property
    def correct(self) -> bool:
        return self.decision is not Direction.UNDECIDED and self.decision == self.truth


@dataclass(frozen=True)
class EvalSummary:
    accuracy: float
    audrc: float
    n_pairs: int
    n_undecided: int


def accuracy_forced(records) -> float:
    """Weighted fraction of correct decisions; undecided counts as wrong."""
    w = np.array([r.weight for r in records], dtype=float)
    hit = np.array([r.correct for r in records], dtype=float)
    total = w.sum()
    if not total > 0:
        raise AllZeroWeights("accuracy needs at least one record with positive weight")
    return float(w @ hit / total)


def audrc(records) -> float:
    """Mean running accuracy while adding pairs from most to least confident.

    Ties in confidence are broken by pair id. Weights are ignored.
    """
    records = list(records)
    if not records:
        raise ValueError("audrc needs at least one record")
    ordered = sorted(records, key=lambda r: (-r.confidence, r.pair_id))
    hits = np.cumsum([r.correct for r in ordered], dtype=float)
    q = np.arange(1, len(ordered) + 1)
    return float(np.mean(hits / q))


def summarize(records) -> EvalSummary:
    records = list(records)
    return EvalSummary(
        accuracy=accuracy_forced(records),
        audrc=audrc(records),
        n_pairs=len(records),
        n_undecided=sum(r.decision is Direction.UNDECIDED for r in records),
    )
