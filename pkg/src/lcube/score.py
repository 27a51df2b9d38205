"""Two-part MDL code lengths for cubic regression splines and the direction rule.

All code lengths are in nats. For a spline of ``y`` on ``x`` with ``m``
equidistant knots the conditional code length is::

    L(Y | X, theta) = log m + sum_j log u_j + (m + 4)/2 log n + n/2 log(RSS / n)

where ``u_j`` counts the predictor samples in the closed interval
``[k_{j-1}, k_j]`` (``k_0 = min x``). The direction whose minimum over
``m`` is smaller is taken as causal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import EmptyInterval, InsufficientSamples, NoAdmissibleModel
from .spline import SplineFit, equidistant_knots, fit_least_squares, normalize_minmax

__all__ = [
    "Direction",
    "CodeLength",
    "DirectionResult",
    "RSS_FLOOR",
    "DEFAULT_M_MAX",
    "knot_occupancy",
    "param_code_length",
    "fit_code_length",
    "conditional_code_length",
    "delta_score",
    "decide",
    "decide_direction",
]

RSS_FLOOR = 1e-12
DEFAULT_M_MAX = 10


class Direction(str, enum.Enum):
    X_TO_Y = "X->Y"
    Y_TO_X = "Y->X"
    UNDECIDED = "undecided"

    def flipped(self) -> "Direction":
        if self is Direction.X_TO_Y:
            return Direction.Y_TO_X
        if self is Direction.Y_TO_X:
            return Direction.X_TO_Y
        return self

    @classmethod
    def parse(cls, text: str) -> "Direction":
        key = text.strip().lower().replace(" ", "")
        aliases = {
            "x->y": cls.X_TO_Y, "xtoy": cls.X_TO_Y, "->": cls.X_TO_Y, "1": cls.X_TO_Y,
            "y->x": cls.Y_TO_X, "ytox": cls.Y_TO_X, "<-": cls.Y_TO_X, "-1": cls.Y_TO_X,
            "undecided": cls.UNDECIDED, "?": cls.UNDECIDED, "0": cls.UNDECIDED,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown direction {text!r}") from None


@dataclass(frozen=True)
class CodeLength:
    """Decomposed conditional code length (nats)."""

    l_m: float
    l_knots: float
    l_coeffs: float
    l_fit: float
    fit: SplineFit | None = None

    @property
    def l_params(self) -> float:
        return self.l_m + self.l_knots + self.l_coeffs

    @property
    def total(self) -> float:
        return self.l_m + self.l_knots + self.l_coeffs + self.l_fit


@dataclass(frozen=True)
class DirectionResult:
    score_xy: float
    score_yx: float
    best_m_xy: int
    best_m_yx: int
    decision: Direction

    @property
    def confidence(self) -> float:
        return abs(self.score_xy - self.score_yx)

    def swapped(self) -> "DirectionResult":
        return DirectionResult(
            score_xy=self.score_yx,
            score_yx=self.score_xy,
            best_m_xy=self.best_m_yx,
            best_m_yx=self.best_m_xy,
            decision=self.decision.flipped(),
        )


def knot_occupancy(x, knots) -> np.ndarray:
    """Count samples in each closed interval ``[k_{j-1}, k_j]``, ``j = 1..m``.

    A sample sitting exactly on a knot is counted in both adjacent
    intervals, as the closed-interval definition implies.

    Raises
    ------
    EmptyInterval
        If some interval contains no sample.
    """
    x = np.sort(np.asarray(x, dtype=float).reshape(-1))
    knots = np.asarray(knots, dtype=float).reshape(-1)
    edges = np.concatenate([[x[0]], knots])
    hi = np.searchsorted(x, edges[1:], side="right")
    lo = np.searchsorted(x, edges[:-1], side="left")
    u = hi - lo
    if np.any(u <= 0):
        empty = [int(j) + 1 for j in np.flatnonzero(u <= 0)]
        raise EmptyInterval(f"no samples in knot interval(s) {empty}")
    return u


def param_code_length(m: int, u, n: int) -> float:
    """``log m + sum log u_j + (m + 4)/2 log n``."""
    u = np.asarray(u)
    return math.log(m) + float(np.sum(np.log(u))) + 0.5 * (m + 4) * math.log(n)


def fit_code_length(rss: float, n: int) -> float:
    """``n/2 log(RSS / n)`` with RSS floored at :data:`RSS_FLOOR`."""
    return 0.5 * n * math.log(max(rss, RSS_FLOOR) / n)


def conditional_code_length(x, y, m: int) -> CodeLength:
    """Code length of ``y`` given ``x`` under a spline with ``m`` equidistant knots.

    Raises EmptyInterval or InsufficientSamples when ``m`` is not
    admissible for this sample.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    n = x.size
    knots = equidistant_knots(m, x)
    u = knot_occupancy(x, knots)
    fit = fit_least_squares(x, y, knots)
    return CodeLength(
        l_m=math.log(m),
        l_knots=float(np.sum(np.log(u))),
        l_coeffs=0.5 * (m + 4) * math.log(n),
        l_fit=fit_code_length(fit.rss, n),
        fit=fit,
    )


def candidate_knot_counts(m_max: int, even_only: bool = False) -> range:
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    return range(2, m_max + 1, 2) if even_only else range(1, m_max + 1)


def delta_score(x, y, m_max: int = DEFAULT_M_MAX, even_only: bool = False) -> tuple[float, int]:
    """Minimum conditional code length over admissible knot counts.

    Returns
    -------
    score, best_m : float, int
    """
    best, best_m = math.inf, None
    for m in candidate_knot_counts(m_max, even_only):
        try:
            total = conditional_code_length(x, y, m).total
        except (EmptyInterval, InsufficientSamples):
            continue
        if total < best:
            best, best_m = total, m
    if best_m is None:
        raise NoAdmissibleModel(f"no admissible knot count in 1..{m_max} (even_only={even_only})")
    return best, best_m


def decide(score_xy: float, score_yx: float) -> Direction:
    """Smaller code length wins; exact ties are undecided."""
    if score_xy < score_yx:
        return Direction.X_TO_Y
    if score_xy > score_yx:
        return Direction.Y_TO_X
    return Direction.UNDECIDED


def decide_direction(x, y, m_max: int = DEFAULT_M_MAX, even_only: bool = False) -> DirectionResult:
    """Normalize both variables to [0, 1], score both orientations and decide."""
    xn = normalize_minmax(x)
    yn = normalize_minmax(y)
    if xn.size != yn.size:
        raise ValueError(f"x and y lengths differ: {xn.size} != {yn.size}")
    s_xy, m_xy = delta_score(xn, yn, m_max, even_only)
    s_yx, m_yx = delta_score(yn, xn, m_max, even_only)
    return DirectionResult(s_xy, s_yx, m_xy, m_yx, decide(s_xy, s_yx))
