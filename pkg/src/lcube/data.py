"""Cause-effect pair files, benchmark metadata and synthetic generators.

Pair files hold one sample per line with numeric columns separated by
whitespace or commas; ``#`` starts a comment line. Meta files follow the
Tübingen convention, one pair per line::

    <id> <first cause col> <last cause col> <first effect col> <last effect col> <weight>

with 1-based column numbers.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import ParseError, TooFewSamples
from .score import Direction

__all__ = [
    "MIN_SAMPLES",
    "FAMILIES",
    "PairSample",
    "Dataset",
    "MetaEntry",
    "GeneratorConfig",
    "load_pair_file",
    "load_meta",
    "write_pair_file",
    "write_dataset",
    "generate",
    "generate_linear_gaussian",
    "pair_rng",
]

MIN_SAMPLES = 8
FAMILIES = ("AN", "ANs", "LS", "LSs", "MNU")

_SPLIT = re.compile(r"[,\s]+")


@dataclass(eq=False)
class PairSample:
    id: str
    x: np.ndarray
    y: np.ndarray
    truth: Direction | None = None
    weight: float = 1.0
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float).reshape(-1)
        self.y = np.asarray(self.y, dtype=float).reshape(-1)
        if self.x.size != self.y.size:
            raise ValueError(f"{self.id}: x and y lengths differ ({self.x.size} != {self.y.size})")
        if self.x.size < MIN_SAMPLES:
            raise TooFewSamples(f"{self.id}: {self.x.size} samples, need at least {MIN_SAMPLES}")
        if not self.weight >= 0:
            raise ValueError(f"{self.id}: weight must be >= 0, got {self.weight}")

    def __len__(self):
        return self.x.size


@dataclass(eq=False)
class Dataset:
    name: str
    pairs: list[PairSample]

    def __post_init__(self):
        ids = [p.id for p in self.pairs]
        if len(set(ids)) != len(ids):
            raise ValueError(f"dataset {self.name!r} has duplicate pair ids")

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class MetaEntry:
    """One meta-file row. Column ranges are 1-based and inclusive."""

    pair_id: str
    cause: tuple[int, int]
    effect: tuple[int, int]
    weight: float

    @property
    def multivariate(self) -> bool:
        return self.cause[0] != self.cause[1] or self.effect[0] != self.effect[1]

    @property
    def cause_col(self) -> int:
        return self.cause[0]

    @property
    def effect_col(self) -> int:
        return self.effect[0]


def _split(line: str) -> list[str]:
    return [tok for tok in _SPLIT.split(line.strip()) if tok]


def load_pair_file(path, column_x: int = 0, column_y: int = 1, pair_id: str | None = None) -> PairSample:
    """Read two numeric columns (0-based indices) from a pair file.

    Blank lines and lines starting with ``#`` are ignored.

    Raises
    ------
    ParseError
        On a non-numeric entry or a missing column; carries the 1-based line number.
    TooFewSamples
        If fewer than :data:`MIN_SAMPLES` rows are read.
    """
    path = Path(path)
    need = max(column_x, column_y)
    xs, ys = [], []
    with open(path, encoding="utf-8", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = _split(stripped)
            if len(tokens) <= need:
                raise ParseError(f"{path.name}: expected at least {need + 1} columns, found {len(tokens)}", lineno)
            try:
                xv, yv = float(tokens[column_x]), float(tokens[column_y])
            except ValueError:
                raise ParseError(f"{path.name}: non-numeric value in {stripped!r}", lineno) from None
            if not (math.isfinite(xv) and math.isfinite(yv)):
                raise ParseError(f"{path.name}: non-finite value in {stripped!r}", lineno)
            xs.append(xv)
            ys.append(yv)
    if len(xs) < MIN_SAMPLES:
        raise TooFewSamples(f"{path.name}: {len(xs)} samples, need at least {MIN_SAMPLES}")
    return PairSample(id=pair_id or path.stem, x=np.array(xs), y=np.array(ys))


def load_meta(path) -> list[MetaEntry]:
    """Parse a Tübingen-style meta file."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 6:
                raise ParseError(f"expected 6 fields, found {len(tokens)}", lineno)
            try:
                c0, c1, e0, e1 = (int(t) for t in tokens[1:5])
                weight = float(tokens[5])
            except ValueError:
                raise ParseError(f"malformed meta row {stripped!r}", lineno) from None
            if min(c0, c1, e0, e1) < 1 or c1 < c0 or e1 < e0:
                raise ParseError(f"invalid column range in {stripped!r}", lineno)
            if not (weight >= 0 and math.isfinite(weight)):
                raise ParseError(f"invalid weight {tokens[5]!r}", lineno)
            entries.append(MetaEntry(tokens[0], (c0, c1), (e0, e1), weight))
    return entries


def write_pair_file(path, pair: PairSample) -> None:
    """Write ``x y`` rows with round-trip float precision."""
    with open(path, "w", encoding="utf-8") as fh:
        for xv, yv in zip(pair.x.tolist(), pair.y.tolist()):
            fh.write(f"{xv!r} {yv!r}\n")


def write_dataset(dataset: Dataset, out_dir, config: "GeneratorConfig | None" = None) -> None:
    """Write ``<id>.txt`` per pair plus ``pairmeta.txt``.

    When ``config`` is given, ``generator.json`` records it together with
    each pair's drawn mechanism.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    meta_lines = []
    for pair in dataset.pairs:
        write_pair_file(out / f"{pair.id}.txt", pair)
        cause, effect = (1, 2) if pair.truth in (None, Direction.X_TO_Y) else (2, 1)
        meta_lines.append(f"{pair.id} {cause} {cause} {effect} {effect} {pair.weight!r}\n")
    (out / "pairmeta.txt").write_text("".join(meta_lines), encoding="utf-8")
    if config is not None:
        doc = {
            "config": config.as_dict(),
            "pairs": {p.id: p.info for p in dataset.pairs},
        }
        (out / "generator.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class GeneratorConfig:
    family: str
    pairs: int = 100
    samples_per_pair: int = 1000
    noise_level: float = 0.05
    seed: int = 0

    def __post_init__(self):
        family = _canonical_family(self.family)
        object.__setattr__(self, "family", family)
        if self.pairs < 1:
            raise ValueError(f"pairs must be >= 1, got {self.pairs}")
        if self.samples_per_pair < MIN_SAMPLES:
            raise ValueError(f"samples_per_pair must be >= {MIN_SAMPLES}, got {self.samples_per_pair}")
        if not self.noise_level >= 0:
            raise ValueError(f"noise_level must be >= 0, got {self.noise_level}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "pairs": self.pairs,
            "samples_per_pair": self.samples_per_pair,
            "noise_level": self.noise_level,
            "seed": self.seed,
        }


def _canonical_family(name: str) -> str:
    lookup = {f.lower(): f for f in FAMILIES}
    lookup["mn-u"] = "MNU"
    lookup["an-s"] = "ANs"
    lookup["ls-s"] = "LSs"
    try:
        return lookup[name.lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}") from None


def pair_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream per pair, derived from ``(seed, index)`` only."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


_GRID = np.linspace(0.0, 1.0, 100)


def _draw_polynomial(rng):
    # redraw until the slope reaches 0.5 somewhere on [0, 1]
    while True:
        degree = int(rng.integers(3, 6))
        coef = rng.uniform(-2.0, 2.0, size=degree + 1)
        slope = np.polynomial.polynomial.polyval(_GRID, np.polynomial.polynomial.polyder(coef))
        if np.max(np.abs(slope)) >= 0.5:
            info = {"kind": "polynomial", "coef": coef.tolist()}
            return (lambda x, c=coef: np.polynomial.polynomial.polyval(x, c)), info


def _draw_sigmoid(rng):
    a = rng.uniform(1.0, 3.0)
    b = rng.uniform(4.0, 12.0)
    c = rng.uniform(0.2, 0.8)
    info = {"kind": "sigmoid", "a": a, "b": b, "c": c}
    return (lambda x: a / (1.0 + np.exp(-b * (x - c)))), info


def _generate_pair(config: GeneratorConfig, index: int) -> PairSample:
    rng = pair_rng(config.seed, index)
    n, alpha, family = config.samples_per_pair, config.noise_level, config.family
    draw = _draw_polynomial if family in ("AN", "LS") else _draw_sigmoid
    f, info = draw(rng)
    x = rng.uniform(0.0, 1.0, size=n)
    if family == "MNU":
        y = f(x) * rng.uniform(1.0 - alpha, 1.0 + alpha, size=n)
    elif family in ("LS", "LSs"):
        y = f(x) + (0.2 + x**2) * alpha * rng.standard_normal(n)
    else:
        y = f(x) + alpha * rng.standard_normal(n)
    return PairSample(
        id=f"pair{index + 1:04d}",
        x=x,
        y=y,
        truth=Direction.X_TO_Y,
        info={"family": family, **info},
    )


def generate(config: GeneratorConfig) -> Dataset:
    """Draw a synthetic dataset; a pure function of ``config``.

    Families
    --------
    AN   y = f(x) + a*e, f a random polynomial of degree 3-5
    ANs  as AN with f a random sigmoid
    LS   y = f(x) + (0.2 + x^2)*a*e, polynomial f
    LSs  as LS with sigmoid f
    MNU  y = f(x)*u, sigmoid f, u ~ U(1 - a, 1 + a)

    ``x ~ U(0, 1)``, ``e ~ N(0, 1)`` and ``a`` is ``noise_level``. Every
    pair has ground truth X->Y.
    """
    pairs = [_generate_pair(config, i) for i in range(config.pairs)]
    name = f"{config.family.lower()}-seed{config.seed}"
    return Dataset(name=name, pairs=pairs)


def generate_linear_gaussian(pairs: int = 100, samples_per_pair: int = 1000,
                             noise_level: float = 1.0, seed: int = 0) -> Dataset:
    """Linear pairs ``y = s*x + noise_level*e`` with Gaussian cause and noise.

    The joint distribution is bivariate normal, so neither direction is
    identifiable; used to check the symmetric case.
    """
    out = []
    for i in range(pairs):
        rng = pair_rng(seed, i)
        slope = rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
        x = rng.standard_normal(samples_per_pair)
        y = slope * x + noise_level * rng.standard_normal(samples_per_pair)
        out.append(PairSample(id=f"pair{i + 1:04d}", x=x, y=y, truth=Direction.X_TO_Y,
                              info={"family": "linear-gaussian", "slope": slope}))
    return Dataset(name=f"linear-gaussian-seed{seed}", pairs=out)
