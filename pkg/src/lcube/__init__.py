"""lcube: causal direction between two continuous variables from MDL-scored cubic splines."""

__version__ = "0.1.0"

from .exceptions import (  # noqa: E402
    AllZeroWeights,
    ConstantVariable,
    EmptyInterval,
    InsufficientSamples,
    LcubeError,
    NoAdmissibleModel,
    ParseError,
    TooFewSamples,
)
from .spline import (  # noqa: E402
    SplineFit,
    build_design_matrix,
    equidistant_knots,
    evaluate_spline,
    fit_least_squares,
    normalize_minmax,
)
from .score import (  # noqa: E402
    CodeLength,
    Direction,
    DirectionResult,
    conditional_code_length,
    decide_direction,
    delta_score,
    fit_code_length,
    knot_occupancy,
    param_code_length,
)
from .data import (  # noqa: E402
    Dataset,
    GeneratorConfig,
    MetaEntry,
    PairSample,
    generate,
    generate_linear_gaussian,
    load_meta,
    load_pair_file,
    write_dataset,
)
from .metrics import EvalRecord, EvalSummary, accuracy_forced, audrc, summarize  # noqa: E402

__all__ = [
    "AllZeroWeights", "ConstantVariable", "EmptyInterval", "InsufficientSamples", "LcubeError",
    "NoAdmissibleModel", "ParseError", "TooFewSamples",
    "SplineFit", "build_design_matrix", "equidistant_knots", "evaluate_spline",
    "fit_least_squares", "normalize_minmax",
    "CodeLength", "Direction", "DirectionResult", "conditional_code_length", "decide_direction",
    "delta_score", "fit_code_length", "knot_occupancy", "param_code_length",
    "Dataset", "GeneratorConfig", "MetaEntry", "PairSample", "generate",
    "generate_linear_gaussian", "load_meta", "load_pair_file", "write_dataset",
    "EvalRecord", "EvalSummary", "accuracy_forced", "audrc", "summarize",
]
