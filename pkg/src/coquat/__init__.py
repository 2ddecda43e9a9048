"""coquat: split-quaternion (coquaternion) computation engine.

Core algebra (product, conjugate, quadratic form, causal classification),
Lorentzian 3-vector operations, polar decompositions, 4x4 left/right matrix
representations, closed-form integer powers and matrix exponentials with
brute-force oracles, and an expression CLI/REPL with a benchmark mode.
"""

from __future__ import annotations

from ._backend import backend_name
from .algebra import (
    DEFAULT_CLASSIFY,
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    ZERO,
    CausalCharacter,
    ClassifyConfig,
    SplitQuaternion,
    Vector3M,
    classify,
    classify_vector,
    format_number,
    format_quaternion,
    lorentz_cross,
    lorentz_inner,
    mul,
)
from .errors import (
    CoquatError,
    EvalError,
    ExprError,
    InvalidAxis,
    LexError,
    LightlikeInverse,
    LightlikeNoPolarForm,
    LightlikeNormalization,
    NegativePowerOfLightlike,
    NonFiniteValue,
    NonUnitAxis,
    NotALeftRepresentation,
    NullVectorPart,
    OverflowedToInfinity,
    ParseError,
    SeriesDidNotConverge,
)
from .evaluator import evaluate, evaluate_source, render_json, render_text
from .expression import parse, parse_source, tokenize
from .matrix import (
    Mat4,
    QuatCoords,
    apply,
    coords,
    left_matrix,
    mat_add,
    mat_identity,
    mat_max_abs_diff,
    mat_mul,
    mat_scale,
    quaternion_from_coords,
    quaternion_from_left,
    right_matrix,
)
from .polar import PolarForm, PolarKind, decompose, reconstruct
from .powers import (
    exp_left_closed,
    exp_quaternion,
    exp_right_closed,
    left_pow_closed,
    mat_exp_series,
    mat_pow_naive,
    pow_closed,
    pow_naive,
    right_pow_closed,
)

__version__ = "0.1.0"

__all__ = [
    "CausalCharacter",
    "ClassifyConfig",
    "CoquatError",
    "DEFAULT_CLASSIFY",
    "EvalError",
    "ExprError",
    "InvalidAxis",
    "LexError",
    "LightlikeInverse",
    "LightlikeNoPolarForm",
    "LightlikeNormalization",
    "Mat4",
    "NegativePowerOfLightlike",
    "NonFiniteValue",
    "NonUnitAxis",
    "NotALeftRepresentation",
    "NullVectorPart",
    "ONE",
    "OverflowedToInfinity",
    "ParseError",
    "PolarForm",
    "PolarKind",
    "QuatCoords",
    "SeriesDidNotConverge",
    "SplitQuaternion",
    "UNIT_I",
    "UNIT_J",
    "UNIT_K",
    "Vector3M",
    "ZERO",
    "apply",
    "backend_name",
    "classify",
    "classify_vector",
    "coords",
    "decompose",
    "evaluate",
    "evaluate_source",
    "exp_left_closed",
    "exp_quaternion",
    "exp_right_closed",
    "format_number",
    "format_quaternion",
    "left_matrix",
    "left_pow_closed",
    "lorentz_cross",
    "lorentz_inner",
    "mat_add",
    "mat_exp_series",
    "mat_identity",
    "mat_max_abs_diff",
    "mat_mul",
    "mat_pow_naive",
    "mat_scale",
    "mul",
    "parse",
    "parse_source",
    "pow_closed",
    "pow_naive",
    "quaternion_from_coords",
    "quaternion_from_left",
    "reconstruct",
    "render_json",
    "render_text",
    "right_matrix",
    "right_pow_closed",
    "tokenize",
]
