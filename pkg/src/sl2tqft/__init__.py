"""Exact motivic classes of parabolic SL(2, C)-representation varieties via TQFT operators."""

from .core import Basis, CoreMatrix, CoreVector, SingularMatrixError
from .operators import (
    InvariantError,
    OperatorSet,
    TubeKind,
    check_anchors,
    disc_in,
    disc_out_coeff,
    eta_matrix,
    operators,
    sigma_matrix,
    tube_matrix,
    verify_operator_identities,
)
from .ring import IntPoly, PoleError, Scalar, q
from .surface import (
    FormulaVariant,
    PunctureKind,
    SurfaceSpec,
    adjudicate,
    closed_form,
    enumerate_specs,
    evaluate_tqft,
)
from .words import BordismWord, evaluate_word, parse_word, word_to_spec

__version__ = "0.1.0"
