"""Special Chevalley bases of the simple Lie algebras, in exact integer arithmetic.

Typical use::

    from chevkit import build_special, orientation, build_root_system, structure_table
    rs = build_root_system("F4")
    L = build_special("F4", orientation(rs, "minus"))
    rows = structure_table(L)
"""
from .chevalley import (
    AlgebraMismatchError,
    CocycleError,
    Element,
    LieAlgebra,
    SignConsistencyError,
    SpecialReport,
    TransformedAlgebra,
    bracket,
    breve_transform,
    build_simply_laced,
    build_special,
    epsilon_sign,
    extend_signs_from_positive,
    hat_transform,
    is_special,
    negate_system,
    rescale,
    sign_table,
    structure_table,
)
from .cocycle import Cocycle, FLMReport, NonSimplyLacedError, check_flm, epsilon0, epsilon_kac
from .folding import FoldingData, FoldingError, closed_form_sign, folded_sign, folding_data, lift_pair, lifts
from .orientation import (
    OrientationError,
    OrientedEdges,
    SignAssignment,
    orientation,
    oriented_edges,
    rho,
    rho_matrix,
    special_orientations,
)
from .rootsys import CartanType, CartanTypeError, RootError, RootSystem, build_root_system, format_root, parse_root
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
