"""Angular-momentum toolkit: operator matrices for any integer l, rotation
and mirror operators, real spherical-harmonic bases, and algebraic
evaluation of the wavefunctions on the sphere."""

from .kernels import BACKEND as KERNEL_BACKEND
from .legendre import assoc_legendre, legendre_table, sh_eval, sphere_grid
from .mirror import (
    MirrorOperator,
    ParityPhase,
    conjugate_operator,
    conjugation_sign,
    mirror_general,
    mirror_x,
    mirror_y,
    mirror_z,
    parity_phase,
)
from .realbasis import NamedState, RealBasisTransform, named_state, real_transform
from .rotation import (
    ClosedFormL2Coefficients,
    RotationOperator,
    RotationSpec,
    closed_form_l1,
    closed_form_l2,
    closed_form_l2_coeffs,
    exp_rotation,
    rotation_zyz,
)
from .su2 import (
    L_MAX,
    AngularBasis,
    OperatorMatrix,
    StateVector,
    build_basis,
    casimir,
    l_x,
    l_y,
    l_z,
    ladder_minus,
    ladder_plus,
    lowering_coefficient,
    state,
)
from .wavefield import (
    ShapeMesh,
    SphericalPoint,
    TrigForm,
    evaluate,
    evaluate_grid,
    is_real_field,
    nodal_cones,
    pole_amplitude,
    shape_mesh,
    trig_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "AngularBasis",
    "ClosedFormL2Coefficients",
    "KERNEL_BACKEND",
    "L_MAX",
    "MirrorOperator",
    "NamedState",
    "OperatorMatrix",
    "ParityPhase",
    "RealBasisTransform",
    "RotationOperator",
    "RotationSpec",
    "ShapeMesh",
    "SphericalPoint",
    "StateVector",
    "TrigForm",
    "assoc_legendre",
    "build_basis",
    "casimir",
    "closed_form_l1",
    "closed_form_l2",
    "closed_form_l2_coeffs",
    "conjugate_operator",
    "conjugation_sign",
    "evaluate",
    "evaluate_grid",
    "exp_rotation",
    "is_real_field",
    "l_x",
    "l_y",
    "l_z",
    "ladder_minus",
    "ladder_plus",
    "legendre_table",
    "lowering_coefficient",
    "mirror_general",
    "mirror_x",
    "mirror_y",
    "mirror_z",
    "named_state",
    "nodal_cones",
    "parity_phase",
    "pole_amplitude",
    "real_transform",
    "rotation_zyz",
    "sh_eval",
    "shape_mesh",
    "sphere_grid",
    "state",
    "trig_expansion",
]
