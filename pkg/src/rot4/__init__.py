"""Finite rotations of Euclidean 4-space as unit-quaternion pairs x -> a x b.

Classification (identity / simple / isoclinic / double) with invariant
planes and angles, composition with geometric-parameter propagation in the
Gibbs chart, the simplicity criterion for composed simple rotations, and an
independent matrix-eigendecomposition oracle for cross-checking all of it.
"""

from .compose import (
    GibbsPair,
    SimplicityReport,
    compose,
    compose_gibbs,
    compose_left_clifford,
    composed_planes_from_gibbs,
    is_composition_simple,
)
from .errors import (
    DegenerateAxis,
    GibbsSingular,
    NoConvergence,
    NotSimple,
    NotUnit,
    PairingFailure,
    Rot4Error,
)
from .oracle import (
    OraclePlanes,
    left_mult_matrix,
    planes_from_matrix,
    right_mult_matrix,
    symmetric_eigen4,
)
from .plane import (
    EPS_PLANE,
    Plane,
    plane_from_span,
    planes_orthogonal,
    projector_distance,
    same_plane,
)
from .quat import (
    EPS_ALG,
    EPS_AXIS,
    EPS_GIBBS,
    EPS_UNIT,
    I,
    J,
    K,
    ONE,
    PolarForm,
    Quaternion,
    Vec3,
    conj,
    dot4,
    gibbs_from_unit,
    mul,
    norm,
    norm_sq,
    normalized,
    polar,
    pure,
    rodrigues_compose,
    unit_from_gibbs,
)
from .rotation import (
    DEFAULT_EPS,
    EPS_APPLY,
    Double,
    Identity,
    LeftIsoclinic,
    ReflectionNormal,
    RightIsoclinic,
    Rotation4,
    RotationKind,
    Simple,
    apply,
    classify,
    from_reflections,
    invariant_planes,
    plane_rotation_angle,
    reflect,
    simple_to_reflections,
    to_matrix,
)

__all__ = [
    "DEFAULT_EPS",
    "DegenerateAxis",
    "Double",
    "EPS_ALG",
    "EPS_APPLY",
    "EPS_AXIS",
    "EPS_GIBBS",
    "EPS_PLANE",
    "EPS_UNIT",
    "GibbsPair",
    "GibbsSingular",
    "I",
    "Identity",
    "J",
    "K",
    "LeftIsoclinic",
    "NoConvergence",
    "NotSimple",
    "NotUnit",
    "ONE",
    "OraclePlanes",
    "PairingFailure",
    "Plane",
    "PolarForm",
    "Quaternion",
    "ReflectionNormal",
    "RightIsoclinic",
    "Rot4Error",
    "Rotation4",
    "RotationKind",
    "Simple",
    "SimplicityReport",
    "Vec3",
    "apply",
    "classify",
    "compose",
    "compose_gibbs",
    "compose_left_clifford",
    "composed_planes_from_gibbs",
    "conj",
    "dot4",
    "from_reflections",
    "gibbs_from_unit",
    "invariant_planes",
    "is_composition_simple",
    "left_mult_matrix",
    "mul",
    "norm",
    "norm_sq",
    "normalized",
    "plane_from_span",
    "plane_rotation_angle",
    "planes_from_matrix",
    "planes_orthogonal",
    "polar",
    "projector_distance",
    "pure",
    "reflect",
    "right_mult_matrix",
    "rodrigues_compose",
    "same_plane",
    "simple_to_reflections",
    "symmetric_eigen4",
    "to_matrix",
    "unit_from_gibbs",
]

__version__ = "0.1.0"
