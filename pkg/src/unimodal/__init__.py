"""Exact unimodality checks for bivariate q-series."""

from .membership import (
    ALL_CLASSES,
    T1,
    T2,
    U1,
    U2,
    ClassSpec,
    MembershipReport,
    Witness,
    check_membership,
    check_slice,
    strictness_lift,
    support_profile,
)
from .series import (
    BiSeries,
    MemoryLimitError,
    OrientationError,
    TruncationError,
    ZPoly,
    apply_q_ddq,
    apply_y_ddy,
    ct_z,
    geom_inv,
    pochhammer,
    series_add,
    series_inv,
    series_mul,
    transpose,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLASSES",
    "T1",
    "T2",
    "U1",
    "U2",
    "ClassSpec",
    "MembershipReport",
    "Witness",
    "check_membership",
    "check_slice",
    "strictness_lift",
    "support_profile",
    "BiSeries",
    "MemoryLimitError",
    "OrientationError",
    "TruncationError",
    "ZPoly",
    "apply_q_ddq",
    "apply_y_ddy",
    "ct_z",
    "geom_inv",
    "pochhammer",
    "series_add",
    "series_inv",
    "series_mul",
    "transpose",
]
