"""L-values at s = -1, 2-ranks of class groups and tame kernels of real quadratic fields."""

from ._tamekernel import (
    DomainError,
    classify,
    d_factors,
    form_class_group,
    is_fundamental,
    k2_order,
    k2_structure,
    kronecker,
    l_imprimitive,
    l_value,
    narrow_ranks,
    r2_k2,
    redei_matrix,
    scan,
    verify_identity,
)

__all__ = [
    "DomainError",
    "classify",
    "d_factors",
    "form_class_group",
    "is_fundamental",
    "k2_order",
    "k2_structure",
    "kronecker",
    "l_imprimitive",
    "l_value",
    "narrow_ranks",
    "r2_k2",
    "redei_matrix",
    "scan",
    "verify_identity",
]
