"""Exact universal characters of the classical groups.

Bases of the symmetric function ring attached to the four tile kinds, their
creation operators and t-deformations, and the deformed character tables.
"""

from .core import (KINDS, KIND_TRANSPOSE, LaurentPoly, as_partition,
                   canonical_kind, conjugate, frobenius, from_frobenius,
                   member_p_kind, partitions_of, rotate_complement)
from .schur import (Expansion, SymFunc, evaluate, inner_product,
                    lr_coefficient, multiply, skew_by, straighten)

__all__ = [
    "KINDS", "KIND_TRANSPOSE", "LaurentPoly", "SymFunc", "Expansion",
    "as_partition", "canonical_kind", "conjugate", "frobenius",
    "from_frobenius", "member_p_kind", "partitions_of", "rotate_complement",
    "evaluate", "inner_product", "lr_coefficient", "multiply", "skew_by",
    "straighten",
]
