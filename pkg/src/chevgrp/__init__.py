"""Exact computations in exceptional Chevalley groups.

Root systems, Chevalley bases, integral modules reduced mod p, involution
classes, Weyl-group twisted classes and maximal tori, and property (P).
"""

from .chevbasis import GeneratorWord, compute_structure_constants, parse_word
from .exact import QQ, ExactMatrix
from .involutions import (apply_symmetry, classes_meeting_T, classify, commutes,
                          is_involution_mod_center, jordan_partition)
from .propp import FactorSummary, has_property_P
from .rootsys import build_root_system, dynkin_symmetry
from .tables import JordanType
from .weyl import (make_twist, sigma_centralizer, sigma_classes, torus_order, torus_order_poly,
                   weyl_group)
from .weylmod import build_adjoint, build_minuscule, build_module, build_vmin

__version__ = "0.1.0"

__all__ = [
    "QQ", "ExactMatrix", "FactorSummary", "GeneratorWord", "JordanType",
    "apply_symmetry", "build_adjoint", "build_minuscule", "build_module", "build_root_system",
    "build_vmin", "classes_meeting_T", "classify", "commutes", "compute_structure_constants",
    "dynkin_symmetry", "has_property_P", "is_involution_mod_center", "jordan_partition",
    "make_twist", "parse_word", "sigma_centralizer", "sigma_classes", "torus_order",
    "torus_order_poly", "weyl_group",
]
