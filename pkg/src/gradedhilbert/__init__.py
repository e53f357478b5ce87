"""Hilbert series of the identity component of a free algebra graded by a finite group."""

from .finite_generation import (
    FgVerdict,
    GeneratorSeries,
    Reason,
    classify_grading,
    generator_count_trivial,
    generator_series,
    is_finitely_generated,
    trivial_grading_series,
    verify_nontrivial_theorem,
    verify_two_block_roots,
)
from .grading import DimVector, LengthMismatch
from .groups import (
    BoundExceeded,
    Group,
    NotAGroup,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    from_cayley_table,
    klein_four,
    symmetric,
)
from .hilbert import (
    HilbertResult,
    build_system_matrix,
    hilbert_component,
    hilbert_components,
    hilbert_identity,
    verify_structure,
)
from .oracle import ComponentTable, cross_check, tensor_dimensions
from .poly import IntPoly, RatFun, det_int, det_poly, expand, gcd_primitive, reduce

__version__ = "0.1.0"
