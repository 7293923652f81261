"""Exact joint invariants of families of vector fields.

The pipeline: parse or generate a family of vector fields with
rational-function coefficients, row-reduce its coefficient matrix over the
function field, bracket until the reduced family commutes, then search for
joint polynomial invariants by a degree-bounded ansatz or verify
product/exponential invariants exactly.
"""

from .context import VarContext
from .darboux import DarbouxExpr, verify_darboux
from .echelon import (
    EchelonSystem,
    bracket_independence_check,
    commuting_closure,
    genericity_factors,
    genericity_string,
    is_abelian,
    rref,
)
from .errors import (
    CatalogError,
    ContextMismatchError,
    ParseError,
    PoleError,
    SchemaError,
)
from .fields import FieldSystem, VectorField, sample_points
from .invariants import (
    InvariantBasis,
    annihilates,
    expected_invariant_count,
    functional_independence,
    poly_in_span,
    polynomial_invariants,
    spans_equal,
)
from .liealg import (
    StructureConstants,
    adjoint_fields,
    coadjoint_fields,
    validate_jacobi,
)
from .parsing import parse_scalar, print_scalar
from .poly import Polynomial, poly_gcd
from .ratfunc import RationalFunction

__version__ = "0.1.0"

__all__ = [
    "CatalogError",
    "ContextMismatchError",
    "DarbouxExpr",
    "EchelonSystem",
    "FieldSystem",
    "InvariantBasis",
    "ParseError",
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "SchemaError",
    "StructureConstants",
    "VarContext",
    "VectorField",
    "adjoint_fields",
    "annihilates",
    "bracket_independence_check",
    "coadjoint_fields",
    "commuting_closure",
    "expected_invariant_count",
    "functional_independence",
    "genericity_factors",
    "genericity_string",
    "is_abelian",
    "parse_scalar",
    "poly_gcd",
    "poly_in_span",
    "polynomial_invariants",
    "print_scalar",
    "rref",
    "sample_points",
    "spans_equal",
    "validate_jacobi",
    "verify_darboux",
    "__version__",
]
