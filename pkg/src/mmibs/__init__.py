"""Mixed multiplier ideals and Bernstein-Sato ideals of monomial tuples, in exact arithmetic."""
from .algebra import (
    MonomialIdeal,
    Polynomial,
    as_rational,
    contains,
    minimalize,
    parse_monomial,
    parse_polynomial,
    product_power,
    substitute,
)
from .bernstein import (
    LinearForm,
    ProductOfLinearForms,
    TwistedMonomial,
    bs_ideal_principal_monomial,
    build_g,
    functional_equation_check,
    generator_independence_certificate,
    inclusion_check_unit_factors,
    verify_theorem_main,
)
from .errors import (
    CertificateError,
    DimensionMismatch,
    InvalidArgument,
    MMIBSError,
    UnsupportedInput,
    VerificationError,
)
from .mmi import (
    Wall,
    candidate_walls,
    is_jumping_point,
    jumping_numbers,
    mixed_multiplier_ideal,
    ray_jumping_numbers,
    region_report,
)
from .newton import NewtonPolyhedron, ResolutionData, membership, newton_polyhedron, resolution_data, weighted_rhs
from .plot import emit_wall_plot

__version__ = "0.1.0"
