"""genchar: exact generalized characters of rotation-group irreps,
Clebsch-Gordan/3j algebra, Gegenbauer weighted norms, and an
exact-arithmetic sum-rule verifier with floating-point cross-checks."""

from .errors import DegenerateCase, DomainError, IrrationalTerm, NotAPerfectSquare
from .exact import (
    BigRational,
    HalfInt,
    PrimeFactorization,
    SqrtRational,
    factorial_factored,
    halfint,
    parity_phase,
    projections,
    sqrt_mul,
    sqrt_to_rational,
)
from .wigner import ThreeJArgs, clebsch_gordan, symmetry_3j_reverse, triangle_ok, wigner_3j
from .gegenbauer import (
    PiRational,
    PolyRational,
    gegenbauer_norm_general,
    gegenbauer_norm_mu1,
    gegenbauer_norm_orthogonality,
    gegenbauer_poly,
    hyp4f3_terminating,
    poly_derivative,
)
from .integrals import (
    QuadratureResult,
    moment_halfweight,
    quad_gauss,
    sin4_fourier,
    weighted_poly_integral,
)
from .characters import (
    CharacterPoly,
    character,
    gen_char_orthogonality_exact,
    gen_character_via_cg,
    gen_character_via_derivative,
    gen_character_via_gegenbauer,
)
from .sumrule import (
    Form,
    SumRuleReport,
    lhs_3j_exact,
    lhs_cg_exact,
    lhs_float,
    rhs_3j,
    rhs_cg,
    sweep,
    verify,
    weight_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "CharacterPoly",
    "DegenerateCase",
    "DomainError",
    "Form",
    "HalfInt",
    "IrrationalTerm",
    "NotAPerfectSquare",
    "PiRational",
    "PolyRational",
    "PrimeFactorization",
    "QuadratureResult",
    "SqrtRational",
    "SumRuleReport",
    "ThreeJArgs",
    "character",
    "clebsch_gordan",
    "factorial_factored",
    "gegenbauer_norm_general",
    "gegenbauer_norm_mu1",
    "gegenbauer_norm_orthogonality",
    "gegenbauer_poly",
    "gen_char_orthogonality_exact",
    "gen_character_via_cg",
    "gen_character_via_derivative",
    "gen_character_via_gegenbauer",
    "halfint",
    "hyp4f3_terminating",
    "lhs_3j_exact",
    "lhs_cg_exact",
    "lhs_float",
    "moment_halfweight",
    "parity_phase",
    "poly_derivative",
    "projections",
    "quad_gauss",
    "rhs_3j",
    "rhs_cg",
    "sin4_fourier",
    "sqrt_mul",
    "sqrt_to_rational",
    "sweep",
    "symmetry_3j_reverse",
    "triangle_ok",
    "verify",
    "weight_exact",
    "weighted_poly_integral",
]
