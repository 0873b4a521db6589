"""Characters and generalized characters of rotation-group irreps.

The character of the spin-j irrep at rotation angle omega is

    chi_j(omega) = sin((2j+1) omega/2) / sin(omega/2) = sum_m exp(-i m omega),

a degree-2j polynomial in cos(omega/2) (the second-kind Chebyshev identity:
chi_j = C_{2j}^(1)(cos(omega/2))). The order-k generalization multiplies the
k-th derivative with respect to cos(omega/2) by sin^k(omega/2) and a
normalizing square root, and this module computes it by three independent
routes that must agree:

1. k-fold exact polynomial differentiation of C_{2j}^(1)   (derivative route)
2. the closed Gegenbauer form  2^k k! C_{2j-k}^(k+1)       (Gegenbauer route)
3. the coupling-coefficient Fourier sum
   i^k sum_m exp(-i m omega) <j m k 0 | j m>               (CG route, float)

Routes 1 and 2 produce identical :class:`CharacterPoly` objects coefficient
for coefficient; route 3 is a floating-point cross-check. The weighted
orthogonality

    int_0^{2pi} chi_{k,j} chi_{k,j'} sin^2(omega/2) domega = pi delta_{j,j'}

is verified in exact arithmetic through the moment integrator.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import HalfInt, SqrtRational, factorial, halfint, projections, sqrt_mul, sqrt_to_rational
from .gegenbauer import PiRational, PolyRational, gegenbauer_poly, poly_derivative
from .integrals import weighted_poly_integral
from .wigner import clebsch_gordan


@dataclass(frozen=True)
class CharacterPoly:
    """Symbolic generalized character

        sqrt(prefactor_radicand) * sin^k(omega/2) * poly(cos(omega/2))

    with the positive prefactor radicand (2j+1) (2j-k)! / (2j+k+1)!.
    ``poly`` has degree 2j - k and ``sin_power`` equals k.
    """

    j: HalfInt
    k: int
    prefactor_radicand: Fraction
    poly: PolyRational
    sin_power: int

    def __call__(self, omega: float) -> float:
        half = 0.5 * omega
        return (
            math.sqrt(float(self.prefactor_radicand))
            * math.sin(half) ** self.sin_power
            * self.poly(math.cos(half))
        )


def _check_jk(j: HalfInt, k: int) -> None:
    if j.twice < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    if not 0 <= k <= j.twice:
        raise DomainError(f"order k must satisfy 0 <= k <= 2j, got k={k}, j={j}")


def _prefactor_radicand(j: HalfInt, k: int) -> Fraction:
    return Fraction(
        (j.twice + 1) * factorial(j.twice - k), factorial(j.twice + k + 1)
    )


def character(j: HalfInt | int, omega: float) -> float:
    """chi_j(omega) = sin((2j+1) omega/2) / sin(omega/2) on [0, 2pi].

    The removable singularities at omega = 0 and omega = 2pi evaluate to
    the limits 2j+1 and (2j+1) * (-1)**(2j).
    """
    j = halfint(j)
    if j.twice < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    half = 0.5 * omega
    s = math.sin(half)
    if abs(s) < 1e-9:
        dim = j.twice + 1
        # cos(omega/2) > 0 near omega = 0; < 0 near omega = 2pi
        if math.cos(half) > 0:
            return float(dim)
        return float(dim * (-1 if j.twice % 2 else 1))
    return math.sin((j.twice + 1) * half) / s


def gen_character_via_cg(j: HalfInt | int, k: int, omega: float) -> float:
    """Coupling-coefficient route: i^k sum_m exp(-i m omega) <j m k 0 | j m>.

    The imaginary part cancels by the m <-> -m symmetry of the coefficients;
    the residual magnitude is asserted to be below 1e-12 * (1 + |value|)
    rather than discarded silently.
    """
    j = halfint(j)
    _check_jk(j, k)
    total = 0j
    for m in projections(j):
        cg = clebsch_gordan(j, m, k, 0, j, m)
        if cg.is_zero:
            continue
        total += cmath.exp(-1j * float(m) * omega) * cg.to_float()
    value = (1j**k) * total
    assert abs(value.imag) <= 1e-12 * (1.0 + abs(value.real)), (
        f"imaginary residue {value.imag} for j={j}, k={k}, omega={omega}"
    )
    return value.real


def gen_character_via_gegenbauer(j: HalfInt | int, k: int) -> CharacterPoly:
    """Closed form: poly = (2k)!! C_{2j-k}^(k+1), (2k)!! = 2^k k!."""
    j = halfint(j)
    _check_jk(j, k)
    poly = gegenbauer_poly(j.twice - k, k + 1).scaled(2**k * factorial(k))
    return CharacterPoly(j, k, _prefactor_radicand(j, k), poly, k)


def gen_character_via_derivative(j: HalfInt | int, k: int) -> CharacterPoly:
    """Derivative route: differentiate chi_j = C_{2j}^(1)(cos(omega/2))
    k times with respect to cos(omega/2), exactly, coefficient-wise."""
    j = halfint(j)
    _check_jk(j, k)
    poly = gegenbauer_poly(j.twice, 1)
    for _ in range(k):
        poly = poly_derivative(poly)
    return CharacterPoly(j, k, _prefactor_radicand(j, k), poly, k)


def gen_char_orthogonality_exact(
    j: HalfInt | int, jprime: HalfInt | int, k: int
) -> PiRational:
    """Exact int_0^{2pi} chi_{k,j} chi_{k,j'} sin^2(omega/2) domega.

    Substituting x = cos(omega/2) turns it into

        2 sqrt(pref_j pref_j') int_{-1}^{1} poly_j poly_j' (1-x^2)^(k+1/2) dx,

    evaluated through the moment integrator. The result must be
    pi * delta_{j,j'}: on the diagonal the prefactor product is a perfect
    square by construction, and off the diagonal the polynomial integral
    vanishes. A nonzero integral with a non-square prefactor product would
    mean an internal bug and raises DomainError.
    """
    j, jprime = halfint(j), halfint(jprime)
    _check_jk(j, k)
    _check_jk(jprime, k)
    a = gen_character_via_gegenbauer(j, k)
    b = gen_character_via_gegenbauer(jprime, k)
    inner = weighted_poly_integral(a.poly * b.poly, k)
    if inner.is_zero:
        return PiRational.zero()
    prefactor = sqrt_mul(
        SqrtRational(1, a.prefactor_radicand), SqrtRational(1, b.prefactor_radicand)
    )
    try:
        root = sqrt_to_rational(prefactor)
    except Exception as exc:
        raise DomainError(
            f"non-square prefactor product with nonzero integral for j={j}, j'={jprime}, k={k}"
        ) from exc
    return inner.scaled(2 * root)
