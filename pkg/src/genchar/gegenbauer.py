"""Gegenbauer (ultraspherical) polynomial algebra over exact rationals,
and the closed-form weighted norms

    int_{-1}^{1} C_n(x) C_r(x) (1-x^2)^(alpha-1/2) dx      (orthogonality)
    int_{-1}^{1} [C_n(x)]^2 (1-x^2)^(alpha+mu-1/2) dx      (general mu, via 4F3)
    int_{-1}^{1} [C_n(x)]^2 (1-x^2)^(alpha+1/2) dx         (mu = 1 special case)

restricted to integer alpha >= 1, which keeps every Gamma value an exact
factorial: all three norms are then rational multiples of pi, represented by
:class:`PiRational`. The package contains no Gamma-function object anywhere;
half-integer Gamma ratios are Pochhammer products in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCase, DomainError
from .exact import factorial

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PolyRational:
    """Univariate polynomial with exact rational coefficients.

    ``coefficients[i]`` multiplies x**i; the highest stored coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls) -> PolyRational:
        return cls(())

    @classmethod
    def one(cls) -> PolyRational:
        return cls((Fraction(1),))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __add__(self, other: PolyRational) -> PolyRational:
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return PolyRational(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: PolyRational) -> PolyRational:
        return self + other.scaled(-1)

    def __mul__(self, other: PolyRational) -> PolyRational:
        if self.is_zero or other.is_zero:
            return PolyRational.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for k, b in enumerate(other.coefficients):
                out[i + k] += a * b
        return PolyRational(tuple(out))

    def scaled(self, factor: Fraction | int) -> PolyRational:
        factor = Fraction(factor)
        return PolyRational(tuple(c * factor for c in self.coefficients))

    def shifted_up(self) -> PolyRational:
        """Multiply by x."""
        if self.is_zero:
            return self
        return PolyRational((Fraction(0),) + self.coefficients)

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PiRational:
    """An exact rational multiple of pi."""

    coefficient: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    @classmethod
    def zero(cls) -> PiRational:
        return cls(Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __add__(self, other: PiRational) -> PiRational:
        return PiRational(self.coefficient + other.coefficient)

    def __sub__(self, other: PiRational) -> PiRational:
        return PiRational(self.coefficient - other.coefficient)

    def scaled(self, factor: Fraction | int) -> PiRational:
        return PiRational(self.coefficient * Fraction(factor))

    def to_float(self) -> float:
        import math

        return float(self.coefficient) * math.pi

    def __str__(self) -> str:
        return f"{self.coefficient}*pi"


def gegenbauer_poly(n: int, alpha: Fraction | int) -> PolyRational:
    """Exact coefficients of C_n^(alpha) by the three-term recurrence

        n C_n = 2 (n + alpha - 1) x C_{n-1} - (n + 2 alpha - 2) C_{n-2},

    C_0 = 1, C_1 = 2 alpha x. Degree is exactly n and the coefficient
    parity matches the parity of n.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {alpha}")
    if n < 0:
        raise DomainError(f"Gegenbauer degree must be >= 0, got {n}")
    prev = PolyRational.one()
    if n == 0:
        return prev
    cur = PolyRational((Fraction(0), 2 * alpha))
    for i in range(2, n + 1):
        nxt = cur.shifted_up().scaled(2 * (i + alpha - 1)) - prev.scaled(i + 2 * alpha - 2)
        prev, cur = cur, nxt.scaled(Fraction(1, i))
    return cur


def poly_derivative(p: PolyRational) -> PolyRational:
    """Exact formal derivative."""
    if p.degree < 1:
        return PolyRational.zero()
    return PolyRational(tuple(i * c for i, c in enumerate(p.coefficients) if i >= 1))


def _pochhammer(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def hyp4f3_terminating(
    a1: Fraction | int,
    a2: Fraction | int,
    a3: Fraction | int,
    a4: Fraction | int,
    b1: Fraction | int,
    b2: Fraction | int,
    b3: Fraction | int,
) -> Fraction:
    """Terminating 4F3(a1 a2 a3 a4; b1 b2 b3; 1) as an exact rational.

    The series must terminate: at least one upper parameter is a
    non-positive integer, and the sum runs to the smallest such -a.
    A lower parameter whose Pochhammer vanishes at or before the
    terminating index makes the series undefined -> DomainError.
    """
    uppers = [Fraction(a) for a in (a1, a2, a3, a4)]
    lowers = [Fraction(b) for b in (b1, b2, b3)]

    cutoffs = [-int(a) for a in uppers if a.denominator == 1 and a <= 0]
    if not cutoffs:
        raise DomainError("series does not terminate: no non-positive integer upper parameter")
    n_term = min(cutoffs)
    for b in lowers:
        # (b)_t first vanishes at t = -b + 1; all t <= n_term must be safe.
        if b.denominator == 1 and b <= 0 and -int(b) < n_term:
            raise DomainError(
                f"lower parameter {b} hits a vanishing Pochhammer before the series terminates"
            )

    total = Fraction(1)
    term = Fraction(1)
    for t in range(n_term):
        num = Fraction(1)
        for a in uppers:
            num *= a + t
        den = Fraction(t + 1)
        for b in lowers:
            den *= b + t
        term = term * num / den
        total += term
    return total


def _validate_alpha(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError(f"alpha must be an integer >= 1, got {alpha!r}")


def gegenbauer_norm_orthogonality(n: int, alpha: int) -> PiRational:
    """Diagonal norm int [C_n^(alpha)]^2 (1-x^2)^(alpha-1/2) dx:

        pi * 2**(1-2 alpha) * (n + 2 alpha - 1)! / (n! (n + alpha) ((alpha-1)!)^2)
    """
    _validate_alpha(alpha)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    coeff = (
        Fraction(2) ** (1 - 2 * alpha)
        * Fraction(factorial(n + 2 * alpha - 1), factorial(n))
        / ((n + alpha) * factorial(alpha - 1) ** 2)
    )
    return PiRational(coeff)


def gegenbauer_norm_general(n: int, alpha: int, mu: int) -> PiRational:
    """int [C_n^(alpha)]^2 (1-x^2)^(alpha+mu-1/2) dx by the terminating-4F3
    closed form (Laursen-Mita).

    Valid for integer alpha > mu >= 0; at alpha <= mu the prefactor contains
    Gamma(alpha - mu) at a pole and the formula is an indeterminate form, so
    the call raises DomainError rather than guessing a limit (use the mu = 1
    specialization or the moment integrator instead).
    """
    _validate_alpha(alpha)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if mu < 0:
        raise DomainError(f"mu must be >= 0, got {mu}")
    if alpha - mu <= 0:
        raise DomainError(
            f"Gamma pole: alpha - mu = {alpha - mu} <= 0 is outside the formula's domain"
        )
    series = hyp4f3_terminating(
        -n, 2 * alpha + n, _HALF, -mu, alpha + _HALF, alpha - mu, 1
    )
    # Gamma ratios of equal fractional part collapse to Pochhammer products:
    #   Gamma(alpha+mu+1/2)/Gamma(alpha+1/2) = (alpha+1/2)_mu
    #   Gamma(alpha-mu+n)/Gamma(alpha-mu)    = (alpha-mu)_n
    coeff = (
        Fraction(factorial(2 * alpha + n - 1))
        * _pochhammer(alpha + _HALF, mu)
        * _pochhammer(Fraction(alpha - mu), n)
        / (
            Fraction(2) ** (2 * alpha - 1)
            * (alpha + mu + n)
            * factorial(n)
            * factorial(alpha - 1)
            * factorial(alpha + mu + n - 1)
        )
    )
    return PiRational(coeff * series)


def gegenbauer_norm_mu1(n: int, alpha: int) -> PiRational:
    """int [C_n^(alpha)]^2 (1-x^2)^(alpha+1/2) dx in closed form:

        pi (2 alpha + n - 1)! [(alpha-1)(alpha+1/2) + n (alpha+n/2)]
        / (2**(2 alpha - 1) (alpha+n-1)(alpha+n)(alpha+n+1) n! ((alpha-1)!)^2)

    The point (alpha, n) = (1, 0) is a removable 0/0 (the factor
    alpha + n - 1 vanishes); it raises DegenerateCase -- the true value there
    is 3*pi/8, available from the moment integrator.
    """
    _validate_alpha(alpha)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if alpha == 1 and n == 0:
        raise DegenerateCase(
            "(alpha, n) = (1, 0) is a 0/0 point of the closed form; "
            "integrate (1-x^2)^(3/2) directly (the value is 3*pi/8)"
        )
    bracket = (alpha - 1) * (alpha + _HALF) + n * (alpha + Fraction(n, 2))
    coeff = (
        Fraction(factorial(2 * alpha + n - 1)) * bracket
        / (
            Fraction(2) ** (2 * alpha - 1)
            * (alpha + n - 1)
            * (alpha + n)
            * (alpha + n + 1)
            * factorial(n)
            * factorial(alpha - 1) ** 2
        )
    )
    return PiRational(coeff)
