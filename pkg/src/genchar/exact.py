"""Exact scalar arithmetic: half-integers, rationals, factored factorials,
and signed square roots of rationals.

Every value in the coupling-coefficient layer lives in one of three exact
closures:

* ``HalfInt`` -- angular momenta and projections, stored as doubled integers
  so that half-integer spins never touch floating point.
* ``BigRational`` -- arbitrary-precision rationals (``fractions.Fraction``,
  always reduced, denominator >= 1).
* ``SqrtRational`` -- values of the form sign * sqrt(p/q); squares of
  coupling coefficients are rational, so this closure contains every
  Clebsch-Gordan coefficient and 3j symbol exactly.

Nothing in this module ever rounds.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DomainError, NotAPerfectSquare

# Exact arbitrary-precision rational scalar. fractions.Fraction already has
# the required invariants (reduced, positive denominator, exact arithmetic).
BigRational = Fraction


@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)*Z, stored as ``twice`` = 2 * value.

    ``HalfInt(3)`` is 3/2; ``HalfInt(4)`` is 2. Storing the doubled value
    removes all parity ambiguity: a projection m belongs to momentum j
    exactly when ``(j.twice - m.twice)`` is even, and the m-range of a spin
    j steps by 1 (``twice`` steps of 2) from -j to j.
    """

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int):
            raise DomainError(f"HalfInt.twice must be an int, got {self.twice!r}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise DomainError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice + halfint(other).twice)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice - halfint(other).twice)

    def __rsub__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(halfint(other).twice - self.twice)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice))

    def __lt__(self, other: HalfInt | int) -> bool:
        return self.twice < halfint(other).twice

    def __le__(self, other: HalfInt | int) -> bool:
        return self.twice <= halfint(other).twice

    def __gt__(self, other: HalfInt | int) -> bool:
        return self.twice > halfint(other).twice

    def __ge__(self, other: HalfInt | int) -> bool:
        return self.twice >= halfint(other).twice

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, int):
            return self.twice == 2 * other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def halfint(x: HalfInt | int) -> HalfInt:
    """Coerce an int (taken at face value: 1 -> 1, not 1/2) to HalfInt."""
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int):
        return HalfInt(2 * x)
    raise DomainError(f"expected HalfInt or int, got {x!r}")


def projections(j: HalfInt | int) -> list[HalfInt]:
    """All projections m = -j, -j+1, ..., j of a momentum j >= 0."""
    j = halfint(j)
    if j.twice < 0:
        raise DomainError(f"momentum must be >= 0, got {j}")
    return [HalfInt(t) for t in range(-j.twice, j.twice + 1, 2)]


def parity_phase(h: HalfInt | int) -> int:
    """(-1)**h for an integer-valued h (DomainError if h is half-odd)."""
    h = halfint(h)
    return -1 if h.as_int() % 2 else 1


# ---------------------------------------------------------------------------
# factorials
# ---------------------------------------------------------------------------

# Monotonically growing factorial table; sweeps reuse the same factorials
# heavily. Reads are lock-free (list append never invalidates lower indices);
# growth is serialized.
_FACTORIALS: list[int] = [1]
_FACTORIALS_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """n! from the shared monotone cache."""
    if n < 0:
        raise DomainError(f"factorial of negative {n}")
    if n >= len(_FACTORIALS):
        with _FACTORIALS_LOCK:
            while len(_FACTORIALS) <= n:
                _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class PrimeFactorization:
    """A positive rational as a map prime -> signed exponent.

    Keeps huge factorial ratios such as (2j-k)!/(2j+k+1)! reduced without
    ever forming the unreduced product. No zero exponents are stored.
    """

    exponents: tuple[tuple[int, int], ...]  # sorted (prime, exponent) pairs

    @classmethod
    def one(cls) -> PrimeFactorization:
        return cls(())

    @classmethod
    def from_map(cls, exps: dict[int, int]) -> PrimeFactorization:
        return cls(tuple(sorted((p, e) for p, e in exps.items() if e != 0)))

    def as_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def __mul__(self, other: PrimeFactorization) -> PrimeFactorization:
        exps = self.as_map()
        for p, e in other.exponents:
            exps[p] = exps.get(p, 0) + e
        return PrimeFactorization.from_map(exps)

    def __truediv__(self, other: PrimeFactorization) -> PrimeFactorization:
        exps = self.as_map()
        for p, e in other.exponents:
            exps[p] = exps.get(p, 0) - e
        return PrimeFactorization.from_map(exps)

    def to_fraction(self) -> Fraction:
        num = 1
        den = 1
        for p, e in self.exponents:
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return Fraction(num, den)


def factorial_factored(n: int) -> PrimeFactorization:
    """n! as a prime factorization (Legendre: e_p = sum_i floor(n / p^i))."""
    if n < 0:
        raise DomainError(f"factorial of negative {n}")
    exps: dict[int, int] = {}
    for p in _primes_up_to(n):
        e = 0
        q = n // p
        while q:
            e += q
            q //= p
        exps[p] = e
    return PrimeFactorization.from_map(exps)


# ---------------------------------------------------------------------------
# signed square roots of rationals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqrtRational:
    """The exact real number sign * sqrt(radicand), radicand rational >= 0.

    The closure is multiplicative, not additive: products stay inside it,
    and the only "addition" the package ever needs happens after collapsing
    paired products to plain rationals via :func:`sqrt_to_rational`.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or +1, got {self.sign}")
        rad = Fraction(self.radicand)
        object.__setattr__(self, "radicand", rad)
        if rad < 0:
            raise DomainError(f"radicand must be >= 0, got {rad}")
        if (self.sign == 0) != (rad == 0):
            raise DomainError("sign is 0 exactly when the radicand is 0")

    @classmethod
    def zero(cls) -> SqrtRational:
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, q: Fraction | int) -> SqrtRational:
        """Embed an exact rational q as sign(q) * sqrt(q**2)."""
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        return cls(1 if q > 0 else -1, q * q)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __neg__(self) -> SqrtRational:
        return SqrtRational(-self.sign, self.radicand)

    def to_float(self) -> float:
        import math

        return self.sign * math.sqrt(float(self.radicand))

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        prefix = "-" if self.sign < 0 else ""
        num, den = self.radicand.numerator, self.radicand.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            return f"{prefix}{Fraction(rn, rd)}"
        return f"{prefix}sqrt({self.radicand})"


def sqrt_mul(a: SqrtRational, b: SqrtRational) -> SqrtRational:
    """Exact product; radicands multiply, signs multiply."""
    if a.sign == 0 or b.sign == 0:
        return SqrtRational.zero()
    return SqrtRational(a.sign * b.sign, a.radicand * b.radicand)


def sqrt_to_rational(a: SqrtRational) -> Fraction:
    """Collapse sign * sqrt(p/q) to an exact rational.

    Succeeds iff numerator and denominator of the reduced radicand are both
    perfect squares (exact integer square root, verified by squaring);
    raises :class:`NotAPerfectSquare` otherwise.
    """
    if a.sign == 0:
        return Fraction(0)
    num, den = a.radicand.numerator, a.radicand.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise NotAPerfectSquare(f"sqrt({a.radicand}) is irrational")
    return Fraction(a.sign * rn, rd)
