"""Exact Clebsch-Gordan coefficients and Wigner 3j symbols.

Phase convention is Condon-Shortley throughout, which makes the usual
CG <-> 3j relation

    <j1 m1 j2 m2 | j3 m3> = (-1)**(j1-j2+m3) * sqrt(2*j3+1)
                            * threej(j1 j2 j3; m1 m2 -m3)

hold as written; the test suite asserts it (together with the column-reversal
symmetry) rather than assuming it.

Values are returned as :class:`~genchar.exact.SqrtRational`, never floats.
The evaluator is the Racah single-sum closed form: the alternating sum is
accumulated in exact rationals and the square-root prefactor is carried as a
prime factorization until the very end, so no intermediate ever rounds or
overflows.

Out-of-domain projections (|m| > j, or m not in the parity class of j) raise
:class:`~genchar.errors.DomainError` to surface caller bugs; selection-rule
zeros (valid domain, vanishing value) return an exact 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exact import (
    HalfInt,
    SqrtRational,
    factorial_factored,
    halfint,
    parity_phase,
    sqrt_mul,
)


def _check_momentum_pair(j: HalfInt, m: HalfInt, label: str) -> None:
    if j.twice < 0:
        raise DomainError(f"{label}: momentum {j} < 0")
    if abs(m.twice) > j.twice:
        raise DomainError(f"{label}: |m| = {abs(m)} exceeds j = {j}")
    if (j.twice - m.twice) % 2 != 0:
        raise DomainError(f"{label}: m = {m} not in the parity class of j = {j}")


@dataclass(frozen=True)
class ThreeJArgs:
    """Arguments of a 3j symbol; construction validates |m_i| <= j_i and parity."""

    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    m1: HalfInt
    m2: HalfInt
    m3: HalfInt

    def __post_init__(self) -> None:
        for field, j, m in (
            ("column 1", self.j1, self.m1),
            ("column 2", self.j2, self.m2),
            ("column 3", self.j3, self.m3),
        ):
            _check_momentum_pair(j, m, field)

    def reversed_columns(self) -> ThreeJArgs:
        return ThreeJArgs(self.j3, self.j2, self.j1, self.m3, self.m2, self.m1)


def triangle_ok(j1: HalfInt | int, j2: HalfInt | int, j3: HalfInt | int) -> bool:
    """|j1-j2| <= j3 <= j1+j2 with integer perimeter."""
    j1, j2, j3 = halfint(j1), halfint(j2), halfint(j3)
    if j1.twice < 0 or j2.twice < 0 or j3.twice < 0:
        raise DomainError("triangle_ok expects nonnegative momenta")
    if (j1.twice + j2.twice + j3.twice) % 2 != 0:
        return False
    return abs(j1.twice - j2.twice) <= j3.twice <= j1.twice + j2.twice


@lru_cache(maxsize=None)
def _cg_racah(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j3: HalfInt, m3: HalfInt) -> SqrtRational:
    # Racah closed form. All factorial arguments below are true integers once
    # the triangle and parity gates have passed.
    def as_int(h: HalfInt) -> int:
        return h.as_int()

    t1 = as_int(j1 + j2 - j3)
    t2 = as_int(j1 - j2 + j3)
    t3 = as_int(-j1 + j2 + j3)
    perim = as_int(j1 + j2 + j3) + 1

    a_plus = as_int(j1 + m1)
    a_minus = as_int(j1 - m1)
    b_plus = as_int(j2 + m2)
    b_minus = as_int(j2 - m2)
    c_plus = as_int(j3 + m3)
    c_minus = as_int(j3 - m3)

    # Square-root prefactor kept factored until the end:
    # (2j3+1) * Delta(j1 j2 j3)^2 * product of the six projection factorials.
    pf = factorial_factored(t1) * factorial_factored(t2) * factorial_factored(t3)
    pf = pf / factorial_factored(perim)
    for n in (a_plus, a_minus, b_plus, b_minus, c_plus, c_minus):
        pf = pf * factorial_factored(n)
    radicand = pf.to_fraction() * (j3.twice + 1)

    lo = max(0, as_int(j2 - j3 - m1), as_int(j1 - j3 + m2))
    hi = min(t1, a_minus, b_plus)
    if hi < lo:
        return SqrtRational.zero()

    from .exact import factorial as fact

    total = Fraction(0)
    for t in range(lo, hi + 1):
        den = (
            fact(t)
            * fact(t1 - t)
            * fact(a_minus - t)
            * fact(b_plus - t)
            * fact(as_int(j3 - j2 + m1) + t)
            * fact(as_int(j3 - j1 - m2) + t)
        )
        total += Fraction(-1 if t % 2 else 1, den)

    if total == 0:
        return SqrtRational.zero()
    sign = 1 if total > 0 else -1
    return SqrtRational(sign, radicand * total * total)


def clebsch_gordan(
    j1: HalfInt | int,
    m1: HalfInt | int,
    j2: HalfInt | int,
    m2: HalfInt | int,
    j3: HalfInt | int,
    m3: HalfInt | int,
) -> SqrtRational:
    """Exact <j1 m1 j2 m2 | j3 m3> in the Condon-Shortley convention.

    Returns an exact zero when m1 + m2 != m3 or the triangle condition
    fails; raises DomainError when any (j, m) pair is out of domain.
    """
    j1, m1 = halfint(j1), halfint(m1)
    j2, m2 = halfint(j2), halfint(m2)
    j3, m3 = halfint(j3), halfint(m3)
    _check_momentum_pair(j1, m1, "(j1, m1)")
    _check_momentum_pair(j2, m2, "(j2, m2)")
    _check_momentum_pair(j3, m3, "(j3, m3)")
    if m1 + m2 != m3 or not triangle_ok(j1, j2, j3):
        return SqrtRational.zero()
    return _cg_racah(j1, m1, j2, m2, j3, m3)


def wigner_3j(args: ThreeJArgs) -> SqrtRational:
    """Exact 3j symbol, via the CG relation:

    threej(j1 j2 j3; m1 m2 m3)
        = (-1)**(j1-j2-m3) * <j1 m1 j2 m2 | j3 -m3> / sqrt(2*j3+1)
    """
    if args.m1 + args.m2 + args.m3 != 0:
        return SqrtRational.zero()
    if not triangle_ok(args.j1, args.j2, args.j3):
        return SqrtRational.zero()
    cg = clebsch_gordan(args.j1, args.m1, args.j2, args.m2, args.j3, -args.m3)
    if cg.is_zero:
        return cg
    value = sqrt_mul(cg, SqrtRational(1, Fraction(1, args.j3.twice + 1)))
    if parity_phase(args.j1 - args.j2 - args.m3) < 0:
        value = -value
    return value


def symmetry_3j_reverse(args: ThreeJArgs) -> SqrtRational:
    """Column-reversed symbol with the phase (-1)**(j1+j2+j3) applied.

    Column reversal multiplies a 3j symbol by (-1)**(j1+j2+j3), so this
    must reproduce ``wigner_3j(args)`` exactly; the tests assert it.
    """
    value = wigner_3j(args.reversed_columns())
    if value.is_zero:
        return value
    if parity_phase(args.j1 + args.j2 + args.j3) < 0:
        value = -value
    return value
