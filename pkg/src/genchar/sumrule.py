"""Exact verification of the weighted two-projection sum rule.

For a spin j >= 1/2 and integer order k >= 0, the identity under test reads,
in coupling-coefficient form,

    sum_{m,m'} (-1)^(m'-m) w(m-m') <j m k 0|j m> <j m' k 0|j m'>
        = [k(k+1) + 4j(j+1)] / (24 j(j+1))          if k <= 2j, else 0

and in 3j form (no alternating sign, both symbols of shape (j k j; -m 0 m)),

    sum_{m,m'} w(m-m') threej(m) threej(m')
        = [k(k+1) + 4j(j+1)] / (24 j(j+1) (2j+1))   if k <= 2j, else 0,

where the weight w(d) = 1/(Gamma(3+d) Gamma(3-d)) is supported on |d| <= 2
(w = 1/4, 1/6, 1/24 for |d| = 0, 1, 2). The same weight is the limit of the
sinc-shaped kernel sin(d pi) / [d pi (1-d^2)(4-d^2)] at its removable
singularities, which is how it arises from the Fourier integral of sin^4;
only the limit values are ever evaluated here (never the 0/0 form).

Both sides are computed in exact rational arithmetic: each paired product of
coupling coefficients shares the same triangle prefactor and therefore
collapses to a rational via sqrt_to_rational. j = 0 is excluded with
DegenerateCase: the right-hand side is 0/0 there.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateCase, DomainError, IrrationalTerm, NotAPerfectSquare
from .exact import HalfInt, SqrtRational, factorial, halfint, projections, sqrt_mul, sqrt_to_rational
from .wigner import ThreeJArgs, triangle_ok, wigner_3j, clebsch_gordan


class Form(enum.Enum):
    """Which face of the identity a report refers to."""

    CG = "cg"
    THREEJ = "3j"


FORM_ORDER = (Form.CG, Form.THREEJ)


@dataclass(frozen=True)
class SumRuleReport:
    """One (j, k, form) verification record; ``passed`` is exact equality."""

    two_j: int
    k: int
    form: Form
    lhs: Fraction
    rhs: Fraction
    passed: bool
    term_count: int
    elapsed: float  # seconds


def weight_exact(d: int) -> Fraction:
    """1 / (Gamma(3+d) Gamma(3-d)) for integer d; zero for |d| >= 3
    (the reciprocal Gamma vanishes at non-positive integers)."""
    if abs(d) >= 3:
        return Fraction(0)
    return Fraction(1, factorial(2 + d) * factorial(2 - d))


def _require_j(j: HalfInt) -> None:
    if j.twice < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    if j.twice == 0:
        raise DegenerateCase(
            "j = 0 is excluded: the closed form is 0/0 there (the bare double "
            "sum would give 1/4)"
        )


@lru_cache(maxsize=None)
def _cg_column(two_j: int, k: int) -> tuple[SqrtRational, ...]:
    """<j m k 0 | j m> for m = -j..j ascending."""
    j = HalfInt(two_j)
    return tuple(clebsch_gordan(j, m, k, 0, j, m) for m in projections(j))


@lru_cache(maxsize=None)
def _threej_column(two_j: int, k: int) -> tuple[SqrtRational, ...]:
    """(j k j; -m 0 m) for m = -j..j ascending."""
    j = HalfInt(two_j)
    return tuple(
        wigner_3j(ThreeJArgs(j, halfint(k), j, -m, HalfInt(0), m))
        for m in projections(j)
    )


def _double_sum(
    column: tuple[SqrtRational, ...],
    signed: bool,
    skip_far_pairs: bool,
) -> Fraction:
    # m outer, m' inner, both ascending; d = m - m' in integer steps of the
    # index difference. Exact arithmetic makes the order immaterial, fixing
    # it makes reports byte-reproducible.
    total = Fraction(0)
    n = len(column)
    for i in range(n):
        a = column[i]
        for i2 in range(n):
            d = i - i2
            if skip_far_pairs and abs(d) >= 3:
                continue
            try:
                product = sqrt_to_rational(sqrt_mul(a, column[i2]))
            except NotAPerfectSquare as exc:
                raise IrrationalTerm(
                    f"paired product failed to collapse at (i, i') = ({i}, {i2})"
                ) from exc
            w = weight_exact(d)
            if w == 0:
                continue
            if signed and d % 2:
                total -= w * product
            else:
                total += w * product
    return total


def lhs_cg_exact(j: HalfInt | int, k: int, *, skip_far_pairs: bool = True) -> Fraction:
    """Exact signed double sum over coupling-coefficient pairs.

    ``skip_far_pairs=False`` evaluates (and collapses) every pair including
    the |m - m'| >= 3 ones whose weight vanishes; results are identical.
    """
    j = halfint(j)
    _require_j(j)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return _double_sum(_cg_column(j.twice, k), signed=True, skip_far_pairs=skip_far_pairs)


def lhs_3j_exact(j: HalfInt | int, k: int, *, skip_far_pairs: bool = True) -> Fraction:
    """Exact unsigned double sum over 3j pairs of shape (j k j; -m 0 m)."""
    j = halfint(j)
    _require_j(j)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return _double_sum(_threej_column(j.twice, k), signed=False, skip_far_pairs=skip_far_pairs)


def rhs_cg(j: HalfInt | int, k: int) -> Fraction:
    """[k(k+1) + 4j(j+1)] / (24 j(j+1)) under the triangle gate delta(j k j)."""
    j = halfint(j)
    _require_j(j)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if not triangle_ok(j, halfint(k), j):
        return Fraction(0)
    jj = j.value * (j.value + 1)
    return (k * (k + 1) + 4 * jj) / (24 * jj)


def rhs_3j(j: HalfInt | int, k: int) -> Fraction:
    """CG right-hand side divided by 2j+1, same triangle gate."""
    j = halfint(j)
    return rhs_cg(j, k) / (j.twice + 1)


def lhs_float(j: HalfInt | int, k: int, form: Form) -> float:
    """Floating-point evaluation of the double sum.

    The sinc-shaped kernel is interpreted as its limit at integer argument
    (removable singularities on |d| <= 2, exact zero otherwise); coefficient
    values are converted to float at the boundary.
    """
    j = halfint(j)
    _require_j(j)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    signed = form is Form.CG
    column = _cg_column(j.twice, k) if signed else _threej_column(j.twice, k)
    values = [v.to_float() for v in column]
    total = 0.0
    n = len(values)
    for i in range(n):
        for i2 in range(n):
            d = i - i2
            if abs(d) >= 3:
                continue
            w = float(weight_exact(d))
            if signed and d % 2:
                w = -w
            total += w * values[i] * values[i2]
    return total


def verify(j: HalfInt | int, k: int, form: Form) -> SumRuleReport:
    """Check one (j, k, form) cell; passes iff exact LHS == exact RHS."""
    j = halfint(j)
    start = time.perf_counter()
    if form is Form.CG:
        lhs = lhs_cg_exact(j, k)
        rhs = rhs_cg(j, k)
    else:
        lhs = lhs_3j_exact(j, k)
        rhs = rhs_3j(j, k)
    elapsed = time.perf_counter() - start
    return SumRuleReport(
        two_j=j.twice,
        k=k,
        form=form,
        lhs=lhs,
        rhs=rhs,
        passed=(lhs == rhs),
        term_count=(j.twice + 1) ** 2,
        elapsed=elapsed,
    )


def sweep_cells(two_j_max: int, k_extra: int) -> list[tuple[int, int, Form]]:
    """Deterministic (two_j, k, form) cell list; k runs to 2j + k_extra so
    triangle-violating cells are exercised from the zero side."""
    if two_j_max < 1:
        raise DomainError(f"two_j_max must be >= 1, got {two_j_max}")
    if k_extra < 0:
        raise DomainError(f"k_extra must be >= 0, got {k_extra}")
    return [
        (two_j, k, form)
        for two_j in range(1, two_j_max + 1)
        for k in range(0, two_j + k_extra + 1)
        for form in FORM_ORDER
    ]


def sweep(two_j_max: int, k_extra: int = 2, threads: int = 1) -> list[SumRuleReport]:
    """Verify every cell of the (j, k, form) grid.

    The report order is fixed by (two_j, k, form) regardless of how many
    workers evaluate cells; the CG cache is idempotent, so parallel fills
    never change observable results.
    """
    cells = sweep_cells(two_j_max, k_extra)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda c: verify(HalfInt(c[0]), c[1], c[2]), cells))
    else:
        reports = [verify(HalfInt(two_j), k, form) for two_j, k, form in cells]
    reports.sort(key=lambda r: (r.two_j, r.k, FORM_ORDER.index(r.form)))
    return reports
