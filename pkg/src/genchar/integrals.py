"""Exact pi-rational integration of polynomial x half-integer-power weights,
the Fourier integral of sin^4, and a Gauss-Legendre engine for independent
floating-point cross-checks.

Every closed form in the derivation chain is an integral of the shape

    int_{-1}^{1} poly(x) * (1 - x^2)^(q + 1/2) dx,

a rational multiple of pi. ``moment_halfweight`` evaluates the monomial
moments by a pure rational recursion (no Gamma object), and everything else
is linearity on top of it.

Floating-point cross-checks should integrate in the half-angle variable
(x = cos eta), where the integrand is a smooth trigonometric polynomial;
the x-form weight has endpoint derivative singularities that degrade
Gauss-Legendre convergence.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DomainError
from .gegenbauer import PiRational, PolyRational


def moment_halfweight(p: int, q: int) -> PiRational:
    """Exact int_{-1}^{1} x^p (1-x^2)^(q+1/2) dx.

    Zero for odd p. For even p this is a Beta value, built by rational
    recursion from the semicircle area pi/2:

        I(0, q) = I(0, q-1) * (2q+1)/(2q+2)
        I(p, q) = I(p-2, q) * (p-1)/(p+2q+2)
    """
    if p < 0 or q < 0:
        raise DomainError(f"moments need p, q >= 0, got p={p}, q={q}")
    if p % 2 == 1:
        return PiRational.zero()
    coeff = Fraction(1, 2)
    for i in range(1, q + 1):
        coeff *= Fraction(2 * i + 1, 2 * i + 2)
    for i in range(2, p + 1, 2):
        coeff *= Fraction(i - 1, i + 2 * q + 2)
    return PiRational(coeff)


def weighted_poly_integral(poly: PolyRational, q: int) -> PiRational:
    """Exact int_{-1}^{1} poly(x) (1-x^2)^(q+1/2) dx by linearity."""
    total = Fraction(0)
    for p, c in enumerate(poly.coefficients):
        if c != 0:
            total += c * moment_halfweight(p, q).coefficient
    return PiRational(total)


def sin4_fourier(d: int) -> PiRational:
    """Exact int_0^pi exp(-2*i*d*eta) sin(eta)^4 d(eta) for integer d.

    The integrand's Fourier content is finite: sin^4 = 3/8 - cos(2 eta)/2
    + cos(4 eta)/8, and the complex exponential picks out the matching
    harmonic, so the value is real and supported on |d| <= 2:

        d = 0   -> 3*pi/8
        |d| = 1 -> -pi/4
        |d| = 2 -> pi/16
        else    -> 0
    """
    # amplitude of cos(c*eta) in sin^4(eta), keyed by harmonic c
    harmonics = {0: Fraction(3, 8), 2: Fraction(-1, 2), 4: Fraction(1, 8)}
    c = 2 * abs(d)
    if c not in harmonics:
        return PiRational.zero()
    amplitude = harmonics[c]
    # int_0^pi e^(-2 i d eta) cos(c eta) deta = pi (c = 0) or pi/2 (c = 2|d| > 0)
    return PiRational(amplitude if c == 0 else amplitude / 2)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    nodes_used: int


_NODE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}
_NODE_LOCK = threading.Lock()


def _nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    got = _NODE_CACHE.get(n)
    if got is None:
        with _NODE_LOCK:
            got = _NODE_CACHE.get(n)
            if got is None:
                got = np.polynomial.legendre.leggauss(n)
                _NODE_CACHE[n] = got
    return got


def _gauss_estimate(f: Callable[[float], float], a: float, b: float, n: int) -> float:
    x, w = _nodes(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * sum(wi * f(mid + half * xi) for xi, wi in zip(x, w))


def quad_gauss(f: Callable[[float], float], a: float, b: float, n: int) -> QuadratureResult:
    """n-node Gauss-Legendre estimate of int_a^b f.

    The error estimate is the difference against the (n+8)-node value; for
    smooth integrands it is a conservative bound in practice.
    """
    if a >= b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n}")
    value = _gauss_estimate(f, a, b, n)
    refined = _gauss_estimate(f, a, b, n + 8)
    return QuadratureResult(value=value, abs_error_estimate=abs(value - refined), nodes_used=n)
