"""Floating-point layer: Cauchy transforms, functional equations, cumulants.

The Cauchy transform of the deformed Poisson distribution is evaluated as a
finite continued fraction over the recurrence coefficients, bottom-up from a
terminal tail z - alpha_depth.  Limits live here as ordinary zero values of
s and t (with 0**0 = 1), in contrast to the exact layer where they are
polynomial specializations.

The s = 1, t -> 0 case also has a closed form: G(z) is a root of

    (z^3 - (1+3L)z^2 + 3L^2 z - L^3) G^2 - (2z^2 - (2+5L)z + 3L^2) G
        + (z - (2L+1)) = 0

namely the one with numerator  2z^2 - (2+5L)z + 3L^2 + L*sqrt((z-L)^2 - 4L),
taken continuous on the upper half-plane; the square root is evaluated as the
product of principal square roots of (z - L -+ 2 sqrt(L)), each of which stays
off the branch cut for Im z > 0.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from .moments import jacobi


class DomainError(ValueError):
    """The evaluation point is outside the function's domain."""


def _poly_float(p, lam: float, s: float, t: float) -> float:
    """Evaluate a MultiPoly at float parameters, with 0.0**0 == 1.0."""
    total = 0.0
    for (el2, es, et), coeff in p.terms():
        total += coeff * lam ** (el2 / 2) * s**es * t**et
    return total


def jacobi_floats(lam: float, s: float, t: float, depth: int):
    """(alphas, omegas) of the continued fraction as floats; s, t in [0, 1]."""
    if lam <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    if not 0 <= s <= 1 or not 0 <= t <= 1:
        raise DomainError(f"s and t must lie in [0, 1], got s={s}, t={t}")
    jp = jacobi(depth)
    alphas = [_poly_float(a, lam, s, t) for a in jp.alpha]
    omegas = [_poly_float(w, lam, s, t) for w in jp.omega[: depth - 1]]
    return alphas, omegas


def continued_fraction(z: complex, alphas, omegas) -> complex:
    """1 / (z - a_1 - w_1 / (z - a_2 - ...)), ending in the tail z - a_depth."""
    if len(alphas) != len(omegas) + 1:
        raise ValueError("need one more alpha than omega")
    acc = z - alphas[-1]
    for a, w in zip(reversed(alphas[:-1]), reversed(omegas)):
        acc = z - a - w / acc
    return 1 / acc


def cauchy_cf(z: complex, lam: float, s: float, t: float, depth: int) -> complex:
    """Cauchy transform by depth-truncated continued fraction, Im z > 0."""
    if z.imag <= 0:
        raise DomainError("z must lie in the upper half-plane")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    alphas, omegas = jacobi_floats(lam, s, t, depth)
    return continued_fraction(z, alphas, omegas)


def cauchy_cfree_closed(z: complex, lam: float) -> complex:
    """Closed-form Cauchy transform of the s = 1, t -> 0 distribution."""
    if z.imag <= 0:
        raise DomainError("z must lie in the upper half-plane")
    if lam <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    r = 2 * math.sqrt(lam)
    root = cmath.sqrt(z - lam - r) * cmath.sqrt(z - lam + r)
    numer = 2 * z**2 - (2 + 5 * lam) * z + 3 * lam**2 + lam * root
    denom = 2 * (z**3 - (1 + 3 * lam) * z**2 + 3 * lam**2 * z - lam**3)
    return numer / denom


def quadratic_residual(z: complex, lam: float, g: complex) -> float:
    """|quadratic(z, g)| for the closed-form transform's defining equation."""
    a = z**3 - (1 + 3 * lam) * z**2 + 3 * lam**2 * z - lam**3
    b = 2 * z**2 - (2 + 5 * lam) * z + 3 * lam**2
    c = z - (2 * lam + 1)
    return abs(a * g * g - b * g + c)


def h_residual(z: complex, lam: float, h: complex) -> float:
    """|h - (z - lam - lam/h)|; h = 0 raises ZeroDivisionError."""
    return abs(h - (z - lam - lam / h))


class CumulantKind(Enum):
    SEMICIRCLE_R = "SEMICIRCLE_R"
    CFREE_R = "CFREE_R"


def cumulant_series(kind: CumulantKind, lam: float, nterms: int):
    """Series coefficients of the relevant cumulant transforms.

    The free cumulants of the semicircle reference (mean and variance lam)
    are (lam, lam, 0, 0, ...); the conditionally free cumulants of the
    deformed Poisson pair are constant: lam/(1 - z) expands to lam at every
    order.
    """
    if nterms < 1:
        raise ValueError("nterms must be >= 1")
    if kind is CumulantKind.SEMICIRCLE_R:
        return [lam, lam][:nterms] + [0.0] * max(0, nterms - 2)
    if kind is CumulantKind.CFREE_R:
        return [lam] * nterms
    raise ValueError(f"unknown cumulant kind {kind}")


GENERATING_M_RADIUS = 0.25


def generating_m(z: complex) -> complex:
    """Moment generating function of the lam = 1 conditionally free sequence.

    Equals (1/z) * closed-form G(1/z) at lam = 1; defined here on the disk
    |z| < 0.25, within the series' convergence radius (moment growth is at
    most Catalan-like, ratio <= 4).
    """
    if abs(z) >= GENERATING_M_RADIUS:
        raise DomainError(f"|z| must be < {GENERATING_M_RADIUS}")
    root = cmath.sqrt(-3 * z**2 - 2 * z + 1)
    numer = -3 * z**2 + 7 * z - 2 - z * root
    denom = 2 * (z**3 - 3 * z**2 + 4 * z - 1)
    return numer / denom
