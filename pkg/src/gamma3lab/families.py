"""The three close-to-convex families and their gamma_3 machinery.

Each family consists of normalized univalent functions f with

    Re{ h(z) f'(z) } > 0   on the unit disk,

for a fixed generator polynomial h: 1-z, 1-z^2 or 1-z+z^2.  Membership is
equivalent to h(z) f'(z) = (1+w)/(1-w) for a Schwarz function w, which
yields polynomial maps from the Schwarz coefficients (c1, c2, c3) to the
Taylor coefficients (a2, a3, a4) and, through

    gamma_3 = (1/2)(a4 - a2 a3 + a2^3 / 3),

to a closed form

    gamma_3 = (w0 + w1 c1 + w2 c2 + w3 c3 + w12 c1 c2 + w111 c1^3) / scale

with integer weights particular to the family.  The weights are stored on
the family record; taking their absolute values gives exactly the
objective function maximized in :mod:`gamma3lab.objective`, so the
triangle-inequality step that links the two lives in one place.

The logarithmic coefficients themselves come from the series logarithm:
log(f(z)/z) = 2 sum gamma_n z^n, which forces gamma_1 = a2/2 and
gamma_2 = (a3 - a2^2/2)/2; the implementation validates these against the
log-series route rather than hand-expanding further.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_ORDER, TOL
from .schwarz import SchwarzTriple
from .series import (
    NotNormalized,
    TruncatedSeries,
    antiderivative,
    log_over_z,
    multiply,
    reciprocal,
)


class BadRadius(ValueError):
    """Membership sampling requires 0 < radius < 1."""


@dataclass(frozen=True)
class Family:
    """One of the three subclasses, identified by its generator polynomial.

    ``generator`` holds the coefficients of h (constant term first),
    ``scale`` the denominator of the gamma_3 closed form, and
    ``gamma3_weights`` the numerator weights of the monomials
    (1, c1, c2, c3, c1*c2, c1^3) in that order.
    """

    tag: str
    generator: tuple[float, ...]
    scale: int
    gamma3_weights: tuple[float, float, float, float, float, float]


F1 = Family("F1", (1.0, -1.0), 48, (3.0, 2.0, 4.0, 12.0, 8.0, 4.0))
F2 = Family("F2", (1.0, 0.0, -1.0), 12, (0.0, 1.0, 0.0, 3.0, 2.0, 1.0))
F3 = Family("F3", (1.0, -1.0, 1.0), 48, (-5.0, -2.0, 4.0, 12.0, 8.0, 4.0))

FAMILIES: dict[str, Family] = {"f1": F1, "f2": F2, "f3": F3}


def family_by_tag(tag: str) -> Family:
    try:
        return FAMILIES[tag.lower()]
    except KeyError:
        raise KeyError(f"unknown family {tag!r}; expected one of f1, f2, f3") from None


@dataclass(frozen=True)
class CoefficientTriple:
    """Taylor coefficients a2, a3, a4 of a normalized function."""

    a2: complex
    a3: complex
    a4: complex


def coefficients_from_schwarz(family: Family, c: SchwarzTriple) -> CoefficientTriple:
    """Polynomial map from Schwarz coefficients to (a2, a3, a4)."""
    c1, c2, c3 = c.c1, c.c2, c.c3
    if family.tag == "F1":
        a2 = (1 + 2 * c1) / 2
        a3 = (1 + 2 * c1 + 2 * c1 * c1 + 2 * c2) / 3
        a4 = (1 + 2 * c1 + 2 * c2 + 2 * c3 + 2 * c1 * c1 + 4 * c1 * c2 + 2 * c1 ** 3) / 4
    elif family.tag == "F2":
        a2 = c1
        a3 = (1 + 2 * c2 + 2 * c1 * c1) / 3
        a4 = (c1 + c3 + 2 * c1 * c2 + c1 ** 3) / 2
    elif family.tag == "F3":
        a2 = (1 + 2 * c1) / 2
        a3 = 2 * (c1 + c2 + c1 * c1) / 3
        a4 = (2 * c2 + 2 * c3 + 2 * c1 * c1 + 2 * c1 ** 3 + 4 * c1 * c2 - 1) / 4
    else:  # pragma: no cover - family records are fixed above
        raise KeyError(f"unknown family tag {family.tag!r}")
    return CoefficientTriple(a2, a3, a4)


def gamma3_from_coefficients(t: CoefficientTriple) -> complex:
    """gamma_3 = (1/2)(a4 - a2 a3 + a2^3 / 3)."""
    return (t.a4 - t.a2 * t.a3 + t.a2 ** 3 / 3) / 2


def gamma3_closed_form(family: Family, c: SchwarzTriple) -> complex:
    """Family closed form for gamma_3 in terms of (c1, c2, c3).

    Agrees with the composition gamma3_from_coefficients o
    coefficients_from_schwarz to rounding error, for arbitrary inputs.
    """
    w0, w1, w2, w3, w12, w111 = family.gamma3_weights
    c1, c2, c3 = c.c1, c.c2, c.c3
    return (w0 + w1 * c1 + w2 * c2 + w3 * c3 + w12 * c1 * c2 + w111 * c1 ** 3) / family.scale


def member_series(family: Family, w: TruncatedSeries, order: int) -> TruncatedSeries:
    """The member f with h(z) f'(z) = (1 + w)/(1 - w), as a series.

    ``w`` must carry data up to order-1 so that no coefficient of f is
    fabricated; f(0) = 0 and f'(0) = 1 hold by construction.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if abs(w.coeffs[0]) > TOL.normalized:
        raise ValueError("w must fix the origin: w(0) = 0")
    if w.order < order - 1:
        raise ValueError(
            f"w carries data to order {w.order}, need {order - 1} for f at order {order}"
        )
    n = order - 1
    wt = w.truncate(n)
    one = TruncatedSeries.from_polynomial((1.0,), n)
    h = TruncatedSeries.from_polynomial(family.generator, n)
    f_prime = multiply(multiply(one + wt, reciprocal(one - wt)), reciprocal(h))
    return antiderivative(f_prime)


def membership_residual(
    family: Family, f_prime: TruncatedSeries, radius: float = 0.95, samples: int = 720
) -> float:
    """min Re{ h(z) f'(z) } over samples on the circle |z| = radius.

    A positive residual is sampled evidence of membership at that radius,
    not a proof; the truncation error of f' is the caller's concern.
    """
    if not 0.0 < radius < 1.0:
        raise BadRadius(f"radius must lie in (0, 1), got {radius!r}")
    if samples < 8:
        raise ValueError("need at least 8 sample points")
    h = TruncatedSeries.from_polynomial(family.generator, len(family.generator) - 1)
    worst = math.inf
    for k in range(samples):
        z = radius * cmath.exp(2j * math.pi * k / samples)
        val = (h.evaluate(z) * f_prime.evaluate(z)).real
        if val < worst:
            worst = val
    return worst


def gamma_sequence(f: TruncatedSeries, m: int) -> list[complex]:
    """Logarithmic coefficients gamma_1..gamma_m of a normalized f."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > f.order - 1:
        raise NotNormalized(
            f"series of order {f.order} determines gamma_n only for n <= {f.order - 1}"
        )
    g = log_over_z(f)
    return [g.coeffs[k] / 2 for k in range(1, m + 1)]


def milin_functional(f: TruncatedSeries, n: int) -> float:
    """Double sum of k|gamma_k|^2 - 1/k for m <= n, k <= m.

    Nonpositive for univalent functions; zero term by term for the Koebe
    function.
    """
    gammas = gamma_sequence(f, n)
    total = 0.0
    partial = 0.0
    for k in range(1, n + 1):
        g = gammas[k - 1]
        partial += k * (g.real * g.real + g.imag * g.imag) - 1.0 / k
        total += partial
    return total


def koebe_series(order: int) -> TruncatedSeries:
    """z/(1-z)^2 = sum n z^n, the extremal function of the full class."""
    return TruncatedSeries(tuple(complex(n) for n in range(order + 1)))


def identity_series(order: int) -> TruncatedSeries:
    """f(z) = z."""
    return TruncatedSeries.from_polynomial((0.0, 1.0), order)
