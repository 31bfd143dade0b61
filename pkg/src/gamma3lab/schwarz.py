"""Schwarz functions as coefficient triples and finite Blaschke products.

A Schwarz function is an analytic self-map w of the unit disk with
w(0) = 0.  Its first three Taylor coefficients obey Carlson's bounds

    |c1| <= 1,   |c2| <= 1 - |c1|^2,   |c3| <= 1 - |c1|^2 - |c2|^2/(1+|c1|),

which :func:`carlson_check` reports as three slack values.  Concrete
witnesses are finite Blaschke products: one zero is pinned at the origin
(so w(0) = 0 holds structurally) and the remaining zeros live strictly
inside the disk, so every product is a genuine Schwarz function by
construction.

Samplers are pure functions of their seed; parallel callers should use
distinct seeds.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .config import TOL
from .series import TruncatedSeries, multiply


class ZeroOutsideDisk(ValueError):
    """A Blaschke zero must satisfy |alpha| < 1."""


@dataclass(frozen=True)
class SchwarzTriple:
    """First three Taylor coefficients of a Schwarz function."""

    c1: complex
    c2: complex
    c3: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        object.__setattr__(self, "c3", complex(self.c3))


@dataclass(frozen=True)
class BlaschkeProduct:
    """rotation * z * prod_k (z - alpha_k) / (1 - conj(alpha_k) z).

    The pinned factor z enforces w(0) = 0; ``degree`` is the number of
    factors including the pinned one.
    """

    zeros: tuple[complex, ...]
    rotation: complex = 1.0 + 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeros", tuple(complex(a) for a in self.zeros))
        object.__setattr__(self, "rotation", complex(self.rotation))
        for a in self.zeros:
            if abs(a) >= 1.0:
                raise ZeroOutsideDisk(f"zero {a!r} is not inside the unit disk")
        if abs(abs(self.rotation) - 1.0) > TOL.rotation_unimodular:
            raise ValueError(f"rotation {self.rotation!r} is not unimodular")

    @property
    def degree(self) -> int:
        return len(self.zeros) + 1


def blaschke_value(b: BlaschkeProduct, z: complex) -> complex:
    """Evaluate the product directly (no series truncation)."""
    w = b.rotation * z
    for a in b.zeros:
        w *= (z - a) / (1.0 - a.conjugate() * z)
    return w


def _factor_series(alpha: complex, order: int) -> TruncatedSeries:
    # (z - a)/(1 - conj(a) z) = -a + sum_{k>=1} conj(a)^(k-1) (1 - |a|^2) z^k
    ac = alpha.conjugate()
    lead = 1.0 - (alpha * ac).real
    coeffs = [-alpha]
    p = 1.0 + 0j
    for _ in range(order):
        coeffs.append(p * lead)
        p *= ac
    return TruncatedSeries(tuple(coeffs))


def taylor_of_blaschke(b: BlaschkeProduct, order: int) -> TruncatedSeries:
    """Taylor coefficients of the product up to the given order.

    The constant coefficient is exactly zero.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    tail = TruncatedSeries.from_polynomial((1.0,), order - 1)
    for a in b.zeros:
        tail = multiply(tail, _factor_series(a, order - 1))
    coeffs = [0j] + [b.rotation * c for c in tail.coeffs]
    return TruncatedSeries(tuple(coeffs))


def triple_of_blaschke(b: BlaschkeProduct) -> SchwarzTriple:
    w = taylor_of_blaschke(b, 3)
    return SchwarzTriple(w.coeffs[1], w.coeffs[2], w.coeffs[3])


def sample_schwarz(seed: int, degree: int, real_only: bool = False) -> BlaschkeProduct:
    """Deterministic random Blaschke product of the given degree.

    Complex zeros are area-uniform on the open disk (radius = sqrt(u));
    the rotation is uniform on the circle.  With ``real_only`` the zeros
    are uniform on (-1, 1) and the rotation is +-1, which makes all Taylor
    coefficients real.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed)
    zeros = []
    for _ in range(degree - 1):
        if real_only:
            a = 2.0 * rng.random() - 1.0
            if abs(a) >= 1.0:
                a = 0.0
            zeros.append(complex(a))
        else:
            r = math.sqrt(rng.random())
            theta = 2.0 * math.pi * rng.random()
            zeros.append(cmath.rect(r, theta))
    if real_only:
        rotation = 1.0 + 0j if rng.random() < 0.5 else -1.0 + 0j
    else:
        rotation = cmath.exp(2j * math.pi * rng.random())
    return BlaschkeProduct(tuple(zeros), rotation)


def carlson_check(c: SchwarzTriple) -> tuple[float, float, float]:
    """Slack of each of the three coefficient bounds; all >= 0 when feasible."""
    x1 = abs(c.c1)
    x2 = abs(c.c2)
    x3 = abs(c.c3)
    s1 = 1.0 - x1
    s2 = (1.0 - x1 * x1) - x2
    s3 = (1.0 - x1 * x1 - x2 * x2 / (1.0 + x1)) - x3
    return (s1, s2, s3)


def is_feasible(c: SchwarzTriple, slack: float = TOL.carlson_slack) -> bool:
    return all(s >= -slack for s in carlson_check(c))
