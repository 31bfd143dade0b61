"""Randomized lower-bound search for sup |gamma_3| over each family.

Candidates are finite Blaschke products, so every evaluation is a genuine
member witness and the best value found is a rigorous lower bound (up to
rounding) for the supremum that the proved maxima bound from above.
The budget splits 70/30 between area-uniform global sampling across
degrees and coordinate-wise refinement of the ten best candidates; the
refinement perturbs one zero coordinate (or the rotation angle) at a time,
keeps improvements, and halves the step after a round without progress,
which stays robust where coincident zeros make the landscape non-smooth.

Runs are deterministic for a fixed (seed, iterations): per-sample seeds
derive from the master seed by fixed integer mixing, so concurrent
restarts with distinct indices cannot collide and results merge by a
deterministic maximum.

Whether the general (complex a2) upper bounds are attained is open; the
gap report quantifies the remaining interval without drawing conclusions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import TOL
from .families import Family, gamma3_closed_form
from .optimize import global_bound
from .schwarz import BlaschkeProduct, sample_schwarz, triple_of_blaschke


class FamilyMismatch(ValueError):
    """Search result belongs to a different family than requested."""


#: Sharp suprema of |gamma_3| under the restriction that a2 is real,
#: for comparison against real-coefficient searches.
REMARK_VALUES: dict[str, float] = {
    "F1": (11.0 + 15.0 * math.sqrt(30.0)) / 288.0,   # 0.323466...
    "F2": (95.0 + 23.0 * math.sqrt(46.0)) / 972.0,   # 0.258223...
    "F3": (743.0 + 131.0 * math.sqrt(262.0)) / 7776.0,  # 0.368238...
}

_TOP_CANDIDATES = 10
_REFINE_ROUNDS = 40
_GLOBAL_FRACTION = 0.7
_INITIAL_STEP = 0.1


@dataclass(frozen=True)
class SearchResult:
    family: Family
    best_value: float
    witness: BlaschkeProduct
    iterations: int
    real_only: bool
    upper_bound: float
    remark_value: float | None = None

    def __post_init__(self) -> None:
        if self.best_value > self.upper_bound + TOL.bound_compliance:
            raise ValueError(
                f"search value {self.best_value!r} exceeds the proved bound "
                f"{self.upper_bound!r}; a witness is not a Schwarz function"
            )
        if self.remark_value is not None and (
            self.best_value > self.remark_value + TOL.remark_compliance
        ):
            raise ValueError(
                f"real-coefficient search value {self.best_value!r} exceeds the "
                f"sharp real-a2 value {self.remark_value!r}"
            )


@dataclass(frozen=True)
class GapReport:
    """Distance between the proved upper bound and the best witness found.

    The upper bounds are not claimed to be attained for complex a2; the
    gap measures the unresolved interval, nothing more.
    """

    family: Family
    best_value: float
    upper_bound: float
    gap: float
    relative_gap: float


def _derive_seed(master: int, index: int) -> int:
    # fixed multiplicative mixing so distinct masters cannot share streams
    return (master * 0x9E3779B97F4A7C15 + index) % (1 << 63)


def _evaluate(family: Family, b: BlaschkeProduct) -> float:
    return abs(gamma3_closed_form(family, triple_of_blaschke(b)))


def _perturbations(b: BlaschkeProduct, step: float, real_only: bool):
    """Deterministic one-coordinate moves, zeros kept strictly in the disk."""
    for i, zero in enumerate(b.zeros):
        deltas = (step, -step) if real_only else (step, -step, 1j * step, -1j * step)
        for d in deltas:
            moved = zero + d
            if abs(moved) < 1.0 - 1e-9:
                zeros = b.zeros[:i] + (moved,) + b.zeros[i + 1 :]
                yield BlaschkeProduct(zeros, b.rotation)
    if not real_only:
        theta = cmath.phase(b.rotation)
        for d in (step, -step):
            yield BlaschkeProduct(b.zeros, cmath.exp(1j * (theta + d)))


def _refine(
    family: Family, b: BlaschkeProduct, value: float, budget: int
) -> tuple[BlaschkeProduct, float, int]:
    """Coordinate descent; returns (witness, value, evaluations used)."""
    real_only = all(z.imag == 0.0 for z in b.zeros) and b.rotation.imag == 0.0
    step = _INITIAL_STEP
    used = 0
    for _ in range(_REFINE_ROUNDS):
        if used >= budget or step < 1e-12:
            break
        improved = False
        for candidate in _perturbations(b, step, real_only):
            if used >= budget:
                break
            v = _evaluate(family, candidate)
            used += 1
            if v > value:
                b, value = candidate, v
                improved = True
        if not improved:
            step *= 0.5
    return b, value, used


def search_lower_bound(
    family: Family,
    iterations: int = 100_000,
    seed: int = 1,
    real_only: bool = False,
    max_degree: int = 4,
) -> SearchResult:
    """Best |gamma_3| witness over Blaschke products of degree <= max_degree.

    ``iterations`` is the total evaluation budget; 70% goes to global
    sampling cycling through the degrees, the rest to refining the top
    candidates.  Deterministic for fixed arguments.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    n_global = max(1, round(_GLOBAL_FRACTION * iterations))
    top: list[tuple[float, int, BlaschkeProduct]] = []
    for i in range(n_global):
        degree = 1 + i % max_degree
        b = sample_schwarz(_derive_seed(seed, i), degree, real_only)
        v = _evaluate(family, b)
        top.append((v, i, b))
        if len(top) > _TOP_CANDIDATES:
            top.sort(key=lambda t: (-t[0], t[1]))
            del top[_TOP_CANDIDATES:]
    top.sort(key=lambda t: (-t[0], t[1]))

    budget = iterations - n_global
    best_value, _, best = top[0]
    if budget > 0:
        per_candidate = max(1, budget // len(top))
        remaining = budget
        for v, _, b in top:
            if remaining <= 0:
                break
            rb, rv, used = _refine(family, b, v, min(per_candidate, remaining))
            remaining -= used
            if rv > best_value:
                best_value, best = rv, rb

    report = global_bound(family)
    return SearchResult(
        family=family,
        best_value=best_value,
        witness=best,
        iterations=iterations,
        real_only=real_only,
        upper_bound=report.gamma3_bound,
        remark_value=REMARK_VALUES[family.tag] if real_only else None,
    )


def gap_report(family: Family, result: SearchResult) -> GapReport:
    """How far the best witness sits below the proved upper bound."""
    if result.family.tag != family.tag:
        raise FamilyMismatch(
            f"result belongs to {result.family.tag}, not {family.tag}"
        )
    gap = result.upper_bound - result.best_value
    return GapReport(
        family=family,
        best_value=result.best_value,
        upper_bound=result.upper_bound,
        gap=gap,
        relative_gap=gap / result.upper_bound,
    )
