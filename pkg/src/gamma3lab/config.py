"""Central numeric configuration.

All tolerance constants live in one frozen record so that every module
compares against the same numbers.  Values are chosen for plain
double-precision arithmetic with coefficients of moderate magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Default truncation order for Taylor data.  Eight terms cover the first
#: four logarithmic coefficients with guard terms to spare.
DEFAULT_ORDER = 8


@dataclass(frozen=True)
class Tolerances:
    # series arithmetic
    zero_constant: float = 1e-12       # |a0| below this cannot be inverted
    normalized: float = 1e-12          # slack on f(0)=0, f'(0)=1
    log_roundtrip: float = 1e-10       # exp(log(f/z)) vs f/z, per coefficient
    # Schwarz data
    rotation_unimodular: float = 1e-14
    carlson_slack: float = 1e-12       # feasibility threshold on Lemma slacks
    # objective region
    region_slack: float = 1e-12        # membership slack for the region E
    # optimizer
    newton_tol: float = 1e-12          # gradient norm at convergence
    newton_fd_step: float = 1e-7       # finite-difference step for the Jacobian
    dedupe_distance: float = 1e-8      # critical points closer than this merge
    tie_break: float = 1e-12           # values within this count as equal
    certification: float = 1e-6        # dense grid may not exceed max by this
    bisection_tol: float = 1e-14       # root isolation on edge polynomials
    # search
    bound_compliance: float = 1e-9     # |gamma3| may not exceed a bound by this
    remark_compliance: float = 1e-6    # slack against the sharp real-a2 values


TOL = Tolerances()
