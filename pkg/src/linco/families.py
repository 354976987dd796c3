"""The seven orthogonal polynomial families, each a monic three-term
recurrence  x*P_m = P_{m+1} + b(m)*P_m + c(m)*P_{m-1},  P_0 = 1, P_{-1} = 0.

Four classical/free specializations (hermite, charlier, chebyshev2,
free_charlier), two q-deformed families (q_hermite, big_q_hermite), and the
two-parameter family `interp` that interpolates between them through alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .algebra import ExactPoly, ONE, T, XPoly, ZERO, q_integer
from .cumulants import moment_from_cumulants
from .partitions import SizeLimitError

DEFAULT_DEGREE_CAP = 16


class UnknownFamilyError(ValueError):
    """No family registered under the requested name."""


@dataclass(frozen=True)
class FamilySpec:
    """One family: recurrence coefficients plus the switches that drive the
    cumulant engine (`cumulant_kind` selects block weights, `q_mode` selects
    how crossing weights evaluate)."""

    name: str
    b: Callable[[int], ExactPoly]
    c: Callable[[int], ExactPoly]
    q_mode: str
    cumulant_kind: str


def _zero_b(m: int) -> ExactPoly:
    return ZERO


FAMILY_NAMES = (
    "hermite",
    "charlier",
    "chebyshev2",
    "free_charlier",
    "q_hermite",
    "big_q_hermite",
    "interp",
)


@lru_cache(maxsize=None)
def family_spec(name: str) -> FamilySpec:
    """Canonical FamilySpec for one of the seven family names."""
    if name == "hermite":
        return FamilySpec(name, _zero_b, lambda m: ExactPoly.monomial(m, t=1), "fixed_one", "gaussian")
    if name == "charlier":
        return FamilySpec(
            name, lambda m: ExactPoly.constant(m), lambda m: ExactPoly.monomial(m, t=1), "fixed_one", "poisson"
        )
    if name == "chebyshev2":
        return FamilySpec(name, _zero_b, lambda m: T, "fixed_zero", "gaussian")
    if name == "free_charlier":
        # the b sequence is genuinely irregular: 0 at m = 0, then constant 1
        return FamilySpec(
            name, lambda m: ZERO if m == 0 else ONE, lambda m: T, "fixed_zero", "poisson"
        )
    if name == "q_hermite":
        return FamilySpec(name, _zero_b, lambda m: T * q_integer(m), "symbolic", "gaussian")
    if name == "big_q_hermite":
        return FamilySpec(name, q_integer, lambda m: T * q_integer(m), "symbolic", "poisson")
    if name == "interp":
        return FamilySpec(
            name,
            lambda m: ExactPoly.variable("alpha") * q_integer(m),
            lambda m: T * q_integer(m),
            "symbolic",
            "interp",
        )
    raise UnknownFamilyError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


@lru_cache(maxsize=None)
def _polynomial_cached(f: FamilySpec, m: int) -> XPoly:
    if m == 0:
        return XPoly.one()
    if m == 1:
        return XPoly.x() - XPoly((f.b(0),))
    prev = _polynomial_cached(f, m - 1)
    prev2 = _polynomial_cached(f, m - 2)
    k = m - 1
    return (XPoly.x() - XPoly((f.b(k),))) * prev - prev2.scale(f.c(k))


def polynomial(f: FamilySpec, m: int, *, cap: int | None = None) -> XPoly:
    """The monic degree-m member of the family."""
    limit = DEFAULT_DEGREE_CAP if cap is None else cap
    if m < 0:
        raise ValueError("degree must be >= 0")
    if m > limit:
        raise SizeLimitError(f"degree {m} exceeds the degree cap {limit}")
    return _polynomial_cached(f, m)


def norm_squared(f: FamilySpec, m: int) -> ExactPoly:
    """<P_m, P_m> = c(1) c(2) ... c(m), straight from the recurrence."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    h = ONE
    for j in range(1, m + 1):
        h = h * f.c(j)
    return h


def integrate(f: FamilySpec, p: XPoly, *, moment_cap: int | None = None) -> ExactPoly:
    """Expectation of p(x): sum of coeff_d times the order-d moment.

    Moments come from the cumulant engine, the single moment source shared
    with everything else in the package.
    """
    total = ZERO
    for d, coeff in enumerate(p.coeffs):
        if coeff.is_zero:
            continue
        total = total + coeff * moment_from_cumulants(f, d, cap=moment_cap)
    return total
