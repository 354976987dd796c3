"""Linearization of products of orthogonal polynomials.

Two independent routes to <P_{n_1} ... P_{n_k}>:

* the partition sum: enumerate the partitions of {1..n} in which no block
  meets the same factor twice, and total their crossing-weighted cumulant
  products;
* the oracle: expand each factor through its recurrence, multiply out, and
  integrate monomials against the moment sequence.

The two share only the exact-arithmetic layer and the cumulant definitions;
`verify_suite` cross-checks them (and more) wholesale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .algebra import ExactPoly, ONE, XPoly, ZERO, q_factorial
from .cumulants import weighted_cumulant_product
from .families import FamilySpec, family_spec, integrate, norm_squared, polynomial
from .partitions import (
    Composition,
    SizeLimitError,
    _groups_or_none,
    _iter_assignments,
    _lookup_filter,
    compute_stats,
    enumerate_inhomogeneous,
    enumerate_partitions,
    is_noncrossing,
    resolve_cap,
    restricted_crossings,
)

STRUCTURAL_FAMILIES = ("hermite", "charlier", "chebyshev2", "free_charlier", "q_hermite")

VERIFY_SUITES = (
    "oracle-cross",
    "norms",
    "qfactorial",
    "specializations",
    "structural",
    "noncrossing-rc",
)


@dataclass(frozen=True)
class LinearizationResult:
    family: str
    composition: Composition
    method: str
    value: ExactPoly


@dataclass(frozen=True)
class ExpansionResult:
    """Coefficients of the product over the family's own basis, index 0..n."""

    family: str
    composition: Composition
    coeffs: tuple[ExactPoly, ...]


@dataclass(frozen=True)
class CheckResult:
    label: str
    passed: bool
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {c.label}")
            if not c.passed:
                lines.append(f"     left : {c.lhs}")
                lines.append(f"     right: {c.rhs}")
        for note in self.notes:
            lines.append(f"note: {note}")
        status = "all checks passed" if self.passed else "CHECKS FAILED"
        lines.append(f"{self.suite}: {len(self.checks)} checks, {status}")
        return lines


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All ordered compositions of `total` into positive parts."""
    if total < 0:
        raise ValueError("total must be >= 0")
    if total == 0:
        yield ()
        return

    def rec(rest: int, acc: tuple[int, ...]):
        if rest == 0:
            yield acc
            return
        for first in range(1, rest + 1):
            yield from rec(rest - first, acc + (first,))

    yield from rec(total, ())


@lru_cache(maxsize=None)
def _inhomogeneous_signatures(parts: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """Counts of (restricted crossings, block count) over the singleton-free
    inhomogeneous partitions of the composition.  Family-independent, so one
    enumeration pass serves every family."""
    c = Composition(parts)
    counts: dict[tuple[int, int], int] = {}
    flt = _lookup_filter("no-singletons")
    for blocks, rc in _iter_assignments(c.n, _groups_or_none(c), flt):
        key = (rc, len(blocks))
        counts[key] = counts.get(key, 0) + 1
    return counts


def linearize_partition_sum(f: FamilySpec, c: Composition, *, cap: int | None = None) -> ExactPoly:
    """<product of P_{n_j}> as the crossing-weighted cumulant sum over the
    inhomogeneous partitions of c.

    Partitions with singletons contribute zero (the order-1 cumulant
    vanishes), so the enumeration skips them; the remaining stream is grouped
    by (crossings, block count) before the family's cumulant pattern is
    applied, an exact regrouping of the per-partition sum.
    """
    n = c.n
    limit = resolve_cap(cap)
    if n > limit:
        raise SizeLimitError(f"composition total {n} exceeds the enumeration cap {limit}")
    if n == 0:
        return ONE
    kind = f.cumulant_kind
    mode = f.q_mode
    terms: dict[tuple[int, int, int], int] = {}
    for (rc, k), cnt in _inhomogeneous_signatures(c.parts).items():
        if kind == "gaussian" and 2 * k != n:
            continue
        e_alpha = n - 2 * k if kind == "interp" else 0
        if mode == "fixed_zero":
            if rc:
                continue
            e_q = 0
        elif mode == "fixed_one":
            e_q = 0
        else:
            e_q = rc
        key = (k, e_q, e_alpha)
        terms[key] = terms.get(key, 0) + cnt
    return ExactPoly._from_raw(terms)


def _linearize_partition_sum_direct(
    f: FamilySpec, c: Composition, *, cap: int | None = None, prefix: tuple[int, ...] = ()
) -> ExactPoly:
    """Reference path: the literal per-partition sum of
    weighted_cumulant_product over the full inhomogeneous stream."""
    if c.n == 0:
        return ONE
    return ExactPoly.sum(
        weighted_cumulant_product(f, p)
        for p in enumerate_inhomogeneous(c, "all", cap=cap, prefix=prefix)
    )


def linearize_oracle(f: FamilySpec, c: Composition, *, cap: int | None = None) -> ExactPoly:
    """Independent check value: expand the product by the recurrence and
    integrate against the moment sequence."""
    product = XPoly.one()
    for part in c.parts:
        product = product * polynomial(f, part)
    return integrate(f, product, moment_cap=cap)


def linearize(f: FamilySpec, c: Composition, method: str = "partition", *, cap: int | None = None) -> LinearizationResult:
    """Convenience wrapper returning a labelled result for one method."""
    if method == "partition":
        value = linearize_partition_sum(f, c, cap=cap)
    elif method == "oracle":
        value = linearize_oracle(f, c, cap=cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return LinearizationResult(f.name, c, method, value)


def expansion_coefficients(f: FamilySpec, c: Composition, *, cap: int | None = None) -> ExpansionResult:
    """Expand P_{n_1} ... P_{n_k} over the family basis.

    coeffs[m] = <product * P_m> / <P_m, P_m>, computed by the partition sum
    and exact division.  The internal sums extend the composition by one part
    of size m, so their totals reach 2n; the enumeration cap is raised to
    cover them (the user-facing precondition stays c.n <= cap).
    """
    n = c.n
    limit = resolve_cap(cap)
    if n > limit:
        raise SizeLimitError(f"composition total {n} exceeds the enumeration cap {limit}")
    inner_cap = max(limit, 2 * n)
    coeffs = []
    for m in range(n + 1):
        extended = c if m == 0 else Composition(c.parts + (m,))
        value = linearize_partition_sum(f, extended, cap=inner_cap)
        if value.is_zero:
            coeffs.append(ZERO)
            continue
        coeffs.append(value.exact_div(norm_squared(f, m)))
    return ExpansionResult(f.name, c, tuple(coeffs))


def reconstruct(f: FamilySpec, expansion: ExpansionResult) -> XPoly:
    """Sum coeffs[m] * P_m; should reproduce the product of the factors."""
    total = XPoly.zero()
    for m, coeff in enumerate(expansion.coeffs):
        if coeff.is_zero:
            continue
        total = total + polynomial(f, m).scale(coeff)
    return total


# -- structural product expansions (pre-expectation) ---------------------------


def product_expansion_statistic(f: FamilySpec, c: Composition, *, cap: int | None = None) -> XPoly:
    """The product P_{n_1} ... P_{n_k} rebuilt purely from partition
    statistics, no recurrence multiplication involved.

    Each supported family has its own combinatorial expansion over a filtered
    inhomogeneous stream; the q-Hermite case uses the weight
    q^(rc + sd) * t^(s2), where the t-exponent must be the pair-block count, since
    the singleton-depth variant already fails x*x = P_2 + t.
    """
    name = f.name
    if name not in STRUCTURAL_FAMILIES:
        raise ValueError(
            f"no structural expansion for family {name!r}; supported: {', '.join(STRUCTURAL_FAMILIES)}"
        )
    by_degree: dict[int, ExactPoly] = {}

    def add(degree: int, coeff: ExactPoly):
        if coeff.is_zero:
            return
        cur = by_degree.get(degree)
        by_degree[degree] = coeff if cur is None else cur + coeff

    if name == "hermite":
        for p in enumerate_inhomogeneous(c, "matchings", cap=cap):
            st = compute_stats(p)
            add(st.singletons, ExactPoly.monomial(1, t=st.pair_blocks))
    elif name == "q_hermite":
        for p in enumerate_inhomogeneous(c, "matchings", cap=cap):
            st = compute_stats(p)
            add(
                st.singletons,
                ExactPoly.monomial(
                    1, t=st.pair_blocks, q=st.restricted_crossings + st.singleton_depth
                ),
            )
    elif name == "chebyshev2":
        for p in enumerate_inhomogeneous(c, "noncrossing-matchings", cap=cap):
            st = compute_stats(p)
            if st.inner_singletons:
                continue
            add(st.singletons, ExactPoly.monomial(1, t=st.pair_blocks))
    elif name == "charlier":
        for p in enumerate_inhomogeneous(c, "all", cap=cap):
            st = compute_stats(p)
            free = st.block_count - st.singletons
            for l in range(free + 1):
                add(st.block_count - l, ExactPoly.monomial(math.comb(free, l), t=l))
    else:  # free_charlier
        for p in enumerate_inhomogeneous(c, "noncrossing", cap=cap):
            st = compute_stats(p)
            if st.inner_singletons:
                continue
            free = st.outer - st.singletons
            for l in range(free + 1):
                add(st.outer - l, ExactPoly.monomial(math.comb(free, l), t=st.inner + l))
    total = XPoly.zero()
    for degree, coeff in sorted(by_degree.items()):
        total = total + polynomial(f, degree).scale(coeff)
    return total


# -- verification suites --------------------------------------------------------


def verify_suite(suite: str, max_n: int, *, cap: int | None = None) -> VerificationReport:
    """Run one named identity suite up to max_n and report each check."""
    if suite not in VERIFY_SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(VERIFY_SUITES)}")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    report = VerificationReport(suite, max_n)
    runner = {
        "oracle-cross": _suite_oracle_cross,
        "norms": _suite_norms,
        "qfactorial": _suite_qfactorial,
        "specializations": _suite_specializations,
        "structural": _suite_structural,
        "noncrossing-rc": _suite_noncrossing_rc,
    }[suite]
    runner(report, max_n, cap)
    return report


def _check(report: VerificationReport, label: str, lhs, rhs):
    def to_text(v):
        return v.to_text() if hasattr(v, "to_text") else str(v)

    report.checks.append(CheckResult(label, lhs == rhs, to_text(lhs), to_text(rhs)))


def _noncrossing_restricted_sum(f: FamilySpec, c: Composition, cap) -> ExactPoly:
    """Third opinion for the q := 0 families: restrict the stream to
    noncrossing partitions outright instead of relying on the crossing weight
    to vanish."""
    if c.n == 0:
        return ONE
    return ExactPoly.sum(
        weighted_cumulant_product(f, p)
        for p in enumerate_inhomogeneous(c, "noncrossing", cap=cap)
    )


def _suite_oracle_cross(report: VerificationReport, max_n: int, cap):
    for name in (
        "hermite",
        "charlier",
        "chebyshev2",
        "free_charlier",
        "q_hermite",
        "big_q_hermite",
        "interp",
    ):
        f = family_spec(name)
        for total in range(1, max_n + 1):
            bad = 0
            count = 0
            first_failure = None
            for parts in compositions(total):
                c = Composition(parts)
                lhs = linearize_partition_sum(f, c, cap=cap)
                rhs = linearize_oracle(f, c, cap=cap)
                count += 1
                if lhs != rhs:
                    bad += 1
                    if first_failure is None:
                        first_failure = (c, lhs, rhs)
                elif f.q_mode == "fixed_zero":
                    third = _noncrossing_restricted_sum(f, c, cap)
                    if third != lhs:
                        bad += 1
                        if first_failure is None:
                            first_failure = (c, lhs, third)
            label = f"{name}: partition sum = oracle for all {count} compositions of {total}"
            if bad:
                c, lhs, rhs = first_failure
                _check(report, label + f" (first failure at {c})", lhs, rhs)
            else:
                _check(report, label, True, True)


_NORM_CLOSED_FORMS = {
    "hermite": lambda m: ExactPoly.monomial(math.factorial(m), t=m),
    "charlier": lambda m: ExactPoly.monomial(math.factorial(m), t=m),
    "chebyshev2": lambda m: ExactPoly.monomial(1, t=m),
    "free_charlier": lambda m: ExactPoly.monomial(1, t=m),
    "q_hermite": lambda m: q_factorial(m) * ExactPoly.monomial(1, t=m),
    "big_q_hermite": lambda m: q_factorial(m) * ExactPoly.monomial(1, t=m),
    "interp": lambda m: q_factorial(m) * ExactPoly.monomial(1, t=m),
}


def _suite_norms(report: VerificationReport, max_n: int, cap):
    for name, closed in _NORM_CLOSED_FORMS.items():
        f = family_spec(name)
        for m in range(1, max_n + 1):
            pm = polynomial(f, m)
            by_integration = integrate(f, pm * pm)
            _check(report, f"{name}: <P_{m}^2> integrates to the recurrence norm", by_integration, norm_squared(f, m))
            _check(report, f"{name}: norm of P_{m} matches its closed form", norm_squared(f, m), closed(m))


def _suite_qfactorial(report: VerificationReport, max_n: int, cap):
    for n in range(1, max_n + 1):
        c = Composition((n, n))
        total = ExactPoly.sum(
            ExactPoly.monomial(1, q=restricted_crossings(p))
            for p in enumerate_inhomogeneous(c, "pair-partitions", cap=cap)
        )
        _check(report, f"sum of q^rc over crossing pairings of ({n},{n}) = [{n}]_q!", total, q_factorial(n))


_SPECIALIZATION_CHAIN = (
    ("q_hermite", {"q": 1}, "hermite"),
    ("q_hermite", {"q": 0}, "chebyshev2"),
    ("big_q_hermite", {"q": 1}, "charlier"),
    ("big_q_hermite", {"q": 0}, "free_charlier"),
    ("interp", {"alpha": 1}, "big_q_hermite"),
    ("interp", {"alpha": 0}, "q_hermite"),
)


def _suite_specializations(report: VerificationReport, max_n: int, cap):
    for source, binding, target in _SPECIALIZATION_CHAIN:
        fs, ft = family_spec(source), family_spec(target)
        desc = ", ".join(f"{k}={v}" for k, v in binding.items())
        for total in range(1, max_n + 1):
            ok = True
            first = None
            for parts in compositions(total):
                c = Composition(parts)
                lhs = linearize_partition_sum(fs, c, cap=cap).substitute(binding)
                rhs = linearize_partition_sum(ft, c, cap=cap)
                if lhs != rhs:
                    ok = False
                    if first is None:
                        first = (c, lhs, rhs)
                    break
            label = f"{source} at {desc} = {target} on all compositions of {total}"
            if ok:
                _check(report, label, True, True)
            else:
                c, lhs, rhs = first
                _check(report, label + f" (first failure at {c})", lhs, rhs)


def _suite_structural(report: VerificationReport, max_n: int, cap):
    report.notes.append(
        "q_hermite structural weight is q^(rc+sd) * t^(s2): the variant with "
        "t-exponent sd fails the base identity x*x = P_2 + t and is rejected "
        "by this suite's product cross-check."
    )
    for name in STRUCTURAL_FAMILIES:
        f = family_spec(name)
        for total in range(1, max_n + 1):
            ok = True
            first = None
            for parts in compositions(total):
                c = Composition(parts)
                lhs = product_expansion_statistic(f, c, cap=cap)
                rhs = XPoly.one()
                for part in parts:
                    rhs = rhs * polynomial(f, part)
                if lhs != rhs:
                    ok = False
                    if first is None:
                        first = (c, lhs, rhs)
                    break
            label = f"{name}: statistic expansion rebuilds the product on compositions of {total}"
            if ok:
                _check(report, label, True, True)
            else:
                c, lhs, rhs = first
                _check(report, label + f" (first failure at {c})", lhs, rhs)


def _suite_noncrossing_rc(report: VerificationReport, max_n: int, cap):
    for n in range(1, max_n + 1):
        mismatches = 0
        count = 0
        for p in enumerate_partitions(n, cap=cap):
            count += 1
            if is_noncrossing(p) != (restricted_crossings(p) == 0):
                mismatches += 1
        _check(
            report,
            f"noncrossing <=> zero crossings on all {count} partitions of {n}",
            mismatches,
            0,
        )
