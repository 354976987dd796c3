"""Acceptance gate: one test per shipped guarantee, exact equality throughout
(zero tolerance), each with its stated wall-clock budget.

Run with `pytest -v tests/test_acceptance.py` to get one pass/fail line per
criterion.
"""

import math
import subprocess
import sys
import time

from linco.algebra import ExactPoly, Q, T, ZERO, q_factorial
from linco.cumulants import moment_from_cumulants
from linco.families import family_spec, integrate, polynomial
from linco.linearize import (
    compositions,
    linearize_oracle,
    linearize_partition_sum,
    product_expansion_statistic,
)
from linco.partitions import (
    Composition,
    enumerate_inhomogeneous,
    enumerate_partitions,
    is_noncrossing,
    restricted_crossings,
)

ALL_FAMILIES = (
    "hermite",
    "charlier",
    "chebyshev2",
    "free_charlier",
    "q_hermite",
    "big_q_hermite",
    "interp",
)


def xproduct(f, parts):
    from linco.algebra import XPoly

    out = XPoly.one()
    for part in parts:
        out = out * polynomial(f, part)
    return out


def test_criterion_1_golden_partition_listing():
    """partitions --composition 2,2 emits exactly the seven canonical
    partitions, in under a second."""
    started = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "linco", "partitions", "--composition", "2,2"],
        capture_output=True,
        text=True,
        timeout=10,
    )
    elapsed = time.perf_counter() - started
    assert proc.returncode == 0
    assert proc.stdout == (
        "(1,3)(2,4)\n"
        "(1,3)(2)(4)\n"
        "(1,4)(2,3)\n"
        "(1)(2,3)(4)\n"
        "(1,4)(2)(3)\n"
        "(1)(2,4)(3)\n"
        "(1)(2)(3)(4)\n"
    )
    assert elapsed < 1.0, f"took {elapsed:.2f}s, budget 1s"


def test_criterion_2_crossing_sum_is_q_factorial():
    """Sum of q^rc over the pair partitions of two n-groups equals [n]_q!
    exactly, for n = 1..6, in under ten seconds."""
    started = time.perf_counter()
    for n in range(1, 7):
        total = ExactPoly.sum(
            ExactPoly.monomial(1, q=restricted_crossings(p))
            for p in enumerate_inhomogeneous(Composition((n, n)), "pair-partitions")
        )
        assert total == q_factorial(n), f"n={n}"
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"took {elapsed:.2f}s, budget 10s"


def test_criterion_3_norm_formulas():
    """<P_m^2> by integration equals m! t^m, t^m, or [m]_q! t^m per family,
    for m <= 7, in under thirty seconds."""
    started = time.perf_counter()
    closed = {
        "hermite": lambda m: math.factorial(m) * T ** m,
        "charlier": lambda m: math.factorial(m) * T ** m,
        "chebyshev2": lambda m: T ** m,
        "free_charlier": lambda m: T ** m,
        "q_hermite": lambda m: q_factorial(m) * T ** m,
        "big_q_hermite": lambda m: q_factorial(m) * T ** m,
    }
    for name, formula in closed.items():
        f = family_spec(name)
        for m in range(8):
            pm = polynomial(f, m)
            assert integrate(f, pm * pm) == formula(m), f"{name} m={m}"
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"took {elapsed:.2f}s, budget 30s"


def test_criterion_4_partition_sum_equals_oracle():
    """The partition sum and the recurrence-integration oracle agree for all
    seven families on every composition of total degree <= 10, symbolically,
    in under ten minutes."""
    started = time.perf_counter()
    checked = 0
    for name in ALL_FAMILIES:
        f = family_spec(name)
        for total in range(1, 11):
            for parts in compositions(total):
                c = Composition(parts)
                assert linearize_partition_sum(f, c) == linearize_oracle(f, c), (
                    f"{name} {parts}"
                )
                checked += 1
    assert checked == 7 * (2 ** 10 - 1)
    elapsed = time.perf_counter() - started
    assert elapsed < 600.0, f"took {elapsed:.2f}s, budget 600s"


def test_criterion_5_spot_values():
    """Five pinned linearization values, each confirmed by both methods."""
    cases = [
        ("hermite", (2, 2), 2 * T ** 2),
        ("hermite", (2, 2, 2), 8 * T ** 3),
        ("chebyshev2", (2, 2), T ** 2),
        ("q_hermite", (2, 2), (1 + Q) * T ** 2),
        ("big_q_hermite", (1, 1, 1), T),
    ]
    for name, parts, expected in cases:
        f = family_spec(name)
        c = Composition(parts)
        assert linearize_oracle(f, c) == expected, f"oracle {name} {parts}"
        assert linearize_partition_sum(f, c) == expected, f"partition {name} {parts}"


def test_criterion_6_structural_expansions():
    """The statistic-driven product expansion reproduces the recurrence
    product exactly for the five supported families on every composition with
    total <= 8, in under five minutes."""
    started = time.perf_counter()
    for name in ("hermite", "charlier", "chebyshev2", "free_charlier", "q_hermite"):
        f = family_spec(name)
        for total in range(1, 9):
            for parts in compositions(total):
                c = Composition(parts)
                assert product_expansion_statistic(f, c) == xproduct(f, parts), (
                    f"{name} {parts}"
                )
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0, f"took {elapsed:.2f}s, budget 300s"


def test_criterion_7_specialization_chain():
    """q = 1 and q = 0 turn the q-families into the classical and free
    families; alpha = 1 and alpha = 0 turn interp into big_q_hermite and
    q_hermite; exact on every composition with total <= 8."""
    chain = (
        ("q_hermite", {"q": 1}, "hermite"),
        ("q_hermite", {"q": 0}, "chebyshev2"),
        ("big_q_hermite", {"q": 1}, "charlier"),
        ("big_q_hermite", {"q": 0}, "free_charlier"),
        ("interp", {"alpha": 1}, "big_q_hermite"),
        ("interp", {"alpha": 0}, "q_hermite"),
    )
    for source, binding, target in chain:
        fs, ft = family_spec(source), family_spec(target)
        for total in range(1, 9):
            for parts in compositions(total):
                c = Composition(parts)
                assert linearize_partition_sum(fs, c).substitute(
                    binding
                ) == linearize_partition_sum(ft, c), f"{source}->{target} {parts}"


def test_criterion_8_combinatorial_closed_forms():
    """Hermite moments are (2k-1)!! t^k and Chebyshev moments are
    Catalan(k) t^k for k <= 5; zero restricted crossings coincides with
    noncrossing on every partition of every n <= 8."""
    h = family_spec("hermite")
    u = family_spec("chebyshev2")
    for k in range(1, 6):
        double_fact = math.prod(range(1, 2 * k, 2))
        catalan = math.comb(2 * k, k) // (k + 1)
        assert moment_from_cumulants(h, 2 * k) == double_fact * T ** k, f"k={k}"
        assert moment_from_cumulants(u, 2 * k) == catalan * T ** k, f"k={k}"
        assert moment_from_cumulants(h, 2 * k - 1) == ZERO
        assert moment_from_cumulants(u, 2 * k - 1) == ZERO
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            assert is_noncrossing(p) == (restricted_crossings(p) == 0), str(p)
