"""A short tour: linearization coefficients by two independent routes.

The partition route sums crossing-weighted cumulant products over the
inhomogeneous set partitions of the composition.  The oracle route expands
each factor through its three-term recurrence and integrates against the
moment sequence.  They agree, symbolically, term for term.
"""

from linco import Composition, expansion_coefficients, family_spec
from linco.linearize import linearize_oracle, linearize_partition_sum


def main():
    cases = [
        ("hermite", (2, 2)),
        ("hermite", (2, 2, 2)),
        ("charlier", (2, 1, 1)),
        ("chebyshev2", (2, 2)),
        ("q_hermite", (2, 2)),
        ("big_q_hermite", (3, 2, 1)),
        ("interp", (2, 2)),
    ]
    print("composition sums vs recurrence integration")
    print("-" * 60)
    for name, parts in cases:
        f = family_spec(name)
        c = Composition(parts)
        by_partitions = linearize_partition_sum(f, c)
        by_oracle = linearize_oracle(f, c)
        flag = "ok" if by_partitions == by_oracle else "MISMATCH"
        print(f"{name:>14} {str(c):>7}:  {by_partitions.to_text()}   [{flag}]")

    print()
    print("expanding a product over its own basis")
    print("-" * 60)
    f = family_spec("charlier")
    c = Composition((2, 2))
    exp = expansion_coefficients(f, c)
    for m, coeff in enumerate(exp.coeffs):
        print(f"  coefficient of P_{m}: {coeff.to_text()}")
    print("index 0 is the linearization coefficient itself:")
    print(f"  {linearize_partition_sum(f, c).to_text()}")


if __name__ == "__main__":
    main()
