"""Partition statistics up close.

Lists the inhomogeneous partitions of a small composition with their order
statistics, then demonstrates the crossing-count identity: summing q to the
power of the restricted crossing number over the pair partitions of two
n-element groups gives the q-factorial [n]_q!.
"""

from linco import Composition, compute_stats, enumerate_inhomogeneous
from linco.algebra import ExactPoly, q_factorial
from linco.partitions import restricted_crossings


def main():
    c = Composition((2, 2))
    print(f"inhomogeneous partitions of groups {c}")
    print("-" * 64)
    header = f"{'partition':<18} blocks  singles  pairs  rc  sd  noncrossing"
    print(header)
    for p in enumerate_inhomogeneous(c):
        st = compute_stats(p)
        print(
            f"{str(p):<18} {st.block_count:^6}  {st.singletons:^7}  "
            f"{st.pair_blocks:^5}  {st.restricted_crossings:^2}  "
            f"{st.singleton_depth:^2}  {'yes' if st.noncrossing else 'no'}"
        )

    print()
    print("sum of q^rc over pair partitions of (n, n) vs [n]_q!")
    print("-" * 64)
    for n in range(1, 6):
        total = ExactPoly.sum(
            ExactPoly.monomial(1, q=restricted_crossings(p))
            for p in enumerate_inhomogeneous(Composition((n, n)), "pair-partitions")
        )
        match = "ok" if total == q_factorial(n) else "MISMATCH"
        print(f"  n={n}:  {total.to_text()}   [{match}]")


if __name__ == "__main__":
    main()
