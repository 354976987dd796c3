"""Cumulant sequences and the crossing-weighted partition functionals built
from them: per-partition weights and whole-moment sums.

A family contributes through two switches carried on its spec: the cumulant
pattern (`gaussian`, `poisson`, `interp`) fixing the block weights, and the
`q_mode` (`fixed_one`, `fixed_zero`, `symbolic`) fixing how the crossing
weight q^rc is evaluated.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import ExactPoly, ONE, T, ZERO
from .partitions import SetPartition, SizeLimitError, restricted_crossings

DEFAULT_MOMENT_CAP = 16

_CUMULANT_KINDS = ("gaussian", "poisson", "interp")
_Q_MODES = ("fixed_one", "fixed_zero", "symbolic")


def cumulant(f, m: int) -> ExactPoly:
    """Order-m cumulant of the family's underlying law.

    Order 1 vanishes for every family (all laws are centered).  Gaussian-kind
    families keep only order 2 (= t); poisson-kind families give t at every
    order >= 2; the interpolating kind gives alpha^(m-2) * t.
    """
    if m < 1:
        raise ValueError("cumulant order must be >= 1")
    kind = f.cumulant_kind
    if kind not in _CUMULANT_KINDS:
        raise ValueError(f"unknown cumulant kind {kind!r}")
    if m == 1:
        return ZERO
    if kind == "gaussian":
        return T if m == 2 else ZERO
    if kind == "poisson":
        return T
    return ExactPoly.monomial(1, t=1, alpha=m - 2)


def _q_weight(f, rc: int) -> ExactPoly:
    mode = f.q_mode
    if mode == "fixed_one":
        return ONE
    if mode == "fixed_zero":
        return ONE if rc == 0 else ZERO
    if mode == "symbolic":
        return ExactPoly.monomial(1, q=rc)
    raise ValueError(f"unknown q_mode {mode!r}")


def weighted_cumulant_product(f, p: SetPartition) -> ExactPoly:
    """q^rc(p) times the product of block cumulants, with q_mode applied.

    Zero whenever p has a singleton block (order-1 cumulants vanish), and for
    gaussian-kind families whenever any block exceeds size 2.
    """
    product = ONE
    for blk in p.blocks:
        factor = cumulant(f, len(blk))
        if factor.is_zero:
            return ZERO
        product = product * factor
    return product * _q_weight(f, restricted_crossings(p))


@lru_cache(maxsize=None)
def _signature_counts(n: int) -> dict[tuple[int, int], int]:
    """Joint integer counts of (restricted crossings, block count) over the
    singleton-free partitions of {1..n}.

    Exact prefix-grouped summation: scan positions left to right, keeping only
    the number of open blocks.  Position i either opens a block, or attaches to
    one of the o open blocks (closing it or continuing it).  Attaching to the
    open block ranked j-th from the top by last element adds exactly j - 1
    crossings: the arc it creates is crossed once by each open block whose
    last element lies between the arc ends, so attachments contribute weights
    q^0 .. q^(o-1).  Singletons never arise because an opened block must be
    attached to again before the scan ends.
    """
    if n == 0:
        return {(0, 0): 1}
    states: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}  # (open, rc, blocks) -> count
    for i in range(1, n + 1):
        remaining = n - i
        nxt: dict[tuple[int, int, int], int] = {}
        for (o, rc, k), cnt in states.items():
            if o + 1 <= remaining:  # open a block; needs one later attachment
                key = (o + 1, rc, k + 1)
                nxt[key] = nxt.get(key, 0) + cnt
            for w in range(o):
                if o - 1 <= remaining:  # close one open block
                    key = (o - 1, rc + w, k)
                    nxt[key] = nxt.get(key, 0) + cnt
                if o <= remaining:  # continue it instead
                    key = (o, rc + w, k)
                    nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return {(rc, k): cnt for (o, rc, k), cnt in states.items() if o == 0}


def moment_from_cumulants(f, n: int, *, cap: int | None = None) -> ExactPoly:
    """The order-n moment: the sum of weighted_cumulant_product over every
    partition of {1..n} (grouped exactly by crossing count and block count;
    singleton-bearing partitions contribute zero)."""
    limit = DEFAULT_MOMENT_CAP if cap is None else cap
    if n < 0:
        raise ValueError("moment order must be >= 0")
    if n > limit:
        raise SizeLimitError(f"moment order {n} exceeds the moment cap {limit}")
    if n == 0:
        return ONE
    kind = f.cumulant_kind
    mode = f.q_mode
    terms: dict[tuple[int, int, int], int] = {}
    for (rc, k), cnt in _signature_counts(n).items():
        if kind == "gaussian":
            if 2 * k != n:
                continue
            key_t, key_a = k, 0
        elif kind == "poisson":
            key_t, key_a = k, 0
        elif kind == "interp":
            key_t, key_a = k, n - 2 * k
        else:
            raise ValueError(f"unknown cumulant kind {kind!r}")
        if mode == "fixed_zero":
            if rc:
                continue
            key_q = 0
        elif mode == "fixed_one":
            key_q = 0
        else:
            key_q = rc
        key = (key_t, key_q, key_a)
        terms[key] = terms.get(key, 0) + cnt
    return ExactPoly._from_raw(terms)
