"""Set partitions of {1..n}: canonical form, filtered streaming enumeration,
and order statistics (crossings, singleton depth, inner/outer blocks).

Partitions are kept in canonical form: blocks sorted by minimum element,
elements ascending inside each block.  Enumeration walks restricted-growth
strings in lexicographic order and prunes filters inside the walk; a
post-filter reference path exists for testing (`matches_filter`).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_CAP = 12
ENUMERATION_CAP_ENV = "LINCO_ENUMERATION_CAP"


class MalformedPartitionError(ValueError):
    """Raw blocks do not form a partition of {1..n}."""


class SizeLimitError(ValueError):
    """A requested enumeration or degree exceeds the configured cap."""


class DimensionMismatchError(ValueError):
    """Operands disagree on the ground-set size."""


def resolve_cap(cap: int | None) -> int:
    """Explicit cap, else the environment override, else the default."""
    if cap is not None:
        if cap < 1:
            raise ValueError("cap must be positive")
        return cap
    env = os.environ.get(ENUMERATION_CAP_ENV)
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError(f"{ENUMERATION_CAP_ENV} must be an integer, got {env!r}") from exc
        if value < 1:
            raise ValueError(f"{ENUMERATION_CAP_ENV} must be positive")
        return value
    return DEFAULT_ENUMERATION_CAP


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n} in canonical form.

    Constructors do not validate; build untrusted input via `canonicalize`.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, blk)) + ")" for blk in self.blocks)

    __repr__ = __str__


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive part sizes; groups elements 1..n into
    consecutive intervals."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {self.parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def element_groups(self) -> tuple[int, ...]:
        """Group index of each element 1..n, in order."""
        out = []
        for g, size in enumerate(self.parts):
            out.extend([g] * size)
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class PartitionStats:
    """The nine order statistics of one partition."""

    block_count: int
    singletons: int
    pair_blocks: int
    restricted_crossings: int
    singleton_depth: int
    outer: int
    inner: int
    inner_singletons: int
    noncrossing: bool


def canonicalize(raw_blocks: Sequence[Sequence[int]], n: int) -> SetPartition:
    """Validate raw blocks as a partition of {1..n} and sort canonically."""
    if n < 0:
        raise MalformedPartitionError("ground-set size must be nonnegative")
    seen: set[int] = set()
    cleaned = []
    for blk in raw_blocks:
        if not blk:
            raise MalformedPartitionError("empty block")
        elems = sorted(blk)
        for e in elems:
            if not isinstance(e, int) or e < 1 or e > n:
                raise MalformedPartitionError(f"element {e!r} outside 1..{n}")
            if e in seen:
                raise MalformedPartitionError(f"element {e} appears twice")
            seen.add(e)
        cleaned.append(tuple(elems))
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise MalformedPartitionError(f"elements missing from partition: {missing}")
    cleaned.sort(key=lambda blk: blk[0])
    return SetPartition(n, tuple(cleaned))


# -- filters ------------------------------------------------------------------


@dataclass(frozen=True)
class _Filter:
    max_block: int = 0          # 0 = unbounded
    no_singletons: bool = False
    noncrossing: bool = False
    no_inner_singletons: bool = False


_FILTERS: dict[str, _Filter] = {
    "all": _Filter(),
    "no-singletons": _Filter(no_singletons=True),
    "pair-partitions": _Filter(max_block=2, no_singletons=True),
    "matchings": _Filter(max_block=2),
    "noncrossing": _Filter(noncrossing=True),
    "noncrossing-no-inner-singletons": _Filter(noncrossing=True, no_inner_singletons=True),
    "noncrossing-matchings": _Filter(max_block=2, noncrossing=True),
    "noncrossing-pair": _Filter(max_block=2, no_singletons=True, noncrossing=True),
}
_FILTER_ALIASES = {"pair": "pair-partitions"}

FILTER_NAMES = tuple(_FILTERS)


def _lookup_filter(name: str) -> _Filter:
    key = _FILTER_ALIASES.get(name, name)
    try:
        return _FILTERS[key]
    except KeyError:
        raise ValueError(f"unknown partition filter {name!r}; known: {', '.join(FILTER_NAMES)}") from None


# -- enumeration core ----------------------------------------------------------


def _iter_assignments(
    n: int,
    groups: tuple[int, ...] | None,
    flt: _Filter,
    prefix: tuple[int, ...] = (),
) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
    """Yield (blocks, restricted_crossings) for every partition passing `flt`.

    Walks restricted-growth strings in lexicographic order.  Group clashes,
    block-size bounds, singleton feasibility and crossing creation are pruned
    mid-walk; crossing counts accumulate incrementally as successor arcs are
    created (an arc (p, i) crosses exactly the earlier arcs (a, b) with
    a < p < b).
    """
    if len(prefix) > n:
        raise ValueError("prefix longer than the ground set")
    if n == 0:
        yield (), 0
        return

    max_block = flt.max_block
    no_singletons = flt.no_singletons
    noncrossing = flt.noncrossing
    no_inner_singletons = flt.no_inner_singletons
    pair_mode = no_singletons and max_block == 2

    blocks: list[list[int]] = []
    last_group: list[int] = []
    arcs: list[tuple[int, int]] = []
    nprefix = len(prefix)

    def rec(i: int, singles: int, rc: int):
        if i > n:
            if no_inner_singletons:
                for blk in blocks:
                    if len(blk) == 1:
                        s = blk[0]
                        for a, b in arcs:
                            if a < s < b:
                                return
            yield tuple(tuple(blk) for blk in blocks), rc
            return
        remaining = n - i
        g = groups[i - 1] if groups is not None else 0
        forced = prefix[i - 1] if i <= nprefix else -1

        for j in range(len(blocks)):
            if forced >= 0 and j != forced:
                continue
            blk = blocks[j]
            if groups is not None and last_group[j] == g:
                continue
            if max_block and len(blk) == max_block:
                continue
            p = blk[-1]
            cross = 0
            for a, b in arcs:
                if a < p < b:
                    cross += 1
            if noncrossing and cross:
                continue
            new_singles = singles - 1 if len(blk) == 1 else singles
            if no_singletons:
                if new_singles > remaining:
                    continue
                if pair_mode and (remaining - new_singles) % 2:
                    continue
            blk.append(i)
            arcs.append((p, i))
            old_g = last_group[j]
            last_group[j] = g
            yield from rec(i + 1, new_singles, rc + cross)
            last_group[j] = old_g
            arcs.pop()
            blk.pop()

        if forced < 0 or forced == len(blocks):
            new_singles = singles + 1
            if no_singletons and new_singles > remaining:
                return
            if pair_mode and (remaining - new_singles) % 2:
                return
            blocks.append([i])
            last_group.append(g)
            yield from rec(i + 1, new_singles, rc)
            last_group.pop()
            blocks.pop()

    yield from rec(1, 0, 0)


def _groups_or_none(c: Composition) -> tuple[int, ...] | None:
    # all-ones compositions impose no constraint; skip the group checks
    if all(p == 1 for p in c.parts):
        return None
    return c.element_groups()


def enumerate_partitions(n: int, *, cap: int | None = None) -> Iterator[SetPartition]:
    """Stream every partition of {1..n} in restricted-growth lexicographic order."""
    limit = resolve_cap(cap)
    if n < 1:
        raise ValueError("enumerate_partitions needs n >= 1")
    if n > limit:
        raise SizeLimitError(f"n = {n} exceeds the enumeration cap {limit}")
    for blocks, _rc in _iter_assignments(n, None, _FILTERS["all"]):
        yield SetPartition(n, blocks)


def enumerate_inhomogeneous(
    c: Composition,
    filter_name: str = "all",
    *,
    cap: int | None = None,
    prefix: tuple[int, ...] = (),
) -> Iterator[SetPartition]:
    """Stream the partitions of {1..c.n} with no block meeting any group twice,
    restricted by the named filter."""
    limit = resolve_cap(cap)
    flt = _lookup_filter(filter_name)
    n = c.n
    if n > limit:
        raise SizeLimitError(f"composition total {n} exceeds the enumeration cap {limit}")
    for blocks, _rc in _iter_assignments(n, _groups_or_none(c), flt, prefix):
        yield SetPartition(n, blocks)


def rgs_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All restricted-growth prefixes of the given depth, for stream splitting."""
    depth = min(depth, n)
    if depth <= 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(pre: tuple[int, ...], top: int):
        if len(pre) == depth:
            out.append(pre)
            return
        for d in range(top + 2):
            rec(pre + (d,), max(top, d))

    rec((0,), 0)
    return out


def is_inhomogeneous(p: SetPartition, c: Composition) -> bool:
    """True iff no block contains two elements from the same group of c."""
    if p.n != c.n:
        raise DimensionMismatchError(f"partition of {p.n} vs composition of {c.n}")
    groups = c.element_groups()
    for blk in p.blocks:
        prev = -1
        for e in blk:
            g = groups[e - 1]
            if g == prev:
                return False
            prev = g
    return True


def matches_filter(p: SetPartition, filter_name: str) -> bool:
    """Post-filter reference predicate for the named enumeration filter."""
    flt = _lookup_filter(filter_name)
    sizes = [len(blk) for blk in p.blocks]
    if flt.max_block and any(s > flt.max_block for s in sizes):
        return False
    if flt.no_singletons and any(s == 1 for s in sizes):
        return False
    if flt.noncrossing and not is_noncrossing(p):
        return False
    if flt.no_inner_singletons and _inner_singleton_count(p) > 0:
        return False
    return True


# -- statistics ----------------------------------------------------------------


def _successor_arcs(p: SetPartition) -> list[tuple[int, int]]:
    arcs = []
    for blk in p.blocks:
        for k in range(len(blk) - 1):
            arcs.append((blk[k], blk[k + 1]))
    return arcs


def restricted_crossings(p: SetPartition) -> int:
    """Number of crossing pairs among successor arcs: quadruples a < c < b < d
    with (a, b) and (c, d) both arcs."""
    arcs = _successor_arcs(p)
    count = 0
    for i, (a1, b1) in enumerate(arcs):
        for a2, b2 in arcs[i + 1 :]:
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                count += 1
    return count


def singleton_depth(p: SetPartition) -> int:
    """Total number of blocks straddling each singleton."""
    arcs = _successor_arcs(p)
    depth = 0
    for blk in p.blocks:
        if len(blk) == 1:
            s = blk[0]
            for a, b in arcs:
                if a < s < b:
                    depth += 1
    return depth


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no indices i < j < k < l have i, k in one block and j, l in
    another.  Implemented by pairwise block interleaving, independently of the
    successor-arc crossing count."""
    blocks = p.blocks
    for x in range(len(blocks)):
        bx = blocks[x]
        for y in range(x + 1, len(blocks)):
            if _blocks_interleave(bx, blocks[y]):
                return False
    return True


def _blocks_interleave(bx: tuple[int, ...], by: tuple[int, ...]) -> bool:
    # crossing <=> labels alternate X..Y..X..Y along the merged order
    i = j = 0
    switches = 0
    cur = ""
    while i < len(bx) or j < len(by):
        if j >= len(by) or (i < len(bx) and bx[i] < by[j]):
            label = "x"
            i += 1
        else:
            label = "y"
            j += 1
        if label != cur:
            switches += 1
            cur = label
            if switches >= 4:
                return True
    return False


def _inner_flags(p: SetPartition) -> list[bool]:
    mins = [blk[0] for blk in p.blocks]
    maxs = [blk[-1] for blk in p.blocks]
    flags = []
    for i in range(len(p.blocks)):
        inner = any(
            j != i and mins[j] < mins[i] and maxs[j] > maxs[i] for j in range(len(p.blocks))
        )
        flags.append(inner)
    return flags


def _inner_singleton_count(p: SetPartition) -> int:
    flags = _inner_flags(p)
    return sum(1 for blk, inner in zip(p.blocks, flags) if inner and len(blk) == 1)


def compute_stats(p: SetPartition) -> PartitionStats:
    """All nine statistics of one partition."""
    sizes = [len(blk) for blk in p.blocks]
    flags = _inner_flags(p)
    inner = sum(flags)
    return PartitionStats(
        block_count=len(sizes),
        singletons=sum(1 for s in sizes if s == 1),
        pair_blocks=sum(1 for s in sizes if s == 2),
        restricted_crossings=restricted_crossings(p),
        singleton_depth=singleton_depth(p),
        outer=len(sizes) - inner,
        inner=inner,
        inner_singletons=sum(
            1 for blk, f in zip(p.blocks, flags) if f and len(blk) == 1
        ),
        noncrossing=is_noncrossing(p),
    )
