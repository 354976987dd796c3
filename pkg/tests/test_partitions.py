"""Partition enumeration against independent counting oracles, filter
equivalence, statistics invariants, and stream splitting."""

import itertools

import pytest

from linco.partitions import (
    Composition,
    DimensionMismatchError,
    FILTER_NAMES,
    MalformedPartitionError,
    SetPartition,
    SizeLimitError,
    canonicalize,
    compute_stats,
    enumerate_inhomogeneous,
    enumerate_partitions,
    is_inhomogeneous,
    is_noncrossing,
    matches_filter,
    restricted_crossings,
    rgs_prefixes,
    singleton_depth,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


def bell_triangle(n):
    """Independent Bell numbers via Aitken's array."""
    row = [1]
    numbers = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        numbers.append(row[0])
    return numbers


def successor_map(p):
    succ = {}
    for blk in p.blocks:
        for a, b in zip(blk, blk[1:]):
            succ[a] = b
    return succ


def rc_by_definition(p):
    """Quadruple scan straight from the definition: i < j < k < l with
    k = succ(i), l = succ(j)."""
    succ = successor_map(p)
    count = 0
    for i, j in itertools.combinations(range(1, p.n + 1), 2):
        k = succ.get(i)
        l = succ.get(j)
        if k is None or l is None:
            continue
        if i < j < k < l:
            count += 1
    return count


class TestCanonicalize:
    def test_basic(self):
        p = canonicalize([[2, 4], [3, 1]], 4)
        assert p.blocks == ((1, 3), (2, 4))
        assert str(p) == "(1,3)(2,4)"

    def test_rejects_duplicates(self):
        with pytest.raises(MalformedPartitionError):
            canonicalize([[1, 2], [2, 3]], 3)

    def test_rejects_missing(self):
        with pytest.raises(MalformedPartitionError):
            canonicalize([[1, 2]], 3)

    def test_rejects_out_of_range(self):
        with pytest.raises(MalformedPartitionError):
            canonicalize([[0, 1]], 1)
        with pytest.raises(MalformedPartitionError):
            canonicalize([[1, 4]], 3)

    def test_rejects_empty_block(self):
        with pytest.raises(MalformedPartitionError):
            canonicalize([[1], []], 1)

    def test_empty_partition(self):
        assert canonicalize([], 0).blocks == ()


class TestEnumeration:
    def test_counts_match_bell_triangle(self):
        oracle = bell_triangle(9)
        assert oracle == BELL[:10]
        for n in range(1, 10):
            count = sum(1 for _ in enumerate_partitions(n, cap=12))
            assert count == oracle[n]

    def test_all_distinct_and_canonical(self):
        for n in range(1, 8):
            seen = set()
            for p in enumerate_partitions(n):
                assert p.blocks not in seen
                seen.add(p.blocks)
                mins = [blk[0] for blk in p.blocks]
                assert mins == sorted(mins)
                for blk in p.blocks:
                    assert list(blk) == sorted(blk)
                assert sorted(e for blk in p.blocks for e in blk) == list(range(1, n + 1))

    def test_rgs_lex_order(self):
        # the restricted-growth string of successive partitions must increase
        def rgs(p):
            label = {}
            for idx, blk in enumerate(p.blocks):
                for e in blk:
                    label[e] = idx
            return tuple(label[e] for e in range(1, p.n + 1))

        for n in range(1, 8):
            strings = [rgs(p) for p in enumerate_partitions(n)]
            assert strings == sorted(strings)

    def test_golden_p22(self):
        got = [str(p) for p in enumerate_inhomogeneous(Composition((2, 2)))]
        assert got == [
            "(1,3)(2,4)",
            "(1,3)(2)(4)",
            "(1,4)(2,3)",
            "(1)(2,3)(4)",
            "(1,4)(2)(3)",
            "(1)(2,4)(3)",
            "(1)(2)(3)(4)",
        ]

    def test_single_element(self):
        got = [str(p) for p in enumerate_inhomogeneous(Composition((1,)))]
        assert got == ["(1)"]

    def test_inhomogeneous_matches_post_filter(self):
        for parts in ((2, 2), (3, 2), (2, 2, 2), (4, 3), (1, 2, 1)):
            c = Composition(parts)
            streamed = list(enumerate_inhomogeneous(c))
            reference = [p for p in enumerate_partitions(c.n) if is_inhomogeneous(p, c)]
            assert [p.blocks for p in streamed] == [p.blocks for p in reference]

    def test_is_inhomogeneous_against_group_scan(self):
        for parts in ((2, 2), (3, 1, 2), (2, 2, 2)):
            c = Composition(parts)
            groups = c.element_groups()
            for p in enumerate_partitions(c.n):
                expected = all(
                    len({groups[e - 1] for e in blk}) == len(blk) for blk in p.blocks
                )
                assert is_inhomogeneous(p, c) == expected

    def test_dimension_mismatch(self):
        p = canonicalize([[1, 2]], 2)
        with pytest.raises(DimensionMismatchError):
            is_inhomogeneous(p, Composition((2, 2)))

    def test_cap_enforced(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_partitions(13))
        with pytest.raises(SizeLimitError):
            list(enumerate_inhomogeneous(Composition((7, 7))))
        # explicit cap loosens and tightens
        assert sum(1 for _ in enumerate_partitions(3, cap=3)) == 5
        with pytest.raises(SizeLimitError):
            list(enumerate_partitions(4, cap=3))

    def test_env_cap_override(self, monkeypatch):
        monkeypatch.setenv("LINCO_ENUMERATION_CAP", "3")
        with pytest.raises(SizeLimitError):
            list(enumerate_partitions(4))
        # explicit argument beats the environment
        assert sum(1 for _ in enumerate_partitions(4, cap=4)) == 15
        monkeypatch.setenv("LINCO_ENUMERATION_CAP", "not-a-number")
        with pytest.raises(ValueError):
            list(enumerate_partitions(4))


class TestFilters:
    @pytest.mark.parametrize("filter_name", FILTER_NAMES)
    def test_stream_equals_post_filter(self, filter_name):
        for parts in ((6,), (2, 2), (3, 3), (2, 2, 2), (1, 1, 1, 1, 1, 1)):
            c = Composition(parts)
            streamed = [
                p.blocks for p in enumerate_inhomogeneous(c, filter_name)
            ]
            reference = [
                p.blocks
                for p in enumerate_inhomogeneous(c, "all")
                if matches_filter(p, filter_name)
            ]
            assert streamed == reference

    def test_pair_alias(self):
        c = Composition((2, 2))
        assert [p.blocks for p in enumerate_inhomogeneous(c, "pair")] == [
            p.blocks for p in enumerate_inhomogeneous(c, "pair-partitions")
        ]

    def test_pair_filter_golden(self):
        got = [str(p) for p in enumerate_inhomogeneous(Composition((2, 2)), "pair")]
        assert got == ["(1,3)(2,4)", "(1,4)(2,3)"]

    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            list(enumerate_inhomogeneous(Composition((2, 2)), "nope"))
        with pytest.raises(ValueError):
            matches_filter(SetPartition(1, ((1,),)), "nope")

    def test_noncrossing_matches_catalan(self):
        catalan = [1, 1, 2, 5, 14, 42, 132, 429]
        for n in range(1, 8):
            count = sum(
                1 for _ in enumerate_inhomogeneous(Composition((1,) * n), "noncrossing")
            )
            # noncrossing partitions of [n] are counted by Catalan(n)
            assert count == catalan[n]

    def test_noncrossing_matchings_catalan(self):
        catalan = [1, 1, 2, 5, 14, 42]
        for k in range(1, 6):
            count = sum(
                1
                for _ in enumerate_inhomogeneous(
                    Composition((1,) * (2 * k)), "noncrossing-pair"
                )
            )
            assert count == catalan[k]


class TestStatistics:
    def test_rc_against_definition(self):
        for n in range(1, 8):
            for p in enumerate_partitions(n):
                assert restricted_crossings(p) == rc_by_definition(p)

    def test_rc_matches_streamed_count(self):
        # the enumerator's incremental crossing count must agree with the
        # standalone statistic
        from linco.partitions import _FILTERS, _iter_assignments

        for n in range(1, 8):
            for blocks, rc in _iter_assignments(n, None, _FILTERS["all"]):
                assert rc == restricted_crossings(SetPartition(n, blocks))

    def test_noncrossing_iff_zero_rc(self):
        for n in range(1, 9):
            for p in enumerate_partitions(n):
                assert is_noncrossing(p) == (restricted_crossings(p) == 0)

    def test_singleton_depth_examples(self):
        assert singleton_depth(canonicalize([[1, 3], [2]], 3)) == 1
        assert singleton_depth(canonicalize([[1, 4], [2, 5], [3]], 5)) == 2
        assert singleton_depth(canonicalize([[1], [2, 3]], 3)) == 0

    def test_stats_invariants(self):
        for n in range(1, 8):
            for p in enumerate_partitions(n):
                st = compute_stats(p)
                sizes = [len(blk) for blk in p.blocks]
                assert st.block_count == len(sizes)
                assert st.singletons == sum(1 for s in sizes if s == 1)
                assert st.pair_blocks == sum(1 for s in sizes if s == 2)
                assert st.singletons + 2 * st.pair_blocks <= n
                assert st.outer + st.inner == st.block_count
                assert st.inner_singletons <= min(st.singletons, st.inner)
                assert st.noncrossing == (st.restricted_crossings == 0)
                if st.singletons == 0:
                    assert st.singleton_depth == 0

    def test_golden_stats(self):
        st = compute_stats(canonicalize([[1, 3], [2, 4]], 4))
        assert (st.restricted_crossings, st.noncrossing) == (1, False)
        assert (st.outer, st.inner) == (2, 0)
        st = compute_stats(canonicalize([[1, 4], [2, 3]], 4))
        assert (st.restricted_crossings, st.noncrossing) == (0, True)
        assert (st.outer, st.inner) == (1, 1)
        st = compute_stats(canonicalize([[1, 5], [2, 4], [3]], 5))
        assert st.inner == 2
        assert st.inner_singletons == 1
        assert st.singleton_depth == 2


class TestPrefixSplitting:
    def test_prefixes_partition_the_stream(self):
        for parts, depth in (((2, 2, 2), 2), ((2, 2, 2), 3), ((1,) * 6, 2), ((3, 3), 1)):
            c = Composition(parts)
            full = [p.blocks for p in enumerate_inhomogeneous(c, "all")]
            pieces = []
            for pre in rgs_prefixes(c.n, depth):
                pieces.extend(
                    p.blocks for p in enumerate_inhomogeneous(c, "all", prefix=pre)
                )
            assert sorted(pieces) == sorted(full)
            assert len(pieces) == len(set(pieces))

    def test_prefix_shapes(self):
        assert rgs_prefixes(5, 0) == [()]
        assert rgs_prefixes(5, 1) == [(0,)]
        assert rgs_prefixes(5, 2) == [(0, 0), (0, 1)]
        assert len(rgs_prefixes(5, 3)) == 5  # Bell-triangle growth
        assert rgs_prefixes(1, 3) == [(0,)]  # depth clamps to n


class TestComposition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Composition((0, 2))
        with pytest.raises(ValueError):
            Composition((-1,))
        assert Composition(()).n == 0

    def test_groups(self):
        c = Composition((2, 3))
        assert c.n == 5
        assert c.element_groups() == (0, 0, 1, 1, 1)
        assert str(c) == "2,3"
