from __future__ import annotations

import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from largeness import sets
from largeness.errors import ConfigError, DepthCapError, PoolExhausted, TailExhausted, UniquenessViolation
from largeness.finite_sums import (
    ad_nat_family,
    check_ffs,
    default_branch_seeds,
    ffs_subsystem,
    first_repeated_sum,
    fs_set,
    ip_ad_family,
    ip_split,
    ip_witness_search,
    ufs_subsystem,
)
from largeness.semigroups import NAT, ExElement as E, MaxSemigroup, OrdinalLevels
from largeness.verify import check_ip_ad, ffs_violation, fs_oracle

add = NAT.add
POW2 = [2 ** i for i in range(1, 11)]


def test_fs_set_examples():
    assert fs_set(NAT, [1, 2]).values == {1, 2, 3}
    assert fs_set(NAT, [2, 4, 8]).values == {2, 4, 6, 8, 10, 12, 14}
    fs = fs_set(NAT, [1, 1])
    assert fs.sums == {(1,): 1, (2,): 1, (1, 2): 2}


def test_fs_depth_cap():
    with pytest.raises(DepthCapError):
        fs_set(NAT, list(range(1, 18)))
    assert len(fs_set(NAT, list(range(1, 18)), depth_cap=17).sums) == 2 ** 17 - 1


@settings(max_examples=60)
@given(st.lists(st.integers(1, 10 ** 6), min_size=1, max_size=10))
def test_fs_matches_recursive_oracle(xs):
    fs = fs_set(NAT, xs)
    assert len(fs.sums) == 2 ** len(xs) - 1
    assert fs.values == fs_oracle(add, xs)
    for H, v in fs.sums.items():
        assert v == sum(xs[t - 1] for t in H)


def test_fs_big_integers_fall_back_to_exact():
    xs = [2 ** 70, 2 ** 71, 3]
    assert max(fs_set(NAT, xs).values) == 2 ** 70 + 2 ** 71 + 3


def test_fs_noncommutative_fold_order():
    ex = OrdinalLevels(3, 5)
    fs = fs_set(ex, [E(1, 1), E(0, 2), E(1, 3)])
    assert fs.sums[(1, 2, 3)] == E(1, 4)
    assert fs.sums[(2,)] == E(0, 2)


def test_ip_witness_examples(nat, evens):
    assert ip_witness_search(nat, 5, 100) == [1, 2, 4, 8, 16]
    assert ip_witness_search(evens, 4, 100) == [2, 4, 8, 16]
    assert ip_witness_search(sets.finite([1, 2, 3]), 3, 100) is None


def test_ip_witness_over_ex():
    A = sets.parse_setspec({"kind": "complement-finite", "semigroup": "ex(3,4)", "excluded": []})
    xs = ip_witness_search(A, 3, 12)
    assert xs == [E(0, 1), E(0, 2), E(0, 4)] or xs is not None


def test_ip_split_examples():
    a, b = ip_split(NAT, POW2, 2, 3)
    assert a.generators == (2, 8, 32) and b.generators == (4, 16, 64)
    assert a.values.isdisjoint(b.values)
    (only,) = ip_split(NAT, POW2, 1, 4)
    assert only.generators == (2, 4, 8, 16)


def test_ip_split_constant_pool():
    # either succeeds with disjoint FS sets or names the stage where it ran dry
    try:
        systems = ip_split(NAT, [1, 1, 1, 1], 2, 2)
    except PoolExhausted as exc:
        assert exc.stage["round"] == 1 and exc.stage["part"] == 2
    else:
        assert systems[0].values.isdisjoint(systems[1].values)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(1, 60), min_size=6, max_size=14),
    st.integers(2, 3),
    st.integers(1, 3),
)
def test_ip_split_properties(xs, parts, out_len):
    try:
        systems = ip_split(NAT, xs, parts, out_len)
    except PoolExhausted:
        return
    whole = fs_oracle(add, xs)
    for f in systems:
        assert len(f.generators) == out_len
        assert f.values <= whole
    for f, g in itertools.combinations(systems, 2):
        assert f.values.isdisjoint(g.values)
        assert set(f.source_indices).isdisjoint(g.source_indices)


def test_ip_split_over_ex():
    ex = OrdinalLevels(3, 40)
    systems = ip_split(ex, [E(1, i) for i in range(1, 30)], 2, 3)
    assert systems[0].values.isdisjoint(systems[1].values)


def test_ffs_examples():
    sub = ffs_subsystem(NAT, [1] * 8, 3)
    assert sub.derived == (1, 2, 4)
    assert sub.blocks == ((1,), (2, 3), (4, 5, 6, 7))
    assert ffs_subsystem(NAT, [2 ** i for i in range(1, 8)], 4).derived == (2, 4, 8, 16)
    with pytest.raises(TailExhausted):
        ffs_subsystem(NAT, [1] * 5, 10)


def test_check_ffs_examples():
    assert check_ffs(NAT, [1, 2, 4]) is None
    assert check_ffs(NAT, [1, 2, 3]) == ((1, 2), (3,))
    assert check_ffs(NAT, [5]) is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=20, max_size=20), st.integers(1, 5))
def test_ffs_output_properties(xs, out_len):
    try:
        sub = ffs_subsystem(NAT, xs, out_len)
    except TailExhausted:
        return
    assert check_ffs(NAT, sub.derived) is None
    assert ffs_violation(NAT, sub.derived) is None
    for H, K in zip(sub.blocks, sub.blocks[1:]):
        assert max(H) < min(K)
    for H, y in zip(sub.blocks, sub.derived):
        assert y == sum(xs[t - 1] for t in H)


@given(st.lists(st.integers(1, 20), min_size=1, max_size=8))
def test_check_ffs_agrees_with_brute_force(ys):
    assert check_ffs(NAT, ys) == ffs_violation(NAT, ys)


def test_ffs_windowed_path_for_large_values():
    xs = [10 ** 9 + i for i in range(20)]
    sub = ffs_subsystem(NAT, xs, 3)
    assert check_ffs(NAT, sub.derived) is None


def test_ffs_over_ex():
    ex = OrdinalLevels(4, 6)
    sub = ffs_subsystem(ex, [E(0, 1)] * 10 + [E(1, 1)] * 10, 5)
    assert check_ffs(ex, sub.derived) is None


def test_ufs_examples():
    assert ufs_subsystem(NAT, [1] * 20, 3).derived == (1, 2, 4)
    sub = ufs_subsystem(NAT, [2 ** i for i in range(1, 8)], 4)
    assert len(fs_set(NAT, sub.derived).values) == 15
    with pytest.raises(UniquenessViolation) as exc:
        ufs_subsystem(MaxSemigroup(10), list(range(1, 11)), 3)
    assert exc.value.pair == ((1, 2), (2,))


@pytest.mark.parametrize("n", range(1, 9))
def test_ufs_distinct_sums(n):
    sub = ufs_subsystem(NAT, [1] * 300, n)
    assert first_repeated_sum(NAT, sub.derived) is None
    assert len(fs_set(NAT, sub.derived).values) == 2 ** n - 1


def test_ad_family_examples():
    f = ad_nat_family(["(0)", "(1)"])
    assert f.members(0, 4) == [2, 4, 8, 16]
    assert f.members(1, 4) == [3, 7, 15, 31]
    g = ad_nat_family(["0(1)", "(0)"])
    assert set(g.members(0, 10)) & set(g.members(1, 10)) == {2}
    assert len(ad_nat_family(["1(01)"])) == 1
    with pytest.raises(ConfigError):
        ad_nat_family(["0(1)", "01(1)"])
    with pytest.raises(ConfigError):
        ad_nat_family(["0101"])


branch = st.builds(
    lambda p, c: f"{p}({c})",
    st.text("01", max_size=4),
    st.text("01", min_size=1, max_size=3),
)


@given(branch, branch, st.integers(1, 30))
def test_ad_intersection_bounded_by_common_prefix(s1, s2, n):
    try:
        fam = ad_nat_family([s1, s2])
    except ConfigError:
        return  # same sequence
    cp = fam.common_prefix(0, 1)
    shared = set(fam.members(0, n)) & set(fam.members(1, n))
    assert len(shared) == min(cp, n)
    for i in range(2):
        ms = fam.members(i, n)
        assert all(a < b for a, b in zip(ms, ms[1:]))


def test_default_seeds_are_distinct():
    for m in range(1, 9):
        assert len(ad_nat_family(default_branch_seeds(m, 4))) == m


def test_ip_ad_examples():
    fam = ip_ad_family(NAT, [2 ** i for i in range(13)], 2, 4)
    assert fam.systems[0].values.isdisjoint(fam.systems[1].values)
    single = ip_ad_family(NAT, [2 ** i for i in range(13)], 1, 4)
    assert len(single.systems) == 1
    ones = ip_ad_family(NAT, [1] * 70, 2, 3)
    assert ones.systems[0].values.isdisjoint(ones.systems[1].values)


def test_ip_ad_four_branches():
    fam = ip_ad_family(NAT, [2 ** i for i in range(13)], 4, 4)
    assert check_ip_ad(NAT, list(fam.subsystem.derived), fam.index_sets).passed
