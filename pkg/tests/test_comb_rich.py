from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largeness import sets
from largeness.comb_rich import (
    CrSchedule,
    CrWitness,
    SeqFamily,
    bucket_offsets,
    cr_split,
    cr_witness_search,
    enumerate_families,
    h_order,
    lem1_families,
    sl_block,
    translate_class_rep,
)
from largeness.errors import ConfigError
from largeness.verify import check_cr_split


def test_sl_block_examples():
    L = SeqFamily.of([(1, 2, 3), (2, 2, 2)])
    assert sl_block(L, CrWitness(5, (1, 3))) == {9, 9} == {9}
    assert sl_block(L, CrWitness(1, (2,))) == {3}
    L2 = SeqFamily.of([(1, 1), (1, 3)])
    assert sl_block(L2, CrWitness(0, (1, 2))) == {2, 4}
    with pytest.raises(ConfigError):
        sl_block(L, CrWitness(1, (4,)))
    with pytest.raises(ConfigError):
        CrWitness(1, ())


def test_h_order_is_size_then_lex():
    assert h_order(3) == ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))


def test_schedule():
    s = CrSchedule.default(4)
    assert [s.r(n) for n in range(1, 5)] == [3, 5, 9, 17]
    custom = CrSchedule.from_mapping({"1": 2, "2": 3})
    assert custom.r(2) == 3
    with pytest.raises(ConfigError):
        custom.r(3)


fam = st.integers(1, 3).flatmap(
    lambda m: st.lists(st.tuples(*[st.integers(1, 30)] * m), min_size=1, max_size=4)
)


@given(fam, st.integers(0, 50), st.integers(0, 50), st.data())
def test_translation_identity(rows, a, b, data):
    L = SeqFamily.of(rows)
    H = data.draw(st.sampled_from(h_order(L.length)))
    assert sl_block(L.shift(b), CrWitness(a, H)) == sl_block(L, CrWitness(a + len(H) * b, H))


@given(fam, st.integers(0, 40))
def test_class_rep(rows, b):
    L = SeqFamily.of(rows)
    R = translate_class_rep(L)
    assert R.min_entry == 1
    assert translate_class_rep(R) == R
    assert translate_class_rep(L.shift(b)) == R


def test_cr_witness_examples(evens, nat):
    L = SeqFamily.of([(1, 1, 1, 1, 1), (1, 3, 1, 3, 1)])
    assert cr_witness_search(evens, L, 50) == CrWitness(1, (1,))
    assert cr_witness_search(nat, L, 5) == CrWitness(1, (1,))
    odd_gap = SeqFamily.of([(1, 1, 1), (1, 2, 1)])
    assert cr_witness_search(sets.finite([1]), odd_gap, 5) is None


@settings(max_examples=25, deadline=None)
@given(fam)
def test_cr_witness_is_deterministic_and_valid(rows):
    L = SeqFamily.of(rows)
    A = sets.multiples(3)
    w1 = cr_witness_search(A, L, 60)
    assert w1 == cr_witness_search(A, L, 60)
    if w1 is not None:
        assert all(x in A for x in sl_block(L, w1))


def test_enumerate_families_counts():
    s = CrSchedule.from_mapping({"1": 2, "2": 2})
    fams = list(enumerate_families(s, 2, 2))
    assert len(fams) == 4 + 6
    assert fams[0] == SeqFamily.of([(1, 1)])


@pytest.mark.parametrize("mode", ["disjoint", "almost-disjoint"])
def test_bucket_offsets_distinct_and_past_horizon(mode):
    offs = bucket_offsets(4, 7, mode)
    assert len(set(offs)) == 4 and min(offs) >= 7


def test_lem1_buckets_disjoint():
    s = CrSchedule.from_mapping({"1": 2})
    buckets = lem1_families(s, 1, 3, "disjoint", 3)
    assert len({len(b) for b in buckets}) == 1
    seen = [set(b) for b in buckets]
    assert not (seen[0] & seen[1]) and not (seen[1] & seen[2])
    for b in buckets:
        assert {translate_class_rep(L) for L in b} == {translate_class_rep(L) for L in buckets[0]}


def _verify(A, res, parts):
    return check_cr_split(
        A,
        [L.members for L in res.enumerated],
        [(e.family.members, e.a, e.H, e.block, e.part) for e in res.ledger],
        res.parts,
        parts,
    )


@pytest.mark.parametrize("mode", ["disjoint", "almost-disjoint"])
def test_small_cr_split_verifies(nat, mode):
    s = CrSchedule.default(1)
    res = cr_split(nat, s, 1, 2, 2, mode=mode)
    v = _verify(nat, res, 2)
    assert v.passed, v.to_json()
    assert set(res.parts[0]).isdisjoint(res.parts[1])


def test_cr_split_on_evens(evens):
    res = cr_split(evens, CrSchedule.default(1), 1, 2, 3)
    assert _verify(evens, res, 3).passed
    assert all(x % 2 == 0 for p in res.parts for x in p)


def test_cr_split_tamper_detected(nat):
    res = cr_split(nat, CrSchedule.default(1), 1, 2, 2)
    ledger = [(e.family.members, e.a, e.H, e.block, e.part) for e in res.ledger]
    rows, a, H, block, part = ledger[0]
    ledger[0] = (rows, a + 1, H, block, part)
    enumerated = [L.members for L in res.enumerated]
    assert not check_cr_split(nat, enumerated, ledger, res.parts, 2).passed
