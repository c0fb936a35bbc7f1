from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from largeness.errors import ConfigError, IdxOverflowError
from largeness.semigroups import (
    IDX_MAX,
    NAT,
    ExElement as E,
    LeftProjection,
    MaxSemigroup,
    OrdinalLevels,
    cancellativity_profile,
    check_laws,
    semigroup_from_key,
    sg_add,
    sg_solve_left,
)

EX = OrdinalLevels(4, 6)
ex_elems = st.builds(E, st.integers(0, 3), st.integers(1, 6))


def test_add_examples():
    assert sg_add(EX, E(1, 3), E(2, 5)) == E(2, 5)
    assert sg_add(EX, E(2, 3), E(2, 5)) == E(2, 8)
    assert sg_add(NAT, 2, 3) == 5


def test_idx_overflow_is_reported():
    with pytest.raises(IdxOverflowError):
        EX.add(E(0, IDX_MAX), E(0, 1))


def test_solve_left_examples():
    assert sg_solve_left(NAT, 2, 5).elements == {3}
    assert not sg_solve_left(NAT, 2, 5).truncated
    assert sg_solve_left(NAT, 5, 2).elements == set()
    assert sg_solve_left(EX, E(1, 3), E(2, 7)).elements == {E(2, 7)}
    diag = sg_solve_left(EX, E(2, 4), E(2, 4))
    assert diag.truncated
    assert diag.elements == {E(g, k) for g in range(2) for k in range(1, 7)}


def test_solve_left_remaining_cases():
    assert sg_solve_left(EX, E(2, 1), E(1, 1)).elements == set()
    assert sg_solve_left(EX, E(2, 2), E(2, 5)).elements == {E(2, 3)}
    assert sg_solve_left(EX, E(2, 5), E(2, 2)).elements == set()
    level0 = sg_solve_left(EX, E(0, 3), E(0, 3))
    assert level0.elements == set() and not level0.truncated


@given(ex_elems, ex_elems)
def test_ex_commutative(x, y):
    assert EX.add(x, y) == EX.add(y, x)


@given(ex_elems, ex_elems, ex_elems)
def test_ex_associative(x, y, z):
    assert EX.add(EX.add(x, y), z) == EX.add(x, EX.add(y, z))


@given(ex_elems)
def test_ex_no_idempotent(x):
    assert EX.add(x, x) != x


@given(ex_elems, ex_elems)
def test_solve_left_matches_filtration(a, b):
    sol = EX.solve_left(a, b)
    brute = {x for x in EX.enumerate(EX.horizon()) if EX.add(a, x) == b}
    assert sol.elements == brute
    if not sol.truncated:
        assert all(EX.add(a, x) == b for x in sol.elements)


def test_check_laws_ex_all_pass():
    reports = check_laws(EX, 24)
    assert [r.law for r in reports] == ["commutative", "associative", "no-idempotent"]
    assert all(r.holds and not r.violations for r in reports)
    assert reports[1].checked == 13824


def test_check_laws_kernel_matches_generic():
    a = check_laws(EX, 24, use_kernel=True)
    b = check_laws(EX, 24, use_kernel=False)
    assert [(r.law, r.violation_count) for r in a] == [(r.law, r.violation_count) for r in b]


def test_check_laws_nat_and_left_projection():
    assert all(r.holds for r in check_laws(NAT, 20))
    comm = check_laws(LeftProjection(5), 5)[0]
    assert not comm.holds
    assert comm.violations[0] == (1, 2)


def test_cancel_profiles():
    nat = cancellativity_profile(NAT, 10)
    assert nat.max_finite_size <= 1 and nat.classification == "left-cancellative"
    ex = cancellativity_profile(EX, 24)
    assert set(ex.histogram) <= {0, 1}
    assert all(a == b and a.level > 0 for a, b in ex.truncated_pairs)
    assert len(ex.truncated_pairs) == 18
    assert MaxSemigroup(10).solve_left(10, 10).elements == set(range(1, 11))


def test_semigroup_keys():
    assert semigroup_from_key("nat") is NAT
    assert semigroup_from_key("ex(4,6)").name == "ex(4,6)"
    assert semigroup_from_key("max(10)").n == 10
    with pytest.raises(ConfigError):
        semigroup_from_key("ex(4)")
    with pytest.raises(ConfigError):
        semigroup_from_key("group")


def test_encode_roundtrip():
    assert EX.decode(EX.encode(E(3, 2))) == E(3, 2)
    with pytest.raises(ConfigError):
        NAT.decode(0)
