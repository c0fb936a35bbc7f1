from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largeness import sets
from largeness.errors import DepthCapError, SetSpecError
from largeness.semigroups import ExElement as E


def test_residues_example():
    A = sets.parse_setspec('{"kind":"residues","mod":6,"residues":[0]}')
    assert A.members(30) == [6, 12, 18, 24, 30]
    assert 0 not in A


def test_fs_example():
    A = sets.parse_setspec({"kind": "fs", "generators": [2, 4, 8]})
    assert A.members(20) == [2, 4, 6, 8, 10, 12, 14]


def test_difference_example():
    A = sets.parse_setspec(
        {"kind": "difference", "of": [{"kind": "residues", "mod": 2, "residues": [0]}, {"kind": "list", "values": [2, 4]}]}
    )
    assert A.members(10) == [6, 8, 10]


def test_ex_sets():
    A = sets.parse_setspec({"kind": "list", "semigroup": "ex(2,3)", "values": [[0, 1], [1, 2]]})
    assert E(1, 2) in A and E(0, 2) not in A
    assert A.members(6) == [E(0, 1), E(1, 2)]


@pytest.mark.parametrize(
    "doc, path",
    [
        ({"kind": "nope"}, "$.kind"),
        ({"kind": "residues", "residues": [0]}, "$.mod"),
        ({"kind": "union", "of": [{"kind": "list", "values": [1]}, {"kind": "residues", "mod": 0, "residues": []}]}, "$.of[1].mod"),
        ({"kind": "interval-union", "intervals": [[5, 1]]}, "$.intervals[0]"),
        ({"kind": "list", "values": [1, -3]}, "$.values[1]"),
        ({"kind": "residues", "semigroup": "ex(2,2)", "mod": 2, "residues": [0]}, "$.kind"),
        ([], "$"),
    ],
)
def test_schema_errors_carry_paths(doc, path):
    with pytest.raises(SetSpecError) as exc:
        sets.parse_setspec(doc)
    assert exc.value.path == path


def test_invalid_json():
    with pytest.raises(SetSpecError):
        sets.parse_setspec("{")


def test_fs_depth_cap():
    with pytest.raises(SetSpecError):
        sets.parse_setspec({"kind": "fs", "generators": list(range(1, 18))})
    with pytest.raises(DepthCapError):
        sets.fs_set_spec(list(range(1, 18))).mask(10)


leaf = st.one_of(
    st.builds(lambda v: {"kind": "list", "values": v}, st.lists(st.integers(1, 300), max_size=8)),
    st.builds(
        lambda m, r: {"kind": "residues", "mod": m, "residues": r},
        st.integers(1, 12),
        st.lists(st.integers(0, 11), max_size=4),
    ),
    st.builds(lambda g: {"kind": "fs", "generators": g}, st.lists(st.integers(1, 50), min_size=1, max_size=6)),
    st.builds(
        lambda iv: {"kind": "interval-union", "intervals": [[a, a + w] for a, w in iv]},
        st.lists(st.tuples(st.integers(1, 9000), st.integers(0, 500)), max_size=3),
    ),
    st.builds(lambda e: {"kind": "complement-finite", "excluded": e}, st.lists(st.integers(1, 200), max_size=6)),
)
docs = st.recursive(
    leaf,
    lambda kids: st.builds(
        lambda k, of: {"kind": k, "of": of},
        st.sampled_from(["union", "intersect", "difference"]),
        st.lists(kids, min_size=1, max_size=3),
    ),
    max_leaves=6,
)


@settings(max_examples=40, deadline=None)
@given(docs)
def test_roundtrip_membership_on_probe(doc):
    A = sets.parse_setspec(doc)
    B = sets.parse_setspec(json.dumps(A.to_json()))
    probe = range(1, 10_001)
    assert [x in A for x in probe] == [x in B for x in probe]
    mask = A.mask(10_000)
    assert mask[1:].tolist() == [x in A for x in probe]
