# ============================================================
# 📁 File: tests/test_dendrogram.py
# 📍 Location: asymclust/tests/test_dendrogram.py
# 📝 Description: Dendrograms, cuts and Newick
# ============================================================

import numpy as np
import pytest
from hypothesis import given, strategies as st

from clustering.dendrogram import (
    Dendrogram,
    MergeEvent,
    cut,
    dendrogram_from_dict,
    dendrogram_to_ultrametric,
    newick_label,
    to_newick,
    ultrametric_to_dendrogram,
    validate_dendrogram,
)
from clustering.errors import InvalidDendrogramError, NotUltrametricError, ParseError
from clustering.methods import UltrametricMatrix, nonreciprocal, reciprocal
from tests.strategies import networks


def ultrametric(labels, rows) -> UltrametricMatrix:
    values = np.array(rows, dtype=float)
    values.setflags(write=False)
    return UltrametricMatrix(labels=tuple(labels), values=values)


# ============================================================
# 🔄 Ultrametric → Dendrogram
# ============================================================

def test_chain_reciprocal_tree(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert tree.events == (
        MergeEvent(resolution=2.0, merged=(0, 1), new_cluster=3),
        MergeEvent(resolution=3.0, merged=(3, 2), new_cluster=4),
    )
    assert to_newick(tree) == "((x1:2,x2:2):1,x3:3);"


def test_ties_give_one_multiway_merge(chain_net):
    tree = ultrametric_to_dendrogram(nonreciprocal(chain_net))
    assert tree.events == (MergeEvent(resolution=2.0, merged=(0, 1, 2), new_cluster=3),)
    assert to_newick(tree) == "(x1:2,x2:2,x3:2);"


def test_disjoint_groups_at_one_resolution():
    u = ultrametric(
        ["a", "b", "c", "d"],
        [[0, 1, 2, 2], [1, 0, 2, 2], [2, 2, 0, 1], [2, 2, 1, 0]],
    )
    tree = ultrametric_to_dendrogram(u)
    assert [e.to_dict() for e in tree.events] == [
        {"resolution": 1, "merged": [0, 1], "new": 4},
        {"resolution": 1, "merged": [2, 3], "new": 5},
        {"resolution": 2, "merged": [4, 5], "new": 6},
    ]
    assert validate_dendrogram(tree).passed
    assert to_newick(tree) == "((a:1,b:1):1,(c:1,d:1):1);"


def test_events_ordered_by_least_member():
    u = ultrametric(
        ["a", "b", "c", "d"],
        [[0, 2, 1, 2], [2, 0, 2, 1], [1, 2, 0, 2], [2, 1, 2, 0]],
    )
    tree = ultrametric_to_dendrogram(u)
    assert tree.events[0].merged == (0, 2)
    assert tree.events[1].merged == (1, 3)
    assert to_newick(tree) == "((a:1,c:1):1,(b:1,d:1):1);"


def test_single_node_tree():
    tree = ultrametric_to_dendrogram(ultrametric(["x"], [[0]]))
    assert tree.events == ()
    assert validate_dendrogram(tree).passed
    assert to_newick(tree) == "x;"
    assert dendrogram_to_ultrametric(tree).values.tolist() == [[0.0]]


def test_rejects_non_ultrametric():
    with pytest.raises(NotUltrametricError) as info:
        ultrametric_to_dendrogram(ultrametric(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    assert info.value.counterexample["i"] == 0
    assert info.value.counterexample["j"] == 2
    assert info.value.counterexample["k"] == 1


@given(networks(max_nodes=8))
def test_round_trip_is_identity(net):
    for u in (reciprocal(net), nonreciprocal(net)):
        tree = ultrametric_to_dendrogram(u)
        assert validate_dendrogram(tree).passed
        assert np.array_equal(dendrogram_to_ultrametric(tree).values, u.values)
        assert tree.resolutions() == u.distinct_values().tolist()


# ============================================================
# ✅ Validation
# ============================================================

def test_unfinished_tree_fails_boundary_condition():
    report = validate_dendrogram(Dendrogram(labels=("a", "b"), events=()))
    assert not report.passed
    assert report.counterexample["property"] == "D1"
    assert report.details == {"D1": False, "D2": True, "resolution": True}


def test_merging_a_missing_cluster_fails():
    tree = Dendrogram(
        labels=("a", "b", "c"),
        events=(
            MergeEvent(1.0, (0, 1), 3),
            MergeEvent(2.0, (0, 2), 4),
        ),
    )
    report = validate_dendrogram(tree)
    assert not report.passed
    assert report.counterexample == {
        "property": "D2",
        "event": 1,
        "reason": "cluster 0 is not present below this resolution",
    }


def test_merging_a_cluster_with_itself_fails():
    tree = Dendrogram(labels=("a", "b"), events=(MergeEvent(1.0, (0, 0, 1), 2),))
    report = validate_dendrogram(tree)
    assert not report.passed
    assert report.counterexample == {
        "property": "D2",
        "event": 0,
        "reason": "an event lists the same cluster more than once",
    }
    with pytest.raises(InvalidDendrogramError):
        dendrogram_to_ultrametric(tree)
    with pytest.raises(InvalidDendrogramError):
        cut(tree, 1.0)
    with pytest.raises(InvalidDendrogramError):
        to_newick(tree)


@pytest.mark.parametrize("resolution", [0.0, -1.0, float("inf")])
def test_bad_resolution_fails(resolution):
    tree = Dendrogram(labels=("a", "b"), events=(MergeEvent(resolution, (0, 1), 2),))
    report = validate_dendrogram(tree)
    assert report.counterexample["property"] == "resolution"


def test_decreasing_resolutions_fail():
    tree = Dendrogram(
        labels=("a", "b", "c"),
        events=(MergeEvent(2.0, (0, 1), 3), MergeEvent(1.0, (3, 2), 4)),
    )
    assert validate_dendrogram(tree).counterexample["property"] == "resolution"


def test_invalid_tree_cannot_be_converted():
    with pytest.raises(InvalidDendrogramError):
        dendrogram_to_ultrametric(Dendrogram(labels=("a", "b"), events=()))
    with pytest.raises(InvalidDendrogramError):
        to_newick(Dendrogram(labels=("a", "b"), events=()))


# ============================================================
# ✂️ Cuts
# ============================================================

def test_cut_chain_tree(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert cut(tree, 2.5).blocks == (("x1", "x2"), ("x3",))
    assert cut(tree, 2.5).to_dict() == {"resolution": 2.5, "blocks": [["x1", "x2"], ["x3"]]}
    assert cut(tree, 0).blocks == (("x1",), ("x2",), ("x3",))
    assert cut(tree, 3).blocks == (("x1", "x2", "x3"),)
    assert cut(tree, 1e9).blocks == (("x1", "x2", "x3"),)


def test_cut_rejects_negative_resolution(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    with pytest.raises(ValueError):
        cut(tree, -0.1)


@given(networks(max_nodes=7), st.floats(0, 10), st.floats(0, 10))
def test_cuts_are_nested(net, a, b):
    small, large = sorted((a, b))
    tree = ultrametric_to_dendrogram(reciprocal(net))
    finer, coarser = cut(tree, small), cut(tree, large)
    assert finer.refines(coarser)
    for block in finer.blocks:
        assert coarser.together(block[0], block[-1])


# ============================================================
# 🌲 Newick & documents
# ============================================================

@pytest.mark.parametrize(
    "label, expected",
    [
        ("x1", "x1"),
        ("two words", "'two words'"),
        ("a:b", "'a:b'"),
        ("o'neil", "'o''neil'"),
    ],
)
def test_newick_label_quoting(label, expected):
    assert newick_label(label) == expected


def test_non_integral_branch_lengths():
    u = ultrametric(["a", "b", "c"], [[0, 0.5, 1.25], [0.5, 0, 1.25], [1.25, 1.25, 0]])
    assert to_newick(ultrametric_to_dendrogram(u)) == "((a:0.5,b:0.5):0.75,c:1.25);"


def test_tree_document_round_trip(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert dendrogram_from_dict(tree.to_dict()) == tree


def test_malformed_tree_document():
    with pytest.raises(ParseError):
        dendrogram_from_dict({"labels": ["a"], "events": [{"resolution": 1}]})


def test_members(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert tree.members(0) == (0,)
    assert tree.members(3) == (0, 1)
    assert tree.members(4) == (0, 1, 2)
    with pytest.raises(KeyError):
        tree.members(5)
