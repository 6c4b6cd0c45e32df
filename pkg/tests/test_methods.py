# ============================================================
# 📁 File: tests/test_methods.py
# 📍 Location: asymclust/tests/test_methods.py
# 📝 Description: Reciprocal, nonreciprocal and single linkage
# ============================================================

import numpy as np
import pytest
from hypothesis import given
from scipy.cluster.hierarchy import cophenet, linkage
from scipy.spatial.distance import squareform

from clustering.errors import AsymmetricInputError, LabelMismatchError, UnknownMethodError
from clustering.methods import (
    asymmetry_gap,
    canonical_method,
    nonreciprocal,
    reciprocal,
    run_method,
    single_linkage,
    ultrametric_as_network,
)
from clustering.network import symmetrize_max
from clustering.oracle import check_ultrametric
from tests.strategies import networks


# ============================================================
# 📌 Worked examples
# ============================================================

def test_chain_network_values(chain_net):
    assert nonreciprocal(chain_net).values.tolist() == [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
    assert reciprocal(chain_net).values.tolist() == [[0, 2, 3], [2, 0, 3], [3, 3, 0]]


def test_cycle_network_values(cycle_net):
    off = ~np.eye(3, dtype=bool)
    assert (nonreciprocal(cycle_net).values[off] == 0.5).all()
    assert (reciprocal(cycle_net).values[off] == 1.0).all()


def test_two_nodes_merge_at_the_larger_direction(two_node_net):
    assert reciprocal(two_node_net).distance("p", "q") == 3.0
    assert nonreciprocal(two_node_net).distance("q", "p") == 3.0


def test_outputs_are_read_only(chain_net):
    u = reciprocal(chain_net)
    with pytest.raises(ValueError):
        u.values[0, 1] = 0.1


def test_single_linkage_rejects_asymmetric_input(chain_net):
    with pytest.raises(AsymmetricInputError) as info:
        single_linkage(chain_net)
    assert (info.value.i, info.value.j) == (0, 1)


# ============================================================
# 🏷️ Method names
# ============================================================

@pytest.mark.parametrize(
    "name, expected",
    [
        ("reciprocal", "reciprocal"),
        ("NONRECIPROCAL", "nonreciprocal"),
        ("single-linkage", "single_linkage"),
        ("single_linkage", "single_linkage"),
        (" nr ", "nonreciprocal"),
    ],
)
def test_canonical_method(name, expected):
    assert canonical_method(name) == expected


def test_unknown_method(chain_net):
    with pytest.raises(UnknownMethodError):
        run_method("complete", chain_net)


def test_run_method_dispatch(chain_net):
    assert np.array_equal(run_method("reciprocal", chain_net).values, reciprocal(chain_net).values)


# ============================================================
# 🔁 Properties
# ============================================================

@given(networks())
def test_outputs_are_ultrametrics(net):
    for u in (reciprocal(net), nonreciprocal(net)):
        assert check_ultrametric(u).passed


@given(networks())
def test_nonreciprocal_below_reciprocal(net):
    assert (nonreciprocal(net).values <= reciprocal(net).values).all()


@given(networks(symmetric=True))
def test_methods_coincide_on_symmetric_networks(net):
    sl = single_linkage(net).values
    assert np.array_equal(reciprocal(net).values, sl)
    assert np.array_equal(nonreciprocal(net).values, sl)


@given(networks())
def test_reciprocal_is_single_linkage_of_symmetrized(net):
    assert np.array_equal(reciprocal(net).values, single_linkage(symmetrize_max(net)).values)


@given(networks(min_nodes=2, symmetric=True))
def test_single_linkage_matches_scipy(net):
    heights = cophenet(linkage(squareform(net.dissim, checks=False), method="single"))
    assert np.array_equal(single_linkage(net).values, squareform(heights))


@given(networks())
def test_ultrametrics_are_fixed_points(net):
    for u in (reciprocal(net), nonreciprocal(net)):
        as_net = ultrametric_as_network(u)
        assert np.array_equal(reciprocal(as_net).values, u.values)
        assert np.array_equal(nonreciprocal(as_net).values, u.values)


# ============================================================
# 🧩 Helpers
# ============================================================

def test_reordered(chain_net):
    u = reciprocal(chain_net).reordered(["x3", "x1", "x2"])
    assert u.labels == ("x3", "x1", "x2")
    assert u.distance("x1", "x2") == 2.0
    assert u.values[0].tolist() == [0, 3, 3]


def test_reordered_rejects_other_labels(chain_net):
    with pytest.raises(LabelMismatchError):
        reciprocal(chain_net).reordered(["x1", "x2", "x4"])


def test_distinct_values(chain_net):
    assert reciprocal(chain_net).distinct_values().tolist() == [2.0, 3.0]


def test_asymmetry_gap(chain_net, cycle_net):
    assert asymmetry_gap(chain_net) == {"pairs": 3, "strict_pairs": 2, "max_gap": 1.0}
    assert asymmetry_gap(cycle_net) == {"pairs": 3, "strict_pairs": 3, "max_gap": 0.5}


@given(networks(symmetric=True))
def test_no_gap_on_symmetric_networks(net):
    assert asymmetry_gap(net)["strict_pairs"] == 0
