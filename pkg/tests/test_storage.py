# ============================================================
# 📁 File: tests/test_storage.py
# 📍 Location: asymclust/tests/test_storage.py
# 📝 Description: File loading and export
# ============================================================

import json

import pytest

from clustering.dendrogram import Dendrogram, cut, ultrametric_to_dendrogram
from clustering.errors import (
    DuplicateLabelError,
    NegativeEntryError,
    NotUltrametricError,
    ParseError,
    UnsupportedFormatError,
)
from clustering.methods import reciprocal
from clustering.oracle import VerificationReport
from storage import (
    export,
    format_for_path,
    load_clustering,
    load_edge_list,
    load_network,
    write_export,
)


# ============================================================
# 📂 Loading
# ============================================================

def test_load_json_network(chain_json, chain_net):
    net = load_network(chain_json)
    assert net.labels == chain_net.labels
    assert net.dissim.tolist() == chain_net.dissim.tolist()


def test_load_csv_network(cycle_csv):
    net = load_network(cycle_csv)
    assert net.entry("x1", "x2") == 0.5
    assert net.entry("x2", "x1") == 1.0


def test_negative_entry_reports_line(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n0,1\n-1,0\n", encoding="utf-8")
    with pytest.raises(NegativeEntryError) as info:
        load_network(path)
    assert info.value.line == 3
    assert str(info.value).startswith("line 3:")


def test_blank_lines_keep_file_line_numbers(tmp_path):
    path = tmp_path / "gappy.csv"
    path.write_text("a,b\n\n0,1\n\n-1,0\n", encoding="utf-8")
    with pytest.raises(NegativeEntryError) as info:
        load_network(path)
    assert info.value.line == 5


@pytest.mark.parametrize(
    "text, line",
    [
        ("a,b\n0,x\n1,0\n", 2),
        ("a,b\n0,1,2\n1,0\n", 2),
        ("a,b\n0,1\n", 2),
        ("a,\n0,1\n1,0\n", 1),
    ],
)
def test_malformed_csv(tmp_path, text, line):
    path = tmp_path / "bad.csv"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ParseError) as info:
        load_network(path)
    assert info.value.line == line


def test_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"labels": ["a"]}', encoding="utf-8")
    with pytest.raises(ParseError):
        load_network(path)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_network(tmp_path / "nowhere.csv")


def test_load_edge_list(messages_csv):
    edges = load_edge_list(messages_csv)
    assert ("ann", "bob", 6) in edges.records
    assert edges.labels() == ["ann", "bob", "cat", "dan"]


@pytest.mark.parametrize(
    "text, line",
    [
        ("source,target\na,b\n", 1),
        ("source,target,count\na,b,2\na,c,zero\n", 3),
        ("source,target,count\na,b,0\n", 2),
        ("source,target,count\n,b,1\n", 2),
        ("source,target,count\na,b,1\na,c," + "9" * 400 + "\n", 3),
    ],
)
def test_malformed_edge_list(tmp_path, text, line):
    path = tmp_path / "edges.csv"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ParseError) as info:
        load_edge_list(path)
    assert info.value.line == line


def test_load_clustering_tree_and_matrix(tmp_path, chain_net):
    u = reciprocal(chain_net)
    tree = ultrametric_to_dendrogram(u)
    tree_path = tmp_path / "tree.json"
    matrix_path = tmp_path / "u.csv"
    write_export(tree, tree_path)
    write_export(u, matrix_path)

    assert load_clustering(tree_path) == tree
    loaded = load_clustering(matrix_path)
    assert loaded.labels == u.labels
    assert loaded.values.tolist() == u.values.tolist()


def test_load_clustering_rejects_non_ultrametric(tmp_path):
    path = tmp_path / "line.csv"
    path.write_text("a,b,c\n0,1,2\n1,0,1\n2,1,0\n", encoding="utf-8")
    with pytest.raises(NotUltrametricError):
        load_clustering(path)


def test_load_clustering_rejects_duplicate_labels(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text("a,a\n0,1\n1,0\n", encoding="utf-8")
    with pytest.raises(DuplicateLabelError):
        load_clustering(path)


# ============================================================
# 📤 Export
# ============================================================

def test_ultrametric_csv(two_node_net):
    assert export(reciprocal(two_node_net), "csv") == "p,q\n0,3\n3,0\n"


def test_decimal_values_round_trip(cycle_csv):
    assert export(load_network(cycle_csv), "csv") == "x1,x2,x3\n0,0.5,1\n1,0,0.5\n0.5,1,0\n"


def test_tree_newick(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert export(tree, "newick") == "((x1:2,x2:2):1,x3:3);\n"


def test_tree_csv_lists_members(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert export(tree, "csv") == (
        "resolution,merged,new,members\n"
        "2,0 1,3,x1 x2\n"
        "3,3 2,4,x1 x2 x3\n"
    )


def test_partition_json(chain_net):
    partition = cut(ultrametric_to_dendrogram(reciprocal(chain_net)), 2.5)
    text = export(partition, "json")
    assert json.loads(text) == {"resolution": 2.5, "blocks": [["x1", "x2"], ["x3"]]}
    assert text.index('"blocks"') < text.index('"resolution"')


def test_report_json():
    report = VerificationReport.ok("ultrametric", triples=8)
    assert json.loads(export(report, "json"))["details"] == {"triples": 8}


def test_tree_json_uses_integers_for_integral_values(chain_net):
    tree = ultrametric_to_dendrogram(reciprocal(chain_net))
    assert '"resolution": 2\n' in export(tree, "json")


def test_json_refuses_non_finite_numbers(chain_net):
    partition = cut(ultrametric_to_dendrogram(reciprocal(chain_net)), float("inf"))
    with pytest.raises(ValueError):
        export(partition, "json")


@pytest.mark.parametrize(
    "obj, fmt",
    [
        (VerificationReport.ok("x"), "csv"),
        (VerificationReport.ok("x"), "newick"),
        (Dendrogram(labels=("a",), events=()), "yaml"),
        (object(), "json"),
    ],
)
def test_unsupported_exports(obj, fmt):
    with pytest.raises(UnsupportedFormatError):
        export(obj, fmt)


@pytest.mark.parametrize(
    "path, fmt",
    [("out.csv", "csv"), ("out.JSON", "json"), ("tree.nwk", "newick"), ("tree.newick", "newick")],
)
def test_format_for_path(path, fmt):
    assert format_for_path(path) == fmt


def test_format_for_unknown_suffix():
    with pytest.raises(UnsupportedFormatError):
        format_for_path("out.txt")
