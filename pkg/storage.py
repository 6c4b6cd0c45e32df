# ============================================================
# 📁 File: storage.py
# 📍 Location: asymclust/storage.py
# 📝 Description: Matrix / edge-list loading and canonical export
# ============================================================

"""
File boundary of the toolkit.

Loaders turn CSV or JSON files into validated library values, attaching
the offending line to every parse or entry error. export() renders any
result object deterministically: labels in canonical order, JSON keys
sorted, numbers as the shortest round-trip decimal.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, List, Tuple, Union

import numpy as np

from clustering.compare import ComparisonReport
from clustering.dendrogram import (
    Dendrogram,
    Partition,
    dendrogram_from_dict,
    to_newick,
)
from clustering.errors import (
    DuplicateLabelError,
    EmptyNetworkError,
    EntryError,
    NetworkError,
    NotUltrametricError,
    ParseError,
    UnsupportedFormatError,
)
from clustering.ingest import EdgeList, new_edge_list, representable_count
from clustering.methods import UltrametricMatrix
from clustering.network import Network, as_square_matrix, new_network
from clustering.oracle import VerificationReport, check_ultrametric
from clustering.trust import TrustReport
from utils.constants import FORMAT_SUFFIXES, Formats, format_number, json_number
from utils.logger import app_logger


PathLike = Union[str, Path]

EDGE_LIST_FIELDS = ("source", "target", "count")


# ============================================================
# 📂 Reading
# ============================================================

def _read_text(path: PathLike) -> str:
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        return fh.read()


def _parse_number(field: str, line: int) -> float:
    try:
        return float(field)
    except ValueError:
        raise ParseError(f"not a number: {field.strip()!r}", line=line) from None


def _matrix_from_csv(text: str) -> Tuple[List[str], List[List[float]], List[int]]:
    """Header row of labels, then one numeric row per label; also returns row line numbers."""
    rows = [
        (line, row)
        for line, row in enumerate(csv.reader(io.StringIO(text)), start=1)
        if any(field.strip() for field in row)
    ]
    if not rows:
        raise EmptyNetworkError()

    header_line, header = rows[0]
    labels = [label.strip() for label in header]
    if any(not label for label in labels):
        raise ParseError("empty label in header row", line=header_line)

    matrix: List[List[float]] = []
    for line, row in rows[1:]:
        if len(row) != len(labels):
            raise ParseError(f"expected {len(labels)} fields, found {len(row)}", line=line)
        matrix.append([_parse_number(field, line) for field in row])

    if len(matrix) != len(labels):
        last_line = rows[-1][0]
        raise ParseError(f"expected {len(labels)} matrix rows, found {len(matrix)}", line=last_line)
    return labels, matrix, [line for line, _ in rows[1:]]


def _matrix_from_json(text: str) -> Tuple[List[str], Any]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    if not isinstance(payload, dict) or "labels" not in payload or "matrix" not in payload:
        raise ParseError('expected a JSON object with "labels" and "matrix"')
    return payload["labels"], payload["matrix"]


def _is_json(path: PathLike) -> bool:
    return Path(path).suffix.lower() == ".json"


def load_network(path: PathLike) -> Network:
    """
    Read a dissimilarity matrix from CSV or JSON.

    CSV: row 1 lists the labels, rows 2..n+1 hold n numbers each.
    JSON: {"labels": [...], "matrix": [[...], ...]}.

    Raises:
        OSError: the file cannot be read
        ParseError, NetworkError: with `line` set for CSV input
    """
    text = _read_text(path)
    if _is_json(path):
        labels, matrix = _matrix_from_json(text)
        return new_network(labels, matrix)

    labels, matrix, lines = _matrix_from_csv(text)
    try:
        net = new_network(labels, matrix)
    except EntryError as e:
        e.line = lines[e.i]
        raise
    app_logger.debug(f"📂 Loaded {net.n}-node network from {path}")
    return net


def load_edge_list(path: PathLike) -> EdgeList:
    """
    Read a `source,target,count` CSV with header.

    Raises:
        ParseError: missing columns or a count that is not a positive integer
    """
    reader = csv.DictReader(io.StringIO(_read_text(path)))
    fields = [name.strip().lower() for name in (reader.fieldnames or [])]
    missing = [name for name in EDGE_LIST_FIELDS if name not in fields]
    if missing:
        raise ParseError(f"edge list header lacks {', '.join(missing)}", line=1)
    reader.fieldnames = fields

    records = []
    for row in reader:
        line = reader.line_num
        if not any((value or "").strip() for value in row.values() if isinstance(value, str)):
            continue
        raw = (row.get("count") or "").strip()
        try:
            count = int(raw)
        except ValueError:
            raise ParseError(f"count must be an integer, got {raw!r}", line=line) from None
        if count <= 0:
            raise ParseError(f"count must be positive, got {count}", line=line)
        if not representable_count(count):
            raise ParseError(f"count {raw[:20]}... is too large", line=line)
        source = (row.get("source") or "").strip()
        target = (row.get("target") or "").strip()
        if not source or not target:
            raise ParseError("source and target must be non-empty", line=line)
        records.append((source, target, count))

    edges = new_edge_list(records)
    app_logger.debug(f"📂 Loaded {len(edges.records)} edge records from {path}")
    return edges


def load_clustering(path: PathLike) -> Union[UltrametricMatrix, Dendrogram]:
    """
    Read a clustering for `compare`: a tree document (JSON with "events")
    or an ultrametric matrix (CSV or JSON).

    Raises:
        ParseError, NotUltrametricError
    """
    text = _read_text(path)
    if _is_json(path):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        if isinstance(payload, dict) and "events" in payload:
            return dendrogram_from_dict(payload)
        labels, matrix = _matrix_from_json(text)
    else:
        labels, matrix, _ = _matrix_from_csv(text)

    values = as_square_matrix(matrix)
    labels = tuple(str(label) for label in labels)
    if values.shape[0] != len(labels):
        raise NetworkError(f"matrix dimension {values.shape[0]} does not match {len(labels)} labels")
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        raise DuplicateLabelError(duplicates[0])

    report = check_ultrametric(values)
    if not report.passed:
        raise NotUltrametricError(report.counterexample)
    values.setflags(write=False)
    return UltrametricMatrix(labels=labels, values=values)


# ============================================================
# 📤 Export
# ============================================================

def _jsonable(value: Any) -> Any:
    """Recursively swap floats for json_number and tuples for lists."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return json_number(value)
    if hasattr(value, "to_dict"):
        return _jsonable(value.to_dict())
    return value


def to_json(obj: Any) -> str:
    """
    Raises:
        ValueError: obj holds a non-finite number
    """
    text = json.dumps(
        _jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False
    )
    return text + "\n"


def _csv_text(rows: Iterable[Iterable[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _matrix_rows(labels, values: np.ndarray):
    yield list(labels)
    for row in values:
        yield [format_number(v) for v in row]


def to_csv(obj: Any) -> str:
    """
    Raises:
        UnsupportedFormatError: obj has no tabular form
    """
    if isinstance(obj, UltrametricMatrix):
        return _csv_text(_matrix_rows(obj.labels, obj.values))
    if isinstance(obj, Network):
        return _csv_text(_matrix_rows(obj.labels, obj.dissim))
    if isinstance(obj, Partition):
        rows = [["label", "block"]]
        rows += [[label, b] for b, block in enumerate(obj.blocks) for label in block]
        return _csv_text(rows)
    if isinstance(obj, Dendrogram):
        rows = [["resolution", "merged", "new", "members"]]
        rows += [
            [
                format_number(e.resolution),
                " ".join(str(c) for c in e.merged),
                e.new_cluster,
                " ".join(obj.labels[i] for i in obj.members(e.new_cluster)),
            ]
            for e in obj.events
        ]
        return _csv_text(rows)
    if isinstance(obj, TrustReport):
        rows = [["first", "second", "nonreciprocal", "reciprocal", "status"]]
        rows += [
            [p.first, p.second, format_number(p.lower), format_number(p.upper), p.status.value]
            for p in obj.pairs
        ]
        return _csv_text(rows)
    if isinstance(obj, ComparisonReport):
        rows = [["resolution", "identical", "rand_index"]]
        rows += [
            [format_number(a.resolution), str(a.identical).lower(), format_number(a.rand_index)]
            for a in obj.agreements
        ]
        return _csv_text(rows)
    raise UnsupportedFormatError(Formats.CSV, type(obj).__name__)


EXPORTABLE = (
    Network,
    UltrametricMatrix,
    Dendrogram,
    Partition,
    VerificationReport,
    TrustReport,
    ComparisonReport,
)


def export(obj: Any, fmt: str) -> str:
    """
    Canonical text form of a result object.

    Args:
        obj: Any EXPORTABLE value; plain dicts and lists are JSON-only
        fmt: csv, json or newick (Dendrogram only)

    Returns:
        The serialised text, newline-terminated

    Raises:
        UnsupportedFormatError
    """
    kind = type(obj).__name__
    if fmt == Formats.JSON:
        if not isinstance(obj, (dict, list, tuple) + EXPORTABLE):
            raise UnsupportedFormatError(fmt, kind)
        return to_json(obj)
    if fmt == Formats.CSV:
        return to_csv(obj)
    if fmt == Formats.NEWICK:
        if not isinstance(obj, Dendrogram):
            raise UnsupportedFormatError(fmt, kind)
        return to_newick(obj) + "\n"
    raise UnsupportedFormatError(fmt, kind)


def format_for_path(path: PathLike) -> str:
    """Output format implied by a file suffix."""
    suffix = Path(path).suffix.lower()
    if suffix not in FORMAT_SUFFIXES:
        raise UnsupportedFormatError(suffix or "(no suffix)", str(path))
    return FORMAT_SUFFIXES[suffix]


def write_export(obj: Any, path: PathLike, fmt: str = "") -> str:
    """Export obj to path (format from the suffix unless given); returns the text."""
    text = export(obj, fmt or format_for_path(path))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    app_logger.info(f"💾 Wrote {path}")
    return text
