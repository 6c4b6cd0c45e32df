# ============================================================
# 📁 File: tests/conftest.py
# 📍 Location: asymclust/tests/conftest.py
# 📝 Description: Shared fixtures
# ============================================================

import json

import pytest

from clustering.network import Network, new_network
from utils.logger import LoggerFactory


@pytest.fixture(autouse=True)
def quiet_logging():
    yield
    LoggerFactory.reset()


LABELS = ["x1", "x2", "x3"]

# A(x1,x2)=1 A(x2,x1)=2 A(x2,x3)=2 A(x3,x2)=3 A(x3,x1)=2 A(x1,x3)=3
CHAIN_MATRIX = [
    [0.0, 1.0, 3.0],
    [2.0, 0.0, 2.0],
    [2.0, 3.0, 0.0],
]

# x1 → x2 → x3 → x1 costs 0.5, the reverse direction costs 1
CYCLE_MATRIX = [
    [0.0, 0.5, 1.0],
    [1.0, 0.0, 0.5],
    [0.5, 1.0, 0.0],
]


@pytest.fixture
def chain_net() -> Network:
    return new_network(LABELS, CHAIN_MATRIX)


@pytest.fixture
def cycle_net() -> Network:
    return new_network(LABELS, CYCLE_MATRIX)


@pytest.fixture
def two_node_net() -> Network:
    return new_network(["p", "q"], [[0.0, 3.0], [1.0, 0.0]])


@pytest.fixture
def chain_json(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({"labels": LABELS, "matrix": CHAIN_MATRIX}), encoding="utf-8")
    return path


@pytest.fixture
def cycle_csv(tmp_path):
    path = tmp_path / "cycle.csv"
    path.write_text("x1,x2,x3\n0,0.5,1\n1,0,0.5\n0.5,1,0\n", encoding="utf-8")
    return path


@pytest.fixture
def two_node_csv(tmp_path):
    path = tmp_path / "two_node.csv"
    path.write_text("p,q\n0,3\n1,0\n", encoding="utf-8")
    return path


@pytest.fixture
def messages_csv(tmp_path):
    path = tmp_path / "messages.csv"
    path.write_text(
        "source,target,count\n"
        "ann,bob,4\n"
        "bob,ann,1\n"
        "bob,cat,2\n"
        "cat,ann,3\n"
        "ann,bob,2\n"
        "dan,ann,1\n",
        encoding="utf-8",
    )
    return path
