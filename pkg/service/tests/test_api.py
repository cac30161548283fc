# service/tests/test_api.py
from fastapi.testclient import TestClient

from service.app.main import app
from yclaw.formats import emit_graph6
from yclaw.graph import Graph

client = TestClient(app)


# ---------- helpers ----------


def g6(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


# ---------- tests ----------


def test_health() -> None:
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"ok": True}


def test_check_certifies_each_component() -> None:
    g = Graph.from_edges(10, [*Graph.subdivided_claw().edges, (7, 8), (8, 9)])
    r = client.post("/check", json={"graph6": g6(g)})
    assert r.status_code == 200
    first, second = r.json()
    assert first["verdict"] == "contains-Y"
    assert "certificate" not in first
    assert second["component"] == [7, 8, 9]
    assert second["certificate"]["type"] == "kernel"


def test_check_rejects_malformed_graph6() -> None:
    r = client.post("/check", json={"graph6": "Bx"})
    assert r.status_code == 400
    assert "offset" in r.json()["detail"]


def test_check_rejects_non_ascii_graph6() -> None:
    r = client.post("/check", json={"graph6": "Bé"})
    assert r.status_code == 400
    assert "offset 1" in r.json()["detail"]


def test_check_requires_graph6_field() -> None:
    assert client.post("/check", json={}).status_code == 422


def test_pathdecomp() -> None:
    r = client.post("/pathdecomp", json={"graph6": g6(Graph.cycle(8))})
    assert r.status_code == 200
    body = r.json()
    assert body["certificate"]["type"] == "necklace"
    assert body["width"] <= 3
    assert len(body["bags"]) >= 8


def test_pathdecomp_refuses_y_and_disconnected_graphs() -> None:
    assert client.post("/pathdecomp", json={"graph6": g6(Graph.subdivided_claw())}).status_code == 422
    assert client.post("/pathdecomp", json={"graph6": g6(Graph.empty(3))}).status_code == 422


def test_delta() -> None:
    r = client.get("/delta")
    assert r.status_code == 200
    assert abs(r.json()["delta"] - 2.25159) < 1e-4
